//! Horospherical front-end: colors and valuation cone from root data.
//!
//! For a horospherical open orbit the valuation cone is all of `N_R`, and the
//! colors are indexed by the simple roots outside the parabolic set `I`, the
//! color of `α` sitting at `ι*(α^∨)`. Here `ι*` restricts a cocharacter to
//! the sublattice `M ⊆ X(T)`, expressed in the coordinates dual to the given
//! basis of `M`.

use std::collections::BTreeSet;

use crate::coloredfan::{ColorTable, ColoredCone, ColoredFan};
use crate::cones::Cone;
use crate::error::{check_len, Error, Result};
use crate::exactlin::{int, RatMat, RatVec};
use crate::hartogs::{self, Certificate, HartogsReport, Options};

/// Simple roots in `X(T)` and simple coroots in `X*(T)`, both `ℤ^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    torus_rank: usize,
    simple_roots: Vec<RatVec>,
    simple_coroots: Vec<RatVec>,
    names: Vec<String>,
}

impl RootDatum {
    /// Checks that `<α_i^∨, α_i> = 2` and `<α_i^∨, α_j> ∈ {0, -1, -2, -3}`.
    pub fn new(
        torus_rank: usize,
        simple_roots: Vec<RatVec>,
        simple_coroots: Vec<RatVec>,
    ) -> Result<Self> {
        let names = (1..=simple_roots.len()).map(|i| format!("a{i}")).collect();
        Self::with_names(torus_rank, simple_roots, simple_coroots, names)
    }

    pub fn with_names(
        torus_rank: usize,
        simple_roots: Vec<RatVec>,
        simple_coroots: Vec<RatVec>,
        names: Vec<String>,
    ) -> Result<Self> {
        if simple_roots.len() != simple_coroots.len() || names.len() != simple_roots.len() {
            return Err(Error::InvalidRootDatum(format!(
                "{} simple roots, {} coroots, {} names",
                simple_roots.len(),
                simple_coroots.len(),
                names.len()
            )));
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            check_len(torus_rank, v.len())?;
            if !v.is_integral() {
                return Err(Error::InvalidRootDatum(format!("{v} is not integral")));
            }
        }
        let allowed = [int(0), int(-1), int(-2), int(-3)];
        for (i, co) in simple_coroots.iter().enumerate() {
            for (j, root) in simple_roots.iter().enumerate() {
                let c = co.dot(root);
                let ok = if i == j {
                    c == int(2)
                } else {
                    allowed.contains(&c)
                };
                if !ok {
                    return Err(Error::InvalidRootDatum(format!(
                        "Cartan entry <a{}^v, a{}> = {c}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(RootDatum {
            torus_rank,
            simple_roots,
            simple_coroots,
            names,
        })
    }

    /// `SL(2)`: `X(T) = ℤ` spanned by the fundamental weight, `α = 2`, `α^∨ = 1`.
    pub fn a1() -> Self {
        Self::new(
            1,
            vec![RatVec::from_ints(&[2])],
            vec![RatVec::from_ints(&[1])],
        )
        .expect("A1 Cartan matrix")
    }

    /// `SL(3)` in fundamental weight coordinates.
    pub fn a2() -> Self {
        Self::new(
            2,
            vec![RatVec::from_ints(&[2, -1]), RatVec::from_ints(&[-1, 2])],
            vec![RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[0, 1])],
        )
        .expect("A2 Cartan matrix")
    }

    /// A torus of rank `n`: no roots.
    pub fn torus(n: usize) -> Self {
        Self::new(n, vec![], vec![]).expect("no roots")
    }

    /// Product with an extra torus factor of rank `n`.
    pub fn times_torus(&self, n: usize) -> Self {
        let pad = |v: &RatVec| {
            let mut c = v.coords().to_vec();
            c.extend(RatVec::zeros(n).into_coords());
            RatVec::new(c)
        };
        RootDatum {
            torus_rank: self.torus_rank + n,
            simple_roots: self.simple_roots.iter().map(pad).collect(),
            simple_coroots: self.simple_coroots.iter().map(pad).collect(),
            names: self.names.clone(),
        }
    }

    /// `SL(2) × C^*` with the simple root named `a12`: `α = (2, 0)`,
    /// `α^∨ = (1, 0)`.
    pub fn sl2_times_cstar() -> Self {
        let mut d = Self::a1().times_torus(1);
        d.names = vec!["a12".to_string()];
        d
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn simple_roots(&self) -> &[RatVec] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[RatVec] {
        &self.simple_coroots
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_coroots
            .iter()
            .map(|co| {
                self.simple_roots
                    .iter()
                    .map(|r| {
                        let c = co.dot(r);
                        i64::try_from(c.to_integer()).expect("small Cartan entries")
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorosphericalDatum {
    root_datum: RootDatum,
    parabolic: BTreeSet<usize>,
    m_basis: RatMat,
}

impl HorosphericalDatum {
    /// `parabolic` holds 0-based simple root indices; `m_basis` rows are
    /// integral, independent, and live in `X(T)`.
    pub fn new(root_datum: RootDatum, parabolic: BTreeSet<usize>, m_basis: RatMat) -> Result<Self> {
        if let Some(&i) = parabolic
            .iter()
            .find(|&&i| i >= root_datum.simple_roots.len())
        {
            return Err(Error::InvalidInput(format!(
                "parabolic index {i} out of range"
            )));
        }
        check_len(root_datum.torus_rank, m_basis.ncols())?;
        if m_basis.rank() != m_basis.nrows() {
            return Err(Error::InvalidInput(
                "M basis rows are linearly dependent".into(),
            ));
        }
        if !m_basis.rows().iter().all(RatVec::is_integral) {
            return Err(Error::InvalidInput("M basis must be integral".into()));
        }
        Ok(HorosphericalDatum {
            root_datum,
            parabolic,
            m_basis,
        })
    }

    /// `M = X(T)` and `I = ∅`, the open orbit `G/U^-`.
    pub fn full(root_datum: RootDatum) -> Self {
        let n = root_datum.torus_rank;
        Self::new(root_datum, BTreeSet::new(), RatMat::identity(n)).expect("identity basis")
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.root_datum
    }

    pub fn parabolic(&self) -> &BTreeSet<usize> {
        &self.parabolic
    }

    pub fn m_basis(&self) -> &RatMat {
        &self.m_basis
    }

    /// Rank of `N`.
    pub fn rank(&self) -> usize {
        self.m_basis.nrows()
    }
}

/// `ι*(u) = (<u, m_1>, ..., <u, m_r>)`.
pub fn iota_star(d: &HorosphericalDatum, u: &RatVec) -> Result<RatVec> {
    d.m_basis.apply(u)
}

/// One color `D_α` at `ι*(α^∨)` per simple root `α` outside `I`.
pub fn colors_from_roots(d: &HorosphericalDatum) -> ColorTable {
    let rd = &d.root_datum;
    let colors = (0..rd.simple_coroots.len())
        .filter(|i| !d.parabolic.contains(i))
        .map(|i| {
            let p = iota_star(d, &rd.simple_coroots[i]).expect("coroot length checked");
            (format!("D_{}", rd.names[i]), p)
        })
        .collect();
    ColorTable::new(d.rank(), colors).expect("names are distinct")
}

pub fn valuation_cone_horospherical(d: &HorosphericalDatum) -> Cone {
    Cone::whole_space(d.rank())
}

/// Verdict for the open orbit itself, whose colored fan is `{(0, ∅)}`.
pub fn homogeneous_verdict(d: &HorosphericalDatum) -> Result<HartogsReport> {
    let rank = d.rank();
    let fan = homogeneous_fan(d);
    if rank > 1 {
        let opts = Options {
            max_rank: rank.max(hartogs::DEFAULT_MAX_RANK),
        };
        return hartogs::check_hartogs(&fan, &opts);
    }
    let mut report = hartogs::check_hartogs(&fan, &Options::default())?;
    let colors = colors_from_roots(d);
    if colors.points().any(|p| !p.is_zero()) {
        // Some embedding has a connected gap and satisfies the criterion;
        // the open orbit inherits the phenomenon from it. The cone C is the
        // whole line already for {(0, ∅)}, which gives the witness.
        let cx = hartogs::gap_regions(&fan, &Options::default())?;
        let inputs = hartogs::hartogs_cone_inputs(&fan, &cx);
        let witness = hartogs::whole_space_witness(1, &inputs).expect("C is the whole line");
        report.hartogs = Some(true);
        report.not_applicable = None;
        report.certificate = Some(Certificate::WholeSpaceWitness(witness));
        report.interpretation = vec![
            "rank one with a nonzero color point: some embedding with connected gap satisfies \
             the criterion, and the open orbit inherits the Hartogs phenomenon"
                .to_string(),
            "the open orbit admits the Hartogs phenomenon".to_string(),
        ];
    } else {
        report.hartogs = Some(false);
        report.not_applicable = None;
        report.certificate = Some(Certificate::RankOneTrivialColors);
        report.interpretation = vec![
            "rank one with all color points zero: Ω = C^* × G/P^-".to_string(),
            "the open orbit does not admit the Hartogs phenomenon".to_string(),
        ];
    }
    Ok(report)
}

/// `Σ = {(0, ∅)}` on the open orbit.
pub fn homogeneous_fan(d: &HorosphericalDatum) -> ColoredFan {
    ColoredFan::new(
        d.rank(),
        valuation_cone_horospherical(d),
        colors_from_roots(d),
        vec![ColoredCone::zero(d.rank())],
    )
    .expect("consistent ranks")
}

/// A colored cone before its colors are resolved against a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSpec {
    pub v_generators: Vec<RatVec>,
    pub colors: Vec<String>,
}

impl ConeSpec {
    pub fn new(v_generators: &[&[i64]], colors: &[&str]) -> Self {
        ConeSpec {
            v_generators: v_generators.iter().map(|g| RatVec::from_ints(g)).collect(),
            colors: colors.iter().map(|c| c.to_string()).collect(),
        }
    }
}

pub fn resolve_cones(
    rank: usize,
    table: &ColorTable,
    cones: &[ConeSpec],
) -> Result<Vec<ColoredCone>> {
    cones
        .iter()
        .map(|c| {
            ColoredCone::new(
                table,
                rank,
                c.colors.iter().cloned(),
                c.v_generators.clone(),
            )
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanInput {
    Embedding(ColoredFan),
    /// No cones were given: the open orbit itself.
    Homogeneous,
}

/// `V = N_R` and the colors from the roots, with the given cones.
pub fn build_fan_input(d: &HorosphericalDatum, cones: &[ConeSpec]) -> Result<FanInput> {
    if cones.is_empty() {
        return Ok(FanInput::Homogeneous);
    }
    let table = colors_from_roots(d);
    let resolved = resolve_cones(d.rank(), &table, cones)?;
    Ok(FanInput::Embedding(ColoredFan::new(
        d.rank(),
        valuation_cone_horospherical(d),
        table,
        resolved,
    )?))
}

/// `build_fan_input` followed by the matching decision procedure.
pub fn check_horospherical(
    d: &HorosphericalDatum,
    cones: &[ConeSpec],
    opts: &Options,
) -> Result<HartogsReport> {
    match build_fan_input(d, cones)? {
        FanInput::Embedding(fan) => hartogs::check_hartogs(&fan, opts),
        FanInput::Homogeneous => homogeneous_verdict(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_ints(c)
    }

    #[test]
    fn cartan_checks() {
        assert_eq!(RootDatum::a1().cartan_matrix(), vec![vec![2]]);
        assert_eq!(
            RootDatum::a2().cartan_matrix(),
            vec![vec![2, -1], vec![-1, 2]]
        );
        assert_eq!(RootDatum::sl2_times_cstar().cartan_matrix(), vec![vec![2]]);
        let bad = RootDatum::new(1, vec![v(&[2])], vec![v(&[2])]);
        assert!(matches!(bad, Err(Error::InvalidRootDatum(_))));
        let bad = RootDatum::new(
            2,
            vec![v(&[2, 1]), v(&[1, 2])],
            vec![v(&[1, 0]), v(&[0, 1])],
        );
        assert!(matches!(bad, Err(Error::InvalidRootDatum(_))));
    }

    #[test]
    fn iota_star_examples() {
        let d = HorosphericalDatum::full(RootDatum::sl2_times_cstar());
        assert_eq!(iota_star(&d, &v(&[1, 0])).unwrap(), v(&[1, 0]));
        assert_eq!(iota_star(&d, &v(&[0, 0])).unwrap(), v(&[0, 0]));
        let scaled = HorosphericalDatum::new(
            RootDatum::sl2_times_cstar(),
            BTreeSet::new(),
            RatMat::from_ints(2, &[&[2, 0], &[0, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(iota_star(&scaled, &v(&[1, 0])).unwrap(), v(&[2, 0]));
        assert!(iota_star(&d, &v(&[1])).is_err());
    }

    #[test]
    fn colors() {
        let d = HorosphericalDatum::full(RootDatum::sl2_times_cstar());
        let t = colors_from_roots(&d);
        assert_eq!(t.len(), 1);
        assert_eq!(t.get("D_a12"), Some(&v(&[1, 0])));

        let all = HorosphericalDatum::new(
            RootDatum::sl2_times_cstar(),
            [0].into(),
            RatMat::identity(2),
        )
        .unwrap();
        assert!(colors_from_roots(&all).is_empty());

        let a2 = HorosphericalDatum::new(RootDatum::a2(), [0].into(), RatMat::identity(2)).unwrap();
        let t = colors_from_roots(&a2);
        assert_eq!(t.len(), 1);
        assert_eq!(t.get("D_a2"), Some(&v(&[0, 1])));
    }

    #[test]
    fn valuation_cones() {
        for r in 1..=3 {
            let d = HorosphericalDatum::full(RootDatum::torus(r));
            let c = valuation_cone_horospherical(&d);
            assert!(c.is_whole_space());
            assert_eq!(c.generators().len(), 2 * r);
        }
    }

    #[test]
    fn datum_validation() {
        let dep = HorosphericalDatum::new(
            RootDatum::torus(2),
            BTreeSet::new(),
            RatMat::from_ints(2, &[&[1, 1], &[2, 2]]).unwrap(),
        );
        assert!(dep.is_err());
        let out_of_range =
            HorosphericalDatum::new(RootDatum::a1(), [3].into(), RatMat::identity(1));
        assert!(out_of_range.is_err());
    }
}

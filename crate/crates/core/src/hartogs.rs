//! The Hartogs decision pipeline for colored fans.
//!
//! For a noncompact embedding whose gap `V ∖ |Σ|` is connected, the Hartogs
//! phenomenon holds iff the cone `C` generated by the closure of the gap and
//! all color points is the whole space, equivalently iff its dual `L` (the
//! cone of the weight monoid of the associated affine variety) is `{0}`.
//! Every decided verdict carries a certificate that can be rechecked by plain
//! evaluation.

use num_traits::{Signed, Zero};

use crate::arrangement::{self, CellComplex};
use crate::coloredfan::{validate_fan, ColoredFan};
use crate::cones::{canonical_set, Cone};
use crate::error::{Error, Result};
use crate::exactlin::{Rat, RatVec};
use crate::lp::nonneg_combination;

pub const DEFAULT_MAX_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest ambient rank for which the arrangement refinement is run.
    pub max_rank: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_rank: DEFAULT_MAX_RANK,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub generator: RatVec,
    pub coefficient: Rat,
}

/// `target = sum of coefficient * generator` with nonnegative coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    pub target: RatVec,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A nonzero `λ` with `<g, λ> >= 0` on every generator of `C`.
    NonzeroFunctional(RatVec),
    /// Nonnegative combinations of generators of `C` giving `±e_i` for all `i`.
    WholeSpaceWitness(Vec<Combination>),
    /// Rank one, `V = N_R`, only the zero cone, and every color point zero:
    /// the open orbit is `C^* × G/P^-`.
    RankOneTrivialColors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotApplicable {
    InvalidFan,
    Compact,
    GapDisconnected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HartogsReport {
    pub rank: usize,
    pub fan_valid: bool,
    pub violations: Vec<String>,
    pub complete: Option<bool>,
    pub compactifiable_10: Option<bool>,
    pub gap_components: Option<usize>,
    pub hartogs: Option<bool>,
    pub not_applicable: Option<NotApplicable>,
    /// Closures of the full-dimensional cells of `V ∖ |Σ|`.
    pub gap_cells: Vec<Cone>,
    pub hartogs_cone: Option<Cone>,
    pub weight_cone: Option<Cone>,
    pub certificate: Option<Certificate>,
    pub interpretation: Vec<String>,
    pub notes: Vec<String>,
}

impl HartogsReport {
    fn undecided(rank: usize) -> Self {
        HartogsReport {
            rank,
            fan_valid: false,
            violations: Vec::new(),
            complete: None,
            compactifiable_10: None,
            gap_components: None,
            hartogs: None,
            not_applicable: None,
            gap_cells: Vec::new(),
            hartogs_cone: None,
            weight_cone: None,
            certificate: None,
            interpretation: Vec::new(),
            notes: Vec::new(),
        }
    }
}

/// Arrangement refinement of `V` by the fan, with complete/gap flags.
pub fn gap_regions(fan: &ColoredFan, opts: &Options) -> Result<CellComplex> {
    if fan.rank() > opts.max_rank {
        return Err(Error::RankTooLarge {
            rank: fan.rank(),
            limit: opts.max_rank,
        });
    }
    arrangement::refine(fan)
}

/// Whether `V ∖ |Σ|` is connected.
pub fn is_compactifiable_10(fan: &ColoredFan, opts: &Options) -> Result<bool> {
    let cx = gap_regions(fan, opts)?;
    if cx.is_complete() {
        return Err(Error::IsCompact);
    }
    Ok(cx.gap_components().len() == 1)
}

/// Everything fed into `C`: generators of the gap-cell closures and every
/// color point, canonicalized.
pub fn hartogs_cone_inputs(fan: &ColoredFan, cx: &CellComplex) -> Vec<RatVec> {
    canonical_set(
        cx.gap_cells()
            .flat_map(|c| c.closure.generators().iter().cloned())
            .chain(fan.color_table().points().cloned()),
    )
}

pub fn hartogs_cone(fan: &ColoredFan, opts: &Options) -> Result<Cone> {
    let cx = gap_regions(fan, opts)?;
    if cx.is_complete() {
        return Err(Error::IsCompact);
    }
    Cone::from_generators(fan.rank(), &hartogs_cone_inputs(fan, &cx))
}

pub fn weight_cone(fan: &ColoredFan, opts: &Options) -> Result<Cone> {
    Ok(hartogs_cone(fan, opts)?.dual())
}

/// Describes the weight monoid `L ∩ M` through the generators of `L`.
pub fn weight_monoid_description(l: &Cone) -> String {
    if l.is_zero() {
        "L ∩ M = {0}".to_string()
    } else {
        let gens: Vec<String> = l.generators().iter().map(|g| g.to_string()).collect();
        format!(
            "L ∩ M: lattice points of the cone generated by {}",
            gens.join(", ")
        )
    }
}

pub(crate) fn whole_space_witness(rank: usize, inputs: &[RatVec]) -> Option<Vec<Combination>> {
    let mut out = Vec::with_capacity(2 * rank);
    for i in 0..rank {
        for target in [RatVec::unit(rank, i), -RatVec::unit(rank, i)] {
            let x = nonneg_combination(inputs, &target)?;
            let terms = inputs
                .iter()
                .zip(x)
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| Term {
                    generator: g.clone(),
                    coefficient: c,
                })
                .collect();
            out.push(Combination { target, terms });
        }
    }
    Some(out)
}

/// Validation, completeness, connectedness of the gap, `C`, `L`, verdict.
///
/// Mathematical outcomes (invalid fan, compact, disconnected gap) are
/// reported in the returned value; only an over-limit rank is an error.
pub fn check_hartogs(fan: &ColoredFan, opts: &Options) -> Result<HartogsReport> {
    let rank = fan.rank();
    let mut report = HartogsReport::undecided(rank);

    let violations = validate_fan(fan)?;
    report.fan_valid = violations.is_empty();
    report.violations = violations.iter().map(|v| v.to_string()).collect();
    if !report.fan_valid {
        report.not_applicable = Some(NotApplicable::InvalidFan);
        report
            .notes
            .push("not a colored fan; no verdict".to_string());
        return Ok(report);
    }

    let cx = gap_regions(fan, opts)?;
    report.complete = Some(cx.is_complete());
    if cx.is_complete() {
        report.not_applicable = Some(NotApplicable::Compact);
        report.notes.push(
            "complete fan (compact variety): the criterion concerns noncompact varieties".into(),
        );
        return Ok(report);
    }

    report.gap_cells = cx.gap_cells().map(|c| c.closure.clone()).collect();
    let components = cx.gap_components().len();
    report.gap_components = Some(components);
    report.compactifiable_10 = Some(components == 1);

    let inputs = hartogs_cone_inputs(fan, &cx);
    let c = Cone::from_generators(rank, &inputs)?;
    let l = c.dual();
    report.notes.push(weight_monoid_description(&l));

    if components != 1 {
        report.not_applicable = Some(NotApplicable::GapDisconnected);
        report.notes.push(format!(
            "V ∖ |Σ| has {components} connected components, so there is no compactification \
             with connected boundary; undecided here. If X is an open subset of a larger \
             embedding with connected gap that has the Hartogs phenomenon, X has it too."
        ));
        report.hartogs_cone = Some(c);
        report.weight_cone = Some(l);
        return Ok(report);
    }

    if c.is_whole_space() {
        let witness = whole_space_witness(rank, &inputs)
            .expect("a whole-space cone positively spans every basis vector");
        report.hartogs = Some(true);
        report.certificate = Some(Certificate::WholeSpaceWitness(witness));
        report.interpretation = vec![
            "C = N_R and L = {0}".to_string(),
            "C[Y] = C: the affine variety Y has only constant regular functions".to_string(),
            "H^1_c(X, O) = 0".to_string(),
            "X admits the Hartogs phenomenon".to_string(),
        ];
    } else {
        let lambda = l
            .generators()
            .first()
            .cloned()
            .expect("L is nonzero when C is not the whole space");
        report.hartogs = Some(false);
        report.certificate = Some(Certificate::NonzeroFunctional(lambda.clone()));
        report.interpretation = vec![
            format!("C ≠ N_R; L contains the nonzero weight {lambda}"),
            "C[Y] ≠ C: the affine variety Y has nonconstant regular functions".to_string(),
            "H^1_c(X, O) ≠ 0".to_string(),
            "X does not admit the Hartogs phenomenon".to_string(),
        ];
    }
    report.hartogs_cone = Some(c);
    report.weight_cone = Some(l);
    Ok(report)
}

/// Rechecks the certificate of a decided report against `fan` by direct
/// evaluation. Any mismatch yields `false`.
pub fn verify_certificate(report: &HartogsReport, fan: &ColoredFan) -> bool {
    let rank = fan.rank();
    let (Some(verdict), Some(cert)) = (report.hartogs, &report.certificate) else {
        return false;
    };
    if report.rank != rank {
        return false;
    }
    match (verdict, cert) {
        (false, Certificate::RankOneTrivialColors) => {
            rank == 1
                && fan.valuation_cone().is_whole_space()
                && fan.cones().iter().all(|c| c.sigma().is_zero())
                && fan.color_table().points().all(RatVec::is_zero)
        }
        (false, Certificate::NonzeroFunctional(lambda)) => {
            let Some(inputs) = recompute_inputs(fan) else {
                return false;
            };
            lambda.len() == rank
                && !lambda.is_zero()
                && inputs.iter().all(|g| !g.dot(lambda).is_negative())
        }
        (true, Certificate::WholeSpaceWitness(combos)) => {
            let Some(inputs) = recompute_inputs(fan) else {
                return false;
            };
            let mut needed: Vec<RatVec> = (0..rank)
                .flat_map(|i| [RatVec::unit(rank, i), -RatVec::unit(rank, i)])
                .collect();
            for combo in combos {
                if combo.target.len() != rank {
                    return false;
                }
                let mut acc = RatVec::zeros(rank);
                for t in &combo.terms {
                    if t.generator.len() != rank || t.coefficient.is_negative() {
                        return false;
                    }
                    let Ok(p) = t.generator.primitive() else {
                        return false;
                    };
                    if !inputs.contains(&p) {
                        return false;
                    }
                    acc = acc.add_scaled(&t.coefficient, &t.generator);
                }
                if acc != combo.target {
                    return false;
                }
                needed.retain(|n| *n != combo.target);
            }
            needed.is_empty()
        }
        _ => false,
    }
}

fn recompute_inputs(fan: &ColoredFan) -> Option<Vec<RatVec>> {
    let cx = arrangement::refine(fan).ok()?;
    if cx.is_complete() {
        return None;
    }
    Some(hartogs_cone_inputs(fan, &cx))
}

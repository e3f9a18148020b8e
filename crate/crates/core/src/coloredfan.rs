//! Colored cones and colored fans, with an axiom-by-axiom validator.

use std::collections::BTreeSet;
use std::fmt;

use crate::arrangement;
use crate::cones::Cone;
use crate::error::{check_len, Error, Result};
use crate::exactlin::RatVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Color {
    pub name: String,
    pub point: RatVec,
}

/// The points `a_D` of the colors of the open orbit, in table order.
///
/// Points may be zero and may repeat; only colors actually used by some
/// colored cone are constrained.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColorTable {
    colors: Vec<Color>,
}

impl ColorTable {
    pub fn new(rank: usize, colors: Vec<(String, RatVec)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(colors.len());
        for (name, point) in colors {
            check_len(rank, point.len())?;
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateColor(name));
            }
            out.push(Color { name, point });
        }
        Ok(ColorTable { colors: out })
    }

    pub fn get(&self, name: &str) -> Option<&RatVec> {
        self.colors
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.point)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Color> {
        self.colors.iter()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &RatVec> {
        self.colors.iter().map(|c| &c.point)
    }

    pub fn push(&mut self, name: String, point: RatVec) -> Result<()> {
        if self.get(&name).is_some() {
            return Err(Error::DuplicateColor(name));
        }
        self.colors.push(Color { name, point });
        Ok(())
    }
}

/// A colored cone `(σ, F)`.
///
/// `σ` is generated by the points of the colors in `F` together with
/// `v_generators`, which are meant to be valuations (elements of `V`).
/// Equality compares `σ` and `F` only.
#[derive(Clone, Debug)]
pub struct ColoredCone {
    sigma: Cone,
    colors: BTreeSet<String>,
    v_generators: Vec<RatVec>,
}

impl PartialEq for ColoredCone {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.colors == other.colors
    }
}

impl Eq for ColoredCone {}

impl ColoredCone {
    pub fn new<S: Into<String>>(
        table: &ColorTable,
        rank: usize,
        colors: impl IntoIterator<Item = S>,
        v_generators: Vec<RatVec>,
    ) -> Result<Self> {
        let colors: BTreeSet<String> = colors.into_iter().map(Into::into).collect();
        let mut gens = Vec::with_capacity(colors.len() + v_generators.len());
        for name in &colors {
            let p = table
                .get(name)
                .ok_or_else(|| Error::UnknownColor(name.clone()))?;
            check_len(rank, p.len())?;
            gens.push(p.clone());
        }
        for v in &v_generators {
            check_len(rank, v.len())?;
        }
        gens.extend(v_generators.iter().cloned());
        Ok(ColoredCone {
            sigma: Cone::from_generators(rank, &gens)?,
            colors,
            v_generators,
        })
    }

    /// `(0, ∅)`
    pub fn zero(rank: usize) -> Self {
        ColoredCone {
            sigma: Cone::zero(rank),
            colors: BTreeSet::new(),
            v_generators: Vec::new(),
        }
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn colors(&self) -> &BTreeSet<String> {
        &self.colors
    }

    pub fn v_generators(&self) -> &[RatVec] {
        &self.v_generators
    }
}

impl fmt::Display for ColoredCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.sigma)?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredFan {
    rank: usize,
    valuation_cone: Cone,
    color_table: ColorTable,
    cones: Vec<ColoredCone>,
}

impl ColoredFan {
    pub fn new(
        rank: usize,
        valuation_cone: Cone,
        color_table: ColorTable,
        cones: Vec<ColoredCone>,
    ) -> Result<Self> {
        check_len(rank, valuation_cone.rank())?;
        for c in &cones {
            check_len(rank, c.sigma.rank())?;
        }
        for c in color_table.iter() {
            check_len(rank, c.point.len())?;
        }
        Ok(ColoredFan {
            rank,
            valuation_cone,
            color_table,
            cones,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn valuation_cone(&self) -> &Cone {
        &self.valuation_cone
    }

    pub fn color_table(&self) -> &ColorTable {
        &self.color_table
    }

    pub fn cones(&self) -> &[ColoredCone] {
        &self.cones
    }

    pub fn contains_member(&self, cc: &ColoredCone) -> bool {
        self.cones.iter().any(|c| c == cc)
    }

    /// Same fan with an extra color that no cone uses.
    pub fn with_color(&self, name: String, point: RatVec) -> Result<Self> {
        check_len(self.rank, point.len())?;
        let mut fan = self.clone();
        fan.color_table.push(name, point)?;
        Ok(fan)
    }

    /// `|Σ| ∋ v`
    pub fn support_contains(&self, v: &RatVec) -> Result<bool> {
        check_len(self.rank, v.len())?;
        for c in &self.cones {
            if c.sigma.contains(v)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    VGeneratorOutsideValuationCone,
    ContainsLine,
    ZeroColorPoint,
    RelativeInteriorMissesV,
    MissingFace,
    RelativeInteriorOverlap,
    ValuationConeNotFullDimensional,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// Index into the fan's cone list, when the violation concerns a member.
    pub cone: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cone {
            Some(i) => write!(f, "cone #{i}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

/// Whether the relative interior of `sigma` meets `v`.
///
/// `K = σ ∩ V` meets relint σ iff relint K does, so one interior point of `K`
/// decides it.
pub fn relative_interior_meets(sigma: &Cone, v: &Cone) -> Result<bool> {
    if sigma.is_zero() {
        return Ok(true);
    }
    let k = sigma.intersect(v)?;
    if k.is_zero() {
        return Ok(false);
    }
    sigma.in_relative_interior(&k.relative_interior_point()?)
}

/// Checks the three colored-cone axioms for `cc` against the fan's color
/// table and valuation cone.
pub fn validate_colored_cone(cc: &ColoredCone, fan: &ColoredFan) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let mut push = |axiom, message: String| {
        out.push(Violation {
            axiom,
            cone: None,
            message,
        })
    };
    let v = &fan.valuation_cone;
    for g in &cc.v_generators {
        if !v.contains(g)? {
            push(
                Axiom::VGeneratorOutsideValuationCone,
                format!("generator {g} of {cc} is not in the valuation cone"),
            );
        }
    }
    if cc.sigma.lineality_dim() > 0 {
        push(Axiom::ContainsLine, format!("{cc} contains a line"));
    }
    for name in &cc.colors {
        let p = fan
            .color_table
            .get(name)
            .ok_or_else(|| Error::UnknownColor(name.clone()))?;
        if p.is_zero() {
            push(
                Axiom::ZeroColorPoint,
                format!("color {name} of {cc} has point 0"),
            );
        }
    }
    if !relative_interior_meets(&cc.sigma, v)? {
        push(
            Axiom::RelativeInteriorMissesV,
            format!("relative interior misses V for {cc}"),
        );
    }
    Ok(out)
}

/// Colored faces of `cc`: faces `σ'` of `σ` whose relative interior meets
/// `V`, each carrying `F' = {D ∈ F : a_D ∈ σ'}`.
pub fn colored_faces(cc: &ColoredCone, fan: &ColoredFan) -> Result<Vec<ColoredCone>> {
    let mut out = Vec::new();
    for face in cc.sigma.faces() {
        if !relative_interior_meets(&face, &fan.valuation_cone)? {
            continue;
        }
        let mut colors = BTreeSet::new();
        let mut color_points = Vec::new();
        for name in &cc.colors {
            let p = fan
                .color_table
                .get(name)
                .ok_or_else(|| Error::UnknownColor(name.clone()))?;
            if face.contains(p)? {
                colors.insert(name.clone());
                color_points.push(p.primitive().ok());
            }
        }
        let v_generators = face
            .generators()
            .iter()
            .filter(|g| !color_points.contains(&Some((*g).clone())))
            .cloned()
            .collect();
        out.push(ColoredCone {
            sigma: face,
            colors,
            v_generators,
        });
    }
    Ok(out)
}

/// All axiom violations of the fan; empty iff it is a colored fan.
pub fn validate_fan(fan: &ColoredFan) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let v = &fan.valuation_cone;
    if v.dim() < fan.rank {
        out.push(Violation {
            axiom: Axiom::ValuationConeNotFullDimensional,
            cone: None,
            message: format!("valuation cone {v} is not full-dimensional"),
        });
    }
    for (i, cc) in fan.cones.iter().enumerate() {
        for mut viol in validate_colored_cone(cc, fan)? {
            viol.cone = Some(i);
            out.push(viol);
        }
    }
    for (i, cc) in fan.cones.iter().enumerate() {
        for face in colored_faces(cc, fan)? {
            if !fan.contains_member(&face) {
                out.push(Violation {
                    axiom: Axiom::MissingFace,
                    cone: Some(i),
                    message: format!("colored face {face} of {cc} is missing from the fan"),
                });
            }
        }
    }
    for i in 0..fan.cones.len() {
        for j in i + 1..fan.cones.len() {
            let (a, b) = (&fan.cones[i].sigma, &fan.cones[j].sigma);
            let q = a.intersect(b)?.intersect(v)?;
            let p = if q.is_zero() {
                RatVec::zeros(fan.rank)
            } else {
                q.relative_interior_point()?
            };
            if a.in_relative_interior(&p)? && b.in_relative_interior(&p)? {
                out.push(Violation {
                    axiom: Axiom::RelativeInteriorOverlap,
                    cone: Some(j),
                    message: format!(
                        "relative interiors of cones #{i} and #{j} share the valuation {p}"
                    ),
                });
            }
        }
    }
    Ok(out)
}

/// Adds every missing colored face, repeating until the fan is closed.
pub fn complete_faces(fan: &ColoredFan) -> Result<ColoredFan> {
    let mut out = fan.clone();
    let mut i = 0;
    while i < out.cones.len() {
        for face in colored_faces(&out.cones[i], &out)? {
            if !out.contains_member(&face) {
                out.cones.push(face);
            }
        }
        i += 1;
    }
    Ok(out)
}

pub fn support_contains(fan: &ColoredFan, v: &RatVec) -> Result<bool> {
    fan.support_contains(v)
}

/// `|Σ| ⊇ V`, decided on the arrangement refinement of `V`.
pub fn is_complete(fan: &ColoredFan) -> Result<bool> {
    Ok(arrangement::refine(fan)?.is_complete())
}

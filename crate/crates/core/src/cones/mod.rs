//! Rational polyhedral cones with both representations kept canonical.

mod dd;

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{check_len, Error, Result};
use crate::exactlin::{sum, RatMat, RatVec};

pub(crate) use dd::canonical_set;

/// A rational polyhedral cone in `R^rank`.
///
/// `generators` is the V-representation and `inequalities` the
/// H-representation (`h` stands for `{x : <h, x> >= 0}`). Both are
/// canonical: a lineality (resp. implicit-equality) subspace appears as `±`
/// the primitive rows of its echelon basis, the remaining vectors are taken
/// orthogonally to it, everything is primitive, sorted and duplicate-free.
/// Two cones are equal exactly when their canonical forms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    rank: usize,
    generators: Vec<RatVec>,
    inequalities: Vec<RatVec>,
}

impl Cone {
    pub fn from_generators(rank: usize, gens: &[RatVec]) -> Result<Cone> {
        for g in gens {
            check_len(rank, g.len())?;
        }
        let inequalities = dd::cone_generators(rank, gens);
        let generators = dd::cone_generators(rank, &inequalities);
        Ok(Cone {
            rank,
            generators,
            inequalities,
        })
    }

    pub fn from_inequalities(rank: usize, ineqs: &[RatVec]) -> Result<Cone> {
        for h in ineqs {
            check_len(rank, h.len())?;
        }
        let generators = dd::cone_generators(rank, ineqs);
        let inequalities = dd::cone_generators(rank, &generators);
        Ok(Cone {
            rank,
            generators,
            inequalities,
        })
    }

    pub fn zero(rank: usize) -> Cone {
        Cone::from_generators(rank, &[]).expect("no generators")
    }

    pub fn whole_space(rank: usize) -> Cone {
        Cone::from_inequalities(rank, &[]).expect("no inequalities")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[RatVec] {
        &self.generators
    }

    pub fn inequalities(&self) -> &[RatVec] {
        &self.inequalities
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `{λ : <λ, x> >= 0 for all x in self}`.
    pub fn dual(&self) -> Cone {
        Cone::from_inequalities(self.rank, &self.generators).expect("same rank")
    }

    pub fn is_whole_space(&self) -> bool {
        self.dual().is_zero()
    }

    pub fn contains(&self, v: &RatVec) -> Result<bool> {
        check_len(self.rank, v.len())?;
        Ok(self.inequalities.iter().all(|h| !h.dot(v).is_negative()))
    }

    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        check_len(self.rank, other.rank)?;
        Ok(other
            .generators
            .iter()
            .all(|g| self.inequalities.iter().all(|h| !h.dot(g).is_negative())))
    }

    pub fn dim(&self) -> usize {
        RatMat::new(self.rank, self.generators.clone())
            .expect("rectangular")
            .rank()
    }

    pub fn lineality_dim(&self) -> usize {
        self.rank
            - RatMat::new(self.rank, self.inequalities.clone())
                .expect("rectangular")
                .rank()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality_dim() == 0
    }

    /// Inequalities that are not implicit equalities, i.e. facet normals.
    pub fn facet_normals(&self) -> impl Iterator<Item = &RatVec> {
        self.inequalities
            .iter()
            .filter(|h| self.generators.iter().any(|g| h.dot(g).is_positive()))
    }

    /// The sum of the canonical generators.
    pub fn relative_interior_point(&self) -> Result<RatVec> {
        if self.is_zero() {
            return Err(Error::ZeroCone);
        }
        Ok(sum(self.rank, &self.generators))
    }

    /// `v` lies in the cone and strictly inside every facet.
    pub fn in_relative_interior(&self, v: &RatVec) -> Result<bool> {
        check_len(self.rank, v.len())?;
        for h in &self.inequalities {
            let val = h.dot(v);
            if val.is_negative() {
                return Ok(false);
            }
            if val.is_zero() && self.generators.iter().any(|g| h.dot(g).is_positive()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        check_len(self.rank, other.rank)?;
        let mut ineqs = self.inequalities.clone();
        ineqs.extend(other.inequalities.iter().cloned());
        Cone::from_inequalities(self.rank, &ineqs)
    }

    /// Cone generated by the union of both generator sets.
    pub fn join(&self, other: &Cone) -> Result<Cone> {
        check_len(self.rank, other.rank)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Cone::from_generators(self.rank, &gens)
    }

    /// `f = self ∩ h^⊥` for some valid inequality `h` of `self`.
    ///
    /// The smallest face containing `f` is cut out by every inequality
    /// vanishing on `f`; `f` is a face iff it equals that face.
    pub fn has_face(&self, f: &Cone) -> Result<bool> {
        check_len(self.rank, f.rank)?;
        if !self.contains_cone(f)? {
            return Ok(false);
        }
        let mut ineqs = self.inequalities.clone();
        for h in &self.inequalities {
            if f.generators.iter().all(|g| h.dot(g).is_zero()) {
                ineqs.push(-h);
            }
        }
        Ok(Cone::from_inequalities(self.rank, &ineqs)? == *f)
    }

    /// All faces, from the cone itself down to its lineality space.
    pub fn faces(&self) -> Vec<Cone> {
        let n = self.generators.len();
        let tight: Vec<Vec<bool>> = self
            .facet_normals()
            .map(|h| self.generators.iter().map(|g| h.dot(g).is_zero()).collect())
            .collect();
        let mut sets: Vec<Vec<bool>> = vec![vec![true; n]];
        let mut i = 0;
        while i < sets.len() {
            for t in &tight {
                let meet: Vec<bool> = sets[i].iter().zip(t).map(|(a, b)| *a && *b).collect();
                if !sets.contains(&meet) {
                    sets.push(meet);
                }
            }
            i += 1;
        }
        let mut faces: Vec<Cone> = sets
            .into_iter()
            .map(|s| {
                let gens: Vec<RatVec> = self
                    .generators
                    .iter()
                    .zip(&s)
                    .filter(|(_, keep)| **keep)
                    .map(|(g, _)| g.clone())
                    .collect();
                Cone::from_generators(self.rank, &gens).expect("same rank")
            })
            .collect();
        faces.sort_by(|a, b| {
            b.dim()
                .cmp(&a.dim())
                .then_with(|| a.generators.cmp(&b.generators))
        });
        faces.dedup();
        faces
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        write!(f, "cone<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

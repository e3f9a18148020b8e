//! Refinement of the valuation cone by the hyperplane arrangement spanned by
//! the fan.
//!
//! The arrangement consists of every hyperplane `h^⊥` with `h` in the
//! H-representation of a member cone or of `V`. Each member cone is then a
//! union of arrangement faces, so every face is either inside `|Σ|` or has
//! relative interior disjoint from it. Faces are enumerated as sign vectors
//! by a depth-first search over the hyperplanes; a partial sign vector is
//! realizable iff a relative interior point of its closed cone realizes it.

use num_traits::Signed;

use crate::coloredfan::ColoredFan;
use crate::cones::Cone;
use crate::error::Result;
use crate::exactlin::{Rat, RatMat, RatVec};

fn sign(q: &Rat) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// A relatively open face of the refinement, described by its signs on the
/// arrangement hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementFace {
    pub signs: Vec<i8>,
    pub dim: usize,
    /// A point realizing exactly `signs`.
    pub point: RatVec,
    pub in_support: bool,
}

impl ArrangementFace {
    /// `self` lies in the closure of `other`.
    pub fn is_face_of(&self, other: &ArrangementFace) -> bool {
        self.signs
            .iter()
            .zip(&other.signs)
            .all(|(a, b)| *a == 0 || a == b)
    }
}

/// A full-dimensional face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub face: usize,
    pub closure: Cone,
    pub in_support: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    /// Indices into `CellComplex::cells`.
    pub cells: (usize, usize),
    /// Index into `CellComplex::faces` of the shared facet.
    pub facet: usize,
    pub facet_in_support: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    pub rank: usize,
    pub hyperplanes: Vec<RatVec>,
    /// Every face of the refinement of `V`, sorted by sign vector.
    pub faces: Vec<ArrangementFace>,
    pub cells: Vec<Cell>,
    pub adjacency: Vec<Adjacency>,
}

impl CellComplex {
    pub fn is_complete(&self) -> bool {
        self.faces.iter().all(|f| f.in_support)
    }

    pub fn gap_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.in_support)
    }

    /// Connected components of `V ∖ |Σ|`, each given as the sorted indices of
    /// its faces. Two gap faces are joined when one lies in the closure of
    /// the other; this covers connections through faces of any codimension.
    pub fn gap_components(&self) -> Vec<Vec<usize>> {
        let gap: Vec<usize> = (0..self.faces.len())
            .filter(|&i| !self.faces[i].in_support)
            .collect();
        let mut parent: Vec<usize> = (0..self.faces.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (k, &i) in gap.iter().enumerate() {
            for &j in &gap[k + 1..] {
                let (a, b) = (&self.faces[i], &self.faces[j]);
                if a.is_face_of(b) || b.is_face_of(a) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for &i in &gap {
            let r = find(&mut parent, i);
            match roots.iter().position(|&x| x == r) {
                Some(k) => comps[k].push(i),
                None => {
                    roots.push(r);
                    comps.push(vec![i]);
                }
            }
        }
        comps
    }

    /// Cells whose closure contains `v`.
    pub fn cells_containing(&self, v: &RatVec) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, c) in self.cells.iter().enumerate() {
            if c.closure.contains(v)? {
                out.push(i);
            }
        }
        Ok(out)
    }
}

/// The arrangement hyperplanes of a fan, as canonical normals.
pub fn hyperplanes(fan: &ColoredFan) -> Vec<RatVec> {
    let mut hs: Vec<RatVec> = fan
        .cones()
        .iter()
        .flat_map(|c| c.sigma().inequalities().iter())
        .chain(fan.valuation_cone().inequalities())
        .map(|h| {
            h.line_representative()
                .expect("canonical inequalities are nonzero")
        })
        .collect();
    hs.sort();
    hs.dedup();
    hs
}

/// Closed cone of a (partial) sign vector inside `V`.
fn closure_of(v: &Cone, hyperplanes: &[RatVec], signs: &[i8]) -> Cone {
    let mut ineqs: Vec<RatVec> = v.inequalities().to_vec();
    for (h, &s) in hyperplanes.iter().zip(signs) {
        match s {
            1 => ineqs.push(h.clone()),
            -1 => ineqs.push(-h),
            _ => {
                ineqs.push(h.clone());
                ineqs.push(-h);
            }
        }
    }
    Cone::from_inequalities(v.rank(), &ineqs).expect("same rank")
}

fn realizes(point: &RatVec, hyperplanes: &[RatVec], signs: &[i8]) -> bool {
    hyperplanes
        .iter()
        .zip(signs)
        .all(|(h, &s)| sign(&h.dot(point)) == s)
}

pub fn refine(fan: &ColoredFan) -> Result<CellComplex> {
    let rank = fan.rank();
    let v = fan.valuation_cone();
    let hs = hyperplanes(fan);

    let mut found: Vec<(Vec<i8>, RatVec)> = Vec::new();
    let mut stack: Vec<(Vec<i8>, RatVec)> = Vec::new();
    let start = if v.is_zero() {
        RatVec::zeros(rank)
    } else {
        v.relative_interior_point()?
    };
    stack.push((Vec::new(), start));
    while let Some((signs, witness)) = stack.pop() {
        let i = signs.len();
        if i == hs.len() {
            found.push((signs, witness));
            continue;
        }
        let here = sign(&hs[i].dot(&witness));
        for t in [1i8, 0, -1] {
            let mut child = signs.clone();
            child.push(t);
            if t == here {
                stack.push((child, witness.clone()));
                continue;
            }
            let q = closure_of(v, &hs[..=i], &child);
            let p = if q.is_zero() {
                RatVec::zeros(rank)
            } else {
                q.relative_interior_point()?
            };
            if realizes(&p, &hs[..=i], &child) {
                stack.push((child, p));
            }
        }
    }
    found.sort();

    let mut faces = Vec::with_capacity(found.len());
    for (signs, point) in found {
        let zero_rows: Vec<RatVec> = hs
            .iter()
            .zip(&signs)
            .filter(|(_, s)| **s == 0)
            .map(|(h, _)| h.clone())
            .collect();
        let dim = rank - RatMat::new(rank, zero_rows).expect("rectangular").rank();
        let in_support = fan.support_contains(&point)?;
        faces.push(ArrangementFace {
            signs,
            dim,
            point,
            in_support,
        });
    }

    let mut cells = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        if f.dim == rank {
            cells.push(Cell {
                face: i,
                closure: closure_of(v, &hs, &f.signs),
                in_support: f.in_support,
            });
        }
    }

    let mut adjacency = Vec::new();
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            let (sa, sb) = (&faces[cells[a].face].signs, &faces[cells[b].face].signs);
            let diff: Vec<usize> = (0..hs.len()).filter(|&k| sa[k] != sb[k]).collect();
            if diff.len() != 1 {
                continue;
            }
            let mut facet_signs = sa.clone();
            facet_signs[diff[0]] = 0;
            if let Some(facet) = faces.iter().position(|f| f.signs == facet_signs) {
                adjacency.push(Adjacency {
                    cells: (a, b),
                    facet,
                    facet_in_support: faces[facet].in_support,
                });
            }
        }
    }

    Ok(CellComplex {
        rank,
        hyperplanes: hs,
        faces,
        cells,
        adjacency,
    })
}

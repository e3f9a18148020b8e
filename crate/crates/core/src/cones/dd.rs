//! Double description: generators of `{x : <a, x> >= 0 for all a in A}`.
//!
//! The lineality space `ker A` is split off first; what remains is a pointed
//! cone inside the row space of `A`, handled by the classical incremental
//! algorithm with the combinatorial adjacency test.

use num_traits::{Signed, Zero};

use crate::exactlin::{Rat, RatMat, RatVec};

struct Ray {
    v: RatVec,
    /// Processed constraints vanishing on `v`, by constraint index.
    zero: Vec<bool>,
}

/// Sorted, primitive, duplicate-free nonzero vectors.
pub(crate) fn canonical_set(vs: impl IntoIterator<Item = RatVec>) -> Vec<RatVec> {
    let mut out: Vec<RatVec> = vs
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.primitive().expect("nonzero"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Canonical generators of the polyhedral cone cut out by `constraints`:
/// `±` an echelon basis of the lineality space followed by the extreme rays
/// of the pointed part, which are taken inside the row space of the
/// constraints. The result is sorted lexicographically.
pub(crate) fn cone_generators(rank: usize, constraints: &[RatVec]) -> Vec<RatVec> {
    let rows = canonical_set(constraints.iter().cloned());
    let a = RatMat::new(rank, rows).expect("constraint lengths checked by caller");

    let mut out = Vec::new();
    let kernel = a.nullspace();
    if !kernel.is_empty() {
        let (lin, _) = RatMat::new(rank, kernel).expect("rectangular").rref();
        for l in lin {
            let p = l.primitive().expect("echelon rows are nonzero");
            out.push(-&p);
            out.push(p);
        }
    }

    let (basis, _) = a.rref();
    if !basis.is_empty() {
        // Coordinates y on the row space: x = sum_i y_i * basis_i.
        let reduced: Vec<RatVec> = a
            .rows()
            .iter()
            .map(|r| RatVec::new(basis.iter().map(|b| r.dot(b)).collect()))
            .collect();
        for y in pointed_rays(basis.len(), &reduced) {
            let x = basis
                .iter()
                .enumerate()
                .fold(RatVec::zeros(rank), |acc, (i, b)| acc.add_scaled(&y[i], b));
            out.push(x);
        }
    }
    canonical_set(out)
}

/// Extreme rays of `{y : <a, y> >= 0}` where the rows have full rank `k`.
fn pointed_rays(k: usize, rows: &[RatVec]) -> Vec<RatVec> {
    let m = rows.len();

    // Greedy choice of k independent rows seeds the simplicial start.
    let mut seed = Vec::with_capacity(k);
    let mut chosen: Vec<RatVec> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.push(r.clone());
        if RatMat::new(k, trial.clone()).expect("rectangular").rank() == trial.len() {
            chosen = trial;
            seed.push(i);
            if seed.len() == k {
                break;
            }
        }
    }
    debug_assert_eq!(seed.len(), k, "constraint rows must span");

    let inverse = invert(&chosen);
    let mut rays: Vec<Ray> = (0..k)
        .map(|j| {
            let mut zero = vec![false; m];
            for (pos, &row) in seed.iter().enumerate() {
                zero[row] = pos != j;
            }
            Ray {
                v: RatVec::new(inverse.iter().map(|r| r[j].clone()).collect())
                    .primitive()
                    .expect("inverse columns are nonzero"),
                zero,
            }
        })
        .collect();

    let mut processed: Vec<bool> = vec![false; m];
    for &s in &seed {
        processed[s] = true;
    }

    for i in 0..m {
        if processed[i] {
            continue;
        }
        let row = &rows[i];
        let vals: Vec<Rat> = rays.iter().map(|r| row.dot(&r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();

        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                if !adjacent(&rays, p, n, &processed, k) {
                    continue;
                }
                // (a.p) n - (a.n) p vanishes on the new constraint.
                let v = rays[n]
                    .v
                    .scale(&vals[p])
                    .add_scaled(&-vals[n].clone(), &rays[p].v);
                if v.is_zero() {
                    continue;
                }
                let mut zero: Vec<bool> = rays[p]
                    .zero
                    .iter()
                    .zip(&rays[n].zero)
                    .map(|(a, b)| *a && *b)
                    .collect();
                zero[i] = true;
                next.push(Ray {
                    v: v.primitive().expect("nonzero"),
                    zero,
                });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + next.len());
        for (j, mut r) in rays.into_iter().enumerate() {
            if vals[j].is_negative() {
                continue;
            }
            r.zero[i] = vals[j].is_zero();
            kept.push(r);
        }
        kept.extend(next);
        rays = kept;
        processed[i] = true;
    }
    rays.into_iter().map(|r| r.v).collect()
}

fn adjacent(rays: &[Ray], p: usize, n: usize, processed: &[bool], k: usize) -> bool {
    let common: Vec<bool> = rays[p]
        .zero
        .iter()
        .zip(&rays[n].zero)
        .zip(processed)
        .map(|((a, b), done)| *a && *b && *done)
        .collect();
    let count = common.iter().filter(|c| **c).count();
    if count + 2 < k {
        return false;
    }
    !rays
        .iter()
        .enumerate()
        .any(|(j, r)| j != p && j != n && common.iter().zip(&r.zero).all(|(c, z)| !*c || *z))
}

/// Inverse of a square invertible matrix, by Gauss-Jordan on `[A | I]`.
fn invert(rows: &[RatVec]) -> Vec<RatVec> {
    let k = rows.len();
    let aug: Vec<RatVec> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut c = r.coords().to_vec();
            c.extend(RatVec::unit(k, i).into_coords());
            RatVec::new(c)
        })
        .collect();
    let (red, pivots) = RatMat::new(2 * k, aug).expect("rectangular").rref();
    debug_assert_eq!(pivots, (0..k).collect::<Vec<_>>());
    red.into_iter()
        .map(|r| RatVec::new(r.coords()[k..].to_vec()))
        .collect()
}

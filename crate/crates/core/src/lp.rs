//! Exact phase-one simplex for `{x >= 0 : sum_j x_j g_j = t}`.

use num_traits::{One, Signed, Zero};

use crate::exactlin::{Rat, RatVec};

/// Nonnegative coefficients expressing `target` over `gens`, if any exist.
/// The returned solution is basic, so at most `target.len()` entries are
/// nonzero. Bland's rule keeps the pivoting finite.
pub fn nonneg_combination(gens: &[RatVec], target: &RatVec) -> Option<Vec<Rat>> {
    let m = target.len();
    let n = gens.len();
    let width = n + m + 1;
    let rhs = n + m;

    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row = vec![Rat::zero(); width];
            for (j, g) in gens.iter().enumerate() {
                row[j] = g[i].clone();
            }
            row[n + i] = Rat::one();
            row[rhs] = target[i].clone();
            if row[rhs].is_negative() {
                for (k, c) in row.iter_mut().enumerate() {
                    if k < n || k == rhs {
                        *c = -c.clone();
                    }
                }
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the artificial objective sum_i a_i.
    let mut cost = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let (row, _) = leave.expect("phase one is never unbounded");

        let piv = t[row][enter].clone();
        for c in t[row].iter_mut() {
            *c = &*c / &piv;
        }
        let pivot_row = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != row && !r[enter].is_zero() {
                let f = r[enter].clone();
                for (c, p) in r.iter_mut().zip(&pivot_row) {
                    *c -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (c, p) in cost.iter_mut().zip(&pivot_row) {
                *c -= &f * p;
            }
        }
        basis[row] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = t[i][rhs].clone();
        }
    }
    Some(x)
}

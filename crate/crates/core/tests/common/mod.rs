//! Independent oracles and random instance generators shared by the
//! integration tests. Nothing here goes through the double description code
//! or the arrangement refinement.

#![allow(dead_code)]

use std::cmp::Ordering;

use hartogs::coloredfan::{validate_fan, ColorTable, ColoredCone, ColoredFan};
use hartogs::exactlin::{int, solve_membership};
use hartogs::{Cone, Rat, RatMat, RatVec};
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn v(c: &[i64]) -> RatVec {
    RatVec::from_ints(c)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin
// ---------------------------------------------------------------------------

fn normalize(rows: Vec<RatVec>) -> Vec<RatVec> {
    let mut out: Vec<RatVec> = rows
        .into_iter()
        .filter(|r| !r.is_zero())
        .map(|r| r.primitive().unwrap())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Valid (possibly redundant) inequalities of `cone(gens)`, obtained by
/// eliminating `μ` from `x = sum_j μ_j g_j, μ >= 0`.
pub fn fm_inequalities(rank: usize, gens: &[RatVec]) -> Vec<RatVec> {
    let n = gens.len();
    let width = rank + n;
    // Rows over (x, μ); equalities and `>= 0` rows kept apart.
    let mut eqs: Vec<RatVec> = (0..rank)
        .map(|i| {
            let mut row = vec![Rat::zero(); width];
            row[i] = int(1);
            for (j, g) in gens.iter().enumerate() {
                row[rank + j] = -g[i].clone();
            }
            RatVec::new(row)
        })
        .collect();
    let mut ges: Vec<RatVec> = (0..n).map(|j| RatVec::unit(width, rank + j)).collect();

    for j in rank..width {
        if let Some(k) = eqs.iter().position(|e| !e[j].is_zero()) {
            let pivot = eqs.remove(k);
            let eliminate = |row: &RatVec| -> RatVec {
                if row[j].is_zero() {
                    row.clone()
                } else {
                    row.add_scaled(&(-(&row[j] / &pivot[j])), &pivot)
                }
            };
            eqs = eqs.iter().map(eliminate).collect();
            ges = normalize(ges.iter().map(eliminate).collect());
            eqs.retain(|e| !e.is_zero());
        } else {
            let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
            for r in ges {
                if r[j].is_positive() {
                    pos.push(r);
                } else if r[j].is_negative() {
                    neg.push(r);
                } else {
                    keep.push(r);
                }
            }
            for p in &pos {
                for q in &neg {
                    keep.push(p.scale(&(-q[j].clone())).add_scaled(&p[j], q));
                }
            }
            ges = normalize(keep);
        }
    }

    let project = |r: &RatVec| RatVec::new(r.coords()[..rank].to_vec());
    let mut out: Vec<RatVec> = ges.iter().map(project).collect();
    for e in &eqs {
        out.push(project(e));
        out.push(-project(e));
    }
    normalize(out)
}

// ---------------------------------------------------------------------------
// Carathéodory membership
// ---------------------------------------------------------------------------

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `t ∈ cone(gens)`, by trying every linearly independent subset.
pub fn in_cone_bruteforce(t: &RatVec, gens: &[RatVec]) -> bool {
    if t.is_zero() {
        return true;
    }
    let rank = t.len();
    for k in 1..=rank.min(gens.len()) {
        for s in subsets(gens.len(), k) {
            let rows: Vec<RatVec> = s.iter().map(|&i| gens[i].clone()).collect();
            let m = RatMat::new(rank, rows).unwrap();
            if m.rank() != k {
                continue;
            }
            if let Some(c) = solve_membership(&m, t) {
                if c.coords().iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn same_cone_bruteforce(a: &[RatVec], b: &[RatVec]) -> bool {
    a.iter().all(|x| in_cone_bruteforce(x, b)) && b.iter().all(|x| in_cone_bruteforce(x, a))
}

/// Drops every vector that is a nonnegative combination of the others.
pub fn irredundant(gens: &[RatVec]) -> Vec<RatVec> {
    let mut out: Vec<RatVec> = gens.to_vec();
    let mut i = 0;
    while i < out.len() {
        let mut rest = out.clone();
        let x = rest.remove(i);
        if in_cone_bruteforce(&x, &rest) {
            out.remove(i);
        } else {
            i += 1;
        }
    }
    out.sort();
    out
}

pub fn random_vectors(r: &mut StdRng, rank: usize, count: usize, bound: i64) -> Vec<RatVec> {
    (0..count)
        .map(|_| {
            RatVec::new(
                (0..rank)
                    .map(|_| int(r.gen_range(-bound..=bound)))
                    .collect(),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Rank-2 angular sweep
// ---------------------------------------------------------------------------

pub type P2 = (i64, i64);

fn cross(a: P2, b: P2) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn half(a: P2) -> u8 {
    if a.1 > 0 || (a.1 == 0 && a.0 > 0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angle order starting at the positive x-axis.
pub fn angle_cmp(a: P2, b: P2) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn prim(a: P2) -> P2 {
    let g = gcd(a.0, a.1);
    (a.0 / g, a.1 / g)
}

/// `p ∈ cone(gens)` in the plane: some single ray or pair works.
pub fn in_cone_2d(p: P2, gens: &[P2]) -> bool {
    if p == (0, 0) {
        return true;
    }
    for &g in gens {
        if g != (0, 0)
            && cross(g, p) == 0
            && (g.0 as i128 * p.0 as i128 + g.1 as i128 * p.1 as i128) > 0
        {
            return true;
        }
    }
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let d = cross(a, b);
            if d == 0 {
                continue;
            }
            // p = s a + t b
            let s = cross(p, b) * d.signum();
            let t = cross(a, p) * d.signum();
            if s >= 0 && t >= 0 {
                return true;
            }
        }
    }
    false
}

/// A raw rank-2 fan: cones as generator lists, `None` for `V = R^2`.
#[derive(Clone, Debug)]
pub struct RawFan2 {
    pub valuation: Option<Vec<P2>>,
    pub cones: Vec<Vec<P2>>,
}

impl RawFan2 {
    fn in_gap(&self, p: P2) -> bool {
        let in_v = self.valuation.as_ref().is_none_or(|g| in_cone_2d(p, g));
        in_v && !self.cones.iter().any(|c| in_cone_2d(p, c))
    }

    /// Number of connected components of `(V ∖ |Σ|) ∩ S^1`; the zero cone is
    /// assumed to be in the fan. Zero means the fan is complete.
    pub fn sweep_components(&self) -> usize {
        let mut dirs: Vec<P2> = self
            .cones
            .iter()
            .flatten()
            .chain(self.valuation.iter().flatten())
            .filter(|&&d| d != (0, 0))
            .map(|&d| prim(d))
            .collect();
        dirs.sort_by(|a, b| angle_cmp(*a, *b));
        dirs.dedup();
        if dirs.is_empty() {
            return usize::from(self.in_gap((1, 0)));
        }
        let mut status = Vec::with_capacity(2 * dirs.len());
        for k in 0..dirs.len() {
            let a = dirs[k];
            let b = dirs[(k + 1) % dirs.len()];
            let mid = if dirs.len() == 1 {
                (-a.0, -a.1)
            } else {
                match cross(a, b).cmp(&0) {
                    Ordering::Greater => (a.0 + b.0, a.1 + b.1),
                    Ordering::Equal => (-a.1, a.0),
                    Ordering::Less => (-(a.0 + b.0), -(a.1 + b.1)),
                }
            };
            status.push(self.in_gap(a));
            status.push(self.in_gap(mid));
        }
        if status.iter().all(|s| *s) {
            return 1;
        }
        // count runs of `true` on the cycle: starts of runs
        (0..status.len())
            .filter(|&i| status[i] && !status[(i + status.len() - 1) % status.len()])
            .count()
    }
}

// ---------------------------------------------------------------------------
// Random rank-2 fans
// ---------------------------------------------------------------------------

fn to_vec(p: P2) -> RatVec {
    v(&[p.0, p.1])
}

/// A random rank-2 colored fan assembled from consecutive angular sectors,
/// standalone rays, their faces and `(0, ∅)`, with some rays colored. The
/// valuation cone is the plane, a half-plane or a sector. The result may
/// violate the axioms (rays outside `V`); callers filter with the validator.
pub fn random_fan2(r: &mut StdRng) -> (ColoredFan, RawFan2) {
    let valuation: Option<Vec<P2>> = match r.gen_range(0..4) {
        0 | 1 => None,
        2 => {
            let n = loop {
                let n: P2 = (r.gen_range(-3..=3), r.gen_range(-3..=3));
                if n != (0, 0) {
                    break n;
                }
            };
            // half-plane {x : <n, x> >= 0}
            let t = (-n.1, n.0);
            Some(vec![t, (-t.0, -t.1), n])
        }
        _ => loop {
            let a: P2 = (r.gen_range(-3..=3), r.gen_range(-3..=3));
            let b: P2 = (r.gen_range(-3..=3), r.gen_range(-3..=3));
            if cross(a, b) != 0 {
                break Some(vec![a, b]);
            }
        },
    };

    let k = r.gen_range(1..=6);
    let mut dirs: Vec<P2> = Vec::new();
    while dirs.len() < k {
        let d: P2 = (r.gen_range(-4..=4), r.gen_range(-4..=4));
        if d == (0, 0) {
            continue;
        }
        let d = prim(d);
        if !dirs.contains(&d) {
            dirs.push(d);
        }
    }
    dirs.sort_by(|a, b| angle_cmp(*a, *b));

    let colored: Vec<bool> = dirs.iter().map(|_| r.gen_bool(0.3)).collect();
    let scale: Vec<i64> = dirs.iter().map(|_| r.gen_range(1..=2)).collect();
    let mut colors: Vec<(String, RatVec)> = Vec::new();
    for (i, d) in dirs.iter().enumerate() {
        if colored[i] {
            colors.push((format!("D{i}"), to_vec((d.0 * scale[i], d.1 * scale[i]))));
        }
    }
    // Unused colors may sit anywhere, including at 0.
    for j in 0..r.gen_range(0..=2) {
        let p: P2 = (r.gen_range(-3..=3), r.gen_range(-3..=3));
        colors.push((format!("X{j}"), to_vec(p)));
    }
    let table = ColorTable::new(2, colors).unwrap();

    let mut raw_cones: Vec<Vec<usize>> = vec![vec![]];
    let n = dirs.len();
    for i in 0..n {
        let j = (i + 1) % n;
        if n >= 2 && cross(dirs[i], dirs[j]) > 0 && r.gen_bool(0.5) {
            raw_cones.push(vec![i, j]);
        }
    }
    for i in 0..n {
        let used = raw_cones.iter().any(|c| c.contains(&i));
        if used || r.gen_bool(0.4) {
            raw_cones.push(vec![i]);
        }
    }

    let cones: Vec<ColoredCone> = raw_cones
        .iter()
        .map(|c| {
            let names: Vec<String> = c
                .iter()
                .filter(|&&i| colored[i])
                .map(|i| format!("D{i}"))
                .collect();
            let vgens: Vec<RatVec> = c
                .iter()
                .filter(|&&i| !colored[i])
                .map(|&i| to_vec(dirs[i]))
                .collect();
            ColoredCone::new(&table, 2, names, vgens).unwrap()
        })
        .collect();

    let v = match &valuation {
        None => Cone::whole_space(2),
        Some(g) => {
            Cone::from_generators(2, &g.iter().map(|&p| to_vec(p)).collect::<Vec<_>>()).unwrap()
        }
    };
    let fan = ColoredFan::new(2, v, table, cones).unwrap();
    let raw = RawFan2 {
        valuation,
        cones: raw_cones
            .iter()
            .map(|c| c.iter().map(|&i| dirs[i]).collect())
            .collect(),
    };
    (fan, raw)
}

/// `count` valid random rank-2 fans (complete ones included).
pub fn valid_fans2(seed: u64, count: usize) -> Vec<(ColoredFan, RawFan2)> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (fan, raw) = random_fan2(&mut r);
        if validate_fan(&fan).unwrap().is_empty() {
            out.push((fan, raw));
        }
    }
    out
}

/// Random subfans of the fan of `(P^1)^3` (eight octants), with the faces
/// filled in and `V` either the whole space or a half-space.
pub fn random_fan3(r: &mut StdRng) -> ColoredFan {
    let signs = [1i64, -1];
    let mut cones = Vec::new();
    let table = ColorTable::new(
        3,
        vec![("E".into(), v(&[1, 0, 0])), ("Y".into(), v(&[1, 1, 1]))],
    )
    .unwrap();
    for &a in &signs {
        for &b in &signs {
            for &c in &signs {
                if r.gen_bool(0.4) {
                    let gens = vec![v(&[a, 0, 0]), v(&[0, b, 0]), v(&[0, 0, c])];
                    cones.push(ColoredCone::new(&table, 3, Vec::<String>::new(), gens).unwrap());
                }
            }
        }
    }
    let v3 = if r.gen_bool(0.5) {
        Cone::whole_space(3)
    } else {
        Cone::from_inequalities(3, &[v(&[0, 0, 1])]).unwrap()
    };
    let fan = ColoredFan::new(3, v3, table, cones).unwrap();
    hartogs::coloredfan::complete_faces(&fan).unwrap()
}

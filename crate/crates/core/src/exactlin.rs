//! Exact rational vectors and matrices.
//!
//! Everything here is backed by arbitrary-precision rationals. Vectors live in
//! `N_R` or `M_R` depending on the caller; the pairing between the two is the
//! plain coordinate dot product.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_len, Error, Result};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-2/3"` and the like.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A vector of exact rationals. `BigRational` keeps every entry reduced with
/// a positive denominator, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec(Vec<Rat>);

impl RatVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVec(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        RatVec(vec![Rat::zero(); len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Rat::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinate pairing. Both sides must have the same length.
    pub fn dot(&self, other: &RatVec) -> Rat {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn checked_dot(&self, other: &RatVec) -> Result<Rat> {
        check_len(self.len(), other.len())?;
        Ok(self.dot(other))
    }

    pub fn scale(&self, q: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|c| c * q).collect())
    }

    /// `self + q * other`
    pub fn add_scaled(&self, q: &Rat, other: &RatVec) -> RatVec {
        RatVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + q * b)
                .collect(),
        )
    }

    /// The positive multiple with coprime integer coordinates.
    pub fn primitive(&self) -> Result<RatVec> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Ok(RatVec(
            ints.into_iter()
                .map(|c| Rat::from_integer(c / &gcd))
                .collect(),
        ))
    }

    /// Primitive form with the first nonzero coordinate made positive; the
    /// canonical label of the line (or hyperplane normal) through `self`.
    pub fn line_representative(&self) -> Result<RatVec> {
        let p = self.primitive()?;
        match p.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => Ok(-p),
            _ => Ok(p),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        -(self.clone())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Sum of a collection of vectors of length `len`.
pub fn sum(len: usize, vs: &[RatVec]) -> RatVec {
    vs.iter().fold(RatVec::zeros(len), |acc, v| &acc + v)
}

/// A rectangular rational matrix, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    ncols: usize,
    rows: Vec<RatVec>,
}

impl RatMat {
    pub fn new(ncols: usize, rows: Vec<RatVec>) -> Result<Self> {
        for r in &rows {
            check_len(ncols, r.len())?;
        }
        Ok(RatMat { ncols, rows })
    }

    pub fn from_ints(ncols: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(ncols, rows.iter().map(|r| RatVec::from_ints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        RatMat {
            ncols: n,
            rows: (0..n).map(|i| RatVec::unit(n, i)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[RatVec] {
        &self.rows
    }

    /// `(m_1 . v, ..., m_k . v)` for rows `m_i`.
    pub fn apply(&self, v: &RatVec) -> Result<RatVec> {
        check_len(self.ncols, v.len())?;
        Ok(RatVec(self.rows.iter().map(|r| r.dot(v)).collect()))
    }

    pub fn transpose(&self) -> RatMat {
        let rows = (0..self.ncols)
            .map(|j| RatVec(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        RatMat {
            ncols: self.rows.len(),
            rows,
        }
    }

    /// Reduced row echelon form: nonzero rows only, with their pivot columns.
    pub fn rref(&self) -> (Vec<RatVec>, Vec<usize>) {
        let mut m: Vec<Vec<Rat>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == m.len() {
                break;
            }
            let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for c in m[row].iter_mut() {
                *c = &*c * &inv;
            }
            for i in 0..m.len() {
                if i != row && !m[i][col].is_zero() {
                    let factor = m[i][col].clone();
                    let pivot_row = m[row].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= &factor * y;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        m.truncate(row);
        (m.into_iter().map(RatVec).collect(), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<RatVec> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = RatVec::zeros(self.ncols);
                x.0[f] = Rat::one();
                for (row, &p) in r.iter().zip(&pivots) {
                    x.0[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }
}

pub fn rank(m: &RatMat) -> usize {
    m.rank()
}

pub fn primitive(v: &RatVec) -> Result<RatVec> {
    v.primitive()
}

/// Coefficients `c` with `sum_i c_i * basis_i = v`, if `v` lies in the row
/// span. Free coefficients are set to zero.
pub fn solve_membership(basis: &RatMat, v: &RatVec) -> Option<RatVec> {
    if basis.ncols() != v.len() {
        return None;
    }
    // Columns of the augmented system are the basis rows plus `v`.
    let k = basis.nrows();
    let mut aug_rows = Vec::with_capacity(v.len());
    for j in 0..v.len() {
        let mut row: Vec<Rat> = basis.rows().iter().map(|b| b[j].clone()).collect();
        row.push(v[j].clone());
        aug_rows.push(RatVec(row));
    }
    let aug = RatMat {
        ncols: k + 1,
        rows: aug_rows,
    };
    let (r, pivots) = aug.rref();
    if pivots.contains(&k) {
        return None;
    }
    let mut c = RatVec::zeros(k);
    for (row, &p) in r.iter().zip(&pivots) {
        c.0[p] = row[k].clone();
    }
    Some(c)
}

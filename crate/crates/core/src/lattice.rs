//! Lattice points of the nonnegative orthant, heights and height slices, the
//! coordinatewise and lexicographic orders, and binomial counting polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::poly::UnivariatePolynomial;

/// Default refusal threshold for slice enumeration.
pub const DEFAULT_ENUM_CAP: u128 = 5_000_000;

/// A point of `N_0^k`.
///
/// The derived `Ord` compares coordinates left to right, which for points of
/// equal dimension is exactly the lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn zero(k: usize) -> Self {
        Self(vec![0; k])
    }

    /// The `i`-th unit vector of `N_0^k`.
    pub fn unit(k: usize, i: usize) -> Self {
        let mut c = vec![0; k];
        c[i] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> u64 {
        height(self)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// Coordinatewise maximum of two points of equal dimension.
    pub fn join(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self >= other` coordinatewise; dimensions must agree.
    pub fn dominates(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Contiguous coordinate range `[start, start + len)` as a point.
    pub fn block(&self, start: usize, len: usize) -> Self {
        Self(self.0[start..start + len].to_vec())
    }
}

impl From<Vec<u32>> for LatticePoint {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: Self) -> LatticePoint {
        assert_eq!(self.dim(), rhs.dim(), "adding lattice points of different dimension");
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The set of points of `N_0^k` with coordinate sum `h`, in lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSlice {
    pub k: usize,
    pub h: u64,
    pub points: Vec<LatticePoint>,
}

impl SigmaSlice {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn height(x: &LatticePoint) -> u64 {
    x.0.iter().map(|&c| u64::from(c)).sum()
}

/// Exact `n choose r` with `u128` intermediates; each partial product is
/// itself a binomial coefficient, so the running division is exact.
pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// `|σ(h)|` in dimension `k`, i.e. `binomial(h + k - 1, k - 1)`.
pub fn count_sigma(k: usize, h: u64) -> u128 {
    assert!(k >= 1, "dimension must be at least 1");
    binomial(h + k as u64 - 1, k as u64 - 1)
}

pub fn enumerate_sigma(k: usize, h: u64) -> Result<SigmaSlice> {
    enumerate_sigma_capped(k, h, DEFAULT_ENUM_CAP)
}

pub fn enumerate_sigma_capped(k: usize, h: u64, cap: u128) -> Result<SigmaSlice> {
    if k == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    let size = count_sigma(k, h);
    if size > cap {
        return Err(Error::ResourceCap {
            what: "height slice",
            size,
            cap,
        });
    }
    let h32 = u32::try_from(h).map_err(|_| Error::InvalidArgument(format!("height {h} too large")))?;
    let mut points = Vec::with_capacity(size as usize);
    let mut cur = vec![0u32; k];
    fill_compositions(&mut cur, 0, h32, &mut points);
    debug_assert_eq!(points.len() as u128, size);
    Ok(SigmaSlice { k, h, points })
}

fn fill_compositions(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<LatticePoint>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(LatticePoint(cur.clone()));
        return;
    }
    for v in 0..=remaining {
        cur[pos] = v;
        fill_compositions(cur, pos + 1, remaining - v, out);
    }
}

/// Coordinatewise partial order `x <= y`.
pub fn leq(x: &LatticePoint, y: &LatticePoint) -> Result<bool> {
    x.check_dim(y)?;
    Ok(y.dominates(x))
}

/// Strict lexicographic order.
pub fn lex_less(x: &LatticePoint, y: &LatticePoint) -> Result<bool> {
    x.check_dim(y)?;
    Ok(x.cmp(y) == Ordering::Less)
}

pub fn coordinatewise_max<'a, I>(points: I) -> Result<LatticePoint>
where
    I: IntoIterator<Item = &'a LatticePoint>,
{
    let mut it = points.into_iter();
    let first = it.next().ok_or(Error::EmptySet)?.clone();
    it.try_fold(first, |acc, p| {
        acc.check_dim(p)?;
        Ok(acc.join(p))
    })
}

/// Minimal elements of `points` under the coordinatewise order, sorted
/// lexicographically and deduplicated.
///
/// Candidates are visited in ascending height; a point is kept iff it does
/// not dominate an already kept point. Any strictly smaller point has
/// strictly smaller height, so it is always visited first.
pub fn minimal_elements(points: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    if let Some(first) = points.first() {
        for p in points {
            first.check_dim(p)?;
        }
    }
    let mut sorted: Vec<&LatticePoint> = points.iter().collect();
    sorted.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: Vec<LatticePoint> = Vec::new();
    for p in sorted {
        if !kept.iter().any(|m| p.dominates(m)) {
            kept.push(p.clone());
        }
    }
    kept.sort();
    Ok(kept)
}

/// The polynomial `q(h) = binomial(h - shift + k - 1, k - 1)` written as
/// `(h - shift + k - 1)(h - shift + k - 2)...(h - shift + 1) / (k - 1)!`.
///
/// It agrees with the count of `σ(h - shift)` for `h >= shift`; below that
/// the polynomial form need not vanish, and callers track validity
/// thresholds themselves.
pub fn binomial_polynomial(k: usize, shift: u64) -> UnivariatePolynomial {
    assert!(k >= 1, "dimension must be at least 1");
    let mut p = UnivariatePolynomial::one();
    let mut factorial = BigInt::one();
    for i in 1..k as i64 {
        let c = BigRational::from_integer(BigInt::from(i - shift as i64));
        p = &p * &UnivariatePolynomial::linear(c);
        factorial *= BigInt::from(i);
    }
    p.scale(&BigRational::new(BigInt::one(), factorial))
}

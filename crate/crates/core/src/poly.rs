//! Dense univariate and sparse multivariate polynomials with exact rational
//! coefficients.
//!
//! Coefficients are serialized as `"num/den"` strings (always with an explicit
//! denominator) so that identity checks against integer counts stay exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Formats a rational as `num/den` with a positive denominator.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` (or a bare integer) back into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_from_u128(v: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Dense polynomial in one variable, constant term first.
///
/// Trailing zero coefficients are trimmed on construction, so the zero
/// polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePolynomial {
    coeffs: Vec<BigRational>,
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `x + c`.
    pub fn linear(c: BigRational) -> Self {
        Self::from_coeffs(vec![c, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: i64) -> BigRational {
        self.eval_rational(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Evaluates at `x` and returns the value if it is a nonnegative integer.
    pub fn eval_count(&self, x: i64) -> Option<u128> {
        to_count(&self.eval(x))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }
}

/// Converts an exact rational to a count when it is a nonnegative integer.
pub fn to_count(v: &BigRational) -> Option<u128> {
    if !v.is_integer() || v.is_negative() {
        return None;
    }
    u128::try_from(v.to_integer()).ok()
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn add(self, rhs: Self) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn sub(self, rhs: Self) -> UnivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: Self) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePolynomial::from_coeffs(out)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigRational, monomial: &str) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    let abs = format_rational(&c.abs());
    match (first, monomial.is_empty()) {
        (true, true) if c.is_negative() => write!(f, "-{abs}"),
        (true, true) => write!(f, "{abs}"),
        (true, false) if c.is_negative() => write!(f, "-{abs}·{monomial}"),
        (true, false) => write!(f, "{abs}·{monomial}"),
        (false, true) => write!(f, " {sign} {abs}"),
        (false, false) => write!(f, " {sign} {abs}·{monomial}"),
    }
}

/// Highest degree first, e.g. `2/1·h + 1/1`.
impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0/1");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match i {
                0 => String::new(),
                1 => "h".to_string(),
                _ => format!("h^{i}"),
            };
            write_term(f, first, c, &monomial)?;
            first = false;
        }
        Ok(())
    }
}

/// Sparse polynomial in `variables` unknowns with per-variable validity
/// thresholds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultivariatePolynomial {
    variables: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
    thresholds: Vec<u64>,
}

impl MultivariatePolynomial {
    pub fn zero(variables: usize) -> Self {
        Self {
            variables,
            terms: BTreeMap::new(),
            thresholds: vec![0; variables],
        }
    }

    pub fn from_terms(
        variables: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
        thresholds: Vec<u64>,
    ) -> Result<Self> {
        if thresholds.len() != variables {
            return Err(Error::DimensionMismatch {
                expected: variables,
                found: thresholds.len(),
            });
        }
        let mut p = Self {
            variables,
            terms: BTreeMap::new(),
            thresholds,
        };
        for (exps, c) in terms {
            if exps.len() != variables {
                return Err(Error::DimensionMismatch {
                    expected: variables,
                    found: exps.len(),
                });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    /// Tensor product of one univariate factor per variable, times `scale`.
    pub fn product_of(factors: &[UnivariatePolynomial], scale: &BigRational) -> Self {
        let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        terms.insert(Vec::new(), scale.clone());
        for factor in factors {
            let mut next = BTreeMap::new();
            for (exps, c) in &terms {
                for (i, a) in factor.coeffs().iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut e = exps.clone();
                    e.push(i as u32);
                    *next.entry(e).or_insert_with(BigRational::zero) += c * a;
                }
            }
            terms = next;
        }
        let mut p = Self::zero(factors.len());
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn thresholds(&self) -> &[u64] {
        &self.thresholds
    }

    pub fn set_thresholds(&mut self, thresholds: Vec<u64>) {
        assert_eq!(thresholds.len(), self.variables);
        self.thresholds = thresholds;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        let entry = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.variables, other.variables);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    /// Largest exponent of variable `var` over all terms.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, point: &[i64]) -> BigRational {
        assert_eq!(point.len(), self.variables, "evaluation point has wrong arity");
        let xs: Vec<BigRational> = point
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        self.terms
            .iter()
            .map(|(exps, c)| {
                exps.iter()
                    .zip(&xs)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn eval_count(&self, point: &[i64]) -> Option<u128> {
        to_count(&self.eval(point))
    }

    /// Collapses a one-variable polynomial into its dense form.
    pub fn to_univariate(&self) -> Option<UnivariatePolynomial> {
        if self.variables != 1 {
            return None;
        }
        let n = self.degree_in(0).map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![BigRational::zero(); n];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Some(UnivariatePolynomial::from_coeffs(coeffs))
    }

    pub fn from_univariate(p: &UnivariatePolynomial, threshold: u64) -> Self {
        let mut out = Self::zero(1);
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.add_term(vec![i as u32], c.clone());
            }
        }
        out.thresholds = vec![threshold];
        out
    }
}

/// Terms by descending total degree, then descending exponents, e.g.
/// `1/1·h1 + 2/1·h2 + 1/1`.
impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0/1");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (idx, (exps, c)) in terms.into_iter().enumerate() {
            let monomial = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("h{}", v + 1)
                    } else {
                        format!("h{}^{e}", v + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join("·");
            write_term(f, idx == 0, c, &monomial)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&q(4, 2)), "2/1");
        assert_eq!(format_rational(&q(-1, 2)), "-1/2");
        assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
    }

    #[test]
    fn univariate_display() {
        assert_eq!(UnivariatePolynomial::from_integers(&[1, 2]).to_string(), "2/1·h + 1/1");
        assert_eq!(UnivariatePolynomial::from_integers(&[6]).to_string(), "6/1");
        assert_eq!(
            UnivariatePolynomial::from_integers(&[-1, 0, 3]).to_string(),
            "3/1·h^2 - 1/1"
        );
        assert_eq!(UnivariatePolynomial::zero().to_string(), "0/1");
    }

    #[test]
    fn trims_and_multiplies() {
        let p = UnivariatePolynomial::from_integers(&[1, 1, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        let sq = &p * &p;
        assert_eq!(sq, UnivariatePolynomial::from_integers(&[1, 2, 1]));
        assert_eq!((&sq - &sq).degree(), None);
        assert_eq!(sq.eval(3), q(16, 1));
    }

    #[test]
    fn multivariate_product_and_eval() {
        let a = UnivariatePolynomial::from_integers(&[1, 1]);
        let b = UnivariatePolynomial::from_integers(&[0, 2]);
        let p = MultivariatePolynomial::product_of(&[a, b], &q(1, 1));
        // (h1 + 1) * 2 h2
        assert_eq!(p.eval(&[3, 5]), q(40, 1));
        assert_eq!(p.degree_in(0), Some(1));
        assert_eq!(p.to_string(), "2/1·h1·h2 + 2/1·h2");
    }

    #[test]
    fn multivariate_cancellation_removes_terms() {
        let a = UnivariatePolynomial::from_integers(&[1, 1]);
        let mut p = MultivariatePolynomial::product_of(std::slice::from_ref(&a), &q(1, 1));
        p.add_assign(&MultivariatePolynomial::product_of(&[a], &q(-1, 1)));
        assert!(p.is_zero());
    }
}

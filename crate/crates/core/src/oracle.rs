//! Brute-force ground truth: sumsets, linear forms, growth sequences, and an
//! independent finite-difference polynomial fitter.
//!
//! Nothing here looks at lattice-point fibers or the useless ideal; the
//! engines are checked against these results.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{rational_from_u128, UnivariatePolynomial};
use crate::semigroup::{Element, GeneratorTuple, SemigroupSpec};

/// Default refusal threshold for the size of a computed sumset.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

/// `|hA|` for `h = 1..=h_max`; `values[0]` is `|1A|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSequence {
    pub values: Vec<u128>,
}

impl GrowthSequence {
    pub fn new(values: Vec<u128>) -> Self {
        Self { values }
    }

    pub fn h_max(&self) -> u64 {
        self.values.len() as u64
    }

    /// `|hA|` for `h >= 1`.
    pub fn at(&self, h: u64) -> Option<u128> {
        h.checked_sub(1).and_then(|i| self.values.get(i as usize).copied())
    }
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::ResourceCap {
            what: "sumset",
            size: size as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

/// `X + Y` for sets of elements of `spec`.
pub fn set_sum(
    spec: &SemigroupSpec,
    xs: &BTreeSet<Element>,
    ys: &BTreeSet<Element>,
    cap: usize,
) -> Result<BTreeSet<Element>> {
    let mut out = BTreeSet::new();
    for x in xs {
        for y in ys {
            out.insert(spec.add_unchecked(x, y));
        }
        check_cap(out.len(), cap)?;
    }
    Ok(out)
}

fn generator_set(a: &GeneratorTuple) -> BTreeSet<Element> {
    a.generators().iter().cloned().collect()
}

/// Iterates `0A, 1A, 2A, ...` by repeated addition of `A`.
struct SumsetPass<'a> {
    a: &'a GeneratorTuple,
    gens: BTreeSet<Element>,
    current: BTreeSet<Element>,
    cap: usize,
}

impl<'a> SumsetPass<'a> {
    fn new(a: &'a GeneratorTuple, cap: usize) -> Self {
        Self {
            a,
            gens: generator_set(a),
            current: BTreeSet::from([a.spec().identity()]),
            cap,
        }
    }

    fn step(&mut self) -> Result<&BTreeSet<Element>> {
        self.current = set_sum(self.a.spec(), &self.current, &self.gens, self.cap)?;
        Ok(&self.current)
    }
}

pub fn sumset(a: &GeneratorTuple, h: u64) -> Result<BTreeSet<Element>> {
    sumset_capped(a, h, DEFAULT_ELEMENT_CAP)
}

pub fn sumset_capped(a: &GeneratorTuple, h: u64, cap: usize) -> Result<BTreeSet<Element>> {
    if h == 0 {
        return Err(Error::InvalidArgument("sumsets are defined for h >= 1".into()));
    }
    let mut pass = SumsetPass::new(a, cap);
    for _ in 1..h {
        pass.step()?;
    }
    pass.step().cloned()
}

pub fn growth_sequence(a: &GeneratorTuple, h_max: u64) -> Result<GrowthSequence> {
    growth_sequence_capped(a, h_max, DEFAULT_ELEMENT_CAP)
}

pub fn growth_sequence_capped(a: &GeneratorTuple, h_max: u64, cap: usize) -> Result<GrowthSequence> {
    if h_max == 0 {
        return Err(Error::InvalidArgument("h_max must be at least 1".into()));
    }
    let mut pass = SumsetPass::new(a, cap);
    let mut values = Vec::with_capacity(h_max as usize);
    for _ in 0..h_max {
        values.push(pass.step()?.len() as u128);
    }
    Ok(GrowthSequence { values })
}

/// `h_1 A_1 + ... + h_r A_r`.
pub fn linear_form_sumset(sets: &[GeneratorTuple], hs: &[u64]) -> Result<BTreeSet<Element>> {
    linear_form_sumset_capped(sets, hs, DEFAULT_ELEMENT_CAP)
}

pub fn linear_form_sumset_capped(sets: &[GeneratorTuple], hs: &[u64], cap: usize) -> Result<BTreeSet<Element>> {
    let first = sets.first().ok_or(Error::EmptySet)?;
    if sets.len() != hs.len() {
        return Err(Error::DimensionMismatch {
            expected: sets.len(),
            found: hs.len(),
        });
    }
    if sets.iter().any(|a| a.spec() != first.spec()) {
        return Err(Error::SpecMismatch);
    }
    let spec = first.spec();
    let mut acc = BTreeSet::from([spec.identity()]);
    for (a, &h) in sets.iter().zip(hs) {
        let block = sumset_capped(a, h, cap)?;
        acc = set_sum(spec, &acc, &block, cap)?;
    }
    Ok(acc)
}

/// `binomial(h - start, i)` as a polynomial in `h`.
fn falling_binomial(start: u64, i: usize) -> UnivariatePolynomial {
    let mut p = UnivariatePolynomial::one();
    let mut fact = BigInt::one();
    for j in 0..i {
        let shift = -(start as i64) - j as i64;
        p = &p * &UnivariatePolynomial::linear(BigRational::from_integer(BigInt::from(shift)));
        fact *= BigInt::from(j + 1);
    }
    p.scale(&BigRational::new(BigInt::one(), fact))
}

/// Newton forward-difference interpolant through `(start + i, values[i])`.
pub fn newton_forward(start: u64, values: &[u128]) -> UnivariatePolynomial {
    let mut diffs: Vec<BigRational> = values.iter().map(|&v| rational_from_u128(v)).collect();
    let mut p = UnivariatePolynomial::zero();
    for i in 0..values.len() {
        if !diffs[0].is_zero() {
            p = &p + &falling_binomial(start, i).scale(&diffs[0]);
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    p
}

/// Fits a polynomial of degree at most `degree_bound` to the trailing values
/// of `seq` and accepts it only if it reproduces the trailing verification
/// window. `verify_len` defaults to `degree_bound + 3` and is truncated to
/// the available data.
pub fn fit_polynomial(
    seq: &GrowthSequence,
    degree_bound: usize,
    verify_len: Option<usize>,
) -> Result<Option<UnivariatePolynomial>> {
    let n = seq.values.len();
    let needed = degree_bound + 2;
    if n < needed {
        return Err(Error::InsufficientData { needed, available: n });
    }
    let fit_len = degree_bound + 1;
    let start = (n - fit_len) as u64 + 1;
    let p = newton_forward(start, &seq.values[n - fit_len..]);
    let window = verify_len.unwrap_or(degree_bound + 3).min(n);
    let ok = (n - window..n).all(|i| p.eval_count(i as i64 + 1) == Some(seq.values[i]));
    Ok(ok.then_some(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> BTreeSet<Element> {
        v.iter().map(|&x| Element::Lattice(vec![x])).collect()
    }

    #[test]
    fn sumset_examples() {
        let a = GeneratorTuple::integers(&[0, 1, 3]).unwrap();
        assert_eq!(sumset(&a, 2).unwrap(), ints(&[0, 1, 2, 3, 4, 6]));
        let b = GeneratorTuple::residues(2, &[1]).unwrap();
        assert_eq!(sumset(&b, 3).unwrap(), BTreeSet::from([Element::Residue(1)]));
        let z = GeneratorTuple::integers(&[0]).unwrap();
        for h in 1..5 {
            assert_eq!(sumset(&z, h).unwrap(), ints(&[0]));
        }
        assert!(sumset(&a, 0).is_err());
    }

    #[test]
    fn sumset_cap() {
        let a = GeneratorTuple::integers(&[0, 1, 3]).unwrap();
        assert!(matches!(sumset_capped(&a, 5, 4), Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn growth_examples() {
        let a = GeneratorTuple::integers(&[0, 1, 3]).unwrap();
        assert_eq!(growth_sequence(&a, 6).unwrap().values, vec![3, 6, 9, 12, 15, 18]);
        let b = GeneratorTuple::residues(6, &[0, 1]).unwrap();
        assert_eq!(growth_sequence(&b, 8).unwrap().values, vec![2, 3, 4, 5, 6, 6, 6, 6]);
        let spec = SemigroupSpec::lattice(2).unwrap();
        let tri = GeneratorTuple::new(
            spec,
            vec![
                Element::Lattice(vec![0, 0]),
                Element::Lattice(vec![1, 0]),
                Element::Lattice(vec![0, 1]),
            ],
        )
        .unwrap();
        let seq = growth_sequence(&tri, 7).unwrap();
        for h in 1..=7u64 {
            assert_eq!(seq.at(h), Some(u128::from((h + 1) * (h + 2) / 2)));
        }
        assert_eq!(seq.at(0), None);
    }

    #[test]
    fn linear_form_examples() {
        let a1 = GeneratorTuple::integers(&[0, 1]).unwrap();
        let a2 = GeneratorTuple::integers(&[0, 2]).unwrap();
        assert_eq!(linear_form_sumset(&[a1, a2], &[2, 1]).unwrap(), ints(&[0, 1, 2, 3, 4]));
        let a = GeneratorTuple::integers(&[0, 1, 3]).unwrap();
        assert_eq!(linear_form_sumset(&[a], &[2]).unwrap(), ints(&[0, 1, 2, 3, 4, 6]));
        let z = GeneratorTuple::integers(&[0]).unwrap();
        assert_eq!(linear_form_sumset(&[z.clone(), z], &[3, 4]).unwrap(), ints(&[0]));
    }

    #[test]
    fn linear_form_rejects_mixed_specs() {
        let a1 = GeneratorTuple::integers(&[0, 1]).unwrap();
        let a2 = GeneratorTuple::residues(5, &[0, 1]).unwrap();
        assert_eq!(linear_form_sumset(&[a1.clone(), a2], &[1, 1]), Err(Error::SpecMismatch));
        assert!(linear_form_sumset(&[a1], &[1, 1]).is_err());
    }

    #[test]
    fn fit_examples() {
        let p = fit_polynomial(&GrowthSequence::new(vec![3, 6, 9, 12, 15]), 1, None)
            .unwrap()
            .unwrap();
        assert_eq!(p, UnivariatePolynomial::from_integers(&[0, 3]));
        let p = fit_polynomial(&GrowthSequence::new(vec![2, 3, 4, 5, 6, 6, 6, 6]), 1, None)
            .unwrap()
            .unwrap();
        assert_eq!(p, UnivariatePolynomial::from_integers(&[6]));
        assert_eq!(
            fit_polynomial(&GrowthSequence::new(vec![1, 2, 4, 8]), 1, None).unwrap(),
            None
        );
        assert_eq!(
            fit_polynomial(&GrowthSequence::new(vec![1, 2]), 1, None),
            Err(Error::InsufficientData {
                needed: 3,
                available: 2
            })
        );
    }

    #[test]
    fn fit_recovers_quadratic() {
        let values: Vec<u128> = (1..=9u128).map(|h| (h + 1) * (h + 2) / 2).collect();
        let p = fit_polynomial(&GrowthSequence::new(values), 2, None).unwrap().unwrap();
        let two = BigRational::from_integer(BigInt::from(2));
        let expected = UnivariatePolynomial::from_integers(&[2, 3, 1]).scale(&(BigRational::one() / two));
        assert_eq!(p, expected);
    }
}

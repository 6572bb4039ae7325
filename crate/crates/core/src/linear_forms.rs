//! Multivariate growth engine for linear forms `h_1 A_1 + ... + h_r A_r`.
//!
//! Lattice points are split into `r` blocks, one per set, and graded by the
//! tuple of block heights. The useless ideal is defined slice by slice on
//! that grading, and the count of each multi-slice outside the ideal factors
//! block by block, giving a polynomial in `h_1, ..., h_r`.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::fibers::classify;
use crate::khovanskii::{
    count_b, describe_set, join_coefficients, DicksonBasis, ExplorationConfig, UselessSet, Verdict,
};
use crate::lattice::{binomial_polynomial, coordinatewise_max, count_sigma, enumerate_sigma_capped, LatticePoint};
use crate::oracle::{set_sum, sumset_capped};
use crate::poly::MultivariatePolynomial;
use crate::semigroup::{Element, GeneratorTuple, SemigroupSpec};

/// Sizes `(k_1, ..., k_r)` of the coordinate blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockStructure {
    sizes: Vec<usize>,
}

impl BlockStructure {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidArgument(format!("invalid block sizes {sizes:?}")));
        }
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `(start, len)` of each block.
    pub fn ranges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.sizes.iter().scan(0, |start, &len| {
            let s = *start;
            *start += len;
            Some((s, len))
        })
    }

    fn check_point(&self, x: &LatticePoint) -> Result<()> {
        if x.dim() != self.total() {
            return Err(Error::DimensionMismatch {
                expected: self.total(),
                found: x.dim(),
            });
        }
        Ok(())
    }

    fn check_heights(&self, hs: &MultiHeight) -> Result<()> {
        if hs.0.len() != self.r() {
            return Err(Error::DimensionMismatch {
                expected: self.r(),
                found: hs.0.len(),
            });
        }
        Ok(())
    }

    /// Splits `x` into its blocks.
    pub fn split(&self, x: &LatticePoint) -> Vec<LatticePoint> {
        self.ranges().map(|(s, l)| x.block(s, l)).collect()
    }
}

/// Tuple of block heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiHeight(pub Vec<u64>);

impl MultiHeight {
    pub fn heights(&self) -> &[u64] {
        &self.0
    }
}

pub fn r_height(x: &LatticePoint, blocks: &BlockStructure) -> Result<MultiHeight> {
    blocks.check_point(x)?;
    Ok(MultiHeight(blocks.split(x).iter().map(LatticePoint::height).collect()))
}

pub fn count_sigma_multi(blocks: &BlockStructure, hs: &MultiHeight) -> Result<u128> {
    blocks.check_heights(hs)?;
    Ok(blocks
        .sizes()
        .iter()
        .zip(&hs.0)
        .map(|(&k, &h)| count_sigma(k, h))
        .product())
}

/// Points with the given block heights, in lexicographic order.
pub fn enumerate_sigma_multi(blocks: &BlockStructure, hs: &MultiHeight, cap: u128) -> Result<Vec<LatticePoint>> {
    let size = count_sigma_multi(blocks, hs)?;
    if size > cap {
        return Err(Error::ResourceCap {
            what: "multi-height slice",
            size,
            cap,
        });
    }
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for (&k, &h) in blocks.sizes().iter().zip(&hs.0) {
        let slice = enumerate_sigma_capped(k, h, cap)?;
        out = out
            .iter()
            .flat_map(|prefix| {
                slice.points.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p.coords());
                    v
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(LatticePoint::new).collect())
}

/// `|B(h_1, ..., h_r, W)|` as the product of per-block counts of the
/// projections of `w`.
pub fn count_b_multi(hs: &MultiHeight, w: &[LatticePoint], blocks: &BlockStructure) -> Result<u128> {
    blocks.check_heights(hs)?;
    for p in w {
        blocks.check_point(p)?;
    }
    let mut total = 1;
    for (j, (start, len)) in blocks.ranges().enumerate() {
        let projected: Vec<LatticePoint> = w.iter().map(|p| p.block(start, len)).collect();
        total *= count_b(hs.0[j], &projected, len)?;
    }
    Ok(total)
}

/// Concatenated generators of `A_1, ..., A_r` over one semigroup.
#[derive(Debug, Clone)]
struct LinearForm {
    spec: SemigroupSpec,
    gens: Vec<Element>,
    blocks: BlockStructure,
}

impl LinearForm {
    fn new(sets: &[GeneratorTuple]) -> Result<Self> {
        let first = sets.first().ok_or(Error::EmptySet)?;
        if sets.iter().any(|a| a.spec() != first.spec()) {
            return Err(Error::SpecMismatch);
        }
        Ok(Self {
            spec: first.spec().clone(),
            gens: sets.iter().flat_map(|a| a.generators().iter().cloned()).collect(),
            blocks: BlockStructure::new(sets.iter().map(GeneratorTuple::k).collect())?,
        })
    }

    /// Classifies one multi-slice; returns the points and their useless flags.
    fn slice(&self, hs: &MultiHeight, cap: u128) -> Result<(Vec<LatticePoint>, Vec<bool>)> {
        let points = enumerate_sigma_multi(&self.blocks, hs, cap)?;
        let fibers = classify(&self.spec, &self.gens, &points);
        Ok((points, fibers.useless))
    }
}

/// Every multi-height in `[0, bound]^r` with at least one entry equal to
/// `bound`, by ascending total height and then lexicographically.
fn shell(r: usize, bound: u64) -> Vec<MultiHeight> {
    let mut all: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..r {
        all = all
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |h| {
                    let mut q = p.clone();
                    q.push(h);
                    q
                })
            })
            .collect();
    }
    let mut out: Vec<MultiHeight> = all
        .into_iter()
        .filter(|hs| hs.contains(&bound))
        .map(MultiHeight)
        .collect();
    out.sort_by(|a, b| {
        let ta: u64 = a.0.iter().sum();
        let tb: u64 = b.0.iter().sum();
        ta.cmp(&tb).then_with(|| a.cmp(b))
    });
    out
}

/// r-useless points with every block height at most `bound`.
pub fn r_useless_points(sets: &[GeneratorTuple], bound: u64, cap: u128) -> Result<UselessSet> {
    let form = LinearForm::new(sets)?;
    let mut points = BTreeSet::new();
    for level in 0..=bound {
        for hs in shell(form.blocks.r(), level) {
            let (pts, useless) = form.slice(&hs, cap)?;
            points.extend(pts.into_iter().zip(useless).filter_map(|(p, u)| u.then_some(p)));
        }
    }
    Ok(UselessSet {
        k: form.blocks.total(),
        height_bound: bound,
        points,
    })
}

/// Minimal r-useless points, deepening one shared block-height bound.
pub fn dickson_basis_multi(sets: &[GeneratorTuple], config: &ExplorationConfig) -> Result<DicksonBasis> {
    let form = LinearForm::new(sets)?;
    dickson_basis_for(&form, config)
}

fn dickson_basis_for(form: &LinearForm, config: &ExplorationConfig) -> Result<DicksonBasis> {
    let mut generators: Vec<LatticePoint> = Vec::new();
    let mut last_new = 0;
    let mut bound = 0;
    let finish = |mut generators: Vec<LatticePoint>, bound: u64, last_new: u64, stable: bool| {
        generators.sort();
        DicksonBasis {
            generators,
            explored_height: bound,
            stable_margin: bound - last_new,
            stable,
        }
    };
    while bound < config.max_height_bound {
        bound += 1;
        for hs in shell(form.blocks.r(), bound) {
            let (points, useless) = form.slice(&hs, config.enum_cap)?;
            for (p, u) in points.into_iter().zip(useless) {
                if u && !generators.iter().any(|g| p.dominates(g)) {
                    generators.push(p);
                    last_new = bound;
                }
            }
        }
        if bound >= config.height_bound && bound - last_new >= config.stable_margin {
            return Ok(finish(generators, bound, last_new, true));
        }
    }
    Ok(finish(generators, bound, last_new, false))
}

/// `sum over W of (-1)^|W| prod_j binomial_polynomial(k_j, ht(w_j*(W)))`
/// with thresholds given by the block heights of the join of the basis.
pub fn multivariate_polynomial(
    basis: &DicksonBasis,
    blocks: &BlockStructure,
    subset_cap: usize,
) -> Result<MultivariatePolynomial> {
    if basis.generators.len() > subset_cap {
        return Err(Error::SubsetCap {
            size: basis.generators.len(),
            cap: subset_cap,
        });
    }
    let coeffs = join_coefficients(&basis.generators, blocks.total())?;
    let mut p = MultivariatePolynomial::zero(blocks.r());
    for (w, c) in coeffs {
        let factors: Vec<_> = blocks
            .split(&w)
            .iter()
            .zip(blocks.sizes())
            .map(|(part, &k)| binomial_polynomial(k, part.height()))
            .collect();
        p.add_assign(&MultivariatePolynomial::product_of(
            &factors,
            &BigRational::from_integer(BigInt::from(c)),
        ));
    }
    let thresholds = if basis.generators.is_empty() {
        vec![0; blocks.r()]
    } else {
        r_height(&coordinatewise_max(&basis.generators)?, blocks)?.0
    };
    p.set_thresholds(thresholds);
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormReport {
    pub description: String,
    pub blocks: BlockStructure,
    pub config: ExplorationConfig,
    pub basis: Option<DicksonBasis>,
    pub polynomial: Option<MultivariatePolynomial>,
    /// Per-variable inclusive ranges; the verified set is their product.
    pub verified_grid: Option<Vec<(u64, u64)>>,
    /// `|h_1 A_1 + ... + h_r A_r|` at each checked grid point.
    pub oracle_grid: Vec<(Vec<u64>, u128)>,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
    pub elapsed_ms: u128,
}

/// Cartesian product of inclusive ranges, lexicographic.
pub fn grid_points(ranges: &[(u64, u64)]) -> Vec<Vec<u64>> {
    ranges.iter().fold(vec![Vec::new()], |acc, &(lo, hi)| {
        acc.into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |h| {
                    let mut q = p.clone();
                    q.push(h);
                    q
                })
            })
            .collect()
    })
}

fn grid_size(ranges: &[(u64, u64)]) -> u128 {
    ranges.iter().map(|&(lo, hi)| u128::from(hi - lo + 1)).product()
}

/// Oracle counts on a grid, reusing per-block sumsets.
pub fn oracle_grid(
    sets: &[GeneratorTuple],
    ranges: &[(u64, u64)],
    element_cap: usize,
) -> Result<Vec<(Vec<u64>, u128)>> {
    let form = LinearForm::new(sets)?;
    let blocks: Vec<Vec<BTreeSet<Element>>> = sets
        .iter()
        .zip(ranges)
        .map(|(a, &(lo, hi))| (lo..=hi).map(|h| sumset_capped(a, h, element_cap)).collect())
        .collect::<Result<_>>()?;
    grid_points(ranges)
        .into_iter()
        .map(|hs| {
            let mut acc = BTreeSet::from([form.spec.identity()]);
            for (j, &h) in hs.iter().enumerate() {
                let block = &blocks[j][(h - ranges[j].0) as usize];
                acc = set_sum(&form.spec, &acc, block, element_cap)?;
            }
            Ok((hs, acc.len() as u128))
        })
        .collect()
}

struct Attempt {
    basis: Option<DicksonBasis>,
    polynomial: Option<MultivariatePolynomial>,
    verified_grid: Option<Vec<(u64, u64)>>,
    oracle: Vec<(Vec<u64>, u128)>,
    first_failure: Option<Vec<u64>>,
    diagnostics: Vec<String>,
}

fn attempt(sets: &[GeneratorTuple], form: &LinearForm, config: &ExplorationConfig) -> Attempt {
    let mut out = Attempt {
        basis: None,
        polynomial: None,
        verified_grid: None,
        oracle: Vec::new(),
        first_failure: None,
        diagnostics: Vec::new(),
    };
    let basis = match dickson_basis_for(form, config) {
        Ok(b) => b,
        Err(e) => {
            out.diagnostics.push(format!("basis discovery stopped: {e}"));
            return out;
        }
    };
    if !basis.stable {
        out.diagnostics.push(format!(
            "no stable basis by block height {} (last {} levels quiet, {} required)",
            basis.explored_height, basis.stable_margin, config.stable_margin
        ));
    }
    out.basis = Some(basis.clone());
    let poly = match multivariate_polynomial(&basis, &form.blocks, config.subset_cap) {
        Ok(p) => p,
        Err(e) => {
            out.diagnostics.push(e.to_string());
            return out;
        }
    };
    out.polynomial = Some(poly.clone());

    let max_k = *form.blocks.sizes().iter().max().unwrap_or(&1) as u64;
    let mut window = (max_k + 2).max(config.window);
    let ranges = |w: u64| -> Vec<(u64, u64)> { poly.thresholds().iter().map(|&t| (t.max(1), t + w)).collect() };
    while window > 1 && grid_size(&ranges(window)) > config.grid_cap as u128 {
        window -= 1;
    }
    let grid = ranges(window);
    if grid_size(&grid) > config.grid_cap as u128 {
        out.diagnostics.push(format!(
            "certification grid exceeds the cap of {} points",
            config.grid_cap
        ));
        return out;
    }
    if window < max_k + 2 {
        out.diagnostics
            .push(format!("certification window shrunk to {window} by the grid cap"));
    }
    match oracle_grid(sets, &grid, config.element_cap) {
        Ok(values) => out.oracle = values,
        Err(e) => {
            out.diagnostics.push(format!("oracle could not cover the grid: {e}"));
            return out;
        }
    }
    let failure = out.oracle.iter().find(|(hs, v)| {
        let point: Vec<i64> = hs.iter().map(|&h| h as i64).collect();
        poly.eval_count(&point) != Some(*v)
    });
    match failure {
        None => out.verified_grid = Some(grid),
        Some((hs, v)) => {
            let point: Vec<i64> = hs.iter().map(|&h| h as i64).collect();
            out.diagnostics.push(format!(
                "polynomial gives {} at {hs:?}, oracle gives {v}",
                poly.eval(&point)
            ));
            out.first_failure = Some(hs.clone());
        }
    }
    out
}

/// Basis discovery on the r-useless ideal, polynomial assembly, and
/// certification on the grid `prod_j [h0_j, h0_j + window]`.
///
/// Fails only on malformed input (no sets, or sets over different
/// semigroups); resource limits produce an `Inconclusive` report.
pub fn analyze_linear_form(sets: &[GeneratorTuple], config: &ExplorationConfig) -> Result<LinearFormReport> {
    let started = Instant::now();
    let form = LinearForm::new(sets)?;
    let mut config = config.clone();
    let mut run = attempt(sets, &form, &config);
    let mut retry_note = None;
    if let Some(hs) = &run.first_failure {
        let explored = run.basis.as_ref().map_or(0, |b| b.explored_height);
        let hint = run
            .oracle
            .iter()
            .flat_map(|(p, _)| p.iter().copied())
            .max()
            .unwrap_or(0);
        config = config.deepened(explored, hint);
        retry_note = Some(format!(
            "mismatch at {hs:?}; retried with height bound {} (max {})",
            config.height_bound, config.max_height_bound
        ));
        run = attempt(sets, &form, &config);
    }
    let stable = run.basis.as_ref().is_some_and(|b| b.stable);
    let verdict = if run.first_failure.is_some() {
        Verdict::Mismatch
    } else if run.verified_grid.is_some() && stable {
        Verdict::Certified
    } else {
        Verdict::Inconclusive
    };
    let mut diagnostics: Vec<String> = retry_note.into_iter().collect();
    diagnostics.extend(run.diagnostics);
    let description = sets.iter().map(describe_set).collect::<Vec<_>>().join(" + ");
    Ok(LinearFormReport {
        description,
        blocks: form.blocks,
        config,
        basis: run.basis,
        polynomial: run.polynomial,
        verified_grid: run.verified_grid,
        oracle_grid: run.oracle,
        verdict,
        diagnostics,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanskii::{analyze, useless_points};
    use crate::lattice::UnivariatePolynomial;
    use crate::oracle::linear_form_sumset;

    fn pt(c: &[u32]) -> LatticePoint {
        LatticePoint::new(c.to_vec())
    }

    fn blocks(s: &[usize]) -> BlockStructure {
        BlockStructure::new(s.to_vec()).unwrap()
    }

    fn mh(h: &[u64]) -> MultiHeight {
        MultiHeight(h.to_vec())
    }

    fn ints(v: &[i64]) -> GeneratorTuple {
        GeneratorTuple::integers(v).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn r_height_examples() {
        assert_eq!(r_height(&pt(&[1, 2, 5]), &blocks(&[2, 1])).unwrap(), mh(&[3, 5]));
        assert_eq!(r_height(&pt(&[4, 0, 2]), &blocks(&[3])).unwrap(), mh(&[6]));
        assert_eq!(r_height(&pt(&[2, 0, 4]), &blocks(&[1, 1, 1])).unwrap(), mh(&[2, 0, 4]));
        assert!(r_height(&pt(&[1, 2]), &blocks(&[2, 1])).is_err());
        assert!(BlockStructure::new(vec![]).is_err());
        assert!(BlockStructure::new(vec![2, 0]).is_err());
    }

    #[test]
    fn multi_slice_examples() {
        let b = blocks(&[2, 2]);
        let s = enumerate_sigma_multi(&b, &mh(&[1, 1]), 1000).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        let unit = blocks(&[1, 1, 1]);
        assert_eq!(
            enumerate_sigma_multi(&unit, &mh(&[3, 0, 2]), 10).unwrap(),
            vec![pt(&[3, 0, 2])]
        );
        assert!(enumerate_sigma_multi(&b, &mh(&[5, 5]), 10).is_err());
    }

    #[test]
    fn count_multi_examples() {
        assert_eq!(count_sigma_multi(&blocks(&[2, 2]), &mh(&[3, 2])).unwrap(), 12);
        assert_eq!(count_sigma_multi(&blocks(&[3]), &mh(&[4])).unwrap(), count_sigma(3, 4));
        assert_eq!(count_sigma_multi(&blocks(&[3, 1, 2]), &mh(&[0, 0, 0])).unwrap(), 1);
        assert!(count_sigma_multi(&blocks(&[3, 1]), &mh(&[0])).is_err());
    }

    #[test]
    fn count_b_multi_examples() {
        let b = blocks(&[2, 2]);
        assert_eq!(count_b_multi(&mh(&[3, 2]), &[], &b).unwrap(), 12);
        assert_eq!(count_b_multi(&mh(&[1, 1]), &[pt(&[1, 0, 0, 1])], &b).unwrap(), 1);
        assert_eq!(count_b_multi(&mh(&[0, 1]), &[pt(&[1, 0, 0, 1])], &b).unwrap(), 0);
    }

    #[test]
    fn count_b_multi_matches_filtering() {
        let b = blocks(&[2, 3]);
        let ws = [
            vec![pt(&[1, 0, 0, 1, 1])],
            vec![pt(&[0, 2, 1, 0, 0]), pt(&[1, 0, 0, 0, 2])],
            vec![pt(&[0, 0, 0, 0, 0]), pt(&[2, 1, 0, 1, 0]), pt(&[0, 1, 1, 1, 1])],
        ];
        for w in &ws {
            for h1 in 0..5 {
                for h2 in 0..5 {
                    let hs = mh(&[h1, h2]);
                    let direct = enumerate_sigma_multi(&b, &hs, 10_000)
                        .unwrap()
                        .iter()
                        .filter(|x| w.iter().all(|g| x.dominates(g)))
                        .count() as u128;
                    assert_eq!(count_b_multi(&hs, w, &b).unwrap(), direct);
                }
            }
        }
    }

    #[test]
    fn r_useless_examples() {
        let sets = [ints(&[0, 1]), ints(&[0, 1])];
        let u = r_useless_points(&sets, 1, 1000).unwrap();
        assert!(u.contains(&pt(&[1, 0, 0, 1])));
        assert!(!u.contains(&pt(&[0, 1, 1, 0])));

        let z2 = SemigroupSpec::lattice(2).unwrap();
        let e = |v: [i64; 2]| Element::Lattice(v.to_vec());
        let a1 = GeneratorTuple::new(z2.clone(), vec![e([0, 0]), e([1, 0])]).unwrap();
        let a2 = GeneratorTuple::new(z2, vec![e([0, 0]), e([0, 1])]).unwrap();
        assert!(r_useless_points(&[a1, a2], 4, 1000).unwrap().points.is_empty());

        // r = 1 agrees with the univariate engine
        let a = ints(&[0, 1, 2]);
        assert_eq!(
            r_useless_points(std::slice::from_ref(&a), 5, 1000).unwrap().points,
            useless_points(&a, 5).unwrap().points
        );
    }

    #[test]
    fn rejects_mixed_specs() {
        let sets = [ints(&[0, 1]), GeneratorTuple::residues(3, &[1]).unwrap()];
        assert!(matches!(
            analyze_linear_form(&sets, &ExplorationConfig::default()),
            Err(Error::SpecMismatch)
        ));
        assert!(analyze_linear_form(&[], &ExplorationConfig::default()).is_err());
    }

    #[test]
    fn polynomial_examples() {
        let empty = DicksonBasis {
            generators: vec![],
            explored_height: 4,
            stable_margin: 4,
            stable: true,
        };
        let b = blocks(&[2, 3]);
        let p = multivariate_polynomial(&empty, &b, 24).unwrap();
        for h1 in 0..6 {
            for h2 in 0..6 {
                assert_eq!(
                    p.eval_count(&[h1, h2]),
                    Some(count_sigma(2, h1 as u64) * count_sigma(3, h2 as u64))
                );
            }
        }
        assert_eq!(p.thresholds(), &[0, 0]);
    }

    #[test]
    fn analyze_examples() {
        let cfg = ExplorationConfig::default();
        let r = analyze_linear_form(&[ints(&[0, 1]), ints(&[0, 1])], &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Certified, "{:?}", r.diagnostics);
        let expected = MultivariatePolynomial::from_terms(
            2,
            [(vec![1, 0], q(1)), (vec![0, 1], q(1)), (vec![0, 0], q(1))],
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(r.polynomial.unwrap().terms(), expected.terms());

        let r = analyze_linear_form(&[ints(&[0, 1]), ints(&[0, 2])], &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Certified, "{:?}", r.diagnostics);
        let p = r.polynomial.unwrap();
        let expected = MultivariatePolynomial::from_terms(
            2,
            [(vec![1, 0], q(1)), (vec![0, 1], q(2)), (vec![0, 0], q(1))],
            vec![0, 0],
        )
        .unwrap();
        assert_eq!(p.terms(), expected.terms());
        for h1 in 1..6u64 {
            for h2 in 1..6u64 {
                let direct = linear_form_sumset(&[ints(&[0, 1]), ints(&[0, 2])], &[h1, h2]);
                assert_eq!(
                    p.eval_count(&[h1 as i64, h2 as i64]),
                    Some(direct.unwrap().len() as u128)
                );
            }
        }

        let z2 = GeneratorTuple::residues(2, &[1]).unwrap();
        let r = analyze_linear_form(&[z2.clone(), z2], &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(
            r.polynomial.unwrap().terms(),
            MultivariatePolynomial::from_terms(2, [(vec![0, 0], q(1))], vec![0, 0])
                .unwrap()
                .terms()
        );
    }

    #[test]
    fn single_set_matches_univariate() {
        let a = ints(&[0, 1, 2]);
        let cfg = ExplorationConfig::default();
        let multi = analyze_linear_form(std::slice::from_ref(&a), &cfg).unwrap();
        let uni = analyze(&a, &cfg);
        assert_eq!(multi.verdict, uni.verdict);
        let up = uni.polynomial.unwrap();
        let mp = multi.polynomial.unwrap();
        assert_eq!(mp.to_univariate().unwrap(), up.polynomial);
        assert_eq!(mp.thresholds(), &[up.threshold]);
        assert_eq!(multi.basis, uni.basis);
        assert_eq!(
            mp.to_univariate().unwrap(),
            UnivariatePolynomial::from_integers(&[1, 2])
        );
    }
}

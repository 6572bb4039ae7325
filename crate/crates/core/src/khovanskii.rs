//! Univariate growth engine.
//!
//! Each value `s` of `hA` has a unique lexicographically smallest preimage in
//! the height-`h` slice. Every other preimage is *useless*, and the useless
//! points form an upward-closed ideal of `N_0^k`. `|hA|` is the number of
//! points of the slice outside that ideal, which inclusion-exclusion over the
//! ideal's minimal generators turns into a polynomial in `h`.
//!
//! The generators are found by iterative deepening over heights until no new
//! one has appeared for a configurable number of consecutive heights, and the
//! resulting polynomial is certified against the brute-force oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::fibers::classify;
use crate::lattice::{
    binomial_polynomial, coordinatewise_max, count_sigma, enumerate_sigma_capped, LatticePoint, UnivariatePolynomial,
    DEFAULT_ENUM_CAP,
};
use crate::oracle::{growth_sequence_capped, GrowthSequence, DEFAULT_ELEMENT_CAP};
use crate::semigroup::{Element, GeneratorTuple};

/// Limits governing basis discovery and certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationConfig {
    /// Smallest height the basis search explores before it may stop.
    pub height_bound: u64,
    /// Hard ceiling on the explored height.
    pub max_height_bound: u64,
    /// Consecutive heights without a new generator required to stop.
    pub stable_margin: u64,
    /// Minimum certification window length beyond the threshold.
    pub window: u64,
    /// Largest basis for which inclusion-exclusion is attempted.
    pub subset_cap: usize,
    /// Largest slice the engine will enumerate.
    pub enum_cap: u128,
    /// Largest sumset the oracle will materialize.
    pub element_cap: usize,
    /// Largest number of grid points checked when certifying a linear form.
    pub grid_cap: usize,
}

impl Default for ExplorationConfig {
    fn default() -> Self {
        Self {
            height_bound: 6,
            max_height_bound: 40,
            stable_margin: 3,
            window: 4,
            subset_cap: 24,
            enum_cap: DEFAULT_ENUM_CAP,
            element_cap: DEFAULT_ELEMENT_CAP,
            grid_cap: 4096,
        }
    }
}

impl ExplorationConfig {
    /// Configuration for the single automatic retry after a mismatch.
    /// `hint` is a height that the retry must explore.
    pub(crate) fn deepened(&self, explored: u64, hint: u64) -> Self {
        let height_bound = (2 * explored).max(hint).max(self.height_bound + 1);
        Self {
            height_bound,
            max_height_bound: (2 * self.max_height_bound).max(height_bound),
            stable_margin: 2 * self.stable_margin.max(1),
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Certified,
    Mismatch,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::Mismatch => "mismatch",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "certified" => Some(Verdict::Certified),
            "mismatch" => Some(Verdict::Mismatch),
            "inconclusive" => Some(Verdict::Inconclusive),
            _ => None,
        }
    }
}

/// Useless points of height at most `height_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UselessSet {
    pub k: usize,
    pub height_bound: u64,
    pub points: BTreeSet<LatticePoint>,
}

impl UselessSet {
    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.points.contains(x)
    }

    pub fn count_at_height(&self, h: u64) -> usize {
        self.points.iter().filter(|p| p.height() == h).count()
    }
}

/// Minimal generators of the useless ideal found up to `explored_height`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicksonBasis {
    /// Antichain, sorted lexicographically.
    pub generators: Vec<LatticePoint>,
    pub explored_height: u64,
    /// Consecutive top heights that contributed no generator.
    pub stable_margin: u64,
    /// Whether the required margin was reached before the height ceiling.
    pub stable: bool,
}

impl DicksonBasis {
    /// Whether `x` lies in the ideal generated by the basis.
    pub fn covers(&self, x: &LatticePoint) -> bool {
        self.generators.iter().any(|g| x.dominates(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthPolynomial {
    pub polynomial: UnivariatePolynomial,
    /// `p(h) = |hA|` is claimed for every `h >= threshold`.
    pub threshold: u64,
    /// Basis the polynomial was assembled from.
    pub generators: Vec<LatticePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub description: String,
    pub k: usize,
    /// Configuration of the final attempt, including any automatic deepening.
    pub config: ExplorationConfig,
    pub basis: Option<DicksonBasis>,
    pub polynomial: Option<GrowthPolynomial>,
    /// Inclusive range of `h` on which the polynomial matched the oracle.
    pub verified_range: Option<(u64, u64)>,
    pub oracle_sequence: GrowthSequence,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
    pub elapsed_ms: u128,
}

/// Maps each value of `hA` to its lexicographically smallest preimage in the
/// height-`h` slice.
pub fn canonical_representatives(a: &GeneratorTuple, h: u64) -> Result<BTreeMap<Element, LatticePoint>> {
    canonical_representatives_capped(a, h, DEFAULT_ENUM_CAP)
}

pub fn canonical_representatives_capped(
    a: &GeneratorTuple,
    h: u64,
    cap: u128,
) -> Result<BTreeMap<Element, LatticePoint>> {
    if h == 0 {
        return Err(Error::InvalidArgument("representatives are defined for h >= 1".into()));
    }
    let slice = enumerate_sigma_capped(a.k(), h, cap)?;
    let fibers = classify(a.spec(), a.generators(), &slice.points);
    Ok(fibers
        .representatives()
        .map(|i| (fibers.images[i].clone(), slice.points[i].clone()))
        .collect())
}

pub fn useless_points(a: &GeneratorTuple, height_bound: u64) -> Result<UselessSet> {
    useless_points_capped(a, height_bound, DEFAULT_ENUM_CAP)
}

pub fn useless_points_capped(a: &GeneratorTuple, height_bound: u64, cap: u128) -> Result<UselessSet> {
    let mut points = BTreeSet::new();
    for h in 1..=height_bound {
        let slice = enumerate_sigma_capped(a.k(), h, cap)?;
        let fibers = classify(a.spec(), a.generators(), &slice.points);
        points.extend(
            slice
                .points
                .into_iter()
                .zip(fibers.useless)
                .filter_map(|(p, u)| u.then_some(p)),
        );
    }
    Ok(UselessSet {
        k: a.k(),
        height_bound,
        points,
    })
}

/// Searches heights `1, 2, ...` for minimal useless points.
///
/// A useless point of height `h` is a new generator iff it dominates none of
/// the generators found so far: anything strictly below it has smaller
/// height and was classified earlier, and the useless set is upward closed.
pub fn dickson_basis(a: &GeneratorTuple, config: &ExplorationConfig) -> Result<DicksonBasis> {
    let mut generators: Vec<LatticePoint> = Vec::new();
    let mut last_new = 0;
    let mut h = 0;
    while h < config.max_height_bound {
        h += 1;
        let slice = enumerate_sigma_capped(a.k(), h, config.enum_cap)?;
        let fibers = classify(a.spec(), a.generators(), &slice.points);
        let fresh: Vec<LatticePoint> = slice
            .points
            .into_iter()
            .zip(fibers.useless)
            .filter(|(p, u)| *u && !generators.iter().any(|g| p.dominates(g)))
            .map(|(p, _)| p)
            .collect();
        if !fresh.is_empty() {
            last_new = h;
            generators.extend(fresh);
        }
        if h >= config.height_bound && h - last_new >= config.stable_margin {
            generators.sort();
            return Ok(DicksonBasis {
                generators,
                explored_height: h,
                stable_margin: h - last_new,
                stable: true,
            });
        }
    }
    generators.sort();
    Ok(DicksonBasis {
        generators,
        explored_height: h,
        stable_margin: h - last_new,
        stable: false,
    })
}

fn check_dims(w: &[LatticePoint], k: usize) -> Result<()> {
    match w.iter().find(|p| p.dim() != k) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: k,
            found: p.dim(),
        }),
        None => Ok(()),
    }
}

/// Number of points of the height-`h` slice that dominate every point of
/// `w`, via the translate of a smaller slice by the coordinatewise maximum.
pub fn count_b(h: u64, w: &[LatticePoint], k: usize) -> Result<u128> {
    check_dims(w, k)?;
    let top = if w.is_empty() {
        LatticePoint::zero(k)
    } else {
        coordinatewise_max(w)?
    };
    Ok(h.checked_sub(top.height()).map_or(0, |rest| count_sigma(k, rest)))
}

/// Signed inclusion-exclusion weights keyed by the coordinatewise maximum of
/// each subset: `c(w) = sum over subsets W with max(W) = w of (-1)^|W|`.
///
/// Built by folding in one generator at a time, so subsets sharing a
/// maximum are merged as they arise. Zero weights are dropped.
pub fn join_coefficients(generators: &[LatticePoint], k: usize) -> Result<BTreeMap<LatticePoint, i64>> {
    check_dims(generators, k)?;
    let mut coeffs: BTreeMap<LatticePoint, i64> = BTreeMap::from([(LatticePoint::zero(k), 1)]);
    for g in generators {
        let joined: Vec<(LatticePoint, i64)> = coeffs.iter().map(|(w, &c)| (w.join(g), c)).collect();
        for (w, c) in joined {
            *coeffs.entry(w).or_insert(0) -= c;
        }
        coeffs.retain(|_, c| *c != 0);
    }
    Ok(coeffs)
}

fn check_subset_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::SubsetCap { size, cap });
    }
    Ok(())
}

/// Sums `c(w) * binomial_polynomial(k, ht(w))` over the join coefficients
/// of the basis. Valid from the height of the join of the whole basis.
pub fn khovanskii_polynomial(basis: &DicksonBasis, k: usize, subset_cap: usize) -> Result<GrowthPolynomial> {
    check_subset_cap(basis.generators.len(), subset_cap)?;
    let coeffs = join_coefficients(&basis.generators, k)?;
    let polynomial = coeffs.iter().fold(UnivariatePolynomial::zero(), |acc, (w, &c)| {
        let term = binomial_polynomial(k, w.height()).scale(&BigRational::from_integer(BigInt::from(c)));
        &acc + &term
    });
    let threshold = if basis.generators.is_empty() {
        0
    } else {
        coordinatewise_max(&basis.generators)?.height()
    };
    Ok(GrowthPolynomial {
        polynomial,
        threshold,
        generators: basis.generators.clone(),
    })
}

pub(crate) fn describe_set(a: &GeneratorTuple) -> String {
    let gens: Vec<String> = a.generators().iter().map(Element::to_string).collect();
    format!("{{{}}} in {}", gens.join(", "), a.spec())
}

struct Attempt {
    basis: Option<DicksonBasis>,
    polynomial: Option<GrowthPolynomial>,
    verified_range: Option<(u64, u64)>,
    oracle: GrowthSequence,
    first_failure: Option<u64>,
    diagnostics: Vec<String>,
}

fn attempt(a: &GeneratorTuple, config: &ExplorationConfig) -> Attempt {
    let mut out = Attempt {
        basis: None,
        polynomial: None,
        verified_range: None,
        oracle: GrowthSequence::new(Vec::new()),
        first_failure: None,
        diagnostics: Vec::new(),
    };
    let basis = match dickson_basis(a, config) {
        Ok(b) => b,
        Err(e) => {
            out.diagnostics.push(format!("basis discovery stopped: {e}"));
            return out;
        }
    };
    if !basis.stable {
        out.diagnostics.push(format!(
            "no stable basis by height {} (last {} heights quiet, {} required)",
            basis.explored_height, basis.stable_margin, config.stable_margin
        ));
    }
    out.basis = Some(basis.clone());
    let poly = match khovanskii_polynomial(&basis, a.k(), config.subset_cap) {
        Ok(p) => p,
        Err(e) => {
            out.diagnostics.push(e.to_string());
            return out;
        }
    };
    out.polynomial = Some(poly.clone());
    let lo = poly.threshold.max(1);
    let hi = poly.threshold + (a.k() as u64 + 2).max(config.window);
    match growth_sequence_capped(a, hi, config.element_cap) {
        Ok(seq) => out.oracle = seq,
        Err(e) => {
            out.diagnostics.push(format!("oracle could not reach h = {hi}: {e}"));
            return out;
        }
    }
    out.first_failure = (lo..=hi).find(|&h| poly.polynomial.eval_count(h as i64) != out.oracle.at(h));
    match out.first_failure {
        None => out.verified_range = Some((lo, hi)),
        Some(h) => out.diagnostics.push(format!(
            "polynomial gives {} at h = {h}, oracle gives {}",
            poly.polynomial.eval(h as i64),
            out.oracle.at(h).unwrap_or_default()
        )),
    }
    out
}

/// Discovers the basis, assembles the polynomial, and certifies it against
/// the oracle on `[h0, h0 + max(k + 2, window)]`.
///
/// A disagreement triggers one rerun with a deeper exploration before the
/// mismatch is reported. Resource limits never surface as errors: they turn
/// the verdict into `Inconclusive` with a diagnostic.
pub fn analyze(a: &GeneratorTuple, config: &ExplorationConfig) -> AnalysisReport {
    let started = Instant::now();
    let mut config = config.clone();
    let mut run = attempt(a, &config);
    let mut retry_note = None;
    if let Some(h) = run.first_failure {
        let explored = run.basis.as_ref().map_or(0, |b| b.explored_height);
        let hi = run.oracle.h_max();
        config = config.deepened(explored, hi.max(h));
        retry_note = Some(format!(
            "mismatch at h = {h}; retried with height bound {} (max {})",
            config.height_bound, config.max_height_bound
        ));
        run = attempt(a, &config);
    }
    let stable = run.basis.as_ref().is_some_and(|b| b.stable);
    let verdict = if run.first_failure.is_some() {
        Verdict::Mismatch
    } else if run.verified_range.is_some() && stable {
        Verdict::Certified
    } else {
        Verdict::Inconclusive
    };
    let mut diagnostics: Vec<String> = retry_note.into_iter().collect();
    diagnostics.extend(run.diagnostics);
    AnalysisReport {
        description: describe_set(a),
        k: a.k(),
        config,
        basis: run.basis,
        polynomial: run.polynomial,
        verified_range: run.verified_range,
        oracle_sequence: run.oracle,
        verdict,
        diagnostics,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

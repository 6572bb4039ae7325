//! JSON instance and report files.
//!
//! Instance schema:
//!
//! ```json
//! {"semigroup": {"type": "lattice", "dim": 1}, "sets": [[0, 1, 3]]}
//! ```
//!
//! with `{"type":"modular","n":6}`, `{"type":"cayley","size":n,"table":[[..]]}`
//! and `{"type":"product","factors":[..]}` as the other semigroup variants.
//! Element payloads are integers for `modular` and `cayley`, arrays of `dim`
//! integers for `lattice` (a bare integer is accepted when `dim` is 1), and
//! arrays with one payload per factor for `product`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::khovanskii::{AnalysisReport, DicksonBasis, ExplorationConfig, Verdict};
use crate::linear_forms::LinearFormReport;
use crate::poly::{format_rational, parse_rational, MultivariatePolynomial};
use crate::semigroup::{Element, GeneratorTuple, SemigroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SemigroupJson {
    Lattice { dim: usize },
    Modular { n: u64 },
    Cayley { size: usize, table: Vec<Vec<usize>> },
    Product { factors: Vec<SemigroupJson> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub semigroup: SemigroupJson,
    pub sets: Vec<Vec<Value>>,
}

/// Validation failure while turning an instance file into semigroup data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct InstanceError {
    pub path: String,
    pub message: String,
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> InstanceError {
    InstanceError {
        path: path.into(),
        message: message.into(),
    }
}

impl SemigroupJson {
    pub fn to_spec(&self) -> Result<SemigroupSpec, InstanceError> {
        self.to_spec_at("semigroup")
    }

    fn to_spec_at(&self, path: &str) -> Result<SemigroupSpec, InstanceError> {
        let wrap = |e: Error| invalid(path, e.to_string());
        match self {
            SemigroupJson::Lattice { dim } => SemigroupSpec::lattice(*dim).map_err(wrap),
            SemigroupJson::Modular { n } => SemigroupSpec::modular(*n).map_err(wrap),
            SemigroupJson::Cayley { size, table } => {
                if table.len() != *size {
                    return Err(invalid(
                        path,
                        format!("size is {size} but the table has {} rows", table.len()),
                    ));
                }
                SemigroupSpec::cayley(table.clone()).map_err(wrap)
            }
            SemigroupJson::Product { factors } => {
                let specs = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.to_spec_at(&format!("{path}.factors[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                SemigroupSpec::product(specs).map_err(wrap)
            }
        }
    }

    pub fn from_spec(spec: &SemigroupSpec) -> Self {
        match spec {
            SemigroupSpec::Lattice { dim } => SemigroupJson::Lattice { dim: *dim },
            SemigroupSpec::Modular { modulus } => SemigroupJson::Modular { n: *modulus },
            SemigroupSpec::Cayley(t) => SemigroupJson::Cayley {
                size: t.size(),
                table: t.rows(),
            },
            SemigroupSpec::Product(fs) => SemigroupJson::Product {
                factors: fs.iter().map(Self::from_spec).collect(),
            },
        }
    }
}

fn as_int(v: &Value, path: &str) -> Result<i64, InstanceError> {
    v.as_i64()
        .ok_or_else(|| invalid(path, format!("expected an integer, found {v}")))
}

fn as_index(v: &Value, bound: u64, path: &str) -> Result<u64, InstanceError> {
    match v.as_u64() {
        Some(i) if i < bound => Ok(i),
        _ => Err(invalid(path, format!("expected an integer in [0, {bound}), found {v}"))),
    }
}

pub fn parse_element(spec: &SemigroupSpec, v: &Value, path: &str) -> Result<Element, InstanceError> {
    match spec {
        SemigroupSpec::Lattice { dim } => match v {
            Value::Array(xs) if xs.len() == *dim => xs
                .iter()
                .enumerate()
                .map(|(i, x)| as_int(x, &format!("{path}[{i}]")))
                .collect::<Result<_, _>>()
                .map(Element::Lattice),
            Value::Number(_) if *dim == 1 => Ok(Element::Lattice(vec![as_int(v, path)?])),
            _ => Err(invalid(path, format!("expected a vector of {dim} integers, found {v}"))),
        },
        SemigroupSpec::Modular { modulus } => as_index(v, *modulus, path).map(Element::Residue),
        SemigroupSpec::Cayley(t) => as_index(v, t.size() as u64, path).map(|i| Element::Cayley(i as usize)),
        SemigroupSpec::Product(fs) => match v {
            Value::Array(xs) if xs.len() == fs.len() => fs
                .iter()
                .zip(xs)
                .enumerate()
                .map(|(i, (f, x))| parse_element(f, x, &format!("{path}[{i}]")))
                .collect::<Result<_, _>>()
                .map(Element::Product),
            _ => Err(invalid(
                path,
                format!("expected an array of {} factor payloads, found {v}", fs.len()),
            )),
        },
    }
}

pub fn element_to_json(e: &Element) -> Value {
    match e {
        Element::Lattice(v) if v.len() == 1 => Value::from(v[0]),
        Element::Lattice(v) => Value::from(v.clone()),
        Element::Residue(r) => Value::from(*r),
        Element::Cayley(i) => Value::from(*i),
        Element::Product(es) => Value::Array(es.iter().map(element_to_json).collect()),
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Builds one generator tuple per set; all share the file's semigroup.
    pub fn tuples(&self) -> Result<Vec<GeneratorTuple>, InstanceError> {
        let spec = self.semigroup.to_spec()?;
        if self.sets.is_empty() {
            return Err(invalid("sets", "at least one set is required"));
        }
        self.sets
            .iter()
            .enumerate()
            .map(|(i, set)| {
                let elems = set
                    .iter()
                    .enumerate()
                    .map(|(j, v)| parse_element(&spec, v, &format!("sets[{i}][{j}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                GeneratorTuple::new(spec.clone(), elems).map_err(|e| invalid(format!("sets[{i}]"), e.to_string()))
            })
            .collect()
    }

    /// Canonical form of the analyzed sets: normalized payloads with
    /// duplicates removed.
    pub fn from_tuples(tuples: &[GeneratorTuple]) -> Self {
        Self {
            semigroup: SemigroupJson::from_spec(tuples[0].spec()),
            sets: tuples
                .iter()
                .map(|a| a.generators().iter().map(element_to_json).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub height_bound: u64,
    pub max_height_bound: u64,
    pub stable_margin: u64,
    pub window: u64,
    pub subset_cap: usize,
    pub enum_cap: u64,
    pub element_cap: usize,
    pub grid_cap: usize,
}

impl From<&ExplorationConfig> for ConfigEcho {
    fn from(c: &ExplorationConfig) -> Self {
        Self {
            height_bound: c.height_bound,
            max_height_bound: c.max_height_bound,
            stable_margin: c.stable_margin,
            window: c.window,
            subset_cap: c.subset_cap,
            enum_cap: u64::try_from(c.enum_cap).unwrap_or(u64::MAX),
            element_cap: c.element_cap,
            grid_cap: c.grid_cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub generators: Vec<Vec<u32>>,
    pub explored_height: u64,
    pub stable_margin: u64,
    pub stable: bool,
}

impl From<&DicksonBasis> for BasisJson {
    fn from(b: &DicksonBasis) -> Self {
        Self {
            generators: b.generators.iter().map(|g| g.coords().to_vec()).collect(),
            explored_height: b.explored_height,
            stable_margin: b.stable_margin,
            stable: b.stable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    /// Exact rational, `"num/den"`.
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub variables: usize,
    pub display: String,
    pub terms: Vec<TermJson>,
    pub thresholds: Vec<u64>,
}

impl PolynomialJson {
    pub fn from_polynomial(p: &MultivariatePolynomial) -> Self {
        let display = match p.to_univariate() {
            Some(u) => u.to_string(),
            None => p.to_string(),
        };
        Self {
            variables: p.variables(),
            display,
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| TermJson {
                    exponents: e.clone(),
                    coefficient: format_rational(c),
                })
                .collect(),
            thresholds: p.thresholds().to_vec(),
        }
    }

    pub fn to_polynomial(&self) -> Result<MultivariatePolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exponents.clone(), parse_rational(&t.coefficient)?)))
            .collect::<Result<Vec<_>>>()?;
        MultivariatePolynomial::from_terms(self.variables, terms, self.thresholds.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValue {
    pub h: Vec<u64>,
    pub cardinality: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    Khovanskii,
    LinearForm,
}

/// Serialized analysis report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub kind: ReportKind,
    pub instance: InstanceFile,
    pub config: ConfigEcho,
    pub description: String,
    pub basis: Option<BasisJson>,
    pub polynomial: Option<PolynomialJson>,
    /// One inclusive `[lo, hi]` range per variable.
    pub verified_range: Option<Vec<[u64; 2]>>,
    pub oracle_values: Vec<OracleValue>,
    pub verdict: String,
    pub diagnostics: Vec<String>,
    pub timing: Option<Timing>,
}

fn timing(ms: u128, with_timing: bool) -> Option<Timing> {
    with_timing.then(|| Timing {
        elapsed_ms: u64::try_from(ms).unwrap_or(u64::MAX),
    })
}

fn count_u64(v: u128) -> u64 {
    u64::try_from(v).unwrap_or(u64::MAX)
}

impl ReportFile {
    pub fn from_univariate(tuple: &GeneratorTuple, r: &AnalysisReport, with_timing: bool) -> Self {
        Self {
            kind: ReportKind::Khovanskii,
            instance: InstanceFile::from_tuples(std::slice::from_ref(tuple)),
            config: ConfigEcho::from(&r.config),
            description: r.description.clone(),
            basis: r.basis.as_ref().map(BasisJson::from),
            polynomial: r.polynomial.as_ref().map(|p| {
                PolynomialJson::from_polynomial(&MultivariatePolynomial::from_univariate(&p.polynomial, p.threshold))
            }),
            verified_range: r.verified_range.map(|(lo, hi)| vec![[lo, hi]]),
            oracle_values: r
                .oracle_sequence
                .values
                .iter()
                .enumerate()
                .map(|(i, &v)| OracleValue {
                    h: vec![i as u64 + 1],
                    cardinality: count_u64(v),
                })
                .collect(),
            verdict: r.verdict.as_str().to_string(),
            diagnostics: r.diagnostics.clone(),
            timing: timing(r.elapsed_ms, with_timing),
        }
    }

    pub fn from_linear_form(tuples: &[GeneratorTuple], r: &LinearFormReport, with_timing: bool) -> Self {
        Self {
            kind: ReportKind::LinearForm,
            instance: InstanceFile::from_tuples(tuples),
            config: ConfigEcho::from(&r.config),
            description: r.description.clone(),
            basis: r.basis.as_ref().map(BasisJson::from),
            polynomial: r.polynomial.as_ref().map(PolynomialJson::from_polynomial),
            verified_range: r
                .verified_grid
                .as_ref()
                .map(|g| g.iter().map(|&(lo, hi)| [lo, hi]).collect()),
            oracle_values: r
                .oracle_grid
                .iter()
                .map(|(h, v)| OracleValue {
                    h: h.clone(),
                    cardinality: count_u64(*v),
                })
                .collect(),
            verdict: r.verdict.as_str().to_string(),
            diagnostics: r.diagnostics.clone(),
            timing: timing(r.elapsed_ms, with_timing),
        }
    }

    pub fn verdict(&self) -> Option<Verdict> {
        Verdict::parse(&self.verdict)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

//! Effective abelian semigroups: canonical elements, addition, identity, and
//! the homomorphism from `N_0^k` determined by a generator tuple.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

/// Description of a computable abelian semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SemigroupSpec {
    /// `Z^dim` under vector addition.
    Lattice { dim: usize },
    /// `Z/nZ`.
    Modular { modulus: u64 },
    /// A finite commutative semigroup given by its operation table.
    Cayley(CayleyTable),
    /// Direct product, componentwise.
    Product(Vec<SemigroupSpec>),
}

/// Canonical element payload. Equality of payloads is equality of elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Lattice(Vec<i64>),
    Residue(u64),
    Cayley(usize),
    Product(Vec<Element>),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Lattice(v) if v.len() == 1 => write!(f, "{}", v[0]),
            Element::Lattice(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            Element::Residue(r) => write!(f, "{r}"),
            Element::Cayley(i) => write!(f, "#{i}"),
            Element::Product(es) => {
                let parts: Vec<String> = es.iter().map(Element::to_string).collect();
                write!(f, "<{}>", parts.join(";"))
            }
        }
    }
}

/// The first axiom violation found while validating an operation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CayleyViolation {
    Empty,
    NotSquare { row: usize, len: usize, expected: usize },
    OutOfRange { row: usize, col: usize, value: usize },
    NonCommutative { a: usize, b: usize },
    NonAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for CayleyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyViolation::Empty => write!(f, "table is empty"),
            CayleyViolation::NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            CayleyViolation::OutOfRange { row, col, value } => {
                write!(f, "entry [{row}][{col}] = {value} is out of range")
            }
            CayleyViolation::NonCommutative { a, b } => {
                write!(f, "not commutative: {a}+{b} != {b}+{a}")
            }
            CayleyViolation::NonAssociative { a, b, c } => {
                write!(f, "not associative: ({a}+{b})+{c} != {a}+({b}+{c})")
            }
        }
    }
}

/// Checks that `table` is a commutative, associative operation on `0..n`.
#[allow(clippy::needless_range_loop)]
pub fn validate_cayley(table: &[Vec<usize>]) -> Result<(), CayleyViolation> {
    let n = table.len();
    if n == 0 {
        return Err(CayleyViolation::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(CayleyViolation::NotSquare {
                row,
                len: r.len(),
                expected: n,
            });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(CayleyViolation::OutOfRange { row, col, value });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if table[a][b] != table[b][a] {
                return Err(CayleyViolation::NonCommutative { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(CayleyViolation::NonAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// A validated operation table. When the table has no identity, an extra
/// element with index `size` is adjoined and acts as the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    size: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        validate_cayley(&table).map_err(|v| Error::InvalidSemigroup(v.to_string()))?;
        let size = table.len();
        let found = (0..size).find(|&e| (0..size).all(|s| table[e][s] == s));
        match found {
            Some(identity) => Ok(Self { size, table, identity }),
            None => {
                let mut ext: Vec<Vec<usize>> = table
                    .into_iter()
                    .enumerate()
                    .map(|(i, mut row)| {
                        row.push(i);
                        row
                    })
                    .collect();
                ext.push((0..=size).collect());
                Ok(Self {
                    size,
                    table: ext,
                    identity: size,
                })
            }
        }
    }

    /// Number of elements in the user-supplied table.
    pub fn size(&self) -> usize {
        self.size
    }

    /// The user-supplied rows, without any adjoined identity.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table[..self.size]
            .iter()
            .map(|r| r[..self.size].to_vec())
            .collect()
    }

    pub fn has_adjoined_identity(&self) -> bool {
        self.identity == self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn contains(&self, i: usize) -> bool {
        i < self.table.len()
    }
}

impl SemigroupSpec {
    pub fn lattice(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidSemigroup("lattice dimension must be at least 1".into()));
        }
        Ok(SemigroupSpec::Lattice { dim })
    }

    pub fn integers() -> Self {
        SemigroupSpec::Lattice { dim: 1 }
    }

    pub fn modular(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidSemigroup("modulus must be at least 1".into()));
        }
        Ok(SemigroupSpec::Modular { modulus })
    }

    pub fn cayley(table: Vec<Vec<usize>>) -> Result<Self> {
        CayleyTable::new(table).map(SemigroupSpec::Cayley)
    }

    pub fn product(factors: Vec<SemigroupSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSemigroup("product needs at least one factor".into()));
        }
        Ok(SemigroupSpec::Product(factors))
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (SemigroupSpec::Lattice { dim }, Element::Lattice(v)) => v.len() == *dim,
            (SemigroupSpec::Modular { modulus }, Element::Residue(r)) => r < modulus,
            (SemigroupSpec::Cayley(t), Element::Cayley(i)) => t.contains(*i),
            (SemigroupSpec::Product(fs), Element::Product(es)) => {
                fs.len() == es.len() && fs.iter().zip(es).all(|(f, e)| f.contains(e))
            }
            _ => false,
        }
    }

    fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::Membership {
                element: e.to_string(),
                spec: self.to_string(),
            })
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            SemigroupSpec::Lattice { dim } => Element::Lattice(vec![0; *dim]),
            SemigroupSpec::Modular { .. } => Element::Residue(0),
            SemigroupSpec::Cayley(t) => Element::Cayley(t.identity()),
            SemigroupSpec::Product(fs) => Element::Product(fs.iter().map(Self::identity).collect()),
        }
    }

    pub fn add(&self, s: &Element, t: &Element) -> Result<Element> {
        self.check(s)?;
        self.check(t)?;
        Ok(self.add_unchecked(s, t))
    }

    /// Addition for operands already known to belong to `self`.
    pub(crate) fn add_unchecked(&self, s: &Element, t: &Element) -> Element {
        match (self, s, t) {
            (SemigroupSpec::Lattice { .. }, Element::Lattice(a), Element::Lattice(b)) => {
                Element::Lattice(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (SemigroupSpec::Modular { modulus }, Element::Residue(a), Element::Residue(b)) => {
                Element::Residue(((u128::from(*a) + u128::from(*b)) % u128::from(*modulus)) as u64)
            }
            (SemigroupSpec::Cayley(table), Element::Cayley(a), Element::Cayley(b)) => Element::Cayley(table.op(*a, *b)),
            (SemigroupSpec::Product(fs), Element::Product(a), Element::Product(b)) => Element::Product(
                fs.iter()
                    .zip(a.iter().zip(b))
                    .map(|(f, (x, y))| f.add_unchecked(x, y))
                    .collect(),
            ),
            _ => unreachable!("operands were not members of the semigroup"),
        }
    }

    /// `s` added to itself `n` times, by repeated doubling.
    pub fn scalar_multiple(&self, n: u64, s: &Element) -> Result<Element> {
        self.check(s)?;
        Ok(self.scalar_multiple_unchecked(n, s))
    }

    pub(crate) fn scalar_multiple_unchecked(&self, mut n: u64, s: &Element) -> Element {
        let mut acc = self.identity();
        if n == 0 {
            return acc;
        }
        let mut base = s.clone();
        loop {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            n >>= 1;
            if n == 0 {
                return acc;
            }
            base = self.add_unchecked(&base, &base);
        }
    }
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupSpec::Lattice { dim: 1 } => write!(f, "Z"),
            SemigroupSpec::Lattice { dim } => write!(f, "Z^{dim}"),
            SemigroupSpec::Modular { modulus } => write!(f, "Z/{modulus}"),
            SemigroupSpec::Cayley(t) => write!(f, "cayley({})", t.size()),
            SemigroupSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(Self::to_string).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

/// An ordered, duplicate-free list of generators `a_1, ..., a_k` of a subset
/// `A` of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorTuple {
    spec: SemigroupSpec,
    generators: Vec<Element>,
}

impl GeneratorTuple {
    /// Removes duplicates, keeping first occurrences in their original order.
    pub fn new(spec: SemigroupSpec, generators: Vec<Element>) -> Result<Self> {
        let mut uniq: Vec<Element> = Vec::with_capacity(generators.len());
        for g in generators {
            spec.check(&g)?;
            if !uniq.contains(&g) {
                uniq.push(g);
            }
        }
        if uniq.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(Self { spec, generators: uniq })
    }

    /// Generators in `Z`, given as plain integers.
    pub fn integers(values: &[i64]) -> Result<Self> {
        Self::new(
            SemigroupSpec::integers(),
            values.iter().map(|&v| Element::Lattice(vec![v])).collect(),
        )
    }

    pub fn residues(modulus: u64, values: &[u64]) -> Result<Self> {
        Self::new(
            SemigroupSpec::modular(modulus)?,
            values.iter().map(|&v| Element::Residue(v)).collect(),
        )
    }

    pub fn spec(&self) -> &SemigroupSpec {
        &self.spec
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Number of distinct generators.
    pub fn k(&self) -> usize {
        self.generators.len()
    }

    /// Same set, generators reordered by `perm` (`perm[i]` is the old index
    /// of the new `i`-th generator).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.k()];
        if perm.len() != self.k()
            || perm
                .iter()
                .any(|&i| i >= self.k() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::InvalidArgument("not a permutation of the generators".into()));
        }
        Ok(Self {
            spec: self.spec.clone(),
            generators: perm.iter().map(|&i| self.generators[i].clone()).collect(),
        })
    }

    /// `f(x) = sum_i x_i a_i`.
    pub fn evaluate_hom(&self, x: &LatticePoint) -> Result<Element> {
        if x.dim() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                found: x.dim(),
            });
        }
        Ok(self.evaluate_unchecked(x.coords()))
    }

    pub(crate) fn evaluate_unchecked(&self, coords: &[u32]) -> Element {
        evaluate_on(&self.spec, &self.generators, coords)
    }
}

/// `sum_i coords[i] * gens[i]` for a raw generator list, which may contain
/// repeats (concatenated blocks of a linear form do).
pub(crate) fn evaluate_on(spec: &SemigroupSpec, gens: &[Element], coords: &[u32]) -> Element {
    coords
        .iter()
        .zip(gens)
        .filter(|(c, _)| **c > 0)
        .fold(spec.identity(), |acc, (&c, a)| {
            let term = spec.scalar_multiple_unchecked(u64::from(c), a);
            spec.add_unchecked(&acc, &term)
        })
}

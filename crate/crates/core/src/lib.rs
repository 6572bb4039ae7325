//! Eventual polynomial growth of sumsets `hA` and linear forms
//! `h_1 A_1 + ... + h_r A_r` in computable abelian semigroups.
//!
//! The engines map `N_0^k` onto the semigroup through the generators of `A`,
//! mark every point that is not the lexicographically smallest preimage of
//! its value as useless, extract the finitely many minimal useless points,
//! and count the remaining points of each height slice by
//! inclusion-exclusion. Every polynomial is certified against a brute-force
//! oracle before it is reported.
//!
//! ```
//! use sumset_growth::{analyze, ExplorationConfig, GeneratorTuple, Verdict};
//!
//! let a = GeneratorTuple::integers(&[0, 1, 2]).unwrap();
//! let report = analyze(&a, &ExplorationConfig::default());
//! assert_eq!(report.verdict, Verdict::Certified);
//! assert_eq!(report.polynomial.unwrap().polynomial.to_string(), "2/1·h + 1/1");
//! ```

pub mod cli;
pub mod error;
mod fibers;
pub mod khovanskii;
pub mod lattice;
pub mod linear_forms;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod semigroup;

pub use error::{Error, Result};
pub use khovanskii::{analyze, AnalysisReport, DicksonBasis, ExplorationConfig, GrowthPolynomial, Verdict};
pub use lattice::{LatticePoint, UnivariatePolynomial};
pub use linear_forms::{analyze_linear_form, BlockStructure, LinearFormReport};
pub use poly::MultivariatePolynomial;
pub use semigroup::{Element, GeneratorTuple, SemigroupSpec};

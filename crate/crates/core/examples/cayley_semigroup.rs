// Growth in a finite semigroup given by its table.

use sumset_growth::semigroup::{Element, SemigroupSpec};
use sumset_growth::{analyze, ExplorationConfig, GeneratorTuple, Verdict};

pub fn run_example() -> sumset_growth::Result<Verdict> {
    // max-semilattice on {0, 1, 2, 3}; 0 is the identity
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i.max(j)).collect()).collect();
    let spec = SemigroupSpec::cayley(table)?;
    let a = GeneratorTuple::new(spec, vec![Element::Cayley(1), Element::Cayley(3)])?;
    let report = analyze(&a, &ExplorationConfig::default());
    println!("{}: {}", report.description, report.verdict.as_str());
    if let Some(p) = &report.polynomial {
        println!("|hA| = {} for h >= {}", p.polynomial, p.threshold);
    }
    Ok(report.verdict)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

// |h1 A1 + h2 A2| as a polynomial in two variables.

use sumset_growth::{analyze_linear_form, ExplorationConfig, GeneratorTuple, Verdict};

pub fn run_example() -> sumset_growth::Result<Verdict> {
    let sets = [GeneratorTuple::integers(&[0, 1])?, GeneratorTuple::integers(&[0, 2])?];
    let report = analyze_linear_form(&sets, &ExplorationConfig::default())?;
    println!("{}: {}", report.description, report.verdict.as_str());
    if let Some(p) = &report.polynomial {
        println!("p = {p}, valid from {:?}", p.thresholds());
    }
    for (hs, v) in report.oracle_grid.iter().take(6) {
        println!("  h = {hs:?}: {v}");
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

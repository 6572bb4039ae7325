// Find and certify the eventual polynomial of |hA|.

use sumset_growth::{analyze, ExplorationConfig, GeneratorTuple, Verdict};

pub fn run_example() -> sumset_growth::Result<Verdict> {
    let a = GeneratorTuple::integers(&[0, 1, 2])?;
    let report = analyze(&a, &ExplorationConfig::default());
    println!("{}: {}", report.description, report.verdict.as_str());
    if let Some(p) = &report.polynomial {
        println!("|hA| = {} for h >= {}", p.polynomial, p.threshold);
    }
    if let Some((lo, hi)) = report.verified_range {
        println!("checked against the oracle on {lo}..={hi}");
    }
    Ok(report.verdict)
}

#[allow(dead_code)]
fn main() {
    match run_example() {
        Ok(Verdict::Certified) => {}
        Ok(v) => std::process::exit(if v == Verdict::Mismatch { 4 } else { 5 }),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}

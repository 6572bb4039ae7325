// Brute-force |hA| for a few small sets.

use sumset_growth::oracle::growth_sequence;
use sumset_growth::GeneratorTuple;

pub fn run_example() -> sumset_growth::Result<Vec<u128>> {
    let a = GeneratorTuple::integers(&[0, 1, 3])?;
    let seq = growth_sequence(&a, 8)?;
    for (i, v) in seq.values.iter().enumerate() {
        println!("|{}A| = {v}", i + 1);
    }
    Ok(seq.values)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

// Useless points and their minimal generators for a 2-dimensional set.

use sumset_growth::khovanskii::{dickson_basis, useless_points};
use sumset_growth::semigroup::{Element, SemigroupSpec};
use sumset_growth::{ExplorationConfig, GeneratorTuple};

pub fn run_example() -> sumset_growth::Result<usize> {
    // 0, e1, e2 and e1 + e2: the last generator collides with e1 + e2
    let spec = SemigroupSpec::lattice(2)?;
    let gens = [[0, 0], [1, 0], [0, 1], [1, 1]]
        .iter()
        .map(|c| Element::Lattice(c.to_vec()))
        .collect();
    let a = GeneratorTuple::new(spec, gens)?;

    let useless = useless_points(&a, 3)?;
    for h in 1..=3 {
        println!("height {h}: {} useless points", useless.count_at_height(h));
    }

    let basis = dickson_basis(&a, &ExplorationConfig::default())?;
    println!("explored to height {}, stable: {}", basis.explored_height, basis.stable);
    for g in &basis.generators {
        println!("  {g}");
    }
    Ok(basis.generators.len())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

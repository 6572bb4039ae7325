// Write a JSON report and read it back, as the CLI does.

use sumset_growth::report::{InstanceFile, ReportFile};
use sumset_growth::{analyze, ExplorationConfig};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let text = r#"{"semigroup": {"type": "modular", "n": 6}, "sets": [[0, 1]]}"#;
    let tuples = InstanceFile::parse(text)?.tuples()?;
    let report = analyze(&tuples[0], &ExplorationConfig::default());
    let json = ReportFile::from_univariate(&tuples[0], &report, false).to_json();
    let back = ReportFile::from_json(&json)?;
    assert_eq!(back.to_json(), json);
    print!("{json}");
    Ok(json)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

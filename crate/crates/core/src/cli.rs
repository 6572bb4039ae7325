//! Command-line front end.
//!
//! Exit codes: `0` success (or a certified report), `2` parse or validation
//! error, `3` resource cap hit by `grow`, `4` mismatch (or a failed
//! `verify`), `5` inconclusive analysis.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::khovanskii::{analyze, ExplorationConfig, Verdict};
use crate::lattice::DEFAULT_ENUM_CAP;
use crate::linear_forms::{analyze_linear_form, oracle_grid};
use crate::oracle::{growth_sequence_capped, DEFAULT_ELEMENT_CAP};
use crate::report::{InstanceFile, ReportFile, ReportKind};
use crate::semigroup::GeneratorTuple;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_INCONCLUSIVE: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "sumset-growth",
    version,
    about = "Polynomial growth of sumsets in abelian semigroups"
)]
pub struct Cli {
    /// Worker threads for slice classification (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print |hA| for h = 1..h_max by brute force.
    Grow {
        instance: PathBuf,
        #[arg(long, default_value_t = 10)]
        h_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Largest sumset materialized before giving up.
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
    },
    /// Find the polynomial p with |hA| = p(h) for large h and certify it.
    Khovanskii(AnalysisArgs),
    /// Find the polynomial in h_1..h_r for |h_1 A_1 + ... + h_r A_r|.
    LinearForm(AnalysisArgs),
    /// Recheck a saved report against the oracle.
    Verify { report: PathBuf, instance: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    pub instance: PathBuf,
    #[command(flatten)]
    pub engine: EngineArgs,
    /// Write the JSON report here in addition to the formatted output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Leave the timing field of the report empty.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct EngineArgs {
    /// Smallest height explored before the basis search may stop.
    #[arg(long, default_value_t = 6)]
    pub height_bound: u64,
    /// Ceiling on the explored height.
    #[arg(long, default_value_t = 40)]
    pub max_height_bound: u64,
    /// Consecutive heights without a new generator needed to stop.
    #[arg(long, default_value_t = 3)]
    pub stable_margin: u64,
    /// Minimum certification window beyond the threshold.
    #[arg(long, default_value_t = 4)]
    pub window: u64,
    /// Largest basis handed to inclusion-exclusion.
    #[arg(long, default_value_t = 24)]
    pub subset_cap: usize,
    /// Largest height slice enumerated.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP as u64)]
    pub enum_cap: u64,
    /// Largest sumset materialized by the oracle.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub element_cap: usize,
    /// Largest certification grid for linear forms.
    #[arg(long, default_value_t = 4096)]
    pub grid_cap: usize,
}

impl From<&EngineArgs> for ExplorationConfig {
    fn from(a: &EngineArgs) -> Self {
        Self {
            height_bound: a.height_bound,
            max_height_bound: a.max_height_bound,
            stable_margin: a.stable_margin,
            window: a.window,
            subset_cap: a.subset_cap,
            enum_cap: u128::from(a.enum_cap),
            element_cap: a.element_cap,
            grid_cap: a.grid_cap,
        }
    }
}

/// Failure that ends a command with a specific exit code.
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

type CmdResult = Result<i32, Exit>;

fn read_instance(path: &Path) -> Result<(InstanceFile, Vec<GeneratorTuple>), Exit> {
    let text = fs::read_to_string(path).map_err(|e| Exit::input(format!("{}: {e}", path.display())))?;
    let inst = InstanceFile::parse(&text).map_err(|e| Exit::input(format!("{}: {e}", path.display())))?;
    let tuples = inst
        .tuples()
        .map_err(|e| Exit::input(format!("{}: {e}", path.display())))?;
    Ok((inst, tuples))
}

fn io_error(e: std::io::Error) -> Exit {
    Exit::input(format!("write failed: {e}"))
}

fn cmd_grow(path: &Path, h_max: u64, format: Format, element_cap: usize, out: &mut dyn Write) -> CmdResult {
    let (_, tuples) = read_instance(path)?;
    let [a] = tuples.as_slice() else {
        return Err(Exit::input(format!(
            "{}: grow takes exactly one set, found {}",
            path.display(),
            tuples.len()
        )));
    };
    let seq = growth_sequence_capped(a, h_max, element_cap).map_err(|e| Exit {
        code: if e.is_resource() { EXIT_RESOURCE } else { EXIT_INPUT },
        message: e.to_string(),
    })?;
    let rows = seq.values.iter().enumerate().map(|(i, v)| (i + 1, *v));
    match format {
        Format::Table => {
            writeln!(out, "{:>6}  {:>12}", "h", "|hA|").map_err(io_error)?;
            for (h, v) in rows {
                writeln!(out, "{h:>6}  {v:>12}").map_err(io_error)?;
            }
        }
        Format::Csv => {
            writeln!(out, "h,cardinality").map_err(io_error)?;
            for (h, v) in rows {
                writeln!(out, "{h},{v}").map_err(io_error)?;
            }
        }
        Format::Json => {
            let values: Vec<_> = rows
                .map(|(h, v)| serde_json::json!({"h": h, "cardinality": v as u64}))
                .collect();
            let doc = serde_json::json!({"h_max": h_max, "values": values});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(io_error)?;
        }
    }
    Ok(EXIT_OK)
}

fn verdict_code(v: Option<Verdict>) -> i32 {
    match v {
        Some(Verdict::Certified) => EXIT_OK,
        Some(Verdict::Mismatch) => EXIT_MISMATCH,
        _ => EXIT_INCONCLUSIVE,
    }
}

fn emit_report(report: &ReportFile, args: &AnalysisArgs, out: &mut dyn Write) -> CmdResult {
    let json = report.to_json();
    if let Some(path) = &args.output {
        fs::write(path, &json).map_err(|e| Exit::input(format!("{}: {e}", path.display())))?;
    }
    match args.format {
        Format::Json => out.write_all(json.as_bytes()).map_err(io_error)?,
        Format::Csv => {
            let r = report.oracle_values.first().map_or(1, |v| v.h.len());
            let header: Vec<String> = if r == 1 {
                vec!["h".into()]
            } else {
                (1..=r).map(|j| format!("h{j}")).collect()
            };
            writeln!(out, "{},cardinality", header.join(",")).map_err(io_error)?;
            for v in &report.oracle_values {
                let hs: Vec<String> = v.h.iter().map(u64::to_string).collect();
                writeln!(out, "{},{}", hs.join(","), v.cardinality).map_err(io_error)?;
            }
        }
        Format::Table => {
            writeln!(out, "instance:   {}", report.description).map_err(io_error)?;
            writeln!(out, "verdict:    {}", report.verdict).map_err(io_error)?;
            if let Some(p) = &report.polynomial {
                writeln!(out, "polynomial: {}", p.display).map_err(io_error)?;
                writeln!(out, "threshold:  {:?}", p.thresholds).map_err(io_error)?;
            }
            if let Some(b) = &report.basis {
                writeln!(
                    out,
                    "basis:      {} generators, explored to {}, quiet for {}",
                    b.generators.len(),
                    b.explored_height,
                    b.stable_margin
                )
                .map_err(io_error)?;
            }
            if let Some(v) = &report.verified_range {
                writeln!(out, "verified:   {v:?}").map_err(io_error)?;
            }
            for d in &report.diagnostics {
                writeln!(out, "note:       {d}").map_err(io_error)?;
            }
        }
    }
    Ok(verdict_code(report.verdict()))
}

fn cmd_khovanskii(args: &AnalysisArgs, out: &mut dyn Write) -> CmdResult {
    let (_, tuples) = read_instance(&args.instance)?;
    let [a] = tuples.as_slice() else {
        return Err(Exit::input(format!(
            "{}: khovanskii takes exactly one set, found {} (use linear-form)",
            args.instance.display(),
            tuples.len()
        )));
    };
    let report = analyze(a, &ExplorationConfig::from(&args.engine));
    emit_report(&ReportFile::from_univariate(a, &report, !args.no_timing), args, out)
}

fn cmd_linear_form(args: &AnalysisArgs, out: &mut dyn Write) -> CmdResult {
    let (_, tuples) = read_instance(&args.instance)?;
    let report =
        analyze_linear_form(&tuples, &ExplorationConfig::from(&args.engine)).map_err(|e| Exit::input(e.to_string()))?;
    emit_report(
        &ReportFile::from_linear_form(&tuples, &report, !args.no_timing),
        args,
        out,
    )
}

fn cmd_verify(report_path: &Path, instance_path: &Path, out: &mut dyn Write) -> CmdResult {
    let text = fs::read_to_string(report_path).map_err(|e| Exit::input(format!("{}: {e}", report_path.display())))?;
    let report = ReportFile::from_json(&text).map_err(|e| Exit::input(format!("{}: {e}", report_path.display())))?;
    let (_, tuples) = read_instance(instance_path)?;
    if InstanceFile::from_tuples(&tuples) != report.instance {
        return Err(Exit::input(format!(
            "{} was produced for a different instance than {}",
            report_path.display(),
            instance_path.display()
        )));
    }
    if report.kind == ReportKind::Khovanskii && tuples.len() != 1 {
        return Err(Exit::input("univariate report but the instance has several sets"));
    }
    let mismatch = |message: String| Exit {
        code: EXIT_MISMATCH,
        message,
    };
    let poly = report
        .polynomial
        .as_ref()
        .ok_or_else(|| mismatch("report carries no polynomial".into()))?
        .to_polynomial()
        .map_err(|e| Exit::input(format!("{}: {e}", report_path.display())))?;
    let ranges: Vec<(u64, u64)> = report
        .verified_range
        .as_ref()
        .ok_or_else(|| mismatch("report has no verified range".into()))?
        .iter()
        .map(|&[lo, hi]| (lo, hi))
        .collect();
    if ranges.len() != poly.variables()
        || ranges.len() != tuples.len()
        || ranges.iter().any(|&(lo, hi)| lo == 0 || lo > hi)
    {
        return Err(Exit::input("verified range does not fit the instance"));
    }
    let config = ExplorationConfig::default();
    let values = oracle_grid(&tuples, &ranges, config.element_cap).map_err(|e| Exit {
        code: if e.is_resource() { EXIT_RESOURCE } else { EXIT_INPUT },
        message: e.to_string(),
    })?;
    for (hs, v) in &values {
        let point: Vec<i64> = hs.iter().map(|&h| h as i64).collect();
        let claimed = poly.eval(&point);
        if poly.eval_count(&point) != Some(*v) {
            return Err(mismatch(format!(
                "disagreement at h = {hs:?}: polynomial gives {claimed}, oracle gives {v}"
            )));
        }
    }
    writeln!(out, "verified {} grid points", values.len()).map_err(io_error)?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    if let Some(n) = cli.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = match &cli.command {
        Command::Grow {
            instance,
            h_max,
            format,
            element_cap,
        } => cmd_grow(instance, *h_max, *format, *element_cap, out),
        Command::Khovanskii(args) => cmd_khovanskii(args, out),
        Command::LinearForm(args) => cmd_linear_form(args, out),
        Command::Verify { report, instance } => cmd_verify(report, instance, out),
    };
    match result {
        Ok(code) => code,
        Err(Exit { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

//! `locc`: command-line frontend for `locc-core`.
//!
//! Subcommands:
//!
//! - `analyze` classifies a pair of states (state files or inline Schmidt vectors).
//! - `paper-verify` sweeps the witness construction over the overlap α.
//! - `threshold` locates the α where the witness pair becomes incomparable.
//! - `show-state` dumps the expanded initial or cloned witness state.
//!
//! Exit codes: 0 success, 1 internal inconsistency, 2 malformed input or
//! bad range, 3 normalization failure, 4 write failure, 5 no single
//! verdict boundary.

pub mod error;
pub mod numfmt;
pub mod report;
pub mod statefile;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use locc_core::{
    apply_cloner, build_initial, classify, entanglement_entropy, expand, find_threshold,
    incomparable_fast_path_d3, schmidt_vector, sweep, BlankChoice, QubitSpec, SchmidtVector,
};

pub use error::CliError;
use report::{AnalyzeReport, SweepSummary, ThresholdReport};
use statefile::{StateDump, StateFile};

/// Inline Schmidt vectors must sum to one within this before renormalization.
pub const INLINE_SUM_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "locc", version, about = "Deterministic-LOCC convertibility of bipartite pure states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a pair of states under the majorization criterion.
    Analyze(AnalyzeArgs),
    /// Classify the cloning witness pair on a grid of overlaps.
    PaperVerify(PaperVerifyArgs),
    /// Locate the overlap where the witness pair becomes incomparable.
    Threshold(ThresholdArgs),
    /// Dump the expanded witness state.
    ShowState(ShowStateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// State file for the first state.
    #[arg(long, group = "side_a", value_name = "PATH")]
    pub psi: Option<PathBuf>,
    /// Inline Schmidt vector for the first state, e.g. 0.5,0.5
    #[arg(long, group = "side_a", value_name = "LIST", allow_hyphen_values = true)]
    pub schmidt_a: Option<String>,
    /// State file for the second state.
    #[arg(long, group = "side_b", value_name = "PATH")]
    pub phi: Option<PathBuf>,
    /// Inline Schmidt vector for the second state.
    #[arg(long, group = "side_b", value_name = "LIST", allow_hyphen_values = true)]
    pub schmidt_b: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PaperVerifyArgs {
    #[arg(long, default_value_t = 0.01)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 0.99)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 99)]
    pub steps: usize,
    /// Report file; without it rows go to stdout and the summary to stderr.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, default_value_t = 0.3)]
    pub lo: f64,
    #[arg(long, default_value_t = 0.9)]
    pub hi: f64,
    #[arg(long, default_value_t = 1e-10, allow_hyphen_values = true)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Initial,
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Blank {
    Zero,
    One,
    Plus,
}

impl From<Blank> for BlankChoice {
    fn from(b: Blank) -> Self {
        match b {
            Blank::Zero => BlankChoice::zero(),
            Blank::One => BlankChoice::one(),
            Blank::Plus => BlankChoice::plus(),
        }
    }
}

#[derive(Debug, Args)]
pub struct ShowStateArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = Which::Initial)]
    pub which: Which,
    #[arg(long, value_enum, default_value_t = Blank::Zero)]
    pub blank: Blank,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Runs one subcommand. Primary output goes to `out`, diagnostics and
/// out-of-band summaries to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(&args, out),
        Command::PaperVerify(args) => cmd_paper_verify(&args, out, err),
        Command::Threshold(args) => cmd_threshold(&args, out),
        Command::ShowState(args) => cmd_show_state(&args, out),
    }
}

/// Parses `"0.5,0.25,0.25"`, checks it is a probability vector within
/// [`INLINE_SUM_TOL`], renormalizes and sorts it.
pub fn parse_inline_schmidt(text: &str) -> Result<SchmidtVector, CliError> {
    let values = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Malformed(format!("bad Schmidt entry {s:?}")))
        })
        .collect::<Result<Vec<f64>, _>>()?;
    if values.iter().any(|p| !p.is_finite() || *p < 0.0) {
        return Err(CliError::Malformed(format!(
            "Schmidt entries must be finite and non-negative: {text}"
        )));
    }
    let sum: f64 = values.iter().sum();
    if (sum - 1.0).abs() > INLINE_SUM_TOL {
        return Err(CliError::Malformed(format!(
            "Schmidt vector sums to {sum}, not 1"
        )));
    }
    Ok(SchmidtVector::new(values.iter().map(|p| p / sum).collect())?)
}

fn side(path: &Option<PathBuf>, inline: &Option<String>, name: &str) -> Result<SchmidtVector, CliError> {
    match (path, inline) {
        (Some(p), None) => Ok(schmidt_vector(&StateFile::read(p)?.to_pure_state()?)?),
        (None, Some(s)) => parse_inline_schmidt(s),
        _ => Err(CliError::Malformed(format!(
            "exactly one source needed for {name}"
        ))),
    }
}

pub fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let a = side(&args.psi, &args.schmidt_a, "the first state (--psi or --schmidt-a)")?;
    let b = side(&args.phi, &args.schmidt_b, "the second state (--phi or --schmidt-b)")?;
    let verdict = classify(&a, &b);
    let fast = incomparable_fast_path_d3(&a, &b).ok();
    let report = AnalyzeReport::new(
        &a,
        &b,
        verdict,
        (entanglement_entropy(&a), entanglement_entropy(&b)),
        fast,
    );
    let text = match args.format {
        Format::Json => report::to_json(&report),
        Format::Csv => report.to_csv(),
    };
    out.write_all(text.as_bytes()).map_err(CliError::stdout)
}

pub fn cmd_paper_verify(
    args: &PaperVerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let rows = sweep(args.alpha_min, args.alpha_max, args.steps)?;
    let text = match args.format {
        Format::Csv => report::pairs_csv(&rows),
        Format::Json => report::pairs_json(&rows),
    };
    let summary = SweepSummary::new(&rows).render();
    match &args.out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Write {
                path: path.clone(),
                source,
            })?;
            out.write_all(summary.as_bytes()).map_err(CliError::stdout)
        }
        None => {
            out.write_all(text.as_bytes()).map_err(CliError::stdout)?;
            err.write_all(summary.as_bytes()).map_err(CliError::stdout)
        }
    }
}

pub fn cmd_threshold(args: &ThresholdArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let t = find_threshold(args.lo, args.hi, args.tol)?;
    let text = report::to_json(&ThresholdReport::from(&t));
    out.write_all(text.as_bytes()).map_err(CliError::stdout)
}

pub fn cmd_show_state(args: &ShowStateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let initial = build_initial(QubitSpec::new(args.alpha)?)?;
    let symbolic = match args.which {
        Which::Initial => initial,
        Which::Final => apply_cloner(&initial)?,
    };
    let state = expand(&symbolic, &args.blank.into())?.state;
    let dump = StateDump::new(&state, &schmidt_vector(&state)?);
    let text = match args.format {
        Format::Json => report::to_json(&dump),
        Format::Csv => dump.to_csv(),
    };
    out.write_all(text.as_bytes()).map_err(CliError::stdout)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_vectors_are_validated_and_sorted() {
        let v = parse_inline_schmidt("0.2, 0.5,0.3").unwrap();
        assert_eq!(v.probs(), &[0.5, 0.3, 0.2]);
        for bad in ["0.7,0.4", "1.2,-0.2", "a,b", "", "0.5,NaN", "inf"] {
            let e = parse_inline_schmidt(bad).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{bad}");
        }
        // within the inline tolerance: renormalized
        let v = parse_inline_schmidt("0.5,0.5000000005").unwrap();
        assert!((v.probs().iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

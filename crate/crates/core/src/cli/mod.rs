//! `nlfm` command line: `design`, `compare` and `trace`.
//!
//! Exit codes: 0 on success, 2 for usage errors (bad flags, unreadable or
//! invalid config, unwritable output), 3 for data errors raised while
//! designing.

mod config;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use config::{parse_emit_list, Emit, RawConfig, RunConfig};

use crate::export::{self, SummaryRecord};
use crate::pia::IterationTrace;
use crate::pipeline::{self, DesignOutcome};
use crate::spectral::WindowKind;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Data(crate::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::Parameter(msg) => CliError::Usage(msg),
            other => CliError::Data(other),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "nlfm", version, about = "Design constant-modulus NLFM pulses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Design one waveform and write its artifacts.
    Design(CommonArgs),
    /// Compare stationary-phase and refined PSL across windows.
    Compare(CommonArgs),
    /// Write the per-iteration convergence trace.
    Trace(CommonArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Flat key = value run configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Window kind; `compare` accepts a comma-separated list.
    #[arg(long)]
    pub window: Option<String>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Iteration cap.
    #[arg(long = "max-iters")]
    pub max_iters: Option<usize>,
    /// Frequency grid size K.
    #[arg(long = "k")]
    pub grid_size: Option<usize>,
    /// Comma-separated subset of waveform,acf,trace,summary.
    #[arg(long)]
    pub emit: Option<String>,
}

impl CommonArgs {
    /// Config file with flags layered on top. `window` is applied only when
    /// it names a single kind.
    pub fn load(&self) -> Result<RunConfig, CliError> {
        let mut raw = match &self.config {
            Some(path) => RawConfig::read(path)?,
            None => RawConfig::default(),
        };
        if let Some(w) = self.window.as_deref().filter(|w| !w.contains(',')) {
            raw.set("window.kind", w)?;
        }
        if let Some(out) = &self.out {
            raw.set("output.dir", &out.to_string_lossy())?;
        }
        if let Some(n) = self.max_iters {
            raw.set("stop.max_iterations", &n.to_string())?;
        }
        if let Some(k) = self.grid_size {
            raw.set("grid_size_k", &k.to_string())?;
        }
        if let Some(emit) = &self.emit {
            raw.set("output.emit", emit)?;
        }
        RunConfig::from_raw(raw)
    }

    fn kinds(&self) -> Result<Vec<WindowKind>, CliError> {
        match &self.window {
            None => Ok(WindowKind::ALL.to_vec()),
            Some(list) => list
                .split(',')
                .map(|w| w.parse::<WindowKind>().map_err(CliError::from))
                .collect(),
        }
    }
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, contents)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", dir.display())))
}

fn run_design(cfg: &RunConfig) -> Result<DesignOutcome, CliError> {
    let mut outcome = pipeline::design(&cfg.design, &cfg.window, &cfg.stop)?;
    outcome.pia.waveform = outcome.pia.waveform.with_amplitude(cfg.amplitude)?;
    Ok(outcome)
}

fn write_design(
    cfg: &RunConfig,
    dir: &Path,
    outcome: &DesignOutcome,
) -> Result<SummaryRecord, CliError> {
    ensure_dir(dir)?;
    let summary = SummaryRecord::from_outcome(outcome);
    for emit in &cfg.emit {
        match emit {
            Emit::Waveform => write(
                dir,
                "waveform.csv",
                &export::waveform_csv(&outcome.pia.waveform, &cfg.design),
            )?,
            Emit::Acf => write(
                dir,
                "acf.csv",
                &export::acf_csv(&outcome.pia_report.acf_db, cfg.design.sample_rate),
            )?,
            Emit::Trace => write(dir, "trace.csv", &export::trace_csv(&outcome.pia.trace))?,
            Emit::Summary => {
                write(dir, "summary.csv", &summary.csv())?;
                write(dir, "summary.txt", &summary.text())?;
            }
        }
    }
    Ok(summary)
}

/// Designs the configured window and writes the selected artifacts into
/// `cfg.out_dir`.
pub fn cmd_design(cfg: &RunConfig) -> Result<SummaryRecord, CliError> {
    let outcome = run_design(cfg)?;
    write_design(cfg, &cfg.out_dir, &outcome)
}

/// Runs every window in `kinds` concurrently, each into its own
/// subdirectory, then writes `compare.csv` and `compare.txt`.
pub fn cmd_compare(cfg: &RunConfig, kinds: &[WindowKind]) -> Result<Vec<SummaryRecord>, CliError> {
    if kinds.is_empty() {
        return Err(CliError::Usage("no windows to compare".into()));
    }
    let configs = kinds
        .iter()
        .map(|&k| cfg.for_window(k))
        .collect::<Result<Vec<_>, _>>()?;
    ensure_dir(&cfg.out_dir)?;
    let rows = std::thread::scope(|scope| {
        let handles: Vec<_> = configs
            .iter()
            .map(|c| {
                scope.spawn(move || {
                    let outcome = run_design(c)?;
                    write_design(c, &c.out_dir.join(c.window.kind().name()), &outcome)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("design thread panicked"))
            .collect::<Result<Vec<_>, CliError>>()
    })?;
    write(&cfg.out_dir, "compare.csv", &export::compare_csv(&rows))?;
    write(&cfg.out_dir, "compare.txt", &export::compare_text(&rows))?;
    Ok(rows)
}

/// Writes only `trace.csv`.
pub fn cmd_trace(cfg: &RunConfig) -> Result<IterationTrace, CliError> {
    let outcome = run_design(cfg)?;
    ensure_dir(&cfg.out_dir)?;
    write(
        &cfg.out_dir,
        "trace.csv",
        &export::trace_csv(&outcome.pia.trace),
    )?;
    Ok(outcome.pia.trace)
}

/// Dispatches a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match &cli.command {
        Command::Design(args) => args.load().and_then(|cfg| {
            let s = cmd_design(&cfg)?;
            print!("{}", s.text());
            Ok(())
        }),
        Command::Compare(args) => args.load().and_then(|cfg| {
            let rows = cmd_compare(&cfg, &args.kinds()?)?;
            print!("{}", export::compare_text(&rows));
            Ok(())
        }),
        Command::Trace(args) => args.load().and_then(|cfg| {
            let trace = cmd_trace(&cfg)?;
            println!(
                "{} iterations, stop: {}, final error {}",
                trace.iterations_run(),
                trace.stop_reason,
                export::fmt_num(trace.final_error_min())
            );
            Ok(())
        }),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("nlfm: {e}");
            e.exit_code()
        }
    }
}

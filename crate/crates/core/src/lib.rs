//! Constant-amplitude nonlinear-FM pulse design.
//!
//! A design starts from a window PSD ([`spectral`]), turns it into a
//! stationary-phase frequency sweep ([`spc`]), then refines the spectral
//! phase by alternating least-squares estimation and constant-modulus
//! projection ([`pia`]). [`analysis`] measures the autocorrelation of the
//! result, and [`pipeline`] ties the stages together for the common case.
//!
//! ```no_run
//! use nlfm_pia::{pipeline, DesignParams, StopConfig, WindowSpec};
//!
//! let params = DesignParams::baseline();
//! let outcome = pipeline::design(&params, &WindowSpec::kaiser(4.7), &StopConfig::default())?;
//! println!("SPC PSL {:?} dB -> PIA PSL {:?} dB",
//!          outcome.spc_report.psl_db, outcome.pia_report.psl_db);
//! # Ok::<(), nlfm_pia::Error>(())
//! ```

// `!(a < b)` is used on purpose so that NaN falls on the rejecting side.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod error;
pub mod export;
pub mod pia;
pub mod pipeline;
pub mod spc;
pub mod spectral;

pub use analysis::AnalysisReport;
pub use error::{Error, Result};
pub use pia::{DftOperator, IterationTrace, MeasurementVector, StopConfig, StopReason, Waveform};
pub use spc::PhaseLaw;
pub use spectral::{DesignParams, SpectralTarget, WindowKind, WindowSpec};

pub use num_complex::Complex64;

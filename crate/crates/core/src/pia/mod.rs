//! Phase improvement by alternating least-squares phase matching.
//!
//! Each iteration estimates the pulse from the current measurement vector
//! (`x = (1/K) W^H y`, exact because `W^H W = K I` when `K >= N`), forces it
//! back to constant modulus, and hands its spectral phase to the next
//! measurement vector while keeping the target magnitude.

mod dft;
mod engine;
mod waveform;

pub use dft::{adjoint_transform, forward_transform, DftOperator};
pub use engine::{
    error_functional, iterate_once, ls_estimate, run_pia, run_pia_with, IterationOutput,
    IterationRecord, IterationTrace, PiaResult, StopConfig, StopReason,
};
pub use waveform::{constant_modulus_projection, phase, MeasurementVector, Waveform};

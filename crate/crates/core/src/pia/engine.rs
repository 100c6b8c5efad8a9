use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::dft::DftOperator;
use super::waveform::{constant_modulus_projection, phase, MeasurementVector, Waveform};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StopConfig {
    pub max_iterations: usize,
    /// A step counts as converged once it improves by less than this
    /// fraction of the first iteration's error.
    pub rel_tolerance: f64,
}

impl Default for StopConfig {
    fn default() -> Self {
        StopConfig {
            max_iterations: 1000,
            rel_tolerance: 1e-9,
        }
    }
}

impl StopConfig {
    pub fn new(max_iterations: usize, rel_tolerance: f64) -> Result<Self> {
        let stop = StopConfig {
            max_iterations,
            rel_tolerance,
        };
        stop.validate()?;
        Ok(stop)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iterations < 1 {
            return Err(Error::param("max_iterations must be at least 1"));
        }
        if !(self.rel_tolerance.is_finite() && self.rel_tolerance >= 0.0) {
            return Err(Error::param(format!(
                "rel_tolerance {} must be finite and >= 0",
                self.rel_tolerance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// The last step failed to reduce the error and was rolled back.
    DeltaNonNegative,
    /// The last step improved by less than the relative tolerance.
    Converged,
    MaxIterations,
}

impl StopReason {
    pub fn name(self) -> &'static str {
        match self {
            StopReason::DeltaNonNegative => "delta-non-negative",
            StopReason::Converged => "converged",
            StopReason::MaxIterations => "max-iterations",
        }
    }
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StopReason {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta-non-negative" => Ok(StopReason::DeltaNonNegative),
            "converged" => Ok(StopReason::Converged),
            "max-iterations" => Ok(StopReason::MaxIterations),
            other => Err(Error::param(format!("unknown stop reason '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationRecord {
    /// 1-based iteration index `r`.
    pub iteration: usize,
    /// `||y^(r-1) - W x^(r)||^2`.
    pub error_min: f64,
    /// `error_min(r) - error_min(r-1)`; undefined for the first iteration.
    pub delta_error: Option<f64>,
    /// False only for a final step that did not reduce the error.
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub records: Vec<IterationRecord>,
    pub stop_reason: StopReason,
}

impl IterationTrace {
    pub fn accepted(&self) -> impl Iterator<Item = &IterationRecord> {
        self.records.iter().filter(|r| r.accepted)
    }

    /// Number of iterations whose result was kept.
    pub fn iterations_run(&self) -> usize {
        self.accepted().count()
    }

    pub fn first_error_min(&self) -> f64 {
        self.records[0].error_min
    }

    pub fn final_error_min(&self) -> f64 {
        self.accepted()
            .last()
            .map(|r| r.error_min)
            .unwrap_or(f64::NAN)
    }

    pub fn error_series(&self) -> Vec<f64> {
        self.accepted().map(|r| r.error_min).collect()
    }
}

/// Everything one iteration produces.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationOutput {
    /// Constant-modulus estimate `x^(r) = exp(j phase(W^H y^(r-1)))`.
    pub x_hat: Vec<Complex64>,
    /// `W x^(r)`.
    pub spectrum: Vec<Complex64>,
    /// `theta^(r) = phase(W x^(r))`.
    pub theta: Vec<f64>,
    pub y_next: MeasurementVector,
    pub error_min: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiaResult {
    pub waveform: Waveform,
    pub trace: IterationTrace,
    pub theta_final: Vec<f64>,
}

/// Unconstrained least-squares estimate `(1/K) W^H y`.
pub fn ls_estimate(y: &[Complex64], op: &DftOperator) -> Result<Vec<Complex64>> {
    let scale = 1.0 / op.grid_size() as f64;
    Ok(op.adjoint(y)?.into_iter().map(|z| z * scale).collect())
}

/// `sum_k |y(k) - (W x)(k)|^2`.
pub fn error_functional(y: &[Complex64], x: &[Complex64], op: &DftOperator) -> Result<f64> {
    if y.len() != op.grid_size() {
        return Err(Error::Dimension {
            expected: op.grid_size(),
            found: y.len(),
        });
    }
    let spectrum = op.forward(x)?;
    Ok(squared_distance(y, &spectrum))
}

fn squared_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q).norm_sqr()).sum()
}

/// One phase-improvement step from `y_prev`, whose magnitude must equal
/// `target_magnitude` bit for bit.
pub fn iterate_once(
    y_prev: &MeasurementVector,
    target_magnitude: &[f64],
    op: &DftOperator,
) -> Result<IterationOutput> {
    if y_prev.magnitude() != target_magnitude {
        return Err(Error::MagnitudeMismatch);
    }
    let y_values = y_prev.values();
    let x_hat = constant_modulus_projection(&op.adjoint(&y_values)?);
    let spectrum = op.forward(&x_hat)?;
    let theta: Vec<f64> = spectrum.iter().map(|&z| phase(z)).collect();
    let error_min = squared_distance(&y_values, &spectrum);
    let y_next = y_prev.with_phase(theta.clone());
    Ok(IterationOutput {
        x_hat,
        spectrum,
        theta,
        y_next,
        error_min,
    })
}

/// Iterates from the initial spectral phase `theta0` until a step stops
/// improving or `stop.max_iterations` is reached.
pub fn run_pia(
    target_magnitude: &[f64],
    theta0: &[f64],
    op: &DftOperator,
    stop: &StopConfig,
) -> Result<PiaResult> {
    run_pia_with(target_magnitude, theta0, op, stop, |_, _| {})
}

/// [`run_pia`] with `observer` called on every iteration, including a final
/// rejected one.
pub fn run_pia_with<F>(
    target_magnitude: &[f64],
    theta0: &[f64],
    op: &DftOperator,
    stop: &StopConfig,
    mut observer: F,
) -> Result<PiaResult>
where
    F: FnMut(usize, &IterationOutput),
{
    stop.validate()?;
    if target_magnitude.len() != op.grid_size() {
        return Err(Error::Dimension {
            expected: op.grid_size(),
            found: target_magnitude.len(),
        });
    }
    if !target_magnitude.iter().any(|&m| m > 0.0) {
        return Err(Error::DegenerateTarget(
            "target magnitude is identically zero".into(),
        ));
    }

    let mut y = MeasurementVector::from_parts(target_magnitude.to_vec(), theta0.to_vec())?;
    let mut records: Vec<IterationRecord> = Vec::new();
    let mut kept: Option<IterationOutput> = None;
    let mut stop_reason = StopReason::MaxIterations;

    for r in 1..=stop.max_iterations {
        let out = iterate_once(&y, target_magnitude, op)?;
        observer(r, &out);

        let delta = kept.as_ref().map(|prev| out.error_min - prev.error_min);
        let threshold =
            -stop.rel_tolerance * records.first().map_or(out.error_min, |f| f.error_min);
        match delta {
            Some(d) if !(d < 0.0) => {
                records.push(IterationRecord {
                    iteration: r,
                    error_min: out.error_min,
                    delta_error: delta,
                    accepted: false,
                });
                stop_reason = StopReason::DeltaNonNegative;
                break;
            }
            _ => {
                records.push(IterationRecord {
                    iteration: r,
                    error_min: out.error_min,
                    delta_error: delta,
                    accepted: true,
                });
                y = out.y_next.clone();
                kept = Some(out);
                if matches!(delta, Some(d) if d >= threshold) {
                    stop_reason = StopReason::Converged;
                    break;
                }
            }
        }
    }

    let kept = kept.expect("first iteration is always accepted");
    Ok(PiaResult {
        waveform: Waveform::from_samples(&kept.x_hat),
        trace: IterationTrace {
            records,
            stop_reason,
        },
        theta_final: kept.theta,
    })
}

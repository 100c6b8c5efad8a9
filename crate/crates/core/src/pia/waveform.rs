use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::SpectralTarget;

/// Phase of `z`, with `phase(0) = 0` (including signed zeros).
pub fn phase(z: Complex64) -> f64 {
    if z.re == 0.0 && z.im == 0.0 {
        0.0
    } else {
        z.arg()
    }
}

/// Replaces every sample by the unit phasor `exp(j phase(v))`.
pub fn constant_modulus_projection(v: &[Complex64]) -> Vec<Complex64> {
    v.iter()
        .map(|&z| Complex64::from_polar(1.0, phase(z)))
        .collect()
}

/// Constant-modulus pulse `A exp(j phi(n))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    samples: Vec<Complex64>,
    amplitude: f64,
}

impl Waveform {
    /// Normalizes `samples` onto the unit circle.
    pub fn from_samples(samples: &[Complex64]) -> Self {
        Waveform {
            samples: constant_modulus_projection(samples),
            amplitude: 1.0,
        }
    }

    pub fn from_phase(phase: &[f64]) -> Self {
        Waveform {
            samples: phase
                .iter()
                .map(|&p| Complex64::from_polar(1.0, p))
                .collect(),
            amplitude: 1.0,
        }
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Result<Self> {
        if !(amplitude.is_finite() && amplitude > 0.0) {
            return Err(Error::param(format!(
                "amplitude {amplitude} must be positive"
            )));
        }
        self.amplitude = amplitude;
        Ok(self)
    }

    /// Unit-modulus samples, without the amplitude.
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// Samples scaled by the amplitude.
    pub fn scaled(&self) -> Vec<Complex64> {
        self.samples.iter().map(|z| z * self.amplitude).collect()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Largest deviation of `|x(n)|` from one.
    pub fn max_modulus_deviation(&self) -> f64 {
        self.samples
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// `y_m(k) = |Y(k)| exp(j theta(k))`, stored as magnitude and phase so the
/// magnitude can never drift from the target's.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementVector {
    magnitude: Vec<f64>,
    phase: Vec<f64>,
}

impl MeasurementVector {
    pub fn new(target: &SpectralTarget, theta: &[f64]) -> Result<Self> {
        Self::from_parts(target.magnitude().to_vec(), theta.to_vec())
    }

    pub fn from_parts(magnitude: Vec<f64>, phase: Vec<f64>) -> Result<Self> {
        if magnitude.len() != phase.len() {
            return Err(Error::Dimension {
                expected: magnitude.len(),
                found: phase.len(),
            });
        }
        if magnitude.iter().any(|m| !(m.is_finite() && *m >= 0.0)) {
            return Err(Error::param(
                "measurement magnitude must be finite and nonnegative",
            ));
        }
        Ok(MeasurementVector { magnitude, phase })
    }

    pub fn magnitude(&self) -> &[f64] {
        &self.magnitude
    }

    pub fn phase(&self) -> &[f64] {
        &self.phase
    }

    pub fn len(&self) -> usize {
        self.magnitude.len()
    }

    pub fn is_empty(&self) -> bool {
        self.magnitude.is_empty()
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.magnitude
            .iter()
            .zip(&self.phase)
            .map(|(&m, &p)| Complex64::from_polar(m, p))
            .collect()
    }

    pub(crate) fn with_phase(&self, phase: Vec<f64>) -> Self {
        MeasurementVector {
            magnitude: self.magnitude.clone(),
            phase,
        }
    }
}

//! Stationary-phase initialization.
//!
//! Where the PSD is high the sweep must linger, so the time at which the
//! sweep passes frequency `f` is proportional to the energy accumulated below
//! `f`. Inverting that group-delay law gives the instantaneous frequency,
//! whose integral is the phase of the initial constant-modulus pulse.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pia::{self, DftOperator};
use crate::spectral::{DesignParams, SpectralTarget};

/// Group delay `t(f)` sampled on an ascending frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupDelay {
    pub frequencies: Vec<f64>,
    pub delays: Vec<f64>,
}

/// Time-domain phase law of a stationary-phase sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseLaw {
    pub time_grid: Vec<f64>,
    pub phase: Vec<f64>,
    pub inst_freq: Vec<f64>,
}

impl PhaseLaw {
    /// Unit-modulus samples `exp(j phase)`.
    pub fn samples(&self) -> Vec<Complex64> {
        self.phase
            .iter()
            .map(|&p| Complex64::from_polar(1.0, p))
            .collect()
    }
}

/// Normalized cumulative PSD mapped onto `[-T/2, T/2]`.
///
/// The frequency grid is the in-band bin frequencies plus both band edges,
/// so `t(-B/2) = -T/2` and `t(B/2) = T/2` hold exactly.
pub fn group_delay_from_psd(target: &SpectralTarget) -> Result<GroupDelay> {
    let params = target.params();
    let half = 0.5 * params.bandwidth;
    let t = params.pulse_width;

    let mut frequencies = Vec::with_capacity(target.band_bins().len() + 2);
    frequencies.push(-half);
    for &k in target.band_bins() {
        let f = params.bin_frequency(k);
        if f > *frequencies.last().unwrap() && f < half {
            frequencies.push(f);
        }
    }
    frequencies.push(half);

    let psd: Vec<f64> = frequencies.iter().map(|&f| target.psd_at(f)).collect();
    let mut cumulative = Vec::with_capacity(frequencies.len());
    cumulative.push(0.0);
    for i in 1..frequencies.len() {
        let step = 0.5 * (psd[i] + psd[i - 1]) * (frequencies[i] - frequencies[i - 1]);
        cumulative.push(cumulative[i - 1] + step);
    }
    let total = *cumulative.last().unwrap();
    if !(total > 0.0) {
        return Err(Error::DegenerateTarget(
            "PSD integrates to zero over the band".into(),
        ));
    }

    let mut delays: Vec<f64> = cumulative
        .iter()
        .map(|c| -0.5 * t + t * c / total)
        .collect();
    *delays.last_mut().unwrap() = 0.5 * t;
    Ok(GroupDelay {
        frequencies,
        delays,
    })
}

/// Piecewise-linear inverse of a nondecreasing group-delay law, sampled at
/// `time_grid`. Times on a flat stretch map to its lowest frequency; times
/// outside the delay range clamp to the end frequencies.
pub fn invert_group_delay(group_delay: &GroupDelay, time_grid: &[f64]) -> Result<Vec<f64>> {
    let GroupDelay {
        frequencies,
        delays,
    } = group_delay;
    if frequencies.len() != delays.len() {
        return Err(Error::Dimension {
            expected: frequencies.len(),
            found: delays.len(),
        });
    }
    if delays.is_empty() {
        return Err(Error::param("empty group-delay law"));
    }
    if let Some(i) = delays.windows(2).position(|w| !(w[1] >= w[0])) {
        return Err(Error::NonMonotone { index: i + 1 });
    }
    if let Some(i) = frequencies.windows(2).position(|w| !(w[1] > w[0])) {
        return Err(Error::NonMonotone { index: i + 1 });
    }

    let last = delays.len() - 1;
    Ok(time_grid
        .iter()
        .map(|&t| {
            let i = delays.partition_point(|&d| d < t);
            if i == 0 {
                frequencies[0]
            } else if i > last {
                frequencies[last]
            } else if delays[i] == t {
                frequencies[i]
            } else {
                let frac = (t - delays[i - 1]) / (delays[i] - delays[i - 1]);
                frequencies[i - 1] + frac * (frequencies[i] - frequencies[i - 1])
            }
        })
        .collect())
}

/// Integrates `2 pi f(t)` over the pulse time grid (trapezoid rule), with
/// the phase anchored to zero at sample `(N-1)/2`.
pub fn phase_from_frequency(inst_freq: &[f64], params: &DesignParams) -> Result<PhaseLaw> {
    if inst_freq.len() != params.num_samples {
        return Err(Error::Dimension {
            expected: params.num_samples,
            found: inst_freq.len(),
        });
    }
    if inst_freq.iter().any(|f| !f.is_finite()) {
        return Err(Error::param("instantaneous frequency must be finite"));
    }
    let time_grid = params.time_grid();
    let mut phase = vec![0.0; inst_freq.len()];
    for n in 1..phase.len() {
        let dt = time_grid[n] - time_grid[n - 1];
        phase[n] = phase[n - 1] + PI * (inst_freq[n] + inst_freq[n - 1]) * dt;
    }
    let anchor = phase[(phase.len() - 1) / 2];
    for p in &mut phase {
        *p -= anchor;
    }
    Ok(PhaseLaw {
        time_grid,
        phase,
        inst_freq: inst_freq.to_vec(),
    })
}

/// Spectral phase of the stationary-phase pulse, `phase(W x0)`.
pub fn initial_spectral_phase(phase_law: &PhaseLaw, op: &DftOperator) -> Result<Vec<f64>> {
    let spectrum = op.forward(&phase_law.samples())?;
    Ok(spectrum.iter().map(|&z| pia::phase(z)).collect())
}

/// Runs the whole stationary-phase construction for `target`.
pub fn stationary_phase_law(target: &SpectralTarget) -> Result<PhaseLaw> {
    let params = target.params();
    let delay = group_delay_from_psd(target)?;
    let inst_freq = invert_group_delay(&delay, &params.time_grid())?;
    phase_from_frequency(&inst_freq, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{build_spectral_target, make_window, WindowSpec};
    use approx::assert_abs_diff_eq;

    fn baseline_target(spec: WindowSpec) -> SpectralTarget {
        let p = DesignParams::baseline();
        let w = make_window(&spec, p.band_bins().len()).unwrap();
        build_spectral_target(&w, &p).unwrap()
    }

    #[test]
    fn rectangular_psd_gives_linear_group_delay() {
        let target = baseline_target(WindowSpec::kaiser(0.0));
        let p = target.params();
        let gd = group_delay_from_psd(&target).unwrap();
        assert_eq!(gd.delays[0], -0.5 * p.pulse_width);
        assert_eq!(*gd.delays.last().unwrap(), 0.5 * p.pulse_width);
        for (f, t) in gd.frequencies.iter().zip(&gd.delays) {
            assert_abs_diff_eq!(*t, p.pulse_width / p.bandwidth * f, epsilon = 1e-18);
        }
    }

    #[test]
    fn symmetric_psd_crosses_zero_delay_at_dc() {
        for spec in [
            WindowSpec::kaiser(6.0),
            WindowSpec::taylor(35.0, 5),
            WindowSpec::chebyshev(40.0),
        ] {
            let gd = group_delay_from_psd(&baseline_target(spec)).unwrap();
            let i = gd.frequencies.iter().position(|&f| f == 0.0).unwrap();
            assert_abs_diff_eq!(gd.delays[i], 0.0, epsilon = 1e-20);
        }
    }

    // Oracle: 1e6-point trapezoid of I0(6 sqrt(1 - (2f/B)^2)) over the band.
    #[test]
    fn kaiser_group_delay_matches_fine_quadrature() {
        let target = baseline_target(WindowSpec::kaiser(6.0));
        let gd = group_delay_from_psd(&target).unwrap();
        let quarter = 0.25 * target.params().bandwidth;
        let got = invert_frequency(&gd, quarter);
        assert_abs_diff_eq!(got, 1.0085641887403304e-06, epsilon = 1e-4 * 2.5e-6);
    }

    fn invert_frequency(gd: &GroupDelay, f: f64) -> f64 {
        let i = gd.frequencies.partition_point(|&x| x < f);
        let frac = (f - gd.frequencies[i - 1]) / (gd.frequencies[i] - gd.frequencies[i - 1]);
        gd.delays[i - 1] + frac * (gd.delays[i] - gd.delays[i - 1])
    }

    #[test]
    fn inverse_of_linear_law_is_linear() {
        let gd = GroupDelay {
            frequencies: vec![-2.0, 0.0, 2.0],
            delays: vec![-1.0, 0.0, 1.0],
        };
        let f = invert_group_delay(&gd, &[-1.0, -0.5, 0.0, 0.25, 1.0]).unwrap();
        assert_eq!(f, vec![-2.0, -1.0, 0.0, 0.5, 2.0]);
    }

    // Hand-built staircase: t(f) is flat on f in [1, 2].
    #[test]
    fn flat_run_resolves_to_its_lowest_frequency() {
        let gd = GroupDelay {
            frequencies: vec![0.0, 1.0, 2.0, 3.0, 4.0],
            delays: vec![0.0, 1.0, 1.0, 2.0, 3.0],
        };
        let f = invert_group_delay(&gd, &[0.5, 1.0, 1.5, 2.5, 3.0, 5.0, -1.0]).unwrap();
        assert_eq!(f, vec![0.5, 1.0, 2.5, 3.5, 4.0, 4.0, 0.0]);
    }

    #[test]
    fn decreasing_law_is_rejected() {
        let gd = GroupDelay {
            frequencies: vec![0.0, 1.0, 2.0],
            delays: vec![0.0, 1.0, 0.5],
        };
        assert_eq!(
            invert_group_delay(&gd, &[0.0]),
            Err(Error::NonMonotone { index: 2 })
        );
    }

    #[test]
    fn zero_frequency_gives_zero_phase() {
        let p = DesignParams::baseline();
        let law = phase_from_frequency(&vec![0.0; p.num_samples], &p).unwrap();
        assert!(law.phase.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn constant_frequency_gives_linear_phase() {
        let p = DesignParams::baseline();
        let f0 = 12.5e6;
        let law = phase_from_frequency(&vec![f0; p.num_samples], &p).unwrap();
        let tc = law.time_grid[(p.num_samples - 1) / 2];
        for (t, ph) in law.time_grid.iter().zip(&law.phase) {
            assert_abs_diff_eq!(*ph, 2.0 * PI * f0 * (t - tc), epsilon = 1e-9);
        }
    }

    // Closed form: f(t) = B t / T integrates to pi B t^2 / T.
    #[test]
    fn linear_frequency_gives_quadratic_phase() {
        let p = DesignParams::baseline();
        let grid = p.time_grid();
        let f: Vec<f64> = grid
            .iter()
            .map(|t| p.bandwidth / p.pulse_width * t)
            .collect();
        let law = phase_from_frequency(&f, &p).unwrap();
        let tc = grid[(p.num_samples - 1) / 2];
        let coeff = PI * p.bandwidth / p.pulse_width;
        for (t, ph) in grid.iter().zip(&law.phase) {
            assert_abs_diff_eq!(*ph, coeff * (t * t - tc * tc), epsilon = 1e-8);
        }
    }

    #[test]
    fn phase_law_samples_have_unit_modulus() {
        let law = stationary_phase_law(&baseline_target(WindowSpec::kaiser(6.0))).unwrap();
        let worst = law
            .samples()
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(worst <= 1e-15, "{worst}");
    }

    #[test]
    fn inst_freq_is_monotone_and_in_band() {
        for spec in [
            WindowSpec::kaiser(6.0),
            WindowSpec::raised_cosine(0.08),
            WindowSpec::chebyshev(40.0),
        ] {
            let target = baseline_target(spec);
            let b = target.params().bandwidth;
            let law = stationary_phase_law(&target).unwrap();
            for w in law.inst_freq.windows(2) {
                assert!(w[1] >= w[0] - 1e-9 * b);
            }
            let eps = b * 1e-6;
            assert!(law.inst_freq.iter().all(|f| f.abs() <= 0.5 * b + eps));
            let c = (law.inst_freq.len() - 1) / 2;
            // N is even, so the center sample sits half a sample before t = 0
            assert!(law.inst_freq[c].abs() < b / 100.0);
        }
    }

    #[test]
    fn composed_inverse_recovers_time() {
        let target = baseline_target(WindowSpec::raised_cosine(0.08));
        let p = target.params();
        let gd = group_delay_from_psd(&target).unwrap();
        let grid = p.time_grid();
        let f = invert_group_delay(&gd, &grid).unwrap();
        let dt = p.pulse_width / p.num_samples as f64;
        for (t, fi) in grid.iter().zip(&f) {
            assert!((invert_frequency_clamped(&gd, *fi) - t).abs() <= dt);
        }
    }

    fn invert_frequency_clamped(gd: &GroupDelay, f: f64) -> f64 {
        let i = gd
            .frequencies
            .partition_point(|&x| x < f)
            .clamp(1, gd.frequencies.len() - 1);
        let frac = (f - gd.frequencies[i - 1]) / (gd.frequencies[i] - gd.frequencies[i - 1]);
        gd.delays[i - 1] + frac * (gd.delays[i] - gd.delays[i - 1])
    }

    #[test]
    fn initial_phase_of_single_sample_is_zero() {
        let op = DftOperator::new(4, 1).unwrap();
        let law = PhaseLaw {
            time_grid: vec![0.0],
            phase: vec![0.0],
            inst_freq: vec![0.0],
        };
        assert_eq!(initial_spectral_phase(&law, &op).unwrap(), vec![0.0; 4]);
    }

    #[test]
    fn initial_phase_takes_zero_for_null_bins() {
        let op = DftOperator::new(2, 2).unwrap();
        let law = PhaseLaw {
            time_grid: vec![0.0; 2],
            phase: vec![0.0; 2],
            inst_freq: vec![0.0; 2],
        };
        assert_eq!(initial_spectral_phase(&law, &op).unwrap(), vec![0.0, 0.0]);
    }
}

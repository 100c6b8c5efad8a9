//! Autocorrelation metrics for designed pulses.
//!
//! The mainlobe runs from lag 0 to the first local minimum of `|R|`; every
//! lag past that minimum is sidelobe. A one-sided ACF that never turns back
//! up (a plain rectangular pulse) has no sidelobes, reported as `None`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Floor applied before taking logs of exact zeros.
pub const DB_FLOOR: f64 = -300.0;

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    /// One-sided normalized `|ACF|` in dB over lags `0..N`.
    pub acf_db: Vec<f64>,
    /// `None` when the ACF has no sidelobes.
    pub psl_db: Option<f64>,
    pub isl_db: Option<f64>,
    pub mainlobe_width_samples: f64,
    pub inst_freq: Vec<f64>,
}

impl AnalysisReport {
    pub fn new(samples: &[Complex64], sample_rate: f64) -> Self {
        let acf_db = autocorrelation(samples);
        AnalysisReport {
            psl_db: psl(&acf_db),
            isl_db: isl(&acf_db),
            mainlobe_width_samples: mainlobe_width(&acf_db),
            inst_freq: instantaneous_frequency(samples, sample_rate),
            acf_db,
        }
    }
}

/// `|R(tau)|` for `tau = 0..N`, where `R(tau) = sum_n x(n) conj(x(n - tau))`,
/// computed with an FFT of length at least `2N`.
pub fn autocorrelation_magnitude(x: &[Complex64]) -> Vec<f64> {
    let n = x.len();
    if n == 0 {
        return Vec::new();
    }
    let len = (2 * n).next_power_of_two();
    let mut planner = FftPlanner::new();
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    buf[..n].copy_from_slice(x);
    planner.plan_fft_forward(len).process(&mut buf);
    for z in &mut buf {
        *z = Complex64::new(z.norm_sqr(), 0.0);
    }
    planner.plan_fft_inverse(len).process(&mut buf);
    let scale = 1.0 / len as f64;
    buf[..n].iter().map(|z| z.norm() * scale).collect()
}

/// One-sided `20 log10(|R(tau)| / |R(0)|)`, floored at [`DB_FLOOR`].
pub fn autocorrelation(x: &[Complex64]) -> Vec<f64> {
    let r = autocorrelation_magnitude(x);
    let Some(&r0) = r.first() else {
        return Vec::new();
    };
    r.iter()
        .enumerate()
        .map(|(i, &v)| {
            if i == 0 {
                0.0
            } else if r0 > 0.0 {
                to_db(v / r0)
            } else {
                DB_FLOOR
            }
        })
        .collect()
}

fn to_db(ratio: f64) -> f64 {
    if ratio > 0.0 {
        (20.0 * ratio.log10()).max(DB_FLOOR)
    } else {
        DB_FLOOR
    }
}

/// Index of the first local minimum, the last mainlobe lag.
pub fn mainlobe_end(acf_db: &[f64]) -> Option<usize> {
    (1..acf_db.len().saturating_sub(1))
        .find(|&i| acf_db[i] <= acf_db[i - 1] && acf_db[i] < acf_db[i + 1])
}

/// Peak sidelobe level in dB.
pub fn psl(acf_db: &[f64]) -> Option<f64> {
    let end = mainlobe_end(acf_db)?;
    acf_db[end + 1..].iter().copied().reduce(f64::max)
}

/// Integrated sidelobe level `10 log10(sum |R|^2 / |R(0)|^2)`, summed over
/// both sides of the ACF.
pub fn isl(acf_db: &[f64]) -> Option<f64> {
    let end = mainlobe_end(acf_db)?;
    let one_sided: f64 = acf_db[end + 1..]
        .iter()
        .map(|db| 10f64.powf(db / 10.0))
        .sum();
    Some(10.0 * (2.0 * one_sided).log10())
}

/// Two-sided -3 dB width in samples, interpolating linearly in dB.
///
/// An ACF that never drops to -3 dB reports its full two-sided span.
pub fn mainlobe_width(acf_db: &[f64]) -> f64 {
    const LEVEL: f64 = -3.0;
    for i in 1..acf_db.len() {
        if acf_db[i] <= LEVEL {
            let (a, b) = (acf_db[i - 1], acf_db[i]);
            let frac = if b == a { 0.0 } else { (LEVEL - a) / (b - a) };
            return 2.0 * ((i - 1) as f64 + frac);
        }
    }
    2.0 * acf_db.len().saturating_sub(1) as f64
}

/// Instantaneous frequency in hertz from the unwrapped sample phase:
/// central differences inside, second-order one-sided differences at the
/// two ends.
pub fn instantaneous_frequency(x: &[Complex64], sample_rate: f64) -> Vec<f64> {
    let n = x.len();
    if n < 3 {
        return vec![0.0; n];
    }
    let phase = unwrap(&x.iter().map(|z| z.arg()).collect::<Vec<_>>());
    let to_hz = sample_rate / (2.0 * PI);
    let mut f = vec![0.0; n];
    f[0] = (-3.0 * phase[0] + 4.0 * phase[1] - phase[2]) * 0.5 * to_hz;
    for i in 1..n - 1 {
        f[i] = (phase[i + 1] - phase[i - 1]) * 0.5 * to_hz;
    }
    f[n - 1] = (3.0 * phase[n - 1] - 4.0 * phase[n - 2] + phase[n - 3]) * 0.5 * to_hz;
    f
}

fn unwrap(phase: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(phase.len());
    for (i, &p) in phase.iter().enumerate() {
        match out.last() {
            None => out.push(p),
            Some(&prev) => {
                let step = (p - phase[i - 1] + PI).rem_euclid(2.0 * PI) - PI;
                out.push(prev + step);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tone(n: usize, cycles_per_sample: f64) -> Vec<Complex64> {
        (0..n)
            .map(|i| Complex64::from_polar(1.0, 2.0 * PI * cycles_per_sample * i as f64))
            .collect()
    }

    fn lfm(n: usize, fs: f64, b: f64) -> Vec<Complex64> {
        let t_len = n as f64 / fs;
        (0..n)
            .map(|i| {
                let t = (i as f64 - (n as f64 - 1.0) / 2.0) / fs;
                Complex64::from_polar(1.0, PI * b / t_len * t * t)
            })
            .collect()
    }

    #[test]
    fn rectangle_has_triangular_acf_and_no_sidelobes() {
        let n = 100;
        let r = autocorrelation_magnitude(&vec![Complex64::new(1.0, 0.0); n]);
        for (tau, v) in r.iter().enumerate() {
            assert_abs_diff_eq!(*v, (n - tau) as f64, epsilon = 1e-9);
        }
        let db = autocorrelation(&vec![Complex64::new(1.0, 0.0); n]);
        assert_eq!(db[0], 0.0);
        assert_eq!(psl(&db), None);
        assert_eq!(isl(&db), None);
    }

    #[test]
    fn acf_is_even() {
        let x = lfm(64, 1e9, 100e6);
        let r = autocorrelation_magnitude(&x);
        for (tau, v) in r.iter().enumerate() {
            let neg: Complex64 = (0..x.len() - tau).map(|n| x[n] * x[n + tau].conj()).sum();
            assert_abs_diff_eq!(*v, neg.norm(), epsilon = 1e-9);
        }
    }

    #[test]
    fn psl_uses_first_local_minimum() {
        let acf = [0.0, -20.0, -3.0, -40.0, -10.0];
        assert_eq!(mainlobe_end(&acf), Some(1));
        assert_eq!(psl(&acf), Some(-3.0));
    }

    #[test]
    fn isl_of_single_sidelobe() {
        let acf = [0.0, -60.0, 20.0 * 0.1f64.log10()];
        let got = isl(&acf).unwrap();
        assert_abs_diff_eq!(got, 10.0 * (2.0f64 * 0.01).log10(), epsilon = 1e-12);
        assert_abs_diff_eq!(got, -16.9897, epsilon = 1e-4);
    }

    #[test]
    fn mainlobe_width_examples() {
        assert_abs_diff_eq!(mainlobe_width(&[0.0, -6.0]), 1.0);
        let n = 100;
        let db = autocorrelation(&vec![Complex64::new(1.0, 0.0); n]);
        // exact crossing at tau = N (1 - 10^(-3/20)) = 29.205
        let exact = 2.0 * n as f64 * (1.0 - 10f64.powf(-3.0 / 20.0));
        assert_abs_diff_eq!(mainlobe_width(&db), exact, epsilon = 0.05);
        assert_eq!(mainlobe_width(&[0.0, -1.0, -2.0]), 4.0);
    }

    #[test]
    fn pure_tone_frequency() {
        let fs = 1e9;
        let f = instantaneous_frequency(&tone(256, 1.0 / 8.0), fs);
        for v in f {
            assert_abs_diff_eq!(v, fs / 8.0, epsilon = 1e-9 * fs);
        }
    }

    #[test]
    fn lfm_frequency_is_a_linear_ramp() {
        let (n, fs, b) = (2500, 1e9, 100e6);
        let f = instantaneous_frequency(&lfm(n, fs, b), fs);
        let t_len = n as f64 / fs;
        for (i, v) in f.iter().enumerate() {
            let t = (i as f64 - (n as f64 - 1.0) / 2.0) / fs;
            assert!((v - b / t_len * t).abs() < b / n as f64);
        }
        assert!(f[0] > -0.5 * b - 1e5 && f[n - 1] < 0.5 * b + 1e5);
    }

    #[test]
    fn report_psl_is_scale_and_rotation_invariant() {
        let x = lfm(500, 1e9, 100e6);
        let base = AnalysisReport::new(&x, 1e9).psl_db.unwrap();
        let rot = Complex64::from_polar(3.7, 1.234);
        let y: Vec<Complex64> = x.iter().map(|z| z * rot).collect();
        let other = AnalysisReport::new(&y, 1e9).psl_db.unwrap();
        assert_abs_diff_eq!(base, other, epsilon = 1e-9);
    }

    #[test]
    fn zero_signal_saturates_to_floor() {
        let db = autocorrelation(&[Complex64::new(0.0, 0.0); 4]);
        assert_eq!(db, vec![0.0, DB_FLOOR, DB_FLOOR, DB_FLOOR]);
    }
}

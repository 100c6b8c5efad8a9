//! The four PSD shapes a design can target.
//!
//! Every window is sampled at `num_points` equally spaced frequencies
//! spanning the band edge to edge, so sample `0` sits at `-B/2` and the last
//! sample at `+B/2`. Values are power (PSD) samples scaled to a peak of 1.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WindowKind {
    RaisedCosine,
    Taylor,
    Chebyshev,
    Kaiser,
}

impl WindowKind {
    pub const ALL: [WindowKind; 4] = [
        WindowKind::RaisedCosine,
        WindowKind::Taylor,
        WindowKind::Chebyshev,
        WindowKind::Kaiser,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WindowKind::RaisedCosine => "raised-cosine",
            WindowKind::Taylor => "taylor",
            WindowKind::Chebyshev => "chebyshev",
            WindowKind::Kaiser => "kaiser",
        }
    }
}

impl fmt::Display for WindowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WindowKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "raised-cosine" | "raisedcosine" | "rc" => Ok(WindowKind::RaisedCosine),
            "taylor" => Ok(WindowKind::Taylor),
            "chebyshev" | "cheb" | "dolph-chebyshev" => Ok(WindowKind::Chebyshev),
            "kaiser" => Ok(WindowKind::Kaiser),
            other => Err(Error::param(format!("unknown window kind '{other}'"))),
        }
    }
}

/// Window shape together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowSpec {
    /// `h + (1 - h) cos^2(pi f / B)`, pedestal `h` in `[0, 1]`.
    RaisedCosine { pedestal: f64 },
    /// Taylor window; `sidelobe_db` is the sidelobe suppression as a positive
    /// number of dB, `nbar` the count of nearly constant-level sidelobes.
    Taylor { sidelobe_db: f64, nbar: usize },
    /// Dolph-Chebyshev window with `attenuation_db` of equiripple suppression.
    Chebyshev { attenuation_db: f64 },
    /// Kaiser window of shape `beta >= 0`.
    Kaiser { beta: f64 },
}

impl WindowSpec {
    // Chosen by sweeping at 2.5 µs / 100 MHz / 1 GHz with the default stop
    // rule. The refinement gain is erratic in these parameters (a 0.1 change
    // in Kaiser beta can swing it by 2 dB), so rerun the calibrate_windows
    // example after changing the setup.
    pub const DEFAULT_PEDESTAL: f64 = 0.04;
    pub const DEFAULT_TAYLOR_SLL_DB: f64 = 41.5;
    pub const DEFAULT_TAYLOR_NBAR: usize = 6;
    pub const DEFAULT_CHEBYSHEV_DB: f64 = 44.25;
    pub const DEFAULT_KAISER_BETA: f64 = 4.7;

    pub fn raised_cosine(pedestal: f64) -> Self {
        WindowSpec::RaisedCosine { pedestal }
    }

    pub fn taylor(sidelobe_db: f64, nbar: usize) -> Self {
        WindowSpec::Taylor { sidelobe_db, nbar }
    }

    pub fn chebyshev(attenuation_db: f64) -> Self {
        WindowSpec::Chebyshev { attenuation_db }
    }

    pub fn kaiser(beta: f64) -> Self {
        WindowSpec::Kaiser { beta }
    }

    /// Calibrated default parameters for `kind`.
    pub fn default_for(kind: WindowKind) -> Self {
        match kind {
            WindowKind::RaisedCosine => Self::raised_cosine(Self::DEFAULT_PEDESTAL),
            WindowKind::Taylor => {
                Self::taylor(Self::DEFAULT_TAYLOR_SLL_DB, Self::DEFAULT_TAYLOR_NBAR)
            }
            WindowKind::Chebyshev => Self::chebyshev(Self::DEFAULT_CHEBYSHEV_DB),
            WindowKind::Kaiser => Self::kaiser(Self::DEFAULT_KAISER_BETA),
        }
    }

    pub fn kind(&self) -> WindowKind {
        match self {
            WindowSpec::RaisedCosine { .. } => WindowKind::RaisedCosine,
            WindowSpec::Taylor { .. } => WindowKind::Taylor,
            WindowSpec::Chebyshev { .. } => WindowKind::Chebyshev,
            WindowSpec::Kaiser { .. } => WindowKind::Kaiser,
        }
    }

    /// Named parameters, in the spelling used by config files.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            WindowSpec::RaisedCosine { pedestal } => vec![("pedestal", pedestal)],
            WindowSpec::Taylor { sidelobe_db, nbar } => {
                vec![("sll_db", sidelobe_db), ("nbar", nbar as f64)]
            }
            WindowSpec::Chebyshev { attenuation_db } => vec![("attenuation_db", attenuation_db)],
            WindowSpec::Kaiser { beta } => vec![("beta", beta)],
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            WindowSpec::RaisedCosine { pedestal } => {
                if !(0.0..=1.0).contains(&pedestal) {
                    return Err(Error::param(format!("pedestal {pedestal} outside [0, 1]")));
                }
            }
            WindowSpec::Taylor { sidelobe_db, nbar } => {
                if !(sidelobe_db.is_finite() && sidelobe_db > 0.0) {
                    return Err(Error::param(format!(
                        "taylor sidelobe level {sidelobe_db} dB must be positive"
                    )));
                }
                if nbar < 1 {
                    return Err(Error::param("taylor nbar must be at least 1"));
                }
            }
            WindowSpec::Chebyshev { attenuation_db } => {
                if !(attenuation_db.is_finite() && attenuation_db > 0.0) {
                    return Err(Error::param(format!(
                        "chebyshev attenuation {attenuation_db} dB must be positive"
                    )));
                }
            }
            WindowSpec::Kaiser { beta } => {
                if !(beta.is_finite() && beta >= 0.0) {
                    return Err(Error::param(format!("kaiser beta {beta} must be >= 0")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for WindowSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind())?;
        for (i, (name, value)) in self.params().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={value}")?;
        }
        f.write_str(")")
    }
}

/// Samples the PSD of `spec` at `num_points` frequencies across the band.
///
/// The result is even-symmetric, nonnegative and has a peak of exactly 1.
pub fn make_window(spec: &WindowSpec, num_points: usize) -> Result<Vec<f64>> {
    if num_points < 2 {
        return Err(Error::param(format!(
            "window needs at least 2 points, got {num_points}"
        )));
    }
    spec.validate()?;
    let mut w = match *spec {
        WindowSpec::RaisedCosine { pedestal } => raised_cosine(num_points, pedestal),
        WindowSpec::Taylor { sidelobe_db, nbar } => taylor(num_points, sidelobe_db, nbar),
        WindowSpec::Chebyshev { attenuation_db } => chebyshev(num_points, attenuation_db),
        WindowSpec::Kaiser { beta } => kaiser(num_points, beta),
    };

    let n = w.len();
    for i in 0..n / 2 {
        let avg = 0.5 * (w[i] + w[n - 1 - i]);
        w[i] = avg;
        w[n - 1 - i] = avg;
    }
    let min = w.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -1e-12 || w.iter().any(|v| !v.is_finite()) {
        return Err(Error::param(format!(
            "{spec} produces negative PSD samples (min {min:e})"
        )));
    }
    let peak = w.iter().copied().fold(0.0, f64::max);
    if peak <= 0.0 {
        return Err(Error::param(format!("{spec} is identically zero")));
    }
    for v in &mut w {
        *v = (*v / peak).max(0.0);
    }
    Ok(w)
}

/// Position of sample `i` on `[-1, 1]`, exactly antisymmetric about the center.
fn unit_position(i: usize, n: usize) -> f64 {
    (2.0 * i as f64 - (n - 1) as f64) / (n - 1) as f64
}

fn raised_cosine(n: usize, pedestal: f64) -> Vec<f64> {
    (0..n)
        .map(|i| {
            // f / B = u / 2
            let c = (0.5 * PI * unit_position(i, n)).cos();
            pedestal + (1.0 - pedestal) * c * c
        })
        .collect()
}

fn kaiser(n: usize, beta: f64) -> Vec<f64> {
    let denom = bessel_i0(beta);
    (0..n)
        .map(|i| {
            let u = unit_position(i, n);
            bessel_i0(beta * (1.0 - u * u).max(0.0).sqrt()) / denom
        })
        .collect()
}

fn taylor(n: usize, sidelobe_db: f64, nbar: usize) -> Vec<f64> {
    let r = 10f64.powf(sidelobe_db / 20.0);
    let a = r.acosh() / PI;
    let a2 = a * a;
    let nb = nbar as f64;
    let sigma2 = nb * nb / (a2 + (nb - 0.5) * (nb - 0.5));

    let coeffs: Vec<f64> = (1..nbar)
        .map(|m| {
            let m2 = (m * m) as f64;
            let numer: f64 = (1..nbar)
                .map(|p| 1.0 - m2 / (sigma2 * (a2 + (p as f64 - 0.5).powi(2))))
                .product();
            let denom: f64 = (1..nbar)
                .filter(|&p| p != m)
                .map(|p| 1.0 - m2 / (p * p) as f64)
                .product();
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            sign * numer / (2.0 * denom)
        })
        .collect();

    let half = (n as f64 - 1.0) / 2.0;
    (0..n)
        .map(|i| {
            let x = (i as f64 - half) / n as f64;
            1.0 + 2.0
                * coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * (2.0 * PI * (j + 1) as f64 * x).cos())
                    .sum::<f64>()
        })
        .collect()
}

/// Dolph-Chebyshev window via the DFT of the Chebyshev polynomial samples.
fn chebyshev(n: usize, attenuation_db: f64) -> Vec<f64> {
    let order = (n - 1) as f64;
    let beta = ((10f64.powf(attenuation_db / 20.0)).acosh() / order).cosh();
    let nf = n as f64;

    let mut p: Vec<Complex64> = (0..n)
        .map(|k| {
            let x = beta * (PI * k as f64 / nf).cos();
            let v = if x > 1.0 {
                (order * x.acosh()).cosh()
            } else if x < -1.0 {
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                sign * (order * (-x).acosh()).cosh()
            } else {
                (order * x.acos()).cos()
            };
            if n % 2 == 1 {
                Complex64::new(v, 0.0)
            } else {
                Complex64::from_polar(v, PI * k as f64 / nf)
            }
        })
        .collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut p);
    let re: Vec<f64> = p.iter().map(|z| z.re).collect();

    // re[0..half] holds the right half of the window starting at the center
    if n % 2 == 1 {
        let h = n.div_ceil(2);
        re[1..h]
            .iter()
            .rev()
            .chain(re[..h].iter())
            .copied()
            .collect()
    } else {
        let h = n / 2 + 1;
        re[1..h]
            .iter()
            .rev()
            .chain(re[1..h].iter())
            .copied()
            .collect()
    }
}

/// Modified Bessel function of the first kind, order zero (power series).
fn bessel_i0(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * k);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
        k += 1.0;
    }
    sum
}

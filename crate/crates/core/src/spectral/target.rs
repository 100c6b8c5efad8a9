use crate::error::{Error, Result};

/// Pulse and grid configuration shared by every stage of a design.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignParams {
    /// Pulse width `T` in seconds.
    pub pulse_width: f64,
    /// Swept bandwidth `B` in hertz.
    pub bandwidth: f64,
    /// Sample rate `fs` in hertz.
    pub sample_rate: f64,
    /// Frequency grid size `K`.
    pub grid_size: usize,
    /// Sample count `N = round(T * fs)`.
    pub num_samples: usize,
}

impl DesignParams {
    /// Validates the configuration; `grid_size = None` picks the smallest
    /// power of two that is at least `2N`.
    pub fn new(
        pulse_width: f64,
        bandwidth: f64,
        sample_rate: f64,
        grid_size: Option<usize>,
    ) -> Result<Self> {
        if !(pulse_width.is_finite() && pulse_width > 0.0) {
            return Err(Error::param(format!(
                "pulse width {pulse_width} must be > 0"
            )));
        }
        if !(bandwidth.is_finite() && bandwidth > 0.0) {
            return Err(Error::param(format!("bandwidth {bandwidth} must be > 0")));
        }
        if !(sample_rate.is_finite() && sample_rate >= bandwidth) {
            return Err(Error::param(format!(
                "sample rate {sample_rate} must be finite and >= bandwidth {bandwidth}"
            )));
        }
        let n = (pulse_width * sample_rate).round();
        if !(2.0..1e9).contains(&n) {
            return Err(Error::param(format!(
                "pulse holds {n} samples, need at least 2"
            )));
        }
        let num_samples = n as usize;
        let grid_size = grid_size.unwrap_or_else(|| (2 * num_samples).next_power_of_two());
        if grid_size < num_samples {
            return Err(Error::param(format!(
                "grid size K = {grid_size} must be >= N = {num_samples}"
            )));
        }
        Ok(DesignParams {
            pulse_width,
            bandwidth,
            sample_rate,
            grid_size,
            num_samples,
        })
    }

    /// 2.5 us pulse, 100 MHz sweep, 1 GHz sampling, default grid (K = 8192).
    pub fn baseline() -> Self {
        Self::new(2.5e-6, 100e6, 1e9, None).expect("valid defaults")
    }

    pub fn with_grid_size(self, grid_size: usize) -> Result<Self> {
        Self::new(
            self.pulse_width,
            self.bandwidth,
            self.sample_rate,
            Some(grid_size),
        )
    }

    /// Centered frequency of DFT bin `k`: `k fs / K` below `K/2`, `(k - K) fs / K` above.
    pub fn bin_frequency(&self, k: usize) -> f64 {
        let kk = self.grid_size as f64;
        if 2 * k < self.grid_size {
            k as f64 * self.sample_rate / kk
        } else {
            (k as f64 - kk) * self.sample_rate / kk
        }
    }

    /// Whether bin `k` lies in the closed band `[-B/2, B/2]`.
    pub fn is_in_band(&self, k: usize) -> bool {
        2.0 * self.bin_frequency(k).abs() <= self.bandwidth
    }

    /// In-band bins ordered by ascending frequency.
    pub fn band_bins(&self) -> Vec<usize> {
        let first_negative = self.grid_size.div_ceil(2);
        (first_negative..self.grid_size)
            .chain(0..first_negative)
            .filter(|&b| self.is_in_band(b))
            .collect()
    }

    /// Sample times `t_n = (n - (N-1)/2) / fs`, centered on the pulse.
    pub fn time_grid(&self) -> Vec<f64> {
        let center = (self.num_samples as f64 - 1.0) / 2.0;
        (0..self.num_samples)
            .map(|n| (n as f64 - center) / self.sample_rate)
            .collect()
    }
}

/// Target spectral magnitude `|Y(k)|` on the K-point grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralTarget {
    magnitude: Vec<f64>,
    band_bins: Vec<usize>,
    band_psd: Vec<f64>,
    params: DesignParams,
}

impl SpectralTarget {
    pub fn magnitude(&self) -> &[f64] {
        &self.magnitude
    }

    /// In-band bins in ascending frequency order.
    pub fn band_bins(&self) -> &[usize] {
        &self.band_bins
    }

    pub fn params(&self) -> &DesignParams {
        &self.params
    }

    pub fn energy(&self) -> f64 {
        self.magnitude.iter().map(|m| m * m).sum()
    }

    /// PSD (peak 1) at frequency `f`, linearly interpolated between the
    /// window samples; zero outside the band.
    pub fn psd_at(&self, f: f64) -> f64 {
        let half = 0.5 * self.params.bandwidth;
        if !(f.abs() <= half) {
            return 0.0;
        }
        let last = self.band_psd.len() - 1;
        let pos = ((f + half) / self.params.bandwidth * last as f64).clamp(0.0, last as f64);
        let i = (pos.floor() as usize).min(last - 1);
        let frac = pos - i as f64;
        self.band_psd[i] * (1.0 - frac) + self.band_psd[i + 1] * frac
    }
}

/// Maps PSD samples spanning `[-B/2, B/2]` onto the DFT grid as a magnitude
/// target `sqrt(PSD)`, scaled to a peak of 1.
pub fn build_spectral_target(window_psd: &[f64], params: &DesignParams) -> Result<SpectralTarget> {
    if window_psd.len() < 2 {
        return Err(Error::param(format!(
            "window PSD needs at least 2 samples, got {}",
            window_psd.len()
        )));
    }
    if let Some(bad) = window_psd.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
        return Err(Error::param(format!(
            "window PSD sample {bad} is not a finite nonnegative value"
        )));
    }
    let peak = window_psd.iter().copied().fold(0.0, f64::max);
    if peak <= 0.0 {
        return Err(Error::DegenerateTarget(
            "window PSD is identically zero".into(),
        ));
    }

    let band_bins = params.band_bins();
    let mut target = SpectralTarget {
        magnitude: vec![0.0; params.grid_size],
        band_psd: window_psd.iter().map(|v| v / peak).collect(),
        band_bins,
        params: *params,
    };
    for &k in &target.band_bins {
        target.magnitude[k] = target.psd_at(params.bin_frequency(k)).sqrt();
    }
    let mag_peak = target.magnitude.iter().copied().fold(0.0, f64::max);
    if mag_peak <= 0.0 {
        return Err(Error::DegenerateTarget(
            "no in-band bin carries energy".into(),
        ));
    }
    for m in &mut target.magnitude {
        *m /= mag_peak;
    }
    Ok(target)
}

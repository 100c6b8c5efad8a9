//! Window PSD to analyzed NLFM pulse in one call.

use crate::analysis::AnalysisReport;
use crate::error::Result;
use crate::pia::{self, DftOperator, IterationOutput, PiaResult, StopConfig, Waveform};
use crate::spc::{self, PhaseLaw};
use crate::spectral::{target_for_window, DesignParams, SpectralTarget, WindowSpec};

/// Everything produced by one design run.
#[derive(Debug, Clone)]
pub struct DesignOutcome {
    pub params: DesignParams,
    pub window: WindowSpec,
    pub target: SpectralTarget,
    pub phase_law: PhaseLaw,
    pub spc_waveform: Waveform,
    pub theta0: Vec<f64>,
    pub pia: PiaResult,
    pub spc_report: AnalysisReport,
    pub pia_report: AnalysisReport,
}

impl DesignOutcome {
    /// `psl(PIA) - psl(SPC)`; negative when the refinement helped.
    pub fn improvement_db(&self) -> Option<f64> {
        Some(self.pia_report.psl_db? - self.spc_report.psl_db?)
    }

    /// Ratio of PIA to SPC -3 dB mainlobe widths.
    pub fn mainlobe_ratio(&self) -> f64 {
        self.pia_report.mainlobe_width_samples / self.spc_report.mainlobe_width_samples
    }
}

pub fn design(
    params: &DesignParams,
    window: &WindowSpec,
    stop: &StopConfig,
) -> Result<DesignOutcome> {
    design_with(params, window, stop, |_, _| {})
}

/// [`design`] with an observer on every phase-improvement iteration.
pub fn design_with<F>(
    params: &DesignParams,
    window: &WindowSpec,
    stop: &StopConfig,
    observer: F,
) -> Result<DesignOutcome>
where
    F: FnMut(usize, &IterationOutput),
{
    stop.validate()?;
    let target = target_for_window(window, params)?;
    let op = DftOperator::new(params.grid_size, params.num_samples)?;
    let phase_law = spc::stationary_phase_law(&target)?;
    let theta0 = spc::initial_spectral_phase(&phase_law, &op)?;
    let pia = pia::run_pia_with(target.magnitude(), &theta0, &op, stop, observer)?;

    let spc_waveform = Waveform::from_phase(&phase_law.phase);
    let spc_report = AnalysisReport::new(spc_waveform.samples(), params.sample_rate);
    let pia_report = AnalysisReport::new(pia.waveform.samples(), params.sample_rate);
    Ok(DesignOutcome {
        params: *params,
        window: *window,
        target,
        phase_law,
        spc_waveform,
        theta0,
        pia,
        spc_report,
        pia_report,
    })
}

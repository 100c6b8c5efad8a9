//! Stationary-phase initialization: group delay from the cumulative PSD,
//! inverted into an instantaneous-frequency law. A flat PSD yields a chirp;
//! a tapered one sweeps fast at the band edges.

use nlfm_pia::analysis::AnalysisReport;
use nlfm_pia::spc;
use nlfm_pia::spectral::target_for_window;
use nlfm_pia::{DesignParams, WindowSpec};

fn main() -> nlfm_pia::Result<()> {
    let params = DesignParams::baseline();
    for spec in [WindowSpec::kaiser(0.0), WindowSpec::kaiser(4.7)] {
        let law = spc::stationary_phase_law(&target_for_window(&spec, &params)?)?;
        let report = AnalysisReport::new(&law.samples(), params.sample_rate);
        println!(
            "{spec}: PSL {:.2} dB, -3 dB width {:.2} samples",
            report.psl_db.unwrap_or(f64::NAN),
            report.mainlobe_width_samples
        );
        println!(
            "  {:>9} {:>11} {:>14}",
            "t (us)", "f (MHz)", "df/dt (MHz/us)"
        );
        let n = law.time_grid.len();
        for i in (0..n).step_by(n / 10).chain([n - 1]) {
            let j = (i + 1).min(n - 1).max(1);
            let slope = (law.inst_freq[j] - law.inst_freq[j - 1])
                / (law.time_grid[j] - law.time_grid[j - 1]);
            println!(
                "  {:>9.4} {:>11.4} {:>14.3}",
                law.time_grid[i] * 1e6,
                law.inst_freq[i] / 1e6,
                slope / 1e12
            );
        }
    }
    Ok(())
}

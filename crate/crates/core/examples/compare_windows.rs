//! PSL before and after phase refinement for all four default windows.

use nlfm_pia::export::{self, SummaryRecord};
use nlfm_pia::pipeline;
use nlfm_pia::{DesignParams, StopConfig, WindowKind, WindowSpec};

fn main() -> nlfm_pia::Result<()> {
    let params = DesignParams::baseline();
    let rows = WindowKind::ALL
        .iter()
        .map(|&k| {
            pipeline::design(&params, &WindowSpec::default_for(k), &StopConfig::default())
                .map(|o| SummaryRecord::from_outcome(&o))
        })
        .collect::<nlfm_pia::Result<Vec<_>>>()?;
    print!("{}", export::compare_text(&rows));
    Ok(())
}

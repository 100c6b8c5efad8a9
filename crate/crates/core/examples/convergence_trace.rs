//! Watches the refinement loop iteration by iteration through the observer
//! hook and prints the error curve on a log scale.

use nlfm_pia::pia::{self, DftOperator, StopConfig};
use nlfm_pia::spc;
use nlfm_pia::spectral::target_for_window;
use nlfm_pia::{DesignParams, WindowKind, WindowSpec};

fn main() -> nlfm_pia::Result<()> {
    let kind: WindowKind = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("kaiser")
        .parse()?;
    let params = DesignParams::baseline();
    let target = target_for_window(&WindowSpec::default_for(kind), &params)?;
    let op = DftOperator::new(params.grid_size, params.num_samples)?;
    let theta0 = spc::initial_spectral_phase(&spc::stationary_phase_law(&target)?, &op)?;

    let mut errors = Vec::new();
    let result = pia::run_pia_with(
        target.magnitude(),
        &theta0,
        &op,
        &StopConfig::default(),
        |_, out| errors.push(out.error_min),
    )?;

    // error_min is dominated by a constant offset; show how far above the
    // final value each iteration sits.
    let floor = result.trace.final_error_min();
    println!(
        "{} iterations, stop: {}",
        result.trace.iterations_run(),
        result.trace.stop_reason
    );
    println!("{:>5} {:>20} {:>14}", "iter", "error_min", "above final");
    for (r, e) in errors.iter().enumerate() {
        let r = r + 1;
        if r <= 10 || r.is_power_of_two() || r == errors.len() {
            println!("{r:>5} {e:>20.6} {:>14.6e}", e - floor);
        }
    }
    Ok(())
}

//! Spectral targets built from each default window: how many bins are in
//! band and what the PSD looks like across it.

use nlfm_pia::spectral::target_for_window;
use nlfm_pia::{DesignParams, WindowKind, WindowSpec};

fn main() -> nlfm_pia::Result<()> {
    let params = DesignParams::baseline();
    println!(
        "N = {}, K = {}, in-band bins = {}",
        params.num_samples,
        params.grid_size,
        params.band_bins().len()
    );
    let half = params.bandwidth / 2.0;
    let probes = [0.0, 0.25, 0.5, 0.75, 0.95, 1.0];
    print!("{:<38}", "window");
    for p in probes {
        print!(" {:>7}", format!("{p}B/2"));
    }
    println!();
    for kind in WindowKind::ALL {
        let spec = WindowSpec::default_for(kind);
        let target = target_for_window(&spec, &params)?;
        print!("{:<38}", spec.to_string());
        for p in probes {
            print!(" {:>7.4}", target.psd_at(p * half));
        }
        println!();
    }
    Ok(())
}

//! Autocorrelation metrics of an ideal linear chirp with the same
//! time-bandwidth product as the default design.

use std::f64::consts::PI;

use nlfm_pia::analysis::{self, AnalysisReport};
use nlfm_pia::{Complex64, DesignParams};

fn main() {
    let p = DesignParams::baseline();
    let rate = PI * p.bandwidth / p.pulse_width;
    let x: Vec<Complex64> = p
        .time_grid()
        .iter()
        .map(|&t| Complex64::from_polar(1.0, rate * t * t))
        .collect();
    let r = AnalysisReport::new(&x, p.sample_rate);
    println!("BT = {:.0}", p.bandwidth * p.pulse_width);
    println!(
        "mainlobe ends at lag {:?}",
        analysis::mainlobe_end(&r.acf_db)
    );
    println!(
        "PSL {:.3} dB, ISL {:.3} dB, -3 dB width {:.3} samples",
        r.psl_db.unwrap(),
        r.isl_db.unwrap(),
        r.mainlobe_width_samples
    );
    let (lo, hi) = (r.inst_freq[0], r.inst_freq[r.inst_freq.len() - 1]);
    println!("sweep {:.3} .. {:.3} MHz", lo / 1e6, hi / 1e6);
}

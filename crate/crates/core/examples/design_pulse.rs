//! Full design for one window, with artifacts written as CSV.
//!
//!     cargo run --release --example design_pulse [kind] [out_dir]

use std::fs;
use std::path::PathBuf;

use nlfm_pia::export::{self, SummaryRecord};
use nlfm_pia::pipeline;
use nlfm_pia::{DesignParams, StopConfig, WindowKind, WindowSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let kind: WindowKind = args.next().as_deref().unwrap_or("kaiser").parse()?;
    let out = PathBuf::from(args.next().unwrap_or_else(|| "out/design".into()));

    let params = DesignParams::baseline();
    let outcome = pipeline::design(
        &params,
        &WindowSpec::default_for(kind),
        &StopConfig::default(),
    )?;
    print!("{}", SummaryRecord::from_outcome(&outcome).text());
    println!("mainlobe ratio = {:.3}", outcome.mainlobe_ratio());

    fs::create_dir_all(&out)?;
    fs::write(
        out.join("waveform.csv"),
        export::waveform_csv(&outcome.pia.waveform, &params),
    )?;
    fs::write(
        out.join("acf_pia.csv"),
        export::acf_csv(&outcome.pia_report.acf_db, params.sample_rate),
    )?;
    fs::write(
        out.join("acf_spc.csv"),
        export::acf_csv(&outcome.spc_report.acf_db, params.sample_rate),
    )?;
    println!("wrote {}", out.display());
    Ok(())
}

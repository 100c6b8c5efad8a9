//! Sweeps each window's shape parameter at the default pulse setup and
//! prints SPC and refined PSLs, so the defaults can be re-chosen.
//!
//!     cargo run --release --example calibrate_windows [kind [lo hi step [nbar]]]

use nlfm_pia::pipeline;
use nlfm_pia::{DesignParams, StopConfig, WindowKind, WindowSpec};

fn steps(lo: f64, hi: f64, step: f64) -> impl Iterator<Item = f64> + Clone {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(move |i| ((lo + i as f64 * step) * 1e6).round() / 1e6)
}

/// One parameter over `lo..=hi`; Taylor holds `nbar` fixed.
fn custom(kind: WindowKind, lo: f64, hi: f64, step: f64, nbar: usize) -> Vec<WindowSpec> {
    steps(lo, hi, step)
        .map(|v| match kind {
            WindowKind::RaisedCosine => WindowSpec::raised_cosine(v),
            WindowKind::Taylor => WindowSpec::taylor(v, nbar),
            WindowKind::Chebyshev => WindowSpec::chebyshev(v),
            WindowKind::Kaiser => WindowSpec::kaiser(v),
        })
        .collect()
}

fn candidates(kind: WindowKind) -> Vec<WindowSpec> {
    match kind {
        WindowKind::RaisedCosine => steps(0.005, 0.12, 0.005)
            .map(WindowSpec::raised_cosine)
            .collect(),
        WindowKind::Taylor => (2..=8)
            .flat_map(|nbar| steps(30.0, 50.0, 1.0).map(move |sll| WindowSpec::taylor(sll, nbar)))
            .collect(),
        WindowKind::Chebyshev => steps(30.0, 55.0, 0.25).map(WindowSpec::chebyshev).collect(),
        WindowKind::Kaiser => steps(3.0, 8.0, 0.1).map(WindowSpec::kaiser).collect(),
    }
}

fn main() -> nlfm_pia::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize| -> nlfm_pia::Result<f64> {
        args[i]
            .parse()
            .map_err(|_| nlfm_pia::Error::Parameter(format!("bad number '{}'", args[i])))
    };
    let runs: Vec<(WindowKind, Vec<WindowSpec>)> = match args.len() {
        0 => WindowKind::ALL
            .iter()
            .map(|&k| (k, candidates(k)))
            .collect(),
        1 => {
            let k = args[0].parse()?;
            vec![(k, candidates(k))]
        }
        4 | 5 => {
            let k = args[0].parse()?;
            let nbar = if args.len() == 5 { num(4)? as usize } else { 5 };
            vec![(k, custom(k, num(1)?, num(2)?, num(3)?, nbar))]
        }
        _ => {
            return Err(nlfm_pia::Error::Parameter(
                "usage: calibrate_windows [kind [lo hi step [nbar]]]".into(),
            ))
        }
    };
    let params = DesignParams::baseline();
    let stop = StopConfig::default();
    println!(
        "{:<14} {:<22} {:>9} {:>9} {:>8} {:>6}",
        "window", "spec", "spc", "pia", "change", "iters"
    );
    for (kind, specs) in runs {
        for spec in specs {
            let out = pipeline::design(&params, &spec, &stop)?;
            let f = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.2}"));
            println!(
                "{:<14} {:<22} {:>9} {:>9} {:>8} {:>6}",
                kind.name(),
                spec.to_string(),
                f(out.spc_report.psl_db),
                f(out.pia_report.psl_db),
                f(out.improvement_db()),
                out.pia.trace.iterations_run()
            );
        }
    }
    Ok(())
}

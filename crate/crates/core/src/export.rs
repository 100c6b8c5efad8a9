//! Plain-text exports. Numbers use 12 significant digits (C `%.12g`
//! style) and every row ends in `\n`, so identical runs give identical bytes.

use std::fmt::Write as _;

use crate::analysis::DB_FLOOR;
use crate::pia::{IterationTrace, Waveform};
use crate::pipeline::DesignOutcome;
use crate::spectral::DesignParams;

/// Written in place of a PSL/ISL when the ACF has no sidelobes.
pub const NO_SIDELOBES: &str = "<-300";

pub const WAVEFORM_HEADER: &str = "n,t_us,i,q";
pub const ACF_HEADER: &str = "lag,lag_us,acf_db";
pub const TRACE_HEADER: &str = "iter,error_min,delta_error";
pub const SUMMARY_HEADER: &str = "window,params,psl_spc_db,psl_pia_db,improvement_db,isl_db,mainlobe_width,iterations_run,stop_reason,final_error_min";
pub const COMPARE_HEADER: &str = "window,params,psl_spc_db,psl_pia_db,improvement_db";

/// Formats `v` like C's `%.12g`.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    const SIG: i32 = 12;
    let sci = format!("{:.*e}", (SIG - 1) as usize, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..SIG).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    } else {
        let decimals = (SIG - 1 - exp) as usize;
        trim_zeros(&format!("{:.*}", decimals, v)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn fmt_level(v: Option<f64>) -> String {
    match v {
        Some(db) if db > DB_FLOOR => fmt_num(db),
        _ => NO_SIDELOBES.to_string(),
    }
}

/// `n,t_us,i,q`, with `I + jQ = A x(n)` at `t_n = (n - (N-1)/2) / fs`.
pub fn waveform_csv(waveform: &Waveform, params: &DesignParams) -> String {
    let mut out = String::from(WAVEFORM_HEADER);
    out.push('\n');
    for ((n, t), z) in params.time_grid().iter().enumerate().zip(waveform.scaled()) {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            n,
            fmt_num(t * 1e6),
            fmt_num(z.re),
            fmt_num(z.im)
        );
    }
    out
}

pub fn acf_csv(acf_db: &[f64], sample_rate: f64) -> String {
    let mut out = String::from(ACF_HEADER);
    out.push('\n');
    for (lag, db) in acf_db.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{}",
            lag,
            fmt_num(lag as f64 / sample_rate * 1e6),
            fmt_num(*db)
        );
    }
    out
}

/// One row per iteration; `delta_error` is empty on the first row. A final
/// row with a nonnegative delta is the rejected step.
pub fn trace_csv(trace: &IterationTrace) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for r in &trace.records {
        let delta = r.delta_error.map(fmt_num).unwrap_or_default();
        let _ = writeln!(out, "{},{},{}", r.iteration, fmt_num(r.error_min), delta);
    }
    out
}

/// Per-run summary: PSL before and after refinement plus convergence facts.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRecord {
    pub window: String,
    pub params: String,
    pub psl_spc_db: Option<f64>,
    pub psl_pia_db: Option<f64>,
    pub improvement_db: Option<f64>,
    pub isl_db: Option<f64>,
    pub mainlobe_width: f64,
    pub iterations_run: usize,
    pub stop_reason: String,
    pub final_error_min: f64,
}

impl SummaryRecord {
    pub fn from_outcome(outcome: &DesignOutcome) -> Self {
        SummaryRecord {
            window: outcome.window.kind().to_string(),
            params: window_params(&outcome.window),
            psl_spc_db: outcome.spc_report.psl_db,
            psl_pia_db: outcome.pia_report.psl_db,
            improvement_db: outcome.improvement_db(),
            isl_db: outcome.pia_report.isl_db,
            mainlobe_width: outcome.pia_report.mainlobe_width_samples,
            iterations_run: outcome.pia.trace.iterations_run(),
            stop_reason: outcome.pia.trace.stop_reason.to_string(),
            final_error_min: outcome.pia.trace.final_error_min(),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.window,
            self.params,
            fmt_level(self.psl_spc_db),
            fmt_level(self.psl_pia_db),
            self.improvement_db
                .map(fmt_num)
                .unwrap_or_else(|| "nan".into()),
            fmt_level(self.isl_db),
            fmt_num(self.mainlobe_width),
            self.iterations_run,
            self.stop_reason,
            fmt_num(self.final_error_min),
        )
    }

    pub fn csv(&self) -> String {
        format!("{SUMMARY_HEADER}\n{}\n", self.csv_row())
    }

    /// `key = value` lines in the same syntax as run configs.
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "window = {}", self.window);
        let _ = writeln!(out, "params = {}", self.params);
        let _ = writeln!(out, "psl_spc_db = {}", fmt_level(self.psl_spc_db));
        let _ = writeln!(out, "psl_pia_db = {}", fmt_level(self.psl_pia_db));
        let _ = writeln!(
            out,
            "improvement_db = {}",
            self.improvement_db
                .map(fmt_num)
                .unwrap_or_else(|| "nan".into())
        );
        let _ = writeln!(out, "isl_db = {}", fmt_level(self.isl_db));
        let _ = writeln!(out, "mainlobe_width = {}", fmt_num(self.mainlobe_width));
        let _ = writeln!(out, "iterations_run = {}", self.iterations_run);
        let _ = writeln!(out, "stop_reason = {}", self.stop_reason);
        let _ = writeln!(out, "final_error_min = {}", fmt_num(self.final_error_min));
        out
    }
}

/// `name=value` pairs joined by `;`, e.g. `sll_db=42;nbar=5`.
pub fn window_params(spec: &crate::spectral::WindowSpec) -> String {
    spec.params()
        .iter()
        .map(|(k, v)| format!("{k}={}", fmt_num(*v)))
        .collect::<Vec<_>>()
        .join(";")
}

/// Mean of the defined improvements.
pub fn average_improvement(rows: &[SummaryRecord]) -> Option<f64> {
    let vals: Vec<f64> = rows.iter().filter_map(|r| r.improvement_db).collect();
    if vals.is_empty() {
        None
    } else {
        Some(vals.iter().sum::<f64>() / vals.len() as f64)
    }
}

/// Comparison table: one row per window and a closing `average` row.
pub fn compare_csv(rows: &[SummaryRecord]) -> String {
    let mut out = String::from(COMPARE_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.window,
            r.params,
            fmt_level(r.psl_spc_db),
            fmt_level(r.psl_pia_db),
            r.improvement_db
                .map(fmt_num)
                .unwrap_or_else(|| "nan".into())
        );
    }
    let avg = average_improvement(rows)
        .map(fmt_num)
        .unwrap_or_else(|| "nan".into());
    let _ = writeln!(out, "average,,,,{avg}");
    out
}

pub fn compare_text(rows: &[SummaryRecord]) -> String {
    let level = |v: Option<f64>| {
        v.map(|x| format!("{x:.2}"))
            .unwrap_or_else(|| NO_SIDELOBES.into())
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:<22} {:>12} {:>12} {:>12}",
        "window", "params", "SPC PSL dB", "PIA PSL dB", "change dB"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<14} {:<22} {:>12} {:>12} {:>12}",
            r.window,
            r.params,
            level(r.psl_spc_db),
            level(r.psl_pia_db),
            level(r.improvement_db)
        );
    }
    let _ = writeln!(
        out,
        "{:<14} {:<22} {:>12} {:>12} {:>12}",
        "average",
        "",
        "",
        "",
        level(average_improvement(rows))
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_follow_percent_g() {
        let cases = [
            (0.0, "0"),
            (-0.0, "0"),
            (1.0, "1"),
            (-2.5, "-2.5"),
            (0.1, "0.1"),
            (1.0 / 3.0, "0.333333333333"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (0.0001234, "0.0001234"),
            (0.00001234, "1.234e-05"),
            (-1e-300, "-1e-300"),
            (20290728.864735514, "20290728.8647"),
            (-36.98, "-36.98"),
            (9.9999999999999, "10"),
        ];
        for (v, want) in cases {
            assert_eq!(fmt_num(v), want, "{v}");
        }
    }

    #[test]
    fn sentinel_for_missing_sidelobes() {
        assert_eq!(fmt_level(None), NO_SIDELOBES);
        assert_eq!(fmt_level(Some(DB_FLOOR)), NO_SIDELOBES);
        assert_eq!(fmt_level(Some(-13.5)), "-13.5");
    }

    #[test]
    fn single_row_average_is_that_row() {
        let row = SummaryRecord {
            window: "kaiser".into(),
            params: "beta=4.7".into(),
            psl_spc_db: Some(-31.0),
            psl_pia_db: Some(-36.5),
            improvement_db: Some(-5.5),
            isl_db: Some(-20.0),
            mainlobe_width: 10.0,
            iterations_run: 12,
            stop_reason: "converged".into(),
            final_error_min: 1.0,
        };
        assert_eq!(average_improvement(std::slice::from_ref(&row)), Some(-5.5));
        let csv = compare_csv(&[row]);
        assert_eq!(csv, "window,params,psl_spc_db,psl_pia_db,improvement_db\nkaiser,beta=4.7,-31,-36.5,-5.5\naverage,,,,-5.5\n");
    }
}

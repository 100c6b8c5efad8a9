use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::CliError;
use crate::pia::StopConfig;
use crate::spectral::{DesignParams, WindowKind, WindowSpec};

/// Artifacts a run can write.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Emit {
    Waveform,
    Acf,
    Trace,
    Summary,
}

impl Emit {
    pub const ALL: [Emit; 4] = [Emit::Waveform, Emit::Acf, Emit::Trace, Emit::Summary];
}

impl fmt::Display for Emit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Emit::Waveform => "waveform",
            Emit::Acf => "acf",
            Emit::Trace => "trace",
            Emit::Summary => "summary",
        })
    }
}

impl FromStr for Emit {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim() {
            "waveform" => Ok(Emit::Waveform),
            "acf" => Ok(Emit::Acf),
            "trace" => Ok(Emit::Trace),
            "summary" => Ok(Emit::Summary),
            other => Err(CliError::Usage(format!("unknown emit target '{other}'"))),
        }
    }
}

pub fn parse_emit_list(s: &str) -> Result<BTreeSet<Emit>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect()
}

const KEYS: &[&str] = &[
    "pulse_width_us",
    "bandwidth_mhz",
    "sample_rate_mhz",
    "grid_size_k",
    "amplitude",
    "window.kind",
    "window.param.pedestal",
    "window.param.sll_db",
    "window.param.nbar",
    "window.param.attenuation_db",
    "window.param.beta",
    "stop.max_iterations",
    "stop.rel_tolerance",
    "output.dir",
    "output.emit",
];

/// Ordered `key -> value` pairs read from a flat `key = value` file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawConfig {
    entries: BTreeMap<String, String>,
}

impl RawConfig {
    /// Parses `key = value` lines; `#` starts a comment, blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut raw = RawConfig::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("line {}: expected key = value", lineno + 1))
            })?;
            raw.set(key.trim(), value.trim())
                .map_err(|e| CliError::Usage(format!("line {}: {e}", lineno + 1)))?;
        }
        Ok(raw)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        if !KEYS.contains(&key) {
            return Err(CliError::Usage(format!("unknown config key '{key}'")));
        }
        self.entries.insert(key.to_string(), value.to_string());
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    fn num<T: FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| CliError::Usage(format!("{key}: cannot parse '{v}'"))),
        }
    }

    /// Window spec for `kind`, calibrated defaults overridden by any
    /// `window.param.*` keys that belong to that kind.
    pub fn window_for(&self, kind: WindowKind) -> Result<WindowSpec, CliError> {
        let spec = match WindowSpec::default_for(kind) {
            WindowSpec::RaisedCosine { pedestal } => {
                WindowSpec::raised_cosine(self.num("window.param.pedestal", pedestal)?)
            }
            WindowSpec::Taylor { sidelobe_db, nbar } => WindowSpec::taylor(
                self.num("window.param.sll_db", sidelobe_db)?,
                self.num("window.param.nbar", nbar)?,
            ),
            WindowSpec::Chebyshev { attenuation_db } => {
                WindowSpec::chebyshev(self.num("window.param.attenuation_db", attenuation_db)?)
            }
            WindowSpec::Kaiser { beta } => WindowSpec::kaiser(self.num("window.param.beta", beta)?),
        };
        spec.validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(spec)
    }
}

/// Fully validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub design: DesignParams,
    pub window: WindowSpec,
    pub stop: StopConfig,
    pub amplitude: f64,
    pub out_dir: PathBuf,
    pub emit: BTreeSet<Emit>,
    raw: RawConfig,
}

impl RunConfig {
    pub fn from_raw(raw: RawConfig) -> Result<Self, CliError> {
        let usage = |e: crate::Error| CliError::Usage(e.to_string());
        let grid = match raw.get("grid_size_k") {
            None | Some("auto") => None,
            Some(_) => Some(raw.num::<usize>("grid_size_k", 0)?),
        };
        let design = DesignParams::new(
            raw.num("pulse_width_us", 2.5)? / 1e6,
            raw.num("bandwidth_mhz", 100.0)? * 1e6,
            raw.num("sample_rate_mhz", 1000.0)? * 1e6,
            grid,
        )
        .map_err(usage)?;

        let kind: WindowKind = raw
            .get("window.kind")
            .unwrap_or("kaiser")
            .parse()
            .map_err(usage)?;
        let window = raw.window_for(kind)?;

        let stop = StopConfig::new(
            raw.num("stop.max_iterations", StopConfig::default().max_iterations)?,
            raw.num("stop.rel_tolerance", StopConfig::default().rel_tolerance)?,
        )
        .map_err(usage)?;

        let amplitude: f64 = raw.num("amplitude", 1.0)?;
        if !(amplitude.is_finite() && amplitude > 0.0) {
            return Err(CliError::Usage(format!(
                "amplitude {amplitude} must be positive"
            )));
        }

        let emit = match raw.get("output.emit") {
            None => Emit::ALL.into_iter().collect(),
            Some(list) => parse_emit_list(list)?,
        };
        if emit.is_empty() {
            return Err(CliError::Usage("emit list is empty".into()));
        }

        Ok(RunConfig {
            design,
            window,
            stop,
            amplitude,
            out_dir: PathBuf::from(raw.get("output.dir").unwrap_or("out")),
            emit,
            raw,
        })
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        Self::from_raw(RawConfig::parse(text)?)
    }

    /// Same configuration with a different window kind.
    pub fn for_window(&self, kind: WindowKind) -> Result<Self, CliError> {
        let mut cfg = self.clone();
        cfg.window = self.raw.window_for(kind)?;
        cfg.raw.set("window.kind", kind.name())?;
        Ok(cfg)
    }

    pub fn raw(&self) -> &RawConfig {
        &self.raw
    }
}

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_N_SAMPLES: usize = 4096;
pub const DEFAULT_N_THETA: usize = 256;
/// ε = 2^-3 .. 2^-10.
pub const DEFAULT_EPS_EXPONENTS: std::ops::RangeInclusive<i32> = 3..=10;
pub const OUT_DIR_ENV: &str = "HYPOTROCHOID_OUT_DIR";

pub fn default_eps_grid() -> Vec<f64> {
    DEFAULT_EPS_EXPONENTS.map(|e| 2f64.powi(-e)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

/// Everything that determines a command's output.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub params: Value,
    pub format: Format,
    pub seed: u64,
    pub defaults: Value,
    pub version: &'static str,
}

impl RunConfig {
    pub fn new(command: &'static str, params: Value, format: Format, seed: u64) -> Self {
        RunConfig {
            command,
            params,
            format,
            seed,
            defaults: json!({
                "n_samples": DEFAULT_N_SAMPLES,
                "n_theta": DEFAULT_N_THETA,
                "eps_grid": "2^-3..2^-10",
            }),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn require_format(&self, allowed: &[Format]) -> CliResult<()> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "{} does not support format {:?}; use one of {:?}",
                self.command, self.format, allowed
            )))
        }
    }

    /// One-line `key=value` summary for text and CSV headers.
    pub fn header_line(&self) -> String {
        let mut parts = vec![format!("command={}", self.command)];
        if let Value::Object(m) = &self.params {
            for (k, v) in m {
                parts.push(format!("{k}={}", compact(v)));
            }
        }
        parts.push(format!("seed={}", self.seed));
        if let Value::Object(d) = &self.defaults {
            for (k, v) in d {
                if self.params.get(k).is_none() {
                    parts.push(format!("{k}={}", compact(v)));
                }
            }
        }
        parts.push(format!("version={}", self.version));
        parts.join(" ")
    }

    /// `{"config": .., "result": ..}`, pretty printed.
    pub fn wrap_json(&self, result: Value) -> String {
        let doc = json!({ "config": self, "result": result });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub fn wrap_text(&self, body: &str) -> String {
        format!("# {}\n{body}", self.header_line())
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Relative output paths go under `$HYPOTROCHOID_OUT_DIR` when it is set.
pub fn resolve_out(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() && !dir.is_empty() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Writes to `out` if given, else to stdout.
pub fn emit(out: Option<&Path>, body: &str) -> CliResult<()> {
    match out {
        Some(p) => {
            let p = resolve_out(p);
            std::fs::write(&p, body).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            eprintln!("wrote {}", p.display());
            Ok(())
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let g = default_eps_grid();
        assert_eq!(g.len(), 8);
        assert_eq!(g[0], 0.125);
        assert_eq!(*g.last().unwrap(), 2f64.powi(-10));
    }

    #[test]
    fn header_echoes_params_and_defaults_once() {
        let cfg = RunConfig::new("curve", json!({ "k": 3, "n_samples": 512 }), Format::Svg, 7);
        let h = cfg.header_line();
        assert!(h.starts_with("command=curve k=3 n_samples=512 seed=7"));
        assert_eq!(h.matches("n_samples").count(), 1);
        assert!(h.contains("n_theta=256") && h.contains("eps_grid=2^-3..2^-10"));
    }

    #[test]
    fn format_restriction() {
        let cfg = RunConfig::new("kappa", json!({}), Format::Svg, DEFAULT_SEED);
        assert!(matches!(cfg.require_format(&[Format::Text, Format::Json]), Err(CliError::Usage(_))));
    }
}

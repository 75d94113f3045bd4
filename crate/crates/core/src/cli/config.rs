//! `key = value` configuration for the command-line front end.
//!
//! ```text
//! # comments start with '#'
//! precision      = standard     # or extended
//! tol_abs        = 1e-8         # replaces entry tolerances in verify/suite
//! tol_rel        = 0
//! contour_height = 200
//! term_cap       = 10000000
//! format         = text         # json, csv or text
//! output         = report.json
//! ```
//!
//! The file is `summa.conf` in the working directory unless `SUMMA_CONFIG`
//! names another one; `--config` beats both, and flags beat the file.

use crate::error::{Error, Result};
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub const CONFIG_ENV: &str = "SUMMA_CONFIG";
pub const DEFAULT_CONFIG_FILE: &str = "summa.conf";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrecisionMode {
    /// Ten significant digits in text and CSV output.
    #[default]
    Standard,
    /// Seventeen significant digits; arithmetic stays in `f64` either way.
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for PrecisionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Self::Standard),
            "extended" => Ok(Self::Extended),
            _ => Err(Error::Config(format!("precision must be standard or extended, got '{s}'"))),
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            _ => Err(Error::Config(format!("format must be json, csv or text, got '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub precision: PrecisionMode,
    /// `None` keeps each entry's own tolerance.
    pub tol_abs: Option<f64>,
    pub tol_rel: f64,
    pub contour_height: f64,
    pub term_cap: usize,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            precision: PrecisionMode::Standard,
            tol_abs: None,
            tol_rel: 0.0,
            contour_height: crate::mellin::DEFAULT_HEIGHT,
            term_cap: 10_000_000,
            format: OutputFormat::Text,
            output: None,
        }
    }
}

fn number<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Config(format!("malformed value for {key}: '{v}'")))
}

impl CliConfig {
    /// Parse the text format; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", i + 1)))?;
            match k {
                "precision" => c.precision = v.parse()?,
                "tol_abs" => c.tol_abs = Some(number(k, v)?),
                "tol_rel" => c.tol_rel = number(k, v)?,
                "contour_height" => c.contour_height = number(k, v)?,
                "term_cap" => c.term_cap = number::<f64>(k, v)? as usize,
                "format" => c.format = v.parse()?,
                "output" => c.output = Some(PathBuf::from(v)),
                _ => return Err(Error::Config(format!("line {}: unknown key '{k}'", i + 1))),
            }
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.tol_abs.is_some_and(|t| !(t > 0.0)) || !(self.tol_rel >= 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if !(self.contour_height > 0.0) {
            return Err(Error::Config("contour_height must be positive".into()));
        }
        if self.term_cap < 1000 {
            return Err(Error::Config(format!("term_cap must be at least 1000, got {}", self.term_cap)));
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Explicit path, else `SUMMA_CONFIG`, else `summa.conf` if it exists,
    /// else defaults. A named file that is missing is an error.
    pub fn discover(explicit: Option<&Path>) -> Result<Self> {
        if let Some(p) = explicit {
            return Self::load(p);
        }
        if let Some(p) = std::env::var_os(CONFIG_ENV) {
            return Self::load(Path::new(&p));
        }
        let default = Path::new(DEFAULT_CONFIG_FILE);
        if default.exists() {
            Self::load(default)
        } else {
            Ok(Self::default())
        }
    }

    /// Significant digits for text and CSV output.
    pub fn digits(&self) -> usize {
        match self.precision {
            PrecisionMode::Standard => 10,
            PrecisionMode::Extended => 17,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_key() {
        let c = CliConfig::parse(
            "# run settings\nprecision = extended\ntol_abs = 1e-8\ntol_rel=1e-12\ncontour_height = 80\nterm_cap = 1e6\nformat = json # inline\noutput = out.json\n",
        )
        .unwrap();
        assert_eq!(c.precision, PrecisionMode::Extended);
        assert_eq!(c.tol_abs, Some(1e-8));
        assert_eq!(c.tol_rel, 1e-12);
        assert_eq!(c.contour_height, 80.0);
        assert_eq!(c.term_cap, 1_000_000);
        assert_eq!(c.format, OutputFormat::Json);
        assert_eq!(c.output, Some(PathBuf::from("out.json")));
        assert_eq!(c.digits(), 17);
    }

    #[test]
    fn empty_text_gives_defaults() {
        assert_eq!(CliConfig::parse("\n  # nothing\n").unwrap(), CliConfig::default());
    }

    #[test]
    fn rejects_bad_input() {
        for text in ["tol_abs = 0", "contour_height = -1", "term_cap = 10", "colour = red", "format = xml", "precision", "tol_rel = x"] {
            assert!(matches!(CliConfig::parse(text), Err(Error::Config(_))), "{text}");
        }
    }

    #[test]
    fn explicit_path_wins() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("a.conf");
        std::fs::write(&p, "format = csv\n").unwrap();
        assert_eq!(CliConfig::discover(Some(&p)).unwrap().format, OutputFormat::Csv);
        assert!(CliConfig::discover(Some(&dir.path().join("missing.conf"))).is_err());
    }
}

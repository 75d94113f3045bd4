//! Registry of verifiable identities and the residual engine.
//!
//! Every entry pairs two evaluators over a sampled parameter domain. A check
//! passes only when each residual is within tolerance and the tolerance
//! exceeds the truncation bounds reported by both sides.

mod arith;
mod catalog;
mod exp;
mod mellin_form;
mod muntz;
mod report;
mod summation;
mod theta;

pub use catalog::catalog;
pub use report::{format_float, suite_json};

use crate::error::{Error, Result};
use crate::mellin::TestFunction;
use num_complex::Complex64;
use rayon::prelude::*;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

/// One sampling point; unused coordinates are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: Option<f64>,
    pub s: Option<Complex64>,
    pub k: Option<u32>,
}

impl Point {
    pub fn x(x: f64) -> Self {
        Self { x: Some(x), ..Self::default() }
    }

    pub fn s(re: f64, im: f64) -> Self {
        Self { s: Some(Complex64::new(re, im)), ..Self::default() }
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    fn need_x(&self) -> Result<f64> {
        self.x.ok_or_else(|| Error::Config("entry needs an x coordinate".into()))
    }

    fn need_s(&self) -> Result<Complex64> {
        self.s.ok_or_else(|| Error::Config("entry needs an s coordinate".into()))
    }

    fn need_k(&self) -> Result<u32> {
        self.k.ok_or_else(|| Error::Config("entry needs a k coordinate".into()))
    }
}

/// Value of one side of an identity with its truncation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Side {
    pub value: Complex64,
    pub bound: f64,
}

impl Side {
    pub fn real(value: f64, bound: f64) -> Self {
        Self { value: Complex64::new(value, 0.0), bound }
    }

    pub fn complex(value: Complex64, bound: f64) -> Self {
        Self { value, bound }
    }

    /// An exactly known value.
    pub fn exact(value: f64) -> Self {
        Self::real(value, 0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    pub const fn abs(abs: f64) -> Self {
        Self { abs, rel: 0.0 }
    }

    pub fn at(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }
}

/// Evaluation context handed to the evaluators.
pub struct Ctx {
    pub f: Option<TestFunction>,
}

impl Ctx {
    fn f(&self) -> Result<&TestFunction> {
        self.f.as_ref().ok_or_else(|| Error::Config("entry needs a test function".into()))
    }
}

pub type Evaluator = fn(&Point, &Ctx) -> Result<Side>;
pub type HypothesisCheck = fn(&Point, &TestFunction) -> Result<()>;

/// One verifiable equation.
#[derive(Clone)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// Short statement of where the identity comes from.
    pub anchor: &'static str,
    pub domain: Vec<Point>,
    pub tolerance: Tolerance,
    /// Default test function, for entries parameterized by one.
    pub function: Option<&'static str>,
    pub notes: Vec<&'static str>,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
    pub hypothesis: Option<HypothesisCheck>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub point: Point,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub lhs_bound: f64,
    pub rhs_bound: f64,
    pub tolerance: f64,
}

impl Sample {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance && self.lhs_bound + self.rhs_bound < self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Timestamps {
    pub started_unix: f64,
    pub elapsed_seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub id: String,
    pub function: Option<String>,
    pub samples: Vec<Sample>,
    pub passed: bool,
    pub notes: Vec<String>,
    pub timestamps: Option<Timestamps>,
}

impl CheckReport {
    pub fn max_residual(&self) -> f64 {
        self.samples.iter().map(|s| s.residual).fold(0.0, f64::max)
    }
}

/// Caller overrides of an entry's domain, tolerance or test function.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub x: Option<Vec<f64>>,
    pub s: Option<Vec<Complex64>>,
    pub k: Option<Vec<u32>>,
    pub tol: Option<f64>,
    pub function: Option<String>,
    pub timestamps: bool,
}

fn distinct<T: PartialEq + Copy>(values: impl Iterator<Item = Option<T>>) -> Vec<Option<T>> {
    let mut out: Vec<Option<T>> = Vec::new();
    for v in values {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn replace<T: Copy>(name: &str, current: Vec<Option<T>>, given: &Option<Vec<T>>) -> Result<Vec<Option<T>>> {
    match given {
        None => Ok(current),
        Some(_) if current.iter().all(Option::is_none) => Err(Error::Config(format!("entry takes no {name} parameter"))),
        Some(v) if v.is_empty() => Err(Error::Config(format!("empty {name} override"))),
        Some(v) => Ok(v.iter().map(|&t| Some(t)).collect()),
    }
}

impl IdentityEntry {
    /// Sampling points after applying overrides.
    pub fn points(&self, o: &Overrides) -> Result<Vec<Point>> {
        if o.x.is_none() && o.s.is_none() && o.k.is_none() {
            return Ok(self.domain.clone());
        }
        let xs = replace("x", distinct(self.domain.iter().map(|p| p.x)), &o.x)?;
        let ss = replace("s", distinct(self.domain.iter().map(|p| p.s)), &o.s)?;
        let ks = replace("k", distinct(self.domain.iter().map(|p| p.k)), &o.k)?;
        let mut out = Vec::new();
        for &x in &xs {
            for &s in &ss {
                for &k in &ks {
                    out.push(Point { x, s, k });
                }
            }
        }
        Ok(out)
    }

    fn context(&self, o: &Overrides) -> Result<Ctx> {
        let name = match (&o.function, self.function) {
            (Some(_), None) => return Err(Error::Config(format!("{} takes no test function", self.id))),
            (Some(n), Some(_)) => Some(n.as_str()),
            (None, d) => d,
        };
        Ok(Ctx { f: name.map(str::parse::<TestFunction>).transpose()? })
    }

    /// Evaluate both sides on the (possibly overridden) domain.
    pub fn check(&self, o: &Overrides) -> Result<CheckReport> {
        let started = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs_f64()).unwrap_or(0.0);
        let clock = Instant::now();
        let ctx = self.context(o)?;
        let points = self.points(o)?;
        if let (Some(check), Some(f)) = (self.hypothesis, ctx.f.as_ref()) {
            for p in &points {
                check(p, f)?;
            }
        }
        let tolerance = o.tol.map(Tolerance::abs).unwrap_or(self.tolerance);
        let mut samples = Vec::with_capacity(points.len());
        for p in points {
            let l = (self.lhs)(&p, &ctx)?;
            let r = (self.rhs)(&p, &ctx)?;
            samples.push(Sample {
                point: p,
                lhs: l.value,
                rhs: r.value,
                residual: (l.value - r.value).norm(),
                lhs_bound: l.bound,
                rhs_bound: r.bound,
                tolerance: tolerance.at(l.value.norm().max(r.value.norm())),
            });
        }
        let passed = samples.iter().all(Sample::passed);
        Ok(CheckReport {
            id: self.id.to_string(),
            function: ctx.f.as_ref().map(|f| f.name().to_string()),
            samples,
            passed,
            notes: self.notes.iter().map(|n| n.to_string()).collect(),
            timestamps: o.timestamps.then(|| Timestamps { started_unix: started, elapsed_seconds: clock.elapsed().as_secs_f64() }),
        })
    }
}

/// Look up `id` in the catalog and check it.
pub fn verify(id: &str, overrides: &Overrides) -> Result<CheckReport> {
    let entry = catalog().into_iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    entry.check(overrides)
}

/// Glob match supporting `*` and `?`.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut pi, mut ti) = (0, 0);
    let mut star: Option<(usize, usize)> = None;
    while ti < t.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = Some((pi, ti));
            pi += 1;
        } else if let Some((sp, st)) = star {
            pi = sp + 1;
            ti = st + 1;
            star = Some((sp, st + 1));
        } else {
            return false;
        }
    }
    p[pi..].iter().all(|&c| c == '*')
}

/// Check every entry of `entries` matching `filter`, ordered by id.
///
/// Failed evaluations become failed reports carrying the error as a note.
pub fn run_entries(entries: &[IdentityEntry], filter: Option<&str>, timestamps: bool) -> Vec<CheckReport> {
    let mut selected: Vec<&IdentityEntry> = entries.iter().filter(|e| filter.is_none_or(|p| glob_match(p, e.id))).collect();
    selected.sort_by_key(|e| e.id);
    let o = Overrides { timestamps, ..Overrides::default() };
    selected
        .par_iter()
        .map(|e| {
            e.check(&o).unwrap_or_else(|err| CheckReport {
                id: e.id.to_string(),
                function: e.function.map(str::to_string),
                samples: Vec::new(),
                passed: false,
                notes: vec![format!("evaluation error: {err}")],
                timestamps: None,
            })
        })
        .collect()
}

/// Run the full catalog.
pub fn run_suite(filter: Option<&str>) -> Vec<CheckReport> {
    run_entries(&catalog(), filter, false)
}

#[cfg(test)]
mod tests;

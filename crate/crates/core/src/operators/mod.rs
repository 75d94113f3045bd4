//! Arithmetic summation operators `Σ w(n) f(nx)`, the Müntz iterate, the
//! Voronoi operators and their integral kernels.

mod iterate;
mod kernels;
mod residue;

pub use iterate::{generalized_voronoi, log_moment, muntz_iterate, voronoi_operator};
pub use kernels::{error_function_kernel, voronoi_g_kernel, voronoi_g_exp_closed_form, KernelTerm};
pub use residue::{residue_polynomial, ResiduePolynomial};

use crate::error::{Error, Result};
use crate::mellin::{OperatorValue, TestFunction};
use crate::sieve::ArithTable;
use crate::sum::Compensated;
use std::sync::{Arc, RwLock};

/// Largest table built on demand by the operators.
pub const TERM_CAP: usize = 10_000_000;

/// Shared sieve, grown on demand.
pub fn shared_table(n: usize) -> Result<Arc<ArithTable>> {
    static TABLE: RwLock<Option<Arc<ArithTable>>> = RwLock::new(None);
    if let Some(t) = TABLE.read().unwrap().as_ref() {
        if t.n_max() >= n {
            return Ok(Arc::clone(t));
        }
    }
    let mut guard = TABLE.write().unwrap();
    if let Some(t) = guard.as_ref() {
        if t.n_max() >= n {
            return Ok(Arc::clone(t));
        }
    }
    let size = n.max(1 << 16).next_power_of_two().min(TERM_CAP.max(n));
    let t = Arc::new(ArithTable::with_cap(size, TERM_CAP)?);
    *guard = Some(Arc::clone(&t));
    Ok(t)
}

/// Arithmetic weights of the summation operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    One,
    Identity,
    Mobius,
    SquareFree,
    Liouville,
    Totient,
    OddPart,
    Divisor(u32),
    TwoOmega,
    DivisorOfSquare,
    DivisorSquared,
}

impl Weight {
    /// `(c, W)` with `|w(n)| <= W n^c` for all `n`.
    pub fn growth(self) -> (f64, f64) {
        match self {
            Self::One | Self::Mobius | Self::SquareFree | Self::Liouville => (0.0, 1.0),
            Self::Identity | Self::Totient | Self::OddPart => (1.0, 1.0),
            Self::Divisor(k) => (0.5 * (k as f64 - 1.0), 2f64.powi(k as i32 - 1)),
            Self::TwoOmega => (0.5, 2.0),
            Self::DivisorOfSquare | Self::DivisorSquared => (1.0, 4.0),
        }
    }

    pub fn value(self, t: &ArithTable, n: usize) -> f64 {
        match self {
            Self::One => 1.0,
            Self::Identity => n as f64,
            Self::Mobius => t.mu_values()[n] as f64,
            Self::SquareFree => t.mu_values()[n].unsigned_abs() as f64,
            Self::Liouville => t.lambda_values()[n] as f64,
            Self::Totient => t.phi_values()[n] as f64,
            Self::OddPart => t.odd_part_values()[n] as f64,
            Self::Divisor(k) => t.dk_unchecked(n, k) as f64,
            Self::TwoOmega => (1u64 << t.omega_values()[n]) as f64,
            Self::DivisorOfSquare => prime_power_product(t, n, |e| 2 * e + 1) as f64,
            Self::DivisorSquared => {
                let d = t.dk_unchecked(n, 2) as f64;
                d * d
            }
        }
    }
}

fn prime_power_product(t: &ArithTable, n: usize, g: impl Fn(u64) -> u64) -> u64 {
    t.factorize(n).map(|fs| fs.iter().map(|&(_, e)| g(e as u64)).product()).unwrap_or(1)
}

/// Number of terms after which `W n^c |g(nx)|` stays below `1e-20` for a
/// function of fast decay.
fn fast_cutoff<G: Fn(f64) -> f64>(g: &G, c: f64, w: f64, x: f64) -> usize {
    let mut y = 1.0f64.max(x);
    loop {
        let small = |y: f64| w * (y / x).max(1.0).powf(c) * g(y).abs() < 1e-20;
        if small(y) && small(1.5 * y) && small(2.0 * y) && small(4.0 * y) {
            return ((y / x).ceil() as usize).max(1);
        }
        y *= 1.25;
        if y / x > 1e12 {
            return usize::MAX;
        }
    }
}

/// `Σ_{n≥1} w(n) g(nx)` for `g = O(y^{-α})`, truncated so that the tail
/// bound `W C_g x^{-α} N^{c+1-α} / (α-c-1)` is below `tol`.
pub fn weighted_sum<G: Fn(f64) -> f64>(weight: Weight, g: G, alpha: f64, x: f64, tol: f64) -> Result<OperatorValue> {
    if !(x > 0.0) {
        return Err(Error::OutOfRange(format!("operator needs x > 0, got {x}")));
    }
    let (c, w) = weight.growth();
    let (n_terms, bound) = if alpha.is_infinite() {
        (fast_cutoff(&g, c, w, x), 1e-20)
    } else {
        if alpha <= c + 1.0 {
            return Err(Error::Hypothesis(format!(
                "decay exponent {alpha} too small for weight {weight:?} (needs > {})",
                c + 1.0
            )));
        }
        let mut n = 1000usize;
        loop {
            let start = n as f64 * x;
            let cg = (0..=40).map(|i| {
                let y = start * 10f64.powf(i as f64 / 20.0);
                g(y).abs() * y.powf(alpha)
            });
            let cg = cg.fold(0.0, f64::max);
            let bound = w * cg * x.powf(-alpha) * (n as f64).powf(c + 1.0 - alpha) / (alpha - c - 1.0);
            if bound <= tol {
                break (n, bound);
            }
            if n >= TERM_CAP {
                return Err(Error::TailUnreachable { bound, tol, cap: TERM_CAP });
            }
            n = (n * 4).min(TERM_CAP);
        }
    };
    if n_terms > TERM_CAP {
        return Err(Error::TailUnreachable { bound: f64::INFINITY, tol, cap: TERM_CAP });
    }
    let table = shared_table(n_terms)?;
    let mut acc = Compensated::new();
    for n in 1..=n_terms {
        let wn = weight.value(&table, n);
        if wn != 0.0 {
            acc.add(wn * g(n as f64 * x));
        }
    }
    Ok(OperatorValue { value: acc.value(), tail_bound: bound })
}

pub const DEFAULT_TOL: f64 = 1e-12;

fn apply(weight: Weight, f: &TestFunction, x: f64) -> Result<OperatorValue> {
    weighted_sum(weight, |y| f.eval(y), f.alpha(), x, DEFAULT_TOL)
}

/// `Θf(x) = Σ f(nx)`.
pub fn mobius_transform(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    apply(Weight::One, f, x)
}

/// `Θ̂f(x) = Σ |μ(n)| f(nx)`.
pub fn reduced_mobius(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    apply(Weight::SquareFree, f, x)
}

/// `Λf(x) = Σ λ(n) f(nx)`.
pub fn liouville_op(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    apply(Weight::Liouville, f, x)
}

/// `Φf(x) = Σ φ(n) f(nx)`.
pub fn totient_op(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    apply(Weight::Totient, f, x)
}

/// `Af(x) = Σ a(n) f(nx)` with `a` the greatest odd divisor.
pub fn odd_divisor_op(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    apply(Weight::OddPart, f, x)
}

/// `D_k f(x) = Σ d_k(n) f(nx)`.
pub fn divisor_op_k(f: &TestFunction, x: f64, k: u32) -> Result<OperatorValue> {
    if k < 1 {
        return Err(Error::OutOfRange("divisor operator needs k >= 1".into()));
    }
    if k == 1 {
        return apply(Weight::One, f, x);
    }
    apply(Weight::Divisor(k), f, x)
}

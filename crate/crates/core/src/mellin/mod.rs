//! Mellin transforms, inversion along vertical lines, the Fourier cosine
//! transform and the Müntz operator.

mod testfn;

pub use testfn::{TestFunction, BUILTIN_NAMES};

use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_half_line, integrate_pieces, integrate_to_infinity, Quad, Tol};
use crate::special::zeta::zeta_unchecked;
use crate::sum::Compensated;
use num_complex::Complex64;
use std::f64::consts::PI;

pub const DEFAULT_HEIGHT: f64 = 200.0;

/// Vertical line `Re s = sigma`, truncated to `|Im s| <= height`.
#[derive(Debug, Clone, Copy)]
pub struct ContourSpec {
    pub sigma: f64,
    pub height: f64,
    pub panel_tolerance: f64,
}

impl ContourSpec {
    pub fn new(sigma: f64) -> Self {
        Self { sigma, height: DEFAULT_HEIGHT, panel_tolerance: 1e-13 }
    }

    pub fn with_height(mut self, height: f64) -> Self {
        self.height = height;
        self
    }
}

/// Value of a truncated line integral with its tail bound.
#[derive(Debug, Clone, Copy)]
pub struct LineIntegral {
    pub value: f64,
    pub quadrature_error: f64,
    pub tail_bound: f64,
    /// Measured `max |F(σ+it)| t^p` over `1 <= t <= T`.
    pub decay_constant: f64,
}

impl LineIntegral {
    pub fn error_bound(&self) -> f64 {
        self.quadrature_error + self.tail_bound
    }

    pub fn require(self, tol: f64) -> Result<Self> {
        if self.tail_bound > tol {
            Err(Error::TailUnreachable { bound: self.tail_bound, tol, cap: 0 })
        } else {
            Ok(self)
        }
    }
}

/// `∫_0^∞ h(x) dx/x` in the variable `x = e^v`, which turns power-type end
/// behavior into exponential decay.
pub fn integrate_log_variable<F>(mut g: F, tol: Tol) -> Result<Quad<Complex64>>
where
    F: FnMut(f64) -> Complex64,
{
    let half = Tol::new(0.5 * tol.abs, tol.rel);
    let mut h = |x: f64| if x.is_normal() && x.is_finite() { g(x) } else { Complex64::new(0.0, 0.0) };
    let right = integrate_half_line(|v: f64| h(v.exp()), half)?;
    let left = integrate_half_line(|v: f64| h((-v).exp()), half)?;
    Ok(Quad { value: left.value + right.value, error: left.error + right.error })
}

/// `f*(s) = ∫_0^∞ f(x) x^{s-1} dx` by quadrature.
pub fn mellin_numeric(f: &TestFunction, s: Complex64) -> Result<Quad<Complex64>> {
    let (lo, hi) = f.strip();
    if !(s.re > lo && s.re < hi) {
        return Err(Error::OutOfRange(format!("Re s = {} outside the strip ({lo}, {hi}) of {}", s.re, f.name())));
    }
    integrate_log_variable(
        |x: f64| {
            let v = f.eval(x);
            if v == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                (s * x.ln()).exp() * v
            }
        },
        Tol::new(1e-14, 1e-13),
    )
}

/// `(1/2πi) ∫_{σ-iT}^{σ+iT} F(s) x^{-s} ds` for `F` real on the real axis;
/// `decay` is the declared exponent `p` with `|F(σ+it)| = O(|t|^{-p})`.
pub fn inverse_mellin_line<F>(mut big_f: F, spec: ContourSpec, decay: f64, x: f64) -> Result<LineIntegral>
where
    F: FnMut(Complex64) -> Complex64,
{
    if !(x > 0.0) || !(spec.height > 0.0) {
        return Err(Error::OutOfRange(format!("need x > 0 and T > 0, got x = {x}, T = {}", spec.height)));
    }
    if decay <= 1.0 {
        return Err(Error::Hypothesis(format!("declared decay exponent {decay} must exceed 1")));
    }
    let ln_x = x.ln();
    let sigma = spec.sigma;
    let mut decay_constant: f64 = 0.0;
    let mut integrand = |t: f64| {
        let s = Complex64::new(sigma, t);
        let v = big_f(s);
        if t >= 1.0 {
            decay_constant = decay_constant.max(v.norm() * t.powf(decay));
        }
        (v * (-s * ln_x).exp()).re
    };
    let steps = spec.height.ceil() as usize;
    let points: Vec<f64> = (0..=steps).map(|k| (k as f64).min(spec.height)).collect();
    let q = integrate_pieces(&mut integrand, &points, Tol::new(spec.panel_tolerance, spec.panel_tolerance))?;
    let tail_bound = decay_constant * x.powf(-sigma) * spec.height.powf(1.0 - decay) / (PI * (decay - 1.0));
    Ok(LineIntegral { value: q.value / PI, quadrature_error: q.error / PI, tail_bound, decay_constant })
}

/// Wynn's epsilon acceleration of a sequence of partial sums.
pub fn wynn_epsilon(partial: &[f64]) -> f64 {
    let n = partial.len();
    if n < 3 {
        return partial.last().copied().unwrap_or(0.0);
    }
    let mut prev = vec![0.0; n + 1];
    let mut cur: Vec<f64> = partial.to_vec();
    let mut best = *partial.last().unwrap();
    let mut k = 0;
    while cur.len() > 1 {
        let next: Vec<f64> = (0..cur.len() - 1)
            .map(|i| {
                let d = cur[i + 1] - cur[i];
                if d == 0.0 {
                    f64::INFINITY
                } else {
                    prev[i + 1] + 1.0 / d
                }
            })
            .collect();
        k += 1;
        if next.iter().any(|v| !v.is_finite()) {
            break;
        }
        if k % 2 == 0 {
            best = *next.last().unwrap();
        }
        prev = cur;
        cur = next;
    }
    best
}

/// `√(2/π) ∫_0^∞ f(t) cos(xt) dt`.
pub fn fourier_cosine(f: &TestFunction, x: f64) -> Result<Quad<f64>> {
    let norm = (2.0 / PI).sqrt();
    let tol = Tol::new(1e-15, 1e-13);
    if x.abs() < 0.5 {
        let q = integrate_half_line(|t: f64| f.eval(t) * (x * t).cos(), tol)?;
        return Ok(Quad { value: norm * q.value, error: norm * q.error });
    }
    let x = x.abs();
    // segments between consecutive zeros of cos(xt)
    let zero = |k: usize| (k as f64 + 0.5) * PI / x;
    let mut acc = Compensated::new();
    let mut err = 0.0;
    let first = integrate(|t: f64| f.eval(t) * (x * t).cos(), 0.0, zero(0), tol)?;
    acc.add(first.value);
    err += first.error;
    let mut partial = vec![acc.value()];
    let mut k = 0;
    loop {
        let seg = integrate(|t: f64| f.eval(t) * (x * t).cos(), zero(k), zero(k + 1), tol)?;
        acc.add(seg.value);
        err += seg.error;
        partial.push(acc.value());
        k += 1;
        if seg.value.abs() < 1e-17 * acc.value().abs().max(1e-300) || seg.value == 0.0 {
            return Ok(Quad { value: norm * acc.value(), error: norm * err });
        }
        if k >= 400 {
            break;
        }
    }
    let tail = &partial[partial.len() - 30..];
    let accelerated = wynn_epsilon(tail);
    let spread = (accelerated - wynn_epsilon(&tail[..tail.len() - 2])).abs();
    Ok(Quad { value: norm * accelerated, error: norm * (err + spread) })
}

/// `∫_0^∞ f`, from the closed form when available.
pub fn first_moment(f: &TestFunction) -> Result<f64> {
    match f.mellin_closed_form(Complex64::new(1.0, 0.0)) {
        Some(m) => Ok(m.re),
        None => Ok(integrate_half_line(|t: f64| f.eval(t), Tol::new(1e-15, 1e-14))?.value),
    }
}

/// Value of an operator together with the truncation bound of its series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorValue {
    pub value: f64,
    pub tail_bound: f64,
}

/// `Σ_{n≥1} f(nx) - (1/x) ∫_0^∞ f`.
///
/// Fast-decaying `f` is summed until the terms underflow the tolerance; for
/// power decay the sum stops at `N` and the remainder is taken from the
/// Euler-Maclaurin expansion, with the next correction as the bound.
pub fn muntz_operator(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    if !(x > 0.0) {
        return Err(Error::OutOfRange(format!("Müntz operator needs x > 0, got {x}")));
    }
    let total = first_moment(f)?;
    muntz_sum(|y| f.eval(y), |y| f.derivative(y), total, f.alpha(), x)
}

/// Müntz operator for an arbitrary `g` with known `∫ g` and decay `x^{-α}`.
pub fn muntz_sum<G, D>(g: G, dg: D, total: f64, alpha: f64, x: f64) -> Result<OperatorValue>
where
    G: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    const TERM_CAP: usize = 50_000_000;
    let mut acc = Compensated::new();
    if alpha.is_infinite() {
        let mut n = 1usize;
        let mut small = 0;
        loop {
            let v = g(n as f64 * x);
            acc.add(v);
            small = if v.abs() < 1e-19 { small + 1 } else { 0 };
            if small >= 3 && n as f64 * x > 1.0 {
                break;
            }
            n += 1;
            if n > TERM_CAP {
                return Err(Error::TailUnreachable { bound: v.abs(), tol: 1e-19, cap: TERM_CAP });
            }
        }
        acc.add(-total / x);
        return Ok(OperatorValue { value: acc.value(), tail_bound: 1e-18 });
    }
    let n_terms = ((2000.0 / x).ceil() as usize).max(200);
    if n_terms > TERM_CAP {
        return Err(Error::TailUnreachable { bound: f64::NAN, tol: 0.0, cap: TERM_CAP });
    }
    for n in 1..=n_terms {
        acc.add(g(n as f64 * x));
    }
    let end = n_terms as f64 * x;
    let tail = integrate_to_infinity(&g, end, Tol::new(1e-17, 1e-14))?;
    // Σ_{n>N} g(nx) = (1/x)∫_{Nx}^∞ g - g(Nx)/2 - (x/12) g'(Nx) + O(x³ g'''(Nx))
    acc.add(tail.value / x);
    acc.add(-0.5 * g(end));
    acc.add(-x / 12.0 * dg(end));
    acc.add(-total / x);
    let bound = x.powi(3) / 720.0 * alpha * (alpha + 1.0) * (alpha + 2.0) * g(end).abs() / (end * end * end)
        + tail.error / x;
    Ok(OperatorValue { value: acc.value(), tail_bound: bound })
}

/// `(1/2πi) ∫ ζ(s) f*(s) x^{-s} ds` on `Re s = σ ∈ (0,1)`.
pub fn muntz_via_contour(f: &TestFunction, spec: ContourSpec, x: f64) -> Result<LineIntegral> {
    if !(spec.sigma > 0.0 && spec.sigma < 1.0) {
        return Err(Error::OutOfRange(format!("sigma = {} must lie in (0, 1)", spec.sigma)));
    }
    let (lo, hi) = f.strip();
    if !(spec.sigma > lo && spec.sigma < hi) {
        return Err(Error::OutOfRange(format!("sigma = {} outside the strip of {}", spec.sigma, f.name())));
    }
    let mellin = |s: Complex64| f.mellin_closed_form(s);
    if mellin(Complex64::new(spec.sigma, 0.0)).is_none() {
        return Err(Error::Hypothesis(format!("{} has no closed-form Mellin transform", f.name())));
    }
    inverse_mellin_line(|s| zeta_unchecked(s) * mellin(s).unwrap_or_default(), spec, 2.0, x)
}

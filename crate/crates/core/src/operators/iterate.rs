//! Voronoi operators and the iterated Müntz operator.

use super::{divisor_op_k, residue::residue_polynomial};
use crate::error::{Error, Result};
use crate::mellin::{first_moment, integrate_log_variable, muntz_operator, OperatorValue, TestFunction};
use crate::quad::{integrate_pieces, Tol};
use crate::sum::Compensated;
use num_complex::Complex64;

/// `∫_0^∞ f(xy) (log y)^j dy = (1/x) ∫_0^∞ f(u) (log u - log x)^j du`.
pub fn log_moment(f: &TestFunction, x: f64, j: usize) -> Result<f64> {
    let ln_x = x.ln();
    let q = integrate_log_variable(
        |u: f64| Complex64::new(u * f.eval(u) * (u.ln() - ln_x).powi(j as i32), 0.0),
        Tol::new(1e-15, 1e-13),
    )?;
    Ok(q.value.re / x)
}

/// `Vf(x) = Σ d(n) f(nx) - ∫_0^∞ f(xy)(log y + 2γ) dy`.
pub fn voronoi_operator(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    generalized_voronoi(f, x, 2)
}

/// `V_k f(x) = Σ d_k(n) f(nx) - ∫_0^∞ f(xy) P_{k-1}(log y) dy`.
pub fn generalized_voronoi(f: &TestFunction, x: f64, k: usize) -> Result<OperatorValue> {
    if k == 1 {
        return muntz_operator(f, x);
    }
    let p = residue_polynomial(k)?;
    let series = divisor_op_k(f, x, k as u32)?;
    let mut acc = Compensated::new();
    acc.add(series.value);
    for (j, &c) in p.coeffs.iter().enumerate() {
        acc.add(-c * log_moment(f, x, j)?);
    }
    Ok(OperatorValue { value: acc.value(), tail_bound: series.tail_bound })
}

/// Smallest `Y` (on a doubling scale) with `|f(y)| < 1e-20` for `y >= Y`.
fn negligible_beyond(f: &TestFunction) -> f64 {
    let mut y = 1.0f64;
    while [1.0, 1.5, 2.0, 4.0].iter().any(|m| f.eval(m * y).abs() >= 1e-20) {
        y *= 1.25;
    }
    y
}

/// `P^k f(x)`, the Müntz operator applied `k` times, for `k <= 2`.
///
/// The outer operator of `P²` runs on `g = Pf`, which is not integrable at
/// infinity: `g(y) = -c/y` once `f(ny)` is negligible, with `c = ∫ f`. The
/// outer sum and integral are therefore combined in the Euler-Maclaurin form
/// `Σ_{n≤N} g(nx) - (1/x)∫_0^{Nx} g - g(Nx)/2 - (x/12) g'(Nx)`, whose limit
/// is the Mellin-regular value.
pub fn muntz_iterate(f: &TestFunction, x: f64, k: usize) -> Result<OperatorValue> {
    if !(x > 0.0) {
        return Err(Error::OutOfRange(format!("Müntz iterate needs x > 0, got {x}")));
    }
    match k {
        0 => Ok(OperatorValue { value: f.eval(x), tail_bound: 0.0 }),
        1 => muntz_operator(f, x),
        2 => muntz_square(f, x),
        _ => Err(Error::OutOfRange(format!("Müntz iterate implemented for k <= 2, got {k}"))),
    }
}

fn muntz_square(f: &TestFunction, x: f64) -> Result<OperatorValue> {
    if f.alpha().is_finite() {
        return Err(Error::Hypothesis(format!("P² needs a fast-decaying function, {} decays like a power", f.name())));
    }
    let c = first_moment(f)?;
    let f0 = f.value_at_zero();
    let df0 = f.derivative(0.0);
    let y0 = negligible_beyond(f);
    // Pf near 0 from its Euler-Maclaurin expansion
    let small = 1e-3;
    let pf = |y: f64| -> f64 {
        if y >= y0 {
            -c / y
        } else if y < small {
            -0.5 * f0 - y * df0 / 12.0
        } else {
            muntz_operator(f, y).map(|v| v.value).unwrap_or(f64::NAN)
        }
    };
    let mut points = vec![0.0, small];
    let mut p = small;
    while p < y0 {
        p = (p * 2.0).min(y0);
        points.push(p);
    }
    let head = integrate_pieces(pf, &points, Tol::new(1e-13, 1e-12))?;
    let n_terms = ((1000.0f64.max(y0) / x).ceil() as usize).max(1000);
    let end = n_terms as f64 * x;
    let mut acc = Compensated::new();
    for n in 1..=n_terms {
        acc.add(pf(n as f64 * x));
    }
    // (1/x) ∫_0^{Nx} g = (1/x)(head - c log(Nx / y0))
    acc.add(-(head.value - c * (end / y0).ln()) / x);
    acc.add(0.5 * c / end);
    acc.add(-x / 12.0 * c / (end * end));
    let em_bound = x.powi(3) / 720.0 * 6.0 * c.abs() / end.powi(4);
    Ok(OperatorValue { value: acc.value(), tail_bound: em_bound + head.error / x })
}

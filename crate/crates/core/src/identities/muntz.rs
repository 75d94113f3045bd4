//! Müntz type formulas: Mellin transforms of compensated operator outputs
//! against their zeta-product closed forms, sampled at points of the strip.

use super::mellin_form::{FarTerm, MellinForm};
use super::{Ctx, Point, Side};
use crate::error::{Error, Result};
use crate::mellin::{first_moment, integrate_log_variable, muntz_operator, TestFunction};
use crate::operators::{generalized_voronoi, odd_divisor_op, reduced_mobius, residue_polynomial, totient_op};
use crate::quad::Tol;
use crate::special::zeta;
use num_complex::Complex64;
use std::f64::consts::PI;

fn closed(f: &TestFunction, s: Complex64) -> Result<Complex64> {
    f.mellin_closed_form(s).ok_or_else(|| Error::Config(format!("{} has no closed-form Mellin transform", f.name())))
}

/// `∫_0^∞ f(u) log^j u du`.
fn log_moment_at_one(f: &TestFunction, j: usize) -> Result<f64> {
    let g = |u: f64| {
        let v = u * f.eval(u) * u.ln().powi(j as i32);
        Complex64::new(if v.is_finite() { v } else { 0.0 }, 0.0)
    };
    Ok(integrate_log_variable(g, Tol::new(1e-16, 1e-14))?.value.re)
}

/// Far behaviour `−∫ f(xy) P(log y) dy = −(1/x) Σ_l c_l log^l x` of the
/// compensated divisor operators once the series part is negligible.
fn polynomial_far_terms(f: &TestFunction, poly: &[f64]) -> Result<Vec<FarTerm>> {
    let moments = (0..poly.len()).map(|j| log_moment_at_one(f, j)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for l in 0..poly.len() {
        // P(log u − L) = Σ_i p_i Σ_l C(i,l) (log u)^{i−l} (−L)^l
        let mut c = 0.0;
        for (i, &p) in poly.iter().enumerate().skip(l) {
            c += p * binomial(i, l) * moments[i - l];
        }
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        out.push(FarTerm { coef: -sign * c, power: 1.0, log_power: l as u32 });
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Start of the far range, where `f(y)` is negligible against `1e-22`.
fn far_start(f: &TestFunction) -> f64 {
    let mut y = 1.0f64;
    while [1.0, 2.0, 4.0].iter().any(|m| f.eval(m * y).abs() > 1e-22) {
        y *= 1.25;
    }
    y
}

const DELTA: f64 = 1e-3;

fn form(h: &dyn Fn(f64) -> Result<f64>, near: &[f64], far: &[FarTerm], x_far: f64, s: Complex64) -> Result<Side> {
    form_at(DELTA, h, near, far, x_far, s)
}

fn form_at(delta: f64, h: &dyn Fn(f64) -> Result<f64>, near: &[f64], far: &[FarTerm], x_far: f64, s: Complex64) -> Result<Side> {
    MellinForm { h, near_exponents: near, delta, far, x_far, far_residual: 1e-20 }.eval(s)
}

pub(crate) fn lhs_1_19(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    let h = |x: f64| Ok(muntz_operator(f, x)?.value);
    let far = [FarTerm { coef: -first_moment(f)?, power: 1.0, log_power: 0 }];
    form(&h, &[0.0, 1.0], &far, far_start(f), p.need_s()?)
}

pub(crate) fn rhs_1_19(p: &Point, ctx: &Ctx) -> Result<Side> {
    let s = p.need_s()?;
    Ok(Side::complex(zeta(s)? * closed(ctx.f()?, s)?, 0.0))
}

fn divisor_form(p: &Point, f: &TestFunction, k: usize) -> Result<Side> {
    let poly = residue_polynomial(k)?;
    let far = polynomial_far_terms(f, &poly.coeffs)?;
    let h = |x: f64| Ok(generalized_voronoi(f, x, k)?.value);
    form(&h, &[0.0, 1.0, 3.0], &far, far_start(f), p.need_s()?)
}

fn divisor_closed(p: &Point, f: &TestFunction, k: i32) -> Result<Side> {
    let s = p.need_s()?;
    Ok(Side::complex(zeta(s)?.powi(k) * closed(f, s)?, 0.0))
}

pub(crate) fn lhs_1_38(p: &Point, ctx: &Ctx) -> Result<Side> {
    divisor_form(p, ctx.f()?, 2)
}

pub(crate) fn rhs_1_38(p: &Point, ctx: &Ctx) -> Result<Side> {
    divisor_closed(p, ctx.f()?, 2)
}

fn order(p: &Point) -> Result<u32> {
    let k = p.need_k()?;
    if !(2..=5).contains(&k) {
        return Err(Error::OutOfRange(format!("generalized Voronoi order k must be in 2..=5, got {k}")));
    }
    Ok(k)
}

pub(crate) fn hyp_2_34(p: &Point, _: &TestFunction) -> Result<()> {
    let (k, s) = (order(p)?, p.need_s()?);
    let lower = (1.0 - 2.0 / k as f64).max(0.0);
    if !(s.re > lower && s.re < 1.0) {
        return Err(Error::Hypothesis(format!("Re s = {} outside ({lower}, 1) for k = {k}", s.re)));
    }
    Ok(())
}

pub(crate) fn lhs_2_34(p: &Point, ctx: &Ctx) -> Result<Side> {
    divisor_form(p, ctx.f()?, order(p)? as usize)
}

pub(crate) fn rhs_2_34(p: &Point, ctx: &Ctx) -> Result<Side> {
    divisor_closed(p, ctx.f()?, order(p)? as i32)
}

/// `Θ̂f(x) − 6∫f/(π²x)`; near the origin the zeros of `ζ(2s)` add
/// oscillating terms of size `x^{-1/4}`; their share of `[0, δ]` is
/// `O(δ^{σ-1/4})`, so `δ` is taken small.
pub(crate) fn lhs_2_5(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    let c = 6.0 / (PI * PI) * first_moment(f)?;
    let h = |x: f64| Ok(reduced_mobius(f, x)?.value - c / x);
    let far = [FarTerm { coef: -c, power: 1.0, log_power: 0 }];
    form_at(1e-4, &h, &[0.0, 1.0], &far, far_start(f), p.need_s()?)
}

pub(crate) fn rhs_2_5(p: &Point, ctx: &Ctx) -> Result<Side> {
    let s = p.need_s()?;
    Ok(Side::complex(zeta(s)? / zeta(2.0 * s)? * closed(ctx.f()?, s)?, 0.0))
}

/// `∫_0^∞ y f(y) dy`.
fn second_moment(f: &TestFunction) -> Result<f64> {
    Ok(closed(f, Complex64::new(2.0, 0.0))?.re)
}

/// `Φf(x) − 6∫yf/(π²x²)`, compensating the pole of `ζ(s−1)/ζ(s)` at `s = 2`.
pub(crate) fn lhs_2_22(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    let c = 6.0 / (PI * PI) * second_moment(f)?;
    let h = |x: f64| Ok(totient_op(f, x)?.value - c / (x * x));
    let far = [FarTerm { coef: -c, power: 2.0, log_power: 0 }];
    form(&h, &[0.0, 1.0], &far, far_start(f), p.need_s()?)
}

pub(crate) fn rhs_2_22(p: &Point, ctx: &Ctx) -> Result<Side> {
    let s = p.need_s()?;
    Ok(Side::complex(zeta(s - 1.0)? / zeta(s)? * closed(ctx.f()?, s)?, 0.0))
}

/// `Af(x) − 2∫yf/(3x²)`, compensating the pole at `s = 2`.
pub(crate) fn lhs_2_23(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    let c = 2.0 / 3.0 * second_moment(f)?;
    let h = |x: f64| Ok(odd_divisor_op(f, x)?.value - c / (x * x));
    let far = [FarTerm { coef: -c, power: 2.0, log_power: 0 }];
    form(&h, &[0.0, 1.0], &far, far_start(f), p.need_s()?)
}

pub(crate) fn rhs_2_23(p: &Point, ctx: &Ctx) -> Result<Side> {
    let s = p.need_s()?;
    let two = Complex64::new(2.0, 0.0);
    let ratio = (1.0 - two.powc(1.0 - s)) / (1.0 - two.powc(-s));
    Ok(Side::complex(ratio * zeta(s - 1.0)? * closed(ctx.f()?, s)?, 0.0))
}

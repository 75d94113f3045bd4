//! Theta-function identities: the functional equation, the squarefree
//! expansions, the Müntz type transforms of `Ψ` and the representation of
//! `π^{-s/2} Γ(s/2) ζ(s)/ζ(2s)`.

use super::mellin_form::{FarTerm, MellinForm};
use super::{Ctx, Point, Side};
use crate::error::{Error, Result};
use crate::operators::{mobius_transform, reduced_mobius, shared_table};
use crate::quad::{integrate_pieces, integrate_to_infinity, Tol};
use crate::special::{gamma_complex, theta_psi, zeta, zeta_real};
use crate::sum::Compensated;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Contour abscissa of the Cauchy integral in the representation.
pub const NU: f64 = 0.75;
const HEIGHT: f64 = 120.0;

pub(crate) fn psi(x: f64) -> Result<f64> {
    theta_psi(x)
}

/// `Ψ(x) = Σ_n 1/(e^{n²πx} − 1)`.
pub(crate) fn big_psi(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::OutOfRange(format!("Ψ needs x > 0, got {x}")));
    }
    let mut acc = Compensated::<f64>::new();
    let mut n = 1.0f64;
    loop {
        let t = 1.0 / (PI * n * n * x).exp_m1();
        if t < 1e-19 * acc.value().max(1e-300) || t == 0.0 {
            return Ok(acc.value());
        }
        acc.add(t);
        n += 1.0;
    }
}

/// `ψ̂(x) = Σ_{n squarefree} e^{-n²πx}`.
pub(crate) fn psi_hat(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::OutOfRange(format!("ψ̂ needs x > 0, got {x}")));
    }
    let n_max = ((46.0 / (PI * x)).sqrt().ceil() as usize).max(2);
    let table = shared_table(n_max)?;
    let mu = table.mu_values();
    let mut acc = Compensated::<f64>::new();
    for (n, &m) in mu.iter().enumerate().take(n_max + 1).skip(1) {
        if m != 0 {
            acc.add((-PI * (n * n) as f64 * x).exp());
        }
    }
    Ok(acc.value())
}

fn mobius_table(n: usize) -> Result<Vec<i8>> {
    Ok(shared_table(n)?.mu_values()[..=n].to_vec())
}

pub(crate) fn lhs_3_6(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    Ok(Side::real((1.0 + 2.0 * psi(x)?) / (1.0 + 2.0 * psi(1.0 / x)?), 1e-17))
}

pub(crate) fn rhs_3_6(p: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::exact(1.0 / p.need_x()?.sqrt()))
}

pub(crate) fn lhs_3_7(p: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::exact(1.0 / (PI * p.need_x()?).exp_m1()))
}

/// `Σ_{n squarefree} ψ(nx)`.
pub(crate) fn rhs_3_7(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n_max = ((46.0 / (PI * x)).ceil() as usize).max(2);
    let mu = mobius_table(n_max)?;
    let mut acc = Compensated::<f64>::new();
    for (n, &m) in mu.iter().enumerate().skip(1) {
        if m != 0 {
            acc.add(psi(n as f64 * x)?);
        }
    }
    Ok(Side::real(acc.value(), 1e-19))
}

/// `Σ_n ψ(nx)`.
pub(crate) fn lhs_3_8(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n_max = ((46.0 / (PI * x)).ceil() as usize).max(2);
    let v = (1..=n_max).map(|n| psi(n as f64 * x)).collect::<Result<Vec<_>>>()?;
    Ok(Side::real(crate::sum::ksum(v), 1e-19))
}

pub(crate) fn rhs_3_8(p: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::real(big_psi(p.need_x()?)?, 1e-19))
}

pub(crate) fn lhs_3_12(p: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::exact(psi(p.need_x()?)?))
}

/// `Σ_m μ(m) Ψ(mx)`.
pub(crate) fn rhs_3_12(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n_max = ((46.0 / (PI * x)).ceil() as usize).max(2);
    let mu = mobius_table(n_max)?;
    let mut acc = Compensated::<f64>::new();
    for (m, &u) in mu.iter().enumerate().skip(1) {
        if u != 0 {
            acc.add(u as f64 * big_psi(m as f64 * x)?);
        }
    }
    Ok(Side::real(acc.value(), 1e-19))
}

pub(crate) fn lhs_3_14(p: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::real(psi_hat(p.need_x()?)?, 1e-19))
}

/// `3/(π²√x) + Σ μ(n)[ψ(1/(n⁴x))/(n²√x) − 1/2]`.
///
/// Beyond `N` the bracket equals `ψ(n⁴x) − 1/(2n²√x)` by the theta
/// functional equation, and `ψ(n⁴x)` is negligible there, so the tail is
/// `−(1/(2√x)) Σ_{n>N} μ(n)/n²`.
pub(crate) fn rhs_3_14(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let rx = x.sqrt();
    let n0 = ((46.0 / (PI * x)).powf(0.25).ceil() as usize).max(2);
    let mu = mobius_table(n0)?;
    let mut acc = Compensated::<f64>::new();
    acc.add(3.0 / (PI * PI * rx));
    let mut inverse_squares = Compensated::new();
    for (n, &u) in mu.iter().enumerate().skip(1) {
        if u == 0 {
            continue;
        }
        let n2 = (n * n) as f64;
        acc.add(u as f64 * (psi(1.0 / (n2 * n2 * x))? / (n2 * rx) - 0.5));
        inverse_squares.add(u as f64 / n2);
    }
    let tail = -(6.0 / (PI * PI) - inverse_squares.value()) / (2.0 * rx);
    acc.add(tail);
    Ok(Side::real(acc.value(), 1e-18))
}

/// Lower cut of the `ψ̂` Mellin integral; `0 <= ψ̂(x) <= 1/(2√x)` below it.
const HAT_CUT: f64 = 1e-10;

pub(crate) fn lhs_3_15(p: &Point, _: &Ctx) -> Result<Side> {
    let s = p.need_s()?;
    if s.re <= 1.0 {
        return Err(Error::Hypothesis(format!("needs Re s > 1, got {}", s.re)));
    }
    let w = s / 2.0;
    let mut failure = None;
    let g = |v: f64| -> Complex64 {
        let x = v.exp();
        match psi_hat(x) {
            Ok(h) => h * (w * v).exp(),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let (lo, hi) = (HAT_CUT.ln(), 16f64.ln());
    let points: Vec<f64> = (0..=28).map(|i| lo + (hi - lo) * i as f64 / 28.0).collect();
    let mid = integrate_pieces(g, &points, Tol::new(1e-13, 1e-12))?;
    if let Some(e) = failure {
        return Err(e);
    }
    let a = w - 0.5;
    let cut_pow = (a * HAT_CUT.ln()).exp();
    let head = 3.0 / (PI * PI) * cut_pow / a;
    let head_bound = 0.5 * cut_pow.norm() / a.norm();
    Ok(Side::complex(mid.value + head, mid.error + head_bound + 1e-18))
}

pub(crate) fn rhs_3_15(p: &Point, _: &Ctx) -> Result<Side> {
    let s = p.need_s()?;
    let v = (-s / 2.0 * PI.ln()).exp() * gamma_complex(s / 2.0)? * zeta(s)? / zeta(2.0 * s)?;
    Ok(Side::complex(v, 0.0))
}

fn psi_mellin_closed(s: Complex64) -> Result<Complex64> {
    Ok(gamma_complex(s)? * zeta(2.0 * s)? * zeta(s)? * (-s * PI.ln()).exp())
}

fn psi_form(h: &dyn Fn(f64) -> Result<f64>, near: &[f64], far: &[FarTerm], s: Complex64) -> Result<Side> {
    MellinForm { h, near_exponents: near, delta: 0.01, far, x_far: 16.0, far_residual: 1e-21 }.eval(s)
}

pub(crate) fn lhs_3_10(p: &Point, _: &Ctx) -> Result<Side> {
    let h = |x: f64| Ok(big_psi(x)? - PI / (6.0 * x));
    let far = [FarTerm { coef: -PI / 6.0, power: 1.0, log_power: 0 }];
    psi_form(&h, &[-0.5, 0.0], &far, p.need_s()?)
}

pub(crate) fn rhs_psi_mellin(p: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::complex(psi_mellin_closed(p.need_s()?)?, 0.0))
}

/// With the compensating coefficient `ζ(1/2)/2`, which is the residue of
/// the transform at `s = 1/2`.
pub(crate) fn lhs_3_11(p: &Point, _: &Ctx) -> Result<Side> {
    let z = zeta_real(0.5)? / 2.0;
    let h = move |x: f64| Ok(big_psi(x)? - (PI / (6.0 * x.sqrt()) + z) / x.sqrt());
    let far = [
        FarTerm { coef: -PI / 6.0, power: 1.0, log_power: 0 },
        FarTerm { coef: -z, power: 0.5, log_power: 0 },
    ];
    psi_form(&h, &[0.0], &far, p.need_s()?)
}

fn g_rep(w: Complex64) -> Result<Complex64> {
    Ok((-w / 2.0 * PI.ln()).exp() * gamma_complex(w / 2.0)? * zeta(w)? / zeta(2.0 * w)?)
}

/// `(1/2πi) ∫_{ν-i∞}^{ν+i∞} g(w)/(s−w) dw` truncated at `|t| = HEIGHT`.
pub(crate) fn cauchy_integral(s: Complex64) -> Result<Side> {
    let mut failure = None;
    let f = |t: f64| -> Complex64 {
        let w = Complex64::new(NU, t);
        match g_rep(w) {
            Ok(g) => g / (s - w),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let points: Vec<f64> = (-12..=12).map(|i| i as f64 * HEIGHT / 12.0).collect();
    let q = integrate_pieces(f, &points, Tol::new(1e-15, 1e-13))?;
    if let Some(e) = failure {
        return Err(e);
    }
    let edge = g_rep(Complex64::new(NU, HEIGHT))?.norm() / (s - Complex64::new(NU, HEIGHT)).norm();
    let tail = 2.0 * edge * 4.0 / PI;
    Ok(Side::complex(q.value / (2.0 * PI), (q.error + tail) / (2.0 * PI)))
}

/// `∫_1^∞ x^{s/2-1} Σ μ(n) ψ(n⁴x) dx`.
pub(crate) fn entire_part(s: Complex64) -> Result<Side> {
    let mut failure = None;
    let f = |x: f64| -> Complex64 {
        let mut acc = 0.0;
        for (n, u) in [(1.0f64, 1.0), (2.0, -1.0), (3.0, -1.0), (5.0, -1.0)] {
            let arg = n.powi(4) * x;
            if PI * arg > 745.0 {
                break;
            }
            match psi(arg) {
                Ok(v) => acc += u * v,
                Err(e) => {
                    failure.get_or_insert(e);
                }
            }
        }
        acc * ((s / 2.0 - 1.0) * x.ln()).exp()
    };
    let q = integrate_to_infinity(f, 1.0, Tol::new(1e-17, 1e-14))?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Side::complex(q.value, q.error))
}

pub(crate) fn lhs_3_17(p: &Point, _: &Ctx) -> Result<Side> {
    rhs_3_15(p, &Ctx { f: None })
}

pub(crate) fn rhs_3_17(p: &Point, _: &Ctx) -> Result<Side> {
    let s = p.need_s()?;
    if (s.re - NU).abs() < 0.05 {
        return Err(Error::Hypothesis(format!("s = {s} too close to the contour Re w = {NU}")));
    }
    let c = cauchy_integral(s)?;
    let e = entire_part(s)?;
    let pole = 6.0 / (PI * PI * (s - 1.0));
    Ok(Side::complex(pole + c.value + e.value, c.bound + e.bound))
}

pub(crate) fn lhs_constant(_: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::exact(12.0 / (PI * PI)))
}

pub(crate) fn rhs_constant(_: &Point, _: &Ctx) -> Result<Side> {
    let s = Complex64::new(0.5, 0.0);
    let c = cauchy_integral(s)?;
    let e = entire_part(s)?;
    Ok(Side::complex(c.value + e.value, c.bound + e.bound))
}

pub(crate) fn lhs_2_6(p: &Point, ctx: &Ctx) -> Result<Side> {
    let v = mobius_transform(ctx.f()?, p.need_x()?)?;
    Ok(Side::real(v.value, v.tail_bound))
}

/// `Σ_n (Θ̂f)(n²x)`, stopped once a term and its successors are negligible.
pub(crate) fn rhs_2_6(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let mut acc = Compensated::<f64>::new();
    let mut bound = 0.0;
    let mut n = 1usize;
    loop {
        let y = (n * n) as f64 * x;
        if f.eval(y).abs() < 1e-22 && f.eval(2.0 * y).abs() < 1e-23 {
            // Θ̂f(y) <= Σ_m |f(my)| is below this for the built-in decays
            break;
        }
        let v = reduced_mobius(f, y)?;
        acc.add(v.value);
        bound += v.tail_bound;
        n += 1;
        if n > 1_000_000 {
            return Err(Error::TailUnreachable { bound: v.value.abs(), tol: 1e-22, cap: n });
        }
    }
    Ok(Side::real(acc.value(), bound + 1e-21))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_psi_small_x_expansion() {
        let z = zeta_real(0.5).unwrap();
        for x in [0.02, 0.01, 0.002] {
            let want = PI / (6.0 * x) + z / (2.0 * x.sqrt()) + 0.25;
            assert!((big_psi(x).unwrap() - want).abs() < 1e-11 * want);
        }
    }

    #[test]
    fn psi_hat_matches_mobius_form() {
        for x in [0.3, 1.0] {
            let direct = psi_hat(x).unwrap();
            let mu = mobius_table(4).unwrap();
            let alt: f64 = (1..=4).map(|n| mu[n] as f64 * psi((n as f64).powi(4) * x).unwrap()).sum();
            assert!((direct - alt).abs() < 1e-15);
        }
    }
}

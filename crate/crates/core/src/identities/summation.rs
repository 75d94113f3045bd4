//! Summation formulas between arithmetic operators applied to one test
//! function.

use super::{arith::circle_residue, Ctx, Point, Side};
use crate::error::{Error, Result};
use crate::mellin::{first_moment, fourier_cosine, integrate_log_variable, TestFunction};
use crate::operators::{error_function_kernel, reduced_mobius, voronoi_g_kernel, voronoi_operator, residue_polynomial, shared_table, totient_op, weighted_sum, Weight};
use crate::quad::{integrate_to_infinity, Tol};
use crate::special::zeta;
use crate::sum::Compensated;
use num_complex::Complex64;
use std::f64::consts::PI;

const SUM_TOL: f64 = 1e-14;

/// `Σ_n w(n) f(nx)` with the shared truncation engine.
fn weighted(weight: Weight, f: &TestFunction, x: f64) -> Result<Side> {
    let v = weighted_sum(weight, |y| f.eval(y), f.alpha(), x, SUM_TOL)?;
    Ok(Side::real(v.value, v.tail_bound))
}

/// Number of outer terms after which `n³ |f(y)|` stays below `1e-22` for `y >= nx`.
fn outer_terms(f: &TestFunction, x: f64) -> Result<usize> {
    if !f.alpha().is_infinite() {
        return Err(Error::Hypothesis(format!("{} must decay faster than any power for nested sums", f.name())));
    }
    let mut n = 1usize;
    loop {
        let nf = n as f64;
        if [1.0, 1.5, 2.0, 4.0].iter().all(|m| nf.powi(3) * f.eval(m * nf * x).abs() < 1e-22) {
            return Ok(n);
        }
        n = n + n / 4 + 1;
        if n > 10_000_000 {
            return Err(Error::TailUnreachable { bound: 1.0, tol: 1e-22, cap: n });
        }
    }
}

/// `Σ_n w(n) inner(n x)` for an inner operator of `f`.
fn nested(weight: Weight, f: &TestFunction, x: f64, inner: impl Fn(f64) -> Result<Side>) -> Result<Side> {
    let n_max = outer_terms(f, x)?;
    let table = shared_table(n_max)?;
    let mut acc = Compensated::<f64>::new();
    let mut bound = 1e-20;
    for n in 1..=n_max {
        let w = weight.value(&table, n);
        if w != 0.0 {
            let v = inner(n as f64 * x)?;
            acc.add(w * v.value.re);
            bound += w.abs() * v.bound;
        }
    }
    Ok(Side::real(acc.value(), bound))
}

fn op(v: crate::mellin::OperatorValue) -> Side {
    Side::real(v.value, v.tail_bound)
}

fn sub(a: Side, b: Side) -> Side {
    Side::complex(a.value - b.value, a.bound + b.bound)
}

/// `∫_0^∞ u^j f(u) du`.
fn power_moment(f: &TestFunction, j: i32) -> Result<f64> {
    let g = |u: f64| {
        let v = u.powi(j + 1) * f.eval(u);
        Complex64::new(if v.is_finite() { v } else { 0.0 }, 0.0)
    };
    let q = integrate_log_variable(g, Tol::new(1e-16, 1e-14))?;
    Ok(q.value.re)
}

pub(crate) fn lhs_1_17(p: &Point, ctx: &Ctx) -> Result<Side> {
    Ok(Side::exact(ctx.f()?.eval(p.need_x()?)))
}

/// `Σ_n μ(n) Σ_m f(xnm)`.
pub(crate) fn rhs_1_17(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    nested(Weight::Mobius, f, p.need_x()?, |y| Ok(op(crate::operators::mobius_transform(f, y)?)))
}

/// `Σ f(n²x)`.
pub(crate) fn lhs_2_13(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let n_max = outer_terms(f, x)?;
    let v = crate::sum::ksum((1..=n_max).map(|n| f.eval((n * n) as f64 * x)));
    Ok(Side::real(v, 1e-20))
}

/// `Σ (Λf)(nx)`.
pub(crate) fn rhs_2_13(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    nested(Weight::One, f, p.need_x()?, |y| Ok(op(crate::operators::liouville_op(f, y)?)))
}

/// `Σ n f(xn)`.
pub(crate) fn lhs_2_24(p: &Point, ctx: &Ctx) -> Result<Side> {
    weighted(Weight::Identity, ctx.f()?, p.need_x()?)
}

/// `Σ (Φf)(nx)`.
pub(crate) fn rhs_2_24(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    nested(Weight::One, f, p.need_x()?, |y| Ok(op(totient_op(f, y)?)))
}

/// `(Af)(x) − (Af)(2x)`.
pub(crate) fn lhs_2_25(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    Ok(sub(weighted(Weight::OddPart, f, x)?, weighted(Weight::OddPart, f, 2.0 * x)?))
}

/// `Σ [(Φf)(nx) − 2(Φf)(2nx)]`.
pub(crate) fn rhs_2_25(p: &Point, ctx: &Ctx) -> Result<Side> {
    let f = ctx.f()?;
    nested(Weight::One, f, p.need_x()?, |y| {
        let a = op(totient_op(f, y)?);
        let b = op(totient_op(f, 2.0 * y)?);
        Ok(Side::complex(a.value - 2.0 * b.value, a.bound + 2.0 * b.bound))
    })
}

/// `Σ φ(n) f(xn) − Σ_{n,m} m μ(n) f(nmx)`.
pub(crate) fn lhs_2_26(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let phi = weighted(Weight::Totient, f, x)?;
    let double = nested(Weight::Mobius, f, x, |y| weighted(Weight::Identity, f, y))?;
    Ok(sub(phi, double))
}

/// `c ∫_0^∞ (1 − y) f(xy) dy = c [f*(1)/x − f*(2)/x²]`, by quadrature.
fn linear_moment(f: &TestFunction, x: f64, c: f64) -> Result<Side> {
    let v = power_moment(f, 0)? / x - power_moment(f, 1)? / (x * x);
    Ok(Side::real(c * v, 1e-15))
}

pub(crate) fn rhs_2_26(p: &Point, ctx: &Ctx) -> Result<Side> {
    linear_moment(ctx.f()?, p.need_x()?, 6.0 / (PI * PI))
}

/// `Σ [a(n) − n] f(xn) + Σ_{m≥1} Σ_n n f(2^m x n)`.
pub(crate) fn lhs_2_27(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let a = weighted(Weight::OddPart, f, x)?;
    let id = weighted(Weight::Identity, f, x)?;
    let mut acc = Compensated::<f64>::new();
    let mut bound = a.bound + id.bound;
    acc.add(a.value.re - id.value.re);
    let mut m = 1;
    loop {
        let y = 2f64.powi(m) * x;
        let v = weighted(Weight::Identity, f, y)?;
        acc.add(v.value.re);
        bound += v.bound;
        if v.value.norm() < 1e-22 {
            break;
        }
        m += 1;
    }
    Ok(Side::real(acc.value(), bound))
}

pub(crate) fn rhs_2_27(p: &Point, ctx: &Ctx) -> Result<Side> {
    linear_moment(ctx.f()?, p.need_x()?, 2.0 / 3.0)
}

/// `∫_0^∞ (Θ̂f)(xy) P(log y) dy`, read off the Mellin transform
/// `x^{-s} ζ(s) f*(s)/ζ(2s)` of `y ↦ (Θ̂f)(xy)` at `s = 1`: the moment
/// against `log^j y` is its `j`-th derivative, taken by a Cauchy integral.
fn reduced_moment(f: &TestFunction, x: f64, poly: &[f64]) -> Result<Side> {
    let mellin = |s: Complex64| -> Result<Complex64> {
        let fs = f.mellin_closed_form(s).ok_or_else(|| Error::Config(format!("{} has no closed-form Mellin transform", f.name())))?;
        Ok((-s * x.ln()).exp() * zeta(s)? / zeta(2.0 * s)? * fs)
    };
    let g = |s: Complex64| -> Result<Complex64> {
        let h = mellin(s)?;
        let t = s - 1.0;
        let mut weight = Complex64::new(0.0, 0.0);
        let mut fact = 1.0;
        for (j, &c) in poly.iter().enumerate() {
            if j > 0 {
                fact *= j as f64;
            }
            weight += c * fact / t.powi(j as i32 + 1);
        }
        Ok(h * weight)
    };
    let (a, b) = (circle_residue(&g, 1.0, 0.3, 96)?, circle_residue(&g, 1.0, 0.3, 192)?);
    Ok(Side::real(b.re, (a - b).norm() + 1e-15))
}

fn arithmetic_sum_sides(f: &TestFunction, x: f64, k: u32) -> Result<Side> {
    let outer = if k == 1 { Weight::One } else { Weight::Divisor(k) };
    let series = nested(outer, f, x, |y| Ok(op(reduced_mobius(f, y)?)))?;
    let poly = residue_polynomial(k as usize)?;
    Ok(sub(series, reduced_moment(f, x, &poly.coeffs)?))
}

/// `f*` must vanish to order `k + 1` at `s = 1`, so that the moment of
/// `Θ̂f` against `P_{k-1}` exists and the formula carries no residue term.
fn vanishing_order(f: &TestFunction, order: usize) -> Result<()> {
    for j in 0..order {
        let g = |s: Complex64| -> Result<Complex64> {
            let fs = f.mellin_closed_form(s).ok_or_else(|| Error::Hypothesis(format!("{} has no closed-form Mellin transform", f.name())))?;
            Ok(fs / (s - 1.0).powi(j as i32 + 1))
        };
        let d = circle_residue(g, 1.0, 0.3, 96)?.norm();
        if d > 1e-10 {
            return Err(Error::Hypothesis(format!("{}: Mellin transform needs a zero of order {order} at s = 1 (derivative {j} is {d:.3e})", f.name())));
        }
    }
    Ok(())
}

pub(crate) fn hyp_omega(_: &Point, f: &TestFunction) -> Result<()> {
    vanishing_order(f, 2)
}

pub(crate) fn hyp_d_square(_: &Point, f: &TestFunction) -> Result<()> {
    vanishing_order(f, 3)
}

pub(crate) fn hyp_d2(_: &Point, f: &TestFunction) -> Result<()> {
    vanishing_order(f, 4)
}

pub(crate) fn lhs_omega(p: &Point, ctx: &Ctx) -> Result<Side> {
    weighted(Weight::TwoOmega, ctx.f()?, p.need_x()?)
}

pub(crate) fn rhs_omega(p: &Point, ctx: &Ctx) -> Result<Side> {
    arithmetic_sum_sides(ctx.f()?, p.need_x()?, 1)
}

pub(crate) fn lhs_d_square(p: &Point, ctx: &Ctx) -> Result<Side> {
    weighted(Weight::DivisorOfSquare, ctx.f()?, p.need_x()?)
}

pub(crate) fn rhs_d_square(p: &Point, ctx: &Ctx) -> Result<Side> {
    arithmetic_sum_sides(ctx.f()?, p.need_x()?, 2)
}

pub(crate) fn lhs_d2(p: &Point, ctx: &Ctx) -> Result<Side> {
    weighted(Weight::DivisorSquared, ctx.f()?, p.need_x()?)
}

pub(crate) fn rhs_d2(p: &Point, ctx: &Ctx) -> Result<Side> {
    arithmetic_sum_sides(ctx.f()?, p.need_x()?, 3)
}

/// `F_c f`, closed form when available.
fn cosine(f: &TestFunction, t: f64) -> Result<f64> {
    match f.fourier_cosine_closed_form(t) {
        Some(v) => Ok(v),
        None => Ok(fourier_cosine(f, t)?.value),
    }
}

/// `Σ_{n≥1} g(nh)` for `g = O(t^{-2})`: `N` terms plus the Euler-Maclaurin
/// remainder `(1/h)∫_{Nh}^∞ g − g(Nh)/2 − h g'(Nh)/12`; the bound is the
/// change of the corrected value between `N/2` and `N`.
fn em_lattice_sum(g: &dyn Fn(f64) -> Result<f64>, h: f64, n: usize) -> Result<Side> {
    let corrected = |n: usize, partial: f64| -> Result<f64> {
        let t = n as f64 * h;
        let mut failure = None;
        let q = integrate_to_infinity(
            |u: f64| match g(u) {
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            },
            t,
            Tol::new(1e-17, 1e-14),
        )?;
        if let Some(e) = failure {
            return Err(e);
        }
        let d = 1e-4 * t;
        let slope = (g(t + d)? - g(t - d)?) / (2.0 * d);
        Ok(partial + q.value / h - g(t)? / 2.0 - h * slope / 12.0)
    };
    let mut acc = Compensated::<f64>::new();
    let mut half = 0.0;
    for k in 1..=n {
        acc.add(g(k as f64 * h)?);
        if k == n / 2 {
            half = corrected(k, acc.value())?;
        }
    }
    let full = corrected(n, acc.value())?;
    Ok(Side::real(full, (full - half).abs()))
}

/// `√x [F_c f(0)/2 + Σ F_c f(nx)]`.
pub(crate) fn lhs_1_27(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let g = |t: f64| cosine(f, t);
    let s = em_lattice_sum(&g, x, 20_000)?;
    Ok(Side::complex(x.sqrt() * (cosine(f, 0.0)? / 2.0 + s.value), x.sqrt() * s.bound))
}

/// `√(2π/x) [f(0)/2 + Σ f(2πn/x)]`.
pub(crate) fn rhs_1_27(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let h = 2.0 * PI / x;
    let s = weighted(Weight::One, f, h)?;
    let c = (2.0 * PI / x).sqrt();
    Ok(Side::complex(c * (f.value_at_zero() / 2.0 + s.value), c * s.bound))
}

pub(crate) fn lhs_squarefree(p: &Point, ctx: &Ctx) -> Result<Side> {
    weighted(Weight::SquareFree, ctx.f()?, p.need_x()?)
}

/// `Σ μ(n) (Θf)(n² x)`.
pub(crate) fn rhs_2_14(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let n_max = (outer_terms(f, x)? as f64).sqrt().ceil() as usize + 1;
    let table = shared_table(n_max)?;
    let mut acc = Compensated::<f64>::new();
    let mut bound = 1e-20;
    for n in 1..=n_max {
        let u = table.mu_values()[n];
        if u != 0 {
            let v = crate::operators::mobius_transform(f, (n * n) as f64 * x)?;
            acc.add(u as f64 * v.value);
            bound += v.tail_bound;
        }
    }
    Ok(Side::real(acc.value(), bound))
}

/// `6∫f/(π²x) + Σ μ(n)[√(2π)/(n²x) Σ_m F_c f(2πm/(n²x)) − f(0)/2]`.
///
/// By the Poisson formula the bracket equals `(Θf)(n²x) − ∫f/(n²x)`, so once
/// `f(n²x)` is negligible the rest of the series is `−(∫f/x) Σ_{n>N} μ(n)/n²`.
pub(crate) fn rhs_2_15(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let total = first_moment(f)?;
    let n0 = (outer_terms(f, x)? as f64).sqrt().ceil() as usize + 1;
    let table = shared_table(n0)?;
    let mut acc = Compensated::<f64>::new();
    acc.add(3.0 * 2f64.sqrt() / (x * PI * PI.sqrt()) * cosine(f, 0.0)?);
    let mut squares = Compensated::<f64>::new();
    for n in 1..=n0 {
        let u = table.mu_values()[n];
        if u == 0 {
            continue;
        }
        let y = (n * n) as f64 * x;
        let step = 2.0 * PI / y;
        let mut inner = Compensated::<f64>::new();
        let mut m = 1usize;
        loop {
            let v = cosine(f, m as f64 * step)?;
            inner.add(v);
            if v.abs() < 1e-22 && cosine(f, 2.0 * m as f64 * step)?.abs() < 1e-22 {
                break;
            }
            m += 1;
            if m > 10_000_000 {
                return Err(Error::TailUnreachable { bound: v.abs(), tol: 1e-22, cap: m });
            }
        }
        acc.add(u as f64 * ((2.0 * PI).sqrt() / y * inner.value() - f.value_at_zero() / 2.0));
        squares.add(u as f64 / (n * n) as f64);
    }
    let tail = -(total / x) * (6.0 / (PI * PI) - squares.value());
    acc.add(tail);
    Ok(Side::real(acc.value(), 1e-18))
}

pub(crate) fn hyp_2_16(_: &Point, f: &TestFunction) -> Result<()> {
    if f.small_x_exponent() <= 0.5 {
        return Err(Error::Hypothesis(format!("{} must vanish faster than x^(1/2) at 0", f.name())));
    }
    Ok(())
}

pub(crate) fn lhs_2_16(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let s = weighted(Weight::SquareFree, f, x)?;
    Ok(Side::complex(s.value - 6.0 / (PI * PI * x) * first_moment(f)?, s.bound))
}

/// Column terms kept exactly; beyond them `t_m ≈ (A log m + B)/m²` fitted
/// at `M/2` and `M`.
fn column_sum(f: &TestFunction, x: f64, n: u64, m_max: u64) -> Result<(f64, f64)> {
    let terms = (1..=m_max).map(|m| Ok(error_function_kernel(f, x, n, m)?.real_path)).collect::<Result<Vec<f64>>>()?;
    let tail = |mm: usize| {
        let (m1, m2) = ((mm / 2) as f64, mm as f64);
        let (y1, y2) = (terms[mm / 2 - 1] * m1 * m1, terms[mm - 1] * m2 * m2);
        let a = (y2 - y1) / (m2.ln() - m1.ln());
        let b = y2 - a * m2.ln();
        let e = m2 + 0.5;
        (a * (e.ln() + 1.0) + b) / e
    };
    let mm = m_max as usize;
    let full = crate::sum::ksum(terms.iter().copied()) + tail(mm);
    let half = crate::sum::ksum(terms[..mm / 2].iter().copied()) + tail(mm / 2);
    Ok((full, (full - half).abs()))
}

/// Last column of the double series kept explicitly.
const KERNEL_COLUMNS: usize = 15;

/// `Σ_{n,m} μ(n) [(n,m) kernel term]`: columns up to `KERNEL_COLUMNS`; the
/// remaining columns follow `C_n ≈ c n^{-p}`, fitted on the last two kept
/// columns, and the size of that model tail is added to the bound.
pub(crate) fn rhs_2_16(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let table = shared_table(1_000_000)?;
    let mu = table.mu_values();
    let mut acc = Compensated::<f64>::new();
    let mut bound = 0.0;
    let mut last: Vec<(f64, f64)> = Vec::new();
    for n in 1..=KERNEL_COLUMNS {
        if mu[n] == 0 {
            continue;
        }
        let (c, b) = column_sum(f, x, n as u64, if n <= 3 { 128 } else { 64 })?;
        acc.add(mu[n] as f64 * c);
        bound += b;
        last.push((n as f64, c));
    }
    let [.., (n1, c1), (n2, c2)] = last[..] else {
        return Err(Error::Quadrature("too few kernel columns".into()));
    };
    let power = (c1 / c2).ln() / (n2 / n1).ln();
    let mut model = Compensated::<f64>::new();
    let mut size = 0.0;
    for (n, &u) in mu.iter().enumerate().skip(KERNEL_COLUMNS + 1) {
        if u != 0 {
            let t = c2 * (n2 / n as f64).powf(power);
            model.add(u as f64 * t);
            size += t;
        }
    }
    acc.add(model.value());
    Ok(Side::real(acc.value(), bound + size))
}

/// `Vf(x) = Σ d(n) f(nx) − ∫ f(xy)(log y + 2γ) dy`.
pub(crate) fn lhs_1_40(p: &Point, ctx: &Ctx) -> Result<Side> {
    Ok(op(voronoi_operator(ctx.f()?, p.need_x()?)?))
}

/// Terms of the dual divisor series computed with the kernel quadrature.
const DUAL_TERMS: usize = 200;

/// `f(0)/4 + (1/x) Σ d(n) G(n/x)`; past `N` the kernel is `c/X²` with `c`
/// read off at `X = N/x`, and `Σ_{n>N} d(n)/n² = ζ(2)² − Σ_{n≤N} d(n)/n²`.
/// The change of `c` between `N/2` and `N` bounds the model error.
pub(crate) fn rhs_1_40(p: &Point, ctx: &Ctx) -> Result<Side> {
    let (f, x) = (ctx.f()?, p.need_x()?);
    let table = shared_table(DUAL_TERMS)?;
    let mut acc = Compensated::<f64>::new();
    let mut bound = 0.0;
    let mut squares = Compensated::<f64>::new();
    let mut c_half = 0.0;
    let mut c_end = 0.0;
    for n in 1..=DUAL_TERMS {
        let d = Weight::Divisor(2).value(&table, n);
        let big_x = n as f64 / x;
        let g = voronoi_g_kernel(f, big_x, 0)?;
        acc.add(d * g.value);
        bound += d * g.error;
        squares.add(d / (n * n) as f64);
        if n == DUAL_TERMS / 2 {
            c_half = g.value * big_x * big_x;
        }
        if n == DUAL_TERMS {
            c_end = g.value * big_x * big_x;
        }
    }
    let zeta2 = PI * PI / 6.0;
    let rest = zeta2 * zeta2 - squares.value();
    let tail = c_end * x * x * rest;
    let value = f.value_at_zero() / 4.0 + (acc.value() + tail) / x;
    Ok(Side::real(value, (bound + (c_end - c_half).abs() * x * x * rest) / x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::euler_gamma;

    #[test]
    fn laurent_polynomial_differs_from_alternative_form() {
        // alternative form: log² y + 3γ(log y + 2γ) + 3γ_1
        let g = euler_gamma();
        let g1 = crate::special::stieltjes_constants(1).unwrap().gamma(1);
        let alternative = [6.0 * g * g + 3.0 * g1, 3.0 * g, 1.0];
        let p = residue_polynomial(3).unwrap();
        assert!((p.coeffs[2] - 0.5).abs() < 1e-12);
        assert!((p.coeffs[1] - 3.0 * g).abs() < 1e-12);
        assert!((p.coeffs[0] - alternative[0]).abs() > 0.1);
    }

    #[test]
    fn moment_of_reduced_sum_vanishes_for_high_order_zero() {
        let f = TestFunction::vanishing(3);
        let poly = residue_polynomial(2).unwrap();
        let m = reduced_moment(&f, 1.0, &poly.coeffs).unwrap();
        assert!(m.value.norm() < 1e-12);
        assert!(vanishing_order(&TestFunction::exp(), 1).is_err());
    }
}

//! Identities generated by `f(x) = e^{-x}`: squarefree exponential sums,
//! the Lambert type expansion and their Möbius transforms.

use super::{arith::TERMS, Ctx, Point, Side};
use crate::error::Result;
use crate::operators::shared_table;
use crate::sum::Compensated;
use std::f64::consts::PI;

const SIX_PI2: f64 = 6.0 / (PI * PI);

/// Last index whose term `e^{-n^p x}` is still above `1e-20`.
fn cutoff(x: f64, p: f64) -> usize {
    ((46.0 / x).powf(1.0 / p).ceil() as usize).max(2)
}

fn mu(n: usize) -> Result<Vec<i8>> {
    Ok(shared_table(n)?.mu_values()[..=n].to_vec())
}

fn sum_mu<F: Fn(usize) -> f64>(n: usize, g: F) -> Result<f64> {
    let mu = mu(n)?;
    let mut acc = Compensated::<f64>::new();
    for (m, &u) in mu.iter().enumerate().skip(1) {
        if u != 0 {
            acc.add(u as f64 * g(m));
        }
    }
    Ok(acc.value())
}

/// `Σ_{n>N} μ(n)/n² = 6/π² − Σ_{n≤N} μ(n)/n²`.
fn mobius_square_tail(n: usize) -> Result<f64> {
    Ok(SIX_PI2 - sum_mu(n, |m| 1.0 / (m * m) as f64)?)
}

/// `Σ_{n squarefree} e^{-nx}`.
pub(crate) fn lhs_3_1(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n = cutoff(x, 1.0);
    let mu = mu(n)?;
    let v = crate::sum::ksum(mu.iter().enumerate().skip(1).filter(|(_, &u)| u != 0).map(|(m, _)| (-(m as f64) * x).exp()));
    Ok(Side::real(v, 1e-19))
}

/// `6/(xπ²) + Σ μ(n)[Σ_m 2n²x/(4π²m² + n⁴x²) − 1/2]`; the inner sum is
/// `coth(n²x/2)/2 − 1/(n²x)`, so the bracket is `1/(e^{n²x}−1) − 1/(n²x)`.
pub(crate) fn rhs_3_1(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n = cutoff(x, 2.0);
    let head = sum_mu(n, |m| {
        let y = (m * m) as f64 * x;
        1.0 / y.exp_m1() - 1.0 / y
    })?;
    Ok(Side::real(SIX_PI2 / x + head - mobius_square_tail(n)? / x, 1e-18))
}

/// `Σ μ(n)/(e^{n²x} − 1)`.
pub(crate) fn lhs_3_2(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    Ok(Side::real(sum_mu(cutoff(x, 2.0), |m| 1.0 / ((m * m) as f64 * x).exp_m1())?, 1e-19))
}

/// Right side in the cosh form: `6/(xπ²) + (1/2) Σ μ(n)/cosh(n²x)`.
pub(crate) fn rhs_3_2_cosh(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let v = sum_mu(cutoff(x, 2.0), |m| 1.0 / ((m * m) as f64 * x).cosh())?;
    Ok(Side::real(SIX_PI2 / x + 0.5 * v, 1e-19))
}

/// `6/(xπ²) + (1/2) Σ μ(n)[coth(n²x/2) − 1 − 2/(n²x)]`.
pub(crate) fn rhs_3_2_coth(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n = cutoff(x, 2.0);
    let v = sum_mu(n, |m| {
        let y = (m * m) as f64 * x;
        // coth(y/2) - 1 = 2/(e^y - 1)
        2.0 / y.exp_m1() - 2.0 / y
    })?;
    Ok(Side::real(SIX_PI2 / x + 0.5 * v - mobius_square_tail(n)? / x, 1e-18))
}

fn sqfree_fraction(n: f64, x: f64) -> f64 {
    2.0 * x / (n * n + x * x)
}

/// `Σ_{n squarefree} 2x/(n² + x²)` to `TERMS`, with an Abel tail against the
/// squarefree density `6/π²`.
///
/// With `Q(t) = 6t/π² + R(t)`, the tail is `(6/π²)∫_N^∞ g − R(N) g(N) − ∫ R g'`
/// and `|g'(t)| <= 4x/t³`, so the last piece is at most `C (8x/3) N^{-3/2}`
/// when `|R(t)| <= C √t`.
pub(crate) fn lhs_3_3(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n = TERMS;
    let mu = mu(n)?;
    let mut acc = Compensated::<f64>::new();
    let mut count = 0usize;
    let mut worst: f64 = 0.0;
    for (m, &u) in mu.iter().enumerate().skip(1) {
        if u != 0 {
            count += 1;
            acc.add(sqfree_fraction(m as f64, x));
        }
        if 2 * m >= n {
            let t = m as f64;
            let r = (count as f64 - SIX_PI2 * t).abs().max((count as f64 - SIX_PI2 * (t + 1.0)).abs());
            worst = worst.max(r / t.sqrt());
        }
    }
    let big_n = n as f64;
    let remainder = count as f64 - SIX_PI2 * big_n;
    let integral = 2.0 * (PI / 2.0 - (big_n / x).atan());
    let tail = SIX_PI2 * integral - remainder * sqfree_fraction(big_n, x);
    let bound = 2.0 * worst * 8.0 * x / 3.0 * big_n.powf(-1.5);
    Ok(Side::real(acc.value() + tail, bound))
}

/// `y coth y − 1`, accurate for small `y`.
fn ycoth_minus_one(y: f64) -> f64 {
    if y < 0.1 {
        let y2 = y * y;
        y2 * (1.0 / 3.0 + y2 * (-1.0 / 45.0 + y2 * (2.0 / 945.0 + y2 * (-1.0 / 4725.0 + y2 * 2.0 / 93555.0))))
    } else {
        y / y.tanh() - 1.0
    }
}

/// `Σ μ(n)[π/n² coth(πx/n²) − 1/x]`; the bracket is `O(n^{-4})`.
pub(crate) fn rhs_3_3(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n = 100_000;
    let v = sum_mu(n, |m| ycoth_minus_one(PI * x / (m * m) as f64) / x)?;
    let tail = PI * PI * x / (9.0 * (n as f64).powi(3));
    Ok(Side::real(v, tail))
}

/// `Σ_{μ(n)=0} e^{-nx}`, summed directly over the non-squarefree integers.
pub(crate) fn lhs_3_4(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n = cutoff(x, 1.0);
    let mu = mu(n)?;
    let v = crate::sum::ksum(mu.iter().enumerate().skip(1).filter(|(_, &u)| u == 0).map(|(m, _)| (-(m as f64) * x).exp()));
    Ok(Side::real(v, 1e-19))
}

/// `1/(e^x − 1)` minus the cosh form of the squarefree sum.
pub(crate) fn rhs_3_4_cosh(p: &Point, ctx: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let r = rhs_3_2_cosh(p, ctx)?;
    Ok(Side::complex(1.0 / x.exp_m1() - r.value, r.bound))
}

/// `Σ_{n≥2} μ(n)/(1 − e^{n²x})`.
pub(crate) fn rhs_3_4_series(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let v = sum_mu(cutoff(x, 2.0), |m| if m == 1 { 0.0 } else { -1.0 / ((m * m) as f64 * x).exp_m1() })?;
    Ok(Side::real(v, 1e-19))
}

pub(crate) fn lhs_lambert(p: &Point, _: &Ctx) -> Result<Side> {
    Ok(Side::exact((-p.need_x()?).exp()))
}

/// `Σ μ(n)/(e^{nx} − 1)`; the terms after `N` are below the geometric bound
/// `e^{-(N+1)x}/((1 − e^{-x})²)`.
pub(crate) fn rhs_lambert(p: &Point, _: &Ctx) -> Result<Side> {
    let x = p.need_x()?;
    let n = cutoff(x, 1.0);
    let v = sum_mu(n, |m| 1.0 / (m as f64 * x).exp_m1())?;
    let q = (-x).exp();
    let bound = (-((n + 1) as f64) * x).exp() / ((1.0 - q) * (1.0 - q));
    Ok(Side::real(v, bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosh_form_is_off() {
        let p = Point::x(1.0);
        let ctx = Ctx { f: None };
        let l = lhs_3_2(&p, &ctx).unwrap().value.re;
        let cosh = rhs_3_2_cosh(&p, &ctx).unwrap().value.re;
        let coth = rhs_3_2_coth(&p, &ctx).unwrap().value.re;
        assert!((l - coth).abs() < 1e-14);
        assert!((l - cosh).abs() > 0.1);
    }

    #[test]
    fn ycoth_branches_meet() {
        let y = 0.1 - 1e-12;
        let a = ycoth_minus_one(y);
        let b = y / y.tanh() - 1.0;
        assert!((a - b).abs() < 1e-15);
    }
}

//! Integral kernels of the Voronoi formula and of the squarefree Poisson
//! type formula.

use crate::error::{Error, Result};
use crate::mellin::{wynn_epsilon, TestFunction};
use crate::quad::{integrate, integrate_to_infinity, Quad, Tol};
use crate::special::bessel::{bessel_k0, bessel_y0};
use crate::special::expint::{e1, ei};
use crate::special::fresnel::{erf_bracket, kappa, kappa_oscillatory, kappa_smooth};
use crate::sum::Compensated;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

/// Sums `∫` over consecutive segments `[k h, (k+1) h]`, stopping once the
/// integrand is negligible. With `accelerate`, partial sums reaching
/// `max_segments` are extrapolated with Wynn's epsilon.
fn segmented<F: FnMut(f64) -> f64>(
    mut g: F,
    h: f64,
    max_segments: usize,
    accelerate: bool,
    negligible: impl Fn(f64) -> bool,
) -> Result<Quad<f64>> {
    let tol = Tol::new(1e-16, 1e-13);
    let mut acc = Compensated::new();
    let mut err = 0.0;
    let mut partial = Vec::new();
    for k in 0..max_segments {
        let (a, b) = (k as f64 * h, (k + 1) as f64 * h);
        let q = integrate(&mut g, a, b, tol)?;
        acc.add(q.value);
        err += q.error;
        partial.push(acc.value());
        if negligible(b) {
            return Ok(Quad { value: acc.value(), error: err });
        }
    }
    if !accelerate {
        return Ok(Quad { value: acc.value(), error: err });
    }
    let tail = &partial[partial.len() - 40..];
    let v = wynn_epsilon(tail);
    let spread = (v - wynn_epsilon(&tail[..tail.len() - 2])).abs();
    Ok(Quad { value: v, error: err + spread })
}

/// `G(x) = ∫_0^∞ [4 K0(4π√(xy)) - 2π Y0(4π√(xy))] f(y) dy`, integrated in
/// `u = √y` over half-periods of the Bessel oscillation; `refine` splits
/// each half-period further.
pub fn voronoi_g_kernel(f: &TestFunction, x: f64, refine: usize) -> Result<Quad<f64>> {
    if !(x > 0.0) {
        return Err(Error::OutOfRange(format!("kernel needs x > 0, got {x}")));
    }
    let w = 4.0 * PI * x.sqrt();
    let h = PI / w / refine.max(1) as f64;
    let integrand = |u: f64| {
        let z = w * u;
        if z <= 0.0 {
            return 0.0;
        }
        let k = bessel_k0(z).unwrap_or(0.0);
        let y = bessel_y0(z).unwrap_or(0.0);
        (4.0 * k - 2.0 * PI * y) * f.eval(u * u) * 2.0 * u
    };
    let negligible = |u: f64| {
        let y = u * u;
        u > 1.0 && f.eval(y).abs() * u < 1e-22 && f.eval(2.0 * y).abs() * u < 1e-22
    };
    segmented(integrand, h, 4000 * refine.max(1), true, negligible)
}

/// Closed form of `G` for `f = e^{-x}`:
/// `2[e^z E1(z) - e^{-z} Ei(z)]` with `z = 4π² x`.
pub fn voronoi_g_exp_closed_form(x: f64) -> f64 {
    let z = 4.0 * PI * PI * x;
    if z > 60.0 {
        // -4 Σ_{m even} (m-1)! / z^m
        let mut acc = Compensated::new();
        let mut term = 1.0 / z;
        for m in 1..200 {
            let next = term * m as f64 / z;
            if m % 2 == 0 {
                if next.abs() > term.abs() {
                    break;
                }
                acc.add(-4.0 * term);
            }
            term = next;
            if term < 1e-22 {
                break;
            }
        }
        return acc.value();
    }
    2.0 * (z.exp() * e1(z) - (-z).exp() * ei(z))
}

/// One `(n, m)` term of the squarefree Poisson type series, evaluated
/// through the real kernel `κ` and, independently, through complex error
/// functions.
#[derive(Debug, Clone, Copy)]
pub struct KernelTerm {
    /// Argument `a = πx / (2 n² m)` of the kernel `G`.
    pub a: f64,
    pub real_path: f64,
    pub complex_path: Complex64,
}

/// `2^{-3/2} e^{-iπ/4} √x n^{-2} m^{-3/2} G(πx/(2n²m))` with
/// `G(a) = ∫_0^∞ f(1/u) u^{-1/2} [e^{iau} erf(e^{iπ/4}√(au)) + e^{-iau} erfi(e^{iπ/4}√(au))] du`,
/// without the Möbius factor `μ(n)`.
pub fn error_function_kernel(f: &TestFunction, x: f64, n: u64, m: u64) -> Result<KernelTerm> {
    if !(x > 0.0) || n == 0 || m == 0 {
        return Err(Error::OutOfRange(format!("kernel needs x > 0 and n, m >= 1 (x = {x}, n = {n}, m = {m})")));
    }
    if f.small_x_exponent() <= 0.5 {
        return Err(Error::Hypothesis(format!("{} must vanish faster than x^(1/2) at 0", f.name())));
    }
    let (nf, mf) = (n as f64, m as f64);
    let a = PI * x / (2.0 * nf * nf * mf);
    let weight = 2f64.powf(-1.5) * x.sqrt() / (nf * nf * mf.powf(1.5));
    let h = PI / a;
    let g = |u: f64| if u <= 0.0 { 0.0 } else { f.eval(1.0 / u) };
    let head_segments = 200usize;
    let end = head_segments as f64 * h;
    let never = |_: f64| false;
    // head: both bracket representations on [0, U]
    let head_real = segmented(|u| g(u) * kappa(a * u), h, head_segments, false, never)?;
    let br = segmented(|u| g(u) / u.sqrt() * erf_bracket(a * u).re, h, head_segments, false, never)?;
    let bi = segmented(|u| g(u) / u.sqrt() * erf_bracket(a * u).im, h, head_segments, false, never)?;
    // tail: κ = κ_osc + κ_smooth beyond U, shared by both paths
    let smooth = integrate_to_infinity(|u: f64| g(u) * kappa_smooth(a * u), end, Tol::new(1e-16, 1e-12))?;
    let osc = segmented(
        |v| {
            let u = end + v;
            g(u) * kappa_oscillatory(a * u)
        },
        h,
        400,
        true,
        never,
    )?;
    let tail = smooth.value + osc.value;
    let scale = 4.0 / PI.sqrt() * a.sqrt();
    let real_path = weight * scale * (head_real.value + tail);
    let bracket_integral = Complex64::new(br.value, bi.value) + Complex64::from_polar(scale, FRAC_PI_4) * tail;
    let complex_path = Complex64::from_polar(weight, -FRAC_PI_4) * bracket_integral;
    Ok(KernelTerm { a, real_path, complex_path })
}

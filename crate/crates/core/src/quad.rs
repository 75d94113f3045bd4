//! Adaptive Gauss-Kronrod quadrature, fixed-order Gauss-Legendre panels and
//! helpers for half-line integrals.

use crate::error::{Error, Result};
use crate::sum::{Compensated, Scalar};
use std::collections::BinaryHeap;
use std::ops::Mul;
use std::sync::{Mutex, OnceLock};

/// Values that can be integrated: reals and complex numbers.
pub trait Integrand: Scalar + Mul<f64, Output = Self> {}
impl<T: Scalar + Mul<f64, Output = T>> Integrand for T {}

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_452_206,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Result of a quadrature: value and absolute error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Quad<T> {
    pub value: T,
    pub error: f64,
}

/// Tolerance pair; the integral is accepted once
/// `error <= max(abs, rel * |value|)`.
#[derive(Debug, Clone, Copy)]
pub struct Tol {
    pub abs: f64,
    pub rel: f64,
}

impl Tol {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    fn target(&self, magnitude: f64) -> f64 {
        self.abs.max(self.rel * magnitude)
    }
}

impl Default for Tol {
    fn default() -> Self {
        Self::new(1e-13, 1e-13)
    }
}

fn kronrod21<T: Integrand, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64) -> (T, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = Compensated::new();
    let mut g = Compensated::new();
    k.add(fc * WGK[10]);
    for j in 0..10 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        k.add(pair * WGK[j]);
        if j % 2 == 1 {
            g.add(pair * WG[j / 2]);
        }
    }
    let kv = k.value() * h;
    let gv = g.value() * h;
    let err = (kv - gv).magnitude();
    (kv, err.max(f64::EPSILON * kv.magnitude()))
}

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

pub const MAX_PANELS: usize = 4000;

fn resum<T: Integrand>(heap: &BinaryHeap<Panel<T>>) -> (T, f64) {
    let mut s = Compensated::new();
    let mut err = 0.0;
    for p in heap.iter() {
        s.add(p.value);
        err += p.error;
    }
    (s.value(), err)
}

/// Globally adaptive 21-point Gauss-Kronrod quadrature on `[a, b]`.
pub fn integrate<T, F>(mut f: F, a: f64, b: f64, tol: Tol) -> Result<Quad<T>>
where
    T: Integrand,
    F: FnMut(f64) -> T,
{
    if a == b {
        return Ok(Quad { value: T::default(), error: 0.0 });
    }
    let (v, e) = kronrod21(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value: v, error: e });
    let mut total = v;
    let mut total_err = e;
    while total_err > tol.target(total.magnitude()) {
        if heap.len() >= MAX_PANELS {
            return Err(Error::Quadrature(format!(
                "[{a}, {b}]: error estimate {total_err:e} after {MAX_PANELS} panels"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval can no longer be split in floating point
            heap.push(worst);
            break;
        }
        let (lv, le) = kronrod21(&mut f, worst.a, mid);
        let (rv, re) = kronrod21(&mut f, mid, worst.b);
        total = total - worst.value + lv + rv;
        total_err += le + re - worst.error;
        heap.push(Panel { a: worst.a, b: mid, value: lv, error: le });
        heap.push(Panel { a: mid, b: worst.b, value: rv, error: re });
        if heap.len() % 64 == 0 {
            let (v, e) = resum(&heap);
            total = v;
            total_err = e;
        }
    }
    let (total, total_err) = resum(&heap);
    Ok(Quad { value: total, error: total_err })
}

/// Integral over a sequence of breakpoints, adaptive on each piece.
pub fn integrate_pieces<T, F>(mut f: F, points: &[f64], tol: Tol) -> Result<Quad<T>>
where
    T: Integrand,
    F: FnMut(f64) -> T,
{
    let mut s = Compensated::new();
    let mut err = 0.0;
    let pieces = points.len().saturating_sub(1).max(1) as f64;
    let piece_tol = Tol::new(tol.abs / pieces, tol.rel);
    for w in points.windows(2) {
        let q = integrate(&mut f, w[0], w[1], piece_tol)?;
        s.add(q.value);
        err += q.error;
    }
    Ok(Quad { value: s.value(), error: err })
}

/// `∫_a^∞ f(x) dx` for `a > 0`, via the map `x = a / u` onto `(0, 1]`.
pub fn integrate_to_infinity<T, F>(mut f: F, a: f64, tol: Tol) -> Result<Quad<T>>
where
    T: Integrand,
    F: FnMut(f64) -> T,
{
    if a <= 0.0 {
        return Err(Error::OutOfRange(format!("lower limit {a} must be positive")));
    }
    integrate(
        |u: f64| {
            if u <= 0.0 {
                T::default()
            } else {
                f(a / u) * (a / (u * u))
            }
        },
        0.0,
        1.0,
        tol,
    )
}

/// `∫_0^∞ f(x) dx`, split at `x = 1`; `[0, 1]` is bisected geometrically
/// towards the origin and the tail is mapped by `x -> 1/x`.
pub fn integrate_half_line<T, F>(mut f: F, tol: Tol) -> Result<Quad<T>>
where
    T: Integrand,
    F: FnMut(f64) -> T,
{
    let half = Tol::new(0.5 * tol.abs, tol.rel);
    let head = integrate_pieces(&mut f, &[0.0, 1e-6, 1e-3, 0.1, 1.0], half)?;
    let tail = integrate_to_infinity(&mut f, 1.0, half)?;
    Ok(Quad { value: head.value + tail.value, error: head.error + tail.error })
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, computed by Newton
/// iteration on the Legendre recurrence and cached per order.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<Mutex<Vec<(usize, Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    if let Some((_, x, w)) = cache.lock().unwrap().iter().find(|(m, _, _)| *m == n) {
        return (x.clone(), w.clone());
    }
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else if n == 1 { z } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = nf * (z * pn - pm) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    cache.lock().unwrap().push((n, x.clone(), w.clone()));
    (x, w)
}

/// Fixed-order Gauss-Legendre rule applied on `panels` equal panels.
pub fn gauss_panels<T, F>(mut f: F, a: f64, b: f64, panels: usize, order: usize) -> T
where
    T: Integrand,
    F: FnMut(f64) -> T,
{
    let (x, w) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut s = Compensated::new();
    for p in 0..panels {
        let lo = a + h * p as f64;
        let c = lo + 0.5 * h;
        for (xi, wi) in x.iter().zip(&w) {
            s.add(f(c + 0.5 * h * xi) * (0.5 * h * wi));
        }
    }
    s.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn kronrod_gauss_nodes_match_newton_legendre() {
        let (x, _) = gauss_legendre(10);
        for j in 0..5 {
            let node = XGK[2 * j + 1];
            assert!(x.iter().any(|&z| (z - node).abs() < 1e-15), "node {node}");
        }
    }

    #[test]
    fn kronrod_exact_for_polynomials() {
        let mut f = |x: f64| x.powi(30) + 3.0 * x.powi(7);
        let (v, _) = kronrod21(&mut f, -1.0, 1.0);
        assert!((v - 2.0 / 31.0).abs() < 1e-15);
    }

    #[test]
    fn log_singularity() {
        let q: Quad<f64> = integrate(|x: f64| x.ln(), 0.0, 1.0, Tol::default()).unwrap();
        assert!((q.value + 1.0).abs() < 1e-12, "{}", q.value);
    }

    #[test]
    fn half_line_gamma() {
        let q = integrate_half_line(|x: f64| x * (-x).exp(), Tol::default()).unwrap();
        assert!((q.value - 1.0).abs() < 1e-13);
        let c: Quad<Complex64> =
            integrate_half_line(|x: f64| Complex64::new(0.0, x).exp() * (-x).exp(), Tol::default())
                .unwrap();
        // ∫ e^{-(1-i)x} dx = 1/(1-i) = (1+i)/2
        assert!((c.value - Complex64::new(0.5, 0.5)).norm() < 1e-13);
    }

    #[test]
    fn panels_integrate_gaussian() {
        let v: f64 = gauss_panels(|x: f64| (-x * x).exp(), -8.0, 8.0, 16, 20);
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }
}

//! Fresnel integrals, the parabolic cosine kernel
//! `κ(a) = ∫_0^1 cos(a(1 - t²)) dt`, and complex error functions on the
//! `e^{iπ/4}` ray.

use crate::error::{Error, Result};
use crate::quad::{integrate_to_infinity, Tol};
use crate::sum::Compensated;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

const SERIES_LIMIT: f64 = 2.0;
const ASYMPTOTIC_LIMIT: f64 = 6.0;

/// `u^{-1} Σ_k (2k-1)!! (i / (2u²))^k (-1)^k`, the asymptotic form of
/// `∫_0^∞ e^{-τ} (u² + iτ)^{-1/2} dτ`; accurate for `u >= 6`.
fn asymptotic_inner(u: f64) -> Complex64 {
    let i = Complex64::i();
    let u2 = u * u;
    let mut term = Complex64::new(1.0 / u, 0.0);
    let mut acc = Compensated::new();
    acc.add(term);
    for k in 1..200 {
        let next = term * (i * (-(2 * k - 1) as f64 / (2.0 * u2)));
        if next.norm() >= term.norm() || next.norm() < 1e-19 {
            break;
        }
        term = next;
        acc.add(term);
    }
    acc.value()
}

/// `∫_u^∞ exp(i v²) dv` for `u > 0` through the steepest-descent form
/// `(i/2) e^{iu²} ∫_0^∞ e^{-τ} (u² + iτ)^{-1/2} dτ`.
fn fresnel_tail(u: f64) -> Complex64 {
    let i = Complex64::i();
    let u2 = u * u;
    let inner = if u >= ASYMPTOTIC_LIMIT {
        asymptotic_inner(u)
    } else {
        let head = crate::quad::integrate(
            |t: f64| (Complex64::new(u2, t)).sqrt().inv() * (-t).exp(),
            0.0,
            1.0,
            Tol::new(1e-16, 1e-13),
        );
        let tail = integrate_to_infinity(
            |t: f64| (Complex64::new(u2, t)).sqrt().inv() * (-t).exp(),
            1.0,
            Tol::new(1e-16, 1e-13),
        );
        match (head, tail) {
            (Ok(h), Ok(t)) => h.value + t.value,
            _ => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    i * 0.5 * (i * u2).exp() * inner
}

/// Unnormalized Fresnel integrals `(∫_0^u cos v² dv, ∫_0^u sin v² dv)`.
pub fn fresnel_cs(u: f64) -> (f64, f64) {
    if u < 0.0 {
        let (c, s) = fresnel_cs(-u);
        return (-c, -s);
    }
    if u <= SERIES_LIMIT {
        let u2 = u * u;
        let mut c = Compensated::new();
        let mut s = Compensated::new();
        // u^{2j+1} i^j / (j! (2j+1)), split by parity of j
        let mut p = u;
        for j in 0..200usize {
            let v = p / (2 * j + 1) as f64;
            match j % 4 {
                0 => c.add(v),
                1 => s.add(v),
                2 => c.add(-v),
                _ => s.add(-v),
            }
            p *= u2 / (j + 1) as f64;
            if p < 1e-20 {
                break;
            }
        }
        return (c.value(), s.value());
    }
    let whole = (0.5 * PI.sqrt()) * Complex64::from_polar(1.0, FRAC_PI_4);
    let f = whole - fresnel_tail(u);
    (f.re, f.im)
}

/// `κ(a) = ∫_0^1 cos(a(1 - t²)) dt = [cos a · C(√a) + sin a · S(√a)] / √a`.
pub fn cos_parabolic_kernel(a: f64) -> Result<f64> {
    if !(a >= 0.0) || !a.is_finite() {
        return Err(Error::OutOfRange(format!("kernel needs finite a >= 0, got {a}")));
    }
    Ok(kappa(a))
}

pub(crate) fn kappa(a: f64) -> f64 {
    if a < 1e-3 {
        // cos(a(1-t²)) = 1 - a²(1-t²)²/2 + a⁴(1-t²)⁴/24, integrated termwise
        let a2 = a * a;
        return 1.0 - a2 * 4.0 / 15.0 + a2 * a2 * 128.0 / 315.0 / 24.0;
    }
    let r = a.sqrt();
    let (c, s) = fresnel_cs(r);
    (a.cos() * c + a.sin() * s) / r
}

/// Oscillatory part `√(π/8)(cos z + sin z)/√z` of `κ(z)` for large `z`.
pub fn kappa_oscillatory(z: f64) -> f64 {
    (PI / 8.0).sqrt() * (z.cos() + z.sin()) / z.sqrt()
}

/// Non-oscillatory remainder `κ(z) - κ_osc(z) = O(z^{-2})`, for `z >= 36`.
pub fn kappa_smooth(z: f64) -> f64 {
    let r = z.sqrt();
    0.5 * asymptotic_inner(r).im / r
}

/// Complex error function: Taylor series for `|z| < 3`, the Laplace
/// continued fraction for `erfc` beyond.
pub fn erf_complex(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return -erf_complex(-z);
    }
    if z.norm() < 3.0 {
        let z2 = z * z;
        let mut p = z;
        let mut acc = Compensated::new();
        for n in 0..400usize {
            let term = p / (2 * n + 1) as f64;
            acc.add(term);
            if term.norm() < 1e-18 * acc.value().norm().max(1e-300) {
                break;
            }
            p = -p * z2 / (n + 1) as f64;
        }
        return acc.value() * (2.0 / PI.sqrt());
    }
    // erfc z = e^{-z²}/√π · 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))), evaluated by modified Lentz
    let tiny = 1e-300;
    let mut f = z;
    let mut c = z;
    let mut d = Complex64::new(0.0, 0.0);
    for k in 1..5000 {
        let a = k as f64 * 0.5;
        d = z + d * a;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        c = z + a / c;
        if c.norm() < tiny {
            c = Complex64::new(tiny, 0.0);
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    1.0 - (-z * z).exp() / (PI.sqrt() * f)
}

/// `erfi z = -i erf(iz)`.
pub fn erfi_complex(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    -i * erf_complex(i * z)
}

/// `e^{iz} erf(e^{iπ/4}√z) + e^{-iz} erfi(e^{iπ/4}√z)` for real `z ≥ 0`,
/// evaluated with complex error functions.
pub fn erf_bracket(z: f64) -> Complex64 {
    let w = Complex64::from_polar(z.sqrt(), FRAC_PI_4);
    let e = Complex64::from_polar(1.0, z);
    e * erf_complex(w) + e.conj() * erfi_complex(w)
}

/// The bracket through the real kernel:
/// `(4 e^{iπ/4} / √π) √z κ(z)`.
pub fn erf_bracket_real(z: f64) -> Complex64 {
    Complex64::from_polar(4.0 / PI.sqrt(), FRAC_PI_4) * (z.sqrt() * kappa(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    const FRESNEL: [(f64, f64, f64); 9] = [
        (0.3, 0.299757091107968507, 0.00899479419897579992),
        (1.5, 0.899184852887478612, 0.7782378043068086),
        (2.0, 0.461461462433216373, 0.80477648934375611),
        (2.5, 0.605307839114867954, 0.430517743767528135),
        (4.0, 0.594460327497822982, 0.747133844648114656),
        (5.9, 0.606675071866621047, 0.708968745096385085),
        (6.1, 0.587196486916551527, 0.554855525403624664),
        (10.0, 0.601125184813444348, 0.583670899929623342),
        (30.0, 0.643286494440866256, 0.625543719100243097),
    ];

    #[test]
    fn fresnel_reference() {
        for (u, c, s) in FRESNEL {
            let (fc, fs) = fresnel_cs(u);
            assert!((fc - c).abs() < 1e-14 && (fs - s).abs() < 1e-14, "u = {u}: {fc} {fs}");
        }
    }

    #[test]
    fn kernel_values() {
        assert_eq!(cos_parabolic_kernel(0.0).unwrap(), 1.0);
        for (a, v) in [
            (1.0, 0.749798304856985851),
            (10.0, -0.276500015532808013),
            (100.0, 0.0222810702032081326),
            (1000.0, 0.027530182998376477),
        ] {
            assert!((cos_parabolic_kernel(a).unwrap() - v).abs() < 1e-12, "a = {a}");
        }
        assert!(cos_parabolic_kernel(-1.0).is_err());
    }

    #[test]
    fn kernel_matches_quadrature() {
        for a in [0.0005, 0.002, 0.5, 3.0, 7.5, 40.0, 250.0, 999.0] {
            let n = 40 + (a as usize) / 2;
            let q: f64 = crate::quad::gauss_panels(|t: f64| (a * (1.0 - t * t)).cos(), 0.0, 1.0, n, 20);
            assert!((kappa(a) - q).abs() < 1e-10, "a = {a}");
        }
    }

    #[test]
    fn kernel_splits_into_oscillatory_and_smooth() {
        for z in [36.0, 50.0, 300.0, 5000.0] {
            let split = kappa_oscillatory(z) + kappa_smooth(z);
            assert!((kappa(z) - split).abs() < 1e-15, "z = {z}");
            assert!(kappa_smooth(z).abs() < 1.0 / (z * z));
        }
    }

    #[test]
    fn kernel_decay_bound() {
        for a in [10.0f64, 100.0, 1000.0] {
            assert!(kappa(a).abs() * a.sqrt() < 1.0);
        }
    }

    #[test]
    fn bracket_paths_agree() {
        for z in [0.0, 0.1, 0.7, 2.0, 5.0, 8.9, 9.1, 20.0, 60.0, 400.0] {
            let a = erf_bracket(z);
            let b = erf_bracket_real(z);
            assert!((a - b).norm() < 1e-10, "z = {z}: {a} {b}");
        }
    }

    #[test]
    fn erf_known_values() {
        let e = erf_complex(Complex64::new(1.0, 0.0));
        assert!((e.re - 0.842_700_792_949_714_9).abs() < 1e-15);
        let big = erf_complex(Complex64::new(4.0, 1.0));
        // erf(4+i) = 1.0000000006... - 9.8e-9 i
        assert!((big - 1.0).norm() < 1e-7);
    }
}

//! Complex Γ and log Γ via the Stirling series with upward recurrence and
//! reflection.

use super::bernoulli::bernoulli_even;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const STIRLING_RADIUS: f64 = 16.0;
const STIRLING_TERMS: usize = 14;

fn is_pole(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// `log sin(πz)` computed without overflow for large `|Im z|`.
pub(crate) fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 5.0 {
        return (z * PI).sin().ln();
    }
    let i = Complex64::i();
    if z.im > 0.0 {
        // sin πz = e^{-iπz} (e^{2πiz} - 1) / (2i)
        -i * PI * z + ((i * 2.0 * PI * z).exp() - 1.0).ln() - (2.0 * i).ln()
    } else {
        ln_sin_pi(z.conj()).conj()
    }
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.norm() < STIRLING_RADIUS {
        shift += z.ln();
        z += 1.0;
    }
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    let mut s = (z - 0.5) * z.ln() - z + half_ln_2pi;
    let z2 = z * z;
    let mut zp = z;
    for k in 1..=STIRLING_TERMS {
        let kf = k as f64;
        s += bernoulli_even(k) / (2.0 * kf * (2.0 * kf - 1.0) * zp);
        zp *= z2;
    }
    s - shift
}

/// `log Γ(s)`; the imaginary part is a continuous branch, not necessarily the
/// principal one.
pub fn ln_gamma(s: Complex64) -> Result<Complex64> {
    if is_pole(s) {
        return Err(Error::Pole { function: "gamma", at: format!("{s}") });
    }
    Ok(ln_gamma_unchecked(s))
}

pub(crate) fn ln_gamma_unchecked(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        Complex64::new(PI.ln(), 0.0) - ln_sin_pi(s) - ln_gamma_right(1.0 - s)
    } else {
        ln_gamma_right(s)
    }
}

/// Complex Γ; poles at the non-positive integers are reported as errors.
pub fn gamma_complex(s: Complex64) -> Result<Complex64> {
    ln_gamma(s).map(Complex64::exp)
}

pub(crate) fn gamma_unchecked(s: Complex64) -> Complex64 {
    ln_gamma_unchecked(s).exp()
}

/// Real Γ for `x` not a non-positive integer.
pub fn gamma(x: f64) -> Result<f64> {
    let g = gamma_complex(Complex64::new(x, 0.0))?;
    Ok(g.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn integer_and_half_values() {
        assert!((gamma(2.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-13 * PI.sqrt());
        let mut fact = 1.0;
        for n in 1..20 {
            let g = gamma(n as f64 + 1.0).unwrap();
            fact *= n as f64;
            assert!((g - fact).abs() <= 1e-13 * fact, "n = {n}");
        }
        assert!((gamma(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn poles_reported() {
        for s in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma(s), Err(Error::Pole { .. })));
        }
    }

    #[test]
    fn reflection_identity() {
        let s = c(0.3, 1.0);
        let lhs = gamma_complex(s).unwrap() * gamma_complex(1.0 - s).unwrap();
        let rhs = PI / (s * PI).sin();
        assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm());
    }

    #[test]
    fn duplication_identity() {
        for s in [c(0.7, 2.0), c(3.2, -5.0), c(-1.4, 0.5), c(0.25, 40.0)] {
            let lhs = gamma_complex(s).unwrap() * gamma_complex(s + 0.5).unwrap();
            let rhs = gamma_complex(2.0 * s).unwrap() * PI.sqrt() * Complex64::new(2.0, 0.0).powc(1.0 - 2.0 * s);
            assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm(), "{s}");
        }
    }

    #[test]
    fn recurrence_on_grid() {
        for re in [-2.5, -0.3, 0.2, 0.9, 4.0] {
            for im in [0.5, 3.0, 20.0, 150.0] {
                let s = c(re, im);
                let lhs = gamma_complex(s + 1.0).unwrap();
                let rhs = s * gamma_complex(s).unwrap();
                let tol = if im > 50.0 { 1e-12 } else { 1e-13 };
                assert!((lhs - rhs).norm() <= tol * rhs.norm(), "{s} {:e}", (lhs - rhs).norm() / rhs.norm());
            }
        }
    }

    #[test]
    fn known_complex_value() {
        // |Γ(1/2 + it)|^2 = π / cosh(πt)
        for t in [1.0, 10.0, 100.0] {
            let g = gamma_complex(c(0.5, t)).unwrap();
            let expect = PI / (PI * t).cosh();
            assert!((g.norm_sqr() - expect).abs() <= 1e-12 * expect, "t = {t}");
        }
    }
}

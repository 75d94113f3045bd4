//! Riemann ζ: Euler-Maclaurin summation, the Borwein alternating series and
//! the functional equation.

use super::bernoulli::bernoulli_even;
use super::gamma::{ln_gamma_unchecked, ln_sin_pi};
use crate::error::{Error, Result};
use crate::sum::Compensated;
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

const EM_TERMS: usize = 20;

/// Height above which ζ values lose relative precision in double arithmetic.
pub const PRECISION_HEIGHT: f64 = 1.0e4;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `ζ(s)` for `s ≠ 1`.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    if s == c(1.0, 0.0) {
        return Err(Error::Pole { function: "zeta", at: "1".into() });
    }
    Ok(zeta_unchecked(s))
}

pub(crate) fn zeta_unchecked(s: Complex64) -> Complex64 {
    if s.re <= 0.0 && s.norm() > 1e-3 {
        zeta_reflected(s)
    } else {
        zeta_euler_maclaurin(s)
    }
}

/// `ζ(x)` on the real line.
pub fn zeta_real(x: f64) -> Result<f64> {
    zeta(c(x, 0.0)).map(|z| z.re)
}

/// Warning text when `|Im s|` is above the given precision height.
pub fn precision_warning(s: Complex64, height: f64) -> Option<String> {
    (s.im.abs() > height).then(|| {
        format!("|Im s| = {} exceeds {height}; expect loss of relative precision", s.im.abs())
    })
}

/// Euler-Maclaurin summation with `N ≈ 20 + 0.7|t|` terms and 20 Bernoulli
/// corrections.
pub fn zeta_euler_maclaurin(s: Complex64) -> Complex64 {
    let n = 20 + (0.7 * s.im.abs()).ceil() as usize + (0.5 * (-s.re).max(0.0)).ceil() as usize;
    let nf = n as f64;
    let mut acc = Compensated::new();
    for k in 1..n {
        acc.add((-s * (k as f64).ln()).exp());
    }
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp();
    acc.add(n_pow * nf / (s - 1.0));
    acc.add(n_pow * 0.5);
    // rising factorial s(s+1)...(s+2k-2) / (2k)! times N^{-s-2k+1}
    let mut factor = s / nf * n_pow;
    let mut fact = 2.0;
    for k in 1..=EM_TERMS {
        let term = factor * (bernoulli_even(k) / fact);
        acc.add(term);
        if term.norm() < 1e-18 * acc.value().norm() {
            break;
        }
        let kf = k as f64;
        factor = factor * (s + 2.0 * kf - 1.0) * (s + 2.0 * kf) / (nf * nf);
        fact *= (2.0 * kf + 1.0) * (2.0 * kf + 2.0);
    }
    acc.value()
}

/// `ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)`, evaluated in log form.
pub fn zeta_reflected(s: Complex64) -> Complex64 {
    let one_minus = 1.0 - s;
    let log_factor = s * LN_2 + (s - 1.0) * PI.ln() + ln_sin_pi(s * 0.5) + ln_gamma_unchecked(one_minus);
    log_factor.exp() * zeta_euler_maclaurin(one_minus)
}

/// Dirichlet η by Borwein's accelerated alternating series with `terms` terms.
pub fn eta_borwein(s: Complex64, terms: usize) -> Complex64 {
    let n = terms;
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0 / n as f64;
    let mut partial = term;
    d.push(n as f64 * partial);
    for i in 1..=n {
        let fi = i as f64;
        let fnn = n as f64;
        term *= (fnn + fi - 1.0) * (fnn - fi + 1.0) * 4.0 / ((2.0 * fi - 1.0) * (2.0 * fi));
        partial += term;
        d.push(fnn * partial);
    }
    let dn = d[n];
    let mut acc = Compensated::new();
    for (k, dk) in d.iter().take(n).enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add((-s * ((k + 1) as f64).ln()).exp() * (sign * (dn - dk)));
    }
    acc.value() / dn
}

/// ζ through the alternating series, `ζ(s) = η(s) / (1 - 2^{1-s})`; for
/// `Re s > 0`, `s ≠ 1`, and moderate `|t|`.
pub fn zeta_alternating(s: Complex64) -> Result<Complex64> {
    if s.re <= 0.0 {
        return Err(Error::OutOfRange(format!("alternating series needs Re s > 0, got {s}")));
    }
    let denom = 1.0 - (c(LN_2, 0.0) * (1.0 - s)).exp();
    if denom.norm() < 1e-14 {
        return Err(Error::Pole { function: "zeta_alternating", at: format!("{s}") });
    }
    let terms = 30 + (2.0 * s.im.abs()).ceil() as usize;
    Ok(eta_borwein(s, terms) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two_and_four() {
        let z2 = zeta_real(2.0).unwrap();
        assert!((z2 - PI * PI / 6.0).abs() < 1e-14);
        let z4 = zeta_real(4.0).unwrap();
        assert!((z4 - PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn pole_is_reported() {
        assert!(matches!(zeta(c(1.0, 0.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn negative_integers() {
        // ζ(-1) = -1/12, ζ(-3) = 1/120, ζ(-2) = 0
        assert!((zeta_real(-1.0).unwrap() + 1.0 / 12.0).abs() < 1e-14);
        assert!((zeta_real(-3.0).unwrap() - 1.0 / 120.0).abs() < 1e-14);
        assert!(zeta_real(-2.0).unwrap().abs() < 1e-14);
        assert!((zeta_real(0.0).unwrap() + 0.5).abs() < 1e-14);
    }

    #[test]
    fn two_paths_agree() {
        let s = c(0.5, 3.0);
        let a = zeta(s).unwrap();
        let b = zeta_alternating(s).unwrap();
        assert!((a - b).norm() < 1e-10, "{a} vs {b}");
    }

    #[test]
    fn functional_equation_grid() {
        for sigma in [0.2, 0.5, 0.8] {
            for t in [0.0, 1.0, 5.0, 10.0] {
                let s = c(sigma, t);
                let rhs = zeta_reflected(s);
                let lhs = zeta_euler_maclaurin(s);
                assert!((lhs - rhs).norm() <= 1e-10, "{s}");
            }
        }
        let s = c(0.3, 2.0);
        assert!((zeta(s).unwrap() - zeta_reflected(s)).norm() < 1e-10);
    }

    #[test]
    fn alternating_series_matches() {
        for sigma in [0.5, 1.5] {
            for t in [0.5, 2.0, 8.0] {
                let s = c(sigma, t);
                let lhs = zeta(s).unwrap() * (1.0 - (c(LN_2, 0.0) * (1.0 - s)).exp());
                let rhs = eta_borwein(s, 80);
                assert!((lhs - rhs).norm() < 1e-10, "{s}");
            }
        }
    }

    #[test]
    fn first_zero() {
        let z = zeta(c(0.5, 14.134_725_141_734_693)).unwrap();
        assert!(z.norm() < 1e-12);
    }

    #[test]
    fn high_on_the_line() {
        let s = c(0.5, 200.0);
        let a = zeta_euler_maclaurin(s);
        let b = zeta_reflected(s);
        assert!((a - b).norm() < 1e-9, "{a} {b}");
        assert!(precision_warning(c(0.5, 2e4), PRECISION_HEIGHT).is_some());
    }
}

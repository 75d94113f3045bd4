//! Stieltjes constants from the limit formula
//! `γ_m = lim (Σ_{k≤N} log^m k / k - log^{m+1} N / (m+1))`, with the
//! Euler-Maclaurin tail of the sum removed at finite `N`.

use super::bernoulli::bernoulli_even;
use crate::error::{Error, Result};
use crate::sum::Compensated;

pub const MAX_ORDER: usize = 10;
const CUTOFF: usize = 40;
const EM_TERMS: usize = 12;

/// `γ` and the Stieltjes constants `γ_1..γ_order` in the standard
/// normalization `ζ(s) = 1/(s-1) + Σ (-1)^m γ_m (s-1)^m / m!`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentCoefficients {
    pub gamma0: f64,
    pub stieltjes: Vec<f64>,
}

impl LaurentCoefficients {
    pub fn order(&self) -> usize {
        self.stieltjes.len()
    }

    /// `γ_m` for `m = 0..=order`.
    pub fn gamma(&self, m: usize) -> f64 {
        if m == 0 {
            self.gamma0
        } else {
            self.stieltjes[m - 1]
        }
    }

    /// Coefficient `a_m = (-1)^m γ_m / m!` of `(s-1)^m` in the regular part.
    pub fn laurent(&self, m: usize) -> f64 {
        let fact: f64 = (1..=m).map(|j| j as f64).product();
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        sign * self.gamma(m) / fact
    }
}

pub fn stieltjes_constants(order: usize) -> Result<LaurentCoefficients> {
    if order > MAX_ORDER {
        return Err(Error::OutOfRange(format!("Stieltjes order {order} exceeds {MAX_ORDER}")));
    }
    let gamma0 = stieltjes_gamma(0);
    let stieltjes = (1..=order).map(stieltjes_gamma).collect();
    Ok(LaurentCoefficients { gamma0, stieltjes })
}

/// Change of `γ_m` when the cutoff is doubled; a bound on the truncation
/// error for the orders supported here.
pub fn stieltjes_error_estimate(m: usize) -> f64 {
    (stieltjes_gamma_at(m, CUTOFF) - stieltjes_gamma_at(m, 2 * CUTOFF)).abs()
}

fn stieltjes_gamma(m: usize) -> f64 {
    stieltjes_gamma_at(m, CUTOFF)
}

fn stieltjes_gamma_at(m: usize, n: usize) -> f64 {
    let nf = n as f64;
    let ln_n = nf.ln();
    let mut acc = Compensated::new();
    for k in 2..=n {
        let l = (k as f64).ln();
        acc.add(l.powi(m as i32) / k as f64);
    }
    if m == 0 {
        acc.add(1.0);
    }
    acc.add(-ln_n.powi(m as i32 + 1) / (m as f64 + 1.0));
    acc.add(-0.5 * ln_n.powi(m as i32) / nf);
    // derivatives of log^m x / x: x^{-r-1} Σ_i c[i] log^i x
    let mut c = vec![0.0; m + 1];
    c[m] = 1.0;
    let mut fact = 1.0;
    for r in 1..=2 * EM_TERMS - 1 {
        let rf = r as f64;
        let mut next = vec![0.0; m + 1];
        for i in 0..=m {
            next[i] = -rf * c[i] + if i < m { (i + 1) as f64 * c[i + 1] } else { 0.0 };
        }
        c = next;
        fact *= rf + 1.0;
        if r % 2 == 1 {
            let poly: f64 = c.iter().rev().fold(0.0, |a, &ci| a * ln_n + ci);
            let deriv = poly / nf.powi(r as i32 + 1);
            acc.add(-bernoulli_even(r.div_ceil(2)) / fact * deriv);
        }
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    // high-precision reference values of γ_0..γ_10
    const REFERENCE: [f64; 11] = [
        0.577_215_664_901_532_860_61,
        -0.072_815_845_483_676_724_861,
        -0.009_690_363_192_872_318_484_5,
        0.002_053_834_420_303_345_866_2,
        0.002_325_370_065_467_300_057_5,
        0.000_793_323_817_301_062_701_75,
        -0.000_238_769_345_430_199_609_87,
        -0.000_527_289_567_057_751_046_07,
        -0.000_352_123_353_803_039_509_6,
        -0.000_034_394_774_418_088_048_178,
        0.000_205_332_814_909_064_794_68,
    ];

    #[test]
    fn matches_reference() {
        let lc = stieltjes_constants(10).unwrap();
        for (m, r) in REFERENCE.iter().enumerate() {
            assert!((lc.gamma(m) - r).abs() < 1e-10, "m = {m}: {} vs {r}", lc.gamma(m));
        }
    }

    #[test]
    fn euler_constant_agrees() {
        let lc = stieltjes_constants(0).unwrap();
        assert!(lc.stieltjes.is_empty());
        assert!((lc.gamma0 - super::super::euler_gamma()).abs() < 1e-14);
    }

    #[test]
    fn cutoff_change_is_small() {
        for m in 0..=MAX_ORDER {
            let e = stieltjes_error_estimate(m);
            assert!(e.is_finite() && e < 1e-9, "m = {m}: {e}");
        }
    }

    #[test]
    fn order_cap() {
        assert!(stieltjes_constants(11).is_err());
    }

    #[test]
    fn laurent_normalization() {
        let lc = stieltjes_constants(2).unwrap();
        assert_eq!(lc.laurent(1), -lc.gamma(1));
        assert!((lc.laurent(2) - lc.gamma(2) / 2.0).abs() < 1e-18);
    }
}

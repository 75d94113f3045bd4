//! Residue polynomials `P_{k-1}` of `ζ^k(s) f*(s) x^{-s}` at `s = 1`.

use crate::error::{Error, Result};
use crate::special::stieltjes::{stieltjes_constants, MAX_ORDER};

/// `P_{k-1}(L) = Σ_j coeffs[j] L^j`, defined by
/// `Res_{s=1} ζ^k(s) f*(s) x^{-s} = ∫_0^∞ f(xy) P_{k-1}(log y) dy`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResiduePolynomial {
    pub k: usize,
    pub coeffs: Vec<f64>,
}

impl ResiduePolynomial {
    pub fn eval(&self, l: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |a, &c| a * l + c)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Builds `P_{k-1}` from the power series of `((s-1)ζ(s))^k` at `s = 1`:
/// with `h_r` its coefficients, `P_{k-1}(L) = Σ_r h_r L^{k-1-r} / (k-1-r)!`.
pub fn residue_polynomial(k: usize) -> Result<ResiduePolynomial> {
    if !(1..=8).contains(&k) {
        return Err(Error::OutOfRange(format!("residue polynomial needs 1 <= k <= 8, got {k}")));
    }
    let order = k.saturating_sub(2);
    if order > MAX_ORDER {
        return Err(Error::OutOfRange(format!("k = {k} needs Stieltjes order {order}")));
    }
    let lc = stieltjes_constants(order)?;
    // (s-1)ζ(s) = 1 + Σ_{m≥0} a_m (s-1)^{m+1}
    let mut base = vec![0.0; k];
    base[0] = 1.0;
    for m in 0..k.saturating_sub(1) {
        base[m + 1] = lc.laurent(m);
    }
    let mut h = vec![0.0; k];
    h[0] = 1.0;
    for _ in 0..k {
        let mut next = vec![0.0; k];
        for (i, &hi) in h.iter().enumerate() {
            for (j, &bj) in base.iter().enumerate().take(k - i) {
                next[i + j] += hi * bj;
            }
        }
        h = next;
    }
    let mut coeffs = vec![0.0; k];
    let mut fact = 1.0;
    for j in 0..k {
        if j > 0 {
            fact *= j as f64;
        }
        coeffs[j] = h[k - 1 - j] / fact;
    }
    Ok(ResiduePolynomial { k, coeffs })
}

//! Jacobi theta series `ψ(x) = Σ_{n≥1} exp(-π n² x)`.

use crate::error::{Error, Result};
use crate::sum::Compensated;
use std::f64::consts::PI;

pub fn theta_psi(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::OutOfRange(format!("theta needs x > 0, got {x}")));
    }
    Ok(theta_psi_unchecked(x))
}

pub(crate) fn theta_psi_unchecked(x: f64) -> f64 {
    let mut acc = Compensated::new();
    let mut n = 1.0f64;
    loop {
        let term = (-PI * n * n * x).exp();
        if term == 0.0 || (n > 1.0 && term < 1e-18 * acc.value()) {
            break;
        }
        acc.add(term);
        n += 1.0;
    }
    acc.value()
}

/// `θ(x) = 1 + 2ψ(x)`.
pub fn theta_full(x: f64) -> Result<f64> {
    theta_psi(x).map(|p| 1.0 + 2.0 * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functional_equation() {
        let r = theta_full(2.0).unwrap() / theta_full(0.5).unwrap();
        assert!((r - 0.5f64.sqrt()).abs() < 1e-12);
        for x in [0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0] {
            let lhs = theta_full(x).unwrap();
            let rhs = theta_full(1.0 / x).unwrap() / x.sqrt();
            assert!((lhs - rhs).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn leading_term() {
        for x in [5.0, 10.0] {
            let rest = theta_psi(x).unwrap() - (-PI * x).exp();
            assert!(rest.abs() < (-3.0 * PI * x).exp());
        }
    }

    #[test]
    fn value_at_one() {
        assert!((theta_psi(1.0).unwrap() - 0.043_217_405_606_654_007).abs() < 1e-15);
        assert!(theta_psi(0.0).is_err());
    }
}

//! `∫_0^∞ x^{s-1} h(x) dx` for operator outputs `h` that are only cheap to
//! evaluate away from the origin.
//!
//! The range splits into three parts:
//! * `[0, δ]`: `h` is fitted by `Σ c_i x^{e_i}` from samples at `δ, δ/2, …`
//!   and integrated exactly; the misfit at `δ/8` bounds the error;
//! * `[δ, X]`: adaptive quadrature in `log x`;
//! * `[X, ∞)`: `h` equals its compensating terms `Σ c x^{-p} log^j x` up to a
//!   negligible operator sum, integrated exactly.

use super::Side;
use crate::error::{Error, Result};
use crate::quad::{integrate_pieces, Tol};
use num_complex::Complex64;
use std::cell::RefCell;

/// `coef · x^{-power} · (log x)^log_power`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct FarTerm {
    pub coef: f64,
    pub power: f64,
    pub log_power: u32,
}

pub(crate) struct MellinForm<'a> {
    pub h: &'a dyn Fn(f64) -> Result<f64>,
    pub near_exponents: &'a [f64],
    pub delta: f64,
    pub far: &'a [FarTerm],
    pub x_far: f64,
    /// Bound on `|h − Σ far|` for `x ≥ x_far`.
    pub far_residual: f64,
}

fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap_or(col);
        a.swap(col, piv);
        b.swap(col, piv);
        if a[col][col].abs() < 1e-300 {
            return Err(Error::Quadrature("singular near-origin fit".into()));
        }
        for row in col + 1..n {
            let m = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= m * a[col][k];
            }
            b[row] -= m * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Ok(x)
}

/// `∫_X^∞ x^{s-1} x^{-p} log^j x dx` for `Re(p - s) > 0`.
fn far_integral(t: FarTerm, s: Complex64, x: f64) -> Complex64 {
    let a = t.power - s;
    let l = x.ln();
    let j = t.log_power;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut falling = 1.0;
    for i in 0..=j {
        if i > 0 {
            falling *= (j - i + 1) as f64;
        }
        acc += falling * l.powi((j - i) as i32) / a.powi(i as i32 + 1);
    }
    t.coef * (-a * l).exp() * acc
}

impl MellinForm<'_> {
    pub fn eval(&self, s: Complex64) -> Result<Side> {
        let m = self.near_exponents.len();
        let nodes: Vec<f64> = (0..m).map(|i| self.delta / 2f64.powi(i as i32)).collect();
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for &x in &nodes {
            rows.push(self.near_exponents.iter().map(|&e| x.powf(e)).collect());
            rhs.push((self.h)(x)?);
        }
        let coef = solve(rows, rhs)?;
        let model = |x: f64| -> f64 { coef.iter().zip(self.near_exponents).map(|(c, &e)| c * x.powf(e)).sum() };
        let probe = self.delta / 2f64.powi(m as i32 + 1);
        let misfit = ((self.h)(probe)? - model(probe)).abs();
        let mut head = Complex64::new(0.0, 0.0);
        for (c, &e) in coef.iter().zip(self.near_exponents) {
            let a = s + e;
            if a.re <= 0.0 {
                return Err(Error::Hypothesis(format!("Re s = {} outside the strip of the near-origin model", s.re)));
            }
            head += *c * (a * self.delta.ln()).exp() / a;
        }
        let head_bound = 10.0 * misfit * self.delta.powf(s.re) / s.re.max(1e-3);

        let failure = RefCell::new(None);
        let g = |v: f64| -> Complex64 {
            let x = v.exp();
            match (self.h)(x) {
                Ok(val) => val * (s * v).exp(),
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        };
        let (lo, hi) = (self.delta.ln(), self.x_far.ln());
        let pieces = ((hi - lo).ceil() as usize).max(1);
        let points: Vec<f64> = (0..=pieces).map(|i| lo + (hi - lo) * i as f64 / pieces as f64).collect();
        let mid = integrate_pieces(g, &points, Tol::new(1e-11, 1e-11))?;
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }

        let mut far = Complex64::new(0.0, 0.0);
        for &t in self.far {
            if t.power - s.re <= 0.0 {
                return Err(Error::Hypothesis(format!("Re s = {} outside the strip of the far model", s.re)));
            }
            far += far_integral(t, s, self.x_far);
        }
        let far_bound = self.far_residual * self.x_far.powf(s.re) / s.re.max(1e-3);
        Ok(Side::complex(head + mid.value + far, head_bound + mid.error + far_bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{gamma_complex, zeta};

    #[test]
    fn fitted_head_recovers_zeta_transform() {
        // h(x) = 1/(e^x - 1) - 1/x has Mellin transform Γ(s)ζ(s) on 0 < σ < 1.
        let h = |x: f64| -> Result<f64> { Ok(1.0 / x.exp_m1() - 1.0 / x) };
        let far = [FarTerm { coef: -1.0, power: 1.0, log_power: 0 }];
        let form = MellinForm { h: &h, near_exponents: &[0.0, 1.0, 3.0], delta: 0.05, far: &far, x_far: 60.0, far_residual: 1e-25 };
        for s in [Complex64::new(0.5, 3.0), Complex64::new(0.7, 0.0)] {
            let got = form.eval(s).unwrap();
            let want = gamma_complex(s).unwrap() * zeta(s).unwrap();
            assert!((got.value - want).norm() < 1e-9, "{s}: {} vs {want}", got.value);
            assert!(got.bound < 1e-8);
        }
    }

    #[test]
    fn far_integral_with_logs() {
        // ∫_1^∞ x^{s-1} x^{-2} log x dx = 1/(2-s)^2
        let t = FarTerm { coef: 1.0, power: 2.0, log_power: 1 };
        let s = Complex64::new(0.5, 1.0);
        let got = far_integral(t, s, 1.0);
        assert!((got - (2.0 - s).powi(-2)).norm() < 1e-15);
    }
}

//! Dirichlet series of arithmetic weights against their zeta-ratio closed
//! forms, with an Abel-summation tail.
//!
//! For `S(t) = Σ_{n≤t} w(n)` with main term `M(t)` (the residues of
//! `F(u) t^u / u`) and remainder `R = S − M`,
//!
//! `Σ_{n>N} w(n) n^{-s} = Res[F(u) N^{u-s}/(s-u)] − R(N) N^{-s} + s ∫_N^∞ R(t) t^{-s-1} dt`.
//!
//! The last integral is bounded by `|s| C N^{θ-σ}/(σ-θ)` where
//! `C = 2 max_{N/2≤t≤N} |R(t)|/t^θ` is measured on the sieved range.

use super::{Ctx, Point, Side};
use crate::error::{Error, Result};
use crate::operators::{shared_table, Weight};
use crate::special::zeta;
use crate::sum::Compensated;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Terms of every partial sum.
pub const TERMS: usize = 1_000_000;

const CIRCLE_RADIUS: f64 = 0.3;
const CIRCLE_POINTS: usize = 128;

type Series = fn(Complex64, u32) -> Result<Complex64>;

pub(crate) struct DirichletSpec {
    pub weight: Weight,
    pub series: Series,
    pub k: u32,
    /// Poles of the series to the right of `θ`.
    pub poles: &'static [f64],
    /// Exponent of the remainder bound `|R(t)| <= C t^θ`.
    pub theta: f64,
    /// Abscissa of absolute convergence.
    pub abscissa: f64,
}

/// `(1/2πi) ∮ g` on a circle around `c`, trapezoid rule.
pub(crate) fn circle_residue(g: impl Fn(Complex64) -> Result<Complex64>, c: f64, radius: f64, points: usize) -> Result<Complex64> {
    let mut acc = Compensated::new();
    for j in 0..points {
        let w = Complex64::from_polar(radius, 2.0 * PI * (j as f64 + 0.5) / points as f64);
        acc.add(g(c + w)? * w);
    }
    Ok(acc.value() / points as f64)
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `M(t) = Σ_p t^p Σ_j a_{p,j} (log t)^j`.
struct MainTerm {
    parts: Vec<(f64, Vec<f64>)>,
}

impl MainTerm {
    fn new(spec: &DirichletSpec) -> Result<Self> {
        let mut parts = Vec::new();
        for &p in spec.poles {
            let order = 8;
            let mut coeffs = Vec::with_capacity(order);
            let mut fact = 1.0;
            for j in 0..order {
                if j > 0 {
                    fact *= j as f64;
                }
                let r = circle_residue(|u| Ok((spec.series)(u, spec.k)? * (u - p).powi(j as i32) / u), p, CIRCLE_RADIUS, CIRCLE_POINTS)?;
                coeffs.push(r.re / fact);
            }
            while coeffs.last().is_some_and(|a| a.abs() < 1e-13) {
                coeffs.pop();
            }
            parts.push((p, coeffs));
        }
        Ok(Self { parts })
    }

    fn eval(&self, t: f64) -> f64 {
        let l = t.ln();
        self.parts
            .iter()
            .map(|(p, a)| t.powf(*p) * a.iter().rev().fold(0.0, |acc, &c| acc * l + c))
            .sum()
    }
}

/// Partial sum with Abel tail; returns the corrected value and its bound.
pub(crate) fn dirichlet_lhs(spec: &DirichletSpec, s: Complex64, n: usize) -> Result<Side> {
    if s.re <= spec.abscissa {
        return Err(Error::Hypothesis(format!("Re s = {} not above the abscissa {}", s.re, spec.abscissa)));
    }
    if s.re <= spec.theta {
        return Err(Error::Hypothesis(format!("Re s = {} too close to the remainder exponent {}", s.re, spec.theta)));
    }
    let table = shared_table(n + 1)?;
    let main = MainTerm::new(spec)?;
    let mut partial = Compensated::new();
    let mut summatory = Compensated::new();
    let mut worst: f64 = 0.0;
    for m in 1..=n {
        let w = spec.weight.value(&table, m);
        summatory.add(w);
        if w != 0.0 {
            partial.add(w * (-s * (m as f64).ln()).exp());
        }
        if 2 * m >= n {
            let sv = summatory.value();
            let t = m as f64;
            let r = (sv - main.eval(t)).abs().max((sv - main.eval(t + 1.0)).abs());
            worst = worst.max(r / t.powf(spec.theta));
        }
    }
    let big_n = n as f64;
    let remainder = summatory.value() - main.eval(big_n);
    let mut tail = Complex64::new(0.0, 0.0);
    for &p in spec.poles {
        tail += circle_residue(
            |u| Ok((spec.series)(u, spec.k)? * (-(s - u) * big_n.ln()).exp() / (s - u)),
            p,
            CIRCLE_RADIUS,
            CIRCLE_POINTS,
        )?;
    }
    tail -= remainder * (-s * big_n.ln()).exp();
    let bound = s.norm() * 2.0 * worst * big_n.powf(spec.theta - s.re) / (s.re - spec.theta);
    Ok(Side::complex(partial.value() + tail, bound))
}

fn z(s: Complex64) -> Result<Complex64> {
    zeta(s)
}

fn two_omega(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(s)?.powi(2) / z(2.0 * s)?)
}

fn divisor(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(s)?.powi(2))
}

fn divisor_k(s: Complex64, k: u32) -> Result<Complex64> {
    Ok(z(s)?.powi(k as i32))
}

fn mobius(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(s)?.inv())
}

fn squarefree(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(s)? / z(2.0 * s)?)
}

fn liouville(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(2.0 * s)? / z(s)?)
}

fn divisor_of_square(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(s)?.powi(3) / z(2.0 * s)?)
}

fn divisor_squared(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(s)?.powi(4) / z(2.0 * s)?)
}

fn totient(s: Complex64, _: u32) -> Result<Complex64> {
    Ok(z(s - 1.0)? / z(s)?)
}

fn odd_part(s: Complex64, _: u32) -> Result<Complex64> {
    let two = c(2.0);
    Ok((1.0 - two.powc(1.0 - s)) / (1.0 - two.powc(-s)) * z(s - 1.0)?)
}

pub(crate) fn spec_for(id: &str, k: u32) -> Option<DirichletSpec> {
    let d = |weight, series, poles, theta, abscissa| DirichletSpec { weight, series, k, poles, theta, abscissa };
    Some(match id {
        "ramanujan-1.7" => d(Weight::TwoOmega, two_omega as Series, &[1.0][..], 0.5, 1.0),
        "ramanujan-1.8" => d(Weight::Divisor(2), divisor, &[1.0], 0.5, 1.0),
        "ramanujan-1.9" => d(Weight::Divisor(k), divisor_k, &[1.0], 0.75, 1.0),
        "ramanujan-1.10" => d(Weight::Mobius, mobius, &[], 0.5, 1.0),
        "ramanujan-1.11" => d(Weight::SquareFree, squarefree, &[1.0], 0.5, 1.0),
        "ramanujan-1.12" => d(Weight::Liouville, liouville, &[0.5], 0.5, 1.0),
        "ramanujan-1.13" => d(Weight::DivisorOfSquare, divisor_of_square, &[1.0], 0.75, 1.0),
        "ramanujan-1.14" => d(Weight::DivisorSquared, divisor_squared, &[1.0], 0.75, 1.0),
        "ramanujan-1.15" => d(Weight::Totient, totient, &[2.0], 1.25, 2.0),
        "ramanujan-1.16" => d(Weight::OddPart, odd_part, &[2.0], 1.25, 2.0),
        _ => return None,
    })
}

fn spec_at(id: &str, p: &Point) -> Result<DirichletSpec> {
    let k = p.k.unwrap_or(3);
    if k < 2 {
        return Err(Error::Hypothesis(format!("d_k needs k >= 2, got {k}")));
    }
    spec_for(id, k).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub(crate) fn lhs_for(id: &str, p: &Point) -> Result<Side> {
    dirichlet_lhs(&spec_at(id, p)?, p.need_s()?, TERMS)
}

pub(crate) fn rhs_for(id: &str, p: &Point) -> Result<Side> {
    let spec = spec_at(id, p)?;
    Ok(Side::complex((spec.series)(p.need_s()?, spec.k)?, 0.0))
}

macro_rules! ramanujan_sides {
    ($($lhs:ident, $rhs:ident => $id:literal;)*) => {
        $(
            pub(crate) fn $lhs(p: &Point, _: &Ctx) -> Result<Side> {
                lhs_for($id, p)
            }
            pub(crate) fn $rhs(p: &Point, _: &Ctx) -> Result<Side> {
                rhs_for($id, p)
            }
        )*
    };
}

ramanujan_sides! {
    lhs_1_7, rhs_1_7 => "ramanujan-1.7";
    lhs_1_8, rhs_1_8 => "ramanujan-1.8";
    lhs_1_9, rhs_1_9 => "ramanujan-1.9";
    lhs_1_10, rhs_1_10 => "ramanujan-1.10";
    lhs_1_11, rhs_1_11 => "ramanujan-1.11";
    lhs_1_12, rhs_1_12 => "ramanujan-1.12";
    lhs_1_13, rhs_1_13 => "ramanujan-1.13";
    lhs_1_14, rhs_1_14 => "ramanujan-1.14";
    lhs_1_15, rhs_1_15 => "ramanujan-1.15";
    lhs_1_16, rhs_1_16 => "ramanujan-1.16";
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_main_term_is_t_log_t() {
        let spec = spec_for("ramanujan-1.8", 2).unwrap();
        let m = MainTerm::new(&spec).unwrap();
        let g = crate::special::euler_gamma();
        let t: f64 = 1000.0;
        let want = t * (t.ln() + 2.0 * g - 1.0);
        assert!((m.eval(t) - want).abs() < 1e-9 * want);
    }

    #[test]
    fn mobius_at_two() {
        let spec = spec_for("ramanujan-1.10", 2).unwrap();
        let side = dirichlet_lhs(&spec, c(2.0), 100_000).unwrap();
        assert!((side.value.re - 6.0 / (PI * PI)).abs() <= side.bound + 1e-14);
        assert!(side.bound < 1e-6);
    }
}

//! Test functions of Müntz class with closed-form Mellin and Fourier cosine
//! transforms.

use crate::error::{Error, Result};
use crate::special::gamma::gamma_unchecked;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type ComplexFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    /// `Σ c_j x^j e^{-λx}`
    PolyExp { coeffs: Vec<f64>, rate: f64 },
    /// `e^{-c x²}`
    Gaussian { c: f64 },
    /// `(1 + x²)^{-p}`
    Rational { p: f64 },
    Custom { eval: RealFn, deriv: Option<RealFn>, mellin: Option<ComplexFn> },
}

/// A function on `[0, ∞)` with decay `|f(x)| = O(x^{-α})`.
#[derive(Clone)]
pub struct TestFunction {
    name: String,
    kind: Kind,
    alpha: f64,
    small_x_exponent: f64,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("alpha", &self.alpha)
            .field("small_x_exponent", &self.small_x_exponent)
            .finish()
    }
}

fn rising(s: Complex64, j: usize) -> Complex64 {
    (0..j).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (s + i as f64))
}

impl TestFunction {
    /// `Σ c_j x^j e^{-rate x}`.
    pub fn poly_exp(name: impl Into<String>, coeffs: Vec<f64>, rate: f64) -> Self {
        let beta = coeffs.iter().position(|&c| c != 0.0).unwrap_or(0) as f64;
        Self { name: name.into(), kind: Kind::PolyExp { coeffs, rate }, alpha: f64::INFINITY, small_x_exponent: beta }
    }

    pub fn exp() -> Self {
        Self::poly_exp("exp", vec![1.0], 1.0)
    }

    pub fn x_exp() -> Self {
        Self::poly_exp("xexp", vec![0.0, 1.0], 1.0)
    }

    pub fn x2_exp() -> Self {
        Self::poly_exp("x2exp", vec![0.0, 0.0, 1.0], 1.0)
    }

    /// `e^{-πx}`.
    pub fn exp_pi() -> Self {
        Self::poly_exp("exp-pi", vec![1.0], PI)
    }

    /// `e^{-c x²}`.
    pub fn gaussian(c: f64) -> Self {
        let name = if c == 0.5 { "gauss".to_string() } else if c == PI { "gauss-pi".to_string() } else { format!("gauss:{c}") };
        Self { name, kind: Kind::Gaussian { c }, alpha: f64::INFINITY, small_x_exponent: 0.0 }
    }

    /// `(1 + x²)^{-p}`.
    pub fn rational(p: f64) -> Self {
        Self { name: format!("rational{p}"), kind: Kind::Rational { p }, alpha: 2.0 * p, small_x_exponent: 0.0 }
    }

    /// `(x² - 4x + 2) e^{-x}`, whose Mellin transform `Γ(s)(s-1)(s-2)`
    /// vanishes at `s = 1` and `s = 2`.
    pub fn double_null() -> Self {
        Self::poly_exp("double-null", vec![2.0, -4.0, 1.0], 1.0)
    }

    /// `q_k(x) e^{-x}` with Mellin transform `Γ(s)(s-1)^k`.
    pub fn vanishing(k: usize) -> Self {
        // q_0 = 1, q_{m+1} = -(q_m + x q_m' - x q_m)
        let mut q = vec![1.0];
        for _ in 0..k {
            let mut next = vec![0.0; q.len() + 1];
            for (j, &c) in q.iter().enumerate() {
                next[j] -= c * (1.0 + j as f64);
                next[j + 1] += c;
            }
            q = next;
        }
        Self::poly_exp(format!("vanish:{k}"), q, 1.0)
    }

    /// A user-supplied function; `alpha` is the declared decay exponent.
    pub fn custom(
        name: impl Into<String>,
        alpha: f64,
        small_x_exponent: f64,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            kind: Kind::Custom { eval: Arc::new(eval), deriv: None, mellin: None },
            alpha,
            small_x_exponent,
        }
    }

    pub fn with_mellin(mut self, m: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static) -> Self {
        if let Kind::Custom { mellin, .. } = &mut self.kind {
            *mellin = Some(Arc::new(m));
        }
        self
    }

    pub fn with_derivative(mut self, d: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        if let Kind::Custom { deriv, .. } = &mut self.kind {
            *deriv = Some(Arc::new(d));
        }
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Exponent `β` with `f(x) = O(x^β)` as `x → 0`.
    pub fn small_x_exponent(&self) -> f64 {
        self.small_x_exponent
    }

    /// Open strip `(lo, hi)` where the Mellin integral converges.
    pub fn strip(&self) -> (f64, f64) {
        (-self.small_x_exponent, self.alpha)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::PolyExp { coeffs, rate } => {
                let e = (-rate * x).exp();
                if e == 0.0 {
                    return 0.0;
                }
                coeffs.iter().rev().fold(0.0, |a, &c| a * x + c) * e
            }
            Kind::Gaussian { c } => (-c * x * x).exp(),
            Kind::Rational { p } => (1.0 + x * x).powf(-p),
            Kind::Custom { eval, .. } => eval(x),
        }
    }

    pub fn value_at_zero(&self) -> f64 {
        self.eval(0.0)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::PolyExp { coeffs, rate } => {
                let p = coeffs.iter().rev().fold(0.0, |a, &c| a * x + c);
                let dp = coeffs.iter().enumerate().skip(1).rev().fold(0.0, |a, (j, &c)| a * x + j as f64 * c);
                (dp - rate * p) * (-rate * x).exp()
            }
            Kind::Gaussian { c } => -2.0 * c * x * (-c * x * x).exp(),
            Kind::Rational { p } => -2.0 * p * x * (1.0 + x * x).powf(-p - 1.0),
            Kind::Custom { deriv: Some(d), .. } => d(x),
            Kind::Custom { eval, .. } => {
                let h = 1e-5 * x.abs().max(1e-3);
                (eval(x + h) - eval(x - h)) / (2.0 * h)
            }
        }
    }

    /// Closed-form Mellin transform, when one is known.
    pub fn mellin_closed_form(&self, s: Complex64) -> Option<Complex64> {
        match &self.kind {
            Kind::PolyExp { coeffs, rate } => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, &c) in coeffs.iter().enumerate() {
                    if c != 0.0 {
                        acc += rising(s, j) * (c * rate.powi(-(j as i32)));
                    }
                }
                Some(acc * gamma_unchecked(s) * (-s * rate.ln()).exp())
            }
            Kind::Gaussian { c } => Some(gamma_unchecked(s * 0.5) * (-s * 0.5 * c.ln()).exp() * 0.5),
            Kind::Rational { p } => {
                let half = s * 0.5;
                Some(gamma_unchecked(half) * gamma_unchecked(*p - half) / (2.0 * gamma_unchecked(Complex64::new(*p, 0.0))))
            }
            Kind::Custom { mellin, .. } => mellin.as_ref().map(|m| m(s)),
        }
    }

    /// Closed-form `√(2/π) ∫_0^∞ f(t) cos(xt) dt`, when one is known.
    pub fn fourier_cosine_closed_form(&self, x: f64) -> Option<f64> {
        let norm = (2.0 / PI).sqrt();
        match &self.kind {
            Kind::PolyExp { coeffs, rate } => {
                // ∫ t^j e^{-λt} cos(xt) dt = Re j! / (λ - ix)^{j+1}
                let z = Complex64::new(*rate, -x).inv();
                let mut acc = 0.0;
                let mut pow = z;
                let mut fact = 1.0;
                for (j, &c) in coeffs.iter().enumerate() {
                    if j > 0 {
                        fact *= j as f64;
                        pow *= z;
                    }
                    acc += c * fact * pow.re;
                }
                Some(norm * acc)
            }
            Kind::Gaussian { c } => Some((-x * x / (4.0 * c)).exp() / (2.0 * c).sqrt()),
            Kind::Rational { p } if *p == 2.0 => Some(norm * PI * (1.0 + x) * (-x).exp() / 4.0),
            Kind::Rational { p } if *p == 1.0 => Some(norm * 0.5 * PI * (-x).exp()),
            _ => None,
        }
    }

    /// Whether `∫_0^∞ f = 0`.
    pub fn vanishing_first_moment(&self) -> bool {
        self.mellin_closed_form(Complex64::new(1.0, 0.0)).is_some_and(|m| m.norm() < 1e-14)
    }

    /// Sampled check that `|f(x)| x^α` stays bounded on `[1, 10^4]`.
    pub fn check_decay(&self) -> Result<()> {
        if self.alpha.is_infinite() {
            return Ok(());
        }
        let mut early: f64 = 0.0;
        let mut late: f64 = 0.0;
        for i in 0..=80 {
            let x = 10f64.powf(i as f64 / 20.0);
            let v = self.eval(x).abs() * x.powf(self.alpha);
            if i <= 20 {
                early = early.max(v);
            } else if i >= 60 {
                late = late.max(v);
            }
        }
        if late > 10.0 * early.max(1.0) || !late.is_finite() {
            return Err(Error::Hypothesis(format!("{} does not decay like x^-{}", self.name, self.alpha)));
        }
        Ok(())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exp" => Self::exp(),
            "xexp" => Self::x_exp(),
            "x2exp" => Self::x2_exp(),
            "exp-pi" => Self::exp_pi(),
            "gauss" => Self::gaussian(0.5),
            "gauss-pi" => Self::gaussian(PI),
            "rational1.5" => Self::rational(1.5),
            "rational2" => Self::rational(2.0),
            "double-null" => Self::double_null(),
            _ => match s.strip_prefix("vanish:").map(str::parse::<usize>) {
                Some(Ok(k)) if k <= 12 => Self::vanishing(k),
                _ => return Err(Error::Config(format!("unknown test function '{s}'"))),
            },
        })
    }
}

/// Names accepted by [`TestFunction::from_str`], excluding the `vanish:K` family.
pub const BUILTIN_NAMES: [&str; 9] =
    ["exp", "xexp", "x2exp", "exp-pi", "gauss", "gauss-pi", "rational1.5", "rational2", "double-null"];

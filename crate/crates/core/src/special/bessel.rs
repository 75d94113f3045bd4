//! Bessel functions `J0`, `Y0` and `K0` for positive real arguments.
//!
//! Power series below `x = 3`. Above it `K0` uses the trapezoid rule on
//! `∫_0^∞ exp(-x cosh t) dt`, and `Y0` the Neumann series over `J_{2k}` from
//! Miller's backward recurrence, switching to the Hankel expansion at
//! `x = 20`.

use super::bernoulli::euler_gamma;
use crate::error::{Error, Result};
use crate::sum::Compensated;
use std::f64::consts::{FRAC_PI_4, PI};

pub const SERIES_LIMIT: f64 = 3.0;
pub const HANKEL_LIMIT: f64 = 20.0;

fn positive(x: f64, name: &str) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("{name} needs finite x > 0, got {x}")))
    }
}

pub fn bessel_j0(x: f64) -> Result<f64> {
    positive(x, "J0")?;
    Ok(if x <= SERIES_LIMIT {
        j0_series(x)
    } else if x <= HANKEL_LIMIT {
        miller_even(x).0
    } else {
        hankel0(x).0
    })
}

pub fn bessel_y0(x: f64) -> Result<f64> {
    positive(x, "Y0")?;
    Ok(if x <= SERIES_LIMIT {
        y0_series(x)
    } else if x <= HANKEL_LIMIT {
        y0_neumann(x)
    } else {
        hankel0(x).1
    })
}

pub fn bessel_k0(x: f64) -> Result<f64> {
    positive(x, "K0")?;
    Ok(if x <= SERIES_LIMIT { k0_series(x) } else { k0_integral(x) })
}

/// `J0` power series.
pub fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut acc = Compensated::new();
    acc.add(term);
    for k in 1..200 {
        let kf = k as f64;
        term *= -q / (kf * kf);
        acc.add(term);
        if term.abs() < 1e-18 {
            break;
        }
    }
    acc.value()
}

/// `Y0` power series.
pub fn y0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut acc = Compensated::new();
    for k in 1..200 {
        let kf = k as f64;
        term *= -q / (kf * kf);
        harmonic += 1.0 / kf;
        acc.add(-term * harmonic);
        if term.abs() * harmonic < 1e-18 {
            break;
        }
    }
    2.0 / PI * (((0.5 * x).ln() + euler_gamma()) * j0_series(x) + acc.value())
}

/// `K0` power series.
pub fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut i0 = Compensated::new();
    let mut rest = Compensated::new();
    i0.add(1.0);
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0.add(term);
        rest.add(term * harmonic);
        if term * harmonic < 1e-18 * i0.value() {
            break;
        }
    }
    -((0.5 * x).ln() + euler_gamma()) * i0.value() + rest.value()
}

/// `K0(x) = ∫_0^∞ exp(-x cosh t) dt` by the trapezoid rule, which converges
/// geometrically for this analytic, double-exponentially decaying integrand.
pub fn k0_integral(x: f64) -> f64 {
    let h = 0.05;
    let t_max = (745.0 / x).max(1.0).acosh();
    let mut acc = Compensated::new();
    acc.add(0.5 * (-x).exp());
    let mut k = 1.0;
    while k * h <= t_max {
        acc.add((-x * (k * h).cosh()).exp());
        k += 1.0;
    }
    h * acc.value()
}

/// Large-argument expansion of `K0`.
pub fn k0_asymptotic(x: f64) -> f64 {
    let mut term = 1.0;
    let mut acc = Compensated::new();
    acc.add(term);
    for k in 1..60 {
        let odd = (2 * k - 1) as f64;
        let next = term * (-odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() >= term.abs() {
            break;
        }
        term = next;
        acc.add(term);
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() * acc.value()
}

/// `(J0, J2, J4, ...)` by Miller's backward recurrence, normalized with
/// `J0 + 2 Σ J_{2k} = 1`. Returns `J0` and the Neumann sum `Σ (-1)^k J_{2k}/k`.
fn miller_even(x: f64) -> (f64, f64) {
    let start = 2 * ((x + 40.0 + 12.0 * x.sqrt()) as usize / 2);
    let mut j_next = 0.0;
    let mut j_cur = 1e-300;
    let mut norm = 0.0;
    let mut neumann = 0.0;
    let mut j0 = 0.0;
    let mut n = start;
    while n > 0 {
        // J_{n-1} = (2n/x) J_n - J_{n+1}
        let j_prev = 2.0 * n as f64 / x * j_cur - j_next;
        j_next = j_cur;
        j_cur = j_prev;
        n -= 1;
        if n == 0 {
            j0 = j_cur;
            norm += j_cur;
        } else if n % 2 == 0 {
            norm += 2.0 * j_cur;
            let k = n / 2;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            neumann += sign * j_cur / k as f64;
        }
        if j_cur.abs() > 1e250 {
            j_cur *= 1e-250;
            j_next *= 1e-250;
            norm *= 1e-250;
            neumann *= 1e-250;
            j0 *= 1e-250;
        }
    }
    (j0 / norm, neumann / norm)
}

/// `Y0 = (2/π)(log(x/2) + γ) J0 - (4/π) Σ (-1)^k J_{2k} / k`.
pub fn y0_neumann(x: f64) -> f64 {
    let (j0, neumann) = miller_even(x);
    2.0 / PI * ((0.5 * x).ln() + euler_gamma()) * j0 - 4.0 / PI * neumann
}

/// Hankel expansion; returns `(J0, Y0)`.
pub fn hankel0(x: f64) -> (f64, f64) {
    let mut p = Compensated::new();
    let mut q = Compensated::new();
    let mut term = 1.0;
    p.add(term);
    for k in 1..80 {
        let odd = (2 * k - 1) as f64;
        let next = term * (-odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() >= term.abs() || next.abs() < 1e-20 {
            break;
        }
        term = next;
        // a_k / x^k alternates between the even (P) and odd (Q) series
        match k % 4 {
            0 => p.add(term),
            1 => q.add(term),
            2 => p.add(-term),
            _ => q.add(-term),
        }
    }
    let chi = x - FRAC_PI_4;
    let amp = (2.0 / (PI * x)).sqrt();
    let (pv, qv) = (p.value(), q.value());
    (amp * (pv * chi.cos() - qv * chi.sin()), amp * (pv * chi.sin() + qv * chi.cos()))
}

#[cfg(test)]
mod tests {
    use super::*;

    // (x, J0, Y0, K0) at 18 digits
    const TABLE: [(f64, f64, f64, f64); 11] = [
        (0.5, 0.938469807240812904, -0.444518733506706557, 0.924419071227665862),
        (1.0, 0.765197686557966551, 0.088256964215676958, 0.421024438240708333),
        (2.5, -0.0483837764681979963, 0.498070359615231888, 0.062347553200366186),
        (3.0, -0.260051954901933438, 0.376850010012790382, 0.0347395043862792481),
        (3.5, -0.380127739987263377, 0.189021943920826507, 0.0195988971703684891),
        (7.0, 0.300079270519555597, -0.0259497439672092649, 0.000424795741869231807),
        (12.3, 0.11079795030758544, -0.198593094635026208, 1.61078497688868546e-6),
        (19.9, 0.172877756392618462, 0.0457620941593854787, 6.36078094964231329e-10),
        (20.0, 0.167024664340583155, 0.0626405968093838312, 5.74123781533652429e-10),
        (35.0, -0.12684568275631257, 0.0457979871951556411, 1.33103514914294685e-16),
        (50.0, 0.055812327669251815, -0.098064995470077079, 3.41016774978949551e-23),
    ];

    #[test]
    fn reference_values() {
        for (x, j, y, k) in TABLE {
            assert!((bessel_j0(x).unwrap() - j).abs() < 1e-13, "J0({x})");
            assert!((bessel_y0(x).unwrap() - y).abs() < 1e-13, "Y0({x})");
            assert!((bessel_k0(x).unwrap() - k).abs() < 1e-13, "K0({x})");
        }
    }

    #[test]
    fn branches_agree_at_crossovers() {
        for x in [2.5, 3.0, 3.5] {
            assert!((k0_series(x) - k0_integral(x)).abs() < 1e-13, "K0 {x}");
            assert!((y0_series(x) - y0_neumann(x)).abs() < 1e-13, "Y0 {x}");
        }
        for x in [18.0, 20.0, 25.0] {
            assert!((y0_neumann(x) - hankel0(x).1).abs() < 1e-13, "Y0 {x}");
            assert!((k0_integral(x) - k0_asymptotic(x)).abs() < 1e-13 * k0_integral(x), "K0 {x}");
        }
    }

    #[test]
    fn rejects_non_positive() {
        assert!(bessel_k0(0.0).is_err());
        assert!(bessel_y0(-1.0).is_err());
    }

    #[test]
    fn k0_decreasing() {
        let xs: Vec<f64> = (1..200).map(|i| 0.05 * i as f64).collect();
        for w in xs.windows(2) {
            let (a, b) = (bessel_k0(w[0]).unwrap(), bessel_k0(w[1]).unwrap());
            assert!(a > b && b > 0.0);
        }
    }
}

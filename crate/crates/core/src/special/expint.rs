//! Exponential integrals `E1` and `Ei` for positive real arguments.

use super::bernoulli::euler_gamma;
use crate::sum::Compensated;

/// `E1(z) = ∫_z^∞ e^{-t}/t dt`, `z > 0`.
pub fn e1(z: f64) -> f64 {
    if z <= 1.0 {
        let mut acc = Compensated::new();
        acc.add(-euler_gamma() - z.ln());
        let mut term = 1.0;
        for k in 1..100 {
            term *= -z / k as f64;
            acc.add(-term / k as f64);
            if term.abs() < 1e-18 {
                break;
            }
        }
        return acc.value();
    }
    // continued fraction e^{-z} / (z + 1/(1 + 1/(z + 2/(1 + 2/(z + ...))))), modified Lentz
    let tiny = 1e-300;
    let mut b = z + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-z).exp()
}

/// `Ei(z) = -PV ∫_{-z}^∞ e^{-t}/t dt`, `z > 0`.
pub fn ei(z: f64) -> f64 {
    if z < 40.0 {
        let mut acc = Compensated::new();
        acc.add(euler_gamma() + z.ln());
        let mut term = 1.0;
        for k in 1..400 {
            term *= z / k as f64;
            let t = term / k as f64;
            acc.add(t);
            if t < 1e-18 * acc.value().abs() {
                break;
            }
        }
        return acc.value();
    }
    let mut acc = Compensated::new();
    let mut term = 1.0;
    acc.add(term);
    for k in 1..200 {
        let next = term * k as f64 / z;
        if next >= term {
            break;
        }
        term = next;
        acc.add(term);
        if term < 1e-18 {
            break;
        }
    }
    z.exp() / z * acc.value()
}

//! Even Bernoulli numbers and the Euler constant.

use crate::sum::Compensated;
use std::sync::OnceLock;

const MAX_INDEX: usize = 60;

/// `B_{2k}` for `k = 0..=60`, from the tangent numbers.
///
/// The tangent-number recurrence only adds positive terms, so it is stable in
/// floating point.
pub fn bernoulli_even(k: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let n = MAX_INDEX;
        let mut t = vec![0.0f64; n + 1];
        t[1] = 1.0;
        for j in 2..=n {
            t[j] = (j - 1) as f64 * t[j - 1];
        }
        for k in 2..=n {
            for j in k..=n {
                t[j] = (j - k) as f64 * t[j - 1] + (j - k + 2) as f64 * t[j];
            }
        }
        let mut b = vec![1.0; n + 1];
        for k in 1..=n {
            let four_k = 4f64.powi(k as i32);
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            b[k] = sign * 2.0 * k as f64 * t[k] / (four_k * (four_k - 1.0));
        }
        b
    });
    assert!(k <= MAX_INDEX, "Bernoulli index 2k = {} beyond table", 2 * k);
    table[k]
}

/// Euler's constant from `H_N - log N` with an Euler-Maclaurin correction.
pub fn euler_gamma() -> f64 {
    static GAMMA: OnceLock<f64> = OnceLock::new();
    *GAMMA.get_or_init(|| {
        let n = 20usize;
        let nf = n as f64;
        let mut s: Compensated<f64> = (1..=n).map(|j| 1.0 / j as f64).collect();
        s.add(-nf.ln());
        s.add(-0.5 / nf);
        for k in 1..=12 {
            s.add(bernoulli_even(k) / (2.0 * k as f64 * nf.powi(2 * k as i32)));
        }
        s.value()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_bernoulli_numbers() {
        let exact = [1.0, 1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0];
        for (k, b) in exact.iter().enumerate() {
            assert!((bernoulli_even(k) - b).abs() <= 1e-15 * b.abs(), "k = {k}");
        }
        let b30 = 8615841276005.0 / 14322.0;
        assert!((bernoulli_even(15) - b30).abs() < 1e-14 * b30);
    }

    #[test]
    fn euler_constant() {
        assert!((euler_gamma() - 0.577_215_664_901_532_9).abs() < 2e-16);
    }
}

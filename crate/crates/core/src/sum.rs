//! Compensated summation.

use num_complex::Complex64;
use std::ops::{Add, Sub};

/// Neumaier's variant of Kahan summation. The running compensation term keeps
/// the error of long sums at a few ulps instead of growing with the length.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated<T> {
    sum: T,
    comp: T,
}

pub trait Scalar: Copy + Default + Add<Output = Self> + Sub<Output = Self> {
    fn magnitude(self) -> f64;
}

impl Scalar for f64 {
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

impl<T: Scalar> Compensated<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.magnitude() >= x.magnitude() {
            self.comp = self.comp + ((self.sum - t) + x);
        } else {
            self.comp = self.comp + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.comp
    }
}

impl<T: Scalar> FromIterator<T> for Compensated<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut c = Compensated::new();
        for x in iter {
            c.add(x);
        }
        c
    }
}

/// Compensated sum of an iterator of reals.
pub fn ksum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<Compensated<f64>>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_terms() {
        let v = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(ksum(v), 2.0);
        let naive: f64 = v.iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn harmonic_partial_sum() {
        let n = 1_000_000;
        let s = ksum((1..=n).map(|k| 1.0 / k as f64));
        let reference = (n as f64).ln() + 0.577_215_664_901_532_9 + 0.5 / n as f64
            - 1.0 / (12.0 * (n as f64).powi(2));
        assert!((s - reference).abs() < 1e-14);
    }
}

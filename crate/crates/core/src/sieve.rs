//! Linear sieve and the arithmetic functions derived from it.

use crate::error::{Error, Result};
use std::fmt;
use std::io::Write;
use std::str::FromStr;

pub const DEFAULT_CAP: usize = 10_000_000;

/// Sieved values of μ, λ, φ, ω and the odd part for every `n <= n_max`.
/// Index 0 of every sequence is unused.
#[derive(Debug, Clone)]
pub struct ArithTable {
    n_max: usize,
    spf: Vec<u32>,
    mu: Vec<i8>,
    lambda: Vec<i8>,
    phi: Vec<u32>,
    omega: Vec<u8>,
    odd_part: Vec<u32>,
}

impl ArithTable {
    pub fn new(n_max: usize) -> Result<Self> {
        Self::with_cap(n_max, DEFAULT_CAP)
    }

    pub fn with_cap(n_max: usize, cap: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::OutOfRange("n_max must be at least 1".into()));
        }
        if n_max > cap || n_max > u32::MAX as usize {
            return Err(Error::TableTooLarge { requested: n_max, cap });
        }
        let len = n_max + 1;
        let mut spf = vec![0u32; len];
        let mut mu = vec![0i8; len];
        let mut lambda = vec![0i8; len];
        let mut phi = vec![0u32; len];
        let mut omega = vec![0u8; len];
        let mut odd_part = vec![0u32; len];
        let mut primes: Vec<u32> = Vec::new();
        mu[1] = 1;
        lambda[1] = 1;
        phi[1] = 1;
        odd_part[1] = 1;
        for i in 2..len {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
                mu[i] = -1;
                lambda[i] = -1;
                phi[i] = i as u32 - 1;
                omega[i] = 1;
            }
            for &p in &primes {
                let p_us = p as usize;
                let m = i * p_us;
                if p > spf[i] || m >= len {
                    break;
                }
                spf[m] = p;
                lambda[m] = -lambda[i];
                if p == spf[i] {
                    mu[m] = 0;
                    phi[m] = phi[i] * p;
                    omega[m] = omega[i];
                } else {
                    mu[m] = -mu[i];
                    phi[m] = phi[i] * (p - 1);
                    omega[m] = omega[i] + 1;
                }
            }
            odd_part[i] = if i % 2 == 0 { odd_part[i / 2] } else { i as u32 };
        }
        Ok(Self { n_max, spf, mu, lambda, phi, omega, odd_part })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.n_max {
            Err(Error::OutOfRange(format!("n = {n} outside 1..={}", self.n_max)))
        } else {
            Ok(())
        }
    }

    pub fn mobius(&self, n: usize) -> Result<i8> {
        self.check(n)?;
        Ok(self.mu[n])
    }

    pub fn liouville(&self, n: usize) -> Result<i8> {
        self.check(n)?;
        Ok(self.lambda[n])
    }

    pub fn totient(&self, n: usize) -> Result<u32> {
        self.check(n)?;
        Ok(self.phi[n])
    }

    pub fn omega_distinct(&self, n: usize) -> Result<u8> {
        self.check(n)?;
        Ok(self.omega[n])
    }

    pub fn greatest_odd_divisor(&self, n: usize) -> Result<u32> {
        self.check(n)?;
        Ok(self.odd_part[n])
    }

    pub fn smallest_prime_factor(&self, n: usize) -> Result<u32> {
        self.check(n)?;
        Ok(self.spf[n])
    }

    /// Prime factorization of `n` as (prime, exponent) pairs in increasing order.
    pub fn factorize(&self, n: usize) -> Result<Vec<(u32, u32)>> {
        self.check(n)?;
        Ok(self.factor_unchecked(n))
    }

    fn factor_unchecked(&self, mut n: usize) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n];
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
            n /= p as usize;
        }
        out
    }

    /// Number of ordered `k`-tuples with product `n`.
    pub fn divisor_count_k(&self, n: usize, k: u32) -> Result<u64> {
        self.check(n)?;
        if k < 2 {
            return Err(Error::OutOfRange(format!("d_k needs k >= 2, got {k}")));
        }
        Ok(self.dk_unchecked(n, k))
    }

    pub(crate) fn dk_unchecked(&self, mut n: usize, k: u32) -> u64 {
        let mut prod = 1u64;
        while n > 1 {
            let p = self.spf[n] as usize;
            let mut e = 0u64;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            prod *= binomial(e + k as u64 - 1, k as u64 - 1);
        }
        prod
    }

    pub fn mu_values(&self) -> &[i8] {
        &self.mu
    }
    pub fn lambda_values(&self) -> &[i8] {
        &self.lambda
    }
    pub fn phi_values(&self) -> &[u32] {
        &self.phi
    }
    pub fn omega_values(&self) -> &[u8] {
        &self.omega
    }
    pub fn odd_part_values(&self) -> &[u32] {
        &self.odd_part
    }

    /// Value of `func` at `n`, widened to `i64`.
    pub fn value(&self, func: ArithFn, n: usize) -> Result<i64> {
        self.check(n)?;
        Ok(match func {
            ArithFn::Mu => self.mu[n] as i64,
            ArithFn::Lambda => self.lambda[n] as i64,
            ArithFn::Phi => self.phi[n] as i64,
            ArithFn::Omega => self.omega[n] as i64,
            ArithFn::OddPart => self.odd_part[n] as i64,
            ArithFn::Dk(k) => self.divisor_count_k(n, k)? as i64,
        })
    }

    /// Writes `n,value` rows for `1..=n_max`.
    pub fn write_csv<W: Write>(&self, func: ArithFn, header: bool, mut out: W) -> std::io::Result<()> {
        if header {
            writeln!(out, "n,value")?;
        }
        for n in 1..=self.n_max {
            let v = self.value(func, n).map_err(std::io::Error::other)?;
            writeln!(out, "{n},{v}")?;
        }
        Ok(())
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Arithmetic functions exposed for export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithFn {
    Mu,
    Lambda,
    Phi,
    Dk(u32),
    Omega,
    OddPart,
}

impl FromStr for ArithFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "mu" => Self::Mu,
            "lambda" => Self::Lambda,
            "phi" => Self::Phi,
            "d" => Self::Dk(2),
            "omega" => Self::Omega,
            "a" => Self::OddPart,
            _ => match s.strip_prefix("dk:").map(str::parse::<u32>) {
                Some(Ok(k)) if k >= 2 => Self::Dk(k),
                _ => return Err(Error::Config(format!("unknown arithmetic function '{s}'"))),
            },
        })
    }
}

impl fmt::Display for ArithFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Mu => f.write_str("mu"),
            Self::Lambda => f.write_str("lambda"),
            Self::Phi => f.write_str("phi"),
            Self::Dk(2) => f.write_str("d"),
            Self::Dk(k) => write!(f, "dk:{k}"),
            Self::Omega => f.write_str("omega"),
            Self::OddPart => f.write_str("a"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors(n: usize) -> impl Iterator<Item = usize> {
        (1..=n).filter(move |d| n % d == 0)
    }

    #[test]
    fn small_values() {
        let t = ArithTable::new(100).unwrap();
        assert_eq!(t.mobius(1).unwrap(), 1);
        assert_eq!(t.mobius(4).unwrap(), 0);
        assert_eq!(t.mobius(30).unwrap(), -1);
        assert_eq!(t.totient(10).unwrap(), 4);
        assert_eq!(t.liouville(12).unwrap(), -1);
        assert_eq!(t.greatest_odd_divisor(40).unwrap(), 5);
        assert_eq!(t.greatest_odd_divisor(7).unwrap(), 7);
        assert_eq!(t.omega_distinct(1).unwrap(), 0);
        assert_eq!(t.divisor_count_k(1, 5).unwrap(), 1);
        assert_eq!(t.divisor_count_k(12, 2).unwrap(), 6);
        assert_eq!(t.divisor_count_k(4, 3).unwrap(), 6);
    }

    #[test]
    fn single_element_table() {
        let t = ArithTable::new(1).unwrap();
        assert_eq!(t.mobius(1).unwrap(), 1);
        assert_eq!(t.totient(1).unwrap(), 1);
        assert_eq!(t.omega_distinct(1).unwrap(), 0);
        assert!(t.mobius(2).is_err());
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(ArithTable::new(0).is_err());
        assert!(matches!(
            ArithTable::with_cap(1000, 10),
            Err(Error::TableTooLarge { requested: 1000, cap: 10 })
        ));
    }

    #[test]
    fn brute_force_divisor_sums() {
        let t = ArithTable::new(100).unwrap();
        for n in 1..=100 {
            let mu: i32 = divisors(n).map(|d| t.mu[d] as i32).sum();
            assert_eq!(mu, (n == 1) as i32);
            let phi: u32 = divisors(n).map(|d| t.phi[d]).sum();
            assert_eq!(phi as usize, n);
            let sqf: u32 = divisors(n).map(|d| (t.mu[d] as i32).unsigned_abs()).sum();
            assert_eq!(sqf, 1 << t.omega[n]);
        }
    }

    #[test]
    fn dk_matches_convolution_and_tuples() {
        let t = ArithTable::new(200).unwrap();
        for n in 1..=200 {
            for k in 3..=4 {
                let conv: u64 = divisors(n)
                    .map(|d| if k == 3 { t.dk_unchecked(d, 2) } else { t.dk_unchecked(d, 3) })
                    .sum();
                assert_eq!(conv, t.dk_unchecked(n, k));
            }
            let triples = divisors(n).map(|a| divisors(n / a).count() as u64).sum::<u64>();
            assert_eq!(triples, t.dk_unchecked(n, 3));
        }
    }

    #[test]
    fn parses_function_names() {
        for name in ["mu", "lambda", "phi", "d", "dk:3", "omega", "a"] {
            let f: ArithFn = name.parse().unwrap();
            assert_eq!(f.to_string(), name);
        }
        assert!("dk:1".parse::<ArithFn>().is_err());
        assert!("sigma".parse::<ArithFn>().is_err());
    }

    #[test]
    fn csv_rows() {
        let t = ArithTable::new(10).unwrap();
        let mut buf = Vec::new();
        t.write_csv(ArithFn::Mu, false, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows.len(), 10);
        assert_eq!(rows[0], "1,1");
        assert_eq!(rows[1], "2,-1");
        assert_eq!(rows[9], "10,1");
    }
}

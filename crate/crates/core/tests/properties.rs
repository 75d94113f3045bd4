use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;
use std::sync::OnceLock;
use summation_core::cli::commands::{format_complex, parse_complex};
use summation_core::identities::{format_float, glob_match};
use summation_core::mellin::TestFunction;
use summation_core::operators::mobius_transform;
use summation_core::sieve::ArithTable;
use summation_core::special::{gamma_complex, theta_psi, zeta};

const N_MAX: usize = 1_000_000;

fn table() -> &'static ArithTable {
    static T: OnceLock<ArithTable> = OnceLock::new();
    T.get_or_init(|| ArithTable::new(N_MAX).unwrap())
}

fn divisors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divisor_sums(n in 1usize..=N_MAX) {
        let t = table();
        let ds = divisors(n);
        let mu: i64 = ds.iter().map(|&d| t.mobius(d).unwrap() as i64).sum();
        prop_assert_eq!(mu, i64::from(n == 1));
        let phi: u64 = ds.iter().map(|&d| t.totient(d).unwrap() as u64).sum();
        prop_assert_eq!(phi, n as u64);
        let sq: i64 = ds.iter().map(|&d| (t.mobius(d).unwrap() as i64).pow(2)).sum();
        prop_assert_eq!(sq, 1i64 << t.omega_distinct(n).unwrap());
        prop_assert_eq!(t.divisor_count_k(n, 2).unwrap(), ds.len() as u64);
    }

    #[test]
    fn odd_part_and_factorization(n in 1usize..=N_MAX) {
        let t = table();
        let a = t.greatest_odd_divisor(n).unwrap() as usize;
        prop_assert!(a % 2 == 1 && (n / a).is_power_of_two() && n % a == 0);
        let f = t.factorize(n).unwrap();
        let back: usize = f.iter().map(|&(p, e)| (p as usize).pow(e)).product();
        prop_assert_eq!(back, n);
        let squarefree = f.iter().all(|&(_, e)| e == 1);
        prop_assert_eq!(t.mobius(n).unwrap() != 0, squarefree);
    }

    #[test]
    fn liouville_is_completely_multiplicative(m in 1usize..=1000, n in 1usize..=1000) {
        let t = table();
        prop_assert_eq!(t.liouville(m * n).unwrap(), t.liouville(m).unwrap() * t.liouville(n).unwrap());
    }

    #[test]
    fn coprime_multiplicativity(m in 1usize..=1000, n in 1usize..=1000) {
        prop_assume!(gcd(m, n) == 1);
        let t = table();
        prop_assert_eq!(t.totient(m * n).unwrap() as u64, t.totient(m).unwrap() as u64 * t.totient(n).unwrap() as u64);
        prop_assert_eq!(t.mobius(m * n).unwrap(), t.mobius(m).unwrap() * t.mobius(n).unwrap());
        for k in 2..=4 {
            prop_assert_eq!(t.divisor_count_k(m * n, k).unwrap(), t.divisor_count_k(m, k).unwrap() * t.divisor_count_k(n, k).unwrap());
        }
    }

    #[test]
    fn zeta_functional_equation(sigma in 0.1f64..0.9, t in 0.5f64..25.0) {
        let s = Complex64::new(sigma, t);
        let rhs = Complex64::new(2.0, 0.0).powc(s) * Complex64::new(PI, 0.0).powc(s - 1.0) * (PI * s / 2.0).sin()
            * gamma_complex(1.0 - s).unwrap() * zeta(1.0 - s).unwrap();
        let lhs = zeta(s).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(1.0), "{} vs {}", lhs, rhs);
        prop_assert!((zeta(s.conj()).unwrap() - lhs.conj()).norm() <= 1e-14);
    }

    #[test]
    fn gamma_recurrence_and_reflection(re in 0.05f64..0.95, im in -10.0f64..10.0) {
        let s = Complex64::new(re, im);
        let g = gamma_complex(s).unwrap();
        let up = gamma_complex(s + 1.0).unwrap();
        prop_assert!((up - s * g).norm() <= 1e-12 * up.norm().max(1e-300));
        let refl = g * gamma_complex(1.0 - s).unwrap() * (PI * s).sin();
        prop_assert!((refl - PI).norm() <= 1e-11 * PI);
    }

    #[test]
    fn theta_functional_equation(x in 0.1f64..10.0) {
        let lhs = 2.0 * theta_psi(x).unwrap() + 1.0;
        let rhs = (2.0 * theta_psi(1.0 / x).unwrap() + 1.0) / x.sqrt();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs);
    }

    #[test]
    fn geometric_mobius_transform(x in 0.05f64..20.0) {
        let v = mobius_transform(&TestFunction::exp(), x).unwrap();
        let exact = 1.0 / x.exp_m1();
        prop_assert!((v.value - exact).abs() <= 1e-13 * exact.max(1.0) + v.tail_bound);
    }

    #[test]
    fn float_serialization_round_trips(v in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
        prop_assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn complex_syntax_round_trips(re in -1e3f64..1e3, im in -1e3f64..1e3) {
        let z = Complex64::new(re, im);
        prop_assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
    }

    #[test]
    fn globs(text in "[a-z0-9.-]{0,12}") {
        prop_assert!(glob_match(&text, &text));
        prop_assert!(glob_match("*", &text));
        let with_star = format!("{}*", &text[..text.len() / 2]);
        prop_assert!(glob_match(&with_star, &text));
    }
}

//! Acceptance criteria, one line each. Criteria listed in `KNOWN_RED` are
//! expected to fail and print why; any other failure fails the test.

use num_complex::Complex64;
use std::process::Command;
use std::time::Instant;
use summation_core::identities::{verify, CheckReport, Overrides};
use summation_core::mellin::TestFunction;
use summation_core::operators::{error_function_kernel, log_moment, muntz_iterate, residue_polynomial, voronoi_operator};
use summation_core::sieve::ArithTable;
use summation_core::special::{euler_gamma, gamma_complex, zeta};

const KNOWN_RED: &[u32] = &[4, 5, 9];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn at_x(xs: &[f64]) -> Overrides {
    Overrides { x: Some(xs.to_vec()), ..Overrides::default() }
}

fn at_s(ss: &[(f64, f64)]) -> Overrides {
    Overrides { s: Some(ss.iter().map(|&(re, im)| Complex64::new(re, im)).collect()), ..Overrides::default() }
}

fn with_tol(mut o: Overrides, tol: f64) -> Overrides {
    o.tol = Some(tol);
    o
}

/// Passed under the pinned tolerance, with every residual at most `tol`.
fn holds(r: &CheckReport, tol: f64) -> bool {
    r.passed && r.samples.iter().all(|s| s.residual <= tol)
}

fn check(id: &str, o: &Overrides, tol: f64) -> (bool, String) {
    match verify(id, &with_tol(o.clone(), tol)) {
        Ok(r) => {
            let bound = r.samples.iter().map(|s| s.lhs_bound + s.rhs_bound).fold(0.0, f64::max);
            (holds(&r, tol), format!("{id} max residual {:.2e} bound {:.2e}", r.max_residual(), bound))
        }
        Err(e) => (false, format!("{id}: {e}")),
    }
}

fn all(checks: Vec<(bool, String)>) -> Verdict {
    let pass = checks.iter().all(|c| c.0);
    let failed: Vec<&str> = checks.iter().filter(|c| !c.0).map(|c| c.1.as_str()).collect();
    let worst = checks.iter().map(|c| c.1.as_str()).collect::<Vec<_>>().join("; ");
    verdict(pass, if pass { worst } else { format!("failing: {}", failed.join("; ")) })
}

fn trial_factor(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn sieve_invariants() -> Verdict {
    let n_max = 10_000;
    let t = ArithTable::new(n_max).unwrap();
    let mut divisors = vec![Vec::new(); n_max + 1];
    for d in 1..=n_max {
        for m in (d..=n_max).step_by(d) {
            divisors[m].push(d);
        }
    }
    let mu = |n| t.mobius(n).unwrap() as i64;
    let lambda = |n| t.liouville(n).unwrap() as i64;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        let ds = &divisors[n];
        let fac = trial_factor(n);
        let squarefree = fac.iter().all(|&(_, e)| e == 1);
        let big_omega: u32 = fac.iter().map(|&(_, e)| e).sum();
        let a = t.greatest_odd_divisor(n).unwrap() as usize;
        let q = n / a;
        let ok = [
            ds.iter().map(|&d| mu(d)).sum::<i64>() == i64::from(n == 1),
            ds.iter().map(|&d| t.totient(d).unwrap() as usize).sum::<usize>() == n,
            (mu(n) != 0) == squarefree && mu(n) * mu(n) == mu(n).abs(),
            a % 2 == 1 && n % a == 0 && q.is_power_of_two(),
            lambda(n) == if big_omega % 2 == 0 { 1 } else { -1 },
            1i64 << t.omega_distinct(n).unwrap() == ds.iter().map(|&d| mu(d) * mu(d)).sum::<i64>(),
        ];
        if let Some(i) = ok.iter().position(|&b| !b) {
            bad.push(format!("invariant {} at n = {n}", i + 1));
        }
    }
    for m in 1..=n_max {
        for n in 1..=n_max / m {
            if lambda(m * n) != lambda(m) * lambda(n) {
                bad.push(format!("lambda multiplicativity at {m}·{n}"));
            }
        }
    }
    verdict(bad.is_empty(), if bad.is_empty() { "six invariants hold for every n <= 10^4".into() } else { bad[..bad.len().min(3)].join("; ") })
}

fn theta_functional_equation() -> Verdict {
    all(vec![check("theta-3.6", &at_x(&[0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0]), 1e-12)])
}

fn poisson() -> Verdict {
    all(vec![check("poisson-1.27", &at_x(&[0.5, 1.0, 2.0]), 1e-10)])
}

fn lambert_and_cosh_form() -> Verdict {
    let three = at_x(&[0.5, 1.0, 2.0]);
    let mut v = all(vec![
        check("lambert", &three, 1e-10),
        check("exp-3.2", &three, 1e-10),
        check("exp-3.4", &at_x(&[1.0]), 1e-10),
    ]);
    let (a, _) = check("exp-3.2-coth", &three, 1e-10);
    let (b, _) = check("exp-3.4-series", &at_x(&[1.0]), 1e-10);
    v.detail.push_str(&format!(
        " | the cosh forms are false; corrected coth form {} and series form {}",
        if a { "holds" } else { "fails" },
        if b { "holds" } else { "fails" }
    ));
    v
}

fn ramanujan() -> Verdict {
    let mut checks = Vec::new();
    for j in 7..=16 {
        let id = format!("ramanujan-1.{j}");
        for s in [2.0, 2.5] {
            let r = verify(&id, &with_tol(at_s(&[(s, 0.0)]), 1e-6));
            checks.push(match r {
                Ok(r) => {
                    let smp = &r.samples[0];
                    let within_bound = smp.residual <= smp.lhs_bound + smp.rhs_bound;
                    (within_bound && holds(&r, 1e-6), format!("{id} s={s} residual {:.1e} <= bound {:.1e}", smp.residual, smp.lhs_bound + smp.rhs_bound))
                }
                Err(e) => (false, format!("{id} s={s}: {e} (the series diverges at the abscissa)")),
            });
        }
    }
    let mut v = all(checks);
    if v.pass {
        v.detail = "all 20 samples within their tail bounds and 1e-6".into();
    }
    v
}

fn muntz_square() -> Verdict {
    let f = TestFunction::exp();
    let mut checks = Vec::new();
    for x in [0.5, 1.0, 2.0] {
        let d = (voronoi_operator(&f, x).unwrap().value - muntz_iterate(&f, x, 2).unwrap().value).abs();
        checks.push((d <= 1e-6, format!("x={x} |Vf - P²f| {d:.1e}")));
    }
    all(checks)
}

fn voronoi_summation() -> Verdict {
    all(vec![check("voronoi-sum-1.40", &at_x(&[1.0]), 1e-5)])
}

fn small_circle_residue(k: i32, x: f64) -> f64 {
    let n = 256;
    let r = 0.5;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let w = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / n as f64);
        let s = 1.0 + w;
        acc += zeta(s).unwrap().powi(k) * gamma_complex(s).unwrap() * (-s * x.ln()).exp() * w;
    }
    acc.re / n as f64
}

fn residue_polynomials() -> Verdict {
    let f = TestFunction::exp();
    let g = euler_gamma();
    let p1 = residue_polynomial(1).unwrap().coeffs;
    let p2 = residue_polynomial(2).unwrap().coeffs;
    let mut checks = vec![
        (p1.len() == 1 && (p1[0] - 1.0).abs() <= 1e-12, "P_0 = 1".to_string()),
        (p2.len() == 2 && (p2[0] - 2.0 * g).abs() <= 1e-12 && (p2[1] - 1.0).abs() <= 1e-12, "P_1 = L + 2γ".to_string()),
    ];
    for k in [3usize, 4] {
        let p = residue_polynomial(k).unwrap();
        let moment: f64 = p.coeffs.iter().enumerate().map(|(j, c)| c * log_moment(&f, 1.0, j).unwrap()).sum();
        let d = (moment - small_circle_residue(k as i32, 1.0)).abs();
        checks.push((d <= 1e-8, format!("k={k} moment vs circle residue {d:.1e}")));
    }
    let report = verify("d2-sum", &Overrides::default());
    let noted = report.map(|r| r.notes.iter().any(|n| n.contains("differs from the alternative form"))).unwrap_or(false);
    checks.push((noted, "d2-sum report notes the k=3 coefficient discrepancy".into()));
    all(checks)
}

fn error_function_series() -> Verdict {
    let mut v = all(vec![check("poisson-type-2.16", &at_x(&[1.0]), 1e-5)]);
    let f = TestFunction::x_exp();
    let mut worst: f64 = 0.0;
    for x in [0.5, 1.0, 2.0] {
        for n in 1..=2 {
            for m in 1..=2 {
                let t = error_function_kernel(&f, x, n, m).unwrap();
                worst = worst.max((t.complex_path - t.real_path).norm());
            }
        }
    }
    let dual = worst <= 1e-10;
    v.pass &= dual;
    v.detail = format!("{} | dual-path kernel agreement {worst:.1e} ({})", v.detail, if dual { "ok" } else { "too large" });
    v
}

fn muntz_type() -> Verdict {
    let ids = [
        "muntz-1.19",
        "reduced-muntz-2.5",
        "totient-muntz-2.22",
        "odd-divisor-muntz-2.23",
        "gen-voronoi-2.34",
        "theta-muntz-3.10",
        "theta-muntz-3.11",
    ];
    let mut checks: Vec<_> = ids.iter().map(|id| check(id, &Overrides::default(), 1e-5)).collect();
    let r = verify("gen-voronoi-2.34", &Overrides::default()).unwrap();
    for k in [2, 3] {
        let n = r.samples.iter().filter(|s| s.point.k == Some(k)).count();
        checks.push((n >= 2, format!("gen-voronoi-2.34 samples at k={k}: {n}")));
    }
    all(checks)
}

fn representation() -> Verdict {
    all(vec![check("representation-3.17", &at_s(&[(2.0, 0.0)]), 1e-5), check("constant-12-pi2", &Overrides::default(), 1e-5)])
}

fn summation_formulas() -> Verdict {
    let three = at_x(&[0.5, 1.0, 2.0]);
    let ids = ["liouville-2.13", "weighted-2.24", "weighted-2.25", "mobius-totient-2.26", "mobius-totient-2.27", "omega-sum", "d-square-sum", "d2-sum"];
    all(ids.iter().map(|id| check(id, &three, 1e-6)).collect())
}

fn cli_determinism() -> Verdict {
    let run = || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_summa")).args(["suite", "--json", "-"]).output().expect("summa runs");
        (out.stdout, out.status.code(), start.elapsed().as_secs_f64())
    };
    let (a, code_a, ta) = run();
    let (b, code_b, tb) = run();
    let same = a == b && !a.is_empty();
    verdict(
        same && code_a == code_b,
        format!("{} bytes, identical: {same}, runs {ta:.1} s and {tb:.1} s, exit {code_a:?}", a.len()),
    )
}

type Criterion = (u32, &'static str, f64, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 13] = [
        (1, "sieve invariants, n <= 10^4", 5.0, sieve_invariants),
        (2, "theta functional equation, tol 1e-12", 1.0, theta_functional_equation),
        (3, "Poisson formula for e^-x, tol 1e-10", 1.0, poisson),
        (4, "Lambert expansion and squarefree exponential sums, tol 1e-10", 1.0, lambert_and_cosh_form),
        (5, "Ramanujan identities at s = 2, 2.5, tol 1e-6", 30.0, ramanujan),
        (6, "Voronoi operator equals P², tol 1e-6", 60.0, muntz_square),
        (7, "Voronoi summation at x = 1, tol 1e-5", 120.0, voronoi_summation),
        (8, "residue polynomials, tol 1e-12 / 1e-8", 10.0, residue_polynomials),
        (9, "error-function double series at x = 1, tol 1e-5; kernel paths, tol 1e-10", 120.0, error_function_series),
        (10, "Müntz type formulas, two s points each, tol 1e-5", 120.0, muntz_type),
        (11, "representation at s = 2 and the 12/π² constant, tol 1e-5", 60.0, representation),
        (12, "arithmetic summation formulas with designated test functions, tol 1e-6", 60.0, summation_formulas),
        (13, "byte-identical suite --json across two runs", 120.0, cli_determinism),
    ];
    let mut unexpected = Vec::new();
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let v = run();
        let secs = start.elapsed().as_secs_f64();
        let on_time = secs <= budget;
        let pass = v.pass && on_time;
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {status}  {name}  [{secs:.2} s of {budget} s]  {}", v.detail);
        if pass == KNOWN_RED.contains(&n) {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: {} criteria red as recorded ({KNOWN_RED:?}), all others green", KNOWN_RED.len());
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

//! Evaluation behind each subcommand; results come back as tables.

use super::table::{Cell, Table};
use crate::error::{Error, Result};
use crate::mellin::{muntz_operator, muntz_via_contour, ContourSpec, OperatorValue, TestFunction};
use crate::operators::{
    divisor_op_k, generalized_voronoi, liouville_op, mobius_transform, muntz_iterate, odd_divisor_op, reduced_mobius,
    totient_op, voronoi_operator,
};
use crate::sieve::{ArithFn, ArithTable};
use crate::special::bessel::{self, HANKEL_LIMIT, SERIES_LIMIT};
use crate::special::zeta::{zeta_alternating, zeta_euler_maclaurin};
use crate::special::{gamma_complex, stieltjes_constants, stieltjes_error_estimate, theta_psi, zeta};
use num_complex::Complex64;

/// `2`, `-1.5`, `0.5+14i`, `3-2i`, `2i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::Config(format!("malformed complex number '{text}'"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let b = body.as_bytes();
    let split = (1..b.len()).rev().find(|&i| (b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E'));
    let imag = |s: &str| match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => s.parse::<f64>().map_err(|_| bad()),
    };
    match split {
        Some(i) => Ok(Complex64::new(body[..i].parse().map_err(|_| bad())?, imag(&body[i..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

/// Sieve `function` to `max` as `n,value` CSV.
pub fn sieve_csv(max: usize, function: &str, header: bool, cap: usize) -> Result<String> {
    let func: ArithFn = function.parse()?;
    let table = ArithTable::with_cap(max, cap)?;
    let mut out = Vec::new();
    table.write_csv(func, header, &mut out).map_err(|e| Error::Config(e.to_string()))?;
    Ok(String::from_utf8(out).expect("CSV is ASCII"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EvalTarget {
    Zeta,
    Gamma,
    Theta,
    K0,
    Y0,
    Stieltjes,
}

fn real(z: Complex64, name: &str) -> Result<f64> {
    if z.im != 0.0 {
        return Err(Error::OutOfRange(format!("{name} takes a real argument")));
    }
    Ok(z.re)
}

/// Second evaluation path for the `K0` error estimate.
fn k0_alternative(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        bessel::k0_integral(x)
    } else if x < 12.0 {
        bessel::k0_series(x)
    } else {
        bessel::k0_asymptotic(x)
    }
}

fn y0_alternative(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        bessel::y0_neumann(x)
    } else if x < 8.0 {
        bessel::y0_series(x)
    } else if x <= HANKEL_LIMIT {
        bessel::hankel0(x).1
    } else {
        bessel::y0_neumann(x)
    }
}

/// One special-function value with the disagreement of an independent
/// evaluation path as its error estimate.
fn eval_one(target: EvalTarget, s: Complex64) -> Result<(Complex64, f64)> {
    Ok(match target {
        EvalTarget::Zeta => {
            let v = zeta(s)?;
            let alt = if s.re > 0.0 && s.im.abs() < 100.0 { zeta_alternating(s)? } else { zeta_euler_maclaurin(s) };
            (v, (v - alt).norm())
        }
        EvalTarget::Gamma => {
            let v = gamma_complex(s)?;
            (v, (v - gamma_complex(s + 1.0)? / s).norm())
        }
        EvalTarget::Theta => {
            let x = real(s, "theta")?;
            let v = theta_psi(x)?;
            let r = x.sqrt().recip();
            let alt = r * theta_psi(1.0 / x)? + 0.5 * (r - 1.0);
            (v.into(), (v - alt).abs())
        }
        EvalTarget::K0 => {
            let x = real(s, "k0")?;
            let v = bessel::bessel_k0(x)?;
            (v.into(), (v - k0_alternative(x)).abs())
        }
        EvalTarget::Y0 => {
            let x = real(s, "y0")?;
            let v = bessel::bessel_y0(x)?;
            (v.into(), (v - y0_alternative(x)).abs())
        }
        EvalTarget::Stieltjes => unreachable!("handled by order"),
    })
}

pub fn eval_table(target: EvalTarget, args: &[String], order: Option<usize>) -> Result<Table> {
    let mut t = Table::new(vec!["function", "argument", "re", "im", "error_estimate"]);
    if target == EvalTarget::Stieltjes {
        if !args.is_empty() {
            return Err(Error::Config("stieltjes takes --order, not --arg".into()));
        }
        let m = order.unwrap_or(0);
        let lc = stieltjes_constants(m)?;
        for j in 0..=m {
            t.push(vec!["stieltjes".into(), j.to_string().into(), lc.gamma(j).into(), 0.0.into(), stieltjes_error_estimate(j).into()]);
        }
        return Ok(t);
    }
    if order.is_some() {
        return Err(Error::Config("--order applies to stieltjes only".into()));
    }
    if args.is_empty() {
        return Err(Error::Config("eval needs at least one --arg".into()));
    }
    let name = format!("{target:?}").to_lowercase();
    for a in args {
        let s = parse_complex(a)?;
        let (v, e) = eval_one(target, s)?;
        t.push(vec![name.clone().into(), format_complex(s).into(), v.re.into(), v.im.into(), e.into()]);
    }
    Ok(t)
}

fn order_suffix(name: &str, prefix: &str) -> Result<Option<usize>> {
    match name.strip_prefix(prefix) {
        None => Ok(None),
        Some(k) => k.parse().map(Some).map_err(|_| Error::Config(format!("malformed order in '{name}'"))),
    }
}

/// Apply the operator called `name` to `f` at `x`.
pub fn apply_operator(name: &str, f: &TestFunction, x: f64) -> Result<OperatorValue> {
    if let Some(k) = order_suffix(name, "dk:")? {
        return divisor_op_k(f, x, k as u32);
    }
    if let Some(k) = order_suffix(name, "gen-voronoi:")? {
        if !(1..=5).contains(&k) {
            return Err(Error::OutOfRange(format!("generalized Voronoi order must be in 1..=5, got {k}")));
        }
        return generalized_voronoi(f, x, k);
    }
    if let Some(k) = order_suffix(name, "muntz:")? {
        return muntz_iterate(f, x, k);
    }
    match name {
        "theta" => mobius_transform(f, x),
        "theta-hat" => reduced_mobius(f, x),
        "lambda" => liouville_op(f, x),
        "phi" => totient_op(f, x),
        "a" => odd_divisor_op(f, x),
        "muntz" => muntz_operator(f, x),
        "voronoi" => voronoi_operator(f, x),
        _ => Err(Error::Config(format!("unknown operator '{name}'"))),
    }
}

/// Operator values; with `contour`, the Müntz operator through its Mellin
/// line integral at `Re s = contour`, truncated at `height`.
pub fn operator_table(name: &str, function: &str, xs: &[f64], contour: Option<f64>, height: f64) -> Result<Table> {
    let f: TestFunction = function.parse()?;
    if xs.is_empty() {
        return Err(Error::Config("op needs at least one --x".into()));
    }
    let mut t = Table::new(vec!["operator", "function", "x", "value", "error_estimate"]);
    for &x in xs {
        let (v, e) = match contour {
            Some(sigma) if name == "muntz" => {
                let li = muntz_via_contour(&f, ContourSpec::new(sigma).with_height(height), x)?;
                (li.value, li.error_bound())
            }
            Some(_) => return Err(Error::Config("--contour applies to the muntz operator only".into())),
            None => {
                let r = apply_operator(name, &f, x)?;
                (r.value, r.tail_bound)
            }
        };
        t.push(vec![Cell::from(name), function.into(), x.into(), v.into(), e.into()]);
    }
    Ok(t)
}

//! Arithmetic functions from one linear sieve.
use summation_core::sieve::{ArithFn, ArithTable};

fn main() -> summation_core::Result<()> {
    let t = ArithTable::new(30)?;
    println!(" n  mu  lambda  phi  omega  a(n)  d_3");
    for n in 1..=30 {
        println!(
            "{n:>2}  {:>2}  {:>6}  {:>3}  {:>5}  {:>4}  {:>3}",
            t.mobius(n)?,
            t.liouville(n)?,
            t.totient(n)?,
            t.omega_distinct(n)?,
            t.greatest_odd_divisor(n)?,
            t.divisor_count_k(n, 3)?
        );
    }
    let mertens: i64 = (1..=30).map(|n| t.value(ArithFn::Mu, n).unwrap()).sum();
    println!("M(30) = {mertens}");
    Ok(())
}

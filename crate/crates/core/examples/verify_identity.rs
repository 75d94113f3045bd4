//! Check one identity at caller-chosen points.
use summation_core::identities::{verify, Overrides};

fn main() -> summation_core::Result<()> {
    let o = Overrides { x: Some(vec![0.1, 1.0, 10.0]), ..Overrides::default() };
    let r = verify("theta-3.6", &o)?;
    for s in &r.samples {
        println!("x = {:>4}: residual {:.2e}, bounds {:.1e} + {:.1e}", s.point.x.unwrap(), s.residual, s.lhs_bound, s.rhs_bound);
    }
    println!("{}: {}", r.id, if r.passed { "pass" } else { "fail" });

    let r = verify("exp-3.2", &Overrides::default())?;
    println!("{}: {} ({})", r.id, if r.passed { "pass" } else { "fail" }, r.notes.join("; "));
    Ok(())
}

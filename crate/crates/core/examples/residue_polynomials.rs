//! Compensating polynomials of the generalized Voronoi operators.
use summation_core::operators::residue_polynomial;

fn main() -> summation_core::Result<()> {
    for k in 1..=5 {
        let p = residue_polynomial(k)?;
        let terms: Vec<String> = p.coeffs.iter().enumerate().map(|(j, c)| format!("{c:+.12} L^{j}")).collect();
        println!("k = {k}: {}", terms.join(" "));
    }
    Ok(())
}

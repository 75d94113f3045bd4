//! Zeta on the critical line, Gamma, Bessel K0/Y0, theta and the Stieltjes constants.
use num_complex::Complex64;
use summation_core::special::{bessel_k0, bessel_y0, gamma_complex, stieltjes_constants, theta_psi, zeta};

fn main() -> summation_core::Result<()> {
    for t in [0.0, 14.134725141734693, 21.022039638771555, 50.0] {
        let s = Complex64::new(0.5, t);
        println!("zeta(1/2 + {t}i) = {:.12e}", zeta(s)?);
    }
    println!("Gamma(0.3 + i)   = {:.15e}", gamma_complex(Complex64::new(0.3, 1.0))?);
    for x in [0.5, 2.0, 10.0, 40.0] {
        println!("K0({x}) = {:.15e}   Y0({x}) = {:.15e}", bessel_k0(x)?, bessel_y0(x)?);
    }
    println!("psi(1) = {:.17e}", theta_psi(1.0)?);
    let lc = stieltjes_constants(4)?;
    for m in 0..=4 {
        println!("gamma_{m} = {:.15e}", lc.gamma(m));
    }
    Ok(())
}

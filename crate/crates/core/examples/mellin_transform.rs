//! Mellin transform by quadrature, and back along a vertical line.
use num_complex::Complex64;
use summation_core::mellin::{inverse_mellin_line, mellin_numeric, ContourSpec, TestFunction};
use summation_core::special::gamma_complex;

fn main() -> summation_core::Result<()> {
    let f = TestFunction::x_exp();
    for s in [Complex64::new(0.5, 0.0), Complex64::new(1.5, 4.0)] {
        let q = mellin_numeric(&f, s)?;
        let exact = f.mellin_closed_form(s).unwrap();
        println!("f*({s}) = {:.14e}  (closed form {:.14e}, est. error {:.1e})", q.value, exact, q.error);
    }
    // e^{-x} = (1/2πi) ∫ Γ(s) x^{-s} ds on Re s = 1/2
    for x in [0.5, 1.0, 2.0] {
        let li = inverse_mellin_line(|s| gamma_complex(s).unwrap(), ContourSpec::new(0.5).with_height(60.0), 10.0, x)?;
        println!("x = {x}: line integral {:.14e}, e^-x {:.14e}, bound {:.1e}", li.value, (-x).exp(), li.error_bound());
    }
    Ok(())
}

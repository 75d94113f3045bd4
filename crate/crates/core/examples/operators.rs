//! Müntz, Voronoi and weighted operators applied to e^{-x}.
use summation_core::mellin::{muntz_operator, TestFunction};
use summation_core::operators::{
    generalized_voronoi, muntz_iterate, reduced_mobius, totient_op, voronoi_g_kernel, voronoi_operator,
};

fn main() -> summation_core::Result<()> {
    let f = TestFunction::exp();
    println!("   x        Pf            Vf            P²f           V_3 f         Θ̂f           Φf");
    for x in [0.25, 0.5, 1.0, 2.0, 4.0] {
        println!(
            "{x:>5}  {:>12.9}  {:>12.9}  {:>12.9}  {:>12.9}  {:>12.9}  {:>12.9}",
            muntz_operator(&f, x)?.value,
            voronoi_operator(&f, x)?.value,
            muntz_iterate(&f, x, 2)?.value,
            generalized_voronoi(&f, x, 3)?.value,
            reduced_mobius(&f, x)?.value,
            totient_op(&f, x)?.value,
        );
    }
    let g = voronoi_g_kernel(&f, 1.0, 1)?;
    println!("Voronoi kernel G(1) = {:.15e} ± {:.1e}", g.value, g.error);
    Ok(())
}

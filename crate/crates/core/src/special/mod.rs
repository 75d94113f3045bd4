//! Special functions over real and complex arguments.

pub mod bernoulli;
pub mod bessel;
pub mod expint;
pub mod fresnel;
pub mod gamma;
pub mod stieltjes;
pub mod theta;
pub mod zeta;

pub use bernoulli::{bernoulli_even, euler_gamma};
pub use gamma::{gamma, gamma_complex, ln_gamma};
pub use fresnel::cos_parabolic_kernel;
pub use stieltjes::{stieltjes_constants, stieltjes_error_estimate, LaurentCoefficients};
pub use theta::theta_psi;
pub use zeta::{zeta, zeta_real};
pub use bessel::{bessel_j0, bessel_k0, bessel_y0};

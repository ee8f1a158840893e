//! Special functions for the kernel and spectra layers: Bessel J_m, Y_0, Y_1,
//! tables of J-zeros, and Fresnel-type oscillatory integrals.

mod bessel;
mod oscillatory;

pub use bessel::{
    bessel_j, bessel_j0, bessel_j1, bessel_j_deriv, bessel_j_zeros, bessel_y, bessel_y0, bessel_y1,
    BesselZeroTable,
};
pub use oscillatory::{exp_tail_integral, fresnel_quadrature, oscillatory_integral};

#[derive(Debug, thiserror::Error)]
pub enum SpecFunError {
    #[error("bessel_y domain: x must be positive, got {x}")]
    YDomain { x: f64 },
    #[error("bessel_y supports orders 0 and 1, got {m}")]
    YOrder { m: u32 },
    #[error("non-finite amplitude sample at y = {y}")]
    NonFiniteAmplitude { y: f64 },
    #[error("oscillatory quadrature did not converge: estimates {last} and {next}")]
    NoConvergence { last: String, next: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

//! Single-layer potentials for the four kernel families, boundary jump
//! probes, and exterior-support tests.

mod helmholtz;
mod schrodinger;
mod transport;
mod wave;

pub use helmholtz::{helmholtz_potential, jump_test, JumpProbe, PotentialField, QuadraturePolicy};
pub use schrodinger::{schrodinger_phi2, schrodinger_potential, stationary_phase_limit};
pub use transport::{transport_potential, transport_potential_rotated};
pub use wave::wave_potential;

use crate::geometry::{ConvexDomain, GeometryError, Point, PointClass};
use crate::kernels::KernelError;
use crate::specfun::SpecFunError;
use crate::transform::TransformError;
use num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum PotentialError {
    #[error("density regularity too low: need {required}, have {got}")]
    RegularityTooLow { required: String, got: String },
    #[error("kernel {0} is not supported by this evaluator")]
    UnsupportedKernel(String),
    #[error("quadrature did not converge: estimates {prev} and {last}")]
    NoConvergence { prev: String, last: String },
    #[error("boundary point at parameter {param} is a corner")]
    CornerPoint { param: f64 },
    #[error("sample {index} at {point:?} is not exterior (classified {class:?})")]
    NotExterior { index: usize, point: Point, class: PointClass },
    #[error("transport potential needs |s| < 1, got s = {s}")]
    OutsideStrip { s: f64 },
    #[error("stationary-phase limit on the t = {t} edge is only defined for x in (0, L); got x = {x}")]
    CornerLimitUndefined { t: f64, x: f64 },
    #[error("this operation needs a rectangle domain")]
    NotRectangle,
    #[error("this operation needs a density on the unit circle")]
    NotUnitCircle,
    #[error("point is not on the boundary (distance {dist:.3e})")]
    OffBoundary { dist: f64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// Maximum |Phi g| over exterior sample points. Every sample must classify
/// exterior; the attached tolerance is the evaluator's quadrature target.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ExteriorReport {
    pub max_abs: f64,
    pub per_point: Vec<f64>,
    pub quad_tol: f64,
}

pub fn exterior_support_test<E>(
    evaluator: E,
    domain: &ConvexDomain,
    points: &[Point],
    quad_tol: f64,
) -> Result<ExteriorReport, PotentialError>
where
    E: Fn(Point) -> Result<Complex64, PotentialError>,
{
    let mut per_point = Vec::with_capacity(points.len());
    let mut max_abs = 0.0f64;
    for (index, &p) in points.iter().enumerate() {
        let class = domain.classify_point(p, 1e-10)?;
        if class != PointClass::Exterior {
            return Err(PotentialError::NotExterior { index, point: p, class });
        }
        let v = evaluator(p)?.norm();
        per_point.push(v);
        max_abs = max_abs.max(v);
    }
    Ok(ExteriorReport { max_abs, per_point, quad_tol })
}

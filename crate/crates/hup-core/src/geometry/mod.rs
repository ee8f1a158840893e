//! Plane curves, convex domains, arc measure, normals and support functions,
//! with a minimal origin-centered sphere for the radial 3D Helmholtz test.
//!
//! All values are immutable after construction; every operation here is pure,
//! so evaluation grids can be fanned out across threads freely.

mod curve;
mod domain;
mod point;

pub use curve::{CurveClass, CurvePiece, ParamCurve};
pub use domain::{outward_normal, ConvexDomain, DomainKind, PointClass, Sphere3};
pub use point::{cross, Point};

/// Errors from curve/domain construction and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("curve is not closed: gap {gap:.3e} between piece end and next start")]
    NotClosed { gap: f64 },
    #[error("curve must be positively oriented (signed area {area:.3e})")]
    NegativeOrientation { area: f64 },
    #[error("curve speed vanishes near parameter t = {param}")]
    VanishingSpeed { param: f64 },
    #[error("curve self-intersects near parameters t = {t1} and t = {t2}")]
    SelfIntersection { t1: f64, t2: f64 },
    #[error("non-finite integrand sample at curve parameter t = {param}")]
    NonFiniteSample { param: f64 },
    #[error("parameter t = {param} is a corner; one-sided normals ({left:?}, {right:?})")]
    CornerNormal { param: f64, left: Point, right: Point },
    #[error("boundary curvature not strictly positive near t = {param} (kappa = {kappa:.3e})")]
    NotStrictlyConvex { param: f64, kappa: f64 },
    #[error("degenerate domain: {0}")]
    Degenerate(String),
    #[error("bad tabulated curve: {0}")]
    BadTable(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_function_is_positively_homogeneous() {
        let doms = [
            ConvexDomain::disk(Point::new(0.5, -1.0), 2.0).unwrap(),
            ConvexDomain::ellipse(2.0, 1.0).unwrap(),
            ConvexDomain::rectangle(3.0, 2.0).unwrap(),
        ];
        let xis = [Point::new(1.0, 2.0), Point::new(-0.3, 0.7), Point::new(-2.0, -5.0)];
        for d in &doms {
            for &xi in &xis {
                for &s in &[0.5, 2.0, 17.0] {
                    let lhs = d.support_function(xi * s);
                    let rhs = s * d.support_function(xi);
                    assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()), "{lhs} vs {rhs}");
                }
            }
        }
    }

    #[test]
    fn outward_normal_separates_witness() {
        let doms = [
            ConvexDomain::disk(Point::new(0.5, -1.0), 2.0).unwrap(),
            ConvexDomain::ellipse(2.0, 1.0).unwrap(),
            ConvexDomain::rectangle(3.0, 2.0).unwrap(),
        ];
        for d in &doms {
            let w = d.interior_witness();
            let p = d.boundary().period();
            for k in 0..64 {
                let t = p * (k as f64 + 0.37) / 64.0;
                if d.boundary().is_corner(t, 1e-6) {
                    continue;
                }
                let n = d.outward_normal(t).unwrap();
                let x = d.boundary().point(t);
                assert!(n.dot(x - w) > 0.0, "normal at t={t} does not separate witness");
            }
        }
    }
}

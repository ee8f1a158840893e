//! Bounded convex domains: disk, ellipse, rectangle plus generic strictly
//! convex C^2 curves, with support functions and point classification.

use super::curve::{CurveClass, ParamCurve};
use super::point::Point;
use super::GeometryError;

/// Side classification of a point against a convex domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum PointClass {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Clone, Debug)]
pub enum DomainKind {
    Disk { center: Point, radius: f64 },
    Ellipse { a: f64, b: f64 },
    Rectangle { t_len: f64, l_len: f64 },
    GenericConvex,
}

/// A bounded convex domain with its boundary curve and an interior witness.
#[derive(Clone, Debug)]
pub struct ConvexDomain {
    boundary: ParamCurve,
    kind: DomainKind,
    witness: Point,
}

impl ConvexDomain {
    pub fn disk(center: Point, radius: f64) -> Result<Self, GeometryError> {
        if !(radius > 0.0) || !radius.is_finite() || !center.is_finite() {
            return Err(GeometryError::Degenerate(format!("disk radius {radius}")));
        }
        Ok(ConvexDomain {
            boundary: ParamCurve::circle(center, radius),
            kind: DomainKind::Disk { center, radius },
            witness: center,
        })
    }

    pub fn ellipse(a: f64, b: f64) -> Result<Self, GeometryError> {
        if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(GeometryError::Degenerate(format!("ellipse semi-axes {a}, {b}")));
        }
        Ok(ConvexDomain {
            boundary: ParamCurve::ellipse(a, b),
            kind: DomainKind::Ellipse { a, b },
            witness: Point::ORIGIN,
        })
    }

    /// Rectangle (0,T) x (0,L) with its corner at the origin.
    pub fn rectangle(t_len: f64, l_len: f64) -> Result<Self, GeometryError> {
        if !(t_len > 0.0 && l_len > 0.0) || !t_len.is_finite() || !l_len.is_finite() {
            return Err(GeometryError::Degenerate(format!("rectangle sides {t_len}, {l_len}")));
        }
        Ok(ConvexDomain {
            boundary: ParamCurve::rectangle(t_len, l_len),
            kind: DomainKind::Rectangle { t_len, l_len },
            witness: Point::new(t_len / 2.0, l_len / 2.0),
        })
    }

    /// Generic strictly convex C^2 curve; curvature positivity is checked on
    /// a 4096-point grid before the domain is accepted.
    pub fn generic(boundary: ParamCurve) -> Result<Self, GeometryError> {
        if boundary.class() != CurveClass::StrictlyConvexC2 && boundary.class() != CurveClass::C2 {
            return Err(GeometryError::Degenerate(
                "generic convex domain needs a C2 boundary parameterization".into(),
            ));
        }
        let p = boundary.period();
        for k in 0..4096 {
            let t = p * k as f64 / 4096.0;
            let kappa = boundary.curvature(t);
            if !(kappa > 0.0) {
                return Err(GeometryError::NotStrictlyConvex { param: t, kappa });
            }
        }
        let witness = boundary.centroid();
        Ok(ConvexDomain { boundary, kind: DomainKind::GenericConvex, witness })
    }

    pub fn boundary(&self) -> &ParamCurve {
        &self.boundary
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn interior_witness(&self) -> Point {
        self.witness
    }

    /// Supporting function H(xi) = sup_{x in closure} xi . x.
    ///
    /// Closed forms for disk/ellipse/rectangle; for generic curves a grid
    /// maximum refined by golden section (see [`support_function_bound`]
    /// for the one-sided error estimate).
    pub fn support_function(&self, xi: Point) -> f64 {
        match self.kind {
            DomainKind::Disk { center, radius } => center.dot(xi) + radius * xi.norm(),
            DomainKind::Ellipse { a, b } => ((a * xi.x).powi(2) + (b * xi.y).powi(2)).sqrt(),
            DomainKind::Rectangle { t_len, l_len } => t_len * xi.x.max(0.0) + l_len * xi.y.max(0.0),
            DomainKind::GenericConvex => self.support_function_bound(xi).0,
        }
    }

    /// Support value together with a one-sided error bound. Exact closed
    /// forms report bound 0; grid maxima report the curvature-based bound
    /// |xi| * max|gamma''| * w^2 / 8 for the final bracket width w.
    pub fn support_function_bound(&self, xi: Point) -> (f64, f64) {
        match self.kind {
            DomainKind::GenericConvex => {
                let p = self.boundary.period();
                let m = 4096;
                let mut best_t = 0.0;
                let mut best = f64::NEG_INFINITY;
                for k in 0..m {
                    let t = p * k as f64 / m as f64;
                    let v = self.boundary.point(t).dot(xi);
                    if v > best {
                        best = v;
                        best_t = t;
                    }
                }
                let h = p / m as f64;
                let (mut lo, mut hi) = (best_t - h, best_t + h);
                let phi = (5f64.sqrt() - 1.0) / 2.0;
                for _ in 0..60 {
                    let m1 = hi - phi * (hi - lo);
                    let m2 = lo + phi * (hi - lo);
                    if self.boundary.point(m1).dot(xi) < self.boundary.point(m2).dot(xi) {
                        lo = m1;
                    } else {
                        hi = m2;
                    }
                }
                let t = 0.5 * (lo + hi);
                let value = self.boundary.point(t).dot(xi);
                let acc = self.boundary.acceleration(t).norm();
                let bound = (xi.norm() * acc * (hi - lo).powi(2) / 8.0).max(1e-15);
                (value, bound)
            }
            _ => (self.support_function(xi), 0.0),
        }
    }

    /// Distance from x to the boundary curve.
    pub fn boundary_distance(&self, x: Point) -> f64 {
        match self.kind {
            DomainKind::Disk { center, radius } => ((x - center).norm() - radius).abs(),
            DomainKind::Rectangle { t_len, l_len } => {
                let dx = seg_dist(x.x, 0.0, t_len);
                let dy = seg_dist(x.y, 0.0, l_len);
                if x.x >= 0.0 && x.x <= t_len && x.y >= 0.0 && x.y <= l_len {
                    // inside: distance to the nearest side
                    (x.x).min(t_len - x.x).min(x.y).min(l_len - x.y)
                } else if x.x >= 0.0 && x.x <= t_len {
                    dy
                } else if x.y >= 0.0 && x.y <= l_len {
                    dx
                } else {
                    (dx * dx + dy * dy).sqrt()
                }
            }
            _ => self.boundary.distance(x),
        }
    }

    /// Classify a point: boundary iff its distance to the curve is <= tol,
    /// interior/exterior by the convex-side test otherwise.
    pub fn classify_point(&self, x: Point, tol: f64) -> Result<PointClass, GeometryError> {
        if !(tol > 0.0) {
            return Err(GeometryError::Degenerate(format!("classify tolerance {tol}")));
        }
        if self.boundary_distance(x) <= tol {
            return Ok(PointClass::Boundary);
        }
        let inside = match self.kind {
            DomainKind::Disk { center, radius } => (x - center).norm() < radius,
            DomainKind::Ellipse { a, b } => (x.x / a).powi(2) + (x.y / b).powi(2) < 1.0,
            DomainKind::Rectangle { t_len, l_len } => {
                x.x > 0.0 && x.x < t_len && x.y > 0.0 && x.y < l_len
            }
            DomainKind::GenericConvex => {
                // winding of the boundary around x
                let p = self.boundary.period();
                let m = 2048;
                let mut total = 0.0;
                let mut prev = (self.boundary.point(0.0) - x).angle();
                for k in 1..=m {
                    let t = p * k as f64 / m as f64;
                    let a = (self.boundary.point(t) - x).angle();
                    let mut d = a - prev;
                    while d > std::f64::consts::PI {
                        d -= std::f64::consts::TAU;
                    }
                    while d < -std::f64::consts::PI {
                        d += std::f64::consts::TAU;
                    }
                    total += d;
                    prev = a;
                }
                total.abs() > std::f64::consts::PI
            }
        };
        Ok(if inside { PointClass::Interior } else { PointClass::Exterior })
    }

    /// Unit outward normal at boundary parameter t. Corner parameters are
    /// rejected with both one-sided normals in the error.
    pub fn outward_normal(&self, t: f64) -> Result<Point, GeometryError> {
        outward_normal(&self.boundary, t)
    }
}

/// Unit outward normal of a positively oriented curve at parameter t.
pub fn outward_normal(curve: &ParamCurve, t: f64) -> Result<Point, GeometryError> {
    if curve.is_corner(t, 1e-9) {
        let p = curve.period();
        let tl = (t.rem_euclid(p) - 1e-7).rem_euclid(p);
        let tr = (t.rem_euclid(p) + 1e-7).rem_euclid(p);
        let nl = rot_normal(curve.velocity(tl));
        let nr = rot_normal(curve.velocity(tr));
        return Err(GeometryError::CornerNormal { param: t, left: nl, right: nr });
    }
    Ok(rot_normal(curve.velocity(t)))
}

fn rot_normal(v: Point) -> Point {
    // clockwise rotation of the tangent points outward for ccw curves
    Point::new(v.y, -v.x).normalize()
}

fn seg_dist(x: f64, lo: f64, hi: f64) -> f64 {
    if x < lo {
        lo - x
    } else if x > hi {
        x - hi
    } else {
        0.0
    }
}

/// Origin-centered sphere in R^3 (radial Helmholtz support only).
#[derive(Clone, Copy, Debug)]
pub struct Sphere3 {
    radius: f64,
}

impl Sphere3 {
    pub fn new(radius: f64) -> Result<Self, GeometryError> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(GeometryError::Degenerate(format!("sphere radius {radius}")));
        }
        Ok(Sphere3 { radius })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn surface_area(&self) -> f64 {
        4.0 * std::f64::consts::PI * self.radius * self.radius
    }

    /// Surface integral of a radial density over the sphere.
    pub fn surface_integral_radial(&self, g: num_complex::Complex64) -> num_complex::Complex64 {
        g * self.surface_area()
    }

    pub fn support_function(&self, xi: [f64; 3]) -> f64 {
        self.radius * (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt()
    }
}

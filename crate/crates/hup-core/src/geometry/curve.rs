//! Closed plane curves given by explicit piecewise parameterizations.
//!
//! A curve is an ordered list of smooth pieces gamma_i : [0,1] -> R^2 with
//! derivative access. The global parameter t runs over [0, P) where P is the
//! number of pieces; t = i + s addresses local parameter s on piece i. Pieces
//! join end-to-start and the whole loop is positively oriented.

use super::point::{cross, Point};
use super::GeometryError;
use crate::gauss::gauss_legendre;
use crate::interp::{hermite, hermite_deriv, hermite_deriv2};
use num_complex::Complex64;

/// Regularity tag carried by a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CurveClass {
    /// Closed, piecewise C^1 (corners allowed).
    C1Piecewise,
    /// C^2 without corners.
    C2,
    /// C^2 with strictly positive curvature.
    StrictlyConvexC2,
}

/// One smooth piece of a curve, parameterized over [0, 1].
#[derive(Clone, Debug)]
pub enum CurvePiece {
    CircleArc {
        center: Point,
        radius: f64,
        theta0: f64,
        sweep: f64,
    },
    EllipseArc {
        center: Point,
        a: f64,
        b: f64,
        theta0: f64,
        sweep: f64,
    },
    Segment {
        from: Point,
        to: Point,
    },
    /// Cubic Hermite interpolant of tabulated samples with derivatives.
    Hermite {
        knots: Vec<f64>, // ascending in [0, 1]
        points: Vec<Point>,
        velocities: Vec<Point>,
    },
}

impl CurvePiece {
    pub fn point(&self, s: f64) -> Point {
        match self {
            CurvePiece::CircleArc { center, radius, theta0, sweep } => {
                let th = theta0 + s * sweep;
                *center + Point::new(th.cos(), th.sin()) * *radius
            }
            CurvePiece::EllipseArc { center, a, b, theta0, sweep } => {
                let th = theta0 + s * sweep;
                *center + Point::new(a * th.cos(), b * th.sin())
            }
            CurvePiece::Segment { from, to } => *from + (*to - *from) * s,
            CurvePiece::Hermite { knots, points, velocities } => {
                let i = locate(knots, s);
                Point::new(
                    hermite(s, knots[i], knots[i + 1], points[i].x, points[i + 1].x, velocities[i].x, velocities[i + 1].x),
                    hermite(s, knots[i], knots[i + 1], points[i].y, points[i + 1].y, velocities[i].y, velocities[i + 1].y),
                )
            }
        }
    }

    pub fn velocity(&self, s: f64) -> Point {
        match self {
            CurvePiece::CircleArc { radius, theta0, sweep, .. } => {
                let th = theta0 + s * sweep;
                Point::new(-th.sin(), th.cos()) * (*radius * *sweep)
            }
            CurvePiece::EllipseArc { a, b, theta0, sweep, .. } => {
                let th = theta0 + s * sweep;
                Point::new(-a * th.sin(), b * th.cos()) * *sweep
            }
            CurvePiece::Segment { from, to } => *to - *from,
            CurvePiece::Hermite { knots, points, velocities } => {
                let i = locate(knots, s);
                Point::new(
                    hermite_deriv(s, knots[i], knots[i + 1], points[i].x, points[i + 1].x, velocities[i].x, velocities[i + 1].x),
                    hermite_deriv(s, knots[i], knots[i + 1], points[i].y, points[i + 1].y, velocities[i].y, velocities[i + 1].y),
                )
            }
        }
    }

    pub fn acceleration(&self, s: f64) -> Point {
        match self {
            CurvePiece::CircleArc { radius, theta0, sweep, .. } => {
                let th = theta0 + s * sweep;
                Point::new(-th.cos(), -th.sin()) * (*radius * *sweep * *sweep)
            }
            CurvePiece::EllipseArc { a, b, theta0, sweep, .. } => {
                let th = theta0 + s * sweep;
                Point::new(-a * th.cos(), -b * th.sin()) * (*sweep * *sweep)
            }
            CurvePiece::Segment { .. } => Point::ORIGIN,
            CurvePiece::Hermite { knots, points, velocities } => {
                let i = locate(knots, s);
                Point::new(
                    hermite_deriv2(s, knots[i], knots[i + 1], points[i].x, points[i + 1].x, velocities[i].x, velocities[i + 1].x),
                    hermite_deriv2(s, knots[i], knots[i + 1], points[i].y, points[i + 1].y, velocities[i].y, velocities[i + 1].y),
                )
            }
        }
    }
}

fn locate(knots: &[f64], s: f64) -> usize {
    let n = knots.len();
    match knots.partition_point(|&k| k <= s) {
        0 => 0,
        i if i >= n => n - 2,
        i => i - 1,
    }
}

/// A closed, simple, positively oriented piecewise-smooth plane curve.
#[derive(Clone, Debug)]
pub struct ParamCurve {
    pieces: Vec<CurvePiece>,
    class: CurveClass,
    corners: Vec<f64>,
}

impl ParamCurve {
    /// Build and validate a curve from pieces.
    pub fn from_pieces(pieces: Vec<CurvePiece>, class: CurveClass) -> Result<Self, GeometryError> {
        if pieces.is_empty() {
            return Err(GeometryError::Degenerate("curve has no pieces".into()));
        }
        let n = pieces.len();
        // closure: each piece ends where the next starts
        for i in 0..n {
            let end = pieces[i].point(1.0);
            let start = pieces[(i + 1) % n].point(0.0);
            let gap = end.dist(start);
            if gap > 1e-9 {
                return Err(GeometryError::NotClosed { gap });
            }
        }
        // nonvanishing speed on a sample grid
        for (i, p) in pieces.iter().enumerate() {
            for k in 0..64 {
                let s = (k as f64 + 0.5) / 64.0;
                if p.velocity(s).norm() < 1e-12 {
                    return Err(GeometryError::VanishingSpeed { param: i as f64 + s });
                }
            }
        }
        let mut curve = ParamCurve { pieces, class, corners: Vec::new() };
        let area = curve.signed_area();
        if area <= 0.0 {
            return Err(GeometryError::NegativeOrientation { area });
        }
        // simplicity spot-check: distinct parameters map to distinct points
        let m = 128 * n;
        let samples: Vec<Point> = (0..m).map(|k| curve.point(k as f64 * n as f64 / m as f64)).collect();
        for i in 0..m {
            for j in i + 2..m {
                if j == m - 1 && i == 0 {
                    continue;
                }
                if samples[i].dist(samples[j]) < 1e-9 && (j - i) > 2 && (m - (j - i)) > 2 {
                    return Err(GeometryError::SelfIntersection {
                        t1: i as f64 * n as f64 / m as f64,
                        t2: j as f64 * n as f64 / m as f64,
                    });
                }
            }
        }
        curve.corners = curve.find_corners();
        Ok(curve)
    }

    fn find_corners(&self) -> Vec<f64> {
        let n = self.pieces.len();
        let mut corners = Vec::new();
        for i in 0..n {
            let before = self.pieces[(i + n - 1) % n].velocity(1.0).normalize();
            let after = self.pieces[i].velocity(0.0).normalize();
            if cross(before, after).abs() > 1e-9 || before.dot(after) < 0.0 {
                corners.push(i as f64);
            }
        }
        corners
    }

    /// Unit circle quantities are exact closed forms throughout.
    pub fn circle(center: Point, radius: f64) -> Self {
        let piece = CurvePiece::CircleArc { center, radius, theta0: 0.0, sweep: std::f64::consts::TAU };
        ParamCurve { pieces: vec![piece], class: CurveClass::StrictlyConvexC2, corners: Vec::new() }
    }

    /// Axis-aligned ellipse x^2/a^2 + y^2/b^2 = 1 centered at the origin.
    pub fn ellipse(a: f64, b: f64) -> Self {
        let piece = CurvePiece::EllipseArc { center: Point::ORIGIN, a, b, theta0: 0.0, sweep: std::f64::consts::TAU };
        ParamCurve { pieces: vec![piece], class: CurveClass::StrictlyConvexC2, corners: Vec::new() }
    }

    /// Rectangle with vertices (0,0), (T,0), (T,L), (0,L), positively oriented.
    pub fn rectangle(t_len: f64, l_len: f64) -> Self {
        let v = [
            Point::new(0.0, 0.0),
            Point::new(t_len, 0.0),
            Point::new(t_len, l_len),
            Point::new(0.0, l_len),
        ];
        let pieces = (0..4)
            .map(|i| CurvePiece::Segment { from: v[i], to: v[(i + 1) % 4] })
            .collect();
        ParamCurve { pieces, class: CurveClass::C1Piecewise, corners: vec![0.0, 1.0, 2.0, 3.0] }
    }

    /// Tabulated closed curve from CSV text with columns t, x1, x2, dx1/dt, dx2/dt.
    ///
    /// The t column is rescaled to [0, 1]; the result is a single C^1 cubic
    /// Hermite piece. Lines starting with '#' and blank lines are skipped.
    pub fn from_table_csv(text: &str, class: CurveClass) -> Result<Self, GeometryError> {
        let mut rows: Vec<[f64; 5]> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 5 {
                return Err(GeometryError::BadTable(format!(
                    "line {}: expected 5 columns t,x1,x2,dx1,dx2, got {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            // tolerate a header row
            if lineno == 0 && fields[0].parse::<f64>().is_err() {
                continue;
            }
            let mut row = [0.0; 5];
            for (k, f) in fields.iter().enumerate() {
                row[k] = f.parse::<f64>().map_err(|_| {
                    GeometryError::BadTable(format!("line {}: bad number {:?}", lineno + 1, f))
                })?;
            }
            rows.push(row);
        }
        if rows.len() < 4 {
            return Err(GeometryError::BadTable(format!("need >= 4 rows, got {}", rows.len())));
        }
        let t0 = rows[0][0];
        let t1 = rows[rows.len() - 1][0];
        if t1 <= t0 {
            return Err(GeometryError::BadTable("t column must be ascending".into()));
        }
        let span = t1 - t0;
        let knots: Vec<f64> = rows.iter().map(|r| (r[0] - t0) / span).collect();
        let points: Vec<Point> = rows.iter().map(|r| Point::new(r[1], r[2])).collect();
        // chain rule for the [0,1] reparameterization
        let velocities: Vec<Point> = rows.iter().map(|r| Point::new(r[3] * span, r[4] * span)).collect();
        let piece = CurvePiece::Hermite { knots, points, velocities };
        ParamCurve::from_pieces(vec![piece], class)
    }

    pub fn class(&self) -> CurveClass {
        self.class
    }

    pub fn pieces(&self) -> &[CurvePiece] {
        &self.pieces
    }

    /// Global parameter period (the number of pieces).
    pub fn period(&self) -> f64 {
        self.pieces.len() as f64
    }

    /// Global parameters of corner joints (empty for smooth closed curves).
    pub fn corners(&self) -> &[f64] {
        &self.corners
    }

    pub fn is_corner(&self, t: f64, tol: f64) -> bool {
        let p = self.period();
        self.corners.iter().any(|&c| {
            let mut d = (t - c).rem_euclid(p);
            if d > p / 2.0 {
                d = p - d;
            }
            d < tol
        })
    }

    fn split(&self, t: f64) -> (usize, f64) {
        let p = self.period();
        let u = t.rem_euclid(p);
        let mut i = u.floor() as usize;
        if i >= self.pieces.len() {
            i = self.pieces.len() - 1;
        }
        (i, u - i as f64)
    }

    pub fn point(&self, t: f64) -> Point {
        let (i, s) = self.split(t);
        self.pieces[i].point(s)
    }

    pub fn velocity(&self, t: f64) -> Point {
        let (i, s) = self.split(t);
        self.pieces[i].velocity(s)
    }

    pub fn acceleration(&self, t: f64) -> Point {
        let (i, s) = self.split(t);
        self.pieces[i].acceleration(s)
    }

    /// Signed curvature at parameter t.
    pub fn curvature(&self, t: f64) -> f64 {
        let v = self.velocity(t);
        let a = self.acceleration(t);
        cross(v, a) / v.norm().powi(3)
    }

    /// Composite Gauss–Legendre quadrature of `f` against arc measure,
    /// `nodes_per_piece` Gauss nodes on each piece. Nodes are interior, so
    /// corners of piecewise curves never receive a sample.
    pub fn arc_quadrature<F>(&self, mut f: F, nodes_per_piece: usize) -> Result<Complex64, GeometryError>
    where
        F: FnMut(Point) -> Complex64,
    {
        self.arc_quadrature_param(|_, x| f(x), nodes_per_piece)
    }

    /// Like [`arc_quadrature`](Self::arc_quadrature) but hands the global
    /// parameter to the integrand as well (density rules want it).
    pub fn arc_quadrature_param<F>(&self, mut f: F, nodes_per_piece: usize) -> Result<Complex64, GeometryError>
    where
        F: FnMut(f64, Point) -> Complex64,
    {
        let n = nodes_per_piece.max(2);
        let (nodes, weights) = gauss_legendre(n);
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, piece) in self.pieces.iter().enumerate() {
            for (x, w) in nodes.iter().zip(weights) {
                let s = 0.5 * (x + 1.0);
                let t = i as f64 + s;
                let p = piece.point(s);
                let speed = piece.velocity(s).norm();
                let v = f(t, p);
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(GeometryError::NonFiniteSample { param: t });
                }
                acc += v * (speed * w * 0.5);
            }
        }
        Ok(acc)
    }

    pub fn perimeter(&self, nodes_per_piece: usize) -> f64 {
        self.arc_quadrature(|_| Complex64::new(1.0, 0.0), nodes_per_piece)
            .expect("constant integrand")
            .re
    }

    /// Signed area by Green's theorem; positive for the required orientation.
    pub fn signed_area(&self) -> f64 {
        let (nodes, weights) = gauss_legendre(32);
        let mut acc = 0.0;
        for piece in &self.pieces {
            for (x, w) in nodes.iter().zip(weights) {
                let s = 0.5 * (x + 1.0);
                let p = piece.point(s);
                let v = piece.velocity(s);
                acc += 0.5 * cross(p, v) * w * 0.5;
            }
        }
        acc
    }

    /// Area centroid via boundary integrals.
    pub fn centroid(&self) -> Point {
        let (nodes, weights) = gauss_legendre(48);
        let mut area = 0.0;
        let mut cx = 0.0;
        let mut cy = 0.0;
        for piece in &self.pieces {
            for (x, w) in nodes.iter().zip(weights) {
                let s = 0.5 * (x + 1.0);
                let p = piece.point(s);
                let v = piece.velocity(s);
                let wgt = w * 0.5;
                area += 0.5 * cross(p, v) * wgt;
                cx += 0.5 * p.x * p.x * v.y * wgt;
                cy += -0.5 * p.y * p.y * v.x * wgt;
            }
        }
        Point::new(cx / area, cy / area)
    }

    /// Parameter of the boundary point nearest to x (coarse scan + ternary refine).
    pub fn nearest_param(&self, x: Point) -> f64 {
        let p = self.period();
        let m = 256 * self.pieces.len();
        let mut best_t = 0.0;
        let mut best_d = f64::INFINITY;
        for k in 0..m {
            let t = k as f64 * p / m as f64;
            let d = self.point(t).dist(x);
            if d < best_d {
                best_d = d;
                best_t = t;
            }
        }
        let h = p / m as f64;
        let (mut lo, mut hi) = (best_t - h, best_t + h);
        for _ in 0..80 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if self.point(m1).dist(x) < self.point(m2).dist(x) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        (0.5 * (lo + hi)).rem_euclid(p)
    }

    /// Distance from x to the curve.
    pub fn distance(&self, x: Point) -> f64 {
        self.point(self.nearest_param(x)).dist(x)
    }
}

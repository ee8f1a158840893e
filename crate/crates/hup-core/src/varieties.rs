//! Real quadratic polynomials P(X) = -X^T A X + b.X + c, classification of
//! their real zero sets, and the square-free / smooth-real-point predicates.
//!
//! Dimension 2 is fully classified. Dimension 3 is restricted to radial
//! quadrics (A proportional to the identity), which covers every sphere
//! instance this laboratory evaluates.

use crate::geometry::Point;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error)]
pub enum VarietyError {
    #[error("quadratic must have a nonzero coefficient")]
    AllZero,
    #[error("matrix A must be symmetric (|a12 - a21| = {skew:.3e})")]
    NotSymmetric { skew: f64 },
    #[error("dimension {dim} not supported (2, or 3 for radial quadrics)")]
    BadDimension { dim: usize },
    #[error("3D classification supports only radial quadrics A = lambda I")]
    NonRadial3D,
    #[error("real zero set is empty; nothing to sample")]
    EmptyRealVariety,
    #[error("sampling is available in dimension 2 only")]
    Sample3D,
}

/// P(X) = -X^T A X + b . X + c with A symmetric.
#[derive(Clone, Debug)]
pub struct QuadraticVariety {
    dim: usize,
    a: [[f64; 3]; 3],
    b: [f64; 3],
    c: f64,
}

/// A line through `offset * normal(angle)` with direction angle `angle`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Line {
    pub angle: f64,
    pub offset: f64,
}

impl Line {
    pub fn point_at(&self, t: f64) -> Point {
        let d = Point::new(self.angle.cos(), self.angle.sin());
        d * t + d.perp() * self.offset
    }
}

/// Classification of the real zero set Z_R(P).
#[derive(Clone, Debug, PartialEq)]
pub enum VarietyClass {
    EmptyReal,
    SinglePoint { center: Point },
    Circle { radius: f64, center: Point },
    Ellipse { semi_axes: (f64, f64), center: Point, angle: f64 },
    Parabola { vertex: Point, axis_angle: f64 },
    Hyperbola { semi_axes: (f64, f64), center: Point, angle: f64 },
    LinePair { angle_between: f64, lines: [Line; 2] },
    SingleLine { line: Line },
    Sphere { radius: f64, center: [f64; 3] },
    SinglePoint3 { center: [f64; 3] },
}

impl QuadraticVariety {
    pub fn new2(a: [[f64; 2]; 2], b: [f64; 2], c: f64) -> Result<Self, VarietyError> {
        let skew = (a[0][1] - a[1][0]).abs();
        let scale = coeff_scale2(&a, &b, c);
        if scale == 0.0 {
            return Err(VarietyError::AllZero);
        }
        if skew > 1e-12 * scale {
            return Err(VarietyError::NotSymmetric { skew });
        }
        let sym = 0.5 * (a[0][1] + a[1][0]);
        let mut a3 = [[0.0; 3]; 3];
        a3[0][0] = a[0][0];
        a3[1][1] = a[1][1];
        a3[0][1] = sym;
        a3[1][0] = sym;
        Ok(QuadraticVariety { dim: 2, a: a3, b: [b[0], b[1], 0.0], c })
    }

    pub fn new3(a: [[f64; 3]; 3], b: [f64; 3], c: f64) -> Result<Self, VarietyError> {
        let mut scale: f64 = c.abs();
        for i in 0..3 {
            scale = scale.max(b[i].abs());
            for j in 0..3 {
                scale = scale.max(a[i][j].abs());
            }
        }
        if scale == 0.0 {
            return Err(VarietyError::AllZero);
        }
        let mut sym = a;
        for i in 0..3 {
            for j in i + 1..3 {
                let skew = (a[i][j] - a[j][i]).abs();
                if skew > 1e-12 * scale {
                    return Err(VarietyError::NotSymmetric { skew });
                }
                let v = 0.5 * (a[i][j] + a[j][i]);
                sym[i][j] = v;
                sym[j][i] = v;
            }
        }
        Ok(QuadraticVariety { dim: 3, a: sym, b, c })
    }

    /// Circle |X| = radius: P = -X1^2 - X2^2 + radius^2.
    pub fn circle(radius: f64) -> Self {
        QuadraticVariety::new2([[1.0, 0.0], [0.0, 1.0]], [0.0, 0.0], radius * radius)
            .expect("valid circle polynomial")
    }

    /// Sphere |X| = radius in R^3.
    pub fn sphere(radius: f64) -> Self {
        let eye = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        QuadraticVariety::new3(eye, [0.0; 3], radius * radius).expect("valid sphere polynomial")
    }

    /// The parabola X1 + X2^2 = 0, i.e. P = -X1 - X2^2.
    pub fn parabola() -> Self {
        QuadraticVariety::new2([[0.0, 0.0], [0.0, 1.0]], [-1.0, 0.0], 0.0)
            .expect("valid parabola polynomial")
    }

    /// Product of two lines through the origin at the given direction angles.
    pub fn line_pair(angle1: f64, angle2: f64) -> Self {
        let (s1, c1) = angle1.sin_cos();
        let (s2, c2) = angle2.sin_cos();
        // (-s1 X + c1 Y)(-s2 X + c2 Y) = s1 s2 X^2 - (s1 c2 + s2 c1) XY + c1 c2 Y^2
        let a = [
            [-s1 * s2, 0.5 * (s1 * c2 + s2 * c1)],
            [0.5 * (s1 * c2 + s2 * c1), -c1 * c2],
        ];
        QuadraticVariety::new2(a, [0.0, 0.0], 0.0).expect("valid line pair polynomial")
    }

    /// The wave pair Delta_+- : (X2 - X1)(X2 + X1), i.e. P = -X1^2 + X2^2.
    pub fn wave_pair() -> Self {
        QuadraticVariety::new2([[1.0, 0.0], [0.0, -1.0]], [0.0, 0.0], 0.0)
            .expect("valid wave polynomial")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix2(&self) -> [[f64; 2]; 2] {
        [[self.a[0][0], self.a[0][1]], [self.a[1][0], self.a[1][1]]]
    }

    pub fn linear2(&self) -> [f64; 2] {
        [self.b[0], self.b[1]]
    }

    pub fn constant(&self) -> f64 {
        self.c
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let n = self.dim;
        let mut quad = 0.0;
        let mut lin = 0.0;
        for i in 0..n {
            lin += self.b[i] * x[i];
            for j in 0..n {
                quad += self.a[i][j] * x[i] * x[j];
            }
        }
        -quad + lin + self.c
    }

    pub fn eval2(&self, p: Point) -> f64 {
        self.eval(&[p.x, p.y])
    }

    pub fn gradient2(&self, p: Point) -> Point {
        let gx = -2.0 * (self.a[0][0] * p.x + self.a[0][1] * p.y) + self.b[0];
        let gy = -2.0 * (self.a[1][0] * p.x + self.a[1][1] * p.y) + self.b[1];
        Point::new(gx, gy)
    }

    fn scale(&self) -> f64 {
        let mut s: f64 = self.c.abs();
        for i in 0..self.dim {
            s = s.max(self.b[i].abs());
            for j in 0..self.dim {
                s = s.max(self.a[i][j].abs());
            }
        }
        s
    }

    /// Apply an orthogonal change of coordinates X -> R X (2D).
    pub fn rotated2(&self, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        let r = [[c, -s], [s, c]];
        // A' = R^T A R, b' = R^T b
        let a = self.matrix2();
        let mut a2 = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = 0.0;
                for k in 0..2 {
                    for l in 0..2 {
                        acc += r[k][i] * a[k][l] * r[l][j];
                    }
                }
                a2[i][j] = acc;
            }
        }
        let b2 = [
            r[0][0] * self.b[0] + r[1][0] * self.b[1],
            r[0][1] * self.b[0] + r[1][1] * self.b[1],
        ];
        // enforce exact symmetry against rounding
        let m = 0.5 * (a2[0][1] + a2[1][0]);
        QuadraticVariety::new2([[a2[0][0], m], [m, a2[1][1]]], b2, self.c)
            .expect("rotation preserves validity")
    }
}

fn coeff_scale2(a: &[[f64; 2]; 2], b: &[f64; 2], c: f64) -> f64 {
    let mut s: f64 = c.abs();
    for bi in b {
        s = s.max(bi.abs());
    }
    for row in a {
        for v in row {
            s = s.max(v.abs());
        }
    }
    s
}

/// Eigen-decomposition of a symmetric 2x2 matrix: eigenvalues and the
/// rotation angle of the eigenbasis.
fn sym_eigen2(a: [[f64; 2]; 2]) -> (f64, f64, f64) {
    let tr = a[0][0] + a[1][1];
    let diff = a[0][0] - a[1][1];
    let disc = (diff * diff + 4.0 * a[0][1] * a[0][1]).sqrt();
    let l1 = 0.5 * (tr + disc);
    let l2 = 0.5 * (tr - disc);
    let phi = 0.5 * (2.0 * a[0][1]).atan2(diff);
    (l1, l2, phi)
}

fn basis_from_angle(phi: f64) -> (Point, Point) {
    let e1 = Point::new(phi.cos(), phi.sin());
    (e1, e1.perp())
}

fn normalize_line_angle(angle: f64) -> f64 {
    let mut a = angle.rem_euclid(std::f64::consts::PI);
    if a >= std::f64::consts::PI {
        a -= std::f64::consts::PI;
    }
    a
}

/// Standard conic/quadric classification via the spectral data of A and
/// translation reduction. Radius is reported for circles and spheres.
pub fn classify(p: &QuadraticVariety) -> Result<VarietyClass, VarietyError> {
    let scale = p.scale();
    let tol = 1e-10 * scale;
    if p.dim == 3 {
        return classify3(p, tol);
    }
    let a = p.matrix2();
    let b = Point::new(p.b[0], p.b[1]);
    let a_scale = a.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
    if a_scale <= tol {
        // degree <= 1
        if b.norm() <= tol {
            return Ok(VarietyClass::EmptyReal); // nonzero constant
        }
        let n = b.normalize();
        let x0 = n * (-p.c / b.norm());
        let angle = normalize_line_angle(n.perp().angle());
        return Ok(VarietyClass::SingleLine { line: Line { angle, offset: x0.dot(line_normal(angle)) } });
    }
    let (l1, l2, phi) = sym_eigen2(a);
    let (e1, e2) = basis_from_angle(phi);
    if l1.abs() > tol && l2.abs() > tol {
        // full rank: center x0 with 2 A x0 = b, P(x0 + y) = -y^T A y + ct
        let det = l1 * l2;
        let center = solve2(a, Point::new(b.x / 2.0, b.y / 2.0));
        let ct = p.c + 0.5 * b.dot(center);
        if det > 0.0 {
            let sigma = l1.signum();
            let rhs = sigma * ct;
            if rhs > tol {
                let r1 = (ct / l1).sqrt();
                let r2 = (ct / l2).sqrt();
                if (l1 - l2).abs() <= 1e-9 * l1.abs().max(l2.abs()) {
                    return Ok(VarietyClass::Circle { radius: r1.max(r2), center });
                }
                return Ok(VarietyClass::Ellipse { semi_axes: (r1, r2), center, angle: phi });
            } else if rhs >= -tol {
                return Ok(VarietyClass::SinglePoint { center });
            }
            return Ok(VarietyClass::EmptyReal);
        }
        // indefinite
        if ct.abs() <= tol {
            // crossing line pair: l1 u^2 + l2 v^2 = 0, slopes +- sqrt(-l1/l2)
            let m = (-l1 / l2).sqrt();
            let d1 = e1 + e2 * m;
            let d2 = e1 - e2 * m;
            let ang1 = normalize_line_angle(d1.angle());
            let ang2 = normalize_line_angle(d2.angle());
            let lines = [
                Line { angle: ang1, offset: center.dot(line_normal(ang1)) },
                Line { angle: ang2, offset: center.dot(line_normal(ang2)) },
            ];
            let mut between = (ang1 - ang2).abs();
            if between > std::f64::consts::FRAC_PI_2 {
                between = std::f64::consts::PI - between;
            }
            return Ok(VarietyClass::LinePair { angle_between: between, lines });
        }
        // hyperbola: orient so the first axis is the transverse one
        let (lt, ln, axis) = if ct / l1 > 0.0 { (l1, l2, phi) } else { (l2, l1, phi + std::f64::consts::FRAC_PI_2) };
        let sa = ((ct / lt).sqrt(), (-ct / ln).sqrt());
        return Ok(VarietyClass::Hyperbola { semi_axes: sa, center, angle: axis });
    }
    // rank one: order eigenpairs so l1 is the nonzero one
    let (l1, e1, e2) = if l1.abs() > l2.abs() { (l1, e1, e2) } else { (l2, e2, e1 * -1.0) };
    let beta1 = b.dot(e1);
    let beta2 = b.dot(e2);
    if beta2.abs() > tol {
        // parabola: -l1 u^2 + beta1 u + beta2 v + c = 0
        let u_star = beta1 / (2.0 * l1);
        let v_star = -(p.c + beta1 * beta1 / (4.0 * l1) - l1 * u_star * u_star - beta1 * u_star) / beta2;
        // simplify: at u = u_star the residual is r = -l1 u*^2 + beta1 u* + c; v* = -r/beta2
        let r = -l1 * u_star * u_star + beta1 * u_star + p.c;
        let vertex = e1 * u_star + e2 * (-r / beta2);
        let _ = v_star;
        let axis_angle = e2.angle();
        return Ok(VarietyClass::Parabola { vertex, axis_angle });
    }
    // parallel lines / double line / empty: -l1 u^2 + beta1 u + c = 0
    let disc = beta1 * beta1 + 4.0 * l1 * p.c;
    if disc.abs() <= tol * tol.max(1.0) {
        let u0 = beta1 / (2.0 * l1);
        let angle = normalize_line_angle(e2.angle());
        let line = Line { angle, offset: (e1 * u0).dot(line_normal(angle)) };
        return Ok(VarietyClass::SingleLine { line });
    }
    if disc > 0.0 {
        let sq = disc.sqrt();
        let u1 = (beta1 + sq) / (2.0 * l1);
        let u2 = (beta1 - sq) / (2.0 * l1);
        let angle = normalize_line_angle(e2.angle());
        let lines = [
            Line { angle, offset: (e1 * u1).dot(line_normal(angle)) },
            Line { angle, offset: (e1 * u2).dot(line_normal(angle)) },
        ];
        return Ok(VarietyClass::LinePair { angle_between: 0.0, lines });
    }
    Ok(VarietyClass::EmptyReal)
}

fn line_normal(angle: f64) -> Point {
    Point::new(angle.cos(), angle.sin()).perp()
}

fn solve2(a: [[f64; 2]; 2], rhs: Point) -> Point {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Point::new(
        (rhs.x * a[1][1] - rhs.y * a[0][1]) / det,
        (a[0][0] * rhs.y - a[1][0] * rhs.x) / det,
    )
}

fn classify3(p: &QuadraticVariety, tol: f64) -> Result<VarietyClass, VarietyError> {
    let lam = (p.a[0][0] + p.a[1][1] + p.a[2][2]) / 3.0;
    for i in 0..3 {
        for j in 0..3 {
            let target = if i == j { lam } else { 0.0 };
            if (p.a[i][j] - target).abs() > tol.max(1e-12) {
                return Err(VarietyError::NonRadial3D);
            }
        }
    }
    if lam.abs() <= tol {
        return Err(VarietyError::NonRadial3D);
    }
    let center = [p.b[0] / (2.0 * lam), p.b[1] / (2.0 * lam), p.b[2] / (2.0 * lam)];
    let ct = p.c + 0.5 * (p.b[0] * center[0] + p.b[1] * center[1] + p.b[2] * center[2]);
    let r2 = ct / lam;
    if r2 > tol {
        Ok(VarietyClass::Sphere { radius: r2.sqrt(), center })
    } else if r2 >= -tol {
        Ok(VarietyClass::SinglePoint3 { center })
    } else {
        Ok(VarietyClass::EmptyReal)
    }
}

/// False exactly when P is a nonzero scalar multiple of the square of a real
/// affine form.
pub fn is_square_free(p: &QuadraticVariety) -> Result<bool, VarietyError> {
    let scale = p.scale();
    let tol = 1e-10 * scale;
    if p.dim == 3 {
        // radial quadrics with lambda != 0 are irreducible; degree <= 1 is square-free
        classify3(p, tol).map(|_| true)
    } else {
        let a = p.matrix2();
        let a_scale = a.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
        if a_scale <= tol {
            return Ok(true); // degree <= 1
        }
        let (l1, l2, phi) = sym_eigen2(a);
        if l1.abs() > tol && l2.abs() > tol {
            return Ok(true); // irreducible conic or two distinct lines
        }
        let (l1, e1, e2) = {
            let (e1, e2) = basis_from_angle(phi);
            if l1.abs() > l2.abs() {
                (l1, e1, e2)
            } else {
                (l2, e2, e1 * -1.0)
            }
        };
        let b = Point::new(p.b[0], p.b[1]);
        if b.dot(e2).abs() > tol {
            return Ok(true); // parabola
        }
        let beta1 = b.dot(e1);
        let disc = beta1 * beta1 + 4.0 * l1 * p.c;
        Ok(disc.abs() > tol * tol.max(1.0))
    }
}

/// Hypothesis (i) second half: a coordinate direction in which the top-degree
/// coefficient is a nonzero constant. Coordinate axes are tried first, then
/// seeded random rotations.
pub fn leading_direction(p: &QuadraticVariety, seed: u64) -> Option<Point> {
    let scale = p.scale();
    let tol = 1e-9 * scale;
    let a = p.matrix2();
    let a_scale = a.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
    let quad_coeff = |e: Point| e.x * (a[0][0] * e.x + a[0][1] * e.y) + e.y * (a[1][0] * e.x + a[1][1] * e.y);
    if a_scale <= tol {
        // degree one: the leading coefficient in direction e is b . e
        let b = Point::new(p.b[0], p.b[1]);
        if b.norm() <= tol {
            return None;
        }
        for e in [Point::new(1.0, 0.0), Point::new(0.0, 1.0)] {
            if b.dot(e).abs() > tol {
                return Some(e);
            }
        }
        return Some(b.normalize());
    }
    for e in [Point::new(1.0, 0.0), Point::new(0.0, 1.0)] {
        if quad_coeff(e).abs() > tol {
            return Some(e);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let e = Point::new(phi.cos(), phi.sin());
        if quad_coeff(e).abs() > tol {
            return Some(e);
        }
    }
    None
}

/// Per-component smooth-real-point report for hypothesis (ii).
#[derive(Clone, Debug)]
pub struct ComponentReport {
    /// Every irreducible component of Z(P) over C is cut out by a real polynomial.
    pub components_are_real: bool,
    /// One refined smooth real point per component, where one exists.
    pub points: Vec<Point>,
    /// True iff every component carries a smooth real point.
    pub all_components_smooth: bool,
}

/// A smooth real point of Z_R(P), or None when the real zero set is empty or
/// consists of singular points only.
pub fn smooth_real_point(p: &QuadraticVariety) -> Result<Option<Point>, VarietyError> {
    let report = component_smooth_points(p)?;
    Ok(report.points.first().copied().filter(|_| report.all_components_smooth))
}

pub fn component_smooth_points(p: &QuadraticVariety) -> Result<ComponentReport, VarietyError> {
    if p.dim == 3 {
        let class = classify(p)?;
        return Ok(match class {
            VarietyClass::Sphere { radius, center } => {
                // report the projection of one smooth point; 3D points are not Point-typed
                let _ = (radius, center);
                ComponentReport { components_are_real: true, points: vec![], all_components_smooth: true }
            }
            VarietyClass::SinglePoint3 { .. } => ComponentReport {
                components_are_real: false,
                points: vec![],
                all_components_smooth: false,
            },
            _ => ComponentReport { components_are_real: true, points: vec![], all_components_smooth: false },
        });
    }
    let class = classify(p)?;
    let refine = |x: Point| refine_zero(p, x);
    let check = |x: Point| p.gradient2(x).norm() > 1e-8;
    let mk = |points: Vec<Point>, real: bool| {
        let ok = !points.is_empty() && points.iter().all(|&x| check(x) && p.eval2(x).abs() <= 1e-12);
        ComponentReport { components_are_real: real, points, all_components_smooth: ok && real }
    };
    Ok(match class {
        VarietyClass::EmptyReal => ComponentReport {
            // the conic -y^T A y + ct with ct != 0 is irreducible over C and
            // real-defined; complex parallel line pairs are not
            components_are_real: empty_real_components_are_real(p),
            points: vec![],
            all_components_smooth: false,
        },
        VarietyClass::SinglePoint { .. } => ComponentReport {
            // X1^2 + X2^2 = (X1 + iX2)(X1 - iX2): conjugate non-real lines
            components_are_real: false,
            points: vec![],
            all_components_smooth: false,
        },
        VarietyClass::Circle { radius, center } => mk(vec![refine(center + Point::new(radius, 0.0))], true),
        VarietyClass::Ellipse { semi_axes, center, angle } => {
            mk(vec![refine(center + Point::new(semi_axes.0, 0.0).rotate(angle))], true)
        }
        VarietyClass::Parabola { vertex, .. } => mk(vec![refine(vertex)], true),
        VarietyClass::Hyperbola { semi_axes, center, angle } => mk(
            vec![
                refine(center + Point::new(semi_axes.0, 0.0).rotate(angle)),
                refine(center - Point::new(semi_axes.0, 0.0).rotate(angle)),
            ],
            true,
        ),
        VarietyClass::LinePair { lines, .. } => {
            // one smooth point per line, away from any crossing
            let pts = lines.iter().map(|l| refine(l.point_at(1.0))).collect::<Vec<_>>();
            let pts = pts
                .into_iter()
                .enumerate()
                .map(|(i, x)| if check(x) { x } else { refine(lines[i].point_at(2.5)) })
                .collect();
            mk(pts, true)
        }
        VarietyClass::SingleLine { line } => {
            let x = refine(line.point_at(1.0));
            if check(x) {
                mk(vec![x], true)
            } else {
                // double line: every real point is singular
                ComponentReport { components_are_real: true, points: vec![], all_components_smooth: false }
            }
        }
        VarietyClass::Sphere { .. } | VarietyClass::SinglePoint3 { .. } => unreachable!("dim 2"),
    })
}

fn empty_real_components_are_real(p: &QuadraticVariety) -> bool {
    // rank-1 case with negative discriminant factors into conjugate non-real
    // parallel lines; definite full-rank conics stay irreducible over C
    let a = p.matrix2();
    let (l1, l2, _) = sym_eigen2(a);
    let tol = 1e-10 * p.scale();
    !(l1.abs() > tol) || !(l2.abs() > tol)
}

fn refine_zero(p: &QuadraticVariety, mut x: Point) -> Point {
    for _ in 0..50 {
        let f = p.eval2(x);
        if f.abs() <= 1e-14 {
            break;
        }
        let g = p.gradient2(x);
        let g2 = g.norm_sq();
        if g2 < 1e-30 {
            break;
        }
        x = x - g * (f / g2);
    }
    x
}

/// Deterministic sample of `count` points of Z_R(P), spread over each
/// component by its natural parameterization.
pub fn sample_real_zeros(
    p: &QuadraticVariety,
    count: usize,
    seed: u64,
) -> Result<Vec<Point>, VarietyError> {
    assert!(count >= 1);
    if p.dim != 2 {
        return Err(VarietyError::Sample3D);
    }
    let class = classify(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = Vec::with_capacity(count);
    let mut stratified = |n: usize, lo: f64, hi: f64, rng: &mut ChaCha8Rng| -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * ((i as f64 + rng.gen_range(0.0..1.0)) / n as f64))
            .collect()
    };
    match class {
        VarietyClass::EmptyReal => return Err(VarietyError::EmptyRealVariety),
        VarietyClass::SinglePoint { center } => {
            pts = vec![center; count];
        }
        VarietyClass::Circle { radius, center } => {
            for th in stratified(count, 0.0, std::f64::consts::TAU, &mut rng) {
                pts.push(center + Point::new(radius * th.cos(), radius * th.sin()));
            }
        }
        VarietyClass::Ellipse { semi_axes, center, angle } => {
            for th in stratified(count, 0.0, std::f64::consts::TAU, &mut rng) {
                pts.push(center + Point::new(semi_axes.0 * th.cos(), semi_axes.1 * th.sin()).rotate(angle));
            }
        }
        VarietyClass::Parabola { .. } => {
            // walk the graph coordinate of the axis frame
            let a = p.matrix2();
            let (l1, l2, phi) = sym_eigen2(a);
            let (e1, e2) = basis_from_angle(phi);
            let (l1, e1, e2) = if l1.abs() > l2.abs() { (l1, e1, e2) } else { (l2, e2, e1 * -1.0) };
            let b = Point::new(p.b[0], p.b[1]);
            let beta1 = b.dot(e1);
            let beta2 = b.dot(e2);
            for u in stratified(count, -10.0, 10.0, &mut rng) {
                let v = (l1 * u * u - beta1 * u - p.c) / beta2;
                pts.push(e1 * u + e2 * v);
            }
        }
        VarietyClass::Hyperbola { semi_axes, center, angle } => {
            let per_branch = count.div_ceil(2);
            for (bi, sgn) in [1.0f64, -1.0].iter().enumerate() {
                let n = if bi == 0 { per_branch } else { count - per_branch };
                for t in stratified(n, -3.0, 3.0, &mut rng) {
                    let u = sgn * semi_axes.0 * t.cosh();
                    let v = semi_axes.1 * t.sinh();
                    pts.push(center + Point::new(u, v).rotate(angle));
                }
            }
        }
        VarietyClass::LinePair { lines, .. } => {
            let per = count.div_ceil(2);
            for (i, line) in lines.iter().enumerate() {
                let n = if i == 0 { per } else { count - per };
                for t in stratified(n, -10.0, 10.0, &mut rng) {
                    pts.push(line.point_at(t));
                }
            }
        }
        VarietyClass::SingleLine { line } => {
            for t in stratified(count, -10.0, 10.0, &mut rng) {
                pts.push(line.point_at(t));
            }
        }
        VarietyClass::Sphere { .. } | VarietyClass::SinglePoint3 { .. } => unreachable!("dim 2"),
    }
    for x in pts.iter_mut() {
        *x = refine_zero(p, *x);
    }
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_classification_reports_radius() {
        let p = QuadraticVariety::new2([[1.0, 0.0], [0.0, 1.0]], [0.0, 0.0], 4.0).unwrap();
        match classify(&p).unwrap() {
            VarietyClass::Circle { radius, center } => {
                assert!((radius - 2.0).abs() < 1e-12);
                assert!(center.norm() < 1e-12);
            }
            other => panic!("expected circle, got {other:?}"),
        }
    }

    #[test]
    fn paper_parabola_classifies() {
        let p = QuadraticVariety::parabola();
        match classify(&p).unwrap() {
            VarietyClass::Parabola { vertex, .. } => assert!(vertex.norm() < 1e-12),
            other => panic!("expected parabola, got {other:?}"),
        }
    }

    #[test]
    fn wave_polynomial_is_a_right_angle_line_pair() {
        let p = QuadraticVariety::wave_pair();
        match classify(&p).unwrap() {
            VarietyClass::LinePair { angle_between, lines } => {
                assert!((angle_between - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
                for l in lines {
                    assert!(p.eval2(l.point_at(1.3)).abs() < 1e-12);
                }
            }
            other => panic!("expected line pair, got {other:?}"),
        }
    }

    #[test]
    fn line_pair_constructor_hits_both_lines() {
        let rho = std::f64::consts::PI / 3.0;
        let p = QuadraticVariety::line_pair(0.0, rho);
        for t in [-2.0, 0.5, 3.0] {
            assert!(p.eval2(Point::new(t, 0.0)).abs() < 1e-12);
            assert!(p.eval2(Point::new(t * rho.cos(), t * rho.sin())).abs() < 1e-12);
        }
        match classify(&p).unwrap() {
            VarietyClass::LinePair { angle_between, .. } => {
                assert!((angle_between - rho).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn square_free_predicate() {
        assert!(is_square_free(&QuadraticVariety::wave_pair()).unwrap());
        assert!(is_square_free(&QuadraticVariety::parabola()).unwrap());
        // (X1 + X2)^2: A = -[[1,1],[1,1]]
        let sq = QuadraticVariety::new2([[-1.0, -1.0], [-1.0, -1.0]], [0.0, 0.0], 0.0).unwrap();
        assert!(!is_square_free(&sq).unwrap());
    }

    #[test]
    fn randomized_squares_are_detected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (al, be, ga): (f64, f64, f64) =
                (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            if al.abs() + be.abs() < 0.1 {
                continue;
            }
            // s (al x + be y + ga)^2 as a quadratic
            let s: f64 = if rng.gen_bool(0.5) { 1.7 } else { -0.4 };
            let a = [[-s * al * al, -s * al * be], [-s * al * be, -s * be * be]];
            let b = [2.0 * s * ga * al, 2.0 * s * ga * be];
            let c = s * ga * ga;
            let p = QuadraticVariety::new2(a, b, c).unwrap();
            assert!(!is_square_free(&p).unwrap(), "missed square ({al},{be},{ga})");
        }
    }

    #[test]
    fn smooth_points_per_class() {
        // circle radius 2: a point with nonzero gradient
        let p = QuadraticVariety::circle(2.0);
        let x = smooth_real_point(&p).unwrap().unwrap();
        assert!(p.eval2(x).abs() <= 1e-12 && p.gradient2(x).norm() > 1e-8);
        // -X1^2 - X2^2: only singular origin
        let q = QuadraticVariety::new2([[1.0, 0.0], [0.0, 1.0]], [0.0, 0.0], 0.0).unwrap();
        assert!(smooth_real_point(&q).unwrap().is_none());
        let rep = component_smooth_points(&q).unwrap();
        assert!(!rep.components_are_real);
        // line pair: one smooth point per line
        let rep = component_smooth_points(&QuadraticVariety::wave_pair()).unwrap();
        assert_eq!(rep.points.len(), 2);
        assert!(rep.all_components_smooth);
        // parabola passes
        assert!(smooth_real_point(&QuadraticVariety::parabola()).unwrap().is_some());
    }

    #[test]
    fn sampling_lands_on_the_variety() {
        let cases = [
            QuadraticVariety::circle(2.0),
            QuadraticVariety::parabola(),
            QuadraticVariety::wave_pair(),
            QuadraticVariety::line_pair(0.0, 1.1),
        ];
        for p in &cases {
            let pts = sample_real_zeros(p, 17, 42).unwrap();
            assert_eq!(pts.len(), 17);
            for x in &pts {
                assert!(p.eval2(*x).abs() <= 1e-12, "residual {}", p.eval2(*x));
            }
        }
        // determinism
        let a = sample_real_zeros(&cases[0], 8, 5).unwrap();
        let b = sample_real_zeros(&cases[0], 8, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn circle_samples_have_norm_two() {
        let pts = sample_real_zeros(&QuadraticVariety::circle(2.0), 4, 1).unwrap();
        for x in pts {
            assert!((x.norm() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn parabola_samples_satisfy_graph_relation() {
        let pts = sample_real_zeros(&QuadraticVariety::parabola(), 9, 3).unwrap();
        for x in pts {
            assert!((x.x + x.y * x.y).abs() < 1e-11, "{x:?}");
        }
    }

    #[test]
    fn classification_is_rotation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let cases = [
            QuadraticVariety::circle(1.5),
            QuadraticVariety::parabola(),
            QuadraticVariety::wave_pair(),
            QuadraticVariety::new2([[2.0, 0.3], [0.3, 1.0]], [0.4, -0.2], 3.0).unwrap(),
        ];
        for p in &cases {
            let base = classify(p).unwrap();
            for _ in 0..100 {
                let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                let rot = classify(&p.rotated2(phi)).unwrap();
                assert_eq!(
                    std::mem::discriminant(&base),
                    std::mem::discriminant(&rot),
                    "{base:?} vs {rot:?} at phi={phi}"
                );
            }
        }
    }

    #[test]
    fn sphere_and_nonradial_3d() {
        let s = QuadraticVariety::sphere(2.0);
        match classify(&s).unwrap() {
            VarietyClass::Sphere { radius, .. } => assert!((radius - 2.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        let mut a = [[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 1.0]];
        a[1][1] = 2.0;
        let q = QuadraticVariety::new3(a, [0.0; 3], 1.0).unwrap();
        assert!(matches!(classify(&q), Err(VarietyError::NonRadial3D)));
    }

    #[test]
    fn leading_direction_exists_for_cross_term_only_matrix() {
        // A = [[0,1],[1,0]]: both axes give zero pure-square coefficient
        let p = QuadraticVariety::new2([[0.0, 1.0], [1.0, 0.0]], [0.0, 0.0], 1.0).unwrap();
        let e = leading_direction(&p, 0).expect("rotated direction exists");
        let a = p.matrix2();
        let q = e.x * (a[0][0] * e.x + a[0][1] * e.y) + e.y * (a[1][0] * e.x + a[1][1] * e.y);
        assert!(q.abs() > 1e-9);
    }
}

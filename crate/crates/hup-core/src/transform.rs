//! Fourier–Stieltjes transforms of densities carried by curves, and the
//! sampled vanishing predicate on candidate sets Lambda.

use crate::geometry::{CurveClass, CurvePiece, GeometryError, ParamCurve, Point};
use crate::interp::CubicSpline;
use num_complex::Complex64;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum TransformError {
    #[error("quadrature refinement diverges: estimates {prev} and {last}")]
    Divergent { prev: String, last: String },
    #[error("Lambda sample set is empty")]
    EmptyLambda,
    #[error("relative tolerance must lie in (0, 1), got {0}")]
    BadTolerance(f64),
    #[error("density scale underflows but tabulated values are nonzero (max |g| = {max_abs})")]
    ZeroScale { max_abs: f64 },
    #[error("operation needs the unit circle as host curve")]
    NotUnitCircle,
    #[error("tabulated rule length {got} does not match value count {expected}")]
    TableMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Integrability/regularity tag of a density.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum Regularity {
    L1,
    Lp(f64),
    C1,
    C2,
}

impl Regularity {
    /// Partial order used by the potential evaluators' gates.
    pub fn at_least(&self, required: Regularity) -> bool {
        let rank = |r: &Regularity| match r {
            Regularity::L1 => 0,
            Regularity::Lp(_) => 1,
            Regularity::C1 => 2,
            Regularity::C2 => 3,
        };
        match (self, required) {
            (Regularity::Lp(p), Regularity::Lp(q)) => *p >= q,
            (a, b) => rank(a) >= rank(&b),
        }
    }
}

type RuleFn = Arc<dyn Fn(f64, Point) -> Complex64 + Send + Sync>;

#[derive(Clone)]
enum Rule {
    Function(RuleFn),
    Tabulated { re: CubicSpline, im: CubicSpline },
}

/// A complex density on a curve: a closed-form rule of the curve parameter
/// and point, or tabulated values interpolated by cubic splines.
#[derive(Clone)]
pub struct Density {
    curve: ParamCurve,
    rule: Rule,
    regularity: Regularity,
}

impl std::fmt::Debug for Density {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Density")
            .field("regularity", &self.regularity)
            .field("pieces", &self.curve.pieces().len())
            .finish()
    }
}

impl Density {
    pub fn from_fn<F>(curve: ParamCurve, regularity: Regularity, f: F) -> Self
    where
        F: Fn(f64, Point) -> Complex64 + Send + Sync + 'static,
    {
        Density { curve, rule: Rule::Function(Arc::new(f)), regularity }
    }

    /// Tabulated density at uniform global parameters over one period.
    pub fn from_table(
        curve: ParamCurve,
        regularity: Regularity,
        values: Vec<Complex64>,
    ) -> Result<Self, TransformError> {
        let n = values.len();
        if n < 4 {
            return Err(TransformError::TableMismatch { got: n, expected: 4 });
        }
        let period = curve.period();
        // periodic closure: repeat the first sample at t = period
        let ts: Vec<f64> = (0..=n).map(|i| period * i as f64 / n as f64).collect();
        let mut re: Vec<f64> = values.iter().map(|v| v.re).collect();
        let mut im: Vec<f64> = values.iter().map(|v| v.im).collect();
        re.push(re[0]);
        im.push(im[0]);
        let mismatch = |_| TransformError::TableMismatch { got: n, expected: n + 1 };
        let re = CubicSpline::natural(ts.clone(), re).map_err(mismatch)?;
        let im = CubicSpline::natural(ts, im).map_err(mismatch)?;
        Ok(Density { curve, rule: Rule::Tabulated { re, im }, regularity })
    }

    /// Constant density.
    pub fn constant(curve: ParamCurve, value: Complex64) -> Self {
        Density::from_fn(curve, Regularity::C2, move |_, _| value)
    }

    pub fn curve(&self) -> &ParamCurve {
        &self.curve
    }

    pub fn regularity(&self) -> Regularity {
        self.regularity
    }

    /// Evaluate at global curve parameter t.
    pub fn eval(&self, t: f64) -> Complex64 {
        let p = self.curve.point(t);
        self.eval_at(t, p)
    }

    pub fn eval_at(&self, t: f64, p: Point) -> Complex64 {
        match &self.rule {
            Rule::Function(f) => f(t, p),
            Rule::Tabulated { re, im } => {
                let u = t.rem_euclid(self.curve.period());
                Complex64::new(re.eval(u), im.eval(u))
            }
        }
    }

    /// The reference scale int_Gamma |g| dsigma.
    pub fn scale(&self) -> f64 {
        self.curve
            .arc_quadrature_param(|t, p| Complex64::new(self.eval_at(t, p).norm(), 0.0), 192)
            .map(|v| v.re)
            .unwrap_or(f64::NAN)
    }

    /// Integrate g . w over the curve with the given nodes per piece.
    pub fn integrate_against<W>(&self, w: W, nodes: usize) -> Result<Complex64, TransformError>
    where
        W: Fn(Point) -> Complex64,
    {
        Ok(self.curve.arc_quadrature_param(|t, p| self.eval_at(t, p) * w(p), nodes)?)
    }
}

/// Report of a sampled vanishing test.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TransformReport {
    pub schema_version: u32,
    pub lambda: Vec<Point>,
    pub values_re: Vec<f64>,
    pub values_im: Vec<f64>,
    pub max_abs: f64,
    pub min_abs: f64,
    pub scale: f64,
    pub nodes_used: usize,
    pub tol_rel: f64,
    pub verdict: bool,
}

/// ghat(lambda) = int_Gamma e^{-i lambda . x} g(x) dsigma(x).
///
/// Node counts double until two successive evaluations agree to 1e-10
/// relative to the density scale.
pub fn fourier_stieltjes(g: &Density, lambda: Point, nodes: usize) -> Result<Complex64, TransformError> {
    let (v, _) = fourier_stieltjes_refined(g, lambda, nodes)?;
    Ok(v)
}

fn fourier_stieltjes_refined(
    g: &Density,
    lambda: Point,
    nodes: usize,
) -> Result<(Complex64, usize), TransformError> {
    let tol = 1e-10 * (1.0 + g.scale());
    let mut n = nodes.max(8);
    let eval = |n: usize| -> Result<Complex64, TransformError> {
        Ok(g.curve.arc_quadrature_param(
            |t, p| {
                let phase = -lambda.dot(p);
                g.eval_at(t, p) * Complex64::from_polar(1.0, phase)
            },
            n,
        )?)
    };
    let mut prev = eval(n)?;
    let mut prev_diff = f64::INFINITY;
    for _ in 0..8 {
        let n2 = n * 2;
        let next = eval(n2)?;
        let diff = (next - prev).norm();
        if diff <= tol {
            return Ok((next, n2));
        }
        if diff > prev_diff * 4.0 && diff > 1000.0 * tol {
            return Err(TransformError::Divergent { prev: format!("{prev}"), last: format!("{next}") });
        }
        prev = next;
        prev_diff = diff;
        n = n2;
    }
    Ok((prev, n))
}

/// ghat along complex frequencies (used by the Paley–Wiener growth probe).
pub fn fourier_stieltjes_complex(
    g: &Density,
    lambda: [Complex64; 2],
    nodes: usize,
) -> Result<Complex64, TransformError> {
    Ok(g.curve().arc_quadrature_param(
        |t, p| {
            let phase = lambda[0] * p.x + lambda[1] * p.y;
            let arg = Complex64::new(0.0, -1.0) * phase;
            g.eval_at(t, p) * arg.exp()
        },
        nodes.max(64),
    )?)
}

/// Sampled vanishing test: true iff max |ghat| over Lambda <= tol_rel * scale.
pub fn vanishes_on(
    g: &Density,
    lambda_set: &[Point],
    tol_rel: f64,
) -> Result<TransformReport, TransformError> {
    if lambda_set.is_empty() {
        return Err(TransformError::EmptyLambda);
    }
    if !(tol_rel > 0.0 && tol_rel < 1.0) {
        return Err(TransformError::BadTolerance(tol_rel));
    }
    let scale = g.scale();
    if scale <= 1e-300 {
        // a tabulated zero-scale density with nonzero samples is contradictory
        let max_abs = (0..256)
            .map(|k| g.eval(g.curve.period() * k as f64 / 256.0).norm())
            .fold(0.0f64, f64::max);
        if max_abs > 0.0 {
            return Err(TransformError::ZeroScale { max_abs });
        }
    }
    let mut values_re = Vec::with_capacity(lambda_set.len());
    let mut values_im = Vec::with_capacity(lambda_set.len());
    let mut max_abs = 0.0f64;
    let mut min_abs = f64::INFINITY;
    let mut nodes_used = 0;
    for &lam in lambda_set {
        let (v, n) = fourier_stieltjes_refined(g, lam, 32)?;
        values_re.push(v.re);
        values_im.push(v.im);
        max_abs = max_abs.max(v.norm());
        min_abs = min_abs.min(v.norm());
        nodes_used = nodes_used.max(n);
    }
    let verdict = max_abs <= tol_rel * scale;
    Ok(TransformReport {
        schema_version: 1,
        lambda: lambda_set.to_vec(),
        values_re,
        values_im,
        max_abs,
        min_abs,
        scale,
        nodes_used,
        tol_rel,
        verdict,
    })
}

/// Trapezoid Fourier coefficients a_n = (1/2pi) int g(e^{i theta}) e^{-in theta} d theta
/// for densities on the unit circle, n = -max_n ..= max_n.
pub fn fourier_coefficients(g: &Density, max_n: usize) -> Result<Vec<Complex64>, TransformError> {
    if !is_unit_circle(g.curve()) {
        return Err(TransformError::NotUnitCircle);
    }
    let n_grid = (8 * max_n).max(512);
    let mut samples = Vec::with_capacity(n_grid);
    for j in 0..n_grid {
        let t = j as f64 / n_grid as f64; // parameter = theta / 2pi
        samples.push(g.eval(t));
    }
    let mut coeffs = Vec::with_capacity(2 * max_n + 1);
    for n in -(max_n as i64)..=(max_n as i64) {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, s) in samples.iter().enumerate() {
            let th = std::f64::consts::TAU * j as f64 / n_grid as f64;
            acc += s * Complex64::from_polar(1.0, -(n as f64) * th);
        }
        coeffs.push(acc / n_grid as f64);
    }
    Ok(coeffs)
}

pub fn is_unit_circle(curve: &ParamCurve) -> bool {
    if curve.pieces().len() != 1 {
        return false;
    }
    matches!(
        curve.pieces()[0],
        CurvePiece::CircleArc { center, radius, .. }
            if center.norm() < 1e-14 && (radius - 1.0).abs() < 1e-14
    ) && curve.class() == CurveClass::StrictlyConvexC2
}

/// Helper: the unit circle curve.
pub fn unit_circle() -> ParamCurve {
    ParamCurve::circle(Point::ORIGIN, 1.0)
}

/// Density g(e^{i theta}) given as a closed form of theta on the unit circle.
pub fn circle_density<F>(regularity: Regularity, f: F) -> Density
where
    F: Fn(f64) -> Complex64 + Send + Sync + 'static,
{
    Density::from_fn(unit_circle(), regularity, move |t, _| f(std::f64::consts::TAU * t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{bessel_j, bessel_j_zeros};

    fn const_one() -> Density {
        Density::constant(unit_circle(), Complex64::new(1.0, 0.0))
    }

    #[test]
    fn transform_of_unit_density_is_bessel() {
        // ghat(lambda) = 2 pi J0(|lambda|) on the unit circle
        let g = const_one();
        for &r in &[0.5, 1.0, 2.0, 7.3] {
            let v = fourier_stieltjes(&g, Point::new(r, 0.0), 64).unwrap();
            let expected = std::f64::consts::TAU * bessel_j(0, r);
            assert!((v.re - expected).abs() < 1e-10, "r={r}: {} vs {expected}", v.re);
            assert!(v.im.abs() < 1e-10);
            // rotation invariance of the constant density
            let w = fourier_stieltjes(&g, Point::new(0.0, r), 64).unwrap();
            assert!((w - v).norm() < 1e-10);
        }
    }

    #[test]
    fn transform_at_zero_is_total_mass() {
        let g = const_one();
        let v = fourier_stieltjes(&g, Point::ORIGIN, 16).unwrap();
        assert!((v.re - std::f64::consts::TAU).abs() < 1e-12);
    }

    #[test]
    fn first_harmonic_gives_j1() {
        // g(e^{i theta}) = e^{i theta}: ghat((r,0)) = -2 pi i J1(r)
        let g = circle_density(Regularity::C2, |th| Complex64::from_polar(1.0, th));
        for &r in &[0.7, 2.0, 5.0] {
            let v = fourier_stieltjes(&g, Point::new(r, 0.0), 64).unwrap();
            let expected = Complex64::new(0.0, -std::f64::consts::TAU * bessel_j(1, r));
            assert!((v - expected).norm() < 1e-10, "r={r}: {v} vs {expected}");
        }
    }

    #[test]
    fn eigen_vanishing_verdicts() {
        let j01 = bessel_j_zeros(0, 1).zero(1);
        let g = const_one();
        let ring = |r: f64| -> Vec<Point> {
            (0..64)
                .map(|k| {
                    let th = std::f64::consts::TAU * k as f64 / 64.0;
                    Point::new(r * th.cos(), r * th.sin())
                })
                .collect()
        };
        let rep = vanishes_on(&g, &ring(j01), 1e-8).unwrap();
        assert!(rep.verdict, "max |ghat| = {:.3e}", rep.max_abs);
        let rep2 = vanishes_on(&g, &ring(2.0), 1e-8).unwrap();
        assert!(!rep2.verdict);
        assert!(rep2.min_abs >= 1e-1, "min = {}", rep2.min_abs);
    }

    #[test]
    fn coefficients_pick_out_harmonics() {
        let g = circle_density(Regularity::C2, |th| Complex64::from_polar(1.0, 3.0 * th));
        let coeffs = fourier_coefficients(&g, 5).unwrap();
        for (i, c) in coeffs.iter().enumerate() {
            let n = i as i64 - 5;
            if n == 3 {
                assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            } else {
                assert!(c.norm() < 1e-12, "a_{n} = {c}");
            }
        }
        let one = const_one();
        let c0 = fourier_coefficients(&one, 2).unwrap()[2];
        assert!((c0.re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn conjugate_symmetry_for_real_densities() {
        let g = circle_density(Regularity::C2, |th| Complex64::new(1.0 + 0.5 * (2.0 * th).cos(), 0.0));
        for &lam in &[Point::new(1.3, -0.4), Point::new(0.2, 2.0), Point::new(-3.0, 0.7)] {
            let a = fourier_stieltjes(&g, lam, 64).unwrap();
            let b = fourier_stieltjes(&g, -lam, 64).unwrap();
            assert!((b - a.conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn translation_covariance() {
        // curve shifted by x0: ghat_shifted = e^{-i lambda . x0} ghat
        let x0 = Point::new(0.4, -0.9);
        let g = circle_density(Regularity::C2, |th| Complex64::new(th.cos() + 1.2, 0.3 * th.sin()));
        let shifted_curve = ParamCurve::circle(x0, 1.0);
        let gs = Density::from_fn(shifted_curve, Regularity::C2, move |t, _| {
            let th = std::f64::consts::TAU * t;
            Complex64::new(th.cos() + 1.2, 0.3 * th.sin())
        });
        for &lam in &[Point::new(1.0, 0.0), Point::new(-0.7, 2.1)] {
            let a = fourier_stieltjes(&g, lam, 64).unwrap();
            let b = fourier_stieltjes(&gs, lam, 64).unwrap();
            let expected = a * Complex64::from_polar(1.0, -lam.dot(x0));
            assert!((b - expected).norm() < 1e-10, "{b} vs {expected}");
        }
    }

    #[test]
    fn linear_map_phase_identity() {
        // lambda . x is preserved under x -> Tx, lambda -> (T^{-1})^T lambda
        let t_mat = [[1.3, 0.4], [-0.2, 0.9]];
        let det = t_mat[0][0] * t_mat[1][1] - t_mat[0][1] * t_mat[1][0];
        let inv_t = [
            [t_mat[1][1] / det, -t_mat[1][0] / det],
            [-t_mat[0][1] / det, t_mat[0][0] / det],
        ];
        for k in 0..32 {
            let th = std::f64::consts::TAU * k as f64 / 32.0;
            let x = Point::new(th.cos(), th.sin());
            let lam = Point::new(0.8, -1.7);
            let tx = Point::new(
                t_mat[0][0] * x.x + t_mat[0][1] * x.y,
                t_mat[1][0] * x.x + t_mat[1][1] * x.y,
            );
            // (T^{-1})^T lambda = rows of inv transposed applied to lambda
            let tl = Point::new(
                inv_t[0][0] * lam.x + inv_t[1][0] * lam.y,
                inv_t[0][1] * lam.x + inv_t[1][1] * lam.y,
            );
            assert!((tl.dot(tx) - lam.dot(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn entirety_growth_bound() {
        // |ghat(lambda)| <= scale * exp(H(Im lambda)) along a complex line
        let g = circle_density(Regularity::C2, |th| Complex64::new(1.0 + 0.3 * th.sin(), 0.0));
        let dom = crate::geometry::ConvexDomain::disk(Point::ORIGIN, 1.0).unwrap();
        let scale = g.scale();
        let dir = Point::new(0.6, 0.8);
        for k in 0..20 {
            let z_im = -2.0 + 4.0 * k as f64 / 19.0;
            let lam = [
                Complex64::new(1.0, z_im * dir.x),
                Complex64::new(-0.5, z_im * dir.y),
            ];
            let v = fourier_stieltjes_complex(&g, lam, 128).unwrap();
            let im_vec = Point::new(lam[0].im, lam[1].im);
            let bound = scale * dom.support_function(im_vec).exp();
            assert!(v.norm() <= bound * (1.0 + 1e-10), "{} vs {}", v.norm(), bound);
        }
    }

    #[test]
    fn tabulated_density_interpolates() {
        let n = 256;
        let vals: Vec<Complex64> = (0..n)
            .map(|j| {
                let th = std::f64::consts::TAU * j as f64 / n as f64;
                Complex64::new(th.sin(), 0.5 * (2.0 * th).cos())
            })
            .collect();
        let g = Density::from_table(unit_circle(), Regularity::C1, vals).unwrap();
        for &t in &[0.1, 0.37, 0.77] {
            let th = std::f64::consts::TAU * t;
            let expected = Complex64::new(th.sin(), 0.5 * (2.0 * th).cos());
            assert!((g.eval(t) - expected).norm() < 1e-6);
        }
    }

    #[test]
    fn vanishing_test_rejects_bad_inputs() {
        let g = const_one();
        assert!(matches!(vanishes_on(&g, &[], 1e-8), Err(TransformError::EmptyLambda)));
        assert!(matches!(
            vanishes_on(&g, &[Point::ORIGIN], 2.0),
            Err(TransformError::BadTolerance(_))
        ));
    }
}

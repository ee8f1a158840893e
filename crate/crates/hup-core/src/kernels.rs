//! Fundamental solutions for the Helmholtz, Schrödinger, wave and transport
//! operators, with a quadrature self-test of the defining delta identity.
//!
//! The Helmholtz kernels carry the constants that make the self-test return
//! phi(0) exactly: (Delta + c^2) [ Y0(c|x|)/4 ] = delta in 2D and
//! (Delta + c^2) [ -cos(c|x|)/(4 pi |x|) ] = delta in 3D. The Schrödinger and
//! wave kernels are used unnormalized; the transport kernel is distributional
//! and is exposed only through closed-form potentials.

use crate::gauss::{gauss_legendre, gl_integrate};
use crate::geometry::Point;
use crate::specfun::{bessel_y0, SpecFunError};
use num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum KernelError {
    #[error("kernel argument lies on the singular set: {0}")]
    SingularArgument(String),
    #[error("argument shape does not match the kernel: {0}")]
    ArgumentShape(String),
    #[error("transport kernels are distributional; use the closed-form potentials")]
    NotPointwise,
    #[error("normalization constants exist for the Helmholtz kinds only")]
    NoNormalization,
    #[error("3D self-test supports origin-centered radial bumps only")]
    Radial3DOnly,
    #[error("self-test quadrature did not converge: estimates {prev} and {last}")]
    SelfTestNoConvergence { prev: f64, last: f64 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Kernel kind plus its evaluation rule.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Kernel {
    Helmholtz2D { c1: f64 },
    Helmholtz3D { c1: f64 },
    Schrodinger1D,
    Wave1D,
    Transport { rho: f64 },
}

/// Argument of a kernel evaluation.
#[derive(Clone, Copy, Debug)]
pub enum KernelArg {
    Plane(Point),
    Space([f64; 3]),
    TimeSpace { t: f64, x: f64 },
}

impl Kernel {
    /// Pointwise kernel value off the singular set.
    pub fn eval(&self, arg: KernelArg) -> Result<Complex64, KernelError> {
        match (*self, arg) {
            (Kernel::Helmholtz2D { c1 }, KernelArg::Plane(p)) => {
                let r = p.norm();
                if r < 1e-300 {
                    return Err(KernelError::SingularArgument("origin of the Helmholtz kernel".into()));
                }
                Ok(Complex64::new(0.25 * bessel_y0(c1 * r)?, 0.0))
            }
            (Kernel::Helmholtz3D { c1 }, KernelArg::Space(v)) => {
                let r = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
                if r < 1e-300 {
                    return Err(KernelError::SingularArgument("origin of the Helmholtz kernel".into()));
                }
                Ok(Complex64::new(-(c1 * r).cos() / (4.0 * std::f64::consts::PI * r), 0.0))
            }
            (Kernel::Helmholtz3D { c1 }, KernelArg::Plane(p)) => {
                self_eval_3d_from_plane(c1, p)
            }
            (Kernel::Schrodinger1D, KernelArg::TimeSpace { t, x }) => {
                if t == 0.0 {
                    return Err(KernelError::SingularArgument("t = 0 line of the Schrödinger kernel".into()));
                }
                Ok(schrodinger_kernel(t, x))
            }
            (Kernel::Wave1D, KernelArg::TimeSpace { t, x }) => {
                // H(t) H(t - x) H(t + x); H(0) = 0
                let v = if t > 0.0 && t - x > 0.0 && t + x > 0.0 { 1.0 } else { 0.0 };
                Ok(Complex64::new(v, 0.0))
            }
            (Kernel::Transport { .. }, _) => Err(KernelError::NotPointwise),
            (k, a) => Err(KernelError::ArgumentShape(format!("{k:?} with {a:?}"))),
        }
    }

    /// Constant multiplying the raw radial profile (Y0(c|x|) in 2D,
    /// cos(c|x|)/|x| in 3D) so that the delta identity holds with value +1.
    pub fn normalization_constant(&self) -> Result<Complex64, KernelError> {
        match self {
            Kernel::Helmholtz2D { .. } => Ok(Complex64::new(0.25, 0.0)),
            Kernel::Helmholtz3D { .. } => Ok(Complex64::new(-1.0 / (4.0 * std::f64::consts::PI), 0.0)),
            _ => Err(KernelError::NoNormalization),
        }
    }
}

fn self_eval_3d_from_plane(c1: f64, p: Point) -> Result<Complex64, KernelError> {
    Kernel::Helmholtz3D { c1 }.eval(KernelArg::Space([p.x, p.y, 0.0]))
}

/// E1(t, x) = t^{-1/2} exp(i x^2 / (4t)) with sqrt(t) = -i sqrt(|t|) on t < 0.
pub fn schrodinger_kernel(t: f64, x: f64) -> Complex64 {
    if t > 0.0 {
        let phase = x * x / (4.0 * t);
        Complex64::from_polar(1.0, phase) / t.sqrt()
    } else {
        // 1/sqrt(t) = i / sqrt(|t|)
        let phase = -x * x / (4.0 * t.abs());
        Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, phase) / t.abs().sqrt()
    }
}

/// Smooth radial bump supported in the disk/ball of the given radius around
/// `center`: phi(x) = exp(1 - 1/(1 - |x-center|^2/R^2)), so phi(center) = 1.
#[derive(Clone, Copy, Debug)]
pub struct Bump {
    pub center: Point,
    pub radius: f64,
}

impl Bump {
    fn profile(s: f64) -> f64 {
        if s < 1.0 {
            (1.0 - 1.0 / (1.0 - s)).exp()
        } else {
            0.0
        }
    }

    fn profile_d1(s: f64) -> f64 {
        if s < 1.0 {
            -Self::profile(s) / ((1.0 - s) * (1.0 - s))
        } else {
            0.0
        }
    }

    fn profile_d2(s: f64) -> f64 {
        if s < 1.0 {
            let u = 1.0 - s;
            Self::profile(s) * (1.0 / u.powi(4) - 2.0 / u.powi(3))
        } else {
            0.0
        }
    }

    pub fn value(&self, p: Point) -> f64 {
        Self::profile((p - self.center).norm_sq() / (self.radius * self.radius))
    }

    /// Laplacian in n dimensions at distance r from the bump center.
    fn laplacian_radial(&self, r: f64, n: f64) -> f64 {
        let rr = self.radius * self.radius;
        let s = r * r / rr;
        let d1 = Self::profile_d1(s) * 2.0 * r / rr;
        let d2 = Self::profile_d2(s) * 4.0 * r * r / (rr * rr) + Self::profile_d1(s) * 2.0 / rr;
        if r < 1e-14 {
            n * (Self::profile_d2(0.0) * 0.0 + Self::profile_d1(0.0) * 2.0 / rr)
        } else {
            d2 + (n - 1.0) * d1 / r
        }
    }

    pub fn laplacian2(&self, p: Point) -> f64 {
        self.laplacian_radial((p - self.center).norm(), 2.0)
    }
}

/// Quadrature check of the delta identity: returns
/// int E(x) (Laplacian phi + c^2 phi)(x) dx, which must equal phi(0).
///
/// 2D uses polar panels around the kernel singularity with geometric radial
/// refinement; 3D requires a radial bump and reduces to a 1D integral.
pub fn check_fundamental(kernel: Kernel, bump: &Bump) -> Result<Complex64, KernelError> {
    match kernel {
        Kernel::Helmholtz2D { c1 } => check_fundamental_2d(c1, bump),
        Kernel::Helmholtz3D { c1 } => check_fundamental_3d(c1, bump),
        _ => Err(KernelError::ArgumentShape(
            "fundamental-solution self-test covers the Helmholtz kinds".into(),
        )),
    }
}

fn check_fundamental_2d(c1: f64, bump: &Bump) -> Result<Complex64, KernelError> {
    let r_max = bump.center.norm() + bump.radius + 1e-9;
    let mut prev = f64::NAN;
    for level in 0..12 {
        let n_theta = 128 << level.min(5);
        let gl_order = 10 + 2 * level.min(8);
        let value = polar_integral(c1, bump, r_max, n_theta, gl_order)?;
        if (value - prev).abs() <= 1e-6 * (1.0 + value.abs()) {
            return Ok(Complex64::new(value, 0.0));
        }
        prev = value;
        if level == 11 {
            let last = polar_integral(c1, bump, r_max, n_theta * 2, gl_order + 2)?;
            if (last - prev).abs() <= 1e-6 * (1.0 + last.abs()) {
                return Ok(Complex64::new(last, 0.0));
            }
            return Err(KernelError::SelfTestNoConvergence { prev, last });
        }
    }
    unreachable!()
}

fn polar_integral(
    c1: f64,
    bump: &Bump,
    r_max: f64,
    n_theta: usize,
    gl_order: usize,
) -> Result<f64, KernelError> {
    // angular average of (Lap phi + c^2 phi) on the circle of radius r
    let angular = |r: f64| -> f64 {
        let mut acc = 0.0;
        for j in 0..n_theta {
            let th = std::f64::consts::TAU * j as f64 / n_theta as f64;
            let p = Point::new(r * th.cos(), r * th.sin());
            acc += bump.laplacian2(p) + c1 * c1 * bump.value(p);
        }
        acc / n_theta as f64
    };
    // geometric radial panels absorb the log singularity at r = 0
    let mut total = 0.0;
    let mut hi = r_max;
    for _ in 0..52 {
        let lo = hi * 0.5;
        total += gl_integrate(lo, hi, gl_order, |r| {
            0.25 * bessel_y0(c1 * r).unwrap_or(f64::NAN) * angular(r) * std::f64::consts::TAU * r
        });
        hi = lo;
        if hi < 1e-14 * r_max {
            break;
        }
    }
    if !total.is_finite() {
        return Err(KernelError::SingularArgument("non-finite polar quadrature".into()));
    }
    Ok(total)
}

fn check_fundamental_3d(c1: f64, bump: &Bump) -> Result<Complex64, KernelError> {
    if bump.center.norm() > 1e-12 {
        return Err(KernelError::Radial3DOnly);
    }
    // E(r) * 4 pi r^2 = -cos(c r) r, entirely smooth
    let integrand = |r: f64| {
        let lap = bump.laplacian_radial(r, 3.0);
        let val = Bump::profile(r * r / (bump.radius * bump.radius));
        -(c1 * r).cos() * r * (lap + c1 * c1 * val)
    };
    let mut prev = f64::NAN;
    let mut n = 64;
    for _ in 0..12 {
        let panels = 8;
        let mut total = 0.0;
        for k in 0..panels {
            let a = bump.radius * k as f64 / panels as f64;
            let b = bump.radius * (k + 1) as f64 / panels as f64;
            total += gl_integrate(a, b, n, integrand);
        }
        if (total - prev).abs() <= 1e-7 * (1.0 + total.abs()) {
            return Ok(Complex64::new(total, 0.0));
        }
        prev = total;
        n *= 2;
    }
    Err(KernelError::SelfTestNoConvergence { prev, last: prev })
}

/// 5-point finite-difference residual of (Delta + c^2) applied to the kernel,
/// for the off-origin homogeneity checks.
pub fn helmholtz_residual_2d(c1: f64, p: Point, h: f64) -> f64 {
    let k = Kernel::Helmholtz2D { c1 };
    let e = |q: Point| k.eval(KernelArg::Plane(q)).map(|v| v.re).unwrap_or(f64::NAN);
    let lap = (e(Point::new(p.x + h, p.y))
        + e(Point::new(p.x - h, p.y))
        + e(Point::new(p.x, p.y + h))
        + e(Point::new(p.x, p.y - h))
        - 4.0 * e(p))
        / (h * h);
    lap + c1 * c1 * e(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_y0;

    #[test]
    fn helmholtz2d_matches_bessel_profile() {
        let k = Kernel::Helmholtz2D { c1: 1.0 };
        let v = k.eval(KernelArg::Plane(Point::new(1.0, 0.0))).unwrap();
        let expected = 0.25 * bessel_y0(1.0).unwrap();
        assert!((v.re - expected).abs() < 1e-14);
        assert!((expected - 0.022064241053896337).abs() < 1e-12);
        assert!(k.eval(KernelArg::Plane(Point::ORIGIN)).is_err());
    }

    #[test]
    fn wave_kernel_is_forward_cone_indicator() {
        let k = Kernel::Wave1D;
        let at = |t: f64, x: f64| k.eval(KernelArg::TimeSpace { t, x }).unwrap().re;
        assert_eq!(at(2.0, 1.0), 1.0);
        assert_eq!(at(1.0, 2.0), 0.0);
        // 10^4-point grid agreement with t > |x|
        for i in 0..100 {
            for j in 0..100 {
                let t = -2.5 + 5.0 * i as f64 / 99.0;
                let x = -2.5 + 5.0 * j as f64 / 99.0;
                let expected = if t > x.abs() { 1.0 } else { 0.0 };
                assert_eq!(at(t, x), expected, "t={t} x={x}");
            }
        }
    }

    #[test]
    fn schrodinger_kernel_values_and_branch() {
        let k = Kernel::Schrodinger1D;
        let v = k.eval(KernelArg::TimeSpace { t: 1.0, x: 0.0 }).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(k.eval(KernelArg::TimeSpace { t: 0.0, x: 1.0 }).is_err());
        // E(-t, x) = i conj(E(t, x)) for t > 0
        for &(t, x) in &[(0.7, 0.3), (2.0, 1.5), (0.1, -0.4)] {
            let plus = schrodinger_kernel(t, x);
            let minus = schrodinger_kernel(-t, x);
            let expected = Complex64::new(0.0, 1.0) * plus.conj();
            assert!((minus - expected).norm() < 1e-14, "t={t} x={x}");
        }
    }

    #[test]
    fn transport_kernel_is_not_pointwise() {
        let k = Kernel::Transport { rho: 0.4 };
        assert!(matches!(k.eval(KernelArg::Plane(Point::ORIGIN)), Err(KernelError::NotPointwise)));
    }

    #[test]
    fn normalization_constants() {
        let k2 = Kernel::Helmholtz2D { c1: 1.0 };
        assert!((k2.normalization_constant().unwrap().re - 0.25).abs() < 1e-15);
        let k3 = Kernel::Helmholtz3D { c1: 2.0 };
        let expected = -1.0 / (4.0 * std::f64::consts::PI);
        assert!((k3.normalization_constant().unwrap().re - expected).abs() < 1e-15);
        assert!(Kernel::Wave1D.normalization_constant().is_err());
    }

    #[test]
    fn kernel_scaling_is_linear_in_the_self_test() {
        // scaling E by s scales the integral by s: verified through the 3D
        // radial path which is cheap
        let c1 = 1.0;
        let bump = Bump { center: Point::ORIGIN, radius: 1.5 };
        let base = check_fundamental(Kernel::Helmholtz3D { c1 }, &bump).unwrap().re;
        // integral of (2E)(...) computed directly
        let integrand = |r: f64| {
            let lap = bump.laplacian_radial(r, 3.0);
            let val = Bump::profile(r * r / (bump.radius * bump.radius));
            2.0 * -(c1 * r).cos() * r * (lap + c1 * c1 * val)
        };
        let mut doubled = 0.0;
        for k in 0..8 {
            let a = bump.radius * k as f64 / 8.0;
            let b = bump.radius * (k + 1) as f64 / 8.0;
            doubled += gl_integrate(a, b, 256, integrand);
        }
        assert!((doubled - 2.0 * base).abs() < 1e-6, "{doubled} vs {}", 2.0 * base);
    }

    #[test]
    fn off_origin_pde_residual_is_small() {
        let c1 = 1.0;
        let h = 1e-4;
        for &r in &[0.5, 1.0, 2.0] {
            let p = Point::new(r, 0.0);
            let e = Kernel::Helmholtz2D { c1 }.eval(KernelArg::Plane(p)).unwrap().re;
            let res = helmholtz_residual_2d(c1, p, h);
            assert!(res.abs() <= 1e-4 * e.abs().max(1e-3), "r={r}: residual {res:.2e}");
        }
    }

    #[test]
    fn fundamental_check_2d_small() {
        // the acceptance suite runs the full-tolerance version; this is a
        // smoke test at looser tolerance
        let bump = Bump { center: Point::ORIGIN, radius: 1.0 };
        let v = check_fundamental(Kernel::Helmholtz2D { c1: 1.0 }, &bump).unwrap();
        assert!((v.re - 1.0).abs() < 1e-4, "{}", v.re);
    }

    #[test]
    fn fundamental_check_3d_radial() {
        let bump = Bump { center: Point::ORIGIN, radius: 2.0 };
        let v = check_fundamental(Kernel::Helmholtz3D { c1: 2.0 }, &bump).unwrap();
        assert!((v.re - 1.0).abs() < 1e-6, "{}", v.re);
        // shifted bumps are rejected in 3D
        let shifted = Bump { center: Point::new(0.5, 0.0), radius: 1.0 };
        assert!(matches!(
            check_fundamental(Kernel::Helmholtz3D { c1: 2.0 }, &shifted),
            Err(KernelError::Radial3DOnly)
        ));
    }

    #[test]
    fn fundamental_check_2d_shifted_bump_sifts_zero() {
        // bump with phi(0) = 0: integral must vanish
        let bump = Bump { center: Point::new(2.5, 0.0), radius: 1.0 };
        assert_eq!(bump.value(Point::ORIGIN), 0.0);
        let v = check_fundamental(Kernel::Helmholtz2D { c1: 1.0 }, &bump).unwrap();
        assert!(v.re.abs() < 1e-4, "{}", v.re);
    }
}

//! Oscillatory quadrature for Fresnel-type phases y^2 / eps.
//!
//! Panels are chosen so each one spans a bounded amount of phase, which keeps
//! a fixed-order Gauss rule accurate uniformly in eps. A panel-halving check
//! guards the result.

use crate::gauss::gauss_legendre;
use num_complex::Complex64;

use super::SpecFunError;

/// int_a^b exp(i sign y^2/eps) amp(y) dy with phase-equidistributed panels.
///
/// `max_phase` is the phase increment per panel (radians).
pub fn oscillatory_integral<F>(
    a: f64,
    b: f64,
    eps: f64,
    sign: f64,
    max_phase: f64,
    amp: &F,
) -> Result<Complex64, SpecFunError>
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    assert!(eps > 0.0 && max_phase > 0.0);
    if a >= b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut total = Complex64::new(0.0, 0.0);
    // split at the stationary point 0 when it is interior
    if a < 0.0 && b > 0.0 {
        total += half_line(0.0, -a, eps, sign, max_phase, &|y| amp(-y))?;
        total += half_line(0.0, b, eps, sign, max_phase, amp)?;
    } else if b <= 0.0 {
        total += half_line(-b, -a, eps, sign, max_phase, &|y| amp(-y))?;
    } else {
        total += half_line(a, b, eps, sign, max_phase, amp)?;
    }
    Ok(total)
}

/// Integral over 0 <= lo < hi with the phase increasing along the panel.
fn half_line<F>(
    lo: f64,
    hi: f64,
    eps: f64,
    sign: f64,
    max_phase: f64,
    amp: &F,
) -> Result<Complex64, SpecFunError>
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    let (nodes, weights) = gauss_legendre(12);
    let phase = |y: f64| y * y / eps;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut y0 = lo;
    let phi_end = phase(hi);
    while y0 < hi {
        let phi_next = (phase(y0) + max_phase).min(phi_end);
        let y1 = if phi_next >= phi_end { hi } else { (phi_next * eps).sqrt() };
        let mid = 0.5 * (y0 + y1);
        let half = 0.5 * (y1 - y0);
        for (x, w) in nodes.iter().zip(weights) {
            let y = mid + half * x;
            let a = amp(y);
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(SpecFunError::NonFiniteAmplitude { y });
            }
            let ph = sign * phase(y);
            acc += a * Complex64::new(ph.cos(), ph.sin()) * (w * half);
        }
        if y1 <= y0 {
            break;
        }
        y0 = y1;
    }
    Ok(acc)
}

/// (1/sqrt(pi eps)) int_a^b e^{i y^2/eps} amplitude(y) dy.
///
/// Panel phase is halved until two successive refinements agree to 1e-8;
/// a still-diverging refinement is reported with both estimates.
pub fn fresnel_quadrature<F>(a: f64, b: f64, eps: f64, amplitude: F) -> Result<Complex64, SpecFunError>
where
    F: Fn(f64) -> Complex64,
{
    if !(eps > 0.0) {
        return Err(SpecFunError::BadParameter(format!("eps must be positive, got {eps}")));
    }
    let norm = 1.0 / (std::f64::consts::PI * eps).sqrt();
    let mut phase = std::f64::consts::FRAC_PI_2;
    let mut prev = oscillatory_integral(a, b, eps, 1.0, phase, &amplitude)? * norm;
    for _ in 0..6 {
        phase *= 0.5;
        let next = oscillatory_integral(a, b, eps, 1.0, phase, &amplitude)? * norm;
        let diff = (next - prev).norm();
        if diff <= 1e-8 * (1.0 + next.norm()) {
            return Ok(next);
        }
        prev = next;
    }
    let check = oscillatory_integral(a, b, eps, 1.0, phase * 0.5, &amplitude)? * norm;
    if (check - prev).norm() <= 1e-8 * (1.0 + check.norm()) {
        Ok(check)
    } else {
        Err(SpecFunError::NoConvergence {
            last: format!("{prev}"),
            next: format!("{check}"),
        })
    }
}

/// Oscillatory tail F_s(R) = int_R^infty e^{i r} r^{-s} dr by the
/// integration-by-parts asymptotic series. Requires R >= 40 so the series
/// bottoms out below double precision before it turns.
pub fn exp_tail_integral(s: f64, r: f64) -> Complex64 {
    assert!(r >= 40.0, "tail integral needs R >= 40, got {r}");
    // F_s(R) = i e^{iR} sum_k (-i)^k (s)_k R^{-s-k}
    let e = Complex64::new(0.0, r.cos()) + Complex64::new(-r.sin(), 0.0); // i e^{iR}
    let mut term = Complex64::new(r.powf(-s), 0.0);
    let mut sum = term;
    let minus_i = Complex64::new(0.0, -1.0);
    let mut poch = 1.0;
    for k in 0..60 {
        poch = s + k as f64;
        let next = term * minus_i * (poch / r);
        if next.norm() >= term.norm() || next.norm() < 1e-19 * sum.norm().max(1e-300) {
            if next.norm() < term.norm() {
                sum += next;
            }
            break;
        }
        term = next;
        sum += term;
    }
    let _ = poch;
    e * sum
}

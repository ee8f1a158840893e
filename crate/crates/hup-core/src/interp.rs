//! Interpolation helpers: cubic Hermite pieces, natural cubic splines for
//! tabulated densities, and the Fritsch–Carlson monotone cubic used for
//! circle-map lifts.

/// Cubic Hermite evaluation on [x0, x1] with endpoint values/derivatives.
pub fn hermite(x: f64, x0: f64, x1: f64, f0: f64, f1: f64, d0: f64, d1: f64) -> f64 {
    let h = x1 - x0;
    let s = (x - x0) / h;
    let s2 = s * s;
    let s3 = s2 * s;
    let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    let h10 = s3 - 2.0 * s2 + s;
    let h01 = -2.0 * s3 + 3.0 * s2;
    let h11 = s3 - s2;
    h00 * f0 + h10 * h * d0 + h01 * f1 + h11 * h * d1
}

/// Derivative of [`hermite`] with respect to `x`.
pub fn hermite_deriv(x: f64, x0: f64, x1: f64, f0: f64, f1: f64, d0: f64, d1: f64) -> f64 {
    let h = x1 - x0;
    let s = (x - x0) / h;
    let s2 = s * s;
    let dh00 = (6.0 * s2 - 6.0 * s) / h;
    let dh10 = 3.0 * s2 - 4.0 * s + 1.0;
    let dh01 = (-6.0 * s2 + 6.0 * s) / h;
    let dh11 = 3.0 * s2 - 2.0 * s;
    dh00 * f0 + dh10 * d0 + dh01 * f1 + dh11 * d1
}

/// Second derivative of [`hermite`] with respect to `x`.
pub fn hermite_deriv2(x: f64, x0: f64, x1: f64, f0: f64, f1: f64, d0: f64, d1: f64) -> f64 {
    let h = x1 - x0;
    let s = (x - x0) / h;
    let d2h00 = (12.0 * s - 6.0) / (h * h);
    let d2h10 = (6.0 * s - 4.0) / h;
    let d2h01 = (-12.0 * s + 6.0) / (h * h);
    let d2h11 = (6.0 * s - 2.0) / h;
    d2h00 * f0 + d2h10 * d0 + d2h01 * f1 + d2h11 * d1
}

/// Natural cubic spline through (x_i, y_i), x strictly ascending.
#[derive(Clone, Debug)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    // second derivatives at the knots
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn natural(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self, String> {
        let n = xs.len();
        if n < 2 || ys.len() != n {
            return Err(format!("spline needs >= 2 knots, got {} / {}", n, ys.len()));
        }
        for w in xs.windows(2) {
            if w[1] <= w[0] {
                return Err(format!("spline knots not ascending near x = {}", w[0]));
            }
        }
        // Solve the tridiagonal system for second derivatives; natural BC m0 = mn = 0.
        let mut m = vec![0.0; n];
        if n > 2 {
            let dim = n - 2;
            let mut diag = vec![0.0; dim];
            let mut off_l = vec![0.0; dim];
            let mut off_u = vec![0.0; dim];
            let mut rhs = vec![0.0; dim];
            for i in 0..dim {
                let h0 = xs[i + 1] - xs[i];
                let h1 = xs[i + 2] - xs[i + 1];
                off_l[i] = h0;
                diag[i] = 2.0 * (h0 + h1);
                off_u[i] = h1;
                rhs[i] = 6.0 * ((ys[i + 2] - ys[i + 1]) / h1 - (ys[i + 1] - ys[i]) / h0);
            }
            // Thomas algorithm
            for i in 1..dim {
                let w = off_l[i] / diag[i - 1];
                diag[i] -= w * off_u[i - 1];
                rhs[i] -= w * rhs[i - 1];
            }
            m[dim] = rhs[dim - 1] / diag[dim - 1];
            for i in (0..dim - 1).rev() {
                m[i + 1] = (rhs[i] - off_u[i] * m[i + 2]) / diag[i];
            }
        }
        Ok(CubicSpline { xs, ys, m })
    }

    fn locate(&self, x: f64) -> usize {
        let n = self.xs.len();
        match self.xs.partition_point(|&k| k <= x) {
            0 => 0,
            i if i >= n => n - 2,
            i => i - 1,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let i = self.locate(x);
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let h = x1 - x0;
        let a = (x1 - x) / h;
        let b = (x - x0) / h;
        a * self.ys[i]
            + b * self.ys[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0
    }
}

/// Fritsch–Carlson slopes for monotone cubic interpolation on a uniform grid.
fn pchip_slopes(h: f64, values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut delta = vec![0.0; n - 1];
    for i in 0..n - 1 {
        delta[i] = (values[i + 1] - values[i]) / h;
    }
    let mut d = vec![0.0; n];
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for i in 1..n - 1 {
        if delta[i - 1] * delta[i] <= 0.0 {
            d[i] = 0.0;
        } else {
            // harmonic mean keeps the interpolant monotone
            d[i] = 2.0 * delta[i - 1] * delta[i] / (delta[i - 1] + delta[i]);
        }
    }
    // limit endpoint slopes
    for (i, di) in d.iter_mut().enumerate() {
        let dl = if i == 0 { delta[0] } else { delta[i - 1] };
        let dr = if i == n - 1 { delta[n - 2] } else { delta[i] };
        let bound = 3.0 * dl.abs().min(dr.abs());
        if di.abs() > bound {
            *di = di.signum() * bound;
        }
    }
    d
}

/// Monotone cubic interpolant of a degree-1 circle-map lift sampled on the
/// uniform grid theta_i = 2*pi*i/n, i = 0..n. Values must satisfy
/// F(theta + 2*pi) = F(theta) + 2*pi and be strictly increasing.
#[derive(Clone, Debug)]
pub struct MonotoneLift {
    n: usize,
    h: f64,
    values: Vec<f64>, // length n + 1, values[n] = values[0] + 2*pi
    slopes: Vec<f64>,
}

impl MonotoneLift {
    pub fn new(values: Vec<f64>) -> Result<Self, String> {
        let tau = std::f64::consts::TAU;
        let n = values.len() - 1;
        if n < 4 {
            return Err("lift needs at least 5 samples".into());
        }
        if (values[n] - values[0] - tau).abs() > 1e-9 {
            return Err(format!(
                "lift is not degree 1: F(2pi) - F(0) = {}",
                values[n] - values[0]
            ));
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(format!(
                    "lift samples not strictly increasing at index {} ({} -> {})",
                    i, w[0], w[1]
                ));
            }
        }
        let h = tau / n as f64;
        // Extend periodically for slope estimation at the seam.
        let mut ext = Vec::with_capacity(n + 3);
        ext.push(values[n - 1] - tau);
        ext.extend_from_slice(&values);
        ext.push(values[1] + tau);
        let slopes_ext = pchip_slopes(h, &ext);
        let slopes = slopes_ext[1..=n + 1].to_vec();
        Ok(MonotoneLift { n, h, values, slopes })
    }

    /// Evaluate the lift at any real x (degree-1 periodic extension).
    pub fn eval(&self, x: f64) -> f64 {
        let tau = std::f64::consts::TAU;
        let k = (x / tau).floor();
        let u = x - k * tau;
        let mut i = (u / self.h) as usize;
        if i >= self.n {
            i = self.n - 1;
        }
        let x0 = i as f64 * self.h;
        let x1 = x0 + self.h;
        hermite(u, x0, x1, self.values[i], self.values[i + 1], self.slopes[i], self.slopes[i + 1])
            + k * tau
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spline_reproduces_line() {
        let xs: Vec<f64> = (0..9).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x - 1.0).collect();
        let sp = CubicSpline::natural(xs, ys).unwrap();
        for &x in &[0.3, 2.7, 7.9] {
            assert!((sp.eval(x) - (2.0 * x - 1.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn spline_approximates_smooth_function() {
        let n = 200;
        let xs: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| (3.0 * x).sin()).collect();
        let sp = CubicSpline::natural(xs, ys).unwrap();
        for &x in &[0.11, 0.52, 0.93] {
            assert!((sp.eval(x) - (3.0f64 * x).sin()).abs() < 1e-7);
        }
    }

    #[test]
    fn monotone_lift_reproduces_rotation_exactly() {
        let tau = std::f64::consts::TAU;
        let n = 64;
        let alpha = 0.7;
        let values: Vec<f64> = (0..=n).map(|i| tau * i as f64 / n as f64 + alpha).collect();
        let lift = MonotoneLift::new(values).unwrap();
        for &x in &[0.0, 0.123, 3.9, -2.0, 17.0] {
            assert!((lift.eval(x) - (x + alpha)).abs() < 1e-12);
        }
    }

    #[test]
    fn monotone_lift_rejects_non_monotone_data() {
        let tau = std::f64::consts::TAU;
        let n = 16;
        let mut values: Vec<f64> = (0..=n).map(|i| tau * i as f64 / n as f64).collect();
        values[3] = values[4] + 0.1;
        assert!(MonotoneLift::new(values).is_err());
    }
}

//! Dirichlet spectra of -Laplace on disks and rectangles, the eigenvalue
//! membership predicate, and eigen-densities (normal derivatives of
//! Dirichlet eigenfunctions) on circles.

use crate::geometry::{ParamCurve, Point};
use crate::specfun::{bessel_j_deriv, bessel_j_zeros};
use crate::transform::{Density, Regularity};
use num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum SpectraError {
    #[error("spectrum table must extend beyond c^2 = {c_squared} (max entry {max_entry})")]
    InsufficientCoverage { c_squared: f64, max_entry: f64 },
    #[error("eigenvalue tolerance must satisfy 0 < tol <= 1, got {0}")]
    BadTolerance(f64),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

/// One eigenvalue with its mode label.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub m: u32,
    pub k: u32,
    pub family: &'static str,
}

/// Ascending Dirichlet spectrum with mode labels.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SpectrumTable {
    pub domain: String,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(|e| e.value)
    }

    pub fn max_entry(&self) -> f64 {
        self.entries.last().map(|e| e.value).unwrap_or(0.0)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("value,m,k,family\n");
        for e in &self.entries {
            s.push_str(&format!("{:.17e},{},{},{}\n", e.value, e.m, e.k, e.family));
        }
        s
    }
}

/// Disk of radius r: eigenvalues (j_{m,k}/r)^2 merged ascending. Each mode
/// (m, k) is listed once; modes with m >= 1 are doubly degenerate.
pub fn disk_spectrum(radius: f64, count: usize) -> Result<SpectrumTable, SpectraError> {
    if !(radius > 0.0) || count == 0 {
        return Err(SpectraError::BadParameter(format!("radius {radius}, count {count}")));
    }
    // Weyl-style initial bound, doubled until it encloses `count` modes
    let mut x_bound = (4.0 * count as f64 + 20.0).sqrt();
    loop {
        let mut entries = Vec::new();
        let mut m = 0u32;
        while (m as f64) < x_bound {
            let k_est = (((x_bound - m as f64) / 3.0).ceil() as usize + 2).max(1);
            let mut table = bessel_j_zeros(m, k_est);
            while table.zero(table.zeros().len()) <= x_bound {
                table = bessel_j_zeros(m, table.zeros().len() + 4);
            }
            let before = entries.len();
            for (i, &z) in table.zeros().iter().enumerate() {
                if z <= x_bound {
                    entries.push(SpectrumEntry {
                        value: (z / radius).powi(2),
                        m,
                        k: (i + 1) as u32,
                        family: "bessel",
                    });
                }
            }
            if entries.len() == before {
                break; // first zero of every higher order lies past the bound
            }
            m += 1;
        }
        if entries.len() >= count {
            entries.sort_by(|a, b| a.value.total_cmp(&b.value));
            entries.truncate(count);
            return Ok(SpectrumTable { domain: format!("disk r={radius}"), entries });
        }
        x_bound *= 1.5;
    }
}

/// Rectangle (0,T) x (0,L): eigenvalues pi^2 (m^2/T^2 + k^2/L^2).
pub fn rectangle_spectrum(t_len: f64, l_len: f64, count: usize) -> Result<SpectrumTable, SpectraError> {
    if !(t_len > 0.0 && l_len > 0.0) || count == 0 {
        return Err(SpectraError::BadParameter(format!("sides {t_len} x {l_len}, count {count}")));
    }
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    let nf = count as f64;
    let lambda_bound = pi2 * (nf * nf / (t_len * t_len) + 1.0 / (l_len * l_len));
    let m_max = (t_len * (lambda_bound / pi2).sqrt()).ceil() as u32 + 1;
    let k_max = (l_len * (lambda_bound / pi2).sqrt()).ceil() as u32 + 1;
    let mut entries = Vec::new();
    for m in 1..=m_max {
        for k in 1..=k_max {
            let v = pi2 * ((m as f64 / t_len).powi(2) + (k as f64 / l_len).powi(2));
            if v <= lambda_bound {
                entries.push(SpectrumEntry { value: v, m, k, family: "rectangle" });
            }
        }
    }
    entries.sort_by(|a, b| a.value.total_cmp(&b.value));
    entries.truncate(count);
    Ok(SpectrumTable { domain: format!("rectangle {t_len} x {l_len}"), entries })
}

/// Result of the eigenvalue membership test.
#[derive(Clone, Debug, serde::Serialize)]
pub struct EigenHit {
    pub is_eigenvalue: bool,
    pub nearest: SpectrumEntry,
    pub distance: f64,
}

/// True iff c^2 is within tol of a table entry; the nearest entry and its
/// distance are always reported. The table must cover past c^2.
pub fn is_eigenvalue(c_squared: f64, table: &SpectrumTable, tol: f64) -> Result<EigenHit, SpectraError> {
    if !(tol > 0.0 && tol <= 1.0) {
        return Err(SpectraError::BadTolerance(tol));
    }
    if table.max_entry() <= c_squared {
        return Err(SpectraError::InsufficientCoverage {
            c_squared,
            max_entry: table.max_entry(),
        });
    }
    let nearest = table
        .entries
        .iter()
        .min_by(|a, b| (a.value - c_squared).abs().total_cmp(&(b.value - c_squared).abs()))
        .expect("nonempty table")
        .clone();
    let distance = (nearest.value - c_squared).abs();
    Ok(EigenHit { is_eigenvalue: distance <= tol, nearest, distance })
}

/// Angular factor of a disk eigenfunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngularParity {
    Cos,
    Sin,
}

/// Normal derivative of the Dirichlet eigenfunction
/// u = J_m(j_{m,k} rho / r) {cos, sin}(m theta) on the circle rho = r:
/// g(theta) = (j_{m,k}/r) J_m'(j_{m,k}) {cos, sin}(m theta).
pub fn eigen_density(radius: f64, m: u32, k: u32, parity: AngularParity) -> Result<Density, SpectraError> {
    if !(radius > 0.0) || k == 0 {
        return Err(SpectraError::BadParameter(format!("radius {radius}, k {k}")));
    }
    let zero = bessel_j_zeros(m, k as usize).zero(k as usize);
    let amp = (zero / radius) * bessel_j_deriv(m, zero);
    let mf = m as f64;
    let curve = ParamCurve::circle(Point::ORIGIN, radius);
    Ok(Density::from_fn(curve, Regularity::C2, move |t, _| {
        let th = std::f64::consts::TAU * t;
        let angular = match parity {
            AngularParity::Cos => (mf * th).cos(),
            AngularParity::Sin => (mf * th).sin(),
        };
        Complex64::new(amp * angular, 0.0)
    }))
}

/// The eigenvalue associated with a disk mode.
pub fn disk_mode_eigenvalue(radius: f64, m: u32, k: u32) -> f64 {
    let zero = bessel_j_zeros(m, k as usize).zero(k as usize);
    (zero / radius).powi(2)
}

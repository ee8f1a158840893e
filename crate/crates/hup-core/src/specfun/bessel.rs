//! Bessel functions J_m, Y_0, Y_1 and tables of J-zeros.
//!
//! J_m combines the ascending power series (no cancellation when
//! x <= 2 sqrt(m+1)) with the periodic-trapezoid evaluation of Bessel's
//! integral J_m(x) = (1/2pi) int_0^{2pi} cos(m t - x sin t) dt, whose
//! equispaced sum converges superexponentially for entire periodic
//! integrands: the N-point error is essentially J_{N-m}(x). Y_0, Y_1 use
//! the ascending log series up to x = 14 and the Hankel asymptotic
//! expansion beyond, where the smallest term is ~ e^{-2x} < 7e-13.

use super::SpecFunError;

/// Euler-Mascheroni constant.
const EULER_GAMMA: f64 = 0.577215664901532860606512;

/// Bessel function of the first kind of integer order m >= 0.
///
/// Relative accuracy ~1e-13 for |x| <= 50 away from zeros; absolute
/// accuracy ~1e-14 near zeros.
pub fn bessel_j(m: u32, x: f64) -> f64 {
    let ax = x.abs();
    let sign = if x < 0.0 && m % 2 == 1 { -1.0 } else { 1.0 };
    let v = if ax <= 2.0 * ((m as f64) + 1.0).sqrt() {
        j_series(m, ax)
    } else {
        j_integral(m, ax)
    };
    sign * v
}

pub fn bessel_j0(x: f64) -> f64 {
    bessel_j(0, x)
}

pub fn bessel_j1(x: f64) -> f64 {
    bessel_j(1, x)
}

/// Derivative J_m'(x); uses J_0' = -J_1 and 2 J_m' = J_{m-1} - J_{m+1}.
pub fn bessel_j_deriv(m: u32, x: f64) -> f64 {
    if m == 0 {
        -bessel_j(1, x)
    } else {
        0.5 * (bessel_j(m - 1, x) - bessel_j(m + 1, x))
    }
}

fn j_series(m: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * x;
    // t0 = (x/2)^m / m!
    let mut term = 1.0;
    for k in 1..=m {
        term *= half / k as f64;
    }
    let q = half * half;
    let mut sum = term;
    for k in 1..400 {
        let kf = k as f64;
        term *= -q / (kf * (kf + m as f64));
        sum += term;
        if term.abs() <= 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

fn j_integral(m: u32, x: f64) -> f64 {
    // N large enough that J_{N-m}(x) is below double precision
    let need = 1.6 * x + m as f64 + 48.0;
    let n = ((need / 8.0).ceil() as usize) * 8;
    let mf = m as f64;
    let mut acc = 0.0;
    for j in 0..n {
        let th = std::f64::consts::TAU * j as f64 / n as f64;
        acc += (mf * th - x * th.sin()).cos();
    }
    acc / n as f64
}

/// Bessel function of the second kind, order 0, for x > 0.
pub fn bessel_y0(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(SpecFunError::YDomain { x });
    }
    Ok(if x <= 14.0 { y0_series(x) } else { y_asymptotic(0, x) })
}

/// Bessel function of the second kind, order 1, for x > 0.
pub fn bessel_y1(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(SpecFunError::YDomain { x });
    }
    Ok(if x <= 14.0 { y1_series(x) } else { y_asymptotic(1, x) })
}

/// Y_m for m in {0, 1}.
pub fn bessel_y(m: u32, x: f64) -> Result<f64, SpecFunError> {
    match m {
        0 => bessel_y0(x),
        1 => bessel_y1(x),
        _ => Err(SpecFunError::YOrder { m }),
    }
}

fn y0_series(x: f64) -> f64 {
    // Y0 = (2/pi)[(ln(x/2) + gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k (x/2)^{2k} / (k!)^2]
    let j0 = bessel_j(0, x);
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut hk = 0.0;
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        hk += 1.0 / kf;
        sum += sign * hk * term;
        sign = -sign;
        if hk * term <= 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    std::f64::consts::FRAC_2_PI * (((0.5 * x).ln() + EULER_GAMMA) * j0 + sum)
}

fn y1_series(x: f64) -> f64 {
    // Y1 = (2/pi)(ln(x/2) + gamma) J1 - 2/(pi x)
    //      - (1/pi) sum_{k>=0} (-1)^k (H_k + H_{k+1}) (x/2)^{2k+1} / (k! (k+1)!)
    let j1 = bessel_j(1, x);
    let half = 0.5 * x;
    let q = half * half;
    let mut u = half; // (x/2)^{2k+1}/(k!(k+1)!) at k = 0
    let mut hk = 0.0;
    let mut hk1 = 1.0;
    let mut sum = u * (hk + hk1);
    let mut sign = -1.0;
    for k in 1..200 {
        let kf = k as f64;
        u *= q / (kf * (kf + 1.0));
        hk += 1.0 / kf;
        hk1 += 1.0 / (kf + 1.0);
        sum += sign * (hk + hk1) * u;
        sign = -sign;
        if (hk + hk1) * u <= 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    std::f64::consts::FRAC_2_PI * ((half.ln() + EULER_GAMMA) * j1 - 1.0 / x)
        - sum / std::f64::consts::PI
}

/// Hankel asymptotic evaluation of Y_nu, nu in {0, 1}, for large x.
fn y_asymptotic(nu: u32, x: f64) -> f64 {
    let (p, q) = hankel_pq(nu, x);
    let omega = x - (2.0 * nu as f64 + 1.0) * std::f64::consts::FRAC_PI_4;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * omega.sin() + q * omega.cos())
}

/// P and Q series of the Hankel expansion, truncated at the smallest term.
fn hankel_pq(nu: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (nu as f64) * (nu as f64);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut c = 1.0; // running product term
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        c *= (mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (kf * 8.0 * x);
        let mag = c.abs();
        if mag >= prev {
            break; // smallest term reached; stop before the series diverges
        }
        prev = mag;
        match k % 4 {
            1 => q += c,
            2 => p -= c,
            3 => q -= c,
            _ => p += c,
        }
        if mag < 1e-18 {
            break;
        }
    }
    (p, q)
}

/// Ascending table of the first zeros of J_m.
#[derive(Clone, Debug)]
pub struct BesselZeroTable {
    order: u32,
    zeros: Vec<f64>,
}

impl BesselZeroTable {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    /// k-th zero j_{m,k}, 1-based.
    pub fn zero(&self, k: usize) -> f64 {
        self.zeros[k - 1]
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("m,k,zero\n");
        for (i, z) in self.zeros.iter().enumerate() {
            s.push_str(&format!("{},{},{:.17e}\n", self.order, i + 1, z));
        }
        s
    }
}

/// First `count` zeros of J_m by unit-interval sign bracketing and bisection.
pub fn bessel_j_zeros(m: u32, count: usize) -> BesselZeroTable {
    assert!(count >= 1, "need at least one zero");
    let mut zeros = Vec::with_capacity(count);
    let mut x = if m == 0 { 0.5 } else { m as f64 };
    let mut fx = bessel_j(m, x);
    while zeros.len() < count {
        let x_next = x + 1.0;
        let f_next = bessel_j(m, x_next);
        if fx == 0.0 {
            zeros.push(x);
        } else if fx * f_next < 0.0 {
            let (mut lo, mut hi) = (x, x_next);
            let mut flo = fx;
            while hi - lo > 1e-14 {
                let mid = 0.5 * (lo + hi);
                let fm = bessel_j(m, mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if flo * fm < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            let mut z = 0.5 * (lo + hi);
            // two Newton polish steps
            for _ in 0..2 {
                let d = bessel_j_deriv(m, z);
                if d.abs() > 1e-8 {
                    z -= bessel_j(m, z) / d;
                }
            }
            zeros.push(z);
        }
        x = x_next;
        fx = f_next;
    }
    let table = BesselZeroTable { order: m, zeros };
    debug_assert!(table.zeros.windows(2).all(|w| w[1] - w[0] > 1.0));
    debug_assert!(table.zeros.iter().all(|&z| bessel_j(m, z).abs() <= 1e-12));
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference values: 22-digit mpmath, frozen
    const JY_TABLE: &[(f64, f64, f64, f64, f64)] = &[
        (0.001, 0.99999975000001562, 0.0004999999375000026, -4.4714166113759233, -636.62216723113943),
        (0.01, 0.99997500015624957, 0.0049999375002604161, -3.005455637083646, -63.678596282060656),
        (0.1, 0.99750156206604003, 0.049937526036241998, -1.5342386513503668, -6.458951094702027),
        (0.5, 0.9384698072408129, 0.24226845767487389, -0.44451873350670656, -1.4714723926702431),
        (1.0, 0.76519768655796655, 0.44005058574493352, 0.088256964215676958, -0.78121282130028872),
        (2.0, 0.22389077914123567, 0.57672480775687339, 0.51037567264974512, -0.10703243154093755),
        (4.0, -0.39714980986384737, -0.066043328023549136, -0.016940739325064992, 0.39792571055710001),
        (5.0, -0.1775967713143383, -0.32757913759146522, -0.30851762524903378, 0.14786314339122684),
        (8.0, 0.17165080713755391, 0.23463634685391462, 0.22352148938756622, -0.15806046173124749),
        (10.0, -0.24593576445134834, 0.043472746168861437, 0.055671167283599391, 0.24901542420695388),
        (12.0, 0.047689310796833537, -0.22344710449062761, -0.22523731263436143, -0.057099218260896521),
        (13.9, 0.18357985545786967, 0.11652489036905633, 0.1098591894595265, -0.17975095106954834),
        (14.1, 0.15695287703260118, 0.14878435129739391, 0.14313622862254463, -0.15198133346781767),
        (16.0, -0.17489907398362918, 0.090397175661304186, 0.095810997080712403, 0.17797516893941686),
        (20.0, 0.16702466434058315, 0.066833124175850046, 0.062640596809383831, -0.1655116143625213),
        (30.0, -0.086367983581040211, -0.11875106261662294, -0.11729573168666403, 0.084425570661747235),
        (40.0, 0.0073668905842372896, 0.126038318037585, 0.12593641705826093, -0.0057935058215496329),
        (50.0, 0.055812327669251815, -0.097511828125175138, -0.098064995470077079, -0.056795668562014768),
    ];

    const JM_TABLE: &[(u32, f64, f64)] = &[
        (2, 1.0, 0.11490348493190048),
        (2, 10.0, 0.25463031368512062),
        (3, 2.0, 0.12894324947440205),
        (3, 30.0, 0.12921122875972498),
        (5, 4.0, 0.13208665604709827),
        (5, 20.0, 0.15116976798239497),
        (10, 8.0, 0.060767026774251156),
        (10, 12.0, 0.30047603527126931),
        (10, 40.0, 0.11938336278226095),
        (20, 15.0, 0.0073602340792234853),
        (20, 25.0, 0.051994049228303232),
        (20, 50.0, -0.11670435275957974),
        (40, 45.0, 0.126600621268202),
    ];

    #[test]
    fn j0_j1_match_reference_table() {
        for &(x, j0, j1, _, _) in JY_TABLE {
            let e0 = (bessel_j(0, x) - j0).abs();
            let e1 = (bessel_j(1, x) - j1).abs();
            assert!(e0 <= 1e-12 * j0.abs().max(1e-2), "J0({x}): err {e0:.2e}");
            assert!(e1 <= 1e-12 * j1.abs().max(1e-2), "J1({x}): err {e1:.2e}");
        }
    }

    #[test]
    fn y0_y1_match_reference_table() {
        for &(x, _, _, y0, y1) in JY_TABLE {
            let e0 = (bessel_y0(x).unwrap() - y0).abs();
            let e1 = (bessel_y1(x).unwrap() - y1).abs();
            assert!(e0 <= 1e-10 * y0.abs().max(1e-2), "Y0({x}): err {e0:.2e}");
            assert!(e1 <= 1e-10 * y1.abs().max(1e-2), "Y1({x}): err {e1:.2e}");
        }
    }

    #[test]
    fn higher_orders_match_reference_table() {
        for &(m, x, jm) in JM_TABLE {
            let e = (bessel_j(m, x) - jm).abs();
            assert!(e <= 1e-12 * jm.abs().max(1e-2), "J{m}({x}): err {e:.2e}");
        }
    }

    #[test]
    fn trivial_values_at_zero() {
        assert_eq!(bessel_j(0, 0.0), 1.0);
        assert_eq!(bessel_j(1, 0.0), 0.0);
        assert!(bessel_j(0, 2.404825557695773).abs() <= 1e-12);
    }

    #[test]
    fn y_rejects_nonpositive_arguments_and_high_orders() {
        assert!(bessel_y0(0.0).is_err());
        assert!(bessel_y1(-1.0).is_err());
        assert!(bessel_y(2, 1.0).is_err());
    }

    #[test]
    fn y0_small_x_log_law() {
        // Y0(x) ~ (2/pi) ln x + (2/pi)(gamma - ln 2) as x -> 0+
        let x = 1e-6;
        let diff = bessel_y0(x).unwrap() - std::f64::consts::FRAC_2_PI * x.ln();
        let expected = std::f64::consts::FRAC_2_PI * (EULER_GAMMA - std::f64::consts::LN_2);
        assert!((diff - expected).abs() < 1e-10, "{diff} vs {expected}");
        assert!(diff.abs() < 0.08);
    }

    #[test]
    fn wronskian_identity() {
        // J0(x) Y0'(x) - J0'(x) Y0(x) = 2/(pi x), with Y0' = -Y1, J0' = -J1
        for &x in &[1.0, 5.0, 20.0] {
            let w = bessel_j(1, x) * bessel_y0(x).unwrap() - bessel_j(0, x) * bessel_y1(x).unwrap();
            let exact = 2.0 / (std::f64::consts::PI * x);
            assert!((w - exact).abs() < 1e-10, "x={x}: {w} vs {exact}");
        }
    }

    #[test]
    fn three_term_recurrence() {
        for m in 1..=8u32 {
            for k in 1..20 {
                let x = 0.5 + k as f64 * 2.3;
                let lhs = bessel_j(m - 1, x) + bessel_j(m + 1, x);
                let rhs = 2.0 * m as f64 / x * bessel_j(m, x);
                assert!((lhs - rhs).abs() < 1e-10, "m={m} x={x}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let h = 1e-6;
        for &x in &[0.7, 3.3, 11.0] {
            let fd = (bessel_j(0, x + h) - bessel_j(0, x - h)) / (2.0 * h);
            assert!((fd - bessel_j_deriv(0, x)).abs() < 1e-6);
            assert!((bessel_j_deriv(0, x) + bessel_j(1, x)).abs() < 1e-13);
        }
    }

    #[test]
    fn first_zeros_match_bisection_oracle() {
        let table = bessel_j_zeros(0, 3);
        let expected = [2.404825557695773, 5.520078110286311, 8.653727912911012];
        for (z, e) in table.zeros().iter().zip(expected) {
            assert!((z - e).abs() < 1e-12, "{z} vs {e}");
        }
        let t1 = bessel_j_zeros(1, 2);
        assert!((t1.zero(1) - 3.831705970207512).abs() < 1e-12);
        assert!((t1.zero(2) - 7.015586669815619).abs() < 1e-12);
    }

    #[test]
    fn zeros_interlace() {
        let t0 = bessel_j_zeros(0, 6);
        let t1 = bessel_j_zeros(1, 6);
        for k in 0..5 {
            assert!(t0.zeros()[k] < t1.zeros()[k]);
            assert!(t1.zeros()[k] < t0.zeros()[k + 1]);
        }
    }

    #[test]
    fn zero_table_invariants() {
        for m in [0u32, 1, 2, 5] {
            let t = bessel_j_zeros(m, 5);
            for w in t.zeros().windows(2) {
                assert!(w[1] - w[0] > 1.0);
            }
            for &z in t.zeros() {
                assert!(bessel_j(m, z).abs() <= 1e-12);
                // sign change across a 1e-12 bracket
                assert!(bessel_j(m, z - 1e-12) * bessel_j(m, z + 1e-12) <= 0.0);
            }
        }
    }
}

//! Functional equations and kernel identities as grid checks with
//! machine-readable reports.
//!
//! Each check evaluates its points in parallel and reduces sequentially in
//! grid order, so reports are bit-identical across runs and thread counts.
//! Zeta and ξ values grow large away from the real axis (ξ_ℤ reaches ~10⁶ at
//! Im s = 10), so those checks measure |a − b|/max(1, |a|, |b|); kernel
//! checks, whose values are of order one, measure |a − b|.

use crate::heat::{
    circle_heat_kernel_periodized, circle_heat_kernel_spectral, padic_heat_kernel_series, padic_heat_kernel_shell,
    PAdicAbs,
};
use crate::mellin::{mellin_zeta, QuadratureSpec};
use crate::specialfn::is_prime;
use crate::zetas::{self, Route, ZetaSpace};
use crate::{ComplexScalar, Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

/// Grid points closer than this to a pole are skipped.
pub const POLE_RADIUS: f64 = 1e-3;

/// How a check compares its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// |a − b|
    Absolute,
    /// |a − b| / max(1, |a|, |b|)
    Scaled,
}

impl Metric {
    pub fn deviation(self, a: ComplexScalar, b: ComplexScalar) -> f64 {
        let diff = (a - b).norm();
        match self {
            Metric::Absolute => diff,
            Metric::Scaled => diff / 1f64.max(a.norm()).max(b.norm()),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Absolute => "absolute",
            Metric::Scaled => "scaled",
        })
    }
}

/// A point at which an identity was evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridPoint {
    S(ComplexScalar),
    PAdicS { p: u32, s: ComplexScalar },
    Kernel { t: f64, x: f64 },
    PAdicKernel { p: u32, valuation: i32, t: f64 },
    Nilsson { p: u32, valuation: i32, s: f64 },
}

impl GridPoint {
    fn key(&self) -> [f64; 4] {
        match *self {
            GridPoint::S(s) => [s.re, s.im, 0.0, 0.0],
            GridPoint::PAdicS { p, s } => [p as f64, s.re, s.im, 0.0],
            GridPoint::Kernel { t, x } => [t, x, 0.0, 0.0],
            GridPoint::PAdicKernel { p, valuation, t } => [p as f64, valuation as f64, t, 0.0],
            GridPoint::Nilsson { p, valuation, s } => [p as f64, valuation as f64, s, 0.0],
        }
    }

    /// Lexicographic order on the coordinates, used to break ties.
    pub fn lexicographic_cmp(&self, other: &Self) -> Ordering {
        self.key()
            .iter()
            .zip(other.key().iter())
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Named coordinates for serialization.
    pub fn coordinates(&self) -> Vec<(&'static str, f64)> {
        match *self {
            GridPoint::S(s) => vec![("re_s", s.re), ("im_s", s.im)],
            GridPoint::PAdicS { p, s } => vec![("p", p as f64), ("re_s", s.re), ("im_s", s.im)],
            GridPoint::Kernel { t, x } => vec![("t", t), ("x", x)],
            GridPoint::PAdicKernel { p, valuation, t } => vec![("p", p as f64), ("v", valuation as f64), ("t", t)],
            GridPoint::Nilsson { p, valuation, s } => vec![("p", p as f64), ("v", valuation as f64), ("s", s)],
        }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coordinates().iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub identity_name: String,
    pub grid_description: String,
    pub points_checked: usize,
    /// Points outside the identity's domain (pole neighbourhoods, series
    /// envelopes), reported rather than failed.
    pub skipped: usize,
    /// Largest deviation under `metric`.
    pub max_abs_deviation: f64,
    pub worst_point: GridPoint,
    pub metric: Metric,
    pub tolerance: f64,
    pub passed: bool,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}]: {} on {} points ({} skipped), max {} deviation {:.3e} at {} (tol {:.1e})",
            self.identity_name,
            self.grid_description,
            if self.passed { "PASS" } else { "FAIL" },
            self.points_checked,
            self.skipped,
            self.metric,
            self.max_abs_deviation,
            self.worst_point,
            self.tolerance
        )
    }
}

/// Evaluates `deviation` over `points` and reduces to a report. `None`
/// marks a skipped point.
fn run_check<F>(
    name: &str,
    description: String,
    points: Vec<GridPoint>,
    metric: Metric,
    tol: f64,
    deviation: F,
) -> Result<CheckReport>
where
    F: Fn(&GridPoint) -> Result<Option<f64>> + Sync,
{
    let results: Vec<Result<Option<f64>>> = points.par_iter().map(&deviation).collect();
    let mut worst: Option<(f64, GridPoint)> = None;
    let mut checked = 0;
    let mut skipped = 0;
    for (point, result) in points.iter().zip(results) {
        let Some(dev) = result? else {
            skipped += 1;
            continue;
        };
        checked += 1;
        // NaN counts as worst so that it can never pass silently
        let dev = if dev.is_nan() { f64::INFINITY } else { dev };
        let replace = match &worst {
            None => true,
            Some((w, wp)) => dev > *w || (dev == *w && point.lexicographic_cmp(wp).is_lt()),
        };
        if replace {
            worst = Some((dev, *point));
        }
    }
    let Some((max_dev, worst_point)) = worst else {
        return Err(Error::domain(
            "identities",
            format!("{name}: every grid point was skipped"),
        ));
    };
    Ok(CheckReport {
        identity_name: name.to_string(),
        grid_description: description,
        points_checked: checked,
        skipped,
        max_abs_deviation: max_dev,
        worst_point,
        metric,
        tolerance: tol,
        passed: max_dev <= tol,
    })
}

/// Re ∈ [re₀, re₁] × Im ∈ [im₀, im₁] with the given steps, Re major.
pub fn rectangular_grid(re: (f64, f64, f64), im: (f64, f64, f64)) -> Vec<ComplexScalar> {
    let steps = |(a, b, h): (f64, f64, f64)| ((b - a) / h + 1e-9).floor() as usize + 1;
    let (nr, ni) = (steps(re), steps(im));
    (0..nr)
        .flat_map(|i| (0..ni).map(move |j| ComplexScalar::new(re.0 + re.2 * i as f64, im.0 + im.2 * j as f64)))
        .collect()
}

/// Re s ∈ [−2, 3] step 1/4 × Im s ∈ [0, 10] step 1: 231 points.
pub fn default_xi_z_grid() -> Vec<ComplexScalar> {
    rectangular_grid((-2.0, 3.0, 0.25), (0.0, 10.0, 1.0))
}

/// `count` points drawn uniformly from [−2, 3] × [−2, 2].
pub fn random_grid(count: usize, seed: u64) -> Vec<ComplexScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| ComplexScalar::new(rng.random_range(-2.0..3.0), rng.random_range(-2.0..2.0)))
        .collect()
}

/// Re s ∈ [−1, 2] step 1/4 × Im s ∈ {0, 2, …, 20}, plus a point at the
/// first zero of ζ.
pub fn default_xi_circle_grid() -> Vec<ComplexScalar> {
    let mut g = rectangular_grid((-1.0, 2.0, 0.25), (0.0, 20.0, 2.0));
    g.push(ComplexScalar::new(0.5, 14.134725));
    g
}

pub const DEFAULT_POISSON_TIMES: [f64; 5] = [0.01, 0.05, 0.1, 0.5, 1.0];

/// x = 0, 0.1, …, 0.9.
pub fn default_poisson_positions() -> Vec<f64> {
    (0..10).map(|i| i as f64 / 10.0).collect()
}

pub const DEFAULT_PADIC_TIMES: [f64; 3] = [1e-4, 1e-3, 1e-2];
pub const DEFAULT_PADIC_VALUATIONS: [i32; 3] = [0, 1, 2];

fn describe(points: &[ComplexScalar]) -> String {
    let (lo_re, hi_re, lo_im, hi_im) = points.iter().fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(a, b, c, d), s| (a.min(s.re), b.max(s.re), c.min(s.im), d.max(s.im)),
    );
    format!(
        "{} points, Re s in [{lo_re}, {hi_re}], Im s in [{lo_im}, {hi_im}]",
        points.len()
    )
}

pub fn xi_z_deviation(s: ComplexScalar) -> f64 {
    Metric::Scaled.deviation(zetas::xi_z(s), zetas::xi_z(1.0 - s))
}

/// ξ_ℤ(s) = ξ_ℤ(1 − s).
pub fn check_xi_z(grid: &[ComplexScalar], tol: f64) -> Result<CheckReport> {
    run_check(
        "xi-z",
        describe(grid),
        grid.iter().map(|&s| GridPoint::S(s)).collect(),
        Metric::Scaled,
        tol,
        |p| match *p {
            GridPoint::S(s) => Ok(Some(xi_z_deviation(s))),
            _ => unreachable!(),
        },
    )
}

pub fn xi_circle_deviation(s: ComplexScalar) -> Result<Option<f64>> {
    if s.norm() < POLE_RADIUS || (s - 1.0).norm() < POLE_RADIUS {
        return Ok(None);
    }
    Ok(Some(
        Metric::Scaled.deviation(zetas::xi_circle(s)?, zetas::xi_circle(1.0 - s)?),
    ))
}

/// ξ(s) = ξ(1 − s) for ξ(s) = ½·2^s π^{s/2} Γ(s/2) ζ_{ℝ/ℤ}(s/2).
pub fn check_xi_circle(grid: &[ComplexScalar], tol: f64) -> Result<CheckReport> {
    run_check(
        "xi-circle",
        describe(grid),
        grid.iter().map(|&s| GridPoint::S(s)).collect(),
        Metric::Scaled,
        tol,
        |p| match *p {
            GridPoint::S(s) => xi_circle_deviation(s),
            _ => unreachable!(),
        },
    )
}

pub fn xi_p_deviation(p: u32, s: ComplexScalar) -> Result<Option<f64>> {
    // poles of ξ_p sit at s = 1/2 + iπk/ln p with k ≠ 0
    let spacing = PI / (p as f64).ln();
    let k = (s.im / spacing).round();
    if k != 0.0 && (s - ComplexScalar::new(0.5, k * spacing)).norm() < POLE_RADIUS {
        return Ok(None);
    }
    Ok(Some(
        Metric::Scaled.deviation(zetas::xi_p(p, s)?, zetas::xi_p(p, 1.0 - s)?),
    ))
}

/// ξ_p(s) = ξ_p(1 − s).
pub fn check_xi_p(p: u32, grid: &[ComplexScalar], tol: f64) -> Result<CheckReport> {
    if !is_prime(p as u64) {
        return Err(Error::domain("check_xi_p", format!("{p} is not prime")));
    }
    run_check(
        "xi-p",
        format!("p = {p}, {}", describe(grid)),
        grid.iter().map(|&s| GridPoint::PAdicS { p, s }).collect(),
        Metric::Scaled,
        tol,
        |pt| match *pt {
            GridPoint::PAdicS { p, s } => xi_p_deviation(p, s),
            _ => unreachable!(),
        },
    )
}

pub fn poisson_deviation(t: f64, x: f64) -> Result<f64> {
    let spectral = circle_heat_kernel_spectral(t, x)?;
    let periodized = circle_heat_kernel_periodized(t, x)?;
    Ok(Metric::Absolute.deviation(spectral, ComplexScalar::new(periodized, 0.0)))
}

/// The spectral and periodized circle heat kernels agree.
pub fn check_poisson_circle(t_list: &[f64], x_list: &[f64], tol: f64) -> Result<CheckReport> {
    let points = t_list
        .iter()
        .flat_map(|&t| x_list.iter().map(move |&x| GridPoint::Kernel { t, x }))
        .collect();
    run_check(
        "poisson",
        format!("t in {t_list:?} x {} positions", x_list.len()),
        points,
        Metric::Absolute,
        tol,
        |p| match *p {
            GridPoint::Kernel { t, x } => poisson_deviation(t, x).map(Some),
            _ => unreachable!(),
        },
    )
}

/// |shell − series| for the p-adic heat kernel, or None outside the series
/// envelope.
pub fn padic_kernel_deviation(p: u32, valuation: i32, t: f64) -> Result<Option<f64>> {
    let x = PAdicAbs::new(p, valuation)?;
    match padic_heat_kernel_series(p, x, t) {
        Ok(series) => {
            let shell = padic_heat_kernel_shell(p, Some(x), t)?;
            Ok(Some((series - shell).abs()))
        }
        Err(Error::Convergence(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The shell and power-series forms of the p-adic heat kernel agree.
pub fn check_padic_kernels(primes: &[u32], valuations: &[i32], t_list: &[f64], tol: f64) -> Result<CheckReport> {
    let points = primes
        .iter()
        .flat_map(|&p| {
            valuations
                .iter()
                .flat_map(move |&valuation| t_list.iter().map(move |&t| GridPoint::PAdicKernel { p, valuation, t }))
        })
        .collect();
    run_check(
        "padic-kernels",
        format!("p in {primes:?}, v in {valuations:?}, t in {t_list:?}"),
        points,
        Metric::Absolute,
        tol,
        |pt| match *pt {
            GridPoint::PAdicKernel { p, valuation, t } => padic_kernel_deviation(p, valuation, t),
            _ => unreachable!(),
        },
    )
}

/// Both sides of the Laplace-transformed p-adic kernel identity at
/// |x|_p = p^{−v}:
/// (1/(s|x|)) Σ_m (−1)^m (1−p^{2m}) / ((1−p^{−2m−1}) s^m |x|^{2m}) and
/// Σ_{k ≥ −v} (p²−1) p^k / ((1+p^{2k}s)(p²+p^{2k}s)).
pub fn nilsson_sides(p: u32, valuation: i32, s: f64) -> Result<(f64, f64)> {
    const F: &str = "check_nilsson_identity";
    let x = PAdicAbs::new(p, valuation)?;
    let pf = p as f64;
    let ax = x.abs();
    let bound = (pf / ax).powi(2);
    if !(s > bound) {
        return Err(Error::domain(F, format!("s = {s} must exceed (p/|x|_p)² = {bound}")));
    }
    // (1 − p^{2m})/(s^m|x|^{2m}) = (p^{−2m} − 1) z^m with z = p²/(s|x|²) < 1
    let z = bound / s;
    let mut lhs = 0.0;
    let mut zm = 1.0;
    for m in 1.. {
        zm *= z;
        let p_neg = pf.powi(-2 * m);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * zm * (p_neg - 1.0) / (1.0 - p_neg / pf);
        lhs += term;
        if term.abs() < 1e-18 * lhs.abs().max(1e-300) {
            break;
        }
    }
    lhs /= s * ax;
    let mut rhs = 0.0;
    for k in -valuation.. {
        let q = pf.powi(2 * k) * s;
        let term = (pf * pf - 1.0) * pf.powi(k) / ((1.0 + q) * (pf * pf + q));
        rhs += term;
        if term < 1e-18 * rhs {
            break;
        }
    }
    Ok((lhs, rhs))
}

/// The two Laplace-domain forms of the p-adic heat kernel agree for
/// s > (p/|x|_p)².
pub fn check_nilsson_identity(p: u32, valuation: i32, s: f64, tol: f64) -> Result<CheckReport> {
    nilsson_sides(p, valuation, s)?;
    run_check(
        "nilsson",
        format!("p = {p}, v = {valuation}, s = {s}"),
        vec![GridPoint::Nilsson { p, valuation, s }],
        Metric::Absolute,
        tol,
        |pt| match *pt {
            GridPoint::Nilsson { p, valuation, s } => {
                let (l, r) = nilsson_sides(p, valuation, s)?;
                Ok(Some((l - r).abs()))
            }
            _ => unreachable!(),
        },
    )
}

/// The two routes compared for a space.
fn strip_routes(space: ZetaSpace) -> (Route, Route) {
    match space {
        ZetaSpace::Z | ZetaSpace::Circle => (Route::Closed, Route::Mellin),
        ZetaSpace::Zd(_) => (Route::Lauricella, Route::Mellin),
        ZetaSpace::Tree(_) | ZetaSpace::PAdic(_) | ZetaSpace::Cycle(_) => (Route::Closed, Route::Measure),
    }
}

fn in_strip(space: ZetaSpace, s: ComplexScalar) -> bool {
    match space {
        ZetaSpace::Z | ZetaSpace::Circle => s.re > 0.0 && s.re < 0.5,
        ZetaSpace::Zd(d) => s.re > 0.0 && s.re < d as f64 / 2.0,
        ZetaSpace::Tree(_) => s.re > -1.0,
        ZetaSpace::PAdic(_) => s.re > 0.5,
        ZetaSpace::Cycle(_) => true,
    }
}

/// Strip points used when no grid is given.
pub fn default_strip_grid(space: ZetaSpace) -> Vec<ComplexScalar> {
    let c = ComplexScalar::new;
    match space {
        ZetaSpace::Z => [0.05, 0.15, 0.25, 0.35, 0.45]
            .iter()
            .flat_map(|&re| [0.0, 1.0, -2.5, 5.0].map(|im| c(re, im)))
            .collect(),
        ZetaSpace::Circle => rectangular_grid((0.1, 0.4, 0.1), (0.0, 4.0, 2.0)),
        ZetaSpace::Zd(_) => vec![c(0.3, 0.0), c(0.5, 0.0), c(0.25, 1.0)],
        ZetaSpace::Tree(_) => vec![c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0)],
        ZetaSpace::PAdic(_) => vec![c(0.75, 0.0), c(1.0, 2.0), c(2.0, -1.0)],
        ZetaSpace::Cycle(_) => vec![c(0.25, 0.0), c(1.0, 0.0), c(-1.0, 2.0)],
    }
}

/// Scaled deviation between the two routes, or None outside the strip.
pub fn strip_deviation(space: ZetaSpace, s: ComplexScalar) -> Result<Option<f64>> {
    if !in_strip(space, s) {
        return Ok(None);
    }
    let (a, b) = strip_routes(space);
    Ok(Some(
        Metric::Scaled.deviation(space.zeta(s, Some(a))?, space.zeta(s, Some(b))?),
    ))
}

/// A closed form (or series) route against the definitional route.
pub fn check_strip_equivalence(space: ZetaSpace, grid: &[ComplexScalar], tol: f64) -> Result<CheckReport> {
    space.validate()?;
    let (a, b) = strip_routes(space);
    run_check(
        &format!("strip:{space}"),
        format!("{a} vs {b}, {}", describe(grid)),
        grid.iter().map(|&s| GridPoint::S(s)).collect(),
        Metric::Scaled,
        tol,
        |p| match *p {
            GridPoint::S(s) => strip_deviation(space, s),
            _ => unreachable!(),
        },
    )
}

/// |ζ_ℤ(s) − Mellin transform of the ℤ heat trace|.
pub fn mellin_z_deviation(s: ComplexScalar) -> Result<f64> {
    let m = mellin_zeta(&crate::heat::heat_trace_z(), s, &QuadratureSpec::default())?;
    Ok((m - zetas::zeta_z(s)?).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn xi_z_reports() {
        let grid = default_xi_z_grid();
        assert_eq!(grid.len(), 231);
        let r = check_xi_z(&grid, 1e-10).unwrap();
        assert!(r.passed, "{r}");
        assert_eq!(r.points_checked, 231);
        let fixed = check_xi_z(&[c(0.5, 0.0)], 1e-10).unwrap();
        assert_eq!(fixed.max_abs_deviation, 0.0);
        assert!(check_xi_z(&[c(0.3, 2.0)], 1e-10).unwrap().passed);
    }

    #[test]
    fn xi_circle_reports() {
        let r = check_xi_circle(&default_xi_circle_grid(), 1e-9).unwrap();
        assert!(r.passed, "{r}");
        assert_eq!(r.skipped, 2);
        assert_eq!(check_xi_circle(&[c(0.5, 0.0)], 1e-9).unwrap().max_abs_deviation, 0.0);
        assert!(check_xi_circle(&[c(0.4, 6.0), c(0.5, 14.134725)], 1e-9).unwrap().passed);
        assert!(check_xi_circle(&[c(0.0, 0.0)], 1e-9).is_err());
    }

    #[test]
    fn xi_p_reports() {
        for p in [2, 3, 5, 7] {
            let r = check_xi_p(p, &random_grid(50, 2024), 1e-12).unwrap();
            assert!(r.passed, "{r}");
        }
        assert!(check_xi_p(5, &[c(-1.0, 0.7)], 1e-12).unwrap().passed);
        assert_eq!(check_xi_p(2, &[c(0.5, 0.0)], 1e-12).unwrap().max_abs_deviation, 0.0);
        let pole = c(0.5, PI / 2f64.ln());
        let r = check_xi_p(2, &[pole, c(0.2, 0.0)], 1e-12).unwrap();
        assert_eq!(r.skipped, 1);
        assert!(check_xi_p(4, &[c(0.2, 0.0)], 1e-12).is_err());
    }

    #[test]
    fn kernel_reports() {
        let r = check_poisson_circle(&DEFAULT_POISSON_TIMES, &default_poisson_positions(), 1e-12).unwrap();
        assert!(r.passed && r.points_checked == 50, "{r}");
        assert!(poisson_deviation(1.0, 0.5).unwrap() < 1e-14);
        let r = check_padic_kernels(&[2, 3, 5], &DEFAULT_PADIC_VALUATIONS, &DEFAULT_PADIC_TIMES, 1e-10).unwrap();
        assert!(r.passed, "{r}");
        assert_eq!(r.points_checked + r.skipped, 27);
        let r = check_padic_kernels(&[2], &[0], &[0.01, 10.0], 1e-10).unwrap();
        assert_eq!((r.points_checked, r.skipped), (1, 1));
    }

    #[test]
    fn nilsson_reports() {
        let r = check_nilsson_identity(2, 0, 5.0, 1e-10).unwrap();
        assert!(r.passed, "{r}");
        let (l, rr) = nilsson_sides(2, 0, 100.0).unwrap();
        assert!((l - rr).abs() < 1e-13);
        for (p, v, s) in [(3, 1, 100.0), (5, 0, 30.0), (2, -1, 1.5)] {
            let (l, rr) = nilsson_sides(p, v, s).unwrap();
            assert!((l - rr).abs() < 1e-12, "p={p} v={v} s={s}: {l} vs {rr}");
        }
        assert!(check_nilsson_identity(2, 0, 3.0, 1e-10).is_err());
    }

    #[test]
    fn strip_reports() {
        let z = check_strip_equivalence(ZetaSpace::Z, &default_strip_grid(ZetaSpace::Z), 1e-8).unwrap();
        assert!(z.passed && z.points_checked == 20, "{z}");
        for space in [
            ZetaSpace::Zd(2),
            ZetaSpace::Tree(2),
            ZetaSpace::Circle,
            ZetaSpace::PAdic(3),
            ZetaSpace::Cycle(9),
        ] {
            let r = check_strip_equivalence(space, &default_strip_grid(space), 1e-6).unwrap();
            assert!(r.passed, "{r}");
        }
        let r = check_strip_equivalence(ZetaSpace::Z, &[c(0.25, 0.0), c(0.7, 0.0)], 1e-8).unwrap();
        assert_eq!(r.skipped, 1);
    }

    #[test]
    fn reports_are_deterministic_and_reproducible() {
        let grid = default_xi_z_grid();
        let a = check_xi_z(&grid, 1e-10).unwrap();
        let b = check_xi_z(&grid, 1e-10).unwrap();
        assert_eq!(a, b);
        let GridPoint::S(s) = a.worst_point else { panic!() };
        assert_eq!(xi_z_deviation(s), a.max_abs_deviation);
        let r = check_padic_kernels(&[3], &DEFAULT_PADIC_VALUATIONS, &DEFAULT_PADIC_TIMES, 1e-10).unwrap();
        let GridPoint::PAdicKernel { p, valuation, t } = r.worst_point else {
            panic!()
        };
        assert_eq!(
            padic_kernel_deviation(p, valuation, t).unwrap(),
            Some(r.max_abs_deviation)
        );
    }

    #[test]
    fn ties_break_toward_smallest_point() {
        let pts = vec![
            GridPoint::S(c(1.0, 0.0)),
            GridPoint::S(c(-1.0, 0.0)),
            GridPoint::S(c(0.0, 0.0)),
        ];
        let r = run_check("const", String::new(), pts, Metric::Absolute, 1.0, |_| Ok(Some(0.25))).unwrap();
        assert_eq!(r.worst_point, GridPoint::S(c(-1.0, 0.0)));
    }
}

//! Asymptotic and arithmetic experiments over finite graphs: cycle limits,
//! Euler values, Verlinde integers, the L-function ratio, spanning trees and
//! the square-torus log-determinant.

mod spectrum;

pub use spectrum::{
    complete_graph_spectrum, cycle_spectrum, dense_laplacian_eigenvalues, laplacian_from_edges, path_spectrum,
    FiniteGraphSpectrum, MAX_DENSE_ORDER,
};

use crate::mellin::zeta_prime_at_zero;
use crate::specialfn::{cospi, riemann_zeta, DirichletCharacter};
use crate::zetas::{completed_cyclic_l, zeta_circle, zeta_cycle, zeta_z};
use crate::{ComplexScalar, Error, Result};
use rayon::prelude::*;
use std::f64::consts::PI;

/// First ten digits of Catalan's constant, guarding the computed value.
pub const CATALAN_REFERENCE: f64 = 0.915_965_594_1;

/// One step of a convergence experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRecord {
    pub n: u64,
    pub value: ComplexScalar,
    pub target: ComplexScalar,
    pub abs_error: f64,
}

impl ConvergenceRecord {
    pub fn new(n: u64, value: ComplexScalar, target: ComplexScalar) -> Self {
        ConvergenceRecord {
            n,
            value,
            target,
            abs_error: (value - target).norm(),
        }
    }
}

/// Runs `f` over the schedule in parallel, keeping schedule order.
fn over_schedule<F>(schedule: &[u64], f: F) -> Result<Vec<ConvergenceRecord>>
where
    F: Fn(u64) -> Result<ConvergenceRecord> + Sync,
{
    schedule.par_iter().map(|&n| f(n)).collect()
}

fn real(x: f64) -> ComplexScalar {
    ComplexScalar::new(x, 0.0)
}

/// A Verlinde dimension and how far it is from an integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerlindeValue {
    pub g: u32,
    pub m: u32,
    pub value: f64,
    pub nearest: u64,
    pub distance: f64,
}

/// (m+2)^{g−1} 2^{g−1} ζ_{ℤ/(m+2)ℤ}(g−1), the dimension of the rank-2 level-m
/// Verlinde space in genus g.
pub fn verlinde_dimension(g: u32, m: u32) -> Result<VerlindeValue> {
    if g < 2 || m < 1 {
        return Err(Error::domain(
            "verlinde_dimension",
            format!("need g ≥ 2 and m ≥ 1, got {g} and {m}"),
        ));
    }
    let n = (m + 2) as f64;
    let e = (g - 1) as i32;
    let value = n.powi(e) * 2f64.powi(e) * zeta_cycle((m + 2) as usize, real(e as f64)).re;
    let nearest = value.round();
    Ok(VerlindeValue {
        g,
        m,
        value,
        nearest: nearest as u64,
        distance: (value - nearest).abs(),
    })
}

fn check_strip(function: &'static str, s: ComplexScalar) -> Result<()> {
    if s.re > 0.0 && s.re < 0.5 {
        Ok(())
    } else {
        Err(Error::domain(function, format!("need 0 < Re s < 1/2, got s = {s}")))
    }
}

/// ζ_{ℤ/nℤ}(s)/n against ζ_ℤ(s).
pub fn cycle_to_z_limit(s: ComplexScalar, schedule: &[u64]) -> Result<Vec<ConvergenceRecord>> {
    check_strip("cycle_to_z_limit", s)?;
    let target = zeta_z(s)?;
    over_schedule(schedule, |n| {
        let n = check_cycle(n)?;
        Ok(ConvergenceRecord::new(n, zeta_cycle(n as usize, s) / n as f64, target))
    })
}

/// The candidate secondary term: (ζ_{ℤ/nℤ}(s) − n ζ_ℤ(s))/n^{2s} against
/// ζ_{ℝ/ℤ}(s). Reported as a hypothesis, not asserted.
pub fn cycle_secondary_term_probe(s: ComplexScalar, schedule: &[u64]) -> Result<Vec<ConvergenceRecord>> {
    check_strip("cycle_secondary_term_probe", s)?;
    let bulk = zeta_z(s)?;
    let target = zeta_circle(s)?;
    over_schedule(schedule, |n| {
        let n = check_cycle(n)?;
        let nf = n as f64;
        let value = (zeta_cycle(n as usize, s) - nf * bulk) * (-2.0 * s * nf.ln()).exp();
        Ok(ConvergenceRecord::new(n, value, target))
    })
}

fn check_cycle(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::domain(
            "cycle schedule",
            format!("cycle length {n} must be at least 2"),
        ));
    }
    Ok(n)
}

/// The limit 2(2π)^{−2m} ζ(2m) of ζ_{ℤ/nℤ}(m)/n^{2m}.
pub fn euler_target(m: u32) -> Result<f64> {
    let z = riemann_zeta(real(2.0 * m as f64))?.re;
    Ok(2.0 * (2.0 * PI).powi(-2 * m as i32) * z)
}

/// Exact values of ζ_{ℤ/nℤ}(m)/n^{2m} for m = 1, 2.
pub fn euler_closed_form(m: u32, n: u64) -> Option<f64> {
    let n2 = (n as f64).powi(2);
    match m {
        1 => Some((n2 - 1.0) / (12.0 * n2)),
        2 => Some((n2 - 1.0) * (n2 + 11.0) / (720.0 * n2 * n2)),
        _ => None,
    }
}

/// ζ_{ℤ/nℤ}(m)/n^{2m} against 2(2π)^{−2m} ζ(2m); ζ_ℤ vanishes at positive
/// integers, so there is no bulk term to remove.
pub fn euler_value_recovery(m: u32, schedule: &[u64]) -> Result<Vec<ConvergenceRecord>> {
    if m < 1 {
        return Err(Error::domain("euler_value_recovery", "m must be positive"));
    }
    let target = real(euler_target(m)?);
    over_schedule(schedule, |n| {
        let n = check_cycle(n)?;
        let scaled = zeta_cycle(n as usize, real(m as f64)).re / (n as f64).powi(2 * m as i32);
        Ok(ConvergenceRecord::new(n, real(scaled), target))
    })
}

/// |Λ_n(s, χ)| / |Λ_n(1 − s, χ̄)| against 1.
///
/// Requires an even primitive character of modulus ≥ 3 and s in the critical
/// strip with Im s ≥ 8; `allow_outside` lifts the strip and height
/// requirements for exploration.
pub fn rh_ratio_experiment(
    chi: &DirichletCharacter,
    s: ComplexScalar,
    schedule: &[u64],
    allow_outside: bool,
) -> Result<Vec<ConvergenceRecord>> {
    const F: &str = "rh_ratio_experiment";
    if chi.modulus() < 3 || !chi.is_even() || !chi.is_primitive() {
        return Err(Error::domain(
            F,
            "the character must be even, primitive, and of modulus ≥ 3",
        ));
    }
    if !allow_outside && !(s.re > 0.0 && s.re < 1.0 && s.im >= 8.0) {
        return Err(Error::domain(F, format!("need 0 < Re s < 1 and Im s ≥ 8, got s = {s}")));
    }
    let dual = chi.conj();
    over_schedule(schedule, |n| {
        if n < 1 {
            return Err(Error::domain(F, "n must be positive"));
        }
        let top = completed_cyclic_l(n as usize, s, chi)?;
        let bottom = completed_cyclic_l(n as usize, 1.0 - s, &dual)?;
        Ok(ConvergenceRecord::new(n, real(top.norm() / bottom.norm()), real(1.0)))
    })
}

/// Number of spanning trees, Π λ′ / N, via det = exp(−ζ′(0)).
pub fn spanning_trees(spectrum: &FiniteGraphSpectrum) -> Result<u64> {
    const F: &str = "spanning_trees";
    if spectrum.zero_multiplicity() != 1 {
        return Err(Error::domain(
            F,
            format!("graph has {} components", spectrum.zero_multiplicity()),
        ));
    }
    let det = (-zeta_prime_at_zero(spectrum.nonzero_eigenvalues())?).exp();
    let count = det / spectrum.vertex_count() as f64;
    let rounded = count.round();
    if (count - rounded).abs() >= 1e-6 * rounded.max(1.0) {
        return Err(Error::Convergence(format!("{F}: {count} is not close to an integer")));
    }
    Ok(rounded as u64)
}

/// det of the Laplacian with its first row and column removed, by
/// fraction-free Bareiss elimination in exact integers.
pub fn cofactor_determinant(laplacian: &[Vec<i64>]) -> Result<i128> {
    let n = laplacian.len();
    if n == 0 || laplacian.iter().any(|r| r.len() != n) {
        return Err(Error::domain(
            "cofactor_determinant",
            "matrix must be square and nonempty",
        ));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = laplacian[1..]
        .iter()
        .map(|r| r[1..].iter().map(|&v| v as i128).collect())
        .collect();
    let size = n - 1;
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..size {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..size).find(|&i| a[i][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[size - 1][size - 1])
}

/// Catalan's constant Σ (−1)^k/(2k+1)², by the Cohen–Villegas–Zagier
/// acceleration of the alternating series.
pub fn catalan_constant() -> f64 {
    let n = 24;
    let mut d = (3.0 + 8f64.sqrt()).powi(n);
    d = (d + 1.0 / d) / 2.0;
    let (mut b, mut c, mut sum) = (-1.0, -d, 0.0);
    for k in 0..n {
        c = b - c;
        sum += c / ((2 * k + 1) as f64).powi(2);
        let (kf, nf) = (k as f64, n as f64);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

/// (1/n²) Σ′ log(4 − 2cos(2πj/n) − 2cos(2πk/n)) against 4G/π.
pub fn torus2d_logdet_limit(schedule: &[u64]) -> Result<Vec<ConvergenceRecord>> {
    let g = catalan_constant();
    if (g - CATALAN_REFERENCE).abs() > 1e-10 {
        return Err(Error::Convergence(format!("Catalan's constant came out as {g}")));
    }
    let target = real(4.0 * g / PI);
    over_schedule(schedule, |n| {
        if n < 4 {
            return Err(Error::domain(
                "torus2d_logdet_limit",
                format!("n = {n} must be at least 4"),
            ));
        }
        let cos: Vec<f64> = (0..n).map(|j| cospi(2.0 * j as f64 / n as f64)).collect();
        let mut sum = 0.0;
        for (j, cj) in cos.iter().enumerate() {
            for (k, ck) in cos.iter().enumerate() {
                if j != 0 || k != 0 {
                    sum += (4.0 - 2.0 * cj - 2.0 * ck).ln();
                }
            }
        }
        Ok(ConvergenceRecord::new(n, real(sum / (n * n) as f64), target))
    })
}

/// One row of the ζ_ℤ / central binomial / Catalan number table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalanRow {
    pub n: u32,
    pub zeta_value: f64,
    pub central_binomial: u128,
    pub catalan_number: u128,
    /// Relative distance from ζ_ℤ(−n) to C(2n, n) is below 1e−12 and
    /// C(2n, n) = (n+1)·C_n exactly.
    pub verified: bool,
}

/// Rows n = 0..=n_max, n_max ≤ 30.
pub fn catalan_table(n_max: u32) -> Result<Vec<CatalanRow>> {
    if n_max > 30 {
        return Err(Error::domain("catalan_table", format!("n_max = {n_max} exceeds 30")));
    }
    let mut binom: u128 = 1;
    let mut rows = Vec::new();
    for n in 0..=n_max {
        if n > 0 {
            let k = n as u128;
            binom = binom * (2 * k) * (2 * k - 1) / (k * k);
        }
        let catalan = binom / (n as u128 + 1);
        let zeta_value = zeta_z(real(-(n as f64)))?.re;
        let relative = (zeta_value - binom as f64).abs() / binom as f64;
        rows.push(CatalanRow {
            n,
            zeta_value,
            central_binomial: binom,
            catalan_number: catalan,
            verified: relative < 1e-12 && catalan * (n as u128 + 1) == binom,
        });
    }
    Ok(rows)
}

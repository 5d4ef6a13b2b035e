//! The two multivariable hypergeometric functions behind the lattice and tree
//! zeta functions: Lauricella F_C by total-degree shells, Appell F₁ by its
//! Picard integral.

use crate::mellin::integrate_adaptive_with;
use crate::specialfn::log_gamma;
use crate::{ComplexScalar, Error, Result};
use nalgebra::{DMatrix, DVector};

/// Shell count used by the lattice zeta route.
pub const DEFAULT_MAX_ORDER: usize = 2000;
/// Consecutive growing shells that signal divergence.
const GROWTH_LIMIT: usize = 5;
/// Asymptotic terms in the boundary extrapolation fit, and the smaller fit
/// used for the error estimate.
const FIT_TERMS: usize = 6;
const FIT_POINTS: usize = 40;

/// A summed F_C series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FcSum {
    pub value: ComplexScalar,
    /// For interior points, the magnitude of the last shell. On the boundary,
    /// the spread between two extrapolation fits of different order.
    pub error_estimate: f64,
    pub shells: usize,
    /// Whether Σ√|xᵢ| = 1, where the shells decay only algebraically.
    pub boundary: bool,
}

fn ln_gamma_real(x: f64) -> f64 {
    log_gamma(ComplexScalar::new(x, 0.0)).expect("positive argument").re
}

/// Lauricella F_C^{(d)}(a, b; c₁..c_d; x₁..x_d) =
/// Σ_m (a)_{|m|}(b)_{|m|} / Π(cᵢ)_{mᵢ} · Π xᵢ^{mᵢ}/mᵢ!, grouped by total degree.
///
/// Shells of degree N are built by convolving one variable at a time,
/// normalized by R^N with R = (Σ√|xᵢ|)² so the intermediate values stay
/// polynomially bounded. Inside the region Σ√|xᵢ| < 1 the shells decay
/// geometrically and are summed until negligible. On the boundary with all
/// xᵢ ≥ 0 the partial sums approach the limit like N^γ, where
/// γ = a + b − Σcᵢ + (d − 1)/2, and the limit is extrapolated by a least-squares
/// fit of S_N = S + N^γ Σ_j c_j N^{−j} over the upper shells.
pub fn lauricella_fc(a: ComplexScalar, b: ComplexScalar, c: &[f64], x: &[f64], max_order: usize) -> Result<FcSum> {
    const F: &str = "lauricella_fc";
    if c.len() != x.len() || c.is_empty() {
        return Err(Error::domain(F, "need one c and one x per variable"));
    }
    if c.iter().any(|&ci| !(ci > 0.0)) || x.iter().any(|xi| !xi.is_finite()) {
        return Err(Error::domain(F, "every cᵢ must be positive and every xᵢ finite"));
    }
    let root_sum: f64 = x.iter().map(|xi| xi.abs().sqrt()).sum();
    if root_sum > 1.0 + 1e-12 {
        return Err(Error::domain(F, format!("Σ√|xᵢ| = {root_sum} exceeds 1")));
    }
    if root_sum == 0.0 {
        return Ok(FcSum {
            value: ComplexScalar::new(1.0, 0.0),
            error_estimate: 0.0,
            shells: 0,
            boundary: false,
        });
    }
    let boundary = (root_sum - 1.0).abs() <= 1e-12;
    let extrapolate = boundary && x.iter().all(|&xi| xi >= 0.0);
    if extrapolate && max_order < 200 {
        return Err(Error::domain(F, "boundary points need max_order ≥ 200"));
    }

    let q = normalized_shells(c, x, max_order);
    let ln_r = 2.0 * root_sum.ln();
    let mut partial = Vec::with_capacity(max_order + 1);
    let mut pochhammer = ComplexScalar::new(1.0, 0.0);
    let mut sum = ComplexScalar::new(0.0, 0.0);
    let mut previous = f64::INFINITY;
    let mut growth = 0;
    let mut quiet = 0;
    let mut last = 0.0;
    for (n, &qn) in q.iter().enumerate() {
        if n > 0 {
            let m = (n - 1) as f64;
            pochhammer *= (a + m) * (b + m) / ((n * n) as f64);
        }
        let shell = pochhammer * qn * (n as f64 * ln_r).exp();
        sum += shell;
        partial.push(sum);
        last = shell.norm();
        if !sum.is_finite() {
            return Err(Error::Divergence(format!("{F}: partial sum overflowed at shell {n}")));
        }
        growth = if last > previous { growth + 1 } else { 0 };
        if growth >= GROWTH_LIMIT {
            return Err(Error::Divergence(format!(
                "{F}: shell magnitudes grew for {GROWTH_LIMIT} consecutive shells ending at {n}"
            )));
        }
        previous = last;
        if !extrapolate {
            quiet = if last <= 1e-17 * sum.norm() { quiet + 1 } else { 0 };
            if quiet >= GROWTH_LIMIT {
                return Ok(FcSum {
                    value: sum,
                    error_estimate: last,
                    shells: n + 1,
                    boundary,
                });
            }
        }
    }
    if !extrapolate {
        return Ok(FcSum {
            value: sum,
            error_estimate: last,
            shells: max_order + 1,
            boundary,
        });
    }

    let d = c.len() as f64;
    let gamma_exp = a + b - c.iter().sum::<f64>() + (d - 1.0) / 2.0;
    if gamma_exp.re >= 0.0 {
        return Err(Error::Divergence(format!(
            "{F}: partial sums grow like N^{gamma_exp} on the boundary"
        )));
    }
    let main = extrapolate_limit(&partial, gamma_exp, FIT_TERMS)?;
    let alt = extrapolate_limit(&partial, gamma_exp, FIT_TERMS - 1)?;
    Ok(FcSum {
        value: main,
        error_estimate: (main - alt).norm(),
        shells: max_order + 1,
        boundary,
    })
}

/// q_N = N!² Σ_{|m|=N} Π xᵢ^{mᵢ}/((cᵢ)_{mᵢ} mᵢ!) / R^N for N = 0..=max_order.
fn normalized_shells(c: &[f64], x: &[f64], max_order: usize) -> Vec<f64> {
    let ln_fact: Vec<f64> = (0..=max_order).map(|k| ln_gamma_real(k as f64 + 1.0)).collect();
    let mut q: Option<Vec<f64>> = None;
    let mut r_prev = 0.0f64;
    for (&ci, &xi) in c.iter().zip(x) {
        if xi == 0.0 {
            continue;
        }
        let r = (r_prev.sqrt() + xi.abs().sqrt()).powi(2);
        // ln(k!/(c)_k)
        let ln_ratio: Vec<f64> = if ci == 1.0 {
            vec![0.0; max_order + 1]
        } else {
            let base = ln_gamma_real(ci);
            (0..=max_order)
                .map(|k| ln_fact[k] - (ln_gamma_real(ci + k as f64) - base))
                .collect()
        };
        let sign = |k: usize| if xi < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
        let next = match &q {
            None => (0..=max_order).map(|k| sign(k) * ln_ratio[k].exp()).collect(),
            Some(prev) => {
                let ln_alpha = (xi.abs() / r).ln();
                let ln_beta = (r_prev / r).ln();
                (0..=max_order)
                    .map(|n| {
                        (0..=n)
                            .map(|k| {
                                let ln_binom = ln_fact[n] - ln_fact[k] - ln_fact[n - k];
                                let ln_w =
                                    2.0 * ln_binom + k as f64 * ln_alpha + (n - k) as f64 * ln_beta + ln_ratio[k];
                                sign(k) * ln_w.exp() * prev[n - k]
                            })
                            .sum()
                    })
                    .collect()
            }
        };
        q = Some(next);
        r_prev = r;
    }
    q.expect("at least one nonzero variable")
}

/// Least-squares limit of S_N = S + N^γ Σ_{j<terms} c_j N^{−j} over the
/// upper twentieth-to-end range of shells.
fn extrapolate_limit(partial: &[ComplexScalar], gamma_exp: ComplexScalar, terms: usize) -> Result<ComplexScalar> {
    let n_max = (partial.len() - 1) as f64;
    let n_min = n_max / 20.0;
    let mut ns: Vec<usize> = (0..FIT_POINTS)
        .map(|i| (n_min * (n_max / n_min).powf(i as f64 / (FIT_POINTS - 1) as f64)).round() as usize)
        .collect();
    ns.dedup();
    let cols = terms + 1;
    let mut design = DMatrix::<ComplexScalar>::zeros(ns.len(), cols);
    let rhs = DVector::<ComplexScalar>::from_iterator(ns.len(), ns.iter().map(|&n| partial[n]));
    for (row, &n) in ns.iter().enumerate() {
        let nf = n as f64;
        design[(row, 0)] = ComplexScalar::new(1.0, 0.0);
        for j in 0..terms {
            let e = gamma_exp - j as f64;
            design[(row, j + 1)] = (e * (nf / n_max).ln()).exp();
        }
    }
    // equilibrate so the constant column is not swamped by the steep ones
    for j in 1..cols {
        let scale = design.column(j).iter().fold(0.0f64, |m, z| m.max(z.norm()));
        design.column_mut(j).unscale_mut(scale);
    }
    let svd = design.svd(true, true);
    let sol = svd
        .solve(&rhs, 1e-14)
        .map_err(|e| Error::Convergence(format!("extrapolation fit failed: {e}")))?;
    Ok(sol[0])
}

/// Appell F₁(a; b₁, b₂; c; x, y) from the Picard integral
/// Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ t^{a−1}(1−t)^{c−a−1}(1−xt)^{−b₁}(1−yt)^{−b₂} dt.
///
/// The halves [0, ½] and [½, 1] use t = u^{1/a} and 1−t = u^{1/(c−a)}, which
/// remove the endpoint powers.
pub fn appell_f1_picard(
    a: f64,
    b1: ComplexScalar,
    b2: ComplexScalar,
    c: f64,
    x: f64,
    y: f64,
    tol: f64,
) -> Result<ComplexScalar> {
    const F: &str = "appell_f1_picard";
    if !(a > 0.0 && c > a) {
        return Err(Error::domain(F, format!("need c > a > 0, got a = {a}, c = {c}")));
    }
    if !(x < 1.0 && y < 1.0) {
        return Err(Error::domain(F, format!("need x, y < 1, got x = {x}, y = {y}")));
    }
    let ca = c - a;
    let norm = (ln_gamma_real(c) - ln_gamma_real(a) - ln_gamma_real(ca)).exp();
    let rest = |t: f64| (-b1 * (-x * t).ln_1p() - b2 * (-y * t).ln_1p()).exp();
    let max_sub = 4000;
    let (left, _) = integrate_adaptive_with(
        |u| {
            let t = u.powf(1.0 / a);
            rest(t) * (1.0 - t).powf(ca - 1.0) / a
        },
        0.0,
        0.5f64.powf(a),
        tol / (2.0 * norm),
        max_sub,
    )?;
    let (right, _) = integrate_adaptive_with(
        |u| {
            let one_minus = u.powf(1.0 / ca);
            rest(1.0 - one_minus) * (1.0 - one_minus).powf(a - 1.0) / ca
        },
        0.0,
        0.5f64.powf(ca),
        tol / (2.0 * norm),
        max_sub,
    )?;
    Ok((left + right) * norm)
}

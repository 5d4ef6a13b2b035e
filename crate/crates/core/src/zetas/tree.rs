//! The (q+1)-regular tree: zeta by the Appell F₁ closed form and by
//! integration against the rooted spectral measure.

use super::hypergeometric::appell_f1_picard;
use crate::mellin::integrate_adaptive_with;
use crate::{ComplexScalar, Error, Result};
use std::f64::consts::PI;

const TREE_TOL: f64 = 1e-13;

fn check_q(function: &'static str, q: u32) -> Result<f64> {
    if q < 2 {
        return Err(Error::domain(function, format!("q = {q} must be at least 2")));
    }
    Ok(q as f64)
}

/// ζ_{T_{q+1}}(s) = q(q+1)/((q−1)²(√q−1)^{2s}) · F₁(3/2; s+1, 1; 3; u, v) with
/// u = −4√q/(√q−1)² and v = 4√q/(√q+1)², for Re s > −1.
pub fn zeta_tree(q: u32, s: ComplexScalar) -> Result<ComplexScalar> {
    let qf = check_q("zeta_tree", q)?;
    if !(s.re > -1.0) {
        return Err(Error::domain("zeta_tree", format!("Re s = {} must exceed −1", s.re)));
    }
    let r = qf.sqrt();
    let u = -4.0 * r / (r - 1.0).powi(2);
    let v = 4.0 * r / (r + 1.0).powi(2);
    let f1 = appell_f1_picard(1.5, s + 1.0, ComplexScalar::new(1.0, 0.0), 3.0, u, v, TREE_TOL)?;
    let prefactor = qf * (qf + 1.0) / (qf - 1.0).powi(2) * (-2.0 * s * (r - 1.0).ln()).exp();
    Ok(prefactor * f1)
}

/// ∫ g(x) dμ(x) for the rooted spectral measure of the tree's adjacency
/// operator, density (q+1)√(4q−x²)/(2π((q+1)²−x²)) on |x| ≤ 2√q, integrated in
/// x = 2√q cos θ.
fn integrate_measure<G>(q: f64, g: G) -> Result<ComplexScalar>
where
    G: Fn(f64) -> ComplexScalar,
{
    let r = q.sqrt();
    let (v, _) = integrate_adaptive_with(
        |theta| {
            let (sin, cos) = theta.sin_cos();
            let x = 2.0 * r * cos;
            let weight = (q + 1.0) * 4.0 * q * sin * sin / (2.0 * PI * ((q + 1.0).powi(2) - x * x));
            g(x) * weight
        },
        0.0,
        PI,
        TREE_TOL,
        4000,
    )?;
    Ok(v)
}

/// ∫ λ^{−s} dμ over the Laplacian spectrum λ = q+1−x ⊂ [(√q−1)², (√q+1)²].
pub fn zeta_tree_spectral_measure(q: u32, s: ComplexScalar) -> Result<ComplexScalar> {
    let qf = check_q("zeta_tree_spectral_measure", q)?;
    integrate_measure(qf, |x| (-s * (qf + 1.0 - x).ln()).exp())
}

/// ∫ x^k dμ: the number of closed walks of length k at the root.
pub fn tree_measure_moment(q: u32, k: u32) -> Result<f64> {
    let qf = check_q("tree_measure_moment", q)?;
    Ok(integrate_measure(qf, |x| ComplexScalar::new(x.powi(k as i32), 0.0))?.re)
}

//! Mellin-transform zeta engine: ζ(s) = Γ(s)^{−1} ∫₀^∞ (θ(t) − c) t^{s−1} dt for a
//! heat trace θ, by adaptive Gauss–Kronrod quadrature with an analytic tail.

use crate::heat::HeatTrace;
use crate::specialfn::gamma;
use crate::{ComplexScalar, Error, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Quadrature settings for [`mellin_zeta`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Target absolute error of the returned zeta value.
    pub tolerance: f64,
    /// Split point T between the substituted head and the logarithmic middle.
    pub split_point: f64,
    /// Highest tail coefficient index K used beyond `far_point`, 1 ≤ K ≤ 3.
    pub tail_terms: usize,
    pub max_subdivisions: usize,
    /// Where quadrature hands over to the analytic tail.
    pub far_point: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            tolerance: 1e-10,
            split_point: 1.0,
            tail_terms: 3,
            max_subdivisions: 4000,
            far_point: 1e4,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Err(Error::domain("QuadratureSpec", reason));
        if !(self.tolerance > 0.0) {
            return bad(format!("tolerance {} must be positive", self.tolerance));
        }
        if !(self.split_point > 0.0) || !(self.far_point > self.split_point) {
            return bad(format!(
                "need 0 < split_point < far_point, got {} and {}",
                self.split_point, self.far_point
            ));
        }
        if !(1..=3).contains(&self.tail_terms) {
            return bad(format!("tail_terms {} outside 1..=3", self.tail_terms));
        }
        if self.max_subdivisions == 0 {
            return bad("max_subdivisions must be positive".into());
        }
        Ok(())
    }
}

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

struct Panel {
    a: f64,
    b: f64,
    value: ComplexScalar,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then(other.a.total_cmp(&self.a))
    }
}

fn gauss_kronrod<F: Fn(f64) -> ComplexScalar>(f: &F, a: f64, b: f64) -> Panel {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mid = f(centre);
    let mut kronrod = mid * KRONROD_WEIGHTS[7];
    let mut gauss = mid * GAUSS_WEIGHTS[3];
    for i in 0..7 {
        let dx = half * KRONROD_NODES[i];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += pair * KRONROD_WEIGHTS[i];
        if i % 2 == 1 {
            gauss += pair * GAUSS_WEIGHTS[i / 2];
        }
    }
    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
    }
}

/// ∫ₐᵇ f by adaptive G7–K15 subdivision; returns the value and its error
/// estimate.
///
/// Refinement stops once the summed panel error is below `tol`, or below the
/// double-precision floor of the accumulated panel magnitudes.
pub fn integrate_adaptive_with<F>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_subdivisions: usize,
) -> Result<(ComplexScalar, f64)>
where
    F: Fn(f64) -> ComplexScalar,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("integrate_adaptive", format!("bad interval [{a}, {b}]")));
    }
    const INITIAL_PANELS: usize = 4;
    let width = (b - a) / INITIAL_PANELS as f64;
    let mut heap: BinaryHeap<Panel> = (0..INITIAL_PANELS)
        .map(|i| {
            let lo = a + width * i as f64;
            let hi = if i + 1 == INITIAL_PANELS { b } else { lo + width };
            gauss_kronrod(&f, lo, hi)
        })
        .collect();
    let mut subdivisions = 0;
    loop {
        let (value, error, magnitude) = heap
            .iter()
            .fold((ComplexScalar::new(0.0, 0.0), 0.0, 0.0), |(v, e, m), p| {
                (v + p.value, e + p.error, m + p.value.norm())
            });
        if !value.is_finite() {
            return Err(Error::Convergence(format!("integrand is not finite on [{a}, {b}]")));
        }
        if error <= tol.max(4.0 * f64::EPSILON * magnitude) {
            return Ok((value, error));
        }
        if subdivisions >= max_subdivisions {
            return Err(Error::ToleranceNotMet {
                tolerance: tol,
                estimate: error,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let centre = 0.5 * (worst.a + worst.b);
        heap.push(gauss_kronrod(&f, worst.a, centre));
        heap.push(gauss_kronrod(&f, centre, worst.b));
        subdivisions += 1;
    }
}

/// ∫ₐᵇ f with absolute error at most `tol`.
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, tol: f64) -> Result<ComplexScalar>
where
    F: Fn(f64) -> ComplexScalar,
{
    integrate_adaptive_with(f, a, b, tol, QuadratureSpec::default().max_subdivisions).map(|(v, _)| v)
}

/// The spectral zeta value Γ(s)^{−1} ∫₀^∞ (θ(t) − c) t^{s−1} dt of a heat trace,
/// valid in the strip 0 < Re s < α.
///
/// The head (0, T] uses t = T·u^{1/Re s} after removing the constant θ(0⁺) − c
/// analytically, the middle [T, T_far] uses t = e^v, and the rest is the
/// integrated asymptotic tail.
pub fn mellin_zeta(trace: &HeatTrace, s: ComplexScalar, spec: &QuadratureSpec) -> Result<ComplexScalar> {
    spec.validate()?;
    let alpha = trace.tail_exponent;
    let sigma = s.re;
    if !(sigma > 0.0 && sigma < alpha) || !s.im.is_finite() {
        return Err(Error::Strip { s, upper: alpha });
    }
    let g = gamma(s)?;
    // share the error budget among the three pieces, measured before 1/Γ(s)
    let piece_tol = spec.tolerance * g.norm() / 3.0;
    let big_t = spec.split_point;
    let far = spec.far_point;
    let c = trace.subtract_constant;
    let f0 = trace.limit_at_zero - c;

    let head_scale = ComplexScalar::new(big_t, 0.0).powc(s) / sigma;
    let freq = s.im / sigma;
    let (head, _) = integrate_adaptive_with(
        |u| {
            if u <= 0.0 {
                return ComplexScalar::new(0.0, 0.0);
            }
            let t = big_t * u.powf(1.0 / sigma);
            let phase = ComplexScalar::from_polar(1.0, freq * u.ln());
            head_scale * phase * (trace.eval(t) - c - f0)
        },
        0.0,
        1.0,
        piece_tol,
        spec.max_subdivisions,
    )?;
    let head = head + f0 * ComplexScalar::new(big_t, 0.0).powc(s) / s;

    let (middle, _) = integrate_adaptive_with(
        |v| {
            let t = v.exp();
            (s * v).exp() * (trace.eval(t) - c)
        },
        big_t.ln(),
        far.ln(),
        piece_tol,
        spec.max_subdivisions,
    )?;

    let ln_far = far.ln();
    let tail: ComplexScalar = trace
        .tail_coefficients
        .iter()
        .take(spec.tail_terms + 1)
        .enumerate()
        .map(|(k, &ck)| {
            let e = s - alpha - k as f64;
            ck * (e * ln_far).exp() / (-e)
        })
        .sum();

    Ok((head + middle + tail) / g)
}

/// ζ′(0) = −Σ log λ for a finite spectrum with zero modes removed, so that
/// det = e^{−ζ′(0)} = Πλ.
pub fn zeta_prime_at_zero(eigenvalues: &[f64]) -> Result<f64> {
    eigenvalues.iter().try_fold(0.0, |acc, &l| {
        if l > 0.0 && l.is_finite() {
            Ok(acc - l.ln())
        } else {
            Err(Error::domain(
                "zeta_prime_at_zero",
                format!("eigenvalue {l} is not positive"),
            ))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heat::{heat_trace_circle, heat_trace_z, heat_trace_zd};
    use crate::specialfn::{gamma, riemann_zeta};
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    // closed form Γ(1/2 − s)/(4^s √π Γ(1 − s)), kept local as an independent oracle
    fn zeta_z_oracle(s: ComplexScalar) -> ComplexScalar {
        gamma(0.5 - s).unwrap() / (c(4.0, 0.0).powc(s) * PI.sqrt() * gamma(1.0 - s).unwrap())
    }

    #[test]
    fn adaptive_examples() {
        let one = integrate_adaptive(|_| c(1.0, 0.0), 0.0, 1.0, 1e-14).unwrap();
        assert!((one - 1.0).norm() < 1e-15);
        // t^{−1/2} on (0, 1] with t = u²
        let two = integrate_adaptive(|u| c(2.0 * u / u.max(1e-300), 0.0), 0.0, 1.0, 1e-14).unwrap();
        assert!((two - 2.0).norm() < 1e-14);
        let e = integrate_adaptive(|t| c((-t).exp(), 0.0), 0.0, 50.0, 1e-13).unwrap();
        assert!((e.re - (1.0 - (-50f64).exp())).abs() < 1e-13);
        let osc = integrate_adaptive(|t| ComplexScalar::from_polar(1.0, 40.0 * t), 0.0, PI, 1e-12).unwrap();
        assert!(osc.norm() < 1e-12);
        assert!(integrate_adaptive(|_| c(1.0, 0.0), 1.0, 0.0, 1e-10).is_err());
    }

    #[test]
    fn adaptive_reports_budget_exhaustion() {
        let r = integrate_adaptive_with(|t| c(t.abs().sqrt().recip(), 0.0), -1.0, 1.0, 1e-14, 10);
        assert!(matches!(r, Err(Error::ToleranceNotMet { subdivisions: 10, .. })));
    }

    #[test]
    fn z_trace_matches_closed_form() {
        let spec = QuadratureSpec::default();
        let tr = heat_trace_z();
        let s = c(0.25, 0.0);
        let v = mellin_zeta(&tr, s, &spec).unwrap();
        assert!((v - 1.180_340_599_016_096_226).norm() < 1e-9);
        for s in [c(0.1, 0.0), c(0.4, 3.0), c(0.2, -5.0), c(0.45, 1.0)] {
            let v = mellin_zeta(&tr, s, &spec).unwrap();
            assert!((v - zeta_z_oracle(s)).norm() < 1e-8, "s = {s}");
        }
    }

    #[test]
    fn circle_trace_gives_riemann_route() {
        let spec = QuadratureSpec::default();
        let s = c(0.3, 0.0);
        let v = mellin_zeta(&heat_trace_circle(), s, &spec).unwrap();
        assert!((v.re - (-1.296_429_863_816_577_102)).abs() < 1e-8);
        let s = c(0.2, 4.0);
        let v = mellin_zeta(&heat_trace_circle(), s, &spec).unwrap();
        let closed = 2.0 * c(4.0, 0.0).powc(-s) * c(PI, 0.0).powc(-2.0 * s) * riemann_zeta(2.0 * s).unwrap();
        assert!((v - closed).norm() < 1e-8);
    }

    #[test]
    fn strip_and_spec_validation() {
        let spec = QuadratureSpec::default();
        let tr = heat_trace_z();
        assert!(matches!(mellin_zeta(&tr, c(0.5, 0.0), &spec), Err(Error::Strip { .. })));
        assert!(matches!(mellin_zeta(&tr, c(0.0, 1.0), &spec), Err(Error::Strip { .. })));
        let z2 = heat_trace_zd(2).unwrap();
        let v = mellin_zeta(&z2, c(0.7, 0.0), &spec).unwrap();
        assert!(v.is_finite());
        let bad = QuadratureSpec { tail_terms: 4, ..spec };
        assert!(mellin_zeta(&tr, c(0.25, 0.0), &bad).is_err());
    }

    #[test]
    fn tail_order_insensitive() {
        let tr = heat_trace_zd(2).unwrap();
        for s in [c(0.3, 0.0), c(0.8, 2.0)] {
            let k2 = mellin_zeta(
                &tr,
                s,
                &QuadratureSpec {
                    tail_terms: 2,
                    ..Default::default()
                },
            )
            .unwrap();
            let k3 = mellin_zeta(
                &tr,
                s,
                &QuadratureSpec {
                    tail_terms: 3,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!((k2 - k3).norm() < 1e-9);
        }
    }

    #[test]
    fn linearity() {
        let spec = QuadratureSpec::default();
        let z = heat_trace_z();
        let z3 = heat_trace_zd(3).unwrap();
        let combo = HeatTrace::linear_combination(&[(2.0, &z), (0.5, &z3)]).unwrap();
        let s = c(0.3, 1.0);
        let lhs = mellin_zeta(&combo, s, &spec).unwrap();
        let rhs = 2.0 * mellin_zeta(&z, s, &spec).unwrap() + 0.5 * mellin_zeta(&z3, s, &spec).unwrap();
        assert!((lhs - rhs).norm() < 1e-9);
    }

    #[test]
    fn determinants() {
        assert_eq!(zeta_prime_at_zero(&[1.0]).unwrap(), 0.0);
        let d = zeta_prime_at_zero(&[3.0, 3.0]).unwrap();
        assert!((d + 9f64.ln()).abs() < 1e-15);
        assert!(((-d).exp() - 9.0).abs() < 1e-13);
        let k4 = zeta_prime_at_zero(&[4.0, 4.0, 4.0]).unwrap();
        assert!(((-k4).exp() - 64.0).abs() < 1e-12);
        assert!(zeta_prime_at_zero(&[1.0, 0.0]).is_err());
    }
}

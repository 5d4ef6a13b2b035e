//! Heat kernels and heat traces: the graphs ℤ and ℤ^d, the circle ℝ/ℤ in
//! both its spectral and its periodized form, and ℚ_p through the shell sum
//! and the power series of the Vladimirov heat kernel.

use crate::specialfn::{is_prime, scaled_bessel_i0};
use crate::{ComplexScalar, Error, Result};
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

/// Terms below this magnitude are dropped from every kernel series.
pub const TERM_FLOOR: f64 = 1e-18;

type TraceFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A heat trace together with the data the Mellin engine needs.
///
/// The tail describes the subtracted trace: for large t,
/// `evaluator(t) − subtract_constant ≈ t^{−α} Σ_k c_k t^{−k}` with
/// α = `tail_exponent` and c_k = `tail_coefficients[k]`.
#[derive(Clone)]
pub struct HeatTrace {
    evaluator: TraceFn,
    /// Value approached as t → 0⁺.
    pub limit_at_zero: f64,
    /// Constant removed before the Mellin transform.
    pub subtract_constant: f64,
    pub tail_exponent: f64,
    pub tail_coefficients: Vec<f64>,
}

impl fmt::Debug for HeatTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeatTrace")
            .field("limit_at_zero", &self.limit_at_zero)
            .field("subtract_constant", &self.subtract_constant)
            .field("tail_exponent", &self.tail_exponent)
            .field("tail_coefficients", &self.tail_coefficients)
            .finish_non_exhaustive()
    }
}

impl HeatTrace {
    pub fn new(
        evaluator: impl Fn(f64) -> f64 + Send + Sync + 'static,
        limit_at_zero: f64,
        subtract_constant: f64,
        tail_exponent: f64,
        tail_coefficients: Vec<f64>,
    ) -> Self {
        HeatTrace {
            evaluator: Arc::new(evaluator),
            limit_at_zero,
            subtract_constant,
            tail_exponent,
            tail_coefficients,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.evaluator)(t)
    }

    /// The asymptotic tail model using the first `terms` coefficients.
    pub fn tail(&self, t: f64, terms: usize) -> f64 {
        let mut acc = 0.0;
        let mut pow = 1.0;
        for c in self.tail_coefficients.iter().take(terms) {
            acc += c * pow;
            pow /= t;
        }
        acc * t.powf(-self.tail_exponent)
    }

    /// Σ wᵢ·traceᵢ. The tail exponents must differ by integers so the tails
    /// merge into one expansion.
    pub fn linear_combination(terms: &[(f64, &HeatTrace)]) -> Result<HeatTrace> {
        let Some(alpha) = terms.iter().map(|(_, t)| t.tail_exponent).min_by(|a, b| a.total_cmp(b)) else {
            return Err(Error::domain("linear_combination", "no traces given"));
        };
        let mut coeffs: Vec<f64> = Vec::new();
        for (w, trace) in terms {
            let shift = trace.tail_exponent - alpha;
            if (shift - shift.round()).abs() > 1e-12 {
                return Err(Error::domain(
                    "linear_combination",
                    format!(
                        "tail exponents {alpha} and {} differ by a non-integer",
                        trace.tail_exponent
                    ),
                ));
            }
            let offset = shift.round() as usize;
            for (k, c) in trace.tail_coefficients.iter().enumerate() {
                if coeffs.len() <= offset + k {
                    coeffs.resize(offset + k + 1, 0.0);
                }
                coeffs[offset + k] += w * c;
            }
        }
        let parts: Vec<(f64, HeatTrace)> = terms.iter().map(|(w, t)| (*w, (*t).clone())).collect();
        let limit = terms.iter().map(|(w, t)| w * t.limit_at_zero).sum();
        let subtract = terms.iter().map(|(w, t)| w * t.subtract_constant).sum();
        Ok(HeatTrace::new(
            move |t| parts.iter().map(|(w, tr)| w * tr.eval(t)).sum(),
            limit,
            subtract,
            alpha,
            coeffs,
        ))
    }
}

/// Coefficients of e^{−2t}I₀(2t)·√(4πt) in powers of 1/t.
const Z_TAIL: [f64; 4] = [1.0, 1.0 / 16.0, 9.0 / 512.0, 225.0 / 24_576.0];

/// The heat trace e^{−2t} I₀(2t) of the graph ℤ.
pub fn heat_trace_z() -> HeatTrace {
    let norm = (4.0 * PI).powf(-0.5);
    HeatTrace::new(
        |t| scaled_bessel_i0(2.0 * t),
        1.0,
        0.0,
        0.5,
        Z_TAIL.iter().map(|c| c * norm).collect(),
    )
}

/// The heat trace (e^{−2t} I₀(2t))^d of the lattice ℤ^d, 1 ≤ d ≤ 8.
pub fn heat_trace_zd(d: u32) -> Result<HeatTrace> {
    if !(1..=8).contains(&d) {
        return Err(Error::domain("heat_trace_zd", format!("dimension {d} outside 1..=8")));
    }
    // truncated power of the one-dimensional tail series
    let mut coeffs = vec![1.0, 0.0, 0.0, 0.0];
    for _ in 0..d {
        let mut next = [0.0; 4];
        for (i, a) in coeffs.iter().enumerate() {
            for (j, b) in Z_TAIL.iter().enumerate().take(4 - i) {
                next[i + j] += a * b;
            }
        }
        coeffs = next.to_vec();
    }
    let norm = (4.0 * PI).powf(-0.5 * d as f64);
    let di = d as i32;
    Ok(HeatTrace::new(
        move |t| scaled_bessel_i0(2.0 * t).powi(di),
        1.0,
        0.0,
        0.5 * d as f64,
        coeffs.iter().map(|c| c * norm).collect(),
    ))
}

/// The circle trace with its small-t singularity removed:
/// Σ_n e^{−4π²n²t} − (4πt)^{−1/2}, with the constant 1 subtracted.
///
/// Its Mellin transform over 0 < Re s < 1/2 is Γ(s)·2·4^{−s}π^{−2s}ζ(2s), the
/// continuation of the circle zeta into the strip where the plain trace
/// integral diverges.
pub fn heat_trace_circle() -> HeatTrace {
    HeatTrace::new(
        |t| {
            if t < 0.5 {
                // periodized form minus its n = 0 term
                let mut sum = 0.0;
                let mut n = 1.0;
                loop {
                    let term = (-(n * n) / (4.0 * t)).exp();
                    sum += 2.0 * term;
                    if term < TERM_FLOOR {
                        break;
                    }
                    n += 1.0;
                }
                sum / (4.0 * PI * t).sqrt()
            } else {
                let mut sum = 1.0;
                let mut n = 1.0;
                loop {
                    let term = (-4.0 * PI * PI * n * n * t).exp();
                    sum += 2.0 * term;
                    if term < TERM_FLOOR {
                        break;
                    }
                    n += 1.0;
                }
                sum - (4.0 * PI * t).powf(-0.5)
            }
        },
        0.0,
        1.0,
        0.5,
        vec![-(4.0 * PI).powf(-0.5), 0.0, 0.0, 0.0],
    )
}

fn check_time(function: &'static str, t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(function, format!("time {t} must be positive")))
    }
}

/// Σ_{n∈ℤ} e^{−4π²n²t} e^{2πinx}.
pub fn circle_heat_kernel_spectral(t: f64, x: f64) -> Result<ComplexScalar> {
    check_time("circle_heat_kernel_spectral", t)?;
    let mut sum = ComplexScalar::new(1.0, 0.0);
    let mut n = 1.0;
    loop {
        let weight = (-4.0 * PI * PI * n * n * t).exp();
        if weight < TERM_FLOOR {
            return Ok(sum);
        }
        let phase = 2.0 * PI * n * x;
        sum += ComplexScalar::from_polar(weight, phase) + ComplexScalar::from_polar(weight, -phase);
        n += 1.0;
    }
}

/// (4πt)^{−1/2} Σ_{n∈ℤ} e^{−(x+n)²/(4t)}.
pub fn circle_heat_kernel_periodized(t: f64, x: f64) -> Result<f64> {
    check_time("circle_heat_kernel_periodized", t)?;
    let centre = -x.round();
    let term = |n: f64| (-(x + n).powi(2) / (4.0 * t)).exp();
    let mut sum = term(centre);
    for dir in [1.0, -1.0] {
        let mut n = centre + dir;
        loop {
            let v = term(n);
            sum += v;
            if v < TERM_FLOOR {
                break;
            }
            n += dir;
        }
    }
    Ok(sum / (4.0 * PI * t).sqrt())
}

/// A point of ℚ_p known only through its absolute value |x|_p = p^{−v}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PAdicAbs {
    p: u32,
    valuation: i32,
}

impl PAdicAbs {
    pub fn new(p: u32, valuation: i32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::domain("PAdicAbs", format!("{p} is not prime")));
        }
        Ok(PAdicAbs { p, valuation })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn valuation(&self) -> i32 {
        self.valuation
    }

    /// |x|_p = p^{−v}.
    pub fn abs(&self) -> f64 {
        (self.p as f64).powi(-self.valuation)
    }
}

fn check_padic(function: &'static str, p: u32, x: Option<PAdicAbs>, t: f64) -> Result<()> {
    check_time(function, t)?;
    if !is_prime(p as u64) {
        return Err(Error::domain(function, format!("{p} is not prime")));
    }
    if let Some(x) = x {
        if x.p != p {
            return Err(Error::domain(
                function,
                format!("point carries prime {} but kernel uses {p}", x.p),
            ));
        }
    }
    Ok(())
}

/// The Vladimirov heat kernel as a sum over balls:
/// K_p(x,t) = Σ_k (e^{−tp^{2k}} − e^{−tp^{2k+2}}) p^k C_{p^{−k}}(x).
///
/// `x = None` is the origin. The indicator C_{p^{−k}}(x) restricts the sum to
/// k ≤ v(x).
pub fn padic_heat_kernel_shell(p: u32, x: Option<PAdicAbs>, t: f64) -> Result<f64> {
    check_padic("padic_heat_kernel_shell", p, x, t)?;
    let pf = p as f64;
    let top = match x {
        Some(x) => x.valuation,
        None => {
            // beyond this both exponentials underflow
            let mut k = 0;
            while t * pf.powi(2 * k) < 800.0 {
                k += 1;
            }
            k
        }
    };
    let mut sum = 0.0;
    let mut k = top;
    loop {
        let a = t * pf.powi(2 * k);
        let b = a * pf * pf;
        // e^{−a} − e^{−b} without cancellation for small a, b
        let diff = -(-a).exp() * (-(b - a)).exp_m1();
        let term = diff * pf.powi(k);
        sum += term;
        if b < 1e-3 && term.abs() < TERM_FLOOR {
            return Ok(sum);
        }
        k -= 1;
    }
}

/// The same kernel from its power series in t, valid for x ≠ 0:
/// Σ_m (−1)^m t^m/m! · (1−p^{2m})/(1−p^{−2m−1}) · |x|_p^{−2m−1}.
///
/// Restricted to t·p²/|x|_p² < 1, where the alternating series loses no
/// precision.
pub fn padic_heat_kernel_series(p: u32, x: PAdicAbs, t: f64) -> Result<f64> {
    check_padic("padic_heat_kernel_series", p, Some(x), t)?;
    let pf = p as f64;
    let ax = x.abs();
    let z = t * pf * pf / (ax * ax);
    if z >= 1.0 {
        return Err(Error::Convergence(format!(
            "t·p²/|x|² = {z} must be below 1 for the series form"
        )));
    }
    let mut sum = 0.0;
    // r = z^m/m!; the m-th term is (−1)^m r (p^{−2m} − 1) / ((1 − p^{−2m−1}) |x|)
    let mut r = 1.0;
    let mut m = 0;
    loop {
        m += 1;
        r *= z / m as f64;
        let p_neg = pf.powi(-2 * m);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * r * (p_neg - 1.0) / ((1.0 - p_neg / pf) * ax);
        sum += term;
        if term.abs() < TERM_FLOOR {
            return Ok(sum);
        }
    }
}

//! Trigonometric helpers with exact argument reduction.

use crate::ComplexScalar;
use std::f64::consts::PI;

/// sin(πx) with the reduction modulo 2 done exactly, so the result keeps full
/// relative accuracy next to the integers.
pub fn sinpi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x / 2.0).round();
    let (a, sign) = if r < 0.0 { (-r, -1.0) } else { (r, 1.0) };
    let v = if a <= 0.25 {
        (PI * a).sin()
    } else if a <= 0.75 {
        (PI * (a - 0.5)).cos()
    } else {
        (PI * (1.0 - a)).sin()
    };
    sign * v
}

/// cos(πx), reduced like [`sinpi`].
pub fn cospi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x / 2.0).round();
    let a = r.abs();
    if a <= 0.25 {
        (PI * a).cos()
    } else if a <= 0.75 {
        (PI * (0.5 - a)).sin()
    } else {
        -(PI * (1.0 - a)).cos()
    }
}

/// sin(πz) for complex z.
pub fn sin_pi(z: ComplexScalar) -> ComplexScalar {
    let y = PI * z.im;
    ComplexScalar::new(sinpi(z.re) * y.cosh(), cospi(z.re) * y.sinh())
}

/// cos(πz) for complex z.
pub fn cos_pi(z: ComplexScalar) -> ComplexScalar {
    let y = PI * z.im;
    ComplexScalar::new(cospi(z.re) * y.cosh(), -sinpi(z.re) * y.sinh())
}

/// e^z − 1 without cancellation for small |z|.
pub fn expm1(z: ComplexScalar) -> ComplexScalar {
    let half = (0.5 * z.im).sin();
    ComplexScalar::new(z.re.exp_m1() * z.im.cos() - 2.0 * half * half, z.re.exp() * z.im.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinpi_is_exact_at_integers_and_halves() {
        for k in -20..=20 {
            assert_eq!(sinpi(k as f64), 0.0);
            assert_eq!(cospi(k as f64 + 0.5), 0.0);
        }
        assert_eq!(sinpi(0.5), 1.0);
        assert_eq!(sinpi(-1.5), 1.0);
        assert_eq!(cospi(1.0), -1.0);
    }

    #[test]
    fn sinpi_keeps_relative_accuracy_near_integers() {
        // sin(π(5 + 1e-9)) = -sin(π·1e-9)
        let v = sinpi(5.0 + 1e-9);
        let eps = (5.0 + 1e-9) - 5.0;
        let expected = -(PI * eps).sin();
        assert!(((v - expected) / expected).abs() < 1e-15);
    }

    #[test]
    fn complex_expm1_small_argument() {
        let z = ComplexScalar::new(1e-12, -2e-12);
        let v = expm1(z);
        assert!((v - z).norm() < 1e-23);
    }
}

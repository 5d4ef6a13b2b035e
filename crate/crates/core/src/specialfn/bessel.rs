//! Modified Bessel function I₀ and its exponentially scaled form.
//!
//! Power series below u = 20, the large-argument asymptotic series above it.
//! At the crossover the asymptotic series reaches its smallest term near
//! k ≈ 2u, far below double-precision resolution.

use crate::{Error, Result};
use std::f64::consts::PI;

const CROSSOVER: f64 = 20.0;

fn power_series(u: f64) -> f64 {
    let q = 0.25 * u * u;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= q / (k * k);
        sum += term;
        if term < 1e-17 * sum {
            return sum;
        }
    }
}

/// 1 + 1/(8u) + 9/(128u²) + ..., summed until the terms stop shrinking.
fn asymptotic_series(u: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0_f64;
    loop {
        let next = term * (2.0 * k + 1.0).powi(2) / (8.0 * (k + 1.0) * u);
        if next.abs() >= term.abs() || next < 1e-17 * sum {
            return sum;
        }
        sum += next;
        term = next;
        k += 1.0;
    }
}

/// I₀(u) for u ≥ 0.
///
/// Returns [`Error::Overflow`] once e^u leaves the double range (u ≳ 709);
/// use [`scaled_bessel_i0`] there.
pub fn bessel_i0(u: f64) -> Result<f64> {
    if !(u >= 0.0) {
        return Err(Error::domain("bessel_i0", format!("argument {u} must be >= 0")));
    }
    if u < CROSSOVER {
        return Ok(power_series(u));
    }
    let v = u.exp() / (2.0 * PI * u).sqrt() * asymptotic_series(u);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow {
            function: "bessel_i0",
            arg: u,
        })
    }
}

/// e^{−u} I₀(u), finite for every u. I₀ is even, so negative arguments are
/// folded onto |u|.
pub fn scaled_bessel_i0(u: f64) -> f64 {
    let u = u.abs();
    if u < CROSSOVER {
        power_series(u) * (-u).exp()
    } else {
        asymptotic_series(u) / (2.0 * PI * u).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(bessel_i0(0.0).unwrap(), 1.0);
        // mpmath: I0(1) = 1.266065877752008335598...
        assert!((bessel_i0(1.0).unwrap() / 1.266_065_877_752_008_3 - 1.0).abs() < 1e-14);
        // e^{-2} I0(2) = 0.30850832255367103953...
        assert!((scaled_bessel_i0(2.0) / 0.308_508_322_553_671_04 - 1.0).abs() < 1e-14);
        // I0(100) = 1.0737517071310738235e42
        assert!((bessel_i0(100.0).unwrap() / 1.073_751_707_131_073_8e42 - 1.0).abs() < 1e-12);
        // e^{-50} I0(50) = 0.056561626647454192530
        assert!((scaled_bessel_i0(50.0) / 0.056_561_626_647_454_193 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn regimes_agree_at_crossover() {
        for &u in &[19.0, 19.9, 20.0, 20.5, 22.0] {
            let series = power_series(u);
            let asym = u.exp() / (2.0 * PI * u).sqrt() * asymptotic_series(u);
            assert!((series / asym - 1.0).abs() < 1e-12, "u = {u}");
        }
        // I0(20) = 43558282.559553533272
        assert!((bessel_i0(20.0).unwrap() / 43_558_282.559_553_533 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn scaled_consistent_with_unscaled() {
        let mut u = 0.0;
        while u <= 500.0 {
            let a = scaled_bessel_i0(u) * u.exp();
            let b = bessel_i0(u).unwrap();
            assert!((a / b - 1.0).abs() < 1e-12, "u = {u}");
            u += 0.37;
        }
    }

    #[test]
    fn large_argument_tail() {
        for &u in &[1e3, 1e4, 1e6] {
            let ratio = scaled_bessel_i0(u) * (2.0 * PI * u).sqrt();
            let first = 1.0 / (8.0 * u);
            assert!((ratio - 1.0 - first).abs() < 1.0 / (u * u));
        }
    }

    #[test]
    fn overflow_and_domain() {
        assert!(matches!(bessel_i0(800.0), Err(Error::Overflow { .. })));
        assert!(matches!(bessel_i0(-1.0), Err(Error::Domain { .. })));
        assert!(scaled_bessel_i0(1e300).is_finite());
    }
}

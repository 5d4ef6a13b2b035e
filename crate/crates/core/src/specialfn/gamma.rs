//! Complex Gamma via the Lanczos approximation (g = 7, n = 9), with the
//! reflection formula for Re z < 1/2.

use super::elementary::sin_pi;
use crate::ComplexScalar;
use crate::{Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;

// Godfrey's coefficients, good to about 15 digits.
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

// 0.5 * ln(2π)
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

fn is_pole(z: ComplexScalar) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// ln Γ(z) for Re z ≥ 1/2 from the Lanczos sum.
fn lanczos_ln_gamma(z: ComplexScalar) -> ComplexScalar {
    let z = z - 1.0;
    let mut series = ComplexScalar::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + HALF_LN_TWO_PI + series.ln()
}

/// Logarithm of the Gamma function.
///
/// For Re z ≥ 1/2 the imaginary part follows the analytic continuation of
/// ln Γ from the positive reals. Left of that line the value comes from the
/// reflection formula and may differ from it by a multiple of 2πi; its
/// exponential is always Γ(z).
pub fn log_gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if is_pole(z) {
        return Err(Error::pole("log_gamma", z));
    }
    if z.re >= 0.5 {
        Ok(lanczos_ln_gamma(z))
    } else {
        let s = sin_pi(z);
        Ok(ComplexScalar::new(PI.ln(), 0.0) - s.ln() - lanczos_ln_gamma(1.0 - z))
    }
}

/// Γ(z) for complex z off the non-positive integers.
pub fn gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if is_pole(z) {
        return Err(Error::pole("gamma", z));
    }
    if z.re >= 0.5 {
        Ok(lanczos_ln_gamma(z).exp())
    } else {
        Ok(PI / (sin_pi(z) * lanczos_ln_gamma(1.0 - z).exp()))
    }
}

/// 1/Γ(z), entire; zero at the non-positive integers.
pub fn reciprocal_gamma(z: ComplexScalar) -> ComplexScalar {
    if is_pole(z) {
        return ComplexScalar::new(0.0, 0.0);
    }
    if z.re >= 0.5 {
        (-lanczos_ln_gamma(z)).exp()
    } else {
        sin_pi(z) * lanczos_ln_gamma(1.0 - z).exp() / PI
    }
}

//! Dirichlet characters and L-functions.

use super::elementary::{cospi, sinpi};
use super::zeta::hurwitz_zeta;
use crate::{ComplexScalar, Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A Dirichlet character given by its value table on residues 0..m.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletCharacter {
    modulus: u32,
    values: Vec<ComplexScalar>,
    even: bool,
    primitive: bool,
}

const TABLE_TOL: f64 = 1e-12;

impl DirichletCharacter {
    /// Builds a character from an explicit table `values[k] = χ(k)`, k = 0..m.
    ///
    /// The table must vanish exactly off the units, have unit modulus on them
    /// and be completely multiplicative. Parity and primitivity are derived.
    pub fn from_values(values: Vec<ComplexScalar>) -> Result<Self> {
        let m = values.len() as u64;
        if m == 0 {
            return Err(Error::domain("DirichletCharacter", "empty value table"));
        }
        for (k, v) in values.iter().enumerate() {
            let unit = gcd(k as u64, m) == 1;
            if unit && (v.norm() - 1.0).abs() > TABLE_TOL {
                return Err(Error::domain(
                    "DirichletCharacter",
                    format!("|chi({k})| = {} but {k} is a unit mod {m}", v.norm()),
                ));
            }
            if !unit && *v != ComplexScalar::new(0.0, 0.0) {
                return Err(Error::domain(
                    "DirichletCharacter",
                    format!("chi({k}) must vanish since gcd({k}, {m}) > 1"),
                ));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let lhs = values[((a * b) % m) as usize];
                let rhs = values[a as usize] * values[b as usize];
                if (lhs - rhs).norm() > TABLE_TOL {
                    return Err(Error::domain(
                        "DirichletCharacter",
                        format!("table is not multiplicative at ({a}, {b})"),
                    ));
                }
            }
        }
        let even = (values[(m - 1) as usize] - 1.0).norm() <= TABLE_TOL;
        let primitive = Self::is_primitive_table(&values);
        Ok(DirichletCharacter {
            modulus: m as u32,
            values,
            even,
            primitive,
        })
    }

    /// χ is induced from modulus d | m exactly when χ(a) = 1 for every unit
    /// a ≡ 1 (mod d). Primitive means no proper divisor d works.
    fn is_primitive_table(values: &[ComplexScalar]) -> bool {
        let m = values.len() as u64;
        if m == 1 {
            return true;
        }
        (1..m).filter(|d| m.is_multiple_of(*d)).all(|d| {
            (0..m)
                .filter(|&a| a % d == 1 % d && gcd(a, m) == 1)
                .any(|a| (values[a as usize] - 1.0).norm() > TABLE_TOL)
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[ComplexScalar] {
        &self.values
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// True when every unit maps to 1.
    pub fn is_principal(&self) -> bool {
        self.values
            .iter()
            .all(|v| *v == ComplexScalar::new(0.0, 0.0) || (v - 1.0).norm() <= TABLE_TOL)
    }

    /// χ(k) for any integer k.
    pub fn value(&self, k: i64) -> ComplexScalar {
        let m = self.modulus as i64;
        self.values[k.rem_euclid(m) as usize]
    }

    /// The complex-conjugate character χ̄.
    pub fn conj(&self) -> Self {
        DirichletCharacter {
            values: self.values.iter().map(|v| v.conj()).collect(),
            ..self.clone()
        }
    }
}

/// The character of index j modulo a prime m: χ(g^a) = e^{2πi·j·a/(m−1)} for
/// the least primitive root g.
pub fn make_character(m: u32, j: u32) -> Result<DirichletCharacter> {
    if m < 3 || !is_prime(m as u64) {
        return Err(Error::domain(
            "make_character",
            format!("modulus {m} must be a prime >= 3; supply a value table for other moduli"),
        ));
    }
    if j > m - 2 {
        return Err(Error::domain(
            "make_character",
            format!("index {j} outside [0, {}]", m - 2),
        ));
    }
    let m64 = m as u64;
    let order = m64 - 1;
    let g = (2..m64)
        .find(|&g| {
            let mut x = 1;
            (1..order).all(|_| {
                x = x * g % m64;
                x != 1
            })
        })
        .expect("a prime modulus has a primitive root");

    let mut values = vec![ComplexScalar::new(0.0, 0.0); m as usize];
    let mut x = 1u64;
    for a in 0..order {
        // reduce j·a modulo m−1 first so the angle stays exact
        let turns = 2.0 * ((j as u64 * a) % order) as f64 / order as f64;
        values[x as usize] = ComplexScalar::new(cospi(turns), sinpi(turns));
        x = x * g % m64;
    }
    Ok(DirichletCharacter {
        modulus: m,
        values,
        even: j.is_multiple_of(2),
        primitive: j != 0,
    })
}

/// L(s, χ) = m^{−s} Σ_{a=1}^{m} χ(a) ζ(s, a/m).
pub fn dirichlet_l(s: ComplexScalar, chi: &DirichletCharacter) -> Result<ComplexScalar> {
    let m = chi.modulus() as f64;
    if s == ComplexScalar::new(1.0, 0.0) && chi.is_principal() {
        return Err(Error::pole("dirichlet_l", s));
    }
    let mut sum = ComplexScalar::new(0.0, 0.0);
    for a in 1..=chi.modulus() {
        let v = chi.value(a as i64);
        if v != ComplexScalar::new(0.0, 0.0) {
            sum += v * hurwitz_zeta(s, a as f64 / m)?;
        }
    }
    Ok((-s * m.ln()).exp() * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialfn::riemann_zeta;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn quadratic_character_mod_5() {
        let chi = make_character(5, 2).unwrap();
        let expected = [0.0, 1.0, -1.0, -1.0, 1.0];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(chi.value(k as i64), c(*e, 0.0), "k = {k}");
        }
        assert!(chi.is_even());
        assert!(chi.is_primitive());
    }

    #[test]
    fn principal_and_odd() {
        let chi = make_character(5, 0).unwrap();
        assert!(chi.is_principal());
        assert!(!chi.is_primitive());
        let chi = make_character(7, 3).unwrap();
        assert_eq!(chi.value(6), c(-1.0, 0.0));
        assert!(!chi.is_even());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(make_character(9, 1).is_err());
        assert!(make_character(2, 0).is_err());
        assert!(make_character(7, 6).is_err());
    }

    #[test]
    fn table_invariants_hold_for_all_small_primes() {
        for m in [3u32, 5, 7, 11, 13] {
            for j in 0..=m - 2 {
                let chi = make_character(m, j).unwrap();
                // rebuilding from the table re-validates every invariant
                let rebuilt = DirichletCharacter::from_values(chi.values().to_vec()).unwrap();
                assert_eq!(rebuilt.is_even(), chi.is_even());
                assert_eq!(rebuilt.is_primitive(), chi.is_primitive(), "m={m}, j={j}");
                let total: ComplexScalar = chi.values().iter().sum();
                if j != 0 {
                    assert!(total.norm() < 1e-14, "m={m}, j={j}: {total}");
                }
            }
        }
    }

    #[test]
    fn composite_table_flags() {
        // the odd character mod 4
        let chi = DirichletCharacter::from_values(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert!(chi.is_primitive());
        assert!(!chi.is_even());
        // mod 6 character induced from mod 3
        let chi = DirichletCharacter::from_values(vec![
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(-1.0, 0.0),
        ])
        .unwrap();
        assert!(!chi.is_primitive());
        // non-multiplicative table
        assert!(DirichletCharacter::from_values(vec![
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(1.0, 0.0),
            c(-1.0, 0.0),
            c(1.0, 0.0)
        ])
        .is_err());
    }

    #[test]
    fn l_function_reductions() {
        let trivial = DirichletCharacter::from_values(vec![c(1.0, 0.0)]).unwrap();
        let s = c(0.6, 7.0);
        let l = dirichlet_l(s, &trivial).unwrap();
        assert!((l - riemann_zeta(s).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn l_function_against_direct_sum() {
        let chi = make_character(5, 2).unwrap();
        let direct: f64 = (1..=1_000_000i64)
            .map(|k| chi.value(k).re / (k as f64 * k as f64))
            .sum();
        let l = dirichlet_l(c(2.0, 0.0), &chi).unwrap();
        assert!((l.re - direct).abs() < 1e-8);
        // mpmath: L(2, χ₅) = 0.70621140325974098463
        assert!((l.re - 0.706_211_403_259_740_98).abs() < 1e-13);
    }

    #[test]
    fn l_function_on_critical_line() {
        let chi = make_character(5, 2).unwrap();
        let l = dirichlet_l(c(0.5, 10.0), &chi).unwrap();
        let expected = c(0.070_062_275_489_876_655, 0.255_411_187_687_493_54);
        assert!((l - expected).norm() < 1e-10 * expected.norm());
    }
}

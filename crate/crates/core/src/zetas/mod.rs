//! Spectral zeta functions in closed form, with their completed (ξ) variants
//! and a dispatcher over spaces and evaluation routes.

mod hypergeometric;
mod tree;

pub use hypergeometric::{appell_f1_picard, lauricella_fc, FcSum, DEFAULT_MAX_ORDER};
pub use tree::{tree_measure_moment, zeta_tree, zeta_tree_spectral_measure};

use crate::experiments::{cycle_spectrum, FiniteGraphSpectrum};
use crate::heat::{heat_trace_circle, heat_trace_z, heat_trace_zd};
use crate::mellin::{mellin_zeta, QuadratureSpec};
use crate::specialfn::{cos_pi, expm1, gamma, is_prime, log_gamma, riemann_zeta, sin_pi, sinpi, DirichletCharacter};
use crate::{ComplexScalar, Error, Result};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// The spaces whose zeta functions are implemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaSpace {
    /// The circle ℝ/ℤ.
    Circle,
    Z,
    /// The cycle ℤ/nℤ, n ≥ 2.
    Cycle(u32),
    /// The lattice ℤ^d, d ≥ 1.
    Zd(u32),
    /// The (q+1)-regular tree, q ≥ 2.
    Tree(u32),
    /// ℚ_p/ℤ_p under the Vladimirov Laplacian, p prime.
    PAdic(u32),
}

/// How a zeta value is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Gamma ratios, finite sums, or hypergeometric closed forms.
    Closed,
    /// Mellin transform of the heat trace.
    Mellin,
    /// Lauricella F_C series (ℤ^d only).
    Lauricella,
    /// Integration or summation against the spectral measure.
    Measure,
}

impl ZetaSpace {
    pub fn validate(self) -> Result<Self> {
        let bad = |reason: String| Err(Error::domain("ZetaSpace", reason));
        match self {
            ZetaSpace::Cycle(n) if n < 2 => bad(format!("cycle length {n} must be at least 2")),
            ZetaSpace::Zd(d) if d < 1 => bad("dimension must be at least 1".into()),
            ZetaSpace::Tree(q) if q < 2 => bad(format!("tree parameter q = {q} must be at least 2")),
            ZetaSpace::PAdic(p) if !is_prime(p as u64) => bad(format!("{p} is not prime")),
            _ => Ok(self),
        }
    }

    pub fn default_route(self) -> Route {
        match self {
            ZetaSpace::Zd(d) if d > 1 => Route::Mellin,
            _ => Route::Closed,
        }
    }

    /// Evaluates the space's zeta function along `route`, or the default route.
    pub fn zeta(self, s: ComplexScalar, route: Option<Route>) -> Result<ComplexScalar> {
        self.validate()?;
        let route = route.unwrap_or(self.default_route());
        let spec = QuadratureSpec::default();
        match (self, route) {
            (ZetaSpace::Z, Route::Closed) | (ZetaSpace::Zd(1), Route::Closed) => zeta_z(s),
            (ZetaSpace::Z, Route::Mellin) => mellin_zeta(&heat_trace_z(), s, &spec),
            (ZetaSpace::Z, Route::Lauricella) => zeta_zd(1, s, Route::Lauricella),
            (ZetaSpace::Circle, Route::Closed) => zeta_circle(s),
            (ZetaSpace::Circle, Route::Mellin) => mellin_zeta(&heat_trace_circle(), s, &spec),
            (ZetaSpace::Cycle(n), Route::Closed) => Ok(zeta_cycle(n as usize, s)),
            (ZetaSpace::Cycle(n), Route::Measure) => Ok(finite_graph_zeta(&cycle_spectrum(n as usize)?, s)),
            (ZetaSpace::Zd(d), Route::Mellin | Route::Lauricella) => zeta_zd(d, s, route),
            (ZetaSpace::Tree(q), Route::Closed) => zeta_tree(q, s),
            (ZetaSpace::Tree(q), Route::Measure) => zeta_tree_spectral_measure(q, s),
            (ZetaSpace::PAdic(p), Route::Closed) => zeta_p(p, s),
            (ZetaSpace::PAdic(p), Route::Measure) => zeta_p_eigenvalue_sum(p, s),
            _ => Err(Error::domain(
                "ZetaSpace::zeta",
                format!("route {route} is not available for space {self}"),
            )),
        }
    }
}

impl fmt::Display for ZetaSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaSpace::Circle => write!(f, "circle"),
            ZetaSpace::Z => write!(f, "Z"),
            ZetaSpace::Cycle(n) => write!(f, "cycle:{n}"),
            ZetaSpace::Zd(d) => write!(f, "Zd:{d}"),
            ZetaSpace::Tree(q) => write!(f, "tree:{q}"),
            ZetaSpace::PAdic(p) => write!(f, "padic:{p}"),
        }
    }
}

/// Grammar: `Z | circle | cycle:<n> | Zd:<d> | tree:<q> | padic:<p>`.
impl FromStr for ZetaSpace {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::domain("ZetaSpace", format!("cannot parse space '{text}'"));
        let space = match text.split_once(':') {
            None => match text {
                "Z" => ZetaSpace::Z,
                "circle" => ZetaSpace::Circle,
                _ => return Err(bad()),
            },
            Some((kind, param)) => {
                let n: u32 = param.parse().map_err(|_| bad())?;
                match kind {
                    "cycle" => ZetaSpace::Cycle(n),
                    "Zd" => ZetaSpace::Zd(n),
                    "tree" => ZetaSpace::Tree(n),
                    "padic" => ZetaSpace::PAdic(n),
                    _ => return Err(bad()),
                }
            }
        };
        space.validate()
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Closed => "closed",
            Route::Mellin => "mellin",
            Route::Lauricella => "lauricella",
            Route::Measure => "measure",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "closed" => Ok(Route::Closed),
            "mellin" => Ok(Route::Mellin),
            "lauricella" => Ok(Route::Lauricella),
            "measure" => Ok(Route::Measure),
            _ => Err(Error::domain("Route", format!("unknown route '{text}'"))),
        }
    }
}

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

/// The nonnegative integer k with s = k + offset, if any.
fn lattice_index(s: ComplexScalar, offset: f64) -> Option<u64> {
    let k = s.re - offset;
    (s.im == 0.0 && k >= 0.0 && k.fract() == 0.0).then_some(k as u64)
}

/// ζ_ℤ(s) = Γ(1/2 − s)/(4^s √π Γ(1 − s)); zero at positive integers, poles at
/// s = 1/2, 3/2, ….
pub fn zeta_z(s: ComplexScalar) -> Result<ComplexScalar> {
    if lattice_index(s, 0.5).is_some() {
        return Err(Error::pole("zeta_z", s));
    }
    if lattice_index(s, 1.0).is_some() {
        return Ok(c(0.0, 0.0));
    }
    let ln = log_gamma(0.5 - s)? - log_gamma(1.0 - s)? - s * 4f64.ln() - 0.5 * PI.ln();
    Ok(ln.exp())
}

/// The central binomial coefficient (−2s choose −s) = Γ(1 − 2s)/Γ(1 − s)².
pub fn zeta_z_binomial(s: ComplexScalar) -> Result<ComplexScalar> {
    if lattice_index(s, 0.5).is_some() {
        return Err(Error::pole("zeta_z_binomial", s));
    }
    if lattice_index(s, 1.0).is_some() {
        return Ok(c(0.0, 0.0));
    }
    Ok((log_gamma(1.0 - 2.0 * s)? - 2.0 * log_gamma(1.0 - s)?).exp())
}

/// ξ_ℤ(s) = 2^s cos(πs/2) ζ_ℤ(s/2), entire.
///
/// Near s = 1, 3, 5, … the cosine zero meets a pole of ζ_ℤ(s/2); there the
/// product is evaluated as √π/(Γ((1+s)/2) Γ(1 − s/2)).
pub fn xi_z(s: ComplexScalar) -> ComplexScalar {
    let nearest_odd = 2.0 * ((s.re - 1.0) / 2.0).round() + 1.0;
    if nearest_odd >= 1.0 && (s - nearest_odd).norm() < 1e-3 {
        return PI.sqrt()
            * crate::specialfn::reciprocal_gamma((1.0 + s) / 2.0)
            * crate::specialfn::reciprocal_gamma(1.0 - s / 2.0);
    }
    let z = zeta_z(s / 2.0).expect("poles excluded above");
    (s * 2f64.ln()).exp() * cos_pi(s / 2.0) * z
}

/// ζ_{ℝ/ℤ}(s) = 2·4^{−s}π^{−2s}ζ(2s), from the eigenvalues 4π²n².
pub fn zeta_circle(s: ComplexScalar) -> Result<ComplexScalar> {
    let z = riemann_zeta(2.0 * s).map_err(|_| Error::pole("zeta_circle", s))?;
    Ok(2.0 * (-s * (4.0 * PI * PI).ln()).exp() * z)
}

/// ξ(s) = ½·2^s π^{s/2} Γ(s/2) ζ_{ℝ/ℤ}(s/2), with poles at s = 0 and s = 1.
pub fn xi_circle(s: ComplexScalar) -> Result<ComplexScalar> {
    if s == c(0.0, 0.0) || s == c(1.0, 0.0) {
        return Err(Error::pole("xi_circle", s));
    }
    let g = gamma(s / 2.0)?;
    let z = zeta_circle(s / 2.0)?;
    Ok(0.5 * (s * (2f64.ln() + 0.5 * PI.ln())).exp() * g * z)
}

/// ζ_{ℤ/nℤ}(s) = 4^{−s} Σ_{k=1}^{n−1} sin(πk/n)^{−2s}, summing k and n−k together.
pub fn zeta_cycle(n: usize, s: ComplexScalar) -> ComplexScalar {
    let mut sum = c(0.0, 0.0);
    for k in 1..=n / 2 {
        let term = (-2.0 * s * sinpi(k as f64 / n as f64).ln()).exp();
        sum += if 2 * k == n { term } else { 2.0 * term };
    }
    (-s * 4f64.ln()).exp() * sum
}

/// Σ λ^{−s} over the strictly positive eigenvalues.
pub fn finite_graph_zeta(spectrum: &FiniteGraphSpectrum, s: ComplexScalar) -> ComplexScalar {
    spectrum
        .nonzero_eigenvalues()
        .iter()
        .map(|&l| (-s * l.ln()).exp())
        .sum()
}

/// The ℤ^d zeta function, by the Mellin transform of (e^{−2t}I₀(2t))^d in
/// 0 < Re s < d/2, or by (2d)^{−s} F_C^{(d)}(s/2, (s+1)/2; 1, …, 1; 1/d², …, 1/d²).
///
/// The F_C point lies on the boundary of convergence, so that route relies
/// on extrapolated partial sums and reports a convergence error when the
/// extrapolation is not stable to 1e−8.
pub fn zeta_zd(d: u32, s: ComplexScalar, route: Route) -> Result<ComplexScalar> {
    if !(1..=8).contains(&d) {
        return Err(Error::domain("zeta_zd", format!("dimension {d} outside 1..=8")));
    }
    match route {
        Route::Mellin => mellin_zeta(&heat_trace_zd(d)?, s, &QuadratureSpec::default()),
        Route::Lauricella => {
            let df = d as f64;
            let x = vec![1.0 / (df * df); d as usize];
            let ones = vec![1.0; d as usize];
            let fc = lauricella_fc(s / 2.0, (s + 1.0) / 2.0, &ones, &x, DEFAULT_MAX_ORDER)?;
            let value = (-s * (2.0 * df).ln()).exp() * fc.value;
            if fc.error_estimate > 1e-8 * value.norm().max(1.0) {
                return Err(Error::Convergence(format!(
                    "F_C extrapolation unstable at s = {s}: spread {:e}",
                    fc.error_estimate
                )));
            }
            Ok(value)
        }
        _ => Err(Error::domain("zeta_zd", format!("route {route} is not available"))),
    }
}

fn check_prime(function: &'static str, p: u32) -> Result<f64> {
    if is_prime(p as u64) {
        Ok(p as f64)
    } else {
        Err(Error::domain(function, format!("{p} is not prime")))
    }
}

/// w = (2s − 1) ln p together with the index k of the lattice point
/// s = 1/2 + iπk/ln p that s sits on, if any.
fn padic_offset(p: f64, s: ComplexScalar) -> (ComplexScalar, Option<i64>) {
    let w = (2.0 * s - 1.0) * p.ln();
    let k = (w.im / (2.0 * PI)).round();
    let reduced = w - c(0.0, 2.0 * PI * k);
    let on_lattice = reduced.norm() <= 4.0 * f64::EPSILON * w.norm().max(1.0);
    (w, on_lattice.then_some(k as i64))
}

/// ζ_p(s) = (p − 1)/(p^{2s} − p) for ℚ_p/ℤ_p.
pub fn zeta_p(p: u32, s: ComplexScalar) -> Result<ComplexScalar> {
    let pf = check_prime("zeta_p", p)?;
    let (w, lattice) = padic_offset(pf, s);
    if lattice.is_some() {
        return Err(Error::pole("zeta_p", s));
    }
    // p^{2s} − p = p·(e^w − 1)
    Ok((pf - 1.0) / (pf * expm1(w)))
}

/// ζ_p(s) as the eigenvalue sum Σ_{k≥1} (p^k − p^{k−1}) p^{−2ks}, for Re s > 1/2.
pub fn zeta_p_eigenvalue_sum(p: u32, s: ComplexScalar) -> Result<ComplexScalar> {
    let pf = check_prime("zeta_p_eigenvalue_sum", p)?;
    if !(s.re > 0.5) {
        return Err(Error::domain(
            "zeta_p_eigenvalue_sum",
            format!("Re s = {} must exceed 1/2", s.re),
        ));
    }
    let ratio = ((1.0 - 2.0 * s) * pf.ln()).exp();
    let mut term = (1.0 - 1.0 / pf) * ratio;
    let mut sum = c(0.0, 0.0);
    while term.norm() > 1e-18 * sum.norm().max(1e-300) {
        sum += term;
        term *= ratio;
    }
    Ok(sum)
}

/// ξ_p(s) = sin(2πs) p^s ζ_p(s), symmetric under s ↔ 1 − s.
///
/// Written in w = s − 1/2 as −sin(2πw)·p^{w−1/2}(p−1)/expm1(2w ln p), which
/// stays accurate through the removable singularity at s = 1/2. The other
/// points of the lattice s = 1/2 + iπk/ln p are genuine poles.
pub fn xi_p(p: u32, s: ComplexScalar) -> Result<ComplexScalar> {
    let pf = check_prime("xi_p", p)?;
    let w = s - 0.5;
    let ln_p = pf.ln();
    match padic_offset(pf, s).1 {
        Some(0) => return Ok(c(-PI * (pf - 1.0) / (pf.sqrt() * ln_p), 0.0)),
        Some(_) => return Err(Error::pole("xi_p", s)),
        None => {}
    }
    let num = -sin_pi(2.0 * w) * ((w - 0.5) * ln_p).exp() * (pf - 1.0);
    Ok(num / expm1(2.0 * w * ln_p))
}

/// L_n(s, χ) = Σ_{k=1}^{mn−1} χ(k)/sin(πk/mn)^s for a character mod m.
pub fn cyclic_l(n: usize, s: ComplexScalar, chi: &DirichletCharacter) -> Result<ComplexScalar> {
    let m = chi.modulus() as usize;
    if m < 3 || n < 1 {
        return Err(Error::domain(
            "cyclic_l",
            format!("need modulus ≥ 3 and n ≥ 1, got {m} and {n}"),
        ));
    }
    let mn = m * n;
    Ok((1..mn)
        .filter_map(|k| {
            let v = chi.value(k as i64);
            (v != c(0.0, 0.0)).then(|| v * (-s * sinpi(k as f64 / mn as f64).ln()).exp())
        })
        .sum())
}

/// Λ_n(s, χ) = n^{−s}(π/m)^{s/2} Γ(s/2) L_n(s, χ).
pub fn completed_cyclic_l(n: usize, s: ComplexScalar, chi: &DirichletCharacter) -> Result<ComplexScalar> {
    let m = chi.modulus() as f64;
    let g = gamma(s / 2.0)?;
    let l = cyclic_l(n, s, chi)?;
    Ok((-s * (n as f64).ln() + 0.5 * s * (PI / m).ln()).exp() * g * l)
}

//! Special functions underpinning every zeta formula: complex Gamma, the
//! modified Bessel function I₀, Riemann and Hurwitz zeta, Bernoulli numbers,
//! Dirichlet characters and their L-functions.
//!
//! Everything is double precision except the Bernoulli numbers, which are
//! generated in exact rational arithmetic and rounded once.

mod bessel;
mod dirichlet;
mod elementary;
mod gamma;
mod zeta;

pub use bessel::{bessel_i0, scaled_bessel_i0};
pub use dirichlet::{dirichlet_l, is_prime, make_character, DirichletCharacter};
pub use elementary::{cos_pi, cospi, expm1, sin_pi, sinpi};
pub use gamma::{gamma, log_gamma, reciprocal_gamma};
pub use zeta::{bernoulli_numbers, hurwitz_zeta, riemann_zeta};

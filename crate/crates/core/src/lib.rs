//! Growth of entire functions and decay of their Taylor coefficients, linked
//! through Young-Fenchel conjugation.
//!
//! A convex growth profile `Λ` of `ln M(e^v)` bounds the coefficients by
//! `ln|c_n| ≤ −Λ*(n)`, and a coefficient bound `|c_n| ≤ e^{−Q*(n)}` bounds the
//! maximal function by `ln Y(ε) + Q(v/(1−ε))`. The modules cover the discrete
//! conjugate ([`legendre`]), coefficient sequences and maximal functions
//! ([`entire`]), both directions of the estimate ([`bounds`]), standard growth
//! scales ([`scales`]), several variables ([`multivar`]) and generating
//! functions of integer-valued laws ([`probgen`]).
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod entire;
pub mod error;
pub mod legendre;
pub mod logsum;
pub mod multivar;
pub mod probgen;
pub mod scales;

pub use error::{Error, Result};

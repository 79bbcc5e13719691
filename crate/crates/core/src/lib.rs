//! Exact combinatorics for extended affine Weyl groups of `GL_n` and `GSp_2n`:
//! admissible and permissible sets, the Kottwitz poset `B(G, mu)`, affine
//! Deligne-Lusztig emptiness predicates, a finite-field lattice oracle and
//! local-model point counts.

pub mod acceptance;
pub mod adlv;
pub mod admperm;
pub mod affweyl;
pub mod caps;
pub mod error;
pub mod ff;
pub mod fforacle;
pub mod kottwitz;
pub mod laurent;
pub mod linalg;
pub mod localmodel;
pub mod rootdata;

pub use error::{Error, Result};

/// Exact rationals used throughout.
pub type Q = num_rational::BigRational;

/// Integer as an exact rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Fraction `a/b` as an exact rational.
pub fn qf(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

/// Renders a rational as `"p/q"`, or `"p"` when integral.
pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

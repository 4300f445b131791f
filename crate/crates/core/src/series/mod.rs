//! Exact rational arithmetic and truncated series rings.
//!
//! - [`PExp`] / [`SymPoly`]: power-sum monomials and weight-truncated
//!   polynomials in them;
//! - [`MSeries`]: series in a grading variable (`ħ` or `u`) and a nilpotent
//!   marker `w` with [`SymPoly`] coefficients;
//! - [`PLaurent`]: Laurent polynomials in `P_d = 1 + p_d`;
//! - [`Series1`]: dense univariate series.
//!
//! All scalars are [`Q`], i.e. `num_rational::BigRational`, which is kept in
//! lowest terms with a positive denominator by construction.

pub mod mseries;
pub mod pexp;
pub mod plaurent;
pub mod ring;
pub mod sympoly;
pub mod univariate;

pub use mseries::{Grading, MSeries};
pub use pexp::PExp;
pub use plaurent::{LExp, PLaurent, PLaurentSeries};
pub use sympoly::SymPoly;
pub use univariate::Series1;

/// Exact rational scalar.
pub type Q = num_rational::BigRational;
/// Exact integer scalar.
pub type Z = num_bigint::BigInt;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// The rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

//! Exact computation of S_n-equivariant weight-two compactly supported Euler
//! characteristics of the moduli spaces `M_{g,n}`.
//!
//! The crate is layered:
//!
//! - [`series`]: exact rationals, weight-truncated power-sum polynomials,
//!   multigraded series and Laurent polynomials in `P_d = 1 + p_d`;
//! - [`symfunc`]: partitions, plethysm, Hall inner product, Schur basis;
//! - [`operad`]: generating functions of the operads entering the graph
//!   complexes and the decorated-graph pairing;
//! - [`weight2`]: the closed-form generating function `ω₂`, its genus slices
//!   and the `n = 0` fast path;
//! - [`pipeline`]: an independent recomputation of `ω₂` through the
//!   gamma-ratio functions `U_ℓ`;
//! - [`graph`]: brute-force enumeration of decorated graphs;
//! - [`identities`]: exact identity checks on the building blocks.
//!
//! With the default `parallel` feature, independent blocks are evaluated on
//! the rayon pool; results never depend on the schedule.

pub mod error;
pub mod graph;
pub mod identities;
pub mod operad;
pub mod par;
pub mod pipeline;
pub mod series;
pub mod symfunc;
pub mod weight2;

pub use error::{Error, Result};

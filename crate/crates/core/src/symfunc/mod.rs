//! Symmetric-function toolkit: partitions and cycle types, Möbius and
//! Bernoulli numbers, plethysm, the Hall inner product and Schur conversion.

pub mod arith;
pub mod inner;
pub mod partition;
pub mod plethysm;
pub mod schur;

pub use arith::{bernoulli, bernoulli_table, divisors, moebius, mu};
pub use inner::hall_inner;
pub use partition::{partitions, z_factor, Partition};
pub use plethysm::{plethysm, plethysm_sym};
pub use schur::{to_schur, SchurExpansion};

//! Brute-force oracle: explicit enumeration of decorated graphs and their
//! equivariant Euler characteristics, independent of all generating
//! functions.

pub mod canon;
pub mod decorated;
pub mod dump;
pub mod enumerate;
pub mod euler;

pub use decorated::{DecoratedGraph, Decoration};
pub use enumerate::{enumerate_fg, enumerate_x_generators, Family, GraphClass};
pub use euler::{equivariant_euler_fg, equivariant_euler_x, omega2_cell_by_enumeration};
pub use dump::{dump_classes, DUMP_HEADER};

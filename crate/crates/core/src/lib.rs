//! Dimension theory for finite lattices.
//!
//! Computes the large inductive dimension `Ind`, the small inductive
//! dimension `ind`, the covering dimension, the Krull dimension and the
//! height of finite bounded lattices, together with the lattice sums and
//! products they are usually studied on.

#![allow(clippy::needless_range_loop)]

pub mod bitset;
pub mod catalog;
pub mod constructions;
pub mod covers;
pub mod dims;
pub mod error;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod oracle;
pub mod search;
pub mod theorems;

pub use error::{LatticeError, Result};
pub use lattice::{build_lattice, ElementSet, Lattice, LatticeId, PrincipalFilter, Pseudostar, SubLattice};
pub use covers::CoverFamily;
pub use dims::{full_report, DimensionReport};

//! Exact computation of flag enumeration invariants for quasi-graded posets:
//! ab- and cd-indices, flag vectors, weighted Möbius inversion, Eulerian
//! checks and completion, poset constructions (products, pyramids, zipping),
//! face posets of stratified balls built from simplicial complexes, shelling
//! components, and quasisymmetric functions.
//!
//! All arithmetic is exact over arbitrary-precision rationals.

pub mod cli;
pub mod complex;
pub mod flag;
pub mod io;
pub mod ncpoly;
pub mod ops;
pub mod poset;
pub mod qsym;
pub mod rat;
pub mod shelling;
#[cfg(test)]
pub(crate) mod testkit;

pub use complex::{semisuspension, Face, SimplicialComplex};
pub use flag::{ab_index, cd_index, AbIndexMethod};
pub use ncpoly::{ab_to_cd, cd_expand, AbPoly, CdPoly, NotCdExpressible};
pub use poset::{Poset, PosetError, PosetSpec};
pub use rat::Rat;

//! Maximum orders of finite group actions on compact surfaces in R³ that
//! extend to orthogonal actions of the whole space.
//!
//! The crate is organised bottom-up:
//!
//! - [`permgroup`]: exact permutation, cyclic and dihedral group arithmetic,
//!   including generating pairs of A4/S4/A5 up to automorphism.
//! - [`orbifold`]: surface types, algebraic genus and Riemann–Hurwitz
//!   bookkeeping for the quotient 2-orbifolds.
//! - [`classify`]: the maximum-order engines for closed and bordered
//!   surfaces and for graphs.
//! - [`constructions`]: explicit equivariant graphs in R³, finite matrix
//!   groups, ribbon surfaces and geometry export.
//! - [`verify`]: self-check suites shared by the CLI and the tests.

pub mod permgroup;
pub mod orbifold;
pub mod classify;
pub mod constructions;
pub mod verify;

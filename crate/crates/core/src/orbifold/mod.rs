//! Surface types and the Riemann–Hurwitz bookkeeping for quotient
//! 2-orbifolds `Σ/G`.
//!
//! All arithmetic is done in exact rationals. A signature whose covering
//! Euler characteristic is not an integer (or, for closed covers, not even)
//! is rejected rather than rounded.

mod signature;
mod surface;

use thiserror::Error;

pub use signature::{
    bordered_algebraic_genus, cyclic_quotient_cases, orbifold_euler_characteristic, rh_cover_genus,
    sphere_4cone_genus, CyclicQuotientCase, QuotientCase, QuotientSignature, RhSolution,
};
pub use surface::SurfaceType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("inadmissible signature: {0}")]
    Inadmissible(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
}

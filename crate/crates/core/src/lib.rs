//! Building blocks for coset-coded transmission over binary-input memoryless
//! symmetric wiretap channels: bit-packed GF(2) linear algebra, Gallager's
//! regular LDPC ensemble with nested code pairs, exact distribution and
//! divergence computations over small blocks, analytic smoothing/leakage
//! bounds evaluated in log space, and a seeded end-to-end experiment loop.
//!
//! Everything exact is capped at block lengths where full enumeration is
//! honest (2^n probability tables, enumerable codes); everything analytic
//! works at arbitrary block length through per-weight accounting.

pub mod bounds;
pub mod channel;
pub mod dist;
pub mod ensemble;
pub mod error;
pub mod gf2;
pub mod numerics;
pub mod seeds;
pub mod wiretap;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

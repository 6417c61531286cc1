//! Exact character sums over finite fields and their extensions, L-polynomials built
//! from a multiplicative function on monic polynomials, and brute-force checks of the
//! recursions, closed forms, bounds and sequence-correlation identities they satisfy.

pub mod charsum;
pub mod cyclo;
pub mod error;
pub mod gf;
pub mod lpoly;
pub mod ring;
pub mod seqcorr;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};

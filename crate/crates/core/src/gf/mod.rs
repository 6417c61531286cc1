//! Exact arithmetic in `GF(p^e)`, extension towers, traces, norms and discrete logs.

mod dlog;
mod field;
pub(crate) mod fp_poly;
mod poly;
mod tower;

pub use dlog::{generator_dlog, DlogTable, DEFAULT_DLOG_BOUND};
pub use field::{is_prime, FieldElement, FieldSpec};
pub use poly::{monic_count, MonicPoly, Poly};
pub use tower::{build_tower, shared_tower, TowerContext};

use crate::error::{Error, Result};

/// The smallest monic irreducible polynomial of degree `e` over `GF(p)`.
pub fn find_irreducible(p: u32, e: usize) -> Result<MonicPoly> {
    if e == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let prime = FieldSpec::prime(p)?;
    let coeffs = fp_poly::smallest_irreducible(p, e);
    let poly = Poly::from_ints(&prime, &coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>());
    MonicPoly::new(poly)
}

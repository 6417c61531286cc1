//! Newton's identities, their determinant forms, and Dickson polynomials of the first kind.

mod det;
mod dickson;
mod lift;
mod mpoly;
mod newton;

pub use det::{det_cross_check, determinant, Direction};
pub use dickson::{dickson_d1_recurrence, dickson_d1_waring, dickson_text, DicksonInput};
pub use lift::lift_roots_power;
pub use mpoly::MPoly;
pub use newton::{newton_e_from_p, newton_p_from_e};

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    PowerSum,
}

/// `e_1, e_2, ...` or `p_1, p_2, ...`, stored from index 1.
///
/// Elementary lists carry an arity `k`: `e_j = 0` for `j > k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymCoeffs<R> {
    kind: SymKind,
    values: Vec<R>,
    arity: Option<usize>,
}

impl<R: Ring> SymCoeffs<R> {
    /// `e_1..e_k` of `k` indeterminates.
    pub fn elementary(values: Vec<R>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("elementary list needs at least e_1".into()));
        }
        Ok(SymCoeffs {
            kind: SymKind::Elementary,
            arity: Some(values.len()),
            values,
        })
    }

    pub fn power_sums(values: Vec<R>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("power-sum list needs at least p_1".into()));
        }
        Ok(SymCoeffs {
            kind: SymKind::PowerSum,
            values,
            arity: None,
        })
    }

    pub fn kind(&self) -> SymKind {
        self.kind
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn into_values(self) -> Vec<R> {
        self.values
    }

    pub fn arity(&self) -> Option<usize> {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry `j >= 1`; elementary entries past the arity are zero.
    pub fn get(&self, j: usize) -> Option<R> {
        debug_assert!(j >= 1);
        match self.values.get(j - 1) {
            Some(v) => Some(v.clone()),
            None if self.kind == SymKind::Elementary => Some(self.values[0].zero_like()),
            None => None,
        }
    }

    fn expect_kind(&self, kind: SymKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::Invalid(format!("expected {kind:?} coefficients, got {:?}", self.kind)))
        }
    }
}

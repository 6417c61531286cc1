//! Additive and multiplicative characters of `F_q`, their liftings to `F_{q^s}`, and
//! exact evaluation of character sums by full enumeration.
//!
//! Sums are returned as [`CycloNumber`]s: additive sums live in `Q(ζ_p)` and
//! multiplicative sums in `Q(ζ_{q-1})`.

mod character;
mod sums;

pub use character::{
    additive_char_eval, additive_char_eval_literal, mult_char_eval, AdditiveCharacter, CharacterSpec,
    LiftedAdditive, LiftedMultiplicative, MultiplicativeCharacter,
};
pub use sums::{
    gauss_quadratic, g_sum, generalized_sum, mult_sum_t, weil_sum_s, SumOptions, DEFAULT_ENUM_BOUND,
};
pub(crate) use sums::histogram;

use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec, MonicPoly, Poly};

/// What a [`SumSeries`] enumerates.
#[derive(Clone, Debug)]
pub enum SumMeta {
    Weil { f: Poly, twist: FieldElement },
    Multiplicative { f: MonicPoly, exponent: u64 },
    InverseMonomial { u: u64, a: FieldElement, b: FieldElement, twist: FieldElement },
    Generalized { f: Poly, g: Poly, twist: FieldElement },
}

/// Values of one sum family at `s = 1, 2, ...`.
#[derive(Clone, Debug)]
pub struct SumSeries {
    field: FieldSpec,
    meta: SumMeta,
    values: Vec<CycloNumber>,
}

impl SumSeries {
    /// Wraps precomputed values; all must share a cyclotomic order.
    pub fn new(field: FieldSpec, meta: SumMeta, values: Vec<CycloNumber>) -> Result<Self> {
        if let Some(first) = values.first() {
            if let Some(v) = values.iter().find(|v| v.order() != first.order()) {
                return Err(Error::OrderMismatch(first.order(), v.order()));
            }
        }
        Ok(SumSeries { field, meta, values })
    }

    pub fn weil(chi: &AdditiveCharacter, f: &Poly, smax: usize, opts: &SumOptions) -> Result<Self> {
        let values = (1..=smax)
            .map(|s| weil_sum_s(chi, f, s, opts))
            .collect::<Result<_>>()?;
        let meta = SumMeta::Weil {
            f: f.clone(),
            twist: chi.twist().clone(),
        };
        Self::new(chi.field().clone(), meta, values)
    }

    pub fn multiplicative(psi: &MultiplicativeCharacter, f: &MonicPoly, smax: usize, opts: &SumOptions) -> Result<Self> {
        let values = (1..=smax)
            .map(|s| mult_sum_t(psi, f, s, opts))
            .collect::<Result<_>>()?;
        let meta = SumMeta::Multiplicative {
            f: f.clone(),
            exponent: psi.exponent_param(),
        };
        Self::new(psi.field().clone(), meta, values)
    }

    pub fn inverse_monomial(
        u: u64,
        a: &FieldElement,
        b: &FieldElement,
        chi: &AdditiveCharacter,
        smax: usize,
        opts: &SumOptions,
    ) -> Result<Self> {
        let values = (1..=smax)
            .map(|s| g_sum(u, a, b, chi, s, opts))
            .collect::<Result<_>>()?;
        let meta = SumMeta::InverseMonomial {
            u,
            a: a.clone(),
            b: b.clone(),
            twist: chi.twist().clone(),
        };
        Self::new(chi.field().clone(), meta, values)
    }

    pub fn generalized(f: &Poly, g: &Poly, chi: &AdditiveCharacter, smax: usize, opts: &SumOptions) -> Result<Self> {
        let values = (1..=smax)
            .map(|s| generalized_sum(f, g, chi, s, opts))
            .collect::<Result<_>>()?;
        let meta = SumMeta::Generalized {
            f: f.clone(),
            g: g.clone(),
            twist: chi.twist().clone(),
        };
        Self::new(chi.field().clone(), meta, values)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn meta(&self) -> &SumMeta {
        &self.meta
    }

    /// Values for `s = 1..=len`.
    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The same family with different values (e.g. a predicted extension).
    pub fn with_values(&self, values: Vec<CycloNumber>) -> Result<Self> {
        Self::new(self.field.clone(), self.meta.clone(), values)
    }
}

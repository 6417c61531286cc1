use std::sync::Arc;

use crate::cyclo::{num_gcd, CycloNumber};
use crate::error::{Error, Result};
use crate::gf::{generator_dlog, DlogTable, FieldElement, FieldSpec, TowerContext, DEFAULT_DLOG_BOUND};

/// `χ_a(c) = ζ_p^{Tr(a c)}` on `F_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdditiveCharacter {
    twist: FieldElement,
}

impl AdditiveCharacter {
    /// `χ_1`, the canonical character.
    pub fn canonical(field: &FieldSpec) -> Self {
        AdditiveCharacter { twist: field.one() }
    }

    pub fn new(twist: FieldElement) -> Self {
        AdditiveCharacter { twist }
    }

    pub fn field(&self) -> &FieldSpec {
        self.twist.field()
    }

    pub fn twist(&self) -> &FieldElement {
        &self.twist
    }

    pub fn order(&self) -> u64 {
        self.field().p() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.twist.is_zero()
    }

    /// Exponent `k` with `χ(c) = ζ_p^k`.
    pub fn exponent(&self, c: &FieldElement) -> u32 {
        (&self.twist * c).absolute_trace()
    }

    pub fn eval(&self, c: &FieldElement) -> CycloNumber {
        root(self.order(), self.exponent(c) as u64)
    }

    /// The lifting `χ^{(s)} = χ ∘ Tr` to the top of `ctx`.
    pub fn lift(&self, ctx: &TowerContext) -> Result<LiftedAdditive> {
        if ctx.base() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let big = ctx.big();
        let p = big.p() as u64;
        let a = ctx.embed(&self.twist);
        // Tr_{q^s/p}(a c) is linear in the coordinates of c.
        let weights = (0..big.degree())
            .map(|i| (&a * &big.element(p.pow(i as u32))).absolute_trace())
            .collect();
        Ok(LiftedAdditive {
            p: p as u32,
            weights,
        })
    }
}

/// `χ^{(s)}` as a linear functional on the coordinates of `F_{q^s}`.
#[derive(Clone, Debug)]
pub struct LiftedAdditive {
    p: u32,
    weights: Vec<u32>,
}

impl LiftedAdditive {
    pub fn exponent(&self, c: &FieldElement) -> u32 {
        let p = self.p as u64;
        let t = c
            .coeffs()
            .iter()
            .zip(&self.weights)
            .fold(0u64, |acc, (&x, &w)| (acc + x as u64 * w as u64) % p);
        t as u32
    }

    pub fn order(&self) -> u64 {
        self.p as u64
    }
}

/// `ψ_j(g^k) = ζ_{q-1}^{jk}` for the smallest primitive element `g`, with `ψ(0) = 0`.
#[derive(Clone, Debug)]
pub struct MultiplicativeCharacter {
    field: FieldSpec,
    exponent: u64,
    dlog: Arc<DlogTable>,
}

impl MultiplicativeCharacter {
    pub fn new(field: &FieldSpec, exponent: u64) -> Result<Self> {
        let dlog = generator_dlog(field, DEFAULT_DLOG_BOUND)?;
        let exponent = exponent % dlog.group_order();
        Ok(MultiplicativeCharacter {
            field: field.clone(),
            exponent,
            dlog: Arc::new(dlog),
        })
    }

    /// The quadratic character `η`; needs odd `q`.
    pub fn quadratic(field: &FieldSpec) -> Result<Self> {
        if field.p() == 2 {
            return Err(Error::Hypothesis("quadratic character needs odd q".into()));
        }
        Self::new(field, (field.order() - 1) / 2)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn exponent_param(&self) -> u64 {
        self.exponent
    }

    pub fn generator(&self) -> &FieldElement {
        self.dlog.generator()
    }

    /// `(q - 1) / gcd(j, q - 1)`.
    pub fn order(&self) -> u64 {
        let n = self.field.order() - 1;
        n / num_gcd(self.exponent, n)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    /// Exponent `k` with `ψ(c) = ζ_{q-1}^k`; `None` at zero.
    pub fn exponent(&self, c: &FieldElement) -> Option<u64> {
        let n = self.field.order() - 1;
        self.dlog
            .log(c)
            .map(|k| ((k as u128 * self.exponent as u128) % n as u128) as u64)
    }

    pub fn eval(&self, c: &FieldElement) -> Result<CycloNumber> {
        let n = self.field.order() - 1;
        match self.exponent(c) {
            Some(k) => CycloNumber::root_of_unity_power(n, k as i64),
            None => CycloNumber::zero(n),
        }
    }

    /// The lifting `ψ^{(s)} = ψ ∘ Norm` to the top of `ctx`.
    pub fn lift(&self, ctx: &TowerContext) -> Result<LiftedMultiplicative> {
        if ctx.base() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(LiftedMultiplicative {
            psi: self.clone(),
            ctx: ctx.clone(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct LiftedMultiplicative {
    psi: MultiplicativeCharacter,
    ctx: TowerContext,
}

impl LiftedMultiplicative {
    pub fn exponent(&self, c: &FieldElement) -> Option<u64> {
        self.psi.exponent(&self.ctx.norm_rel(c))
    }

    pub fn order(&self) -> u64 {
        self.psi.field.order() - 1
    }
}

/// Either kind of character of `F_q`.
#[derive(Clone, Debug)]
pub enum CharacterSpec {
    Additive(AdditiveCharacter),
    Multiplicative(MultiplicativeCharacter),
}

impl CharacterSpec {
    pub fn field(&self) -> &FieldSpec {
        match self {
            CharacterSpec::Additive(chi) => chi.field(),
            CharacterSpec::Multiplicative(psi) => psi.field(),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            CharacterSpec::Additive(chi) => chi.order(),
            CharacterSpec::Multiplicative(psi) => psi.order(),
        }
    }
}

fn root(order: u64, k: u64) -> CycloNumber {
    CycloNumber::root_of_unity_power(order, k as i64).expect("character orders are small")
}

/// `χ^{(s)}(c)` through the precomputed linear form.
pub fn additive_char_eval(chi: &AdditiveCharacter, ctx: &TowerContext, c: &FieldElement) -> Result<CycloNumber> {
    let lifted = chi.lift(ctx)?;
    Ok(root(lifted.order(), lifted.exponent(c) as u64))
}

/// `χ^{(s)}(c)` computed literally as `χ(Tr_{q^s/q}(c))`, with the absolute trace
/// taken as a sum of Frobenius conjugates.
pub fn additive_char_eval_literal(
    chi: &AdditiveCharacter,
    ctx: &TowerContext,
    c: &FieldElement,
) -> Result<CycloNumber> {
    if ctx.base() != chi.field() {
        return Err(Error::FieldMismatch);
    }
    let t = ctx.trace_to_base(c);
    let abs = (chi.twist() * &t).absolute_trace_literal();
    Ok(root(chi.order(), abs.coeffs()[0] as u64))
}

/// `ψ^{(s)}(c) = ψ(Norm(c))`, zero at `c = 0`.
pub fn mult_char_eval(psi: &MultiplicativeCharacter, ctx: &TowerContext, c: &FieldElement) -> Result<CycloNumber> {
    psi.eval(&psi.lift(ctx)?.ctx.norm_rel(c))
}

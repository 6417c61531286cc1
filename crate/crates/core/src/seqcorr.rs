//! Sequences `G_a = (G_u(a x))_{x ∈ F_q^*}` over fields of characteristic 2, where
//! `G_u(y) = G_u(y, 1) = Σ_{c ≠ 0} χ(y c^u + c^{-1})`, and their correlations.
//!
//! Values are indexed in generator order `x = g^0, ..., g^{q-2}`, so a multiplicative
//! shift by `h = g^j` is a cyclic rotation by `j`. `G_u(0)` is taken to be
//! `Σ_{c ≠ 0} χ(c^{-1}) = -1`.

use std::sync::Arc;

use crate::charsum::{g_sum, AdditiveCharacter, SumOptions};
use crate::cyclo::num_gcd;
use crate::error::{Error, Result};
use crate::gf::{generator_dlog, DlogTable, FieldElement, FieldSpec, DEFAULT_DLOG_BOUND};

/// `G_u(0)`.
pub const G_AT_ZERO: i64 = -1;

/// `G_u(y)` over `F_q` with the canonical character, including `G_u(0) = -1`.
pub fn g_at(u: u64, y: &FieldElement) -> Result<i64> {
    let field = y.field();
    if field.p() != 2 {
        return Err(Error::Hypothesis("sequences are defined in characteristic 2".into()));
    }
    if y.is_zero() {
        return Ok(G_AT_ZERO);
    }
    let chi = AdditiveCharacter::canonical(field);
    let v = g_sum(u, y, &field.one(), &chi, 1, &SumOptions::sequential())?;
    let n = v.as_integer().expect("±1-valued character sums are integers");
    Ok(i64::try_from(n).expect("|G_u| < q"))
}

/// `G_u(0)` evaluated as the sum `Σ_{c ≠ 0} χ(c^{-1})`, to back the convention.
pub fn g_at_zero_literal(field: &FieldSpec) -> i64 {
    field
        .nonzero_elements()
        .map(|c| if c.inv().expect("nonzero").absolute_trace() == 0 { 1 } else { -1 })
        .sum()
}

/// `G_u(y)` for every `y`, by element index.
#[derive(Clone, Debug)]
struct GTable {
    by_index: Vec<i64>,
}

impl GTable {
    fn new(field: &FieldSpec, u: u64) -> Result<Self> {
        let by_index = field.elements().map(|y| g_at(u, &y)).collect::<Result<_>>()?;
        Ok(GTable { by_index })
    }

    fn get(&self, y: &FieldElement) -> i64 {
        self.by_index[y.index() as usize]
    }
}

/// The sequence `G_a` for one `(u, a)`.
#[derive(Clone, Debug)]
pub struct SequenceProfile {
    field: FieldSpec,
    u: u64,
    a: FieldElement,
    dlog: Arc<DlogTable>,
    table: Arc<GTable>,
    values: Vec<i64>,
}

fn require_char2(field: &FieldSpec) -> Result<()> {
    if field.p() == 2 {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!(
            "sequences are defined in characteristic 2, got p = {}",
            field.p()
        )))
    }
}

fn require_coprime(field: &FieldSpec, u: u64) -> Result<()> {
    let n = field.order() - 1;
    if num_gcd(u, n) == 1 {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("need gcd(u, q - 1) = 1, got u = {u}, q - 1 = {n}")))
    }
}

/// `G_a` for `gcd(u, q - 1) = 1`.
pub fn sequence_values(field: &FieldSpec, u: u64, a: &FieldElement) -> Result<SequenceProfile> {
    require_coprime(field, u)?;
    SequenceProfile::measure(field, u, a)
}

impl SequenceProfile {
    /// Like [`sequence_values`] but without the `gcd(u, q - 1) = 1` requirement, for
    /// measuring what happens outside it.
    pub fn measure(field: &FieldSpec, u: u64, a: &FieldElement) -> Result<Self> {
        require_char2(field)?;
        if u == 0 {
            return Err(Error::ZeroParameter("u"));
        }
        if a.is_zero() {
            return Err(Error::ZeroParameter("a"));
        }
        if a.field() != field {
            return Err(Error::FieldMismatch);
        }
        let dlog = Arc::new(generator_dlog(field, DEFAULT_DLOG_BOUND)?);
        let table = Arc::new(GTable::new(field, u)?);
        Ok(Self::with_tables(field, u, a, dlog, table))
    }

    fn with_tables(field: &FieldSpec, u: u64, a: &FieldElement, dlog: Arc<DlogTable>, table: Arc<GTable>) -> Self {
        let values = (0..dlog.group_order())
            .map(|k| table.get(&(a * &dlog.exp(k))))
            .collect();
        SequenceProfile {
            field: field.clone(),
            u,
            a: a.clone(),
            dlog,
            table,
            values,
        }
    }

    /// The sequence for another scale `b`, sharing tables.
    pub fn rescaled(&self, b: &FieldElement) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::ZeroParameter("b"));
        }
        if b.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::with_tables(&self.field, self.u, b, self.dlog.clone(), self.table.clone()))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn scale(&self) -> &FieldElement {
        &self.a
    }

    pub fn generator(&self) -> &FieldElement {
        self.dlog.generator()
    }

    /// `values[k] = G_u(a g^k)`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `(k, g^k, G_u(a g^k))` rows.
    pub fn rows(&self) -> Vec<(u64, FieldElement, i64)> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| (k as u64, self.dlog.exp(k as u64), v))
            .collect()
    }

    /// `log_g h`.
    pub fn shift_of(&self, h: &FieldElement) -> Result<u64> {
        if h.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        self.dlog.log(h).ok_or(Error::ZeroParameter("h"))
    }
}

/// `Σ_{x ≠ 0} G_u(a x) G_u(b h x)`.
pub fn correlation(a: &SequenceProfile, b: &SequenceProfile, h: &FieldElement) -> Result<i64> {
    if a.field != b.field || a.u != b.u {
        return Err(Error::Invalid("correlated sequences must share field and u".into()));
    }
    let j = a.shift_of(h)? as usize;
    let n = a.values.len();
    Ok((0..n).map(|k| a.values[k] * b.values[(k + j) % n]).sum())
}

/// Correlation at every shift `h = g^j`, indexed by `j`.
pub fn correlation_spectrum(a: &SequenceProfile, b: &SequenceProfile) -> Result<Vec<(FieldElement, i64)>> {
    (0..a.dlog.group_order())
        .map(|j| {
            let h = a.dlog.exp(j);
            correlation(a, b, &h).map(|v| (h, v))
        })
        .collect()
}

/// Both sides of `Σ_{x ≠ 0} G_u(ax) G_u(b(c - x)) = q G_u(c (a^{u'} + b^{u'})^u) + G_u(bc)`,
/// `u u' ≡ 1 (mod q - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
}

fn inverse_mod(u: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    (1..n).find(|v| (u % n) * v % n == 1).expect("u is a unit mod n")
}

pub fn convolution_identity_check(
    field: &FieldSpec,
    u: u64,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<ConvolutionCheck> {
    require_char2(field)?;
    require_coprime(field, u)?;
    let table = GTable::new(field, u)?;
    convolution_with_table(&table, field, u, a, b, c)
}

fn convolution_with_table(
    table: &GTable,
    field: &FieldSpec,
    u: u64,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<ConvolutionCheck> {
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if v.is_zero() {
            return Err(Error::ZeroParameter(name));
        }
        if v.field() != field {
            return Err(Error::FieldMismatch);
        }
    }
    let q = field.order();
    let lhs = field
        .nonzero_elements()
        .map(|x| table.get(&(a * &x)) * table.get(&(b * &(c - &x))))
        .sum();
    let v = inverse_mod(u, q - 1);
    let inner = &a.pow(v) + &b.pow(v);
    let rhs = q as i64 * table.get(&(c * &inner.pow(u))) + table.get(&(b * c));
    Ok(ConvolutionCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

/// [`convolution_identity_check`] over every nonzero `(a, b, c)`.
pub fn convolution_cube(field: &FieldSpec, u: u64) -> Result<Vec<(FieldElement, FieldElement, FieldElement, ConvolutionCheck)>> {
    require_char2(field)?;
    require_coprime(field, u)?;
    let table = GTable::new(field, u)?;
    let mut out = Vec::new();
    for a in field.nonzero_elements() {
        for b in field.nonzero_elements() {
            for c in field.nonzero_elements() {
                let check = convolution_with_table(&table, field, u, &a, &b, &c)?;
                out.push((a.clone(), b.clone(), c.clone(), check));
            }
        }
    }
    Ok(out)
}

/// Exponents `1 <= u < q - 1` with `gcd(u, q - 1) = 1` (just `u = 1` for `q = 2`).
pub fn valid_exponents(field: &FieldSpec) -> Vec<u64> {
    let n = field.order() - 1;
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&u| num_gcd(u, n) == 1).collect()
}

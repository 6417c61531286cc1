use rayon::prelude::*;

use super::character::{AdditiveCharacter, MultiplicativeCharacter};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::gf::{shared_tower, FieldElement, FieldSpec, MonicPoly, Poly, TowerContext};

pub const DEFAULT_ENUM_BOUND: u64 = 1 << 22;

/// Enumeration limits and partitioning. The partition never changes a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumOptions {
    /// Largest field (or polynomial family) that may be enumerated.
    pub bound: u64,
    /// Smallest index range handed to one worker.
    pub min_chunk: usize,
    pub parallel: bool,
}

impl Default for SumOptions {
    fn default() -> Self {
        SumOptions {
            bound: DEFAULT_ENUM_BOUND,
            min_chunk: 512,
            parallel: true,
        }
    }
}

impl SumOptions {
    pub fn with_bound(bound: u64) -> Self {
        SumOptions {
            bound,
            ..Self::default()
        }
    }

    pub fn sequential() -> Self {
        SumOptions {
            parallel: false,
            ..Self::default()
        }
    }

    pub(crate) fn check(&self, needed: u64) -> Result<()> {
        if needed > self.bound {
            Err(Error::EnumerationBound {
                needed,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }
}

/// Accumulates `weight` into bucket `k` for every index in `range` where `f` yields
/// `Some((k, weight))`. Integer counts make any partition give identical results.
pub(crate) fn histogram<F>(range: std::ops::Range<u64>, buckets: usize, opts: &SumOptions, f: F) -> Vec<i64>
where
    F: Fn(u64) -> Option<(usize, i64)> + Sync,
{
    let add = |mut h: Vec<i64>, i: u64| {
        if let Some((k, w)) = f(i) {
            h[k] += w;
        }
        h
    };
    if !opts.parallel {
        return range.fold(vec![0; buckets], add);
    }
    let range = range.start as usize..range.end as usize;
    range
        .into_par_iter()
        .with_min_len(opts.min_chunk.max(1))
        .fold(|| vec![0i64; buckets], |h, i| add(h, i as u64))
        .reduce(
            || vec![0; buckets],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

fn tower_for(base: &FieldSpec, s: usize, opts: &SumOptions) -> Result<TowerContext> {
    if s == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let needed = base
        .order()
        .checked_pow(s as u32)
        .ok_or(Error::EnumerationBound {
            needed: u64::MAX,
            bound: opts.bound,
        })?;
    opts.check(needed)?;
    shared_tower(base, s)
}

fn lift_poly(ctx: &TowerContext, f: &Poly) -> Result<Poly> {
    if f.field() != ctx.base() {
        return Err(Error::FieldMismatch);
    }
    Ok(f.map_coeffs(ctx.big(), |c| ctx.embed(c)))
}

fn additive_total(
    chi: &AdditiveCharacter,
    s: usize,
    nonzero_only: bool,
    opts: &SumOptions,
    term: impl Fn(&TowerContext, &FieldElement) -> FieldElement + Sync,
) -> Result<CycloNumber> {
    let ctx = tower_for(chi.field(), s, opts)?;
    let lifted = chi.lift(&ctx)?;
    let big = ctx.big();
    let start = u64::from(nonzero_only);
    let counts = histogram(start..big.order(), lifted.order() as usize, opts, |i| {
        let c = big.element(i);
        Some((lifted.exponent(&term(&ctx, &c)) as usize, 1))
    });
    CycloNumber::from_exponent_counts(lifted.order(), &counts)
}

/// `S_s(f) = Σ_{γ ∈ F_{q^s}} χ^{(s)}(f(γ))`.
pub fn weil_sum_s(chi: &AdditiveCharacter, f: &Poly, s: usize, opts: &SumOptions) -> Result<CycloNumber> {
    let ctx = tower_for(chi.field(), s, opts)?;
    let fb = lift_poly(&ctx, f)?;
    additive_total(chi, s, false, opts, |_, c| fb.eval(c))
}

/// `T_s(f) = Σ_{γ ∈ F_{q^s}} ψ^{(s)}(f(γ))`, in `Q(ζ_{q-1})`.
pub fn mult_sum_t(psi: &MultiplicativeCharacter, f: &MonicPoly, s: usize, opts: &SumOptions) -> Result<CycloNumber> {
    let ctx = tower_for(psi.field(), s, opts)?;
    let lifted = psi.lift(&ctx)?;
    let fb = lift_poly(&ctx, f.as_poly())?;
    let big = ctx.big();
    let n = lifted.order();
    let counts = histogram(0..big.order(), n as usize, opts, |i| {
        lifted
            .exponent(&fb.eval(&big.element(i)))
            .map(|k| (k as usize, 1))
    });
    CycloNumber::from_exponent_counts(n, &counts)
}

/// `G_u^{(s)}(a, b) = Σ_{c ∈ F_{q^s}^*} χ^{(s)}(a c^u + b c^{-1})`; `u = 1` is the
/// Kloosterman sum.
pub fn g_sum(
    u: u64,
    a: &FieldElement,
    b: &FieldElement,
    chi: &AdditiveCharacter,
    s: usize,
    opts: &SumOptions,
) -> Result<CycloNumber> {
    if u == 0 {
        return Err(Error::ZeroParameter("u"));
    }
    if a.is_zero() {
        return Err(Error::Hypothesis(
            "a = 0: use seqcorr::g_at_zero for the G_u(0) = -1 convention".into(),
        ));
    }
    if a.field() != chi.field() || b.field() != chi.field() {
        return Err(Error::FieldMismatch);
    }
    let ctx = tower_for(chi.field(), s, opts)?;
    let (ab, bb) = (ctx.embed(a), ctx.embed(b));
    additive_total(chi, s, true, opts, |_, c| {
        let inv = c.inv().expect("nonzero");
        &(&ab * &c.pow(u)) + &(&bb * &inv)
    })
}

/// `G^{(s)}(f, g) = Σ_{c ∈ F_{q^s}^*} χ^{(s)}(f(c) + g(c^{-1}))`.
pub fn generalized_sum(
    f: &Poly,
    g: &Poly,
    chi: &AdditiveCharacter,
    s: usize,
    opts: &SumOptions,
) -> Result<CycloNumber> {
    let ctx = tower_for(chi.field(), s, opts)?;
    let (fb, gb) = (lift_poly(&ctx, f)?, lift_poly(&ctx, g)?);
    additive_total(chi, s, true, opts, |_, c| {
        let inv = c.inv().expect("nonzero");
        &fb.eval(c) + &gb.eval(&inv)
    })
}

/// `g(η, χ) = Σ_{c ≠ 0} η(c) χ(c)` for the quadratic character `η` of odd `q`.
pub fn gauss_quadratic(chi: &AdditiveCharacter) -> Result<CycloNumber> {
    let field = chi.field();
    if field.p() == 2 {
        return Err(Error::Hypothesis("quadratic Gauss sum needs odd q".into()));
    }
    let half = (field.order() - 1) / 2;
    let opts = SumOptions::default();
    opts.check(field.order())?;
    let counts = histogram(1..field.order(), chi.order() as usize, &opts, |i| {
        let c = field.element(i);
        let eta = if c.pow(half).is_one() { 1 } else { -1 };
        Some((chi.exponent(&c) as usize, eta))
    });
    CycloNumber::from_exponent_counts(chi.order(), &counts)
}

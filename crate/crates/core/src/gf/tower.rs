use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::field::{checked_order, FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// `F_{q^s}` over `F_q`, with `F_q` embedded via a root of its modulus.
#[derive(Clone)]
pub struct TowerContext {
    base: FieldSpec,
    ext_degree: usize,
    big: FieldSpec,
    base_image: FieldElement,
    /// Images of `1, x, ..., x^{e-1}` of the base.
    basis_images: Vec<FieldElement>,
    pullback: std::sync::Arc<OnceLock<HashMap<Vec<u32>, u64>>>,
}

/// Builds `F_{p^{es}}` with its canonical modulus and embeds `base` through the
/// smallest root of `base.modulus`.
pub fn build_tower(base: &FieldSpec, s: usize) -> Result<TowerContext> {
    if s == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let e = base.degree();
    let p = base.p();
    if checked_order(p, e * s).is_none() {
        return Err(Error::FieldTooLarge { p, e: e * s });
    }
    let big = if s == 1 {
        base.clone()
    } else {
        FieldSpec::new(p, e * s)?
    };
    let base_image = if s == 1 {
        base.x()
    } else {
        smallest_root(base.modulus(), &big)
    };
    let mut basis_images = Vec::with_capacity(e);
    let mut power = big.one();
    for _ in 0..e {
        basis_images.push(power.clone());
        power = &power * &base_image;
    }
    Ok(TowerContext {
        base: base.clone(),
        ext_degree: s,
        big,
        base_image,
        basis_images,
        pullback: Default::default(),
    })
}

/// Like [`build_tower`], but memoized per `(base, s)` so repeated sums share the
/// embedding and pullback tables.
pub fn shared_tower(base: &FieldSpec, s: usize) -> Result<TowerContext> {
    static CACHE: OnceLock<Mutex<HashMap<(FieldSpec, usize), TowerContext>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (base.clone(), s);
    if let Some(ctx) = cache.lock().expect("tower cache poisoned").get(&key) {
        return Ok(ctx.clone());
    }
    let ctx = build_tower(base, s)?;
    cache
        .lock()
        .expect("tower cache poisoned")
        .entry(key)
        .or_insert(ctx.clone());
    Ok(ctx)
}

fn smallest_root(poly: &[u32], field: &FieldSpec) -> FieldElement {
    field
        .elements()
        .find(|c| {
            let value = poly.iter().rev().fold(field.zero(), |acc, &coef| {
                &(&acc * c) + &field.constant(coef as i64)
            });
            value.is_zero()
        })
        .expect("a degree-e irreducible splits in every extension of degree divisible by e")
}

impl TowerContext {
    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn big(&self) -> &FieldSpec {
        &self.big
    }

    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }

    pub fn base_image(&self) -> &FieldElement {
        &self.base_image
    }

    /// Maps `c` of the base field into the big field.
    pub fn embed(&self, c: &FieldElement) -> FieldElement {
        assert!(c.field() == &self.base, "element not in tower base");
        c.coeffs()
            .iter()
            .zip(&self.basis_images)
            .fold(self.big.zero(), |acc, (&k, img)| &acc + &img.scale(k as i64))
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn pullback(&self, c: &FieldElement) -> Option<FieldElement> {
        let table = self.pullback.get_or_init(|| {
            self.base
                .elements()
                .map(|b| (self.embed(&b).coeffs().to_vec(), b.index()))
                .collect()
        });
        table.get(c.coeffs()).map(|&idx| self.base.element(idx))
    }

    /// `c^{q^k}`.
    pub fn frobenius(&self, c: &FieldElement, k: usize) -> FieldElement {
        let q = self.base.order();
        (0..k).fold(c.clone(), |acc, _| acc.pow(q))
    }

    /// `c + c^{q^t} + c^{q^{2t}} + ... + c^{q^{s-t}}`, an element of the subfield `F_{q^t}`
    /// (returned inside the big field).
    pub fn trace_rel(&self, c: &FieldElement, t: usize) -> Result<FieldElement> {
        let s = self.ext_degree;
        if t == 0 || !s.is_multiple_of(t) {
            return Err(Error::NotDivisor { t, s });
        }
        let mut acc = c.clone();
        let mut term = c.clone();
        for _ in 1..s / t {
            term = self.frobenius(&term, t);
            acc = &acc + &term;
        }
        debug_assert_eq!(self.frobenius(&acc, t), acc);
        Ok(acc)
    }

    /// `Tr_{F_{q^s}/F_q}` as an element of the base field.
    pub fn trace_to_base(&self, c: &FieldElement) -> FieldElement {
        let t = self.trace_rel(c, 1).expect("1 divides s");
        self.pullback(&t).expect("relative trace lies in the base field")
    }

    /// `c^{(q^s - 1)/(q - 1)}`, with `Norm(0) = 0`.
    pub fn norm_rel(&self, c: &FieldElement) -> FieldElement {
        if c.is_zero() {
            return self.base.zero();
        }
        let q = self.base.order();
        let exp = (self.big.order() - 1) / (q - 1);
        self.pullback(&c.pow(exp))
            .expect("norm lies in the base field")
    }
}

impl std::fmt::Debug for TowerContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TowerContext")
            .field("base", &self.base)
            .field("s", &self.ext_degree)
            .field("big", &self.big)
            .field("base_image", &self.base_image)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_is_injective_homomorphism() {
        for (p, e) in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 4)] {
            let base = FieldSpec::new(p, e).unwrap();
            for s in 1..=3 {
                if base.order().pow(s as u32) > 1 << 12 {
                    continue;
                }
                let ctx = build_tower(&base, s).unwrap();
                assert!(ctx.embed(&base.zero()).is_zero());
                assert!(ctx.embed(&base.one()).is_one());
                let images: Vec<_> = base.elements().map(|c| ctx.embed(&c)).collect();
                let mut distinct = images.iter().map(|c| c.index()).collect::<Vec<_>>();
                distinct.sort();
                distinct.dedup();
                assert_eq!(distinct.len() as u64, base.order());
                for a in base.elements() {
                    for b in base.elements() {
                        assert_eq!(ctx.embed(&(&a + &b)), &images[a.index() as usize] + &images[b.index() as usize]);
                        assert_eq!(ctx.embed(&(&a * &b)), &images[a.index() as usize] * &images[b.index() as usize]);
                    }
                }
                // embedded base = fixed points of x -> x^q
                let fixed = ctx
                    .big()
                    .elements()
                    .filter(|c| &c.pow(base.order()) == c)
                    .count() as u64;
                assert_eq!(fixed, base.order());
                for c in &images {
                    assert_eq!(&c.pow(base.order()), c);
                }
            }
        }
    }

    #[test]
    fn gf4_in_gf16_root() {
        let base = FieldSpec::new(2, 2).unwrap();
        let ctx = build_tower(&base, 2).unwrap();
        let b = ctx.base_image();
        assert!((&(b * b) + &(b + &ctx.big().one())).is_zero());
    }

    #[test]
    fn relative_trace_gf4_over_gf2() {
        let base = FieldSpec::prime(2).unwrap();
        let ctx = build_tower(&base, 2).unwrap();
        let x = ctx.big().x();
        assert!(ctx.trace_rel(&x, 1).unwrap().is_one());
        assert!(ctx.trace_rel(&ctx.big().zero(), 1).unwrap().is_zero());
        assert!(ctx.trace_rel(&ctx.big().one(), 1).unwrap().is_zero());
        assert_eq!(
            ctx.trace_rel(&x, 3),
            Err(Error::NotDivisor { t: 3, s: 2 })
        );
    }

    #[test]
    fn norm_gf4_over_gf2() {
        let base = FieldSpec::prime(2).unwrap();
        let ctx = build_tower(&base, 2).unwrap();
        assert!(ctx.norm_rel(&ctx.big().x()).is_one());
        assert!(ctx.norm_rel(&ctx.big().zero()).is_zero());
        assert!(ctx.norm_rel(&ctx.big().one()).is_one());
    }

    #[test]
    fn trace_and_norm_are_base_valued() {
        let base = FieldSpec::new(3, 1).unwrap();
        let ctx = build_tower(&base, 4).unwrap();
        for c in ctx.big().elements() {
            let t = ctx.trace_rel(&c, 1).unwrap();
            assert_eq!(ctx.frobenius(&t, 1), t);
            let t2 = ctx.trace_rel(&c, 2).unwrap();
            assert_eq!(ctx.frobenius(&t2, 2), t2);
            // transitivity through the intermediate field F_{q^2}
            assert_eq!(&t2 + &ctx.frobenius(&t2, 1), t);
            let _ = ctx.norm_rel(&c);
        }
    }

    #[test]
    fn trace_transitivity_with_absolute_trace() {
        for (p, e, s) in [(2, 2, 2), (3, 2, 2), (2, 1, 3), (2, 3, 2)] {
            let base = FieldSpec::new(p, e).unwrap();
            let ctx = build_tower(&base, s).unwrap();
            for c in ctx.big().elements() {
                let via_base = ctx.trace_to_base(&c).absolute_trace();
                assert_eq!(via_base, c.absolute_trace());
            }
        }
    }
}

use super::field::{FieldElement, FieldSpec};
use crate::error::{Error, Result};

pub const DEFAULT_DLOG_BOUND: u64 = 1 << 20;

/// A primitive element together with full log/antilog tables.
#[derive(Clone, Debug)]
pub struct DlogTable {
    generator: FieldElement,
    /// `log[index(c)]` for nonzero `c`; slot 0 unused.
    log: Vec<u32>,
    /// `exp[k] = index(g^k)` for `0 <= k < q - 1`.
    exp: Vec<u64>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest element of multiplicative order `q - 1`, plus its discrete-log table.
pub fn generator_dlog(spec: &FieldSpec, bound: u64) -> Result<DlogTable> {
    let q = spec.order();
    if q > bound {
        return Err(Error::EnumerationBound { needed: q, bound });
    }
    let factors = prime_factors(q - 1);
    let generator = spec
        .nonzero_elements()
        .find(|c| factors.iter().all(|&r| !c.pow((q - 1) / r).is_one()))
        .expect("multiplicative group is cyclic");
    let mut log = vec![u32::MAX; q as usize];
    let mut exp = Vec::with_capacity((q - 1) as usize);
    let mut cur = spec.one();
    for k in 0..q - 1 {
        let idx = cur.index();
        log[idx as usize] = k as u32;
        exp.push(idx);
        cur = &cur * &generator;
    }
    debug_assert!(cur.is_one());
    Ok(DlogTable {
        generator,
        log,
        exp,
    })
}

impl DlogTable {
    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    /// `k` with `g^k = c`; `None` for zero.
    pub fn log(&self, c: &FieldElement) -> Option<u64> {
        if c.is_zero() {
            return None;
        }
        Some(self.log[c.index() as usize] as u64)
    }

    /// `g^k` (exponent taken mod `q - 1`).
    pub fn exp(&self, k: u64) -> FieldElement {
        let n = self.exp.len() as u64;
        self.generator.field().element(self.exp[(k % n) as usize])
    }

    pub fn group_order(&self) -> u64 {
        self.exp.len() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_generators() {
        let gf4 = FieldSpec::new(2, 2).unwrap();
        let t = generator_dlog(&gf4, DEFAULT_DLOG_BOUND).unwrap();
        assert_eq!(t.generator(), &gf4.x());
        assert_eq!(t.log(&gf4.x().pow(2)), Some(2));

        let gf5 = FieldSpec::prime(5).unwrap();
        let t = generator_dlog(&gf5, DEFAULT_DLOG_BOUND).unwrap();
        assert_eq!(t.generator(), &gf5.constant(2));
        assert_eq!(t.log(&gf5.constant(4)), Some(2));

        let gf7 = FieldSpec::prime(7).unwrap();
        let t = generator_dlog(&gf7, DEFAULT_DLOG_BOUND).unwrap();
        assert_eq!(t.generator(), &gf7.constant(3));
        assert_eq!(t.log(&gf7.constant(2)), Some(2));
    }

    #[test]
    fn log_inverts_exp() {
        let f = FieldSpec::new(3, 3).unwrap();
        let t = generator_dlog(&f, DEFAULT_DLOG_BOUND).unwrap();
        for k in 0..t.group_order() {
            assert_eq!(t.log(&t.exp(k)), Some(k));
        }
        assert_eq!(t.log(&f.zero()), None);
    }

    #[test]
    fn bound_enforced() {
        let f = FieldSpec::new(2, 5).unwrap();
        assert_eq!(
            generator_dlog(&f, 16).unwrap_err(),
            Error::EnumerationBound { needed: 32, bound: 16 }
        );
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::fp_poly;
use crate::error::{Error, Result};

/// Deterministic primality test by trial division. Field characteristics here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^e` if it fits comfortably in a `u64` (below 2^62), else `None`.
pub(crate) fn checked_order(p: u32, e: usize) -> Option<u64> {
    let mut q: u64 = 1;
    for _ in 0..e {
        q = q.checked_mul(p as u64)?;
        if q > 1 << 62 {
            return None;
        }
    }
    Some(q)
}

struct FieldInner {
    p: u32,
    e: usize,
    order: u64,
    /// Monic, ascending, length `e + 1`.
    modulus: Vec<u32>,
    /// Absolute trace of each basis element `x^i`.
    basis_traces: Vec<u32>,
}

/// A concrete `GF(p^e)` given by a monic irreducible modulus over `GF(p)`.
///
/// Cheap to clone; two specs are equal when they share `p` and the modulus.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

impl FieldSpec {
    /// `GF(p^e)` with the canonical (smallest irreducible) modulus.
    pub fn new(p: u32, e: usize) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidDegree(e));
        }
        if checked_order(p, e).is_none() {
            return Err(Error::FieldTooLarge { p, e });
        }
        let modulus = fp_poly::smallest_irreducible(p, e);
        Ok(Self::from_parts(p, modulus))
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Field with an explicit modulus (ascending coefficients, monic).
    pub fn with_modulus(p: u32, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidDegree(0));
        }
        let e = modulus.len() - 1;
        if checked_order(p, e).is_none() {
            return Err(Error::FieldTooLarge { p, e });
        }
        let mut m = Vec::with_capacity(modulus.len());
        for &c in modulus {
            if c >= p as u64 {
                return Err(Error::CoefficientRange { value: c, p });
            }
            m.push(c as u32);
        }
        if m[e] != 1 || !fp_poly::is_irreducible(p, &m) {
            return Err(Error::BadModulus(e));
        }
        Ok(Self::from_parts(p, m))
    }

    fn from_parts(p: u32, modulus: Vec<u32>) -> Self {
        let e = modulus.len() - 1;
        let order = checked_order(p, e).expect("order checked by caller");
        let mut spec = FieldSpec(Arc::new(FieldInner {
            p,
            e,
            order,
            modulus,
            basis_traces: Vec::new(),
        }));
        let traces = (0..e)
            .map(|i| {
                let mut basis = vec![0u32; e];
                basis[i] = 1;
                let b = FieldElement {
                    field: spec.clone(),
                    coeffs: basis,
                };
                let t = b.absolute_trace_literal();
                debug_assert!(t.coeffs[1..].iter().all(|&c| c == 0));
                t.coeffs[0]
            })
            .collect();
        Arc::get_mut(&mut spec.0)
            .expect("spec not yet shared")
            .basis_traces = traces;
        spec
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.e
    }

    /// `q = p^e`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.e],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    /// The image of an integer in the prime subfield.
    pub fn constant(&self, n: i64) -> FieldElement {
        let mut el = self.zero();
        el.coeffs[0] = n.rem_euclid(self.0.p as i64) as u32;
        el
    }

    /// The residue class of `x`, i.e. the generator of the representation.
    pub fn x(&self) -> FieldElement {
        let mut el = self.zero();
        if self.0.e == 1 {
            // x ≡ 0 mod x
            return el;
        }
        el.coeffs[1] = 1;
        el
    }

    /// Element whose ascending coefficient tuple, read base `p`, equals `index`.
    pub fn element(&self, index: u64) -> FieldElement {
        debug_assert!(index < self.0.order);
        let p = self.0.p as u64;
        let mut rest = index;
        let coeffs = (0..self.0.e)
            .map(|_| {
                let c = (rest % p) as u32;
                rest /= p;
                c
            })
            .collect();
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.e {
            return Err(Error::Invalid(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.0.e
            )));
        }
        let mut el = self.zero();
        for (slot, &c) in el.coeffs.iter_mut().zip(coeffs) {
            if c >= self.0.p as u64 {
                return Err(Error::CoefficientRange { value: c, p: self.0.p });
            }
            *slot = c as u32;
        }
        Ok(el)
    }

    /// Parses `"3"` (an element index) or `"1:0:1"` (ascending coefficients).
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let text = text.trim();
        let bad = || Error::Invalid(format!("cannot parse field element {text:?}"));
        if text.contains(':') {
            let coeffs = text
                .split(':')
                .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            self.from_coeffs(&coeffs)
        } else {
            let idx: u64 = text.parse().map_err(|_| bad())?;
            if idx >= self.0.order {
                return Err(bad());
            }
            Ok(self.element(idx))
        }
    }

    /// All elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.order).map(move |i| self.element(i))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.0.order).map(move |i| self.element(i))
    }

    /// Tr: GF(q) -> GF(p) as a GF(p)-linear functional.
    pub(crate) fn basis_traces(&self) -> &[u32] {
        &self.0.basis_traces
    }

    fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.e, self.0.modulus)
    }
}

/// An element of a [`FieldSpec`] in the polynomial basis `1, x, ..., x^{e-1}`.
#[derive(Clone)]
pub struct FieldElement {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn index(&self) -> u64 {
        let p = self.field.p() as u64;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c as u64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| ((a as u64 + b as u64) % p as u64) as u32)
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        let p = self.field.p() as u64;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| ((a as u64 + p - b as u64) % p) as u32)
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        let p = self.field.p();
        let e = self.field.degree();
        let mut prod = fp_poly::mul(p, &self.coeffs, &rhs.coeffs);
        fp_poly::reduce_monic(p, &mut prod, self.field.modulus());
        prod.resize(e, 0);
        Ok(self.with_coeffs(prod))
    }

    pub fn neg(&self) -> Self {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        self.with_coeffs(coeffs)
    }

    /// Multiplication by an integer (repeated addition).
    pub fn scale(&self, n: i64) -> Self {
        let p = self.field.p() as i64;
        let k = n.rem_euclid(p) as u64;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| ((c as u64 * k) % p as u64) as u32)
            .collect();
        self.with_coeffs(coeffs)
    }

    /// Square-and-multiply.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// Absolute trace `Tr: GF(q) -> GF(p)`, returned as a residue.
    pub fn absolute_trace(&self) -> u32 {
        let p = self.field.p() as u64;
        let t = self
            .coeffs
            .iter()
            .zip(self.field.basis_traces())
            .fold(0u64, |acc, (&c, &t)| (acc + c as u64 * t as u64) % p);
        t as u32
    }

    /// `c + c^p + ... + c^{p^{e-1}}` evaluated in the field.
    pub fn absolute_trace_literal(&self) -> Self {
        let p = self.field.p() as u64;
        let mut acc = self.clone();
        let mut term = self.clone();
        for _ in 1..self.field.degree() {
            term = term.pow(p);
            acc = &acc + &term;
        }
        acc
    }

    fn with_coeffs(&self, coeffs: Vec<u32>) -> Self {
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ascending coefficient tuple read as a base-`p` integer.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prime-field elements print as their residue, others as `c0:c1:...`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(":"))
    }
}

// Operator forms panic on mixed fields; use the `checked_*` methods to get an error instead.
macro_rules! field_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands in different fields")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$checked(&rhs).expect("operands in different fields")
            }
        }
    };
}

field_op!(Add, add, checked_add);
field_op!(Sub, sub, checked_sub);
field_op!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldSpec {
        FieldSpec::new(2, 2).unwrap()
    }

    #[test]
    fn gf4_products() {
        let f = gf4();
        let x = f.x();
        let x1 = &x + &f.one();
        assert!((&x * &x1).is_one());
        assert_eq!(x.inv().unwrap(), x1);
        assert!(x.pow(3).is_one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(gf4().zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = gf4().one();
        let b = FieldSpec::new(3, 1).unwrap().one();
        assert_eq!(a.checked_add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(matches!(FieldSpec::new(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(FieldSpec::new(2, 0), Err(Error::InvalidDegree(0))));
    }

    #[test]
    fn with_modulus_validates() {
        assert!(FieldSpec::with_modulus(2, &[1, 1, 1]).is_ok());
        assert!(matches!(
            FieldSpec::with_modulus(2, &[1, 0, 1]),
            Err(Error::BadModulus(2))
        ));
    }

    #[test]
    fn index_roundtrip_and_order() {
        let f = FieldSpec::new(3, 2).unwrap();
        for i in 0..9 {
            assert_eq!(f.element(i).index(), i);
        }
        assert!(f.element(2) < f.element(3));
    }

    #[test]
    fn absolute_trace_gf4() {
        let f = gf4();
        assert_eq!(f.x().absolute_trace(), 1);
        assert_eq!(f.zero().absolute_trace(), 0);
        assert_eq!(f.one().absolute_trace(), 0);
    }

    #[test]
    fn absolute_trace_matches_literal_sum() {
        for (p, e) in [(2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = FieldSpec::new(p, e).unwrap();
            for c in f.elements() {
                let lit = c.absolute_trace_literal();
                assert_eq!(lit, f.constant(c.absolute_trace() as i64));
            }
        }
    }

    #[test]
    fn inverse_and_frobenius_exhaustive() {
        for (p, e) in [(2, 4), (3, 2), (7, 1), (5, 2)] {
            let f = FieldSpec::new(p, e).unwrap();
            let q = f.order();
            for c in f.elements() {
                assert_eq!(c.pow(q), c);
                if !c.is_zero() {
                    assert!((&c * &c.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn parse_element_forms() {
        let f = gf4();
        assert_eq!(f.parse_element("3").unwrap(), f.element(3));
        assert_eq!(f.parse_element("0:1").unwrap(), f.x());
        assert!(f.parse_element("4").is_err());
        assert!(f.parse_element("2:0").is_err());
    }
}

use std::fmt;

use super::field::{FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// Polynomial over a [`FieldSpec`], ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(Poly {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    /// `c · x^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(&field, coeffs).expect("single field")
    }

    /// From integer coefficients in the prime subfield.
    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.constant(c)).collect()).expect("single field")
    }

    /// Comma-separated ascending coefficients, each in [`FieldSpec::parse_element`] form.
    pub fn parse(field: &FieldSpec, text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|t| field.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(&self.field, out)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(i as i64))
            .collect();
        Poly::new(&self.field, coeffs).expect("single field")
    }

    /// Remainder of division by a nonzero `m`.
    pub fn rem(&self, m: &Poly) -> Result<Poly> {
        if self.field != m.field {
            return Err(Error::FieldMismatch);
        }
        let d = m.degree().ok_or(Error::ZeroInverse)?;
        let lead_inv = m.coeffs[d].inv()?;
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let factor = &r[top] * &lead_inv;
            if !factor.is_zero() {
                for (i, mc) in m.coeffs.iter().enumerate() {
                    let slot = top - d + i;
                    r[slot] = &r[slot] - &(&factor * mc);
                }
            }
            r.pop();
        }
        Poly::new(&self.field, r)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        match a.coeffs.last() {
            None => Ok(a),
            Some(lead) => {
                let inv = lead.inv()?;
                Poly::new(&a.field, a.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(m)?;
        let mut acc = Poly::new(&self.field, vec![self.field.one()])?.rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Number of distinct roots in a splitting field.
    ///
    /// `deg gcd(f, x^{q^k} - x)` counts distinct roots lying in `F_{q^k}`; Möbius
    /// inversion over `k <= deg f` isolates roots of exact degree `k`.
    pub fn distinct_root_count(&self) -> Result<usize> {
        let n = match self.degree() {
            None => return Err(Error::Invalid("the zero polynomial has every element as a root".into())),
            Some(n) => n,
        };
        let q = self.field.order();
        let x = Poly::monomial(self.field.one(), 1);
        let mut frob = x.clone();
        let mut in_level = vec![0i64; n + 1];
        for slot in in_level.iter_mut().skip(1) {
            frob = frob.pow_mod(q, self)?;
            let diff = Poly::new(
                &self.field,
                (0..frob.coeffs.len().max(2))
                    .map(|i| {
                        let a = frob.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero());
                        let b = x.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero());
                        &a - &b
                    })
                    .collect(),
            )?;
            let g = if diff.is_zero() { self.clone() } else { self.gcd(&diff)? };
            *slot = g.degree().unwrap_or(0) as i64;
        }
        let mut total = 0i64;
        for k in 1..=n {
            let exact: i64 = (1..=k)
                .filter(|j| k % j == 0)
                .map(|j| mobius((k / j) as u64) * in_level[j])
                .sum();
            total += exact;
        }
        Ok(total as usize)
    }

    /// Applies a coefficient map, e.g. a tower embedding.
    pub fn map_coeffs(&self, target: &FieldSpec, f: impl Fn(&FieldElement) -> FieldElement) -> Poly {
        Poly::new(target, self.coeffs.iter().map(f).collect()).expect("map stays in target field")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending comma-separated coefficients; the zero polynomial prints as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A monic polynomial; its signed coefficients are `c_j = (-1)^j a_{k-j}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonicPoly(Poly);

impl MonicPoly {
    pub fn new(poly: Poly) -> Result<Self> {
        match poly.coeffs.last() {
            Some(lead) if lead.is_one() => Ok(MonicPoly(poly)),
            _ => Err(Error::Invalid(format!("{poly} is not monic"))),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        MonicPoly(Poly::new(field, vec![field.one()]).expect("single field"))
    }

    /// The `index`-th monic polynomial of degree `k`: lower coefficients `a_0..a_{k-1}`
    /// are the base-`q` digits of `index` (each digit an element index).
    pub fn from_index(field: &FieldSpec, k: usize, mut index: u64) -> Self {
        let q = field.order();
        let mut coeffs = Vec::with_capacity(k + 1);
        for _ in 0..k {
            coeffs.push(field.element(index % q));
            index /= q;
        }
        coeffs.push(field.one());
        MonicPoly(Poly {
            field: field.clone(),
            coeffs,
        })
    }

    /// Builds `sum_j (-1)^j c_j x^{k-j}` from `c_1..c_k` (with `c_0 = 1`).
    pub fn from_signed(field: &FieldSpec, signed: &[FieldElement]) -> Self {
        let k = signed.len();
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        for (j, c) in signed.iter().enumerate() {
            let j = j + 1;
            coeffs[k - j] = if j % 2 == 0 { c.clone() } else { -c };
        }
        MonicPoly(Poly {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn degree(&self) -> usize {
        self.0.coeffs.len() - 1
    }

    /// Inverse of [`from_index`](Self::from_index).
    pub fn index(&self) -> u64 {
        let q = self.0.field.order();
        self.0.coeffs[..self.degree()]
            .iter()
            .rev()
            .fold(0, |acc, c| acc * q + c.index())
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    /// `c_0 = 1, c_1, ..., c_k`.
    pub fn signed_coeffs(&self) -> Vec<FieldElement> {
        let k = self.degree();
        (0..=k)
            .map(|j| {
                let a = &self.0.coeffs[k - j];
                if j % 2 == 0 {
                    a.clone()
                } else {
                    -a
                }
            })
            .collect()
    }

    pub fn mul(&self, other: &MonicPoly) -> Result<MonicPoly> {
        Ok(MonicPoly(self.0.mul(&other.0)?))
    }
}

fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic polynomials of degree `k` over `GF(q)`.
pub fn monic_count(q: u64, k: usize) -> Option<u64> {
    q.checked_pow(k as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_coefficients_roundtrip() {
        let f = FieldSpec::prime(5).unwrap();
        for idx in 0..125 {
            let g = MonicPoly::from_index(&f, 3, idx);
            assert_eq!(g.index(), idx);
            let signed = g.signed_coeffs();
            assert!(signed[0].is_one());
            assert_eq!(MonicPoly::from_signed(&f, &signed[1..]), g);
        }
    }

    #[test]
    fn x_minus_c_has_c1_equal_c() {
        let f = FieldSpec::prime(7).unwrap();
        let c = f.constant(3);
        let g = MonicPoly::new(Poly::new(&f, vec![-&c, f.one()]).unwrap()).unwrap();
        assert_eq!(g.signed_coeffs()[1], c);
    }

    #[test]
    fn gcd_and_remainder() {
        let f = FieldSpec::prime(5).unwrap();
        let a = Poly::parse(&f, "1,0,1").unwrap(); // (x - 2)(x + 2)
        let b = Poly::parse(&f, "3,1").unwrap(); // x - 2
        assert!(a.rem(&b).unwrap().is_zero());
        assert_eq!(a.gcd(&b).unwrap(), b);
        assert_eq!(Poly::parse(&f, "0,1,0,1").unwrap().derivative().to_string(), "1,0,3");
    }

    #[test]
    fn distinct_roots_match_enumeration() {
        use crate::gf::build_tower;
        let f = FieldSpec::prime(3).unwrap();
        // roots of exact degree <= 3 all show up in GF(3^6)
        let ctx = build_tower(&f, 6).unwrap();
        for idx in 0..81 {
            let g = MonicPoly::from_index(&f, 3, idx);
            let lifted = g.as_poly().map_coeffs(ctx.big(), |c| ctx.embed(c));
            let brute = ctx.big().elements().filter(|c| lifted.eval(c).is_zero()).count();
            assert_eq!(g.as_poly().distinct_root_count().unwrap(), brute, "{g:?}");
        }
        let x5 = Poly::parse(&FieldSpec::prime(5).unwrap(), "0,0,0,0,0,1").unwrap();
        assert_eq!(x5.distinct_root_count().unwrap(), 1);
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(Poly::parse(&f5, "0,4,1").unwrap().distinct_root_count().unwrap(), 2);
    }

    #[test]
    fn parse_and_display() {
        let f = FieldSpec::prime(5).unwrap();
        let p = Poly::parse(&f, "0,1,0,1").unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "0,1,0,1");
        assert_eq!(p.eval(&f.constant(2)), f.constant(10));
        assert!(MonicPoly::new(Poly::parse(&f, "1,2").unwrap()).is_err());
    }
}

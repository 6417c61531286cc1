//! Exact arithmetic in `Q(ζ_N)`, power basis modulo `Φ_N`.
//!
//! Every character value and every character sum in this crate is a [`CycloNumber`], so
//! the recursion identities are checked with exact equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MAX_ORDER: u64 = 10_000;

struct CycloContext {
    order: u64,
    /// `Φ_N`, ascending, monic.
    modulus: Vec<i64>,
    /// `x^k mod Φ_N` for `0 <= k < N`, each of length `φ(N)`.
    zeta_pows: Vec<Vec<i64>>,
}

impl CycloContext {
    fn phi(&self) -> usize {
        self.modulus.len() - 1
    }
}

fn contexts() -> &'static Mutex<HashMap<u64, Arc<CycloContext>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycloContext>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn context(n: u64) -> Result<Arc<CycloContext>> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    if let Some(ctx) = contexts().lock().unwrap().get(&n) {
        return Ok(ctx.clone());
    }
    let modulus = cyclotomic_polynomial(n)?;
    let phi = modulus.len() - 1;
    let mut zeta_pows = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        zeta_pows.push(cur.clone());
        // multiply by x and reduce
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..phi {
            cur[i] = cur[i]
                .checked_sub(top.checked_mul(modulus[i]).expect("coefficient overflow"))
                .expect("coefficient overflow");
        }
    }
    let ctx = Arc::new(CycloContext {
        order: n,
        modulus,
        zeta_pows,
    });
    contexts().lock().unwrap().insert(n, ctx.clone());
    Ok(ctx)
}

/// Exact quotient of `a` by a monic `b` (remainder must vanish).
fn div_monic_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![0i64; a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db];
        quot[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[i + j] = c
                    .checked_mul(bj)
                    .and_then(|t| rem[i + j].checked_sub(t))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// `Φ_N`, ascending integer coefficients, by dividing `x^N - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Result<Vec<i64>> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    static POLYS: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = POLYS.get_or_init(Default::default);
    if let Some(poly) = cache.lock().unwrap().get(&n) {
        return Ok(poly.clone());
    }
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d)?;
        poly = div_monic_exact(&poly, &phi_d);
    }
    cache.lock().unwrap().insert(n, poly.clone());
    Ok(poly)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| num_gcd(*k, n) == 1).count() as u64
}

pub fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An element of `Q(ζ_N)` in canonical form.
#[derive(Clone)]
pub struct CycloNumber {
    ctx: Arc<CycloContext>,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    fn from_coeffs(ctx: Arc<CycloContext>, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len(), ctx.phi());
        CycloNumber { ctx, coeffs }
    }

    pub fn zero(order: u64) -> Result<Self> {
        let ctx = context(order)?;
        let phi = ctx.phi();
        Ok(Self::from_coeffs(ctx, vec![BigRational::zero(); phi]))
    }

    pub fn one(order: u64) -> Result<Self> {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u64, n: i64) -> Result<Self> {
        Self::from_rational(order, BigRational::from_integer(n.into()))
    }

    pub fn from_rational(order: u64, r: BigRational) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = r;
        Ok(z)
    }

    /// Power-basis coefficients `c_0..c_{φ(N)-1}`.
    pub fn from_power_basis(order: u64, coeffs: Vec<BigRational>) -> Result<Self> {
        let ctx = context(order)?;
        if coeffs.len() != ctx.phi() {
            return Err(Error::Invalid(format!(
                "expected {} coefficients for order {order}, got {}",
                ctx.phi(),
                coeffs.len()
            )));
        }
        Ok(Self::from_coeffs(ctx, coeffs))
    }

    /// `ζ_N^{k mod N}`.
    pub fn root_of_unity_power(order: u64, k: i64) -> Result<Self> {
        let ctx = context(order)?;
        let idx = k.rem_euclid(order as i64) as usize;
        let coeffs = ctx.zeta_pows[idx]
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        Ok(Self::from_coeffs(ctx, coeffs))
    }

    /// `Σ_k counts[k] · ζ_N^k` for `counts` of any length (indices taken mod `N`).
    pub fn from_exponent_counts(order: u64, counts: &[i64]) -> Result<Self> {
        let ctx = context(order)?;
        let phi = ctx.phi();
        let mut acc = vec![BigInt::zero(); phi];
        for (k, &cnt) in counts.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            let row = &ctx.zeta_pows[k % order as usize];
            for (slot, &r) in acc.iter_mut().zip(row) {
                if r != 0 {
                    *slot += BigInt::from(cnt) * r;
                }
            }
        }
        let coeffs = acc.into_iter().map(BigRational::from_integer).collect();
        Ok(Self::from_coeffs(ctx, coeffs))
    }

    pub fn order(&self) -> u64 {
        self.ctx.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.ctx.order == other.ctx.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.ctx.order, other.ctx.order))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self::from_coeffs(self.ctx.clone(), coeffs))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self::from_coeffs(self.ctx.clone(), coeffs))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let phi = self.ctx.phi();
        let n = self.ctx.order as usize;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod.drain(..phi).collect();
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &self.ctx.zeta_pows[(k + phi) % n];
            for (slot, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *slot += &c * BigRational::from_integer(r.into());
                }
            }
        }
        Ok(Self::from_coeffs(self.ctx.clone(), out))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        Self::from_coeffs(self.ctx.clone(), coeffs)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(n.into()))
    }

    pub fn div_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoDivision(0));
        }
        Ok(self.scale(&BigRational::new(1.into(), n.into())))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ctx.order).expect("valid order");
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

    /// Re-expresses the value in `Q(ζ_N)` for a multiple `N` of the current order.
    pub fn promote(&self, order: u64) -> Result<Self> {
        let m = self.ctx.order;
        if !order.is_multiple_of(m) {
            return Err(Error::OrderMismatch(m, order));
        }
        let target = context(order)?;
        let step = (order / m) as usize;
        let mut out = vec![BigRational::zero(); target.phi()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &target.zeta_pows[(i * step) % order as usize];
            for (slot, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *slot += c * BigRational::from_integer(r.into());
                }
            }
        }
        Ok(Self::from_coeffs(target, out))
    }

    /// Evaluates at `ζ_N = exp(2πi/N)` in double precision.
    ///
    /// Absolute error is at most about `φ(N) · max|c_i| · 2^{-50}`.
    pub fn embed_complex(&self) -> Complex64 {
        let n = self.ctx.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// E.g. `1 + 2*z5^2 - 1/3*z5^3`, where `zN` denotes `ζ_N`.
impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if wrote {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            wrote = true;
            let z = self.ctx.order;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "z{z}")?;
                    } else {
                        write!(f, "z{z}^{i}")?;
                    }
                }
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! cyclo_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                self.$checked(rhs).expect("cyclotomic orders differ")
            }
        }
        impl $trait<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$checked(&rhs).expect("cyclotomic orders differ")
            }
        }
    };
}

cyclo_op!(Add, add, checked_add);
cyclo_op!(Sub, sub, checked_sub);
cyclo_op!(Mul, mul, checked_mul);

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.scale_int(-1)
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.scale_int(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity_power(n, k).unwrap()
    }

    fn int(n: u64, v: i64) -> CycloNumber {
        CycloNumber::from_int(n, v).unwrap()
    }

    fn mobius(n: u64) -> i64 {
        let mut m = n;
        let mut mu = 1;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                m /= d;
                if m.is_multiple_of(d) {
                    return 0;
                }
                mu = -mu;
            }
            d += 1;
        }
        if m > 1 {
            mu = -mu;
        }
        mu
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(3).unwrap(), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6).unwrap(), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap().len() as u64 - 1, totient(12));
    }

    #[test]
    fn relations() {
        assert_eq!(&z(3, 1) + &z(3, 2), int(3, -1));
        assert_eq!(&z(4, 1) * &z(4, 1), int(4, -1));
        let s = (0..5).fold(CycloNumber::zero(5).unwrap(), |acc, k| &acc + &z(5, k));
        assert!(s.is_zero());
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(3, 4), z(3, 1));
        assert_eq!(z(2, 1), int(2, -1));
        assert_eq!(z(1, 0), int(1, 1));
        assert_eq!(z(7, -1), z(7, 6));
    }

    #[test]
    fn complex_embedding() {
        let i = z(4, 1).embed_complex();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let w = z(3, 1).embed_complex();
        assert!((w - Complex64::new(-0.5, 0.75f64.sqrt())).norm() < 1e-12);
        let h = CycloNumber::from_rational(7, BigRational::new(3.into(), 2.into())).unwrap();
        assert_eq!(h.embed_complex(), Complex64::new(1.5, 0.0));
    }

    #[test]
    fn primitive_root_sum_is_mobius() {
        for n in 1..=30 {
            let s = (0..n as i64)
                .filter(|&k| num_gcd(k as u64, n) == 1)
                .fold(CycloNumber::zero(n).unwrap(), |acc, k| &acc + &z(n, k));
            assert_eq!(s, int(n, mobius(n)), "N = {n}");
        }
    }

    #[test]
    fn mixed_orders_rejected() {
        assert_eq!(
            z(3, 1).checked_add(&z(5, 1)),
            Err(Error::OrderMismatch(3, 5))
        );
        assert!(z(3, 1).promote(5).is_err());
    }

    #[test]
    fn promotion_matches_direct_embedding() {
        for (m, n) in [(3, 6), (3, 12), (4, 12), (2, 8), (5, 10), (1, 7)] {
            for k in 0..m as i64 {
                let a = z(m, k).scale_int(3);
                let b = a.promote(n).unwrap();
                assert!((a.embed_complex() - b.embed_complex()).norm() < 1e-12);
                assert_eq!(b, z(n, k * (n / m) as i64).scale_int(3));
            }
        }
    }

    #[test]
    fn exponent_counts() {
        let v = CycloNumber::from_exponent_counts(3, &[1, 2, 0]).unwrap();
        assert_eq!(v, &int(3, 1) + &z(3, 1).scale_int(2));
        // wraps mod N
        let w = CycloNumber::from_exponent_counts(2, &[0, 0, 1]).unwrap();
        assert_eq!(w, int(2, 1));
    }

    #[test]
    fn order_bound() {
        assert!(matches!(CycloNumber::zero(0), Err(Error::OrderTooLarge(0))));
        assert!(cyclotomic_polynomial(MAX_ORDER + 1).is_err());
    }
}

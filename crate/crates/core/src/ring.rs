//! The coefficient rings that Newton's identities and Dickson polynomials run over.

use std::fmt::Debug;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::gf::FieldElement;

/// A commutative ring whose constants are produced from an existing element, since
/// finite-field and cyclotomic elements carry their parent structure.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn one_like(&self) -> Self {
        self.from_int_like(1)
    }

    fn negate(&self) -> Self {
        self.zero_like().minus(self)
    }

    /// Multiplication by an integer, i.e. repeated addition.
    fn times_int(&self, n: i64) -> Self {
        self.times(&self.from_int_like(n))
    }

    fn pow_u(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// Rings where division by a nonzero integer is (sometimes) defined.
pub trait DivInt: Ring {
    fn div_int(&self, n: i64) -> Result<Self>;
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn from_int_like(&self, n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
}

impl DivInt for BigRational {
    fn div_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoDivision(0));
        }
        Ok(self / BigRational::from_integer(n.into()))
    }
}

impl Ring for CycloNumber {
    fn zero_like(&self) -> Self {
        CycloNumber::zero(self.order()).expect("order already valid")
    }
    fn from_int_like(&self, n: i64) -> Self {
        CycloNumber::from_int(self.order(), n).expect("order already valid")
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn times_int(&self, n: i64) -> Self {
        self.scale_int(n)
    }
}

impl DivInt for CycloNumber {
    fn div_int(&self, n: i64) -> Result<Self> {
        CycloNumber::div_int(self, n)
    }
}

impl Ring for FieldElement {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn from_int_like(&self, n: i64) -> Self {
        self.field().constant(n)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn times_int(&self, n: i64) -> Self {
        self.scale(n)
    }
}

/// Division by `n` works exactly when `p` does not divide `n`.
impl DivInt for FieldElement {
    fn div_int(&self, n: i64) -> Result<Self> {
        let k = self.field().constant(n);
        let inv = k.inv().map_err(|_| Error::NoDivision(n))?;
        Ok(self * &inv)
    }
}

impl Ring for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::zero()
    }
    fn from_int_like(&self, n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl DivInt for Complex64 {
    fn div_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoDivision(0));
        }
        Ok(self / n as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    #[test]
    fn field_division_by_characteristic_fails() {
        let f = FieldSpec::prime(5).unwrap();
        let one = f.one();
        assert_eq!(one.div_int(5), Err(Error::NoDivision(5)));
        assert_eq!(one.div_int(2).unwrap(), f.constant(3));
    }

    #[test]
    fn times_int_is_repeated_addition() {
        let f = FieldSpec::new(2, 2).unwrap();
        let x = f.x();
        assert!(x.times_int(2).is_zero());
        assert_eq!(x.times_int(3), x);
    }
}

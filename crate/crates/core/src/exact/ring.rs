use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with identity, as needed by the polynomial and
/// determinant code.
///
/// Elements of the concrete rings used here (quadratic fields, finite
/// fields) carry their own context, so identities are produced from an
/// existing element rather than from a bare associated function.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_int(&self, n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring in which exact quotients `a / b` (with `b | a`) can be computed.
pub trait ExactDivision: Ring {
    /// Panics if `d` is zero; the result is unspecified if `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Self;
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|di| self.mul(&di))
    }
}

impl<F: Field> ExactDivision for F {
    fn div_exact(&self, d: &Self) -> Self {
        self.mul(&d.inv().expect("division by zero"))
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: i64) -> Self {
        self * BigRational::from_integer(n.into())
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Sign helper used when printing rationals.
pub(crate) fn is_negative(x: &BigRational) -> bool {
    x.is_negative()
}

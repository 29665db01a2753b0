use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::value::Value;
use super::{Ring, RingRef};
use crate::decision::Decision;
use crate::error::{Error, Result};

/// An element of a ring of the tower, in canonical form.
///
/// The arithmetic operators panic when the operands live in different rings;
/// the `try_*` methods report [`Error::RingMismatch`] instead.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElem {
    ring: RingRef,
    value: Value,
}

impl RingElem {
    pub(crate) fn from_parts(ring: RingRef, value: Value) -> Self {
        RingElem { ring, value }
    }

    pub(crate) fn value(&self) -> &Value {
        &self.value
    }

    pub(crate) fn with_value(&self, value: Value) -> Self {
        RingElem {
            ring: self.ring.clone(),
            value,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::from_parts(ring.clone(), ring.zero_v())
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::from_parts(ring.clone(), ring.one_v())
    }

    pub fn from_int(ring: &RingRef, n: i64) -> Self {
        Self::from_bigint(ring, &BigInt::from(n))
    }

    pub fn from_bigint(ring: &RingRef, n: &BigInt) -> Self {
        Self::from_parts(ring.clone(), ring.bigint_v(n))
    }

    /// Image of a rational number; fails when the denominator is not a unit.
    pub fn from_rational(ring: &RingRef, r: &BigRational) -> Result<Self> {
        ring.rational_v(r)
            .map(|v| Self::from_parts(ring.clone(), v))
            .ok_or_else(|| Error::NotInvertible(r.denom().to_string()))
    }

    pub fn from_ratio(ring: &RingRef, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::NotInvertible("0".into()));
        }
        Self::from_rational(ring, &BigRational::new(num.into(), den.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero_v(&self.value)
    }

    pub fn is_one(&self) -> bool {
        self.value == self.ring.one_v()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.value {
            Value::Mod(v) => Some(*v),
            _ => None,
        }
    }

    pub fn check_same_ring(&self, other: &RingElem) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    /// Checks that `self` lives in `ring`.
    pub fn check_ring(&self, ring: &RingRef) -> Result<()> {
        if &self.ring == ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: ring.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check_same_ring(other)?;
        Ok(self.with_value(self.ring.add_v(&self.value, &other.value)))
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check_same_ring(other)?;
        Ok(self.with_value(self.ring.sub_v(&self.value, &other.value)))
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check_same_ring(other)?;
        Ok(self.with_value(self.ring.mul_v(&self.value, &other.value)))
    }

    /// The unique `h` with `2h = self`.
    pub fn half(&self) -> RingElem {
        self.with_value(self.ring.half_v(&self.value))
    }

    pub fn pow(&self, exp: u32) -> RingElem {
        self.with_value(self.ring.pow_v(&self.value, exp))
    }

    pub fn scale(&self, n: i64) -> RingElem {
        self * &RingElem::from_int(&self.ring, n)
    }

    pub fn square(&self) -> RingElem {
        self * self
    }

    pub fn is_unit(&self) -> Decision {
        self.ring.is_unit_v(&self.value)
    }

    pub fn is_nilpotent(&self) -> Decision {
        self.ring.is_nilpotent_v(&self.value)
    }

    /// Whether `self` is a nonzerodivisor.
    pub fn is_regular(&self) -> Decision {
        self.ring.is_regular_v(&self.value)
    }

    pub fn inv(&self) -> Result<RingElem> {
        match self.is_unit() {
            Decision::No => Err(Error::NotInvertible(self.to_string())),
            Decision::Undecided => Err(Error::UndecidedUnit(self.to_string())),
            Decision::Yes => self
                .ring
                .inv_v(&self.value)
                .map(|v| self.with_value(v))
                .ok_or_else(|| Error::Inconsistent("unit without computable inverse".into())),
        }
    }

    /// `self / other` for a unit `other`.
    pub fn try_div(&self, other: &RingElem) -> Result<RingElem> {
        self.try_mul(&other.inv()?)
    }

    /// Maps `self` into `target` along the structural inclusion of the tower
    /// (constants into polynomial rings, a polynomial ring into its
    /// quotients, rationals with unit denominator into `Z/m`).
    pub fn coerce(&self, target: &RingRef) -> Result<RingElem> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mismatch = || Error::RingMismatch {
            left: self.ring.to_string(),
            right: target.to_string(),
        };
        match &**target {
            Ring::Polynomial(p) => {
                let c = self.coerce(&p.base).map_err(|_| mismatch())?;
                let poly = super::Poly::constant(p.nvars(), c.value, &p.base);
                Ok(RingElem::from_parts(target.clone(), Value::Poly(poly)))
            }
            Ring::Quotient(q) => {
                let lifted = self.coerce(&q.base).map_err(|_| mismatch())?;
                Ok(RingElem::from_parts(target.clone(), q.reduce(lifted.value)))
            }
            Ring::Modular(_) => match &self.value {
                Value::Rat(r) => RingElem::from_rational(target, r),
                _ => Err(mismatch()),
            },
            Ring::Rational => Err(mismatch()),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ring.fmt_value(&self.value, f)
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

fn expect_same(a: &RingElem, b: &RingElem) {
    if a.ring != b.ring {
        panic!("ring mismatch: {} vs {}", a.ring, b.ring);
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $vfn:ident) => {
        impl $tr<&RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                expect_same(self, rhs);
                self.with_value(self.ring.$vfn(&self.value, &rhs.value))
            }
        }
        impl $tr<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                (&self).$method(rhs)
            }
        }
        impl $tr<RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_v);
binop!(Sub, sub, sub_v);
binop!(Mul, mul, mul_v);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        self.with_value(self.ring.neg_v(&self.value))
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

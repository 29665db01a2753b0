//! The ring tower: descriptors, canonical values and element arithmetic.
//!
//! A [`Ring`] describes one of
//!
//! * `Q`, the rationals (arbitrary precision),
//! * `Z/m` with `m` odd and at least 3,
//! * `B[X1, ..., Xk]` for a ring `B` of the tower, with lexicographic
//!   monomial order following the declared variable order,
//! * `B[T]/(g)` for a univariate polynomial ring `B[T]` and a monic `g`.
//!
//! Elements ([`RingElem`]) carry a shared handle to their ring and keep their
//! payload canonical, so `==` is semantic equality.

mod elem;
mod ideal;
pub(crate) mod intmod;
mod poly;
pub mod symmetric;
mod univariate;
mod value;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

pub use elem::RingElem;
pub use ideal::generates_unit_ideal;
pub use symmetric::{elem_symmetric, s_ring_for, symmetric_reduce, symmetric_reduce_with};
pub(crate) use value::{Poly, Value};

use crate::error::{Error, Result};

pub type RingRef = Arc<Ring>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Rational,
    Modular(u64),
    Polynomial(PolyRing),
    Quotient(QuotientRing),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub(crate) base: RingRef,
    pub(crate) vars: Vec<String>,
}

/// `B[T]/(g)` with `g` monic of degree at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    pub(crate) base: RingRef,
    pub(crate) modulus: Poly,
}

impl PolyRing {
    pub fn base(&self) -> &RingRef {
        &self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

impl QuotientRing {
    /// The univariate polynomial ring being divided.
    pub fn base(&self) -> &RingRef {
        &self.base
    }

    /// Coefficient ring of the univariate base.
    pub fn coefficients(&self) -> &RingRef {
        match &*self.base {
            Ring::Polynomial(p) => &p.base,
            _ => unreachable!("quotient base is always a univariate polynomial ring"),
        }
    }

    pub fn modulus(&self) -> RingElem {
        RingElem::from_parts(self.base.clone(), Value::Poly(self.modulus.clone()))
    }

    pub fn degree(&self) -> usize {
        self.modulus
            .terms
            .keys()
            .next_back()
            .map_or(0, |m| m[0] as usize)
    }
}

impl Ring {
    pub fn rational() -> RingRef {
        Arc::new(Ring::Rational)
    }

    /// `Z/m`. Even moduli are rejected: 2 has to be a unit.
    pub fn modular(m: u64) -> Result<RingRef> {
        if m < 3 || m.is_multiple_of(2) {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Arc::new(Ring::Modular(m)))
    }

    pub fn polynomial<S: AsRef<str>>(base: &RingRef, vars: &[S]) -> Result<RingRef> {
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "a polynomial ring needs at least one variable".into(),
            ));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!(
                    "bad or repeated variable name {v:?}"
                )));
            }
        }
        Ok(Arc::new(Ring::Polynomial(PolyRing {
            base: base.clone(),
            vars,
        })))
    }

    /// `base[prefix1, ..., prefixN]`.
    pub fn indexed_polynomial(base: &RingRef, prefix: &str, n: usize) -> Result<RingRef> {
        let vars: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Ring::polynomial(base, &vars)
    }

    /// Quotient of a univariate polynomial ring by a monic polynomial of
    /// positive degree.
    pub fn quotient(modulus: &RingElem) -> Result<RingRef> {
        let base = modulus.ring().clone();
        let coeffs = match &*base {
            Ring::Polynomial(p) if p.nvars() == 1 => p.base.clone(),
            _ => {
                return Err(Error::InvalidRing(format!(
                    "quotient needs a univariate polynomial ring, found {base}"
                )))
            }
        };
        let poly = match modulus.value() {
            Value::Poly(p) => p.clone(),
            _ => unreachable!(),
        };
        match poly.terms.iter().next_back() {
            Some((m, c)) if m[0] >= 1 && *c == coeffs.one_v() => {}
            _ => {
                return Err(Error::InvalidRing(format!(
                    "quotient modulus {modulus} must be monic of degree at least 1"
                )))
            }
        }
        Ok(Arc::new(Ring::Quotient(QuotientRing {
            base,
            modulus: poly,
        })))
    }

    pub fn as_polynomial(&self) -> Option<&PolyRing> {
        match self {
            Ring::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_quotient(&self) -> Option<&QuotientRing> {
        match self {
            Ring::Quotient(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Ring::Rational => true,
            Ring::Modular(m) => intmod::is_prime(*m),
            _ => false,
        }
    }

    /// True when the ring is known to be an integral domain.
    pub fn is_domain(&self) -> bool {
        match self {
            Ring::Polynomial(p) => p.base.is_domain(),
            _ => self.is_field(),
        }
    }

    /// Number of elements for finite rings.
    pub fn cardinality(&self) -> Option<u64> {
        match self {
            Ring::Modular(m) => Some(*m),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => f.write_str("Q"),
            Ring::Modular(m) => write!(f, "Z/{m}"),
            Ring::Polynomial(p) => write!(f, "{}[{}]", p.base, p.vars.join(",")),
            Ring::Quotient(q) => write!(f, "{}/({})", q.base, q.modulus()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_modulus_is_rejected() {
        assert_eq!(Ring::modular(4), Err(Error::InvalidModulus(4)));
        assert_eq!(Ring::modular(1), Err(Error::InvalidModulus(1)));
        assert!(Ring::modular(15).is_ok());
    }

    #[test]
    fn quotient_needs_monic_univariate_modulus() {
        let q = Ring::rational();
        let qt = Ring::polynomial(&q, &["T"]).unwrap();
        let t = RingElem::var(&qt, 0).unwrap();
        let two = RingElem::from_int(&qt, 2);
        assert!(Ring::quotient(&(&t * &t - RingElem::from_int(&qt, 5))).is_ok());
        assert!(Ring::quotient(&(&two * &t * &t)).is_err());
        assert!(Ring::quotient(&two).is_err());
        let qxy = Ring::polynomial(&q, &["X", "Y"]).unwrap();
        assert!(Ring::quotient(&RingElem::var(&qxy, 0).unwrap()).is_err());
    }

    #[test]
    fn repeated_variables_rejected() {
        assert!(Ring::polynomial(&Ring::rational(), &["T", "T"]).is_err());
        assert!(Ring::polynomial::<&str>(&Ring::rational(), &[]).is_err());
    }

    #[test]
    fn display() {
        let q = Ring::rational();
        let qt = Ring::polynomial(&q, &["T"]).unwrap();
        let t = RingElem::var(&qt, 0).unwrap();
        let quo = Ring::quotient(&(&t * &t - RingElem::from_int(&qt, 5))).unwrap();
        assert_eq!(quo.to_string(), "Q[T]/(T^2-5)");
        assert_eq!(Ring::modular(15).unwrap().to_string(), "Z/15");
    }
}

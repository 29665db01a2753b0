//! Polynomial-specific API on [`RingElem`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::value::{Monomial, Poly, Value};
use super::{PolyRing, Ring, RingElem, RingRef};
use crate::error::{Error, Result};

fn poly_ring(ring: &RingRef) -> Result<&PolyRing> {
    ring.as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(ring.to_string()))
}

impl RingElem {
    /// The `index`-th variable of a polynomial ring.
    pub fn var(ring: &RingRef, index: usize) -> Result<RingElem> {
        let p = poly_ring(ring)?;
        if index >= p.nvars() {
            return Err(Error::OutOfRange(format!(
                "variable index {index} out of range for {ring}"
            )));
        }
        let mut m = vec![0; p.nvars()];
        m[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, p.base.one_v());
        Ok(RingElem::from_parts(
            ring.clone(),
            Value::Poly(Poly { terms }),
        ))
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<RingElem> {
        let p = poly_ring(ring)?;
        let index = p
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::OutOfRange(format!("no variable {name} in {ring}")))?;
        RingElem::var(ring, index)
    }

    /// `coeff * X^exps`, with `coeff` in the coefficient ring.
    pub fn monomial(ring: &RingRef, exps: &[u32], coeff: &RingElem) -> Result<RingElem> {
        RingElem::from_terms(ring, [(exps.to_vec(), coeff.clone())])
    }

    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Result<RingElem>
    where
        I: IntoIterator<Item = (Vec<u32>, RingElem)>,
    {
        let p = poly_ring(ring)?;
        let mut acc = RingElem::zero(ring);
        for (m, c) in terms {
            if m.len() != p.nvars() {
                return Err(Error::OutOfRange(format!(
                    "exponent vector of length {} for {} variables",
                    m.len(),
                    p.nvars()
                )));
            }
            let c = c.coerce(&p.base)?;
            if c.is_zero() {
                continue;
            }
            let mut t = BTreeMap::new();
            t.insert(m, c.value().clone());
            acc = acc + RingElem::from_parts(ring.clone(), Value::Poly(Poly { terms: t }));
        }
        Ok(acc)
    }

    /// Terms in decreasing lexicographic order. Elements of a quotient ring
    /// report the terms of their canonical representative.
    pub fn terms(&self) -> Result<Vec<(Vec<u32>, RingElem)>> {
        let base = match &**self.ring() {
            Ring::Polynomial(p) => p.base.clone(),
            Ring::Quotient(q) => q.coefficients().clone(),
            _ => return Err(Error::NotPolynomial(self.ring().to_string())),
        };
        Ok(self
            .value()
            .as_poly()
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (m.clone(), RingElem::from_parts(base.clone(), c.clone())))
            .collect())
    }

    /// Canonical representative of a quotient-ring element in `B[T]`.
    pub fn lift(&self) -> Result<RingElem> {
        match &**self.ring() {
            Ring::Quotient(q) => Ok(RingElem::from_parts(q.base.clone(), self.value().clone())),
            _ => Err(Error::InvalidRing(format!(
                "{} is not a quotient ring",
                self.ring()
            ))),
        }
    }

    pub fn num_terms(&self) -> usize {
        match self.value() {
            Value::Poly(p) => p.terms.len(),
            _ => usize::from(!self.is_zero()),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        match self.value() {
            Value::Poly(p) => p.terms.keys().map(|m| m.iter().sum()).max(),
            _ => (!self.is_zero()).then_some(0),
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(Vec<u32>, RingElem)> {
        self.terms().ok()?.into_iter().next()
    }

    pub fn is_constant(&self) -> bool {
        match self.value() {
            Value::Poly(p) => p.is_constant(),
            _ => true,
        }
    }

    /// Renames variable `i` to variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<RingElem> {
        let p = poly_ring(self.ring())?;
        let n = p.nvars();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&j| j >= n || core::mem::replace(&mut seen[j], true))
        {
            return Err(Error::OutOfRange(format!(
                "{perm:?} is not a permutation of {n} variables"
            )));
        }
        let terms = self
            .value()
            .as_poly()
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = vec![0; n];
                for (i, &e) in m.iter().enumerate() {
                    out[perm[i]] = e;
                }
                (out, c.clone())
            })
            .collect();
        Ok(self.with_value(Value::Poly(Poly { terms })))
    }

    /// Invariance under every permutation of the variables, tested on the
    /// adjacent transpositions that generate the symmetric group.
    pub fn is_symmetric(&self) -> Result<bool> {
        let n = poly_ring(self.ring())?.nvars();
        for i in 0..n.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            if self.permute_vars(&perm)? != *self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact multivariate division; the divisor's leading coefficient must
    /// be a unit.
    pub fn exact_div(&self, divisor: &RingElem) -> Result<RingElem> {
        self.check_same_ring(divisor)?;
        let p = poly_ring(self.ring())?;
        let (lm_d, lc_d) = divisor
            .value()
            .as_poly()
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| Error::NotInvertible("0".into()))?;
        let lc_inv = p.base.inv_v(&lc_d).ok_or_else(|| {
            Error::NotInvertible(RingElem::from_parts(p.base.clone(), lc_d).to_string())
        })?;
        let mut rem = self.value().as_poly().clone();
        let mut quot = Poly::default();
        while let Some((lm, lc)) = rem.terms.iter().next_back() {
            if lm.iter().zip(&lm_d).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let m: Monomial = lm.iter().zip(&lm_d).map(|(a, b)| a - b).collect();
            let c = p.base.mul_v(lc, &lc_inv);
            let mut t = BTreeMap::new();
            t.insert(m, c);
            let term = Value::Poly(Poly { terms: t });
            let step = self.ring().mul_v(&term, divisor.value());
            rem = self.ring().sub_v(&Value::Poly(rem), &step).into_poly();
            quot = self.ring().add_v(&Value::Poly(quot), &term).into_poly();
        }
        Ok(self.with_value(Value::Poly(quot)))
    }

    /// Evaluates at `values[i]` for variable `i`. All values share one
    /// target ring into which the coefficients coerce.
    pub fn evaluate(&self, values: &[RingElem]) -> Result<RingElem> {
        let p = poly_ring(self.ring())?;
        if values.len() != p.nvars() {
            let missing = p.vars.get(values.len()).cloned().unwrap_or_default();
            return Err(Error::MissingAssignment(missing));
        }
        let target = values[0].ring().clone();
        for v in values {
            v.check_ring(&target)?;
        }
        let mut powers: Vec<Vec<RingElem>> = values
            .iter()
            .map(|v| vec![RingElem::one(&target), v.clone()])
            .collect();
        let mut acc = RingElem::zero(&target);
        for (m, c) in self.terms()? {
            let mut t = c.coerce(&target)?;
            for (i, &e) in m.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &values[i];
                    powers[i].push(next);
                }
                t = t * &powers[i][e];
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Evaluates with a name-to-value assignment; every variable must be
    /// assigned.
    pub fn substitute(&self, assignment: &BTreeMap<String, RingElem>) -> Result<RingElem> {
        let p = poly_ring(self.ring())?;
        let values = p
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.evaluate(&values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qring(vars: &[&str]) -> RingRef {
        Ring::polynomial(&Ring::rational(), vars).unwrap()
    }

    #[test]
    fn substitute_sum_of_variables() {
        let r = qring(&["T1", "T2"]);
        let q = Ring::rational();
        let p = RingElem::var(&r, 0).unwrap() + RingElem::var(&r, 1).unwrap();
        let mut a = BTreeMap::new();
        a.insert("T1".to_string(), RingElem::from_int(&q, 1));
        a.insert("T2".to_string(), RingElem::from_int(&q, 2));
        assert_eq!(p.substitute(&a).unwrap(), RingElem::from_int(&q, 3));
    }

    #[test]
    fn substitute_discriminant_shape() {
        let r = qring(&["S1", "S2"]);
        let q = Ring::rational();
        let s1 = RingElem::var(&r, 0).unwrap();
        let s2 = RingElem::var(&r, 1).unwrap();
        let p = s1.square() - s2.scale(4);
        let mut a = BTreeMap::new();
        a.insert("S1".to_string(), RingElem::from_int(&q, 3));
        a.insert("S2".to_string(), RingElem::from_int(&q, 2));
        assert_eq!(p.substitute(&a).unwrap(), RingElem::from_int(&q, 1));
    }

    #[test]
    fn substitute_zero_and_missing() {
        let r = qring(&["x", "y"]);
        let q = Ring::rational();
        let mut a = BTreeMap::new();
        a.insert("x".to_string(), RingElem::from_int(&q, 7));
        a.insert("y".to_string(), RingElem::from_int(&q, -2));
        assert!(RingElem::zero(&r).substitute(&a).unwrap().is_zero());
        a.remove("y");
        assert_eq!(
            RingElem::var(&r, 0).unwrap().substitute(&a),
            Err(Error::MissingAssignment("y".into()))
        );
    }

    #[test]
    fn display_uses_lex_order() {
        let r = qring(&["S1", "S2"]);
        let s1 = RingElem::var(&r, 0).unwrap();
        let s2 = RingElem::var(&r, 1).unwrap();
        assert_eq!((s1.square() - s2.scale(4)).to_string(), "S1^2-4*S2");
        assert_eq!((s2.half() - s1.clone()).to_string(), "-S1+1/2*S2");
        assert_eq!(RingElem::zero(&r).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let r = qring(&["x", "y"]);
        let x = RingElem::var(&r, 0).unwrap();
        let y = RingElem::var(&r, 1).unwrap();
        let d = &x - &y;
        let p = (&x * &x) - (&y * &y);
        assert_eq!(p.exact_div(&d).unwrap(), &x + &y);
        assert_eq!((&p + &x).exact_div(&d), Err(Error::InexactDivision));
    }

    #[test]
    fn permutation_and_symmetry() {
        let r = qring(&["a", "b", "c"]);
        let a = RingElem::var(&r, 0).unwrap();
        let b = RingElem::var(&r, 1).unwrap();
        let c = RingElem::var(&r, 2).unwrap();
        assert_eq!(a.permute_vars(&[2, 0, 1]).unwrap(), c);
        assert!((&a * &b + &b * &c + &a * &c).is_symmetric().unwrap());
        assert!(!(&a * &b).is_symmetric().unwrap());
        assert!(a.permute_vars(&[0, 0, 1]).is_err());
    }
}

//! Canonical payloads and the value-level arithmetic behind [`RingElem`].
//!
//! [`RingElem`]: super::RingElem

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{intmod, univariate, QuotientRing, Ring};
use crate::decision::Decision;

pub(crate) type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Value {
    Rat(BigRational),
    Mod(u64),
    Poly(Poly),
}

/// Sparse polynomial: exponent vector to nonzero coefficient. `BTreeMap`
/// order on exponent vectors is the lexicographic monomial order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Poly {
    pub(crate) terms: BTreeMap<Monomial, Value>,
}

impl Value {
    pub(crate) fn as_poly(&self) -> &Poly {
        match self {
            Value::Poly(p) => p,
            _ => unreachable!("expected a polynomial payload"),
        }
    }

    pub(crate) fn into_poly(self) -> Poly {
        match self {
            Value::Poly(p) => p,
            _ => unreachable!("expected a polynomial payload"),
        }
    }
}

impl Poly {
    pub(crate) fn constant(nvars: usize, c: Value, base: &Ring) -> Poly {
        let mut terms = BTreeMap::new();
        if !base.is_zero_v(&c) {
            terms.insert(vec![0; nvars], c);
        }
        Poly { terms }
    }

    pub(crate) fn constant_term(&self, nvars: usize, base: &Ring) -> Value {
        self.terms
            .get(&vec![0u32; nvars][..])
            .cloned()
            .unwrap_or_else(|| base.zero_v())
    }

    pub(crate) fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }
}

impl Ring {
    pub(crate) fn zero_v(&self) -> Value {
        match self {
            Ring::Rational => Value::Rat(BigRational::zero()),
            Ring::Modular(_) => Value::Mod(0),
            Ring::Polynomial(_) | Ring::Quotient(_) => Value::Poly(Poly::default()),
        }
    }

    pub(crate) fn one_v(&self) -> Value {
        match self {
            Ring::Rational => Value::Rat(BigRational::one()),
            Ring::Modular(_) => Value::Mod(1),
            Ring::Polynomial(p) => Value::Poly(Poly::constant(p.nvars(), p.base.one_v(), &p.base)),
            Ring::Quotient(q) => q.base.one_v(),
        }
    }

    pub(crate) fn bigint_v(&self, n: &BigInt) -> Value {
        match self {
            Ring::Rational => Value::Rat(BigRational::from_integer(n.clone())),
            Ring::Modular(m) => {
                let r = n.mod_floor(&BigInt::from(*m));
                Value::Mod(r.to_u64().expect("residue fits the modulus"))
            }
            Ring::Polynomial(p) => {
                Value::Poly(Poly::constant(p.nvars(), p.base.bigint_v(n), &p.base))
            }
            Ring::Quotient(q) => q.base.bigint_v(n),
        }
    }

    /// Image of a rational number; `None` when its denominator is not a unit.
    pub(crate) fn rational_v(&self, r: &BigRational) -> Option<Value> {
        match self {
            Ring::Rational => Some(Value::Rat(r.clone())),
            Ring::Modular(m) => {
                let num = self.bigint_v(r.numer());
                let Value::Mod(den) = self.bigint_v(r.denom()) else {
                    unreachable!()
                };
                let inv = intmod::inv(den, *m)?;
                let Value::Mod(n) = num else { unreachable!() };
                Some(Value::Mod(intmod::mul(n, inv, *m)))
            }
            Ring::Polynomial(p) => {
                let c = p.base.rational_v(r)?;
                Some(Value::Poly(Poly::constant(p.nvars(), c, &p.base)))
            }
            Ring::Quotient(q) => q.base.rational_v(r),
        }
    }

    pub(crate) fn is_zero_v(&self, x: &Value) -> bool {
        match x {
            Value::Rat(r) => r.is_zero(),
            Value::Mod(v) => *v == 0,
            Value::Poly(p) => p.terms.is_empty(),
        }
    }

    pub(crate) fn add_v(&self, x: &Value, y: &Value) -> Value {
        match (self, x, y) {
            (Ring::Rational, Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Ring::Modular(m), Value::Mod(a), Value::Mod(b)) => Value::Mod(intmod::add(*a, *b, *m)),
            (Ring::Polynomial(p), Value::Poly(a), Value::Poly(b)) => {
                Value::Poly(poly_add(&p.base, a, b))
            }
            (Ring::Quotient(q), _, _) => q.base.add_v(x, y),
            _ => unreachable!("payload does not match ring {self}"),
        }
    }

    pub(crate) fn neg_v(&self, x: &Value) -> Value {
        match (self, x) {
            (Ring::Rational, Value::Rat(a)) => Value::Rat(-a),
            (Ring::Modular(m), Value::Mod(a)) => Value::Mod(intmod::neg(*a, *m)),
            (Ring::Polynomial(p), Value::Poly(a)) => Value::Poly(Poly {
                terms: a
                    .terms
                    .iter()
                    .map(|(m, c)| (m.clone(), p.base.neg_v(c)))
                    .collect(),
            }),
            (Ring::Quotient(q), _) => q.base.neg_v(x),
            _ => unreachable!("payload does not match ring {self}"),
        }
    }

    pub(crate) fn sub_v(&self, x: &Value, y: &Value) -> Value {
        match (self, x, y) {
            (Ring::Rational, Value::Rat(a), Value::Rat(b)) => Value::Rat(a - b),
            (Ring::Modular(m), Value::Mod(a), Value::Mod(b)) => Value::Mod(intmod::sub(*a, *b, *m)),
            _ => self.add_v(x, &self.neg_v(y)),
        }
    }

    pub(crate) fn mul_v(&self, x: &Value, y: &Value) -> Value {
        match (self, x, y) {
            (Ring::Rational, Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Ring::Modular(m), Value::Mod(a), Value::Mod(b)) => Value::Mod(intmod::mul(*a, *b, *m)),
            (Ring::Polynomial(p), Value::Poly(a), Value::Poly(b)) => {
                Value::Poly(poly_mul(&p.base, a, b))
            }
            (Ring::Quotient(q), _, _) => q.reduce(q.base.mul_v(x, y)),
            _ => unreachable!("payload does not match ring {self}"),
        }
    }

    pub(crate) fn pow_v(&self, x: &Value, mut exp: u32) -> Value {
        let mut acc = self.one_v();
        let mut base = x.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_v(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_v(&base, &base);
            }
        }
        acc
    }

    pub(crate) fn two_inv_v(&self) -> Value {
        match self {
            Ring::Rational => Value::Rat(BigRational::new(BigInt::one(), BigInt::from(2))),
            Ring::Modular(m) => Value::Mod((*m).div_ceil(2)),
            Ring::Polynomial(p) => {
                Value::Poly(Poly::constant(p.nvars(), p.base.two_inv_v(), &p.base))
            }
            Ring::Quotient(q) => q.base.two_inv_v(),
        }
    }

    pub(crate) fn half_v(&self, x: &Value) -> Value {
        self.mul_v(x, &self.two_inv_v())
    }

    pub(crate) fn is_unit_v(&self, x: &Value) -> Decision {
        match (self, x) {
            (Ring::Rational, Value::Rat(a)) => Decision::from_bool(!a.is_zero()),
            (Ring::Modular(m), Value::Mod(a)) => Decision::from_bool(intmod::gcd(*a, *m) == 1),
            // a0 + a1 X + ... is a unit iff a0 is a unit and the other
            // coefficients are nilpotent.
            (Ring::Polynomial(p), Value::Poly(a)) => {
                let n = p.nvars();
                let c0 = a.constant_term(n, &p.base);
                let mut verdict = p.base.is_unit_v(&c0);
                for (m, c) in &a.terms {
                    if m.iter().any(|&e| e > 0) {
                        verdict = verdict.and(p.base.is_nilpotent_v(c));
                    }
                }
                verdict
            }
            (Ring::Quotient(q), Value::Poly(a)) => {
                let k = q.coefficients();
                if a.is_constant() {
                    // the extension is free, so constants keep their status
                    return k.is_unit_v(&a.constant_term(1, k));
                }
                if k.is_field() {
                    let (g, _) =
                        univariate::ext_gcd(k, &univariate::to_dense(a, k), &q.dense_modulus());
                    Decision::from_bool(g.len() == 1)
                } else {
                    Decision::Undecided
                }
            }
            _ => unreachable!("payload does not match ring {self}"),
        }
    }

    pub(crate) fn is_nilpotent_v(&self, x: &Value) -> Decision {
        match (self, x) {
            (Ring::Rational, Value::Rat(a)) => Decision::from_bool(a.is_zero()),
            (Ring::Modular(m), Value::Mod(a)) => Decision::from_bool(a % intmod::radical(*m) == 0),
            (Ring::Polynomial(p), Value::Poly(a)) => a
                .terms
                .values()
                .fold(Decision::Yes, |acc, c| acc.and(p.base.is_nilpotent_v(c))),
            (Ring::Quotient(q), Value::Poly(a)) => {
                let k = q.coefficients();
                if a.terms.is_empty() {
                    Decision::Yes
                } else if a.is_constant() {
                    k.is_nilpotent_v(&a.constant_term(1, k))
                } else if k.is_field() {
                    let n = q.degree() as u32;
                    Decision::from_bool(self.is_zero_v(&self.pow_v(x, n)))
                } else {
                    Decision::Undecided
                }
            }
            _ => unreachable!("payload does not match ring {self}"),
        }
    }

    /// Whether `x` is a nonzerodivisor.
    pub(crate) fn is_regular_v(&self, x: &Value) -> Decision {
        match (self, x) {
            (Ring::Rational, Value::Rat(a)) => Decision::from_bool(!a.is_zero()),
            (Ring::Modular(m), Value::Mod(a)) => Decision::from_bool(intmod::gcd(*a, *m) == 1),
            (Ring::Polynomial(p), Value::Poly(a)) => {
                if a.terms.is_empty() {
                    return Decision::No;
                }
                if p.base.is_domain() {
                    return Decision::Yes;
                }
                match &*p.base {
                    // McCoy: f is a zero divisor iff a nonzero constant kills it
                    Ring::Modular(m) => {
                        let g = a.terms.values().fold(*m, |g, c| match c {
                            Value::Mod(v) => intmod::gcd(g, *v),
                            _ => unreachable!(),
                        });
                        Decision::from_bool(g == 1)
                    }
                    _ => Decision::Undecided,
                }
            }
            (Ring::Quotient(q), Value::Poly(a)) => {
                let k = q.coefficients();
                if a.terms.is_empty() {
                    Decision::No
                } else if a.is_constant() {
                    k.is_regular_v(&a.constant_term(1, k))
                } else if k.is_field() {
                    // finite-dimensional algebra: regular iff unit
                    self.is_unit_v(x)
                } else if self.is_unit_v(x).is_yes() {
                    Decision::Yes
                } else {
                    Decision::Undecided
                }
            }
            _ => unreachable!("payload does not match ring {self}"),
        }
    }

    /// Inverse of `x`, or `None` when `x` is not decidably a unit.
    pub(crate) fn inv_v(&self, x: &Value) -> Option<Value> {
        if !self.is_unit_v(x).is_yes() {
            return None;
        }
        match (self, x) {
            (Ring::Rational, Value::Rat(a)) => Some(Value::Rat(a.recip())),
            (Ring::Modular(m), Value::Mod(a)) => intmod::inv(*a, *m).map(Value::Mod),
            (Ring::Polynomial(p), Value::Poly(a)) => {
                // x = c0 (1 + n) with n nilpotent; 1/(1+n) = sum (-n)^k
                let c0 = a.constant_term(p.nvars(), &p.base);
                let c0_inv = Value::Poly(Poly::constant(p.nvars(), p.base.inv_v(&c0)?, &p.base));
                let normalized = self.mul_v(x, &c0_inv);
                let minus_n = self.sub_v(&self.one_v(), &normalized);
                let mut sum = self.one_v();
                let mut power = self.one_v();
                for _ in 0..4096 {
                    power = self.mul_v(&power, &minus_n);
                    if self.is_zero_v(&power) {
                        return Some(self.mul_v(&sum, &c0_inv));
                    }
                    sum = self.add_v(&sum, &power);
                }
                None
            }
            (Ring::Quotient(q), Value::Poly(a)) => {
                let k = q.coefficients();
                if a.is_constant() {
                    let c = k.inv_v(&a.constant_term(1, k))?;
                    return Some(Value::Poly(Poly::constant(1, c, k)));
                }
                let (g, s) =
                    univariate::ext_gcd(k, &univariate::to_dense(a, k), &q.dense_modulus());
                debug_assert_eq!(g.len(), 1);
                let g_inv = k.inv_v(&g[0])?;
                let s: Vec<Value> = s.iter().map(|c| k.mul_v(c, &g_inv)).collect();
                Some(q.reduce(Value::Poly(univariate::from_dense(&s, k))))
            }
            _ => unreachable!("payload does not match ring {self}"),
        }
    }

    pub(crate) fn fmt_value(&self, x: &Value, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_value(x, &mut s)?;
        f.write_str(&s)
    }

    pub(crate) fn write_value(&self, x: &Value, out: &mut String) -> fmt::Result {
        match (self, x) {
            (Ring::Rational, Value::Rat(r)) => write_rational(r, out),
            (Ring::Modular(_), Value::Mod(v)) => write!(out, "{v}"),
            (Ring::Polynomial(p), Value::Poly(a)) => write_poly(&p.base, &p.vars, a, out),
            (Ring::Quotient(q), _) => q.base.write_value(x, out),
            _ => unreachable!("payload does not match ring {self}"),
        }
    }
}

impl QuotientRing {
    pub(crate) fn dense_modulus(&self) -> Vec<Value> {
        univariate::to_dense(&self.modulus, self.coefficients())
    }

    pub(crate) fn reduce(&self, x: Value) -> Value {
        let k = self.coefficients();
        let p = x.into_poly();
        if p.terms
            .keys()
            .next_back()
            .is_none_or(|m| (m[0] as usize) < self.degree())
        {
            return Value::Poly(p);
        }
        let r = univariate::rem_monic(k, univariate::to_dense(&p, k), &self.dense_modulus());
        Value::Poly(univariate::from_dense(&r, k))
    }
}

fn poly_add(base: &Ring, a: &Poly, b: &Poly) -> Poly {
    let (big, small) = if a.terms.len() >= b.terms.len() {
        (a, b)
    } else {
        (b, a)
    };
    let mut terms = big.terms.clone();
    for (m, c) in &small.terms {
        accumulate(base, &mut terms, m.clone(), c);
    }
    Poly { terms }
}

fn accumulate(base: &Ring, terms: &mut BTreeMap<Monomial, Value>, m: Monomial, c: &Value) {
    match terms.entry(m) {
        Entry::Occupied(mut e) => {
            let s = base.add_v(e.get(), c);
            if base.is_zero_v(&s) {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

fn poly_mul(base: &Ring, a: &Poly, b: &Poly) -> Poly {
    let mut terms = BTreeMap::new();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let c = base.mul_v(ca, cb);
            if base.is_zero_v(&c) {
                continue;
            }
            let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            accumulate(base, &mut terms, m, &c);
        }
    }
    Poly { terms }
}

fn write_rational(r: &BigRational, out: &mut String) -> fmt::Result {
    if r.is_integer() {
        write!(out, "{}", r.numer())
    } else {
        write!(out, "{}/{}", r.numer(), r.denom())
    }
}

fn write_monomial(vars: &[String], m: &[u32], out: &mut String) -> fmt::Result {
    let mut first = true;
    for (v, &e) in vars.iter().zip(m) {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(v);
        if e > 1 {
            write!(out, "^{e}")?;
        }
    }
    Ok(())
}

fn write_poly(base: &Ring, vars: &[String], p: &Poly, out: &mut String) -> fmt::Result {
    if p.terms.is_empty() {
        out.push('0');
        return Ok(());
    }
    for (i, (m, c)) in p.terms.iter().rev().enumerate() {
        let constant = m.iter().all(|&e| e == 0);
        let mut term = String::new();
        match (base, c) {
            (Ring::Rational, Value::Rat(r)) => {
                let mag = r.abs();
                if r.is_negative() {
                    term.push('-');
                }
                if constant || !mag.is_one() {
                    write_rational(&mag, &mut term)?;
                    if !constant {
                        term.push('*');
                    }
                }
            }
            (Ring::Modular(_), Value::Mod(v)) => {
                if constant || *v != 1 {
                    write!(term, "{v}")?;
                    if !constant {
                        term.push('*');
                    }
                }
            }
            _ => {
                let mut inner = String::new();
                base.write_value(c, &mut inner)?;
                if constant {
                    term.push_str(&inner);
                } else if inner != "1" {
                    write!(term, "({inner})*")?;
                }
            }
        }
        write_monomial(vars, m, &mut term)?;
        if i > 0 && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    Ok(())
}

//! Dense univariate helpers used by quotient rings.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::value::{Poly, Value};
use super::Ring;

pub(crate) fn to_dense(p: &Poly, k: &Ring) -> Vec<Value> {
    let deg = match p.terms.keys().next_back() {
        Some(m) => m[0] as usize,
        None => return Vec::new(),
    };
    let mut out = vec![k.zero_v(); deg + 1];
    for (m, c) in &p.terms {
        out[m[0] as usize] = c.clone();
    }
    out
}

pub(crate) fn from_dense(coeffs: &[Value], k: &Ring) -> Poly {
    let terms: BTreeMap<_, _> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !k.is_zero_v(c))
        .map(|(i, c)| (vec![i as u32], c.clone()))
        .collect();
    Poly { terms }
}

fn trim(k: &Ring, v: &mut Vec<Value>) {
    while v.last().is_some_and(|c| k.is_zero_v(c)) {
        v.pop();
    }
}

/// Remainder of `f` modulo a monic `g`; works over any coefficient ring.
pub(crate) fn rem_monic(k: &Ring, mut f: Vec<Value>, g: &[Value]) -> Vec<Value> {
    let n = g.len() - 1;
    trim(k, &mut f);
    while f.len() > n {
        let top = f.len() - 1;
        let lead = f[top].clone();
        let shift = top - n;
        for (i, gc) in g.iter().enumerate() {
            let t = k.mul_v(&lead, gc);
            f[shift + i] = k.sub_v(&f[shift + i], &t);
        }
        trim(k, &mut f);
    }
    f
}

/// Quotient and remainder over a field.
fn div_rem_field(k: &Ring, a: &[Value], b: &[Value]) -> (Vec<Value>, Vec<Value>) {
    let mut r = a.to_vec();
    trim(k, &mut r);
    let db = b.len() - 1;
    let lead_inv = k.inv_v(&b[db]).expect("nonzero element of a field");
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![k.zero_v(); r.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let c = k.mul_v(&r[top], &lead_inv);
        let shift = top - db;
        for (i, bc) in b.iter().enumerate() {
            let t = k.mul_v(&c, bc);
            r[shift + i] = k.sub_v(&r[shift + i], &t);
        }
        q[shift] = c;
        trim(k, &mut r);
    }
    trim(k, &mut q);
    (q, r)
}

fn mul_dense(k: &Ring, a: &[Value], b: &[Value]) -> Vec<Value> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero_v(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = k.mul_v(x, y);
            out[i + j] = k.add_v(&out[i + j], &t);
        }
    }
    trim(k, &mut out);
    out
}

fn sub_dense(k: &Ring, a: &[Value], b: &[Value]) -> Vec<Value> {
    let len = a.len().max(b.len());
    let zero = k.zero_v();
    let mut out: Vec<Value> = (0..len)
        .map(|i| k.sub_v(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(k, &mut out);
    out
}

/// Over a field: returns `(r, s)` with `s * f = r (mod g)` and `r` a gcd of
/// `f` and `g`.
pub(crate) fn ext_gcd(k: &Ring, f: &[Value], g: &[Value]) -> (Vec<Value>, Vec<Value>) {
    let (mut r0, mut r1) = (g.to_vec(), div_rem_field(k, f, g).1);
    let (mut s0, mut s1) = (Vec::new(), vec![k.one_v()]);
    while !r1.is_empty() {
        let (q, r) = div_rem_field(k, &r0, &r1);
        let s2 = sub_dense(k, &s0, &mul_dense(k, &q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

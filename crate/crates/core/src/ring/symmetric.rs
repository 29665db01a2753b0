//! Elementary symmetric polynomials and the reduction of symmetric
//! polynomials to polynomials in them.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::{Ring, RingElem, RingRef};
use crate::error::{Error, Result};

/// The `k`-th elementary symmetric polynomial in the variables of `ring`.
pub fn elem_symmetric(ring: &RingRef, k: usize) -> Result<RingElem> {
    let p = ring
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(ring.to_string()))?;
    let n = p.nvars();
    if k > n {
        return Err(Error::OutOfRange(format!("e_{k} needs k <= {n}")));
    }
    let one = RingElem::one(p.base());
    let mut terms = Vec::new();
    // enumerate k-subsets of 0..n in lexicographic order
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut m = vec![0u32; n];
        for &i in &idx {
            m[i] = 1;
        }
        terms.push((m, one.clone()));
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            break;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    RingElem::from_terms(ring, terms)
}

/// Rewrites a symmetric polynomial `p` in `B[T1..Tn]` as a polynomial in
/// `s_ring = B[S1..Sn]`, where `Sk` stands for the `k`-th elementary
/// symmetric polynomial.
pub fn symmetric_reduce(p: &RingElem, s_ring: &RingRef) -> Result<RingElem> {
    symmetric_reduce_with(p, s_ring, &mut || false)
}

/// [`symmetric_reduce`] with cooperative cancellation: `cancel` is polled
/// once per reduction step and aborts with [`Error::Cancelled`].
pub fn symmetric_reduce_with(
    p: &RingElem,
    s_ring: &RingRef,
    cancel: &mut dyn FnMut() -> bool,
) -> Result<RingElem> {
    let t_ring = p.ring().clone();
    let tp = t_ring
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(t_ring.to_string()))?;
    let sp = s_ring
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(s_ring.to_string()))?;
    if sp.nvars() != tp.nvars() || sp.base() != tp.base() {
        return Err(Error::RingMismatch {
            left: t_ring.to_string(),
            right: s_ring.to_string(),
        });
    }
    if !p.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    let n = tp.nvars();
    let elementary: Vec<RingElem> = (1..=n)
        .map(|k| elem_symmetric(&t_ring, k))
        .collect::<Result<_>>()?;
    // powers[k][j] = e_{k+1}^j, grown on demand
    let mut powers: Vec<Vec<RingElem>> = elementary
        .iter()
        .map(|e| vec![RingElem::one(&t_ring), e.clone()])
        .collect();

    let mut rem = p.clone();
    let mut out = Vec::new();
    while let Some((lead, coeff)) = rem.leading_term() {
        if cancel() {
            return Err(Error::Cancelled);
        }
        // the leading exponent of a symmetric polynomial is non-increasing
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let s_exps: Vec<u32> = (0..n)
            .map(|k| lead[k] - lead.get(k + 1).copied().unwrap_or(0))
            .collect();
        let mut prod = RingElem::monomial(&t_ring, &vec![0; n], &coeff)?;
        for (k, &e) in s_exps.iter().enumerate() {
            let e = e as usize;
            while powers[k].len() <= e {
                let next = powers[k].last().unwrap() * &elementary[k];
                powers[k].push(next);
            }
            prod = prod * &powers[k][e];
        }
        rem = rem - prod;
        out.push((s_exps, coeff));
    }
    RingElem::from_terms(s_ring, out)
}

/// `base[S1..Sn]` matching a polynomial ring `base[T1..Tn]`.
pub fn s_ring_for(t_ring: &RingRef) -> Result<RingRef> {
    match &**t_ring {
        Ring::Polynomial(p) => Ring::indexed_polynomial(p.base(), "S", p.nvars()),
        _ => Err(Error::NotPolynomial(t_ring.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn t_ring(n: usize) -> RingRef {
        Ring::indexed_polynomial(&Ring::rational(), "T", n).unwrap()
    }

    #[test]
    fn elementary_examples() {
        let r2 = t_ring(2);
        assert_eq!(elem_symmetric(&r2, 1).unwrap().to_string(), "T1+T2");
        let r3 = t_ring(3);
        assert_eq!(elem_symmetric(&r3, 3).unwrap().to_string(), "T1*T2*T3");
        assert_eq!(
            elem_symmetric(&r3, 2).unwrap().to_string(),
            "T1*T2+T1*T3+T2*T3"
        );
        for n in 1..5 {
            assert!(elem_symmetric(&t_ring(n), 0).unwrap().is_one());
        }
        assert!(elem_symmetric(&r3, 4).is_err());
    }

    #[test]
    fn power_sum_reduces() {
        let r = t_ring(2);
        let t1 = RingElem::var(&r, 0).unwrap();
        let t2 = RingElem::var(&r, 1).unwrap();
        let s = s_ring_for(&r).unwrap();
        let red = symmetric_reduce(&(t1.square() + t2.square()), &s).unwrap();
        assert_eq!(red.to_string(), "S1^2-2*S2");
    }

    #[test]
    fn e2_is_its_own_reduction() {
        let r = t_ring(3);
        let s = s_ring_for(&r).unwrap();
        let red = symmetric_reduce(&elem_symmetric(&r, 2).unwrap(), &s).unwrap();
        assert_eq!(red, RingElem::var(&s, 1).unwrap());
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let r = t_ring(2);
        let s = s_ring_for(&r).unwrap();
        let t1 = RingElem::var(&r, 0).unwrap();
        assert_eq!(symmetric_reduce(&t1, &s), Err(Error::NotSymmetric));
    }

    #[test]
    fn cancellation_aborts() {
        let r = t_ring(3);
        let s = s_ring_for(&r).unwrap();
        let p = (0..3)
            .map(|i| RingElem::var(&r, i).unwrap().pow(4))
            .fold(RingElem::zero(&r), |a, b| a + b);
        let mut calls = 0;
        let res = symmetric_reduce_with(&p, &s, &mut || {
            calls += 1;
            calls > 2
        });
        assert_eq!(res, Err(Error::Cancelled));
    }
}

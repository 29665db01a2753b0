//! The affine chart of the double cover `(P1)^n / A_n -> P_n`: the
//! Vandermonde polynomial, the basis `{1, V}` of `A_n`-invariants over the
//! symmetric ones, and the generic discriminant written in the elementary
//! symmetric functions.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::{elem_symmetric, s_ring_for, symmetric_reduce_with, Ring, RingElem, RingRef};

/// Largest `n` for which group checks enumerate every permutation.
pub const EXHAUSTIVE_PERMUTATION_LIMIT: usize = 5;

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n}, need n >= 2")));
    }
    Ok(())
}

/// `Q[T1..Tn]`.
pub fn t_ring(n: usize) -> Result<RingRef> {
    check_n(n)?;
    Ring::indexed_polynomial(&Ring::rational(), "T", n)
}

/// `prod_{i<j} (Ti - Tj)` in `Q[T1..Tn]`.
pub fn vandermonde(n: usize) -> Result<RingElem> {
    vandermonde_in(&t_ring(n)?)
}

/// The Vandermonde product in the variables of a given polynomial ring.
pub fn vandermonde_in(ring: &RingRef) -> Result<RingElem> {
    let p = ring
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(alloc::string::ToString::to_string(&**ring)))?;
    let n = p.nvars();
    check_n(n)?;
    let vars = (0..n)
        .map(|i| RingElem::var(ring, i))
        .collect::<Result<Vec<_>>>()?;
    let mut v = RingElem::one(ring);
    for i in 0..n {
        for j in i + 1..n {
            v = v * (&vars[i] - &vars[j]);
        }
    }
    Ok(v)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// `+1` or `-1` by counting inversions.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Invariance under the alternating group: every even permutation when
/// `n <= 5`, otherwise the 3-cycles `(1 2 k)` which generate it.
pub fn is_alternating_invariant(p: &RingElem) -> Result<bool> {
    let n = p
        .ring()
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(alloc::string::ToString::to_string(&**p.ring())))?
        .nvars();
    let perms: Vec<Vec<usize>> = if n <= EXHAUSTIVE_PERMUTATION_LIMIT {
        permutations(n)
            .into_iter()
            .filter(|s| permutation_sign(s) == 1)
            .collect()
    } else {
        (2..n)
            .map(|k| {
                let mut s: Vec<usize> = (0..n).collect();
                s[0] = 1;
                s[1] = k;
                s[k] = 0;
                s
            })
            .collect()
    };
    for s in perms {
        if &p.permute_vars(&s)? != p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P = P+ + V Q` with `P+` and `Q` symmetric, both written in `S1..Sn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingDecomposition {
    pub symmetric_part: RingElem,
    pub vandermonde_cofactor: RingElem,
}

impl AlternatingDecomposition {
    /// Substitutes `Sk = ek(T)` and returns `P+ + V Q` in the T-ring.
    pub fn recombine(&self, t_ring: &RingRef) -> Result<RingElem> {
        let n = t_ring
            .as_polynomial()
            .ok_or_else(|| Error::NotPolynomial(alloc::string::ToString::to_string(&**t_ring)))?
            .nvars();
        let e = (1..=n)
            .map(|k| elem_symmetric(t_ring, k))
            .collect::<Result<Vec<_>>>()?;
        let plus = self.symmetric_part.evaluate(&e)?;
        let q = self.vandermonde_cofactor.evaluate(&e)?;
        Ok(plus + vandermonde_in(t_ring)? * q)
    }
}

pub fn alt_decompose(p: &RingElem) -> Result<AlternatingDecomposition> {
    let t_ring = p.ring().clone();
    let v = vandermonde_in(&t_ring)?;
    if !is_alternating_invariant(p)? {
        return Err(Error::NotAlternating);
    }
    let n = t_ring.as_polynomial().expect("checked above").nvars();
    let mut tau: Vec<usize> = (0..n).collect();
    tau.swap(0, 1);
    let tp = p.permute_vars(&tau)?;
    let plus = (p + &tp).half();
    let minus = (p - &tp).half();
    let q = minus.exact_div(&v)?;
    let s_ring = s_ring_for(&t_ring)?;
    let never = &mut || false;
    let out = AlternatingDecomposition {
        symmetric_part: symmetric_reduce_with(&plus, &s_ring, never)?,
        vandermonde_cofactor: symmetric_reduce_with(&q, &s_ring, never)?,
    };
    if &out.recombine(&t_ring)? != p {
        return Err(Error::Inconsistent("P+ + V Q does not recover P".into()));
    }
    Ok(out)
}

/// `V^2` in `S1..Sn`: the discriminant of
/// `T^n - S1 T^(n-1) + ... + (-1)^n Sn`.
pub fn generic_discriminant(n: usize) -> Result<RingElem> {
    generic_discriminant_with(n, &mut || false)
}

/// [`generic_discriminant`] that polls `cancel` and stops with
/// [`Error::Cancelled`].
pub fn generic_discriminant_with(n: usize, cancel: &mut dyn FnMut() -> bool) -> Result<RingElem> {
    let t = t_ring(n)?;
    let v = vandermonde_in(&t)?;
    if cancel() {
        return Err(Error::Cancelled);
    }
    let v2 = v.square();
    symmetric_reduce_with(&v2, &s_ring_for(&t)?, cancel)
}

/// Degree of the line bundle `N = O(1 - n)` on `P_n` carrying the
/// anti-invariant part of the cover.
pub fn anti_invariant_degree(n: usize) -> i64 {
    1 - n as i64
}

/// `(X1 Y2 - Y1 X2)^2 = (X1 Y2 + Y1 X2)^2 - 4 (X1 X2)(Y1 Y2)`, expanded in
/// `Q[X1, Y1, X2, Y2]`.
pub fn p1p1_identity_check() -> bool {
    let r = Ring::polynomial(&Ring::rational(), &["X1", "Y1", "X2", "Y2"]).expect("valid ring");
    let v = |i| RingElem::var(&r, i).expect("in range");
    let (x1, y1, x2, y2) = (v(0), v(1), v(2), v(3));
    let lhs = (&x1 * &y2 - &y1 * &x2).square();
    let rhs = (&x1 * &y2 + &y1 * &x2).square() - (&x1 * &x2 * (&y1 * &y2)).scale(4);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(2).unwrap().to_string(), "T1-T2");
        let v3 = vandermonde(3).unwrap();
        assert_eq!(v3.num_terms(), 6);
        assert_eq!(v3.total_degree(), Some(3));
        assert_eq!(v3.permute_vars(&[1, 0, 2]).unwrap(), -v3.clone());
        assert!(vandermonde(1).is_err());
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(
            permutations(4)
                .iter()
                .filter(|p| permutation_sign(p) == 1)
                .count(),
            12
        );
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }

    #[test]
    fn decomposition_examples() {
        let t = t_ring(2).unwrap();
        let t1 = RingElem::var(&t, 0).unwrap();
        let d = alt_decompose(&t1).unwrap();
        assert_eq!(d.symmetric_part.to_string(), "1/2*S1");
        assert_eq!(d.vandermonde_cofactor.to_string(), "1/2");

        let t3 = t_ring(3).unwrap();
        let v = vandermonde_in(&t3).unwrap();
        let d = alt_decompose(&v).unwrap();
        assert!(d.symmetric_part.is_zero());
        assert!(d.vandermonde_cofactor.is_one());

        let e2 = elem_symmetric(&t3, 2).unwrap();
        let d = alt_decompose(&e2).unwrap();
        assert_eq!(d.symmetric_part.to_string(), "S2");
        assert!(d.vandermonde_cofactor.is_zero());

        let x = RingElem::var(&t3, 0).unwrap();
        assert_eq!(alt_decompose(&x), Err(Error::NotAlternating));
    }

    #[test]
    fn discriminant_small_cases() {
        assert_eq!(generic_discriminant(2).unwrap().to_string(), "S1^2-4*S2");
        let d3 = generic_discriminant(3).unwrap();
        let s = d3.ring().clone();
        let q = |c| RingElem::from_int(&Ring::rational(), c);
        let expected = RingElem::from_terms(
            &s,
            [
                (alloc::vec![2, 2, 0], q(1)),
                (alloc::vec![0, 3, 0], q(-4)),
                (alloc::vec![3, 0, 1], q(-4)),
                (alloc::vec![1, 1, 1], q(18)),
                (alloc::vec![0, 0, 2], q(-27)),
            ],
        )
        .unwrap();
        assert_eq!(d3, expected);
        // roots 0, 1, 2: S = (3, 2, 0), prod (ti - tj)^2 = 1 * 4 * 1
        assert_eq!(d3.evaluate(&[q(3), q(2), q(0)]).unwrap(), q(4));
        assert!(generic_discriminant(1).is_err());
    }

    #[test]
    fn discriminant_cancels() {
        let mut polls = 0;
        let r = generic_discriminant_with(4, &mut || {
            polls += 1;
            polls > 3
        });
        assert_eq!(r, Err(Error::Cancelled));
    }

    #[test]
    fn p1p1() {
        assert!(p1p1_identity_check());
        assert_eq!(anti_invariant_degree(3), -2);
    }
}

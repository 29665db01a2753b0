use alloc::vec::Vec;

use super::value::Value;
use super::{intmod, univariate, Ring, RingElem};
use crate::decision::Decision;

/// Whether `gens` generate the unit ideal.
///
/// Decided over `Q`, `Z/m`, univariate polynomial rings and quotients over
/// a field; for multivariate rings only the evaluation at the origin can
/// refute it.
pub fn generates_unit_ideal(gens: &[RingElem]) -> Decision {
    let Some(first) = gens.first() else {
        return Decision::No;
    };
    if gens.iter().any(|g| g.is_unit().is_yes()) {
        return Decision::Yes;
    }
    let ring = first.ring();
    match &**ring {
        Ring::Rational => Decision::No,
        Ring::Modular(m) => {
            let g = gens
                .iter()
                .fold(*m, |acc, x| intmod::gcd(acc, x.as_residue().unwrap()));
            Decision::from_bool(g == 1)
        }
        Ring::Polynomial(p) => {
            let n = p.nvars();
            let constants: Vec<RingElem> = gens
                .iter()
                .map(|g| {
                    RingElem::from_parts(
                        p.base.clone(),
                        g.value().as_poly().constant_term(n, &p.base),
                    )
                })
                .collect();
            if generates_unit_ideal(&constants).is_no() {
                return Decision::No;
            }
            if n == 1 && p.base.is_field() {
                let k = &p.base;
                let mut acc: Option<Vec<Value>> = None;
                for g in gens {
                    let dense = univariate::to_dense(g.value().as_poly(), k);
                    if dense.is_empty() {
                        continue;
                    }
                    acc = Some(match acc {
                        None => dense,
                        Some(prev) => univariate::ext_gcd(k, &dense, &prev).0,
                    });
                }
                return Decision::from_bool(acc.is_some_and(|g| g.len() == 1));
            }
            Decision::Undecided
        }
        Ring::Quotient(q) => {
            let k = q.coefficients();
            if !k.is_field() {
                return Decision::Undecided;
            }
            let mut acc = q.dense_modulus();
            for g in gens {
                let dense = univariate::to_dense(g.value().as_poly(), k);
                if !dense.is_empty() {
                    acc = univariate::ext_gcd(k, &dense, &acc).0;
                }
            }
            Decision::from_bool(acc.len() == 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn modular_gcd() {
        let z15 = Ring::modular(15).unwrap();
        let e = |v| RingElem::from_int(&z15, v);
        assert_eq!(generates_unit_ideal(&[e(3), e(5), e(0)]), Decision::Yes);
        assert_eq!(generates_unit_ideal(&[e(3), e(6), e(9)]), Decision::No);
    }

    #[test]
    fn univariate_over_field() {
        let r = Ring::polynomial(&Ring::rational(), &["x"]).unwrap();
        let x = RingElem::var(&r, 0).unwrap();
        let one = RingElem::one(&r);
        assert_eq!(generates_unit_ideal(&[x.clone(), &x + &one]), Decision::Yes);
        assert_eq!(
            generates_unit_ideal(&[x.square(), &x * &(&x + &one)]),
            Decision::No
        );
        let r2 = Ring::polynomial(&Ring::rational(), &["x", "y"]).unwrap();
        let x2 = RingElem::var(&r2, 0).unwrap();
        let y2 = RingElem::var(&r2, 1).unwrap();
        assert_eq!(
            generates_unit_ideal(&[x2.clone(), y2.clone()]),
            Decision::No
        );
        let shifted = &x2 + RingElem::one(&r2);
        assert_eq!(generates_unit_ideal(&[shifted, y2]), Decision::Undecided);
    }
}

//! Degree-two elements of `Sym^2 E` versus symmetric forms on `Sym^2 E`,
//! the generator of the kernel of `Sym^2 E -> Sym^2_A E`, and the chart
//! computation identifying the conic `a X^2 + 2b XY + c Y^2 = 0` in `P(E)`
//! with the spectrum of `R[T]/(T^2 - (b^2 - ac))`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binforms::{BinaryForm, ModuleAction};
use crate::error::{Error, Result};
use crate::linalg::{rank_over_field, Mat2, Sym2, Vec2};
use crate::quadalg::QuadraticAlgebra;
use crate::ring::{generates_unit_ideal, RingElem, RingRef};

/// How the middle coefficient is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyConvention {
    /// `a e1^2 + b e1 e2 + c e2^2`.
    GammaB,
    /// `a X^2 + 2b XY + c Y^2`.
    Gamma2B,
}

impl PolyConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            PolyConvention::GammaB => "gamma_b",
            PolyConvention::Gamma2B => "gamma2b",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPolynomial {
    a: RingElem,
    b: RingElem,
    c: RingElem,
    convention: PolyConvention,
}

impl QuadraticPolynomial {
    pub fn new(a: RingElem, b: RingElem, c: RingElem, convention: PolyConvention) -> Result<Self> {
        a.check_same_ring(&b)?;
        a.check_same_ring(&c)?;
        Ok(QuadraticPolynomial {
            a,
            b,
            c,
            convention,
        })
    }

    pub fn from_ints(ring: &RingRef, a: i64, b: i64, c: i64, convention: PolyConvention) -> Self {
        QuadraticPolynomial {
            a: RingElem::from_int(ring, a),
            b: RingElem::from_int(ring, b),
            c: RingElem::from_int(ring, c),
            convention,
        }
    }

    pub fn ring(&self) -> &RingRef {
        self.a.ring()
    }

    pub fn convention(&self) -> PolyConvention {
        self.convention
    }

    pub fn coefficients(&self) -> [RingElem; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// Same polynomial read with a plain middle coefficient.
    pub fn to_gamma_b(&self) -> QuadraticPolynomial {
        match self.convention {
            PolyConvention::GammaB => self.clone(),
            PolyConvention::Gamma2B => QuadraticPolynomial {
                a: self.a.clone(),
                b: self.b.scale(2),
                c: self.c.clone(),
                convention: PolyConvention::GammaB,
            },
        }
    }

    /// Same polynomial with middle coefficient `2b`; needs 2 to be a unit,
    /// which it always is here.
    pub fn to_gamma_2b(&self) -> QuadraticPolynomial {
        match self.convention {
            PolyConvention::Gamma2B => self.clone(),
            PolyConvention::GammaB => QuadraticPolynomial {
                a: self.a.clone(),
                b: self.b.half(),
                c: self.c.clone(),
                convention: PolyConvention::Gamma2B,
            },
        }
    }

    /// Coordinates on `e1^2, e1 e2, e2^2`.
    pub fn as_sym2(&self) -> Sym2 {
        let g = self.to_gamma_b();
        Sym2 {
            e11: g.a,
            e12: g.b,
            e22: g.c,
        }
    }
}

impl fmt::Display for QuadraticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.convention {
            PolyConvention::GammaB => {
                write!(f, "({})e1^2 + ({})e1e2 + ({})e2^2", self.a, self.b, self.c)
            }
            PolyConvention::Gamma2B => {
                write!(f, "({})X^2 + 2({})XY + ({})Y^2", self.a, self.b, self.c)
            }
        }
    }
}

/// `(x1 ^ x3)(x2 ^ x4) + (x1 ^ x4)(x2 ^ x3)`, the pairing on
/// `Sym^2 E (x) Sym^2 E` with values in `(Lambda^2 E)^2`.
pub fn sym2_pairing(x1: &Vec2, x2: &Vec2, x3: &Vec2, x4: &Vec2) -> RingElem {
    x1.wedge(x3) * x2.wedge(x4) + x1.wedge(x4) * x2.wedge(x3)
}

/// Matrix of the pairing on the basis `e1^2, e1 e2, e2^2`; it equals
/// `[[0, 0, 2], [0, -1, 0], [2, 0, 0]]`.
pub fn duality_matrix(ring: &RingRef) -> [[RingElem; 3]; 3] {
    let e1 = Vec2::e1(ring);
    let e2 = Vec2::e2(ring);
    let basis = [(&e1, &e1), (&e1, &e2), (&e2, &e2)];
    core::array::from_fn(|s| {
        core::array::from_fn(|t| sym2_pairing(basis[s].0, basis[s].1, basis[t].0, basis[t].1))
    })
}

pub fn det3(m: &[[RingElem; 3]; 3]) -> RingElem {
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    &m[0][0] * &minor(1, 2, 1, 2) - &m[0][1] * &minor(1, 2, 0, 2) + &m[0][2] * &minor(1, 2, 0, 1)
}

pub fn mul3(x: &[[RingElem; 3]; 3], y: &[[RingElem; 3]; 3]) -> [[RingElem; 3]; 3] {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]) + &x[i][2] * &y[2][j]
        })
    })
}

/// The form `phi = pairing(gamma, -)`, i.e. `(2c, -b, 2a)` for
/// `gamma = a e1^2 + b e1e2 + c e2^2`.
pub fn dual_form(g: &QuadraticPolynomial) -> BinaryForm {
    let d = duality_matrix(g.ring());
    let v = g.as_sym2().to_array();
    let phi = |j: usize| &(&v[0] * &d[0][j]) + &(&v[1] * &d[1][j]) + &v[2] * &d[2][j];
    BinaryForm::new(phi(0), phi(1), phi(2)).expect("coefficients share a ring")
}

/// `alpha(e1) = b/2 e1 + c e2`, `alpha(e2) = -a e1 - b/2 e2` for
/// `gamma = a e1^2 + b e1e2 + c e2^2`.
pub fn alpha_from_polynomial(g: &QuadraticPolynomial) -> ModuleAction {
    let QuadraticPolynomial { a, b, c, .. } = g.to_gamma_b();
    let m = Mat2::new([[b.half(), -&a], [c, -b.half()]]).expect("coefficients share a ring");
    ModuleAction::from_matrix(m).expect("trace-zero matrix squares to -det")
}

/// `e1.alpha(e2) - alpha(e1).e2` in `Sym^2 E`, checked to equal `-gamma`.
pub fn kernel_generator(g: &QuadraticPolynomial) -> Result<Sym2> {
    let ring = g.ring();
    let action = alpha_from_polynomial(g);
    let e1 = Vec2::e1(ring);
    let e2 = Vec2::e2(ring);
    let k = e1
        .sym_product(&action.apply(&e2))
        .sub(&action.apply(&e1).sym_product(&e2));
    if k != g.as_sym2().neg() {
        return Err(Error::Inconsistent(alloc::format!(
            "kernel generator {:?} is not -gamma",
            k.to_array()
        )));
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjSpecReport {
    /// `R[T]/(T^2 - (b^2 - ac))`, `T` acting by `action`.
    pub algebra: QuadraticAlgebra,
    /// `[[b, -a], [c, -b]]`.
    pub action: Mat2,
    pub generator: Vec2,
    /// `G(z) = c x^2 - 2b xy + a y^2 = det[z | Tz]`.
    pub generator_value: RingElem,
    /// The relation `a e1(x)e1 + 2b e1(x)e2 + c e2(x)e2` lies in the span of
    /// `T e_i (x) e_j - e_i (x) T e_j`.
    pub relation_in_span: bool,
    pub relation_rank: usize,
}

fn tensor(u: &Vec2, w: &Vec2) -> [RingElem; 4] {
    [&u.x * &w.x, &u.x * &w.y, &u.y * &w.x, &u.y * &w.y]
}

/// Chart check that `Proj(R[X,Y]/(gamma))` is `Spec(R[T]/(T^2 - (b^2-ac)))`
/// for `gamma = a X^2 + 2b XY + c Y^2` over a field.
pub fn proj_spec_check(g: &QuadraticPolynomial) -> Result<ProjSpecReport> {
    let ring = g.ring().clone();
    if !ring.is_field() {
        return Err(Error::NotAField(alloc::string::ToString::to_string(&*ring)));
    }
    let QuadraticPolynomial { a, b, c, .. } = g.to_gamma_2b();
    if generates_unit_ideal(&[a.clone(), b.clone(), c.clone()]).is_no() {
        return Err(Error::NotPrimitive);
    }
    let action = Mat2::new([[b.clone(), -&a], [c.clone(), -&b]])?;
    // same matrix as the one built from the dual form
    if dual_form(g).alpha_matrix().matrix() != &action {
        return Err(Error::Inconsistent(
            "action differs from the dual-form route".into(),
        ));
    }
    let disc = b.square() - &a * &c;
    if action.mul(&action) != Mat2::scalar(&disc) {
        return Err(Error::Inconsistent("T does not square to b^2 - ac".into()));
    }

    let candidates = [
        Vec2::e1(&ring),
        Vec2::e2(&ring),
        Vec2::from_ints(&ring, 1, 1),
    ];
    let (generator, generator_value) = candidates
        .into_iter()
        .map(|z| {
            let v = z.wedge(&action.apply(&z));
            (z, v)
        })
        .find(|(_, v)| v.is_unit().is_yes())
        .ok_or(Error::NoUnitGenerator)?;

    let basis = [Vec2::e1(&ring), Vec2::e2(&ring)];
    let mut rows: Vec<Vec<RingElem>> = Vec::new();
    for ei in &basis {
        for ej in &basis {
            let lhs = tensor(&action.apply(ei), ej);
            let rhs = tensor(ei, &action.apply(ej));
            rows.push((0..4).map(|k| &lhs[k] - &rhs[k]).collect());
        }
    }
    let relation_rank = rank_over_field(&rows)?;
    let zero = RingElem::zero(&ring);
    rows.push(vec![a.clone(), b.scale(2), zero, c.clone()]);
    let relation_in_span = rank_over_field(&rows)? == relation_rank;

    Ok(ProjSpecReport {
        algebra: QuadraticAlgebra::new(disc),
        action,
        generator,
        generator_value,
        relation_in_span,
        relation_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use PolyConvention::*;

    #[test]
    fn duality_matrix_as_stated() {
        let r = Ring::rational();
        let d = duality_matrix(&r);
        let expect =
            [[0, 0, 2], [0, -1, 0], [2, 0, 0]].map(|row| row.map(|v| RingElem::from_int(&r, v)));
        assert_eq!(d, expect);
        let leibniz = [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
            ([1, 0, 2], -1),
        ]
        .iter()
        .map(|(p, s)| (&(&d[0][p[0]] * &d[1][p[1]]) * &d[2][p[2]]).scale(*s))
        .fold(RingElem::zero(&r), |acc, t| acc + t);
        assert_eq!(det3(&d), leibniz);
        assert_eq!(det3(&d), RingElem::from_int(&r, 4));
        let sq = mul3(&d, &d);
        let diag =
            [[4, 0, 0], [0, 1, 0], [0, 0, 4]].map(|row| row.map(|v| RingElem::from_int(&r, v)));
        assert_eq!(sq, diag);
    }

    #[test]
    fn pairing_is_invariant_under_swaps() {
        let r = Ring::rational();
        let v = |x, y| Vec2::from_ints(&r, x, y);
        let (x1, x2, x3, x4) = (v(1, 2), v(-3, 5), v(7, 1), v(2, -2));
        let p = sym2_pairing(&x1, &x2, &x3, &x4);
        assert_eq!(p, sym2_pairing(&x2, &x1, &x3, &x4));
        assert_eq!(p, sym2_pairing(&x1, &x2, &x4, &x3));
    }

    #[test]
    fn dual_form_examples() {
        let r = Ring::rational();
        assert_eq!(
            dual_form(&QuadraticPolynomial::from_ints(&r, 1, 0, 1, GammaB)),
            BinaryForm::from_ints(&r, 2, 0, 2)
        );
        assert_eq!(
            dual_form(&QuadraticPolynomial::from_ints(&r, 0, 0, 0, GammaB)),
            BinaryForm::from_ints(&r, 0, 0, 0)
        );
        assert_eq!(
            dual_form(&QuadraticPolynomial::from_ints(&r, 1, 0, -1, Gamma2B)),
            BinaryForm::from_ints(&r, -2, 0, 2)
        );
        assert_eq!(
            dual_form(&QuadraticPolynomial::from_ints(&r, 3, 5, 7, GammaB)),
            BinaryForm::from_ints(&r, 14, -5, 6)
        );
    }

    #[test]
    fn alpha_examples() {
        let r = Ring::rational();
        let m = alpha_from_polynomial(&QuadraticPolynomial::from_ints(&r, 1, 0, 1, GammaB));
        assert_eq!(m.matrix(), &Mat2::from_ints(&r, [[0, -1], [1, 0]]));
        let z = alpha_from_polynomial(&QuadraticPolynomial::from_ints(&r, 0, 0, 0, GammaB));
        assert_eq!(z.matrix(), &Mat2::zero(&r));
        let h = alpha_from_polynomial(&QuadraticPolynomial::from_ints(&r, 1, 0, -1, Gamma2B));
        assert_eq!(h.matrix(), &Mat2::from_ints(&r, [[0, -1], [-1, 0]]));
        assert!(h.d().is_one());
    }

    #[test]
    fn kernel_examples() {
        let r = Ring::rational();
        let k = kernel_generator(&QuadraticPolynomial::from_ints(&r, 1, 0, 1, GammaB)).unwrap();
        assert_eq!(k.to_array(), [-1, 0, -1].map(|v| RingElem::from_int(&r, v)));
        let k0 = kernel_generator(&QuadraticPolynomial::from_ints(&r, 0, 0, 0, GammaB)).unwrap();
        assert!(k0.to_array().iter().all(RingElem::is_zero));
    }

    #[test]
    fn proj_spec_examples() {
        let r = Ring::rational();
        let rep = proj_spec_check(&QuadraticPolynomial::from_ints(&r, 1, 0, -1, Gamma2B)).unwrap();
        assert!(rep.algebra.d().is_one());
        assert_eq!(rep.generator, Vec2::e1(&r));
        assert_eq!(rep.generator_value, RingElem::from_int(&r, -1));
        assert!(rep.relation_in_span);

        let rep = proj_spec_check(&QuadraticPolynomial::from_ints(&r, 1, 0, 0, Gamma2B)).unwrap();
        assert!(rep.algebra.d().is_zero());
        assert_eq!(rep.generator, Vec2::e2(&r));
        assert!(rep.generator_value.is_one());
        assert!(rep.relation_in_span);

        let z7 = Ring::modular(7).unwrap();
        let rep = proj_spec_check(&QuadraticPolynomial::from_ints(&z7, 0, 1, 0, Gamma2B)).unwrap();
        assert!(rep.algebra.d().is_one());
        assert!(rep.relation_in_span);

        assert_eq!(
            proj_spec_check(&QuadraticPolynomial::from_ints(&r, 0, 0, 0, Gamma2B)),
            Err(Error::NotPrimitive)
        );
        let z15 = Ring::modular(15).unwrap();
        assert!(matches!(
            proj_spec_check(&QuadraticPolynomial::from_ints(&z15, 1, 0, 1, Gamma2B)),
            Err(Error::NotAField(_))
        ));
    }
}

//! Binary quadratic forms `(a, b, c)` with values in a trivialized line, and
//! the double cover and module structure they define.
//!
//! The triple records the linear map `psi` on `Sym^2 E`:
//! `a = psi(e1^2)`, `b = psi(e1 e2)`, `c = psi(e2^2)`, so that
//! `psi((x e1 + y e2)^2) = a x^2 + 2b xy + c y^2` and the quadratic map is
//! `q = psi(v^2) / 2`.
//!
//! Orientation: `E` is identified with `Hom(E, Lambda^2 E)` through
//! `y -> (x -> x ^ y)`, and `e1 ^ e2` is the positive generator of
//! `Lambda^2 E`. Every sign below depends on that choice.

use alloc::format;
use core::fmt;

use crate::decision::Decision;
use crate::error::{Error, Result};
use crate::linalg::{Mat2, Vec2};
use crate::quadalg::{AlgebraElement, QuadraticAlgebra};
use crate::ring::{generates_unit_ideal, Ring, RingElem, RingRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    a: RingElem,
    b: RingElem,
    c: RingElem,
}

/// Action of `alpha` on `E`: a trace-zero matrix with `M^2 = d.I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    matrix: Mat2,
    d: RingElem,
}

impl ModuleAction {
    pub fn new(matrix: Mat2, d: RingElem) -> Result<Self> {
        d.check_ring(matrix.ring())?;
        if !matrix.trace().is_zero() {
            return Err(Error::InvalidAction(format!(
                "trace of {matrix} is not zero"
            )));
        }
        if matrix.mul(&matrix) != Mat2::scalar(&d) {
            return Err(Error::InvalidAction(format!(
                "{matrix} does not square to {d}"
            )));
        }
        Ok(ModuleAction { matrix, d })
    }

    /// Action with `d = -det(M)` read off the matrix.
    pub fn from_matrix(matrix: Mat2) -> Result<Self> {
        let d = -matrix.det();
        ModuleAction::new(matrix, d)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn d(&self) -> &RingElem {
        &self.d
    }

    pub fn ring(&self) -> &RingRef {
        self.d.ring()
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        self.matrix.apply(v)
    }

    /// Action of a whole algebra element `a + x.alpha`.
    pub fn apply_element(&self, e: &AlgebraElement, v: &Vec2) -> Vec2 {
        v.scale(&e.a).add(&self.apply(v).scale(&e.x))
    }
}

/// The cover attached to a form, in both presentations: `alpha` with
/// `alpha^2 = (b^2 - ac)/4`, and `T = 2 alpha` with `T^2 = b^2 - ac`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringData {
    pub algebra: QuadraticAlgebra,
    pub action: ModuleAction,
    /// `b^2 - ac`.
    pub discriminant: RingElem,
    /// `R[T]/(T^2 - (b^2 - ac))`.
    pub t_algebra: QuadraticAlgebra,
}

impl CoveringData {
    /// `a + x.alpha -> a + (x/2).T`.
    pub fn to_t_presentation(&self, e: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            a: e.a.clone(),
            x: e.x.half(),
        }
    }

    /// `a + y.T -> a + 2y.alpha`.
    pub fn from_t_presentation(&self, e: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            a: e.a.clone(),
            x: e.x.scale(2),
        }
    }

    /// The polynomial `T^2 - (b^2 - ac)` in `R[T]`.
    pub fn presentation_polynomial(&self) -> Result<RingElem> {
        let rt = Ring::polynomial(self.algebra.ring(), &["T"])?;
        let t = RingElem::var(&rt, 0)?;
        Ok(t.square() - self.discriminant.coerce(&rt)?)
    }

    pub fn etale(&self) -> Decision {
        self.algebra.diramation().etale
    }
}

/// A generator `x` of `E` over the cover: `{x, alpha.x}` is an `R`-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibleGenerator {
    pub x: Vec2,
    pub alpha_x: Vec2,
    /// `psi(x.x)`, a unit.
    pub value: RingElem,
    /// `det[x | alpha.x] = psi(x.x)/2`.
    pub det: RingElem,
}

impl BinaryForm {
    pub fn new(a: RingElem, b: RingElem, c: RingElem) -> Result<Self> {
        a.check_same_ring(&b)?;
        a.check_same_ring(&c)?;
        Ok(BinaryForm { a, b, c })
    }

    pub fn from_ints(ring: &RingRef, a: i64, b: i64, c: i64) -> Self {
        BinaryForm {
            a: RingElem::from_int(ring, a),
            b: RingElem::from_int(ring, b),
            c: RingElem::from_int(ring, c),
        }
    }

    pub fn ring(&self) -> &RingRef {
        self.a.ring()
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }

    pub fn b(&self) -> &RingElem {
        &self.b
    }

    pub fn c(&self) -> &RingElem {
        &self.c
    }

    pub fn coefficients(&self) -> [RingElem; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn scale(&self, s: &RingElem) -> BinaryForm {
        BinaryForm {
            a: s * &self.a,
            b: s * &self.b,
            c: s * &self.c,
        }
    }

    /// `psi(v^2) = a x^2 + 2b xy + c y^2`.
    pub fn psi_square(&self, v: &Vec2) -> RingElem {
        &self.a * &v.x.square() + (&self.b * &v.x * &v.y).scale(2) + &self.c * &v.y.square()
    }

    /// `q(v) = psi(v^2) / 2`.
    pub fn eval_quadratic(&self, v: &Vec2) -> RingElem {
        self.psi_square(v).half()
    }

    /// `phi(vw) = q(v + w) - q(v) - q(w)`.
    pub fn polar(&self, v: &Vec2, w: &Vec2) -> RingElem {
        self.eval_quadratic(&v.add(w)) - self.eval_quadratic(v) - self.eval_quadratic(w)
    }

    /// Recovers the triple from a quadratic map given only by its values:
    /// `a = 2q(e1)`, `b = q(e1 + e2) - q(e1) - q(e2)`, `c = 2q(e2)`.
    pub fn polarize<F>(ring: &RingRef, q: F) -> BinaryForm
    where
        F: Fn(&Vec2) -> RingElem,
    {
        let e1 = Vec2::e1(ring);
        let e2 = Vec2::e2(ring);
        let q1 = q(&e1);
        let q2 = q(&e2);
        BinaryForm {
            b: q(&e1.add(&e2)) - &q1 - &q2,
            a: q1.scale(2),
            c: q2.scale(2),
        }
    }

    /// Gram matrix `1/2 [[a, b], [b, c]]`, so that `q(v) = v^T G v`.
    pub fn gram(&self) -> Mat2 {
        Mat2::new([
            [self.a.clone(), self.b.clone()],
            [self.b.clone(), self.c.clone()],
        ])
        .expect("coefficients share a ring")
        .half()
    }

    /// `b^2 - ac`.
    pub fn discriminant(&self) -> RingElem {
        self.b.square() - &self.a * &self.c
    }

    /// Whether `(a, b, c)` is the unit ideal. A witness `(u, v, w)` with
    /// `ua + vb + wc = 1` settles the question in any ring.
    pub fn is_primitive(&self, witness: Option<&[RingElem; 3]>) -> Decision {
        if let Some([u, v, w]) = witness {
            let combo = (|| -> Result<RingElem> {
                u.try_mul(&self.a)?
                    .try_add(&v.try_mul(&self.b)?)?
                    .try_add(&w.try_mul(&self.c)?)
            })();
            if combo.is_ok_and(|c| c.is_one()) {
                return Decision::Yes;
            }
        }
        generates_unit_ideal(&self.coefficients())
    }

    /// `M = 1/2 [[-b, -c], [a, b]]`, `d = (b^2 - ac)/4`, checked against
    /// `e_i ^ M e_j = psi(e_i e_j)/2` on all basis pairs.
    pub fn alpha_matrix(&self) -> ModuleAction {
        let m = Mat2::new([[-&self.b, -&self.c], [self.a.clone(), self.b.clone()]])
            .expect("coefficients share a ring")
            .half();
        let d = self.discriminant().half().half();
        let action = ModuleAction::new(m, d).expect("form matrix has trace 0 and squares to d");
        debug_assert!(self.defining_relation_holds(&action));
        action
    }

    /// `e_i ^ M e_j = psi(e_i e_j)/2` for all `i, j`.
    pub fn defining_relation_holds(&self, action: &ModuleAction) -> bool {
        let ring = self.ring();
        let basis = [Vec2::e1(ring), Vec2::e2(ring)];
        let psi = [[&self.a, &self.b], [&self.b, &self.c]];
        (0..2).all(|i| (0..2).all(|j| basis[i].wedge(&action.apply(&basis[j])) == psi[i][j].half()))
    }

    pub fn covering_from_form(&self) -> Result<CoveringData> {
        let action = self.alpha_matrix();
        let algebra = QuadraticAlgebra::new(action.d().clone());
        let discriminant = self.discriminant();
        let data = CoveringData {
            t_algebra: QuadraticAlgebra::new(discriminant.clone()),
            algebra,
            action,
            discriminant,
        };
        // T = 2 alpha: T^2 = 4d, and the two maps are mutually inverse
        let alpha = data.algebra.alpha();
        let t = data.t_algebra.alpha();
        let image = data.from_t_presentation(&t);
        let iso = data.algebra.mul(&image, &image)?
            == data.from_t_presentation(&data.t_algebra.mul(&t, &t)?)
            && data.to_t_presentation(&image) == t
            && data.from_t_presentation(&data.to_t_presentation(&alpha)) == alpha;
        if !iso {
            return Err(Error::Inconsistent(
                "alpha and T presentations disagree".into(),
            ));
        }
        Ok(data)
    }

    /// Looks for `x` among `e1, e2, e1 + e2` with `psi(x.x)` a unit; such an
    /// `x` generates `E` over the cover.
    pub fn invertible_generator(&self, action: &ModuleAction) -> Result<InvertibleGenerator> {
        action.d().check_ring(self.ring())?;
        if self.is_primitive(None).is_no() {
            return Err(Error::NotPrimitive);
        }
        let ring = self.ring();
        let candidates = [Vec2::e1(ring), Vec2::e2(ring), Vec2::from_ints(ring, 1, 1)];
        for x in candidates {
            let value = self.psi_square(&x);
            if !value.is_unit().is_yes() {
                continue;
            }
            let alpha_x = action.apply(&x);
            let det = x.wedge(&alpha_x);
            if det != value.half() || !det.is_unit().is_yes() {
                return Err(Error::Inconsistent(format!(
                    "det[x | Mx] = {det} but psi(x.x)/2 = {}",
                    value.half()
                )));
            }
            return Ok(InvertibleGenerator {
                x,
                alpha_x,
                value,
                det,
            });
        }
        Err(Error::NoUnitGenerator)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl fmt::Display for ModuleAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (d = {})", self.matrix, self.d)
    }
}

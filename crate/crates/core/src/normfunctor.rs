//! From a cover with an invertible module back to a quadratic form: the
//! norm form, round trips between the two directions, and the transfer of
//! form morphisms to morphisms of covers.

use alloc::format;
use alloc::string::String;

use crate::binforms::{BinaryForm, ModuleAction};
use crate::decision::Decision;
use crate::error::{Error, Result};
use crate::linalg::{Mat2, Vec2};
use crate::quadalg::{AlgebraElement, QuadraticAlgebra};
use crate::ring::{RingElem, RingRef};

/// A quadratic algebra together with the action of `alpha` on `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverModulePair {
    algebra: QuadraticAlgebra,
    action: ModuleAction,
}

impl CoverModulePair {
    pub fn new(algebra: QuadraticAlgebra, action: ModuleAction) -> Result<Self> {
        if action.d() != algebra.d() {
            return Err(Error::InvalidAction(format!(
                "action squares to {} but the algebra has d = {}",
                action.d(),
                algebra.d()
            )));
        }
        Ok(CoverModulePair { algebra, action })
    }

    pub fn from_action(action: ModuleAction) -> Self {
        CoverModulePair {
            algebra: QuadraticAlgebra::new(action.d().clone()),
            action,
        }
    }

    pub fn algebra(&self) -> &QuadraticAlgebra {
        &self.algebra
    }

    pub fn action(&self) -> &ModuleAction {
        &self.action
    }

    pub fn ring(&self) -> &RingRef {
        self.algebra.ring()
    }

    /// Coefficient of `v ^ alpha.v` on `e1 ^ e2`:
    /// `m21 x^2 + (m22 - m11) xy - m12 y^2`.
    pub fn norm_value(&self, v: &Vec2) -> RingElem {
        v.wedge(&self.action.apply(v))
    }

    /// `(2 e1^Me1, 2 e1^Me2, 2 e2^Me2)`.
    pub fn norm_form(&self) -> BinaryForm {
        let ring = self.ring();
        let e1 = Vec2::e1(ring);
        let e2 = Vec2::e2(ring);
        let m = &self.action;
        BinaryForm::new(
            e1.wedge(&m.apply(&e1)).scale(2),
            e1.wedge(&m.apply(&e2)).scale(2),
            e2.wedge(&m.apply(&e2)).scale(2),
        )
        .expect("entries share a ring")
    }

    /// Norm form followed by the form-to-action construction gives back
    /// the original matrix.
    pub fn roundtrip(&self) -> bool {
        self.norm_form().alpha_matrix() == self.action
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripReport {
    pub form: BinaryForm,
    pub recovered: BinaryForm,
    pub action: ModuleAction,
    pub recovered_action: ModuleAction,
    pub pass: bool,
    pub first_mismatch: Option<String>,
}

/// Form -> cover -> norm form, plus the action rebuilt from the recovered
/// form; all comparisons are exact.
pub fn roundtrip_form(f: &BinaryForm) -> Result<RoundtripReport> {
    let cov = f.covering_from_form()?;
    let pair = CoverModulePair::new(cov.algebra, cov.action)?;
    let recovered = pair.norm_form();
    let recovered_action = recovered.alpha_matrix();

    let mut first_mismatch = None;
    for (name, x, y) in [
        ("a", f.a(), recovered.a()),
        ("b", f.b(), recovered.b()),
        ("c", f.c(), recovered.c()),
    ] {
        if x != y {
            first_mismatch = Some(format!("{name}: expected {x}, got {y}"));
            break;
        }
    }
    if first_mismatch.is_none() {
        if let Some((i, j, x, y)) = pair
            .action()
            .matrix()
            .first_difference(recovered_action.matrix())
        {
            first_mismatch = Some(format!("M[{i}][{j}]: expected {x}, got {y}"));
        } else if recovered_action.d() != pair.action().d() {
            first_mismatch = Some(format!(
                "d: expected {}, got {}",
                pair.action().d(),
                recovered_action.d()
            ));
        }
    }
    Ok(RoundtripReport {
        form: f.clone(),
        recovered,
        action: pair.action,
        recovered_action,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// An injective `theta: E -> E'` with `q = q' o theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMorphism {
    theta: Mat2,
    source: BinaryForm,
    target: BinaryForm,
}

impl FormMorphism {
    pub fn new(theta: Mat2, source: BinaryForm, target: BinaryForm) -> Result<Self> {
        source.a().check_ring(theta.ring())?;
        target.a().check_ring(theta.ring())?;
        let pulled = theta.transpose().mul(&target.gram()).mul(&theta);
        if pulled != source.gram() {
            return Err(Error::InvalidMorphism(format!(
                "target pulled back along theta is {pulled}, not the source Gram matrix {}",
                source.gram()
            )));
        }
        if theta.det().is_regular() == Decision::No {
            return Err(Error::InvalidMorphism(format!(
                "det(theta) = {} is a zero divisor; theta is not injective",
                theta.det()
            )));
        }
        Ok(FormMorphism {
            theta,
            source,
            target,
        })
    }

    /// The morphism whose source is the pullback of `target` along `theta`.
    pub fn pullback(theta: Mat2, target: BinaryForm) -> Result<Self> {
        let g = theta.transpose().mul(&target.gram()).mul(&theta);
        let source = BinaryForm::new(
            g.get(0, 0).scale(2),
            g.get(0, 1).scale(2),
            g.get(1, 1).scale(2),
        )?;
        FormMorphism::new(theta, source, target)
    }

    pub fn theta(&self) -> &Mat2 {
        &self.theta
    }

    pub fn source(&self) -> &BinaryForm {
        &self.source
    }

    pub fn target(&self) -> &BinaryForm {
        &self.target
    }

    /// `next o self`.
    pub fn then(&self, next: &FormMorphism) -> Result<FormMorphism> {
        if self.target != next.source {
            return Err(Error::InvalidMorphism(
                "morphisms are not composable".into(),
            ));
        }
        FormMorphism::new(
            next.theta.mul(&self.theta),
            self.source.clone(),
            next.target.clone(),
        )
    }
}

/// The morphism of covers induced by a form morphism: on `N` it is
/// multiplication by `det(theta)` in the bases `alpha, alpha'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismTransfer {
    pub psi_scalar: RingElem,
    pub source_algebra: QuadraticAlgebra,
    pub target_algebra: QuadraticAlgebra,
}

impl MorphismTransfer {
    /// `a + x.alpha -> a + (x det theta).alpha'`.
    pub fn apply(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        self.target_algebra
            .element(e.a.clone(), &e.x * &self.psi_scalar)
    }
}

/// Checks `theta.M = det(theta).M'.theta` and `d = det(theta)^2.d'`.
pub fn transfer_morphism(m: &FormMorphism) -> Result<MorphismTransfer> {
    let det = m.theta.det();
    let src = m.source.alpha_matrix();
    let tgt = m.target.alpha_matrix();
    let lhs = m.theta.mul(src.matrix());
    let rhs = tgt.matrix().mul(&m.theta).scale(&det);
    if let Some((i, j, x, y)) = lhs.first_difference(&rhs) {
        return Err(Error::Inconsistent(format!(
            "action square fails at [{i}][{j}]: {x} vs {y}"
        )));
    }
    if *src.d() != det.square() * tgt.d() {
        return Err(Error::Inconsistent(format!(
            "d = {} but det^2 d' = {}",
            src.d(),
            det.square() * tgt.d()
        )));
    }
    Ok(MorphismTransfer {
        psi_scalar: det,
        source_algebra: QuadraticAlgebra::new(src.d().clone()),
        target_algebra: QuadraticAlgebra::new(tgt.d().clone()),
    })
}

/// `v ^ Mw = w ^ Mv` for trace-zero `M`.
pub fn skew_symmetry_check(m: &Mat2, v: &Vec2, w: &Vec2) -> Result<bool> {
    if !m.trace().is_zero() {
        return Err(Error::NotTraceZero);
    }
    v.x.check_ring(m.ring())?;
    w.x.check_ring(m.ring())?;
    Ok(v.wedge(&m.apply(w)) == w.wedge(&m.apply(v)))
}

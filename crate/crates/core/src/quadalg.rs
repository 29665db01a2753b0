//! Quadratic algebras `A = R + R.alpha` with `alpha^2 = d`.
//!
//! This is a double cover in a chart where the line `N` is trivialized by
//! `alpha`; the multiplication `N (x) N -> R` is multiplication by `d`.
//! Besides arithmetic (trace, norm, conjugation) the module covers the
//! branch ideal, the module of differentials, standard covers and their
//! sections, pinching along a divisor `t = 0`, and the quadratic base
//! change that identifies two algebras whose `d` differ by a unit.

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use num_traits::Signed;

use crate::decision::Decision;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem, RingRef};

/// Largest modulus for which squareness is decided by exhaustive search.
pub const SQUARE_SEARCH_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    d: RingElem,
}

/// `a + x.alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub a: RingElem,
    pub x: RingElem,
}

impl AlgebraElement {
    pub fn new(a: RingElem, x: RingElem) -> Result<Self> {
        a.check_same_ring(&x)?;
        Ok(AlgebraElement { a, x })
    }

    pub fn ring(&self) -> &RingRef {
        self.a.ring()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            a: &self.a + &other.a,
            x: &self.x + &other.x,
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            a: &self.a - &other.a,
            x: &self.x - &other.x,
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*alpha", self.a, self.x)
    }
}

/// Trace, norm and conjugate of one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharData {
    pub trace: RingElem,
    pub norm: RingElem,
    pub conj: AlgebraElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diramation {
    /// Generator of the image ideal of the multiplication map.
    pub generator: RingElem,
    pub etale: Decision,
}

/// `Omega^1` of `R[T]/(T^2 - d)` over `R`, presented on the `R`-basis
/// `dT, T.dT`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differentials {
    /// Relations `f'(T).dT` and `T.f'(T).dT` in coordinates on `dT, T.dT`.
    pub relations: [[RingElem; 2]; 2],
    /// `Omega^1 = R/(f0) (+) R/(f1)`.
    pub invariant_factors: [RingElem; 2],
    pub annihilator: RingElem,
    /// `Omega^1 = 0`, i.e. the cover is étale.
    pub vanishes: Decision,
    /// `Omega^1` is free of rank one (the annihilator is zero).
    pub free_rank_one: bool,
}

impl QuadraticAlgebra {
    pub fn new(d: RingElem) -> Self {
        QuadraticAlgebra { d }
    }

    pub fn ring(&self) -> &RingRef {
        self.d.ring()
    }

    /// `alpha^2`.
    pub fn d(&self) -> &RingElem {
        &self.d
    }

    pub fn element(&self, a: RingElem, x: RingElem) -> Result<AlgebraElement> {
        a.check_ring(self.ring())?;
        x.check_ring(self.ring())?;
        Ok(AlgebraElement { a, x })
    }

    pub fn from_base(&self, a: RingElem) -> Result<AlgebraElement> {
        let zero = RingElem::zero(self.ring());
        self.element(a, zero)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement {
            a: RingElem::one(self.ring()),
            x: RingElem::zero(self.ring()),
        }
    }

    pub fn alpha(&self) -> AlgebraElement {
        AlgebraElement {
            a: RingElem::zero(self.ring()),
            x: RingElem::one(self.ring()),
        }
    }

    fn check(&self, u: &AlgebraElement) -> Result<()> {
        u.a.check_ring(self.ring())?;
        u.x.check_ring(self.ring())
    }

    /// `(a + x.alpha)(b + y.alpha) = (ab + xy.d) + (ay + bx).alpha`.
    pub fn mul(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul_unchecked(u, v))
    }

    fn mul_unchecked(&self, u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            a: &u.a * &v.a + &u.x * &v.x * &self.d,
            x: &u.a * &v.x + &v.a * &u.x,
        }
    }

    pub fn trace(&self, u: &AlgebraElement) -> RingElem {
        u.a.scale(2)
    }

    pub fn norm(&self, u: &AlgebraElement) -> RingElem {
        u.a.square() - u.x.square() * &self.d
    }

    /// The involution `a + x.alpha -> a - x.alpha`.
    pub fn conj(&self, u: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            a: u.a.clone(),
            x: -&u.x,
        }
    }

    pub fn char_data(&self, u: &AlgebraElement) -> Result<CharData> {
        self.check(u)?;
        Ok(CharData {
            trace: self.trace(u),
            norm: self.norm(u),
            conj: self.conj(u),
        })
    }

    /// `mu(x.alpha (x) y.alpha)` recovered from squares only:
    /// `1/2 (mu((x+y)^2) - mu(x^2) - mu(y^2))`.
    pub fn polarized_product(&self, x: &RingElem, y: &RingElem) -> RingElem {
        let mu_sq = |t: &RingElem| t.square() * &self.d;
        (mu_sq(&(x + y)) - mu_sq(x) - mu_sq(y)).half()
    }

    /// The branch ideal is `(d)`; the cover is étale exactly when `d` is a
    /// unit.
    pub fn diramation(&self) -> Diramation {
        Diramation {
            generator: self.d.clone(),
            etale: self.d.is_unit(),
        }
    }

    /// Presents `Omega^1 = A.dT / (f'(T) A.dT)` for `f = T^2 - d` as an
    /// `R`-module, reduces the presentation and returns the annihilator.
    pub fn differentials_annihilator(&self) -> Result<Differentials> {
        let ring = self.ring();
        // f'(T) = 2T, which is 2.alpha in A
        let fprime = self.element(RingElem::zero(ring), RingElem::from_int(ring, 2))?;
        let rel0 = fprime.clone();
        let rel1 = self.mul_unchecked(&self.alpha(), &fprime);
        let relations = [
            [rel0.a.clone(), rel0.x.clone()],
            [rel1.a.clone(), rel1.x.clone()],
        ];

        // a unit pivot splits off a trivial summand; the other entry
        // (normalized by the pivot's inverse) generates the annihilator
        let pivot = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .find(|&(i, j)| relations[i][j].is_unit().is_yes())
            .ok_or_else(|| Error::Inconsistent("2 is not a unit".into()))?;
        let (pi, pj) = pivot;
        let (oi, oj) = (1 - pi, 1 - pj);
        let pivot_inv = relations[pi][pj].inv()?;
        let eliminated =
            &relations[oi][oj] - &(&relations[oi][pj] * &pivot_inv * &relations[pi][oj]);
        let annihilator = &eliminated * &pivot_inv;

        // d kills both generators: d.dT = 1/2 rel1 and d.(T dT) = d/2 rel0
        let kills_dt = rel1.a.half() == self.d && rel1.x.half().is_zero();
        let kills_tdt = (&self.d.half() * &rel0.a).is_zero() && &self.d.half() * &rel0.x == self.d;
        if !(kills_dt && kills_tdt) || annihilator != self.d {
            return Err(Error::Inconsistent(format!(
                "differentials presentation does not reduce to R/({})",
                self.d
            )));
        }
        Ok(Differentials {
            relations,
            invariant_factors: [RingElem::one(ring), annihilator.clone()],
            vanishes: annihilator.is_unit(),
            free_rank_one: annihilator.is_zero(),
            annihilator,
        })
    }

    /// Accepts `w` iff `w^2 = d`; the section is then `alpha -> w`.
    pub fn section_witness_check(&self, w: &RingElem) -> Result<Section> {
        w.check_ring(self.ring())?;
        if w.square() != self.d {
            return Err(Error::NotASection {
                w: w.to_string(),
                d: self.d.to_string(),
            });
        }
        Ok(Section {
            algebra: self.clone(),
            w: w.clone(),
        })
    }

    /// Decides whether the cover is standard (`d` a square), returning a
    /// witness when one is found. Decided over `Q` and over `Z/m` for
    /// `m <= SQUARE_SEARCH_LIMIT`; undecided elsewhere.
    pub fn standard_witness(&self) -> (Decision, Option<RingElem>) {
        match square_root(&self.d) {
            Some(Some(w)) => (Decision::Yes, Some(w)),
            Some(None) => (Decision::No, None),
            None => (Decision::Undecided, None),
        }
    }

    /// The subalgebra `R + t.N` with basis `t.alpha`, i.e. `d -> t^2 d`.
    pub fn pinch(&self, t: &RingElem) -> Result<Pinch> {
        t.check_ring(self.ring())?;
        let regularity = t.is_regular();
        if regularity.is_no() {
            return Err(Error::ZeroDivisor(t.to_string()));
        }
        let pinched = Pinch {
            algebra: QuadraticAlgebra::new(t.square() * &self.d),
            original: self.clone(),
            t: t.clone(),
            regularity,
        };
        // the inclusion respects alpha^2 and is therefore multiplicative
        let gen = pinched.algebra.alpha();
        let lhs = pinched.include(&pinched.algebra.mul_unchecked(&gen, &gen))?;
        let img = pinched.include(&gen)?;
        if lhs != self.mul_unchecked(&img, &img) {
            return Err(Error::Inconsistent(
                "pinch inclusion is not multiplicative".into(),
            ));
        }
        Ok(pinched)
    }

    /// Same algebra over a larger ring.
    pub fn base_change(&self, target: &RingRef) -> Result<QuadraticAlgebra> {
        Ok(QuadraticAlgebra::new(self.d.coerce(target)?))
    }
}

impl fmt::Display for QuadraticAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[alpha]/(alpha^2 - ({}))", self.ring(), self.d)
    }
}

/// Square root in rings where squareness is decidable. `None`: undecided;
/// `Some(None)`: not a square.
fn square_root(d: &RingElem) -> Option<Option<RingElem>> {
    let ring = d.ring();
    match &**ring {
        Ring::Rational => {
            let r = d.as_rational().unwrap();
            if r.is_negative() {
                return Some(None);
            }
            let (n, m) = (r.numer().sqrt(), r.denom().sqrt());
            if &(&n * &n) == r.numer() && &(&m * &m) == r.denom() {
                Some(Some(
                    RingElem::from_rational(ring, &num_rational::BigRational::new(n, m)).ok()?,
                ))
            } else {
                Some(None)
            }
        }
        Ring::Modular(m) if *m <= SQUARE_SEARCH_LIMIT => {
            let target = d.as_residue().unwrap();
            Some(
                (0..*m)
                    .find(|w| w * w % m == target)
                    .map(|w| RingElem::from_int(ring, w as i64)),
            )
        }
        _ => None,
    }
}

/// A ring section `A -> R`, `a + x.alpha -> a + x.w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub algebra: QuadraticAlgebra,
    pub w: RingElem,
}

impl Section {
    pub fn apply(&self, e: &AlgebraElement) -> RingElem {
        &e.a + &(&e.x * &self.w)
    }

    /// A cover with a section is standard with `u = w`.
    pub fn as_standard(&self) -> StandardCover {
        standard_cover(&self.w)
    }
}

/// `R[T]/(T^2 - u^2)` with its map to `R x R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardCover {
    pub algebra: QuadraticAlgebra,
    pub u: RingElem,
}

pub fn standard_cover(u: &RingElem) -> StandardCover {
    StandardCover {
        algebra: QuadraticAlgebra::new(u.square()),
        u: u.clone(),
    }
}

impl StandardCover {
    /// `a + x.alpha -> (a - xu, a + xu)`.
    pub fn embed(&self, e: &AlgebraElement) -> (RingElem, RingElem) {
        let xu = &e.x * &self.u;
        (&e.a - &xu, &e.a + &xu)
    }

    /// The embedding is onto `R x R` iff `u` is a unit.
    pub fn is_split_etale(&self) -> Decision {
        self.u.is_unit()
    }

    /// Inverse of [`embed`](Self::embed) when `u` is a unit.
    pub fn embed_inverse(&self, s: &RingElem, t: &RingElem) -> Result<AlgebraElement> {
        let u_inv = self.u.inv()?;
        self.algebra.element((s + t).half(), (t - s).half() * u_inv)
    }
}

/// Pinched algebra with its inclusion into the original one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pinch {
    pub algebra: QuadraticAlgebra,
    pub original: QuadraticAlgebra,
    pub t: RingElem,
    /// `Undecided` means regularity of `t` was trusted, not checked.
    pub regularity: Decision,
}

impl Pinch {
    /// `a + x.(t alpha') -> a + (xt).alpha'`.
    pub fn include(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        self.original.element(e.a.clone(), &e.x * &self.t)
    }
}

/// Two algebras made isomorphic over `R' = R[U]/(U^2 - t)` by
/// `alpha1 -> U.alpha2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub ring: RingRef,
    /// Class of `U` in `R'`.
    pub u: RingElem,
    pub t: RingElem,
    pub source: QuadraticAlgebra,
    pub target: QuadraticAlgebra,
}

impl Splitting {
    pub fn forward(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        self.target.element(e.a.clone(), &e.x * &self.u)
    }

    /// `alpha2 -> U^{-1} alpha1 = (U / t) alpha1`.
    pub fn backward(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        let u_inv = self.u.inv()?;
        self.source.element(e.a.clone(), &e.x * &u_inv)
    }
}

/// Given a unit `t` with `t.d2 = d1`, builds `R' = R[U]/(U^2 - t)` and the
/// isomorphism `A1 (x) R' = A2 (x) R'`.
pub fn splitting_base_change(
    a1: &QuadraticAlgebra,
    a2: &QuadraticAlgebra,
    t: &RingElem,
) -> Result<Splitting> {
    let ring = a1.ring();
    a2.d.check_ring(ring)?;
    t.check_ring(ring)?;
    match t.is_unit() {
        Decision::Yes => {}
        Decision::No => return Err(Error::NotInvertible(t.to_string())),
        Decision::Undecided => return Err(Error::UndecidedUnit(t.to_string())),
    }
    if t * &a2.d != a1.d {
        return Err(Error::InvalidMorphism(format!(
            "t.d2 = {} differs from d1 = {}",
            t * &a2.d,
            a1.d
        )));
    }
    let ru = Ring::polynomial(ring, &["U"])?;
    let u_poly = RingElem::var(&ru, 0)?;
    let extended = Ring::quotient(&(u_poly.square() - t.coerce(&ru)?))?;
    let u = u_poly.coerce(&extended)?;
    let split = Splitting {
        ring: extended.clone(),
        u,
        t: t.clone(),
        source: a1.base_change(&extended)?,
        target: a2.base_change(&extended)?,
    };
    let img = split.forward(&split.source.alpha())?;
    let alpha1_sq = split.forward(
        &split
            .source
            .mul_unchecked(&split.source.alpha(), &split.source.alpha()),
    )?;
    let ok = split.target.mul_unchecked(&img, &img) == alpha1_sq
        && split.backward(&img)? == split.source.alpha()
        && split.forward(&split.backward(&split.target.alpha())?)? == split.target.alpha();
    if !ok {
        return Err(Error::Inconsistent(
            "splitting map is not an isomorphism".into(),
        ));
    }
    Ok(split)
}

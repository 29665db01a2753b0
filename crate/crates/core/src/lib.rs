//! Exact arithmetic for binary quadratic forms, quadratic algebras and the
//! double covers they describe.
//!
//! Everything here works over a small tower of exact commutative rings in
//! which 2 is invertible: the rationals, `Z/m` for odd `m`, multivariate
//! polynomial rings over those, and quotients of univariate polynomial rings
//! by a monic modulus. All computations happen in a trivialized chart: the
//! rank-two module `E` has basis `e1, e2`, the line `N` has basis `alpha`, and
//! a quadratic algebra is the single scalar `d = alpha^2`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod binforms;
pub mod decision;
pub mod error;
pub mod linalg;
pub mod normfunctor;
pub mod polyduality;
pub mod quadalg;
pub mod ring;
pub mod symcover;

pub use binforms::{BinaryForm, CoveringData, InvertibleGenerator, ModuleAction};
pub use decision::Decision;
pub use error::{Error, Result};
pub use linalg::{Mat2, Sym2, Vec2};
pub use normfunctor::{CoverModulePair, FormMorphism, MorphismTransfer, RoundtripReport};
pub use polyduality::{PolyConvention, ProjSpecReport, QuadraticPolynomial};
pub use quadalg::{AlgebraElement, QuadraticAlgebra};

pub use ring::{Ring, RingElem, RingRef};

//! The invariant suite behind `verify-identities`: one named check per
//! identity, each on seeded random or exhaustive inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use quadcover_core::normfunctor::{roundtrip_form, skew_symmetry_check, transfer_morphism};
use quadcover_core::polyduality::{
    alpha_from_polynomial, det3, dual_form, duality_matrix, kernel_generator, mul3, proj_spec_check,
};
use quadcover_core::quadalg::standard_cover;
use quadcover_core::ring::{elem_symmetric, s_ring_for};
use quadcover_core::symcover::{
    alt_decompose, generic_discriminant, p1p1_identity_check, permutation_sign, permutations,
    t_ring, vandermonde,
};
use quadcover_core::{
    BinaryForm, CoverModulePair, FormMorphism, Mat2, PolyConvention, QuadraticAlgebra,
    QuadraticPolynomial, Ring, RingElem, RingRef, Vec2,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Identity {
    pub fn to_json(&self) -> Value {
        json!({"name": self.name, "pass": self.pass, "detail": self.detail})
    }
}

pub fn random_elem(rng: &mut ChaCha8Rng, ring: &RingRef) -> RingElem {
    match &**ring {
        Ring::Modular(m) => RingElem::from_bigint(ring, &rng.random_range(0..*m).into()),
        _ => RingElem::from_ratio(ring, rng.random_range(-60..=60), rng.random_range(1..=9))
            .expect("nonzero denominator"),
    }
}

pub fn random_form(rng: &mut ChaCha8Rng, ring: &RingRef) -> BinaryForm {
    BinaryForm::new(
        random_elem(rng, ring),
        random_elem(rng, ring),
        random_elem(rng, ring),
    )
    .expect("one ring")
}

fn generic_ring(names: &[&str]) -> (RingRef, Vec<RingElem>) {
    let r = Ring::polynomial(&Ring::rational(), names).expect("valid names");
    let v = (0..names.len())
        .map(|i| RingElem::var(&r, i).expect("in range"))
        .collect();
    (r, v)
}

fn check(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> Identity {
    match f() {
        Ok(detail) => Identity {
            name,
            pass: true,
            detail,
        },
        Err(detail) => Identity {
            name,
            pass: false,
            detail,
        },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs every identity; `max_n` bounds the symmetric groups enumerated.
pub fn run_all(seed: u64, max_n: usize) -> Vec<Identity> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = Ring::rational();
    let z97 = Ring::modular(97).expect("odd modulus");
    let mut out = Vec::new();

    out.push(check("roundtrip", || {
        for ring in [&q, &z97] {
            for _ in 0..50 {
                let f = random_form(&mut rng, ring);
                let rep = roundtrip_form(&f).map_err(|e| e.to_string())?;
                ensure(rep.pass, || format!("{f:?}: {:?}", rep.first_mismatch))?;
            }
        }
        Ok("100 random forms over Q and Z/97".into())
    }));

    out.push(check("norm_value_is_q", || {
        let (_, v) = generic_ring(&["a", "b", "c", "x", "y"]);
        let f =
            BinaryForm::new(v[0].clone(), v[1].clone(), v[2].clone()).map_err(|e| e.to_string())?;
        let pair = CoverModulePair::from_action(f.alpha_matrix());
        let z = Vec2 {
            x: v[3].clone(),
            y: v[4].clone(),
        };
        let q =
            (&v[0] * &v[3].square() + (&v[1] * &v[3] * &v[4]).scale(2) + &v[2] * &v[4].square())
                .half();
        ensure(pair.norm_value(&z) == q, || "symbolic mismatch".into())?;
        Ok("generic a, b, c, x, y".into())
    }));

    out.push(check("determinant_law", || {
        let z5 = Ring::modular(5).expect("odd modulus");
        for (a, b, c) in (0..125).map(|i| (i / 25, (i / 5) % 5, i % 5)) {
            let act = BinaryForm::from_ints(&z5, a, b, c).alpha_matrix();
            ensure(act.d() == &-act.matrix().det(), || format!("({a},{b},{c})"))?;
        }
        Ok("125 forms over Z/5".into())
    }));

    out.push(check("skew_symmetry", || {
        let (_, v) = generic_ring(&["p", "q", "r", "x", "y", "u", "w"]);
        let m = Mat2::new([[v[0].clone(), v[1].clone()], [v[2].clone(), -&v[0]]])
            .map_err(|e| e.to_string())?;
        let ok = skew_symmetry_check(
            &m,
            &Vec2 {
                x: v[3].clone(),
                y: v[4].clone(),
            },
            &Vec2 {
                x: v[5].clone(),
                y: v[6].clone(),
            },
        );
        ensure(ok == Ok(true), || "generic trace-zero matrix".into())?;
        Ok("generic trace-zero matrix".into())
    }));

    out.push(check("duality_matrix", || {
        let d = duality_matrix(&q);
        let expected =
            [[0, 0, 2], [0, -1, 0], [2, 0, 0]].map(|r| r.map(|x| RingElem::from_int(&q, x)));
        let diag = [[4, 0, 0], [0, 1, 0], [0, 0, 4]].map(|r| r.map(|x| RingElem::from_int(&q, x)));
        ensure(d == expected, || "matrix differs".into())?;
        ensure(mul3(&d, &d) == diag, || "square is not diag(4,1,4)".into())?;
        let det = det3(&d);
        ensure(det.is_unit().is_yes(), || {
            format!("determinant {det} is not a unit")
        })?;
        Ok(format!("determinant {det}"))
    }));

    out.push(check("duality_routes_agree", || {
        for _ in 0..50 {
            let [a, b, c] = [0; 3].map(|_| random_elem(&mut rng, &q));
            let g = QuadraticPolynomial::new(a, b, c, PolyConvention::GammaB)
                .map_err(|e| e.to_string())?;
            let (x, y) = (alpha_from_polynomial(&g), dual_form(&g).alpha_matrix());
            ensure(x.matrix() == y.matrix(), || format!("{g}"))?;
        }
        Ok("50 random polynomials".into())
    }));

    out.push(check("kernel_generator", || {
        let (_, v) = generic_ring(&["a", "b", "c"]);
        let g = QuadraticPolynomial::new(
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            PolyConvention::GammaB,
        )
        .map_err(|e| e.to_string())?;
        kernel_generator(&g).map_err(|e| e.to_string())?;
        Ok("generic coefficients".into())
    }));

    out.push(check("proj_spec", || {
        let z3 = Ring::modular(3).expect("odd modulus");
        for i in 1..27 {
            let g = QuadraticPolynomial::from_ints(
                &z3,
                i / 9,
                (i / 3) % 3,
                i % 3,
                PolyConvention::Gamma2B,
            );
            let rep = proj_spec_check(&g).map_err(|e| e.to_string())?;
            ensure(rep.relation_in_span, || format!("{g}"))?;
        }
        Ok("all nonzero triples over Z/3".into())
    }));

    out.push(check("discriminant_small", || {
        let d2 = generic_discriminant(2).map_err(|e| e.to_string())?;
        ensure(d2.to_string() == "S1^2-4*S2", || format!("n=2 gave {d2}"))?;
        let d3 = generic_discriminant(3).map_err(|e| e.to_string())?;
        let t = [0, 1, 2].map(|x| RingElem::from_int(&q, x));
        let tr = t_ring(3).map_err(|e| e.to_string())?;
        let s: Vec<RingElem> = (1..=3)
            .map(|k| elem_symmetric(&tr, k).and_then(|e| e.evaluate(&t)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let v = d3.evaluate(&s).map_err(|e| e.to_string())?;
        ensure(v == RingElem::from_int(&q, 4), || {
            format!("n=3 at roots 0,1,2 gave {v}")
        })?;
        Ok("n = 2, 3".into())
    }));

    out.push(check("vandermonde_sign", || {
        let top = max_n.clamp(2, 4);
        for n in 2..=top {
            let v = vandermonde(n).map_err(|e| e.to_string())?;
            for s in permutations(n) {
                let moved = v.permute_vars(&s).map_err(|e| e.to_string())?;
                ensure(moved == v.scale(permutation_sign(&s)), || {
                    format!("n={n}, {s:?}")
                })?;
            }
        }
        Ok(format!("all permutations, n <= {top}"))
    }));

    out.push(check("one_v_basis", || {
        let n = max_n.clamp(2, 3);
        let tr = t_ring(n).map_err(|e| e.to_string())?;
        let sr = s_ring_for(&tr).map_err(|e| e.to_string())?;
        let e: Vec<RingElem> = (1..=n)
            .map(|k| elem_symmetric(&tr, k))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for _ in 0..10 {
            let mut sym = || {
                let terms: Vec<(Vec<u32>, RingElem)> = (0..3)
                    .map(|_| {
                        let mut m = vec![0u32; n];
                        m[0] = rng.random_range(0..3);
                        m[1] = rng.random_range(0..2);
                        (m, RingElem::from_int(&q, rng.random_range(-5..=5)))
                    })
                    .collect();
                RingElem::from_terms(&sr, terms)
            };
            let (a, b) = (
                sym().map_err(|e| e.to_string())?,
                sym().map_err(|e| e.to_string())?,
            );
            let p = a.evaluate(&e).map_err(|e| e.to_string())?
                + vandermonde(n).map_err(|e| e.to_string())?
                    * b.evaluate(&e).map_err(|e| e.to_string())?;
            let d = alt_decompose(&p).map_err(|e| e.to_string())?;
            ensure(d.symmetric_part == a && d.vandermonde_cofactor == b, || {
                format!("A = {a}, B = {b}")
            })?;
        }
        Ok(format!("10 random pairs, n = {n}"))
    }));

    out.push(check("p1p1_identity", || {
        ensure(p1p1_identity_check(), || "expansion differs".into())?;
        Ok("symbolic".into())
    }));

    out.push(check("standard_embedding", || {
        for _ in 0..30 {
            let cover = standard_cover(&random_elem(&mut rng, &q));
            let alg = &cover.algebra;
            let x = alg
                .element(random_elem(&mut rng, &q), random_elem(&mut rng, &q))
                .map_err(|e| e.to_string())?;
            let y = alg
                .element(random_elem(&mut rng, &q), random_elem(&mut rng, &q))
                .map_err(|e| e.to_string())?;
            let (x1, x2) = cover.embed(&x);
            let (y1, y2) = cover.embed(&y);
            let xy = alg.mul(&x, &y).map_err(|e| e.to_string())?;
            ensure(cover.embed(&xy) == (&x1 * &y1, &x2 * &y2), || {
                format!("u = {}", cover.u)
            })?;
        }
        Ok("30 random pairs".into())
    }));

    out.push(check("differentials_annihilator", || {
        let z15 = Ring::modular(15).expect("odd modulus");
        for d in 0..15 {
            let alg = QuadraticAlgebra::new(RingElem::from_int(&z15, d));
            let diff = alg.differentials_annihilator().map_err(|e| e.to_string())?;
            let ann = diff.annihilator.as_residue().unwrap_or(u64::MAX);
            let gcd = |mut a: u64, mut b: u64| {
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                a
            };
            ensure(gcd(ann, 15) == gcd(d as u64, 15), || {
                format!("d = {d}: annihilator {ann}")
            })?;
        }
        Ok("every d over Z/15".into())
    }));

    out.push(check("morphism_transfer", || {
        let mut done = 0;
        while done < 30 {
            let t = Mat2::from_ints(
                &q,
                [
                    [rng.random_range(-5..=5), rng.random_range(-5..=5)],
                    [rng.random_range(-5..=5), rng.random_range(-5..=5)],
                ],
            );
            if t.det().is_zero() {
                continue;
            }
            let target = random_form(&mut rng, &q);
            let m = FormMorphism::pullback(t.clone(), target.clone()).map_err(|e| e.to_string())?;
            let tr = transfer_morphism(&m).map_err(|e| e.to_string())?;
            let (src, tgt) = (m.source().alpha_matrix(), target.alpha_matrix());
            let det = t.det();
            ensure(
                t.mul(src.matrix()) == tgt.matrix().mul(&t).scale(&det),
                || format!("theta {t}"),
            )?;
            ensure(
                src.d() == &(det.square() * tgt.d()) && tr.psi_scalar == det,
                || format!("theta {t}"),
            )?;
            done += 1;
        }
        Ok("30 random morphisms".into())
    }));

    out
}

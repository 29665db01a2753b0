use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use quadcover_core::normfunctor::roundtrip_form;
use quadcover_core::polyduality::{
    det3, dual_form, duality_matrix, kernel_generator, proj_spec_check,
};
use quadcover_core::quadalg::{splitting_base_change, standard_cover};
use quadcover_core::symcover::{anti_invariant_degree, generic_discriminant};
use quadcover_core::{
    AlgebraElement, CoverModulePair, ModuleAction, PolyConvention, QuadraticAlgebra, Ring, RingElem,
};

use crate::error::CliError;
use crate::formats::{
    algebra_json, as_object, child, decision_json, elem_json, field, form_json, matrix_json,
    parse_algebra, parse_elem, parse_form, parse_matrix, parse_polynomial, parse_usize,
    polynomial_json, ring_json, ring_of, vec_json,
};
use crate::identities::{random_form, run_all};

pub const DEFAULT_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    FormToCover,
    CoverToForm,
    Roundtrip,
    Dual,
    KernelGen,
    ProjCheck,
    Discriminant,
    Standard,
    Pinch,
    Split,
    Differentials,
    VerifyIdentities,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::FormToCover,
        Command::CoverToForm,
        Command::Roundtrip,
        Command::Dual,
        Command::KernelGen,
        Command::ProjCheck,
        Command::Discriminant,
        Command::Standard,
        Command::Pinch,
        Command::Split,
        Command::Differentials,
        Command::VerifyIdentities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::FormToCover => "form-to-cover",
            Command::CoverToForm => "cover-to-form",
            Command::Roundtrip => "roundtrip",
            Command::Dual => "dual",
            Command::KernelGen => "kernel-gen",
            Command::ProjCheck => "proj-check",
            Command::Discriminant => "discriminant",
            Command::Standard => "standard",
            Command::Pinch => "pinch",
            Command::Split => "split",
            Command::Differentials => "differentials",
            Command::VerifyIdentities => "verify-identities",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                CliError::malformed(
                    "unknown_command",
                    format!("unknown command {s:?}"),
                    "command",
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub seed: u64,
    /// Cap on `n` for symmetric-group computations.
    pub max_n: usize,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            seed: 0,
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl Context {
    /// Reads `QUADCOVER_MAX_N`, falling back to the default when unset.
    pub fn from_env(seed: u64) -> Result<Self, CliError> {
        let max_n = match std::env::var("QUADCOVER_MAX_N") {
            Ok(v) => v.trim().parse().map_err(|_| {
                CliError::malformed(
                    "bad_env",
                    format!("QUADCOVER_MAX_N={v:?} is not a number"),
                    "QUADCOVER_MAX_N",
                )
            })?,
            Err(_) => DEFAULT_MAX_N,
        };
        Ok(Context { seed, max_n })
    }
}

/// Dispatches one command. `n` is the `--n` flag of `discriminant`.
pub fn run(
    command: Command,
    payload: Option<&Value>,
    n: Option<usize>,
    ctx: &Context,
) -> Result<Value, CliError> {
    let input = || {
        payload.ok_or_else(|| {
            CliError::malformed(
                "missing_input",
                format!("{command} needs a JSON input"),
                "input",
            )
        })
    };
    match command {
        Command::FormToCover => form_to_cover(input()?),
        Command::CoverToForm => cover_to_form(input()?),
        Command::Roundtrip => roundtrip(input()?, ctx),
        Command::Dual => dual(input()?),
        Command::KernelGen => kernel_gen(input()?),
        Command::ProjCheck => proj_check(input()?),
        Command::Discriminant => {
            let n = match n {
                Some(n) => n,
                None => parse_usize(field(as_object(input()?, "")?, "n", "")?, "/n")?,
            };
            discriminant(n, ctx)
        }
        Command::Standard => standard(input()?),
        Command::Pinch => pinch(input()?),
        Command::Split => split(input()?),
        Command::Differentials => differentials(input()?),
        Command::VerifyIdentities => Ok(verify_identities(ctx)),
    }
}

fn algebra_element_json(e: &AlgebraElement) -> Value {
    json!({"a": elem_json(&e.a), "x": elem_json(&e.x)})
}

fn form_to_cover(v: &Value) -> Result<Value, CliError> {
    let f = parse_form(v, "")?;
    let cover = f.covering_from_form()?;
    let generator = f.invertible_generator(&cover.action).ok().map(|g| {
        json!({"x": vec_json(&g.x), "alpha_x": vec_json(&g.alpha_x), "value": elem_json(&g.value), "det": elem_json(&g.det)})
    });
    Ok(json!({
        "ring": ring_json(f.ring()),
        "matrix": matrix_json(cover.action.matrix()),
        "d": elem_json(cover.algebra.d()),
        "discriminant": elem_json(&cover.discriminant),
        "presentation": cover.presentation_polynomial()?.to_string(),
        "etale": decision_json(cover.etale()),
        "generator": generator,
        "form": form_json(&f),
    }))
}

fn cover_to_form(v: &Value) -> Result<Value, CliError> {
    let obj = as_object(v, "")?;
    let ring = ring_of(obj, "")?;
    let m = parse_matrix(&ring, field(obj, "matrix", "")?, "/matrix")?;
    let action = match obj.get("d") {
        Some(d) => ModuleAction::new(m, parse_elem(&ring, d, "/d")?)?,
        None => ModuleAction::from_matrix(m)?,
    };
    let pair = CoverModulePair::from_action(action);
    let f = pair.norm_form();
    let mut out = form_json(&f);
    out["d"] = elem_json(pair.algebra().d());
    out["roundtrip"] = Value::Bool(pair.roundtrip());
    Ok(out)
}

fn roundtrip(v: &Value, ctx: &Context) -> Result<Value, CliError> {
    let obj = as_object(v, "")?;
    let Some(count) = obj.get("count") else {
        let f = parse_form(v, "")?;
        let rep = roundtrip_form(&f)?;
        return Ok(json!({
            "pass": u32::from(rep.pass),
            "fail": u32::from(!rep.pass),
            "form": form_json(&rep.form),
            "recovered": form_json(&rep.recovered),
            "matrix": matrix_json(rep.action.matrix()),
            "recovered_matrix": matrix_json(rep.recovered_action.matrix()),
            "first_mismatch": rep.first_mismatch,
        }));
    };
    let count = parse_usize(count, "/count")?;
    let ring = ring_of(obj, "")?;
    if !matches!(*ring, Ring::Rational | Ring::Modular(_)) {
        return Err(CliError::domain(
            "unsupported_ring",
            format!("random forms are drawn over Q or Z/m, not {ring}"),
        )
        .at("/ring"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let (mut pass, mut failures) = (0usize, Vec::new());
    for _ in 0..count {
        let f = random_form(&mut rng, &ring);
        let rep = roundtrip_form(&f)?;
        if rep.pass {
            pass += 1;
        } else {
            failures.push(json!({"form": form_json(&f), "first_mismatch": rep.first_mismatch}));
        }
    }
    Ok(json!({
        "ring": ring_json(&ring),
        "seed": ctx.seed,
        "pass": pass,
        "fail": failures.len(),
        "failures": failures,
    }))
}

fn dual(v: &Value) -> Result<Value, CliError> {
    let g = parse_polynomial(v, "", PolyConvention::GammaB)?;
    let d = duality_matrix(g.ring());
    let mut out = form_json(&dual_form(&g));
    out["polynomial"] = polynomial_json(&g);
    out["duality_matrix"] = Value::Array(
        d.iter()
            .map(|r| Value::Array(r.iter().map(elem_json).collect()))
            .collect(),
    );
    out["duality_determinant"] = elem_json(&det3(&d));
    Ok(out)
}

fn kernel_gen(v: &Value) -> Result<Value, CliError> {
    let g = parse_polynomial(v, "", PolyConvention::GammaB)?;
    let k = kernel_generator(&g)?;
    let action = quadcover_core::polyduality::alpha_from_polynomial(&g);
    Ok(json!({
        "polynomial": polynomial_json(&g),
        "kernel": k.to_array().iter().map(elem_json).collect::<Vec<_>>(),
        "basis": ["e1^2", "e1e2", "e2^2"],
        "matrix": matrix_json(action.matrix()),
        "d": elem_json(action.d()),
        "equals_minus_gamma": true,
    }))
}

fn proj_check(v: &Value) -> Result<Value, CliError> {
    let g = parse_polynomial(v, "", PolyConvention::Gamma2B)?;
    let rep = proj_spec_check(&g)?;
    let rt = Ring::polynomial(g.ring(), &["T"])?;
    let t = RingElem::var(&rt, 0)?;
    let presentation = t.square() - rep.algebra.d().coerce(&rt)?;
    Ok(json!({
        "polynomial": polynomial_json(&g),
        "ring": ring_json(g.ring()),
        "d": elem_json(rep.algebra.d()),
        "presentation": presentation.to_string(),
        "action": matrix_json(&rep.action),
        "generator": vec_json(&rep.generator),
        "generator_value": elem_json(&rep.generator_value),
        "relation_rank": rep.relation_rank,
        "relation_in_span": rep.relation_in_span,
    }))
}

fn discriminant(n: usize, ctx: &Context) -> Result<Value, CliError> {
    if n > ctx.max_n {
        return Err(CliError::domain(
            "n_too_large",
            format!("n = {n} exceeds QUADCOVER_MAX_N = {}", ctx.max_n),
        )
        .at("n"));
    }
    let d = generic_discriminant(n)?;
    Ok(json!({
        "n": n,
        "ring": ring_json(d.ring()),
        "discriminant": elem_json(&d),
        "terms": d.num_terms(),
        "anti_invariant_bundle": format!("O({})", anti_invariant_degree(n)),
    }))
}

fn standard(v: &Value) -> Result<Value, CliError> {
    let obj = as_object(v, "")?;
    let ring = ring_of(obj, "")?;
    if let Some(u) = obj.get("u") {
        let cover = standard_cover(&parse_elem(&ring, u, "/u")?);
        return Ok(json!({
            "ring": ring_json(&ring),
            "d": elem_json(cover.algebra.d()),
            "standard": true,
            "witness": elem_json(&cover.u),
            "split_etale": decision_json(cover.is_split_etale()),
        }));
    }
    let alg = parse_algebra(v, "")?;
    if let Some(w) = obj.get("w") {
        let section = alg
            .section_witness_check(&parse_elem(&ring, w, "/w")?)
            .map_err(|e| CliError::from(e).at("/w"))?;
        let cover = section.as_standard();
        return Ok(json!({
            "ring": ring_json(&ring),
            "d": elem_json(alg.d()),
            "standard": true,
            "witness": elem_json(&cover.u),
            "split_etale": decision_json(cover.is_split_etale()),
        }));
    }
    let (decision, witness) = alg.standard_witness();
    Ok(json!({
        "ring": ring_json(&ring),
        "d": elem_json(alg.d()),
        "standard": decision_json(decision),
        "witness": witness.as_ref().map(elem_json),
    }))
}

fn pinch(v: &Value) -> Result<Value, CliError> {
    let obj = as_object(v, "")?;
    let alg = parse_algebra(v, "")?;
    let t = parse_elem(alg.ring(), field(obj, "t", "")?, "/t")?;
    let p = alg.pinch(&t)?;
    Ok(json!({
        "ring": ring_json(alg.ring()),
        "d": elem_json(p.algebra.d()),
        "original_d": elem_json(p.original.d()),
        "t": elem_json(&p.t),
        "t_regular": decision_json(p.regularity),
    }))
}

fn split(v: &Value) -> Result<Value, CliError> {
    let obj = as_object(v, "")?;
    let ring = ring_of(obj, "")?;
    let get = |k: &str| parse_elem(&ring, field(obj, k, "")?, &child("", k));
    let a1 = QuadraticAlgebra::new(get("d1")?);
    let a2 = QuadraticAlgebra::new(get("d2")?);
    let s = splitting_base_change(&a1, &a2, &get("t")?)?;
    let image = s.forward(&s.source.alpha())?;
    Ok(json!({
        "ring": ring_json(&s.ring),
        "u": elem_json(&s.u),
        "t": elem_json(&s.t),
        "source": algebra_json(&s.source),
        "target": algebra_json(&s.target),
        "alpha1_image": algebra_element_json(&image),
        "isomorphism": true,
    }))
}

fn differentials(v: &Value) -> Result<Value, CliError> {
    let alg = parse_algebra(v, "")?;
    let diff = alg.differentials_annihilator()?;
    Ok(json!({
        "ring": ring_json(alg.ring()),
        "d": elem_json(alg.d()),
        "basis": ["dT", "T*dT"],
        "relations": diff.relations.iter().map(|r| r.iter().map(elem_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "invariant_factors": diff.invariant_factors.iter().map(elem_json).collect::<Vec<_>>(),
        "annihilator": elem_json(&diff.annihilator),
        "vanishes": decision_json(diff.vanishes),
        "free_rank_one": diff.free_rank_one,
    }))
}

fn verify_identities(ctx: &Context) -> Value {
    let ids = run_all(ctx.seed, ctx.max_n);
    let pass = ids.iter().filter(|i| i.pass).count();
    json!({
        "seed": ctx.seed,
        "pass": pass,
        "fail": ids.len() - pass,
        "identities": ids.iter().map(|i| i.to_json()).collect::<Vec<_>>(),
    })
}

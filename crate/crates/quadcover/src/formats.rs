//! JSON encodings of rings, elements, forms, algebras and matrices. Every
//! encoder's output is accepted by the matching decoder.

use serde_json::{json, Map, Value};

use quadcover_core::{
    BinaryForm, Decision, Mat2, PolyConvention, QuadraticAlgebra, QuadraticPolynomial, Ring,
    RingElem, RingRef, Vec2,
};

use crate::error::CliError;
use crate::expr::parse_element;

pub type Object = Map<String, Value>;

pub fn child(location: &str, key: impl std::fmt::Display) -> String {
    format!("{location}/{key}")
}

pub fn as_object<'a>(v: &'a Value, location: &str) -> Result<&'a Object, CliError> {
    v.as_object()
        .ok_or_else(|| CliError::malformed("expected_object", "expected a JSON object", location))
}

pub fn field<'a>(obj: &'a Object, key: &str, location: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| {
        CliError::malformed(
            "missing_field",
            format!("missing field {key:?}"),
            child(location, key),
        )
    })
}

pub fn parse_usize(v: &Value, location: &str) -> Result<usize, CliError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| {
            CliError::malformed(
                "expected_integer",
                "expected a non-negative integer",
                location,
            )
        })
}

pub fn parse_ring(v: &Value, location: &str) -> Result<RingRef, CliError> {
    if let Some(s) = v.as_str() {
        return match s {
            "rational" | "Q" => Ok(Ring::rational()),
            _ => match s.strip_prefix("Z/").map(str::parse::<u64>) {
                Some(Ok(m)) => Ring::modular(m).map_err(|e| CliError::from_core_input(e, location)),
                _ => Err(CliError::malformed(
                    "bad_ring",
                    format!("unknown ring {s:?}"),
                    location,
                )),
            },
        };
    }
    let obj = as_object(v, location)?;
    let kind = field(obj, "kind", location)?.as_str().ok_or_else(|| {
        CliError::malformed("bad_ring", "kind must be a string", child(location, "kind"))
    })?;
    let base = |default: bool| -> Result<RingRef, CliError> {
        match obj.get("base") {
            Some(b) => parse_ring(b, &child(location, "base")),
            None if default => Ok(Ring::rational()),
            None => Err(CliError::malformed(
                "missing_field",
                "missing field \"base\"",
                child(location, "base"),
            )),
        }
    };
    match kind {
        "rational" => Ok(Ring::rational()),
        "modular" => {
            let loc = child(location, "m");
            let m = field(obj, "m", location)?.as_u64().ok_or_else(|| {
                CliError::malformed("expected_integer", "m must be a positive integer", &loc)
            })?;
            Ring::modular(m).map_err(|e| CliError::from_core_input(e, loc))
        }
        "polynomial" => {
            let loc = child(location, "vars");
            let vars = field(obj, "vars", location)?
                .as_array()
                .and_then(|a| a.iter().map(|s| s.as_str()).collect::<Option<Vec<_>>>())
                .ok_or_else(|| {
                    CliError::malformed("bad_ring", "vars must be a list of names", &loc)
                })?;
            Ring::polynomial(&base(true)?, &vars).map_err(|e| CliError::from_core_input(e, loc))
        }
        "quotient" => {
            let b = base(false)?;
            let loc = child(location, "modulus");
            let m = parse_element(&b, field_str(obj, "modulus", location)?, &loc)?;
            Ring::quotient(&m).map_err(|e| CliError::from_core_input(e, loc))
        }
        other => Err(CliError::malformed(
            "bad_ring",
            format!("unknown ring kind {other:?}"),
            child(location, "kind"),
        )),
    }
}

fn field_str<'a>(obj: &'a Object, key: &str, location: &str) -> Result<&'a str, CliError> {
    field(obj, key, location)?.as_str().ok_or_else(|| {
        CliError::malformed(
            "expected_string",
            format!("{key} must be a string"),
            child(location, key),
        )
    })
}

pub fn ring_json(ring: &Ring) -> Value {
    match ring {
        Ring::Rational => json!({"kind": "rational"}),
        Ring::Modular(m) => json!({"kind": "modular", "m": m}),
        Ring::Polynomial(p) => {
            json!({"kind": "polynomial", "base": ring_json(p.base()), "vars": p.vars()})
        }
        Ring::Quotient(q) => {
            json!({"kind": "quotient", "base": ring_json(q.base()), "modulus": q.modulus().to_string()})
        }
    }
}

/// The `"ring"` entry of an object, rational when absent.
pub fn ring_of(obj: &Object, location: &str) -> Result<RingRef, CliError> {
    match obj.get("ring") {
        Some(r) => parse_ring(r, &child(location, "ring")),
        None => Ok(Ring::rational()),
    }
}

pub fn parse_elem(ring: &RingRef, v: &Value, location: &str) -> Result<RingElem, CliError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(RingElem::from_int(ring, i))
            } else if let Some(u) = n.as_u64() {
                Ok(RingElem::from_bigint(ring, &u.into()))
            } else {
                Err(CliError::malformed(
                    "expected_exact",
                    "floating-point numbers are not exact; use \"p/q\"",
                    location,
                ))
            }
        }
        Value::String(s) => parse_element(ring, s, location),
        Value::Object(obj) => parse_terms(ring, obj, location),
        _ => Err(CliError::malformed(
            "bad_element",
            "expected a number, an expression string or a term list",
            location,
        )),
    }
}

/// `{"terms": [{"coeff": c, "exp": [e1, ..., en]}, ...]}`.
fn parse_terms(ring: &RingRef, obj: &Object, location: &str) -> Result<RingElem, CliError> {
    let p = ring.as_polynomial().ok_or_else(|| {
        CliError::malformed(
            "bad_element",
            format!("term lists need a polynomial ring, not {ring}"),
            location,
        )
    })?;
    let loc = child(location, "terms");
    let terms = field(obj, "terms", location)?
        .as_array()
        .ok_or_else(|| CliError::malformed("bad_element", "terms must be a list", &loc))?;
    let mut out = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        let tl = child(&loc, i);
        let t = as_object(t, &tl)?;
        let coeff = parse_elem(p.base(), field(t, "coeff", &tl)?, &child(&tl, "coeff"))?;
        let el = child(&tl, "exp");
        let exp = field(t, "exp", &tl)?
            .as_array()
            .and_then(|a| {
                a.iter()
                    .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()))
                    .collect::<Option<Vec<u32>>>()
            })
            .ok_or_else(|| {
                CliError::malformed("bad_element", "exp must be a list of exponents", &el)
            })?;
        if exp.len() != p.nvars() {
            return Err(CliError::malformed(
                "bad_element",
                format!("exp needs {} entries", p.nvars()),
                el,
            ));
        }
        out.push((exp, coeff));
    }
    RingElem::from_terms(ring, out).map_err(|e| CliError::from_core_input(e, loc))
}

pub fn elem_json(e: &RingElem) -> Value {
    Value::String(e.to_string())
}

pub fn decision_json(d: Decision) -> Value {
    match d {
        Decision::Yes => Value::Bool(true),
        Decision::No => Value::Bool(false),
        Decision::Undecided => Value::String("undecided".into()),
    }
}

fn abc(obj: &Object, ring: &RingRef, location: &str) -> Result<[RingElem; 3], CliError> {
    let get = |k: &str| parse_elem(ring, field(obj, k, location)?, &child(location, k));
    Ok([get("a")?, get("b")?, get("c")?])
}

/// `{"ring", "a", "b", "c", "convention": "phi"}`.
pub fn parse_form(v: &Value, location: &str) -> Result<BinaryForm, CliError> {
    let obj = as_object(v, location)?;
    if let Some(c) = obj.get("convention") {
        if c.as_str() != Some("phi") {
            return Err(CliError::malformed(
                "convention_mismatch",
                "binary forms use the phi convention (a = phi(e1^2), b = phi(e1e2), c = phi(e2^2))",
                child(location, "convention"),
            ));
        }
    }
    let ring = ring_of(obj, location)?;
    let [a, b, c] = abc(obj, &ring, location)?;
    BinaryForm::new(a, b, c).map_err(|e| CliError::from_core_input(e, location))
}

pub fn form_json(f: &BinaryForm) -> Value {
    json!({
        "ring": ring_json(f.ring()),
        "a": elem_json(f.a()),
        "b": elem_json(f.b()),
        "c": elem_json(f.c()),
        "convention": "phi",
    })
}

/// `{"ring", "a", "b", "c", "convention": "gamma_b" | "gamma2b"}`.
pub fn parse_polynomial(
    v: &Value,
    location: &str,
    default: PolyConvention,
) -> Result<QuadraticPolynomial, CliError> {
    let obj = as_object(v, location)?;
    let convention = match obj.get("convention").map(|c| c.as_str()) {
        None => default,
        Some(Some("gamma_b")) => PolyConvention::GammaB,
        Some(Some("gamma2b")) => PolyConvention::Gamma2B,
        Some(_) => {
            return Err(CliError::malformed(
                "convention_mismatch",
                "convention must be \"gamma_b\" or \"gamma2b\"",
                child(location, "convention"),
            ))
        }
    };
    let ring = ring_of(obj, location)?;
    let [a, b, c] = abc(obj, &ring, location)?;
    QuadraticPolynomial::new(a, b, c, convention)
        .map_err(|e| CliError::from_core_input(e, location))
}

pub fn polynomial_json(g: &QuadraticPolynomial) -> Value {
    let [a, b, c] = g.coefficients();
    json!({
        "ring": ring_json(g.ring()),
        "a": elem_json(&a),
        "b": elem_json(&b),
        "c": elem_json(&c),
        "convention": g.convention().as_str(),
    })
}

/// Row-major `[[m11, m12], [m21, m22]]`.
pub fn parse_matrix(ring: &RingRef, v: &Value, location: &str) -> Result<Mat2, CliError> {
    let bad = || CliError::malformed("bad_matrix", "expected a 2x2 row-major matrix", location);
    let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
    let mut out: [[Option<RingElem>; 2]; 2] = Default::default();
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
        for (j, e) in row.iter().enumerate() {
            out[i][j] = Some(parse_elem(ring, e, &child(&child(location, i), j))?);
        }
    }
    Mat2::new(out.map(|r| r.map(|e| e.expect("filled above"))))
        .map_err(|e| CliError::from_core_input(e, location))
}

pub fn matrix_json(m: &Mat2) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(elem_json).collect()))
            .collect(),
    )
}

pub fn parse_vec(ring: &RingRef, v: &Value, location: &str) -> Result<Vec2, CliError> {
    let items = v
        .as_array()
        .filter(|r| r.len() == 2)
        .ok_or_else(|| CliError::malformed("bad_vector", "expected [x, y]", location))?;
    Ok(Vec2 {
        x: parse_elem(ring, &items[0], &child(location, 0))?,
        y: parse_elem(ring, &items[1], &child(location, 1))?,
    })
}

pub fn vec_json(v: &Vec2) -> Value {
    json!([elem_json(&v.x), elem_json(&v.y)])
}

/// `{"ring", "d"}`.
pub fn parse_algebra(v: &Value, location: &str) -> Result<QuadraticAlgebra, CliError> {
    let obj = as_object(v, location)?;
    let ring = ring_of(obj, location)?;
    let d = parse_elem(&ring, field(obj, "d", location)?, &child(location, "d"))?;
    Ok(QuadraticAlgebra::new(d))
}

pub fn algebra_json(a: &QuadraticAlgebra) -> Value {
    json!({"ring": ring_json(a.ring()), "d": elem_json(a.d())})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings_round_trip() {
        let docs = [
            json!({"kind": "rational"}),
            json!({"kind": "modular", "m": 15}),
            json!({"kind": "polynomial", "base": {"kind": "modular", "m": 7}, "vars": ["a", "b"]}),
            json!({"kind": "quotient", "base": {"kind": "polynomial", "base": {"kind": "rational"}, "vars": ["T"]}, "modulus": "T^2-5"}),
        ];
        for d in docs {
            let r = parse_ring(&d, "/ring").unwrap();
            assert_eq!(ring_json(&r), d);
        }
        assert_eq!(
            ring_json(&parse_ring(&json!("Z/97"), "").unwrap()),
            json!({"kind": "modular", "m": 97})
        );
    }

    #[test]
    fn bad_rings_are_malformed() {
        let e = parse_ring(&json!({"kind": "modular", "m": 4}), "/ring").unwrap_err();
        assert_eq!(e.exit_code(), 1);
        assert_eq!(e.location.as_deref(), Some("/ring/m"));
        assert!(parse_ring(&json!({"kind": "fancy"}), "").is_err());
        assert!(parse_ring(
            &json!({"kind": "quotient", "base": {"kind": "rational"}, "modulus": "2"}),
            ""
        )
        .is_err());
    }

    #[test]
    fn elements_in_three_spellings() {
        let r = parse_ring(&json!({"kind": "polynomial", "vars": ["x", "y"]}), "").unwrap();
        let a = parse_elem(&r, &json!("3*x^2*y-1/2"), "").unwrap();
        let b = parse_elem(
            &r,
            &json!({"terms": [{"coeff": 3, "exp": [2, 1]}, {"coeff": "-1/2", "exp": [0, 0]}]}),
            "",
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_elem(&r, &elem_json(&a), "").unwrap(), a);
        assert!(parse_elem(&r, &json!(1.5), "").is_err());
        assert!(parse_elem(&r, &json!({"terms": [{"coeff": 1, "exp": [1]}]}), "").is_err());
    }

    #[test]
    fn forms_and_matrices_round_trip() {
        let f = parse_form(&json!({"ring": "Z/97", "a": 2, "b": "-1", "c": 5}), "").unwrap();
        assert_eq!(parse_form(&form_json(&f), "").unwrap(), f);
        let m = f.alpha_matrix();
        assert_eq!(
            &parse_matrix(f.ring(), &matrix_json(m.matrix()), "").unwrap(),
            m.matrix()
        );
        assert!(parse_form(
            &json!({"a": 1, "b": 0, "c": 1, "convention": "gamma2b"}),
            ""
        )
        .is_err());
        let g = parse_polynomial(
            &json!({"a": 1, "b": 0, "c": -1}),
            "",
            PolyConvention::Gamma2B,
        )
        .unwrap();
        assert_eq!(
            parse_polynomial(&polynomial_json(&g), "", PolyConvention::GammaB).unwrap(),
            g
        );
    }
}

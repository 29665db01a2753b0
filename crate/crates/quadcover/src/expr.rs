//! Parser for ring elements written the way they are printed:
//! `3/4`, `-S1+1/2*S2`, `(a+1)*x^2-T`, with variables resolved through the
//! ring tower.

use num_bigint::BigInt;

use quadcover_core::{Ring, RingElem, RingRef};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, (usize, String)> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Token::Num(digits.parse().expect("ascii digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Token::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Op(c)));
            i += 1;
        } else {
            return Err((i, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

/// Finds a variable anywhere in the tower below `ring` and coerces it up.
pub fn lookup_variable(ring: &RingRef, name: &str) -> Option<RingElem> {
    match &**ring {
        Ring::Polynomial(p) => match p.vars().iter().position(|v| v == name) {
            Some(i) => RingElem::var(ring, i).ok(),
            None => lookup_variable(p.base(), name)?.coerce(ring).ok(),
        },
        Ring::Quotient(q) => lookup_variable(q.base(), name)?.coerce(ring).ok(),
        _ => None,
    }
}

struct Parser<'a> {
    ring: &'a RingRef,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

type PResult<T> = Result<T, (usize, String)>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> PResult<RingElem> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<RingElem> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let at = self.offset();
                let d = self.unary()?;
                acc = acc.try_div(&d).map_err(|e| (at, e.to_string()))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<RingElem> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> PResult<RingElem> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        match self.tokens.get(self.pos).cloned() {
            Some((_, Token::Num(n))) => {
                self.pos += 1;
                let e: u32 = n
                    .try_into()
                    .map_err(|_| (at, "exponent too large".to_string()))?;
                Ok(base.pow(e))
            }
            _ => Err((at, "expected a non-negative integer exponent".into())),
        }
    }

    fn atom(&mut self) -> PResult<RingElem> {
        let at = self.offset();
        match self.tokens.get(self.pos).cloned() {
            Some((_, Token::Num(n))) => {
                self.pos += 1;
                Ok(RingElem::from_bigint(self.ring, &n))
            }
            Some((_, Token::Ident(name))) => {
                self.pos += 1;
                lookup_variable(self.ring, &name)
                    .ok_or((at, format!("unknown variable {name} in {}", self.ring)))
            }
            Some((_, Token::Op('('))) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err((self.offset(), "expected ')'".into()));
                }
                Ok(inner)
            }
            Some((_, t)) => Err((at, format!("unexpected {t:?}"))),
            None => Err((at, "unexpected end of expression".into())),
        }
    }
}

/// Parses `src` as an element of `ring`; `location` prefixes the error
/// position.
pub fn parse_element(ring: &RingRef, src: &str, location: &str) -> Result<RingElem, CliError> {
    let fail = |(off, msg): (usize, String)| {
        CliError::malformed("bad_expression", msg, format!("{location}@{off}"))
    };
    let tokens = tokenize(src).map_err(fail)?;
    let mut p = Parser {
        ring,
        tokens,
        pos: 0,
        end: src.chars().count(),
    };
    let value = p.expr().map_err(fail)?;
    if p.pos != p.tokens.len() {
        return Err(fail((p.offset(), "trailing input".into())));
    }
    Ok(value)
}

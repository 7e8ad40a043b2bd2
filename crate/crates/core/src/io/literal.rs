//! Weight-vector literals and operator specs.
//!
//! A literal is a `;`-separated list of components `v @ grade n`, where `v`
//! is a sum of terms, optionally in brackets. Terms are products (`·` or `*`)
//! of rationals (`3`, `1/2`, `(-1/2)`), powers of `x` (gamma), words in the
//! generators `d<i>` ending in `vac` (qlambda), or the unit `1`. The format
//! produced by `Display` on weight vectors parses back to the same vector.

use std::iter::Peekable;
use std::str::Chars;

use num::One;
use serde_json::{json, Value};

use crate::action::WeightVector;
use crate::coeff::{AKey, AVector, CoefficientModule, Descriptor, ModuleVector, QVec};
use crate::kernel::{format_rational, int, Rational, UniPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it: Peekable<Chars> = s.chars().peekable();
    while let Some(&c) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut n = String::new();
            while let Some(&d) = it.peek().filter(|d| d.is_ascii_digit()) {
                n.push(d);
                it.next();
            }
            out.push(Tok::Num(
                n.parse()
                    .map_err(|_| Error::Parse(format!("number {n} out of range")))?,
            ));
        } else if c.is_ascii_alphabetic() {
            let mut id = String::new();
            while let Some(&d) = it.peek().filter(|d| d.is_ascii_alphanumeric()) {
                id.push(d);
                it.next();
            }
            out.push(Tok::Ident(id));
        } else if "/()+-*·^[];@,".contains(c) {
            out.push(Tok::Sym(if c == '·' { '*' } else { c }));
            it.next();
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

#[derive(Default)]
struct Term {
    x_pow: usize,
    word: Vec<usize>,
    vac: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn error(&self, what: &str) -> Error {
        match self.peek() {
            Some(t) => Error::Parse(format!("{what} at token {} ({t:?})", self.pos)),
            None => Error::Parse(format!("{what} at end of input")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        match self.peek() {
            Some(&Tok::Num(n)) => {
                self.pos += 1;
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.error("expected an integer")),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let p = self.integer()?;
        if self.eat('/') {
            let q = self.integer()?;
            if q == 0 {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(p.into(), q.into()))
        } else {
            Ok(int(p))
        }
    }

    fn power(&mut self) -> Result<usize> {
        if self.eat('^') {
            let k = self.integer()?;
            usize::try_from(k).map_err(|_| Error::Parse(format!("negative power {k}")))
        } else {
            Ok(1)
        }
    }

    /// One factor; multiplies into `coeff` and `term`.
    fn factor(&mut self, coeff: &mut Rational, term: &mut Term) -> Result<()> {
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                *coeff *= self.rational()?;
                self.expect(')')
            }
            Some(Tok::Num(_)) => {
                *coeff *= self.rational()?;
                Ok(())
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if term.vac {
                    return Err(Error::Parse(format!("`{id}` after `vac`")));
                }
                if id == "x" {
                    term.x_pow += self.power()?;
                } else if id == "vac" {
                    term.vac = true;
                } else if let Some(i) = id.strip_prefix('d').and_then(|n| n.parse::<usize>().ok()) {
                    let k = self.power()?;
                    term.word.extend(std::iter::repeat_n(i, k));
                } else {
                    return Err(Error::Parse(format!("unknown symbol `{id}`")));
                }
                Ok(())
            }
            _ => Err(self.error("expected a factor")),
        }
    }

    fn term(&mut self, sign: Rational, desc: &Descriptor) -> Result<AVector> {
        let mut coeff = sign;
        let mut term = Term::default();
        self.factor(&mut coeff, &mut term)?;
        while self.eat('*') {
            self.factor(&mut coeff, &mut term)?;
        }
        match desc {
            Descriptor::OneDim(_) => {
                if term.x_pow > 0 || !term.word.is_empty() || term.vac {
                    return Err(Error::Parse("onedim vectors are plain rationals".into()));
                }
                Ok(AVector::OneDim(coeff))
            }
            Descriptor::Gamma(_) => {
                if !term.word.is_empty() || term.vac {
                    return Err(Error::Parse("gamma vectors are polynomials in x".into()));
                }
                Ok(AVector::Gamma(UniPoly::monomial(term.x_pow, coeff)))
            }
            Descriptor::QLambda(q) => {
                if term.x_pow > 0 {
                    return Err(Error::Parse("qlambda vectors have no x".into()));
                }
                if !term.word.is_empty() && !term.vac {
                    return Err(Error::Parse("generator word must end in `vac`".into()));
                }
                let v = if term.word.is_empty() {
                    QVec::vac()
                } else {
                    q.straighten(&term.word)?
                };
                Ok(AVector::QLambda(v.scale(&coeff)))
            }
        }
    }

    fn sum(&mut self, desc: &Descriptor) -> Result<AVector> {
        let mut sign = if self.eat('-') {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut acc = desc.zero();
        loop {
            acc = acc.add_vector(&self.term(sign, desc)?);
            if self.eat('+') {
                sign = Rational::one();
            } else if self.eat('-') {
                sign = -Rational::one();
            } else {
                return Ok(acc);
            }
        }
    }

    fn component(&mut self, desc: &Descriptor) -> Result<(i64, AVector)> {
        let v = if self.eat('[') {
            let v = self.sum(desc)?;
            self.expect(']')?;
            v
        } else {
            self.sum(desc)?
        };
        self.expect('@')?;
        if self.peek() == Some(&Tok::Ident("grade".into())) {
            self.pos += 1;
        }
        Ok((self.integer()?, v))
    }
}

/// Parses a weight-vector literal over the descriptor's coefficient module.
pub fn parse_weight_vector(desc: &Descriptor, text: &str) -> Result<WeightVector<AVector>> {
    let toks = tokenize(text)?;
    if toks == [Tok::Num(0)] {
        return Ok(WeightVector::zero());
    }
    let mut p = Parser { toks, pos: 0 };
    let mut w = WeightVector::zero();
    loop {
        let (n, v) = p.component(desc)?;
        desc.check_member(&v)?;
        w.add_component(n, &v);
        if !p.eat(';') {
            break;
        }
    }
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(w)
}

/// `d(m)`, `t(k)`, `c`, or `omega(l,m,s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorSpec {
    D(i64),
    T(i64),
    C,
    Omega { l: i64, m: i64, s: u32 },
}

pub fn parse_operator(text: &str) -> Result<OperatorSpec> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let name = match p.peek() {
        Some(Tok::Ident(id)) => id.clone(),
        _ => return Err(Error::Parse(format!("operator {text:?}: expected a name"))),
    };
    p.pos += 1;
    let mut args = Vec::new();
    if p.eat('(') {
        loop {
            args.push(p.integer()?);
            if !p.eat(',') {
                break;
            }
        }
        p.expect(')')?;
    }
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    match (name.as_str(), args.as_slice()) {
        ("d", &[m]) => Ok(OperatorSpec::D(m)),
        ("t", &[k]) => Ok(OperatorSpec::T(k)),
        ("c", &[]) => Ok(OperatorSpec::C),
        ("omega", &[l, m, s]) => Ok(OperatorSpec::Omega {
            l,
            m,
            s: u32::try_from(s)
                .map_err(|_| Error::Parse(format!("omega order {s} is negative")))?,
        }),
        _ => Err(Error::Parse(format!(
            "operator {text:?}: expected d(m), t(k), c or omega(l,m,s)"
        ))),
    }
}

fn basis_label(k: &AKey) -> String {
    match k {
        AKey::Unit => "1".into(),
        AKey::Power(0) => "1".into(),
        AKey::Power(1) => "x".into(),
        AKey::Power(k) => format!("x^{k}"),
        AKey::Mono(m) => m.to_string(),
    }
}

/// JSON form: one entry per nonzero grade, with exact coefficients as strings.
pub fn weight_vector_json(w: &WeightVector<AVector>) -> Value {
    let comps: Vec<Value> = w
        .components()
        .map(|(n, v)| {
            let terms: Vec<Value> = v
                .terms()
                .into_iter()
                .map(|(k, c)| json!({ "basis": basis_label(&k), "coeff": format_rational(&c) }))
                .collect();
            json!({ "grade": n, "terms": terms })
        })
        .collect();
    json!({ "display": w.to_string(), "components": comps })
}

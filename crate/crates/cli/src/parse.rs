//! Polynomial text: `+`/`-` sums of `*` products of integers, variables,
//! the field generator and parenthesized sums, each optionally raised to a
//! nonnegative integer power. Whitespace is ignored.

use std::collections::BTreeMap;

use glab_core::exactalg::{FqElem, FqField, Poly, Ring};
use glab_core::ffext::{Fx, Fxy};

use crate::error::CliError;

/// Field and variable declarations for parsing.
#[derive(Clone, Debug)]
pub struct ParseContext {
    pub field: FqField,
    /// Variables, most significant first, e.g. `["y", "x"]`.
    pub vars: Vec<String>,
    /// Name of the declared generator of `F_q^*`, if any.
    pub generator: Option<String>,
}

impl ParseContext {
    /// Prime fields declare no generator; proper extensions declare `a`.
    pub fn new(field: &FqField, vars: &[&str]) -> Self {
        ParseContext {
            field: field.clone(),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            generator: (field.m() > 1).then(|| "a".to_string()),
        }
    }
}

/// Sparse polynomial: exponent vector (in `vars` order) to nonzero
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub terms: BTreeMap<Vec<u32>, FqElem>,
}

struct Parser<'a> {
    ctx: &'a ParseContext,
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            let n = text
                .parse()
                .map_err(|_| CliError::syntax(at, "integer literal too large"))?;
            out.push((at, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((
                at,
                Tok::Ident(chars[start..i].iter().map(|(_, c)| c).collect()),
            ));
        } else if "+-*^()".contains(c) {
            out.push((at, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(CliError::syntax(at, &format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

impl MPoly {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    fn constant(f: &FqField, c: FqElem, nvars: usize) -> Self {
        let mut p = Self::zero();
        if !f.is_zero(&c) {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    fn add(&self, other: &Self, f: &FqField) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let v = out.terms.get(e).map_or(*c, |d| f.add(d, c));
            if f.is_zero(&v) {
                out.terms.remove(e);
            } else {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    fn neg(&self, f: &FqField) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), f.neg(c)))
                .collect(),
        }
    }

    fn mul(&self, other: &Self, f: &FqField) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let term = MPoly {
                    terms: BTreeMap::from([(e, f.mul(c1, c2))]),
                };
                out = out.add(&term, f);
            }
        }
        out
    }

    fn pow(&self, k: u64, f: &FqField, nvars: usize) -> Self {
        (0..k).fold(Self::constant(f, f.one(), nvars), |acc, _| acc.mul(self, f))
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |(p, _)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<MPoly, CliError> {
        let f = &self.ctx.field;
        let mut acc = MPoly::zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            first = false;
            let t = self.product()?;
            acc = acc.add(&if neg { t.neg(f) } else { t }, f);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MPoly, CliError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            let r = self.power()?;
            acc = acc.mul(&r, &self.ctx.field);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MPoly, CliError> {
        let n = self.ctx.vars.len();
        let f = &self.ctx.field;
        let at = self.at();
        let (base, generator) = match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(k))) => {
                self.pos += 1;
                (MPoly::constant(f, f.from_i64((k % f.p()) as i64), n), false)
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                if let Some(i) = self.ctx.vars.iter().position(|v| *v == name) {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    (
                        MPoly {
                            terms: BTreeMap::from([(e, f.one())]),
                        },
                        false,
                    )
                } else if self.ctx.generator.as_deref() == Some(name.as_str()) {
                    (MPoly::constant(f, f.generator(), n), true)
                } else if name == "a" {
                    return Err(CliError::UnknownGenerator { position: at, name });
                } else {
                    return Err(CliError::syntax(
                        at,
                        &format!("unknown identifier '{name}'"),
                    ));
                }
            }
            Some((_, Tok::Sym('('))) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(CliError::syntax(self.at(), "expected ')'"));
                }
                (inner, false)
            }
            _ => return Err(CliError::syntax(at, "expected a term")),
        };
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.at();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(k))) => {
                self.pos += 1;
                if generator {
                    return Ok(MPoly::constant(f, f.gen_pow(k), n));
                }
                if k > 1 << 16 {
                    return Err(CliError::syntax(at, "exponent too large"));
                }
                Ok(base.pow(k, f, n))
            }
            _ => Err(CliError::syntax(at, "expected an integer exponent")),
        }
    }
}

pub fn parse_mpoly(text: &str, ctx: &ParseContext) -> Result<MPoly, CliError> {
    let mut p = Parser {
        ctx,
        src: text,
        toks: tokenize(text)?,
        pos: 0,
    };
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(CliError::syntax(p.at(), "unexpected trailing input"));
    }
    Ok(out)
}

/// A polynomial in the single variable of `ring`.
pub fn parse_univariate(text: &str, ring: &Fx) -> Result<Poly<FqElem>, CliError> {
    let ctx = ParseContext::new(ring.base(), &[ring.var()]);
    Ok(to_univariate(&parse_mpoly(text, &ctx)?, ring))
}

/// A polynomial in `y` over `F_q[x]`.
pub fn parse_bivariate(text: &str, ring: &Fxy) -> Result<Poly<Poly<FqElem>>, CliError> {
    let ctx = ParseContext::new(ring.base().base(), &[ring.var(), ring.base().var()]);
    Ok(to_bivariate(&parse_mpoly(text, &ctx)?, ring))
}

pub fn to_univariate(p: &MPoly, ring: &Fx) -> Poly<FqElem> {
    p.terms.iter().fold(ring.zero(), |acc, (e, c)| {
        ring.add(&acc, &ring.monomial(*c, e[0] as usize))
    })
}

pub fn to_bivariate(p: &MPoly, ring: &Fxy) -> Poly<Poly<FqElem>> {
    let fx = ring.base();
    p.terms.iter().fold(ring.zero(), |acc, (e, c)| {
        ring.add(
            &acc,
            &ring.monomial(fx.monomial(*c, e[1] as usize), e[0] as usize),
        )
    })
}

pub fn from_univariate(p: &Poly<FqElem>) -> MPoly {
    MPoly {
        terms: p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.0 != 0)
            .map(|(k, c)| (vec![k as u32], *c))
            .collect(),
    }
}

pub fn from_bivariate(p: &Poly<Poly<FqElem>>) -> MPoly {
    let mut terms = BTreeMap::new();
    for (i, cx) in p.coeffs().iter().enumerate() {
        for (j, c) in cx.coeffs().iter().enumerate() {
            if c.0 != 0 {
                terms.insert(vec![i as u32, j as u32], *c);
            }
        }
    }
    MPoly { terms }
}

/// Canonical text: terms by descending exponent vector, prime-field
/// coefficients as signed residues of least absolute value.
pub fn print_mpoly(p: &MPoly, ctx: &ParseContext) -> String {
    let f = &ctx.field;
    if p.terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (e, c) in p.terms.iter().rev() {
        let (neg, mag) = if f.m() == 1 {
            let v = c.0 as u64;
            if v > f.p() / 2 {
                (true, (f.p() - v).to_string())
            } else {
                (false, v.to_string())
            }
        } else {
            (false, f.render(c))
        };
        let mono: Vec<String> = e
            .iter()
            .zip(&ctx.vars)
            .filter(|(k, _)| **k > 0)
            .map(|(k, v)| {
                if *k == 1 {
                    v.clone()
                } else {
                    format!("{v}^{k}")
                }
            })
            .collect();
        let term = match (mag.as_str(), mono.is_empty()) {
            (_, true) => mag,
            ("1", false) => mono.join("*"),
            _ => format!("{mag}*{}", mono.join("*")),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    out
}

pub fn print_univariate(p: &Poly<FqElem>, ring: &Fx) -> String {
    print_mpoly(
        &from_univariate(p),
        &ParseContext::new(ring.base(), &[ring.var()]),
    )
}

pub fn print_bivariate(p: &Poly<Poly<FqElem>>, ring: &Fxy) -> String {
    let ctx = ParseContext::new(ring.base().base(), &[ring.var(), ring.base().var()]);
    print_mpoly(&from_bivariate(p), &ctx)
}

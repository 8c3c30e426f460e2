//! Scalar expressions: the textual form of ring elements used in word parameters,
//! catalog files and the command line.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::element::RingElement;
use crate::error::RingError;
use crate::poly::Poly;
use crate::spec::Ring;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Num(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn parse(text: &str) -> Result<Expr, RingError> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(RingError::Parse(format!("trailing input in {text:?}")));
        }
        Ok(e)
    }

    pub fn eval(&self, ring: &Ring) -> Result<RingElement, RingError> {
        Ok(match self {
            Expr::Num(c) => RingElement::from_rational(ring, c)?,
            Expr::Var(v) => RingElement::var(ring, v)?,
            Expr::Neg(a) => -a.eval(ring)?,
            Expr::Add(a, b) => a.eval(ring)?.try_add(&b.eval(ring)?)?,
            Expr::Sub(a, b) => a.eval(ring)?.try_sub(&b.eval(ring)?)?,
            Expr::Mul(a, b) => a.eval(ring)?.try_mul(&b.eval(ring)?)?,
            Expr::Div(a, b) => a.eval(ring)?.try_mul(&b.eval(ring)?.invert()?)?,
            Expr::Pow(a, e) => a.eval(ring)?.powi(*e)?,
        })
    }

    /// Variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(c) if c.is_negative() || !c.denom().is_one() => 2,
            Expr::Num(_) | Expr::Var(_) => 5,
        }
    }
}

impl std::ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| -> fmt::Result {
            if e.prec() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Num(c) => write!(f, "{c}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 2)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                f.write_str("+")?;
                wrap(f, b, 2)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str("-")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("*")?;
                wrap(f, b, 3)
            }
            Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("/")?;
                wrap(f, b, 3)
            }
            Expr::Pow(a, e) => {
                wrap(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, RingError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(RingError::Parse(format!("unexpected character {c:?} in {text:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, RingError> {
        let mut e = self.term()?;
        loop {
            if self.eat('+') {
                e = e + self.term()?;
            } else if self.eat('-') {
                e = e - self.term()?;
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, RingError> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = e * self.unary()?;
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                e = e * self.power()?;
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, RingError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, RingError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: i64 = n.try_into().map_err(|_| RingError::Parse("exponent too large".into()))?;
                    Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
                }
                _ => Err(RingError::Parse("exponent must be an integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, RingError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(Expr::Var(v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(RingError::Parse("missing )".into()));
                }
                Ok(e)
            }
            other => Err(RingError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a polynomial over the variables of `ring` and return it as an element.
pub fn parse_element(ring: &Ring, text: &str) -> Result<RingElement, RingError> {
    Expr::parse(text)?.eval(ring)
}

impl Expr {
    /// Expression for a polynomial over the named variables, largest term first.
    pub fn from_poly(p: &Poly, names: &[String], weights: &[u32]) -> Expr {
        let mut terms: Vec<_> = p.terms().collect();
        terms.sort_by(|a, b| crate::poly::monomial_cmp(b.0, a.0, weights));
        let mut acc: Option<Expr> = None;
        for (m, c) in terms {
            let mut factors: Vec<Expr> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { Expr::var(&names[i]) } else { Expr::Pow(Box::new(Expr::var(&names[i])), e as i64) })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if !abs.is_one() || factors.is_empty() {
                factors.insert(0, Expr::Num(abs));
            }
            let mono = factors.into_iter().reduce(|a, b| a * b).expect("nonempty");
            acc = Some(match (acc, neg) {
                (None, false) => mono,
                (None, true) => -mono,
                (Some(a), false) => a + mono,
                (Some(a), true) => a - mono,
            });
        }
        acc.unwrap_or_else(|| Expr::int(0))
    }

    /// Expression denoting a polynomial, quotient or fraction element, or a residue.
    pub fn from_element(e: &RingElement) -> Expr {
        let names = e.ring().variables();
        let w = e.ring().weights();
        if let Some(r) = e.as_residue() {
            return Expr::int(r as i64);
        }
        let num = Expr::from_poly(e.numerator().expect("polynomial numerator"), names, w);
        match e.denominator() {
            Some(d) if !d.as_constant().is_some_and(|c| c.is_one()) => {
                Expr::Div(Box::new(num), Box::new(Expr::from_poly(d, names, w)))
            }
            _ => num,
        }
    }

    /// Replace variables by expressions; unmapped variables are kept.
    pub fn substitute(&self, map: &std::collections::HashMap<String, Expr>) -> Expr {
        let sub = |e: &Expr| Box::new(e.substitute(map));
        match self {
            Expr::Num(_) => self.clone(),
            Expr::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            Expr::Neg(a) => Expr::Neg(sub(a)),
            Expr::Add(a, b) => Expr::Add(sub(a), sub(b)),
            Expr::Sub(a, b) => Expr::Sub(sub(a), sub(b)),
            Expr::Mul(a, b) => Expr::Mul(sub(a), sub(b)),
            Expr::Div(a, b) => Expr::Div(sub(a), sub(b)),
            Expr::Pow(a, e) => Expr::Pow(sub(a), *e),
        }
    }

    /// True if the expression is the literal zero.
    pub fn is_literal_zero(&self) -> bool {
        matches!(self, Expr::Num(c) if c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::RingSpec;

    #[test]
    fn parse_and_print() {
        let e = Expr::parse("(b^2-b)/2 + 3t*s - -1").unwrap();
        let r = RingSpec::polynomial(&["b", "t", "s"]).unwrap();
        let v = e.eval(&r).unwrap();
        assert_eq!(v.render(), "1/2*b^2 + 3*t*s - 1/2*b + 1");
        let again = Expr::parse(&e.to_string()).unwrap();
        assert_eq!(again.eval(&r).unwrap(), v);
    }

    #[test]
    fn implicit_product_and_negative_power() {
        let r = RingSpec::fraction(&["u"]).unwrap();
        let v = Expr::parse("2u^-1").unwrap().eval(&r).unwrap();
        assert_eq!(v.try_mul(&RingElement::var(&r, "u").unwrap()).unwrap(), RingElement::from_int(&r, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(Expr::parse("t +").is_err());
        assert!(Expr::parse("t $ s").is_err());
        assert!(Expr::parse("t^s").is_err());
    }
}

//! Symbolic words in the generators `x(r, p)`, `h(r, u)`, `w(r, u)`, `t1(u)`, `t2(u)`.

use std::collections::HashMap;
use std::fmt;

use exactring::Expr;
use rootsys::{Root, SystemType};

use crate::error::ChevError;

#[derive(Clone, Debug, PartialEq)]
pub enum Letter {
    X(Root, Expr),
    H(Root, Expr),
    W(Root, Expr),
    /// Torus element `t_i(u)`, index starting at 1.
    T(usize, Expr),
    /// Parenthesized subword raised to an integer power.
    Group(GroupWord, i64),
}

impl Letter {
    pub fn inverse(&self) -> Letter {
        let recip = |e: &Expr| Expr::Pow(Box::new(e.clone()), -1);
        match self {
            Letter::X(r, p) => Letter::X(r.clone(), neg(p)),
            Letter::H(r, u) => Letter::H(r.clone(), recip(u)),
            Letter::W(r, u) => Letter::W(r.clone(), neg(u)),
            Letter::T(i, u) => Letter::T(*i, recip(u)),
            Letter::Group(w, k) => Letter::Group(w.clone(), -k),
        }
    }

    /// Replace parameter variables by expressions.
    pub fn substitute(&self, map: &HashMap<String, Expr>) -> Letter {
        match self {
            Letter::X(r, e) => Letter::X(r.clone(), e.substitute(map)),
            Letter::H(r, e) => Letter::H(r.clone(), e.substitute(map)),
            Letter::W(r, e) => Letter::W(r.clone(), e.substitute(map)),
            Letter::T(i, e) => Letter::T(*i, e.substitute(map)),
            Letter::Group(w, k) => Letter::Group(w.substitute(map), *k),
        }
    }

    /// Parameter variables, in order of first occurrence.
    fn collect_vars(&self, out: &mut Vec<String>) {
        let mut push = |e: &Expr| {
            for v in e.variables() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        };
        match self {
            Letter::X(_, e) | Letter::H(_, e) | Letter::W(_, e) | Letter::T(_, e) => push(e),
            Letter::Group(w, _) => {
                for l in &w.letters {
                    l.collect_vars(out);
                }
            }
        }
    }
}

fn neg(e: &Expr) -> Expr {
    match e {
        Expr::Neg(inner) => (**inner).clone(),
        _ => -e.clone(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupWord {
    pub system: SystemType,
    pub letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty(system: SystemType) -> Self {
        GroupWord { system, letters: vec![] }
    }

    pub fn new(system: SystemType, letters: Vec<Letter>) -> Self {
        GroupWord { system, letters }
    }

    pub fn x(r: &Root, p: Expr) -> Self {
        GroupWord { system: r.system(), letters: vec![Letter::X(r.clone(), p)] }
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    /// Concatenation `self * other`.
    pub fn then(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GroupWord { system: self.system, letters }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { system: self.system, letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn pow(&self, k: i64) -> GroupWord {
        GroupWord { system: self.system, letters: vec![Letter::Group(self.clone(), k)] }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn substitute(&self, map: &HashMap<String, Expr>) -> GroupWord {
        GroupWord { system: self.system, letters: self.letters.iter().map(|l| l.substitute(map)).collect() }
    }

    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        for l in &self.letters {
            l.collect_vars(&mut out);
        }
        out
    }

    /// Parse a word such as `x(a+3b, t^2) h(a, -1) (x(a,1) w(b,1))^-1`.
    pub fn parse(system: SystemType, text: &str) -> Result<GroupWord, ChevError> {
        let chars: Vec<char> = text.chars().collect();
        let mut p = WordParser { system, chars, pos: 0 };
        let w = p.word(false)?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.err("unexpected input"));
        }
        Ok(w)
    }
}

struct WordParser {
    system: SystemType,
    chars: Vec<char>,
    pos: usize,
}

impl WordParser {
    fn err(&self, what: &str) -> ChevError {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        ChevError::Parse(format!("{what} at {rest:?}"))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && (self.chars[self.pos].is_whitespace() || self.chars[self.pos] == '*' || self.chars[self.pos] == '.') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self, nested: bool) -> Result<GroupWord, ChevError> {
        let mut w = GroupWord::empty(self.system);
        loop {
            self.skip_ws();
            match self.peek() {
                None => {
                    if nested {
                        return Err(self.err("unclosed parenthesis"));
                    }
                    return Ok(w);
                }
                Some(')') if nested => {
                    self.pos += 1;
                    return Ok(w);
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.word(true)?;
                    let k = self.exponent()?;
                    w.push(Letter::Group(inner, k));
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let l = self.letter()?;
                    w.push(l);
                }
                Some('1') if !nested && w.letters.is_empty() => {
                    self.pos += 1;
                }
                _ => return Err(self.err("expected a letter")),
            }
        }
    }

    fn exponent(&mut self) -> Result<i64, ChevError> {
        self.skip_ws_only();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws_only();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad exponent"))
    }

    fn skip_ws_only(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    /// Read up to the next top-level `,` or closing `)` of the argument list.
    fn arg(&mut self) -> Result<(String, char), ChevError> {
        let start = self.pos;
        let mut depth = 0;
        while let Some(c) = self.peek() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    let s = self.chars[start..self.pos].iter().collect();
                    self.pos += 1;
                    return Ok((s, ')'));
                }
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    let s = self.chars[start..self.pos].iter().collect();
                    self.pos += 1;
                    return Ok((s, ','));
                }
                _ => {}
            }
            self.pos += 1;
        }
        Err(self.err("unterminated argument list"))
    }

    fn letter(&mut self) -> Result<Letter, ChevError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        self.skip_ws_only();
        if self.peek() != Some('(') {
            return Err(self.err("expected '('"));
        }
        self.pos += 1;
        let param = |s: &str| Expr::parse(s).map_err(|e| ChevError::Parse(format!("parameter {s:?}: {e}")));
        match name.as_str() {
            "x" | "h" | "w" => {
                let (root_text, sep) = self.arg()?;
                if sep != ',' {
                    return Err(self.err("expected two arguments"));
                }
                let (p, sep) = self.arg()?;
                if sep != ')' {
                    return Err(self.err("too many arguments"));
                }
                let r = self.system.parse_root(&root_text)?;
                let e = param(&p)?;
                Ok(match name.as_str() {
                    "x" => Letter::X(r, e),
                    "h" => Letter::H(r, e),
                    _ => Letter::W(r, e),
                })
            }
            _ => {
                let idx = name
                    .strip_prefix('t')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= self.system.rank())
                    .ok_or_else(|| ChevError::Parse(format!("unknown generator {name:?}")))?;
                let (p, sep) = self.arg()?;
                if sep != ')' {
                    return Err(self.err("torus letters take one argument"));
                }
                Ok(Letter::T(idx, param(&p)?))
            }
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(r, p) => write!(f, "x({}, {p})", r.alias()),
            Letter::H(r, p) => write!(f, "h({}, {p})", r.alias()),
            Letter::W(r, p) => write!(f, "w({}, {p})", r.alias()),
            Letter::T(i, p) => write!(f, "t{i}({p})"),
            Letter::Group(w, 1) => write!(f, "({w})"),
            Letter::Group(w, k) => write!(f, "({w})^{k}"),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

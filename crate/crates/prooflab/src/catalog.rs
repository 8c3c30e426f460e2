//! Built-in identity records for each root system.

use std::time::Instant;

use chevgroup::{Realization, SystemType};
use exactring::{quotient_ring, Expr, Ring, RingSpec};

use crate::record::{Claim, Expected, Factor, IdentityRecord, NamedResidual, Report, Verdict};

fn q() -> Ring {
    RingSpec::rationals()
}

fn poly(vars: &[&str]) -> Ring {
    RingSpec::polynomial(vars).expect("builtin ring")
}

fn frac(vars: &[&str]) -> Ring {
    RingSpec::fraction(vars).expect("builtin ring")
}

fn fp(p: u64) -> Ring {
    RingSpec::modular(p).expect("builtin ring")
}

fn expr(text: &str) -> Expr {
    Expr::parse(text).unwrap_or_else(|e| panic!("builtin expression {text:?}: {e}"))
}

struct Builder {
    system: SystemType,
    realization: Realization,
    out: Vec<IdentityRecord>,
}

impl Builder {
    fn new(system: SystemType, realization: Realization) -> Builder {
        Builder { system, realization, out: Vec::new() }
    }

    fn w(&self, text: &str) -> Factor {
        Factor::word(self.system, text)
    }

    fn push(&mut self, name: &str, ring: Ring, claim: Claim) {
        self.push_in(name, self.realization, ring, claim);
    }

    fn push_in(&mut self, name: &str, realization: Realization, ring: Ring, claim: Claim) {
        self.out.push(IdentityRecord { name: name.to_string(), system: self.system, realization, ring, claim });
    }

    /// `lhs = rhs` with both sides given as words.
    fn words(&mut self, name: &str, ring: Ring, lhs: &str, rhs: &str) {
        let claim = Claim::Equation { lhs: vec![self.w(lhs)], rhs: vec![self.w(rhs)], expected: Expected::ZeroResidual };
        self.push(name, ring, claim);
    }

    fn factors(&mut self, name: &str, ring: Ring, lhs: Vec<Factor>, rhs: Vec<Factor>) {
        self.push(name, ring, Claim::Equation { lhs, rhs, expected: Expected::ZeroResidual });
    }

    fn trace(&mut self, name: &str, root: &str, expected: &str) {
        let root = self.system.parse_root(root).expect("builtin root");
        self.push_in(name, Realization::Adjoint, poly(&["s", "t"]), Claim::Trace { root, expected: expr(expected) });
    }

    fn nilpotent(&mut self, name: &str, ring: Ring, word: &str, power: u32) {
        let word = chevgroup::GroupWord::parse(self.system, word).expect("builtin word");
        self.push(name, ring, Claim::Nilpotent { word, power });
    }
}

fn residual(row: usize, col: usize, poly: &str) -> NamedResidual {
    NamedResidual { row, col, poly: expr(poly) }
}

fn a1() -> Vec<IdentityRecord> {
    let mut b = Builder::new(SystemType::A1, Realization::A1Std);
    b.trace("A1-trace", "a", "s^2*t^2+4*s*t+3");
    b.words("A1-quad", q(), "(x(a,-1) x(-a,1) x(a,-1))^2", "1");
    b.words("A1-add", poly(&["s", "t"]), "x(a,t) x(a,s)", "x(a,t+s)");
    b.words("A1-add-neg", poly(&["s", "t"]), "x(-a,t) x(-a,s)", "x(-a,t+s)");
    b.words("A1-h-conj", frac(&["t", "u"]), "h(a,u) x(a,t) (h(a,u))^-1", "x(a,u^2*t)");
    b.words("A1-h-conj-neg", frac(&["t", "u"]), "h(a,u) x(-a,t) (h(a,u))^-1", "x(-a,t/u^2)");
    b.words("A1-rank-one", frac(&["s", "t"]), "x(a,t) x(-a,s)", "x(-a,s/(1+t*s)) h(a,1+t*s) x(a,t/(1+t*s))");
    b.factors(
        "A1-x-a-matrix",
        poly(&["t"]),
        vec![b.w("x(a,t)")],
        vec![Factor::matrix(&[&["1", "t^2", "2*t"], &["0", "1", "0"], &["0", "t", "1"]])],
    );
    b.factors(
        "A1-x-minus-a-matrix",
        poly(&["t"]),
        vec![b.w("x(-a,t)")],
        vec![Factor::matrix(&[&["1", "0", "0"], &["t^2", "1", "2*t"], &["t", "0", "1"]])],
    );
    let phi = || Factor::matrix(&[&["1-h", "-h^2", "-2*h"], &["1", "1+h", "2"], &["1", "h", "1"]]);
    b.factors(
        "A1-phi-factorization",
        poly(&["h"]),
        vec![phi()],
        vec![
            Factor::matrix(&[&["1", "-h", "0"], &["0", "1", "0"], &["0", "0", "1"]]),
            b.w("x(-a,1)"),
            Factor::matrix(&[&["1", "h", "0"], &["0", "1", "0"], &["0", "0", "1"]]),
        ],
    );
    b.factors(
        "A1-quad-phi",
        poly(&["h"]),
        vec![b.w("x(a,-1)"), phi(), b.w("x(a,-1) x(a,-1)"), phi(), b.w("x(a,-1)")],
        vec![],
    );
    let cent = || Factor::matrix(&[&["a", "b", "2*h"], &["0", "a", "0"], &["0", "h", "a"]]);
    b.factors("A1-cent-x-a", poly(&["a", "b", "h"]), vec![cent(), b.w("x(a,1)")], vec![b.w("x(a,1)"), cent()]);
    let cent_neg = || Factor::matrix(&[&["a", "0", "0"], &["b", "a", "2*c"], &["c", "0", "a"]]);
    b.factors(
        "A1-cent-x-minus-a",
        poly(&["a", "b", "c"]),
        vec![cent_neg(), b.w("x(-a,-1)")],
        vec![b.w("x(-a,-1)"), cent_neg()],
    );
    b.factors(
        "A1-cent-factorization",
        frac(&["a", "b", "c"]),
        vec![cent_neg()],
        vec![Factor::matrix(&[&["a", "0", "0"], &["(a*b-c^2)/a", "a", "0"], &["0", "0", "a"]]), b.w("x(-a,c/a)")],
    );
    b.push(
        "A1-impossible-residuals",
        frac(&["t", "p", "q", "r", "a", "h", "d"]),
        Claim::Equation {
            lhs: vec![b.w("t1(t) x(a,p) x(-a,q) x(a,r)")],
            rhs: vec![Factor::matrix(&[&["a*(1+h*d)", "a*h", "0"], &["a*d", "a", "0"], &["0", "0", "a"]])],
            expected: Expected::NamedResiduals {
                entries: vec![residual(3, 1, "q*(p*q+1)"), residual(2, 3, "q*(q*r+1)")],
                units: vec!["t".into()],
            },
        },
    );
    b.out
}

const A2_X0: &str = "x(a1,1) x(a2,1)";
const A2_X1: &str = "x(a1,b+s) x(a2,s)";

fn a2() -> Vec<IdentityRecord> {
    let mut b = Builder::new(SystemType::A2, Realization::Pgl3);
    let st = || poly(&["s", "t"]);
    for (tag, r) in [("a1", "a1"), ("a2", "a2"), ("g", "a1+a2"), ("neg-a1", "-a1"), ("neg-a2", "-a2"), ("neg-g", "-a1-a2")]
    {
        b.words(&format!("A2-add-{tag}"), st(), &format!("x({r},t) x({r},s)"), &format!("x({r},t+s)"));
    }
    b.words("A2-comm-a1-a2", st(), "x(a1,t) x(a2,s) x(a1,-t) x(a2,-s)", "x(a1+a2,t*s)");
    b.words("A2-swap", poly(&["u", "v"]), "x(a2,v) x(a1,u)", "x(a1,u) x(a2,v) x(a1+a2,-u*v)");
    b.words("A2-comm-a1-neg-g", st(), "x(a1,t) x(-a1-a2,s) x(a1,-t) x(-a1-a2,-s)", "x(-a2,-t*s)");
    b.words("A2-comm-a2-neg-g", st(), "x(a2,t) x(-a1-a2,s) x(a2,-t) x(-a1-a2,-s)", "x(-a1,t*s)");
    b.words("A2-comm-g-neg-a1", st(), "x(a1+a2,t) x(-a1,s) x(a1+a2,-t) x(-a1,-s)", "x(a2,-t*s)");
    b.words("A2-comm-g-neg-a2", st(), "x(a1+a2,t) x(-a2,s) x(a1+a2,-t) x(-a2,-s)", "x(a1,t*s)");
    b.words("A2-w-square-a1", frac(&["u"]), "w(a1,u) w(a1,u)", "h(a1,-1)");
    b.words("A2-w-square-a2", frac(&["u"]), "w(a2,u) w(a2,u)", "h(a2,-1)");
    b.factors(
        "A2-h-a1-matrix",
        frac(&["u"]),
        vec![b.w("h(a1,u)")],
        vec![Factor::matrix(&[&["u", "0", "0"], &["0", "1/u", "0"], &["0", "0", "1"]])],
    );
    b.factors(
        "A2-h-a2-matrix",
        frac(&["u"]),
        vec![b.w("h(a2,u)")],
        vec![Factor::matrix(&[&["1", "0", "0"], &["0", "u", "0"], &["0", "0", "1/u"]])],
    );
    let nil = quotient_ring(&["u"], None, &[("u^2", "0")]).expect("builtin ring");
    b.words("A2-nilpotent-rank1", nil, "x(-a1,u) x(a1,1)", "h(a1,1-u) x(a1,1+u) x(-a1,u)");
    b.words("A2-X0inv-x1", q(), &format!("({A2_X0})^-1 x(a1,1)"), "x(a2,-1)");
    let bs = || poly(&["b", "s"]);
    b.words("A2-X2inv-local", bs(), &format!("({A2_X0})^-1 {A2_X1}"), "x(a1,b+s-1) x(a2,s-1) x(a1+a2,1-b-s)");
    b.words(
        "A2-X2inv-local-corrected",
        bs(),
        &format!("({A2_X0})^-1 {A2_X1}"),
        "x(a1,b+s-1) x(a2,s-1) x(a1+a2,b+s-1)",
    );
    b.words(
        "A2-X2-local",
        bs(),
        &format!("(({A2_X0})^-1 {A2_X1})^-1"),
        "x(a1,1-b-s) x(a2,1-s) x(a1+a2,s*(s+b-1))",
    );
    b.words(
        "A2-X2-local-corrected",
        bs(),
        &format!("(({A2_X0})^-1 {A2_X1})^-1"),
        "x(a1,1-b-s) x(a2,1-s) x(a1+a2,s*(1-b-s))",
    );
    b.words(
        "A2-X2-consistency",
        bs(),
        "x(a1,b+s-1) x(a2,s-1) x(a1+a2,1-b-s) x(a1,1-b-s) x(a2,1-s) x(a1+a2,s*(s+b-1))",
        "1",
    );
    b.words(
        "A2-X2-consistency-corrected",
        bs(),
        "x(a1,b+s-1) x(a2,s-1) x(a1+a2,b+s-1) x(a1,1-b-s) x(a2,1-s) x(a1+a2,s*(1-b-s))",
        "1",
    );
    b.words("A2-involution", q(), &format!("h(a1+a2,-1) {A2_X0} (h(a1+a2,-1))^-1"), &format!("({A2_X0})^-1 x(a1+a2,1)"));
    b.words("A2-involution-swap", q(), "x(a1,-1) x(a2,-1)", "x(a2,-1) x(a1,-1) x(a1+a2,1)");
    b.words(
        "A2-displacement",
        poly(&["m", "s1", "s2", "s3"]),
        "x(a1,m) x(a2,m) x(a1,s1) x(a2,s2) x(a1+a2,s3) x(a2,-m) x(a1,-m)",
        "x(a1,s1) x(a2,s2) x(a1+a2,s3+(s2-s1)*m)",
    );
    b.words(
        "A2-cent-field-step",
        poly(&["b1", "b2"]),
        &format!("x(a1,b1) x(a2,b2) {A2_X0} (x(a1,b1) x(a2,b2))^-1"),
        &format!("{A2_X0} x(a1+a2,b1-b2)"),
    );
    b.words("A2-cent-family", poly(&["a", "c"]), &format!("x(a1,a) x(a2,a) x(a1+a2,c) {A2_X0}"), &format!("{A2_X0} x(a1,a) x(a2,a) x(a1+a2,c)"));
    b.factors(
        "A2-w-g-matrix",
        q(),
        vec![b.w("w(a1+a2,1)")],
        vec![Factor::matrix(&[&["0", "0", "1"], &["0", "1", "0"], &["-1", "0", "0"]])],
    );
    b.factors(
        "A2-Y-matrix",
        q(),
        vec![b.w("x(a1,1) w(a1+a2,1) x(a2,1)")],
        vec![Factor::matrix(&[&["0", "1", "2"], &["0", "1", "1"], &["-1", "0", "0"]])],
    );
    b.factors(
        "A2-Yprime-matrix",
        q(),
        vec![b.w("x(a2,1) w(a1+a2,-1) x(a1,1)")],
        vec![Factor::matrix(&[&["0", "0", "-1"], &["1", "2", "0"], &["1", "1", "0"]])],
    );
    b.words("A2-wtilde-F7", fp(7), "x(a1,3) x(-a1,-5) x(a1,3)", "w(a1,3)");
    b.words("A2-htilde-F7", fp(7), "x(a2,3) x(-a2,-5) x(a2,3) (w(a2,1))^-1", "h(a2,3)");
    b.factors(
        "A2-A-lift-F7",
        fp(7),
        vec![b.w("x(a1,1) x(-a1,2) x(a2,3) x(-a2,-5) x(a2,3) (w(a2,1))^-1")],
        vec![Factor::matrix(&[&["3", "3", "0"], &["2", "3", "0"], &["0", "0", "5"]])],
    );
    b.factors(
        "A2-B-lift-F7",
        fp(7),
        vec![b.w("x(a2,1) x(-a2,2) x(a1,3) x(-a1,-5) x(a1,3) (w(a1,1))^-1")],
        vec![Factor::matrix(&[&["3", "0", "0"], &["0", "1", "1"], &["0", "3", "1"]])],
    );
    b.trace("A2-trace", "a1+a2", "s^2*t^2-6*s*t+8");
    b.trace("A2-trace-corrected", "a1+a2", "s^2*t^2+6*s*t+8");
    let uv = || frac(&["u", "v"]);
    b.words(
        "A2-rank-one",
        uv(),
        "x(-a1-a2,u) x(a1+a2,v)",
        "x(a1+a2,v/(1+u*v)) h(a1+a2,1+u*v) x(-a1-a2,u/(1+u*v))",
    );
    b.words(
        "A2-rank-one-corrected",
        uv(),
        "x(-a1-a2,u) x(a1+a2,v)",
        "x(a1+a2,v/(1+u*v)) h(a1+a2,1/(1+u*v)) x(-a1-a2,u/(1+u*v))",
    );
    b.out
}

const B2_X0: &str = "x(a,1) x(b,1)";

fn b2() -> Vec<IdentityRecord> {
    let mut b = Builder::new(SystemType::B2, Realization::Adjoint);
    let st = || poly(&["s", "t"]);
    b.words("B2-ab", st(), "x(a,t) x(b,s) x(a,-t) x(b,-s)", "x(a+b,-t*s) x(a+2b,-t*s^2)");
    b.words("B2-a+b,b", st(), "x(a+b,t) x(b,s) x(a+b,-t) x(b,-s)", "x(a+2b,-2*t*s)");
    b.words("B2-X3-comm", q(), &format!("x(a+b,1) {B2_X0} x(a+b,-1) ({B2_X0})^-1"), "x(a+2b,-2)");
    b.words("B2-X1-comm", q(), &format!("x(a,1) {B2_X0} x(a,-1) ({B2_X0})^-1"), "x(a+b,1) x(a+2b,1)");
    b.words("B2-X1-comm-corrected", q(), &format!("x(a,1) {B2_X0} x(a,-1) ({B2_X0})^-1"), "x(a+b,-1) x(a+2b,-1)");
    b.words(
        "B2-cent-final",
        poly(&["b1", "b2", "b3"]),
        &format!("({B2_X0})^-1 (x(a,b1) x(b,b2) x(a+b,b3))^-1 {B2_X0} x(a,b1) x(b,b2) x(a+b,b3)"),
        "x(a+b,b1-b2) x(a+2b,b1+b2^2-2*b1-2*b1*b2+2*b2+2*b3)",
    );
    let g = "x(a,c) x(b,c) x(a+b,(c^2-c)/2) x(a+2b,d)";
    b.words("B2-cent-family", poly(&["c", "d"]), &format!("{g} {B2_X0}"), &format!("{B2_X0} {g}"));
    b.words("B2-short-root", poly(&["s"]), "x(a,1) x(b,s) x(a,-1) x(b,-s)", "x(a+b,-s) x(a+2b,-s^2)");
    let x3 = "x(a,s) x(b,s) x(a+b,c+(s^2-s)/2)";
    b.words("B2-X3-form", poly(&["c", "s"]), &format!("{x3} {B2_X0} ({x3})^-1 ({B2_X0})^-1"), "x(a+2b,-2*c)");
    b.words("B2-X2-from-X1", poly(&["c"]), &format!("(x(a,1) x(a+2b,c))^-1 {B2_X0}"), "x(b,1) x(a+2b,-c)");
    b.push(
        "B2-torus-compare",
        frac(&["p", "q"]),
        Claim::Equation {
            lhs: vec![b.w("h(a+2b,p)")],
            rhs: vec![b.w("h(b,q)")],
            expected: Expected::NamedResiduals {
                entries: vec![residual(1, 1, "q^2-1"), residual(2, 2, "p-q^2")],
                units: vec!["p".into(), "q".into()],
            },
        },
    );
    b.trace("B2-trace", "a", "s^2*t^2-6*s*t+10");
    b.trace("B2-trace-corrected", "a", "s^2*t^2+6*s*t+10");
    b.out
}

const G2_X0: &str = "x(a,1) x(b,1)";
const G2_E: &str = "3/2*(d^2+d)";
const G2_F: &str = "-d^3-3/2*d^2+5/2*d";
const G2_K: &str = "1/4*d^4+3/2*d^3+1/4*d^2";

fn g2_final(i: usize) -> String {
    match i {
        1 => format!("x(a,1) x(a+b,-d) x(a+2b,d^2) x(a+3b,d^3) x(2a+3b,{G2_K})"),
        2 => "x(b,1) x(a+b,d) x(a+2b,-d^2+2*d) x(a+3b,-d^3+3*d^2-3*d) x(2a+3b,-1/4*d^4+3/2*d^3-13/4*d^2)".into(),
        3 => format!("x(a+b,1) x(a+2b,-2*d) x(a+3b,3*d-2*({G2_E})) x(2a+3b,{G2_F})"),
        4 => format!("x(a+2b,1) x(a+3b,3*d) x(2a+3b,{G2_E})"),
        5 => "x(a+3b,1) x(2a+3b,d)".into(),
        6 => "x(2a+3b,1)".into(),
        _ => unreachable!("six positive roots"),
    }
}

fn comm(x: &str, y: &str) -> String {
    format!("({x}) ({y}) ({x})^-1 ({y})^-1")
}

fn g2() -> Vec<IdentityRecord> {
    let mut b = Builder::new(SystemType::G2, Realization::Adjoint);
    let tu = || poly(&["t", "u"]);
    b.words("G2-ab", tu(), &comm("x(a,t)", "x(b,u)"), "x(a+b,t*u) x(a+3b,-t*u^3) x(a+2b,-t*u^2) x(2a+3b,t^2*u^3)");
    b.words("G2-ab2", tu(), &comm("x(a+b,t)", "x(b,u)"), "x(a+2b,2*t*u) x(a+3b,3*t*u^2) x(2a+3b,3*t^2*u)");
    b.words("G2-a-a3b", tu(), &comm("x(a,t)", "x(a+3b,u)"), "x(2a+3b,t*u)");
    b.words("G2-a2b-b", tu(), &comm("x(a+2b,t)", "x(b,u)"), "x(a+3b,-3*t*u)");
    b.words("G2-ab-a2b", tu(), &comm("x(a+b,t)", "x(a+2b,u)"), "x(2a+3b,3*t*u)");
    b.words("G2-short-root", poly(&["s"]), &comm("x(a,1)", "x(b,s)"), "x(a+b,s) x(a+3b,-s^3) x(a+2b,-s^2) x(2a+3b,s^3)");

    let facts: [(&str, (usize, usize), &str); 6] = [
        ("X5X0", (5, 0), "(X6)^-1"),
        ("X4X0", (4, 0), "(X5)^-3 (X6)^-3"),
        ("X3X4", (3, 4), "(X6)^3"),
        ("X3X0", (3, 0), "(X4)^2 (X5)^3 (X6)^6"),
        ("X1X5", (1, 5), "X6"),
        ("X1X0", (1, 0), "X3 (X4)^-1 (X5)^-1"),
    ];
    let identity_x = |i: usize| -> String {
        match i {
            0 => G2_X0.into(),
            1 => "x(a,1)".into(),
            2 => "x(b,1)".into(),
            3 => "x(a+b,1)".into(),
            4 => "x(a+2b,1)".into(),
            5 => "x(a+3b,1)".into(),
            _ => "x(2a+3b,1)".into(),
        }
    };
    let symbolic_x = |i: usize| -> String { if i == 0 { G2_X0.into() } else { g2_final(i) } };
    let subst = |rhs: &str, f: &dyn Fn(usize) -> String| -> String {
        let mut out = rhs.to_string();
        for i in (1..=6).rev() {
            out = out.replace(&format!("X{i}"), &f(i));
        }
        out
    };
    for (tag, (i, j), rhs) in facts {
        b.words(&format!("G2-fact-{tag}"), q(), &comm(&identity_x(i), &identity_x(j)), &subst(rhs, &identity_x));
    }
    for (tag, (i, j), rhs) in facts {
        b.words(
            &format!("G2-fact-{tag}-symbolic"),
            poly(&["d"]),
            &comm(&symbolic_x(i), &symbolic_x(j)),
            &subst(rhs, &symbolic_x),
        );
    }
    let g = "x(a,-d) x(b,-d) x(a+b,-(d^2+d)/2) x(a+2b,2/3*d^3+1/2*d^2-1/6*d) x(a+3b,3/4*d^4+1/2*d^3-1/4*d^2)";
    for i in 1..=6 {
        let target = identity_x(i);
        b.words(&format!("G2-normalizer-X{i}"), poly(&["d"]), &format!("{g} {} ({g})^-1", g2_final(i)), &target);
    }
    b.nilpotent("G2-nilpotent-X1", poly(&["d"]), &g2_final(1), 3);
    b.nilpotent("G2-nilpotent-X2", poly(&["d"]), &g2_final(2), 4);
    b.words("G2-X0-product", poly(&["d"]), &format!("{} {}", g2_final(1), g2_final(2)), G2_X0);
    let x1_pre = "x(a,1) x(a+b,-d) x(a+2b,d^2) x(a+3b,-3/2*d^2+5/2*d-f) x(2a+3b,k)";
    b.words(
        "G2-X2-from-X1",
        poly(&["d", "f", "k"]),
        &format!("({x1_pre})^-1 {G2_X0}"),
        "x(b,1) x(a+b,d) x(a+2b,-d^2+2*d) x(a+3b,9/2*d^2-11/2*d+f) x(2a+3b,3*d^3-3*d^2-k)",
    );
    let cent = "x(a,c) x(b,c) x(a+b,(c-c^2)/2) x(a+2b,-2/3*c^3+1/2*c^2+1/6*c) x(a+3b,3/4*c^4-1/2*c^3-1/4*c^2) x(2a+3b,d)";
    b.words("G2-cent-family", poly(&["c", "d"]), &format!("{cent} {G2_X0}"), &format!("{G2_X0} {cent}"));
    b.words("G2-wtilde-F7", fp(7), "x(a,3) x(-a,-5) x(a,3)", "w(a,3)");
    b.trace("G2-trace-long", "a", "s^2*t^2+8*s*t+14");
    b.out
}

/// Records for one system, in a fixed order.
pub fn builtin_catalog(system: SystemType) -> Vec<IdentityRecord> {
    match system {
        SystemType::A1 => a1(),
        SystemType::A2 => a2(),
        SystemType::B2 => b2(),
        SystemType::G2 => g2(),
    }
}

/// Every builtin record across all systems.
pub fn full_catalog() -> Vec<IdentityRecord> {
    [SystemType::A1, SystemType::A2, SystemType::B2, SystemType::G2].into_iter().flat_map(builtin_catalog).collect()
}

/// Claims that are quantified over an unknown endomorphism and are not checked.
pub fn skipped_claims(system: SystemType) -> Vec<Report> {
    let items: &[&str] = match system {
        SystemType::A1 => &["A1-step1-trace-system: d=s^2, f+2g=4s for an unknown image matrix"],
        SystemType::A2 => &["A2-second-constraint: b=s1-s2 for the image of x(a1,1)"],
        SystemType::B2 => &["B2-X4-local: a=vc=u^2c, 2uc=a(a-1) for an unknown conjugator"],
        SystemType::G2 => &[
            "G2-X5-intermediate: b3, b4, b5 in terms of b1 for the image of x(a+3b,1)",
            "G2-X4-intermediate: b4=a, b5=3d for the image of x(a+2b,1)",
            "G2-X1-intermediate: b4=2d^2+d-2e/3 for the image of x(a,1)",
        ],
    };
    items
        .iter()
        .map(|item| {
            let (name, what) = item.split_once(": ").expect("name and description");
            Report::new(name, Verdict::Skipped, format!("quantified over the endomorphism: {what}"), Instant::now())
        })
        .collect()
}

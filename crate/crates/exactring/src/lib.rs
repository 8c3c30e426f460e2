//! Exact arithmetic for symbolic verification: arbitrary-precision rationals,
//! sparse multivariate polynomials, quotients by ordered rewrite rules,
//! fraction fields, and the modular rings Z/n.

pub mod element;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod spec;

pub use element::{rational_mod, ArithOp, RingElement};
pub use error::RingError;
pub use expr::{parse_element, Expr};
pub use matrix::Matrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{Monomial, Poly};
pub use spec::{Ring, RingKind, RingSpec, RewriteRule};

/// Build a rewrite rule from text, e.g. `rule(&ring, "c3^2", "-c2^3")`.
pub fn rule(ring: &Ring, lhs: &str, rhs: &str) -> Result<RewriteRule, RingError> {
    let poly_ring = RingSpec::polynomial(&ring.variables().iter().map(|s| s.as_str()).collect::<Vec<_>>())?;
    let l = parse_element(&poly_ring, lhs)?;
    let l = l.as_poly().expect("polynomial");
    if l.len() != 1 || !l.terms().next().is_some_and(|(_, c)| num_traits::One::is_one(c)) {
        return Err(RingError::InvalidSpec(format!("rule left side {lhs} must be a monic monomial")));
    }
    let lhs = l.terms().next().expect("one term").0.clone();
    let rhs = parse_element(&poly_ring, rhs)?.as_poly().expect("polynomial").clone();
    Ok(RewriteRule { lhs, rhs })
}

/// Quotient ring from textual rules.
pub fn quotient_ring(vars: &[&str], weights: Option<&[u32]>, rules: &[(&str, &str)]) -> Result<Ring, RingError> {
    let base = RingSpec::polynomial(vars)?;
    let rules = rules.iter().map(|(l, r)| rule(&base, l, r)).collect::<Result<Vec<_>, _>>()?;
    match weights {
        Some(w) => RingSpec::quotient_weighted(vars, w, rules),
        None => RingSpec::quotient(vars, rules),
    }
}

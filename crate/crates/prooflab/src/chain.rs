//! The G2 entry-elimination chain: successive constraints read off the residual of
//! `g X6 = x_{2a+3b}(a) g` with `X6` in the centralizer family of `X0`.

use std::sync::OnceLock;
use std::time::Instant;

use chevgroup::{GroupWord, Realization, SystemType};
use exactring::{quotient_ring, parse_element, Poly, Ring, RingSpec};

use crate::error::ProofError;
use crate::record::{cached_group, Report, Verdict};

pub const CHAIN_VARS: [&str; 8] = ["a", "b", "d", "c1", "c2", "c3", "c4", "c5"];
const CHAIN_WEIGHTS: [u32; 8] = [1, 7, 1, 1, 2, 4, 5, 1];
/// Parameters that are units; `b` is radical.
const UNIT_VARS: [&str; 2] = ["a", "d"];
const RADICAL_VAR: &str = "b";

const X6: &str = "x(a,b) x(b,b) x(a+b,(b-b^2)/2) x(a+2b,-2/3*b^3+1/2*b^2+1/6*b) \
                  x(a+3b,3/4*b^4-1/2*b^3-1/4*b^2) x(2a+3b,d)";
const CONJUGATOR: &str = "x(-a,c1) x(-a-b,c2) x(-a-2b,c3) x(-a-3b,c4) x(-2a-3b,c5)";

/// One step of the chain: the claimed polynomial, and the rewrite rules it licenses
/// for later stages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainStage {
    pub name: &'static str,
    pub claim: &'static str,
    pub rules: &'static [(&'static str, &'static str)],
    /// Helper constraints that make the listed entries usable but are not claimed steps.
    pub auxiliary: bool,
}

const fn stage(
    name: &'static str,
    claim: &'static str,
    rules: &'static [(&'static str, &'static str)],
    auxiliary: bool,
) -> ChainStage {
    ChainStage { name, claim, rules, auxiliary }
}

/// Stages in execution order.
pub const G2_CHAIN: &[ChainStage] = &[
    stage("b2c4", "b^2*c4", &[("b^2*c4", "0")], false),
    stage("ac5", "a*c5", &[("c5", "0")], false),
    stage("c3^3", "c3^3", &[("c3^3", "0")], false),
    stage("aux:ac4-b", "a*c4-b", &[("b", "a*c4")], true),
    stage("aux:b2c3", "b^2*c3", &[("c3*c4^2", "0")], true),
    stage("b-ac2^2", "b-a*c2^2", &[("c4", "c2^2")], false),
    stage("c4-c2^2", "c4-c2^2", &[], false),
    stage("c3^2+c2^3", "c3^2+c2^3", &[("c3^2", "-c2^3")], false),
    stage("c2^4", "c2^4", &[("c2^4", "0")], false),
    stage("bc1", "b*c1", &[("a*c1*c2^2", "0")], false),
    stage("final-2b", "2*b", &[("c2^2", "0")], false),
];

fn base_ring() -> Result<Ring, ProofError> {
    Ok(RingSpec::polynomial(&CHAIN_VARS)?)
}

fn chain_ring(rules: &[(&str, &str)]) -> Result<Ring, ProofError> {
    Ok(quotient_ring(&CHAIN_VARS, Some(&CHAIN_WEIGHTS), rules)?)
}

/// Nonzero entries of `g X6 - x_{2a+3b}(a) g`, 1-based, over `Q[a,b,d,c1..c5]`.
pub fn chain_residual() -> Result<&'static [(usize, usize, Poly)], ProofError> {
    static CELL: OnceLock<Vec<(usize, usize, Poly)>> = OnceLock::new();
    if let Some(v) = CELL.get() {
        return Ok(v);
    }
    let ring = base_ring()?;
    let group = cached_group(SystemType::G2, Realization::Adjoint)?;
    let word = |t: &str| GroupWord::parse(SystemType::G2, t);
    let g = group.evaluate_word(&word(CONJUGATOR)?, &ring)?;
    let x6 = group.evaluate_word(&word(X6)?, &ring)?;
    let top = group.evaluate_word(&word("x(2a+3b,a)")?, &ring)?;
    let res = g.try_mul(&x6)?.try_sub(&top.try_mul(&g)?)?;
    let entries = res
        .nonzero_entries()
        .into_iter()
        .map(|(i, j, e)| (i + 1, j + 1, e.as_poly().expect("polynomial entry").clone()))
        .collect();
    Ok(CELL.get_or_init(|| entries))
}

/// A unit of the local setting: a polynomial in the unit variables and `b` whose
/// reduction modulo `b` is a single nonzero term.
fn is_unit(q: &Poly) -> bool {
    let idx = |v: &str| CHAIN_VARS.iter().position(|x| *x == v).expect("chain variable");
    let allowed: Vec<usize> = UNIT_VARS.iter().chain([&RADICAL_VAR]).map(|v| idx(v)).collect();
    let b = idx(RADICAL_VAR);
    let ok_vars = q.terms().all(|(m, _)| m.iter().enumerate().all(|(i, &e)| e == 0 || allowed.contains(&i)));
    ok_vars && q.terms().filter(|(m, _)| m[b] == 0).count() == 1
}

fn render(p: &Poly) -> String {
    let names: Vec<String> = CHAIN_VARS.iter().map(|s| s.to_string()).collect();
    p.display_with(&names, &CHAIN_WEIGHTS)
}

/// Check that `claim` occurs, up to a unit, among the residual entries after reducing
/// by `rules`. A claim that already reduces to zero is implied by the earlier rules.
pub fn check_chain_claim(name: &str, claim: &str, rules: &[(&str, &str)]) -> Result<Report, ProofError> {
    let start = Instant::now();
    let ring = chain_ring(rules)?;
    let target = ring.reduce(parse_element(&base_ring()?, claim)?.as_poly().expect("polynomial").clone());
    if target.is_zero() {
        return Ok(Report::new(name, Verdict::Pass, "implied: reduces to 0 under earlier constraints", start));
    }
    let mut hits = Vec::new();
    for (i, j, e) in chain_residual()? {
        let e = ring.reduce(e.clone());
        if e.is_zero() {
            continue;
        }
        if let Some(q) = e.div_exact(&target) {
            if is_unit(&q) {
                hits.push(format!("({i},{j}) = ({}) * ({})", render(&q), render(&target)));
            }
        }
    }
    if hits.is_empty() {
        let msg = format!("no residual entry is a unit multiple of {}", render(&target));
        return Ok(Report::new(name, Verdict::Fail, msg, start));
    }
    let more = if hits.len() > 1 { format!(" (+{} more)", hits.len() - 1) } else { String::new() };
    Ok(Report::new(name, Verdict::Pass, format!("{}{more}", hits[0]), start))
}

fn rules_before(index: usize) -> Vec<(&'static str, &'static str)> {
    G2_CHAIN[..index].iter().flat_map(|s| s.rules.iter().copied()).collect()
}

/// Run one stage with the rules of every earlier stage adjoined.
pub fn entry_chain_g2(stage: &str) -> Result<Report, ProofError> {
    let index = G2_CHAIN.iter().position(|s| s.name == stage).ok_or_else(|| ProofError::UnknownStage(stage.into()))?;
    let s = &G2_CHAIN[index];
    check_chain_claim(&format!("G2-chain-{}", s.name), s.claim, &rules_before(index))
}

/// Every stage in order.
pub fn run_entry_chain() -> Result<Vec<Report>, ProofError> {
    G2_CHAIN.iter().map(|s| entry_chain_g2(s.name)).collect()
}

/// Normal form of `b` once every stage's rules are adjoined (with 2 and `a` inverted).
pub fn final_normal_form_of_b() -> Result<Poly, ProofError> {
    let ring = chain_ring(&rules_before(G2_CHAIN.len()))?;
    let b = parse_element(&base_ring()?, RADICAL_VAR)?;
    Ok(ring.reduce(b.as_poly().expect("polynomial").clone()))
}

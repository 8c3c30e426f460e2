//! Identity records, the uniform runner and report type, mutation, and catalog
//! import/export.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use chevgroup::{ChevalleyGroup, GroupWord, Letter, Realization, SystemType};
use decomp::verify_matrices;
use exactring::{BigRational, Expr, Matrix, Poly, Ring, RingElement, RingKind, RingSpec};
use num_traits::One;
use rootsys::Root;
use serde::{Deserialize, Serialize};

use crate::error::ProofError;

/// One side of an equation: a group word or an explicit matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Word(GroupWord),
    Matrix(Vec<Vec<Expr>>),
}

impl Factor {
    pub fn word(system: SystemType, text: &str) -> Factor {
        Factor::Word(GroupWord::parse(system, text).unwrap_or_else(|e| panic!("builtin word {text:?}: {e}")))
    }

    pub fn matrix(rows: &[&[&str]]) -> Factor {
        Factor::Matrix(
            rows.iter()
                .map(|r| r.iter().map(|t| Expr::parse(t).unwrap_or_else(|e| panic!("builtin entry {t:?}: {e}"))).collect())
                .collect(),
        )
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Word(w) => write!(f, "{w}"),
            Factor::Matrix(rows) => {
                let rows: Vec<String> = rows
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
                    .collect();
                write!(f, "[{}]", rows.join(", "))
            }
        }
    }
}

/// A claimed entry `(row, col)` of `lhs - rhs`, up to a unit factor.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedResidual {
    pub row: usize,
    pub col: usize,
    pub poly: Expr,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expected {
    ZeroResidual,
    /// Listed entries of `lhs - rhs` equal the given polynomials times units, where a
    /// unit is a nonzero constant times a monomial in the variables of `units`.
    NamedResiduals { entries: Vec<NamedResidual>, units: Vec<String> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Claim {
    Equation { lhs: Vec<Factor>, rhs: Vec<Factor>, expected: Expected },
    /// Trace of `x_root(t) x_{-root}(s)` equals a polynomial in `s, t`.
    Trace { root: Root, expected: Expr },
    /// `(word - 1)^power = 0`.
    Nilpotent { word: GroupWord, power: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityRecord {
    pub name: String,
    pub system: SystemType,
    pub realization: Realization,
    pub ring: Ring,
    pub claim: Claim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub verdict: Verdict,
    /// `0` on success, otherwise a normal-form witness or a reason.
    pub residual: String,
    pub millis: u64,
}

impl Report {
    pub fn new(name: &str, verdict: Verdict, residual: impl Into<String>, start: Instant) -> Report {
        Report { name: name.to_string(), verdict, residual: residual.into(), millis: start.elapsed().as_millis() as u64 }
    }
}

/// Shared group objects, built once per (system, realization).
pub fn cached_group(system: SystemType, real: Realization) -> Result<ChevalleyGroup, ProofError> {
    static CACHE: OnceLock<Mutex<HashMap<(SystemType, Realization), Arc<ChevalleyGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().expect("group cache").get(&(system, real)) {
        return Ok((**g).clone());
    }
    let g = ChevalleyGroup::new(system, real)?;
    cache.lock().expect("group cache").insert((system, real), Arc::new(g.clone()));
    Ok(g)
}

pub(crate) fn product(group: &ChevalleyGroup, factors: &[Factor], ring: &Ring) -> Result<Matrix, ProofError> {
    let mut acc = Matrix::identity(ring, group.dim());
    for f in factors {
        let m = match f {
            Factor::Word(w) => group.evaluate_word(w, ring)?,
            Factor::Matrix(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|e| e.eval(ring)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Matrix::from_rows(ring, rows)?
            }
        };
        acc = acc.try_mul(&m)?;
    }
    Ok(acc)
}

/// Up to three nonzero entries of a residual, 1-based.
pub fn summarize(m: &Matrix) -> String {
    let nz = m.nonzero_entries();
    if nz.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<String> = nz.iter().take(3).map(|(i, j, v)| format!("({},{}): {}", i + 1, j + 1, v)).collect();
    if nz.len() > 3 {
        parts.push(format!("{} nonzero entries", nz.len()));
    }
    parts.join("; ")
}

/// Monomial-only rule sets have unique normal forms, so a nonzero residual there is
/// a definite failure.
fn failing(ring: &Ring) -> Verdict {
    if ring.rules().iter().any(|r| !r.rhs.is_zero()) {
        Verdict::Inconclusive
    } else {
        Verdict::Fail
    }
}

/// `a = u * b` for a unit `u`; returns `u` rendered when it exists.
pub fn unit_ratio(a: &RingElement, b: &RingElement, units: &[String]) -> Option<String> {
    if a.is_zero() || b.is_zero() {
        return (a.is_zero() && b.is_zero()).then(|| "1".into());
    }
    if a.as_residue().is_some() {
        let u = a.try_mul(&b.invert().ok()?).ok()?;
        return Some(u.to_string());
    }
    let ring = a.ring();
    let one = Poly::one(ring.nvars());
    let (an, ad) = (a.numerator()?, a.denominator().unwrap_or(&one));
    let (bn, bd) = (b.numerator()?, b.denominator().unwrap_or(&one));
    let top = an.mul(bd);
    let bot = ad.mul(bn);
    let w = ring.weights();
    let (tm, tc) = top.leading(w)?;
    let (bm, bc) = bot.leading(w)?;
    let c = tc / bc;
    let mut pos = vec![0u32; ring.nvars()];
    let mut neg = vec![0u32; ring.nvars()];
    for k in 0..ring.nvars() {
        let d = tm[k] as i64 - bm[k] as i64;
        if d != 0 && !units.contains(&ring.variables()[k]) {
            return None;
        }
        if d > 0 {
            pos[k] = d as u32;
        } else {
            neg[k] = (-d) as u32;
        }
    }
    let lhs = top.mul_monomial(&neg, &BigRational::one());
    let rhs = bot.mul_monomial(&pos, &c);
    if ring.kind() == RingKind::Quotient {
        if ring.reduce(lhs.sub(&rhs)).is_zero() {
            return Some(render_unit(&c, &pos, &neg, ring.variables()));
        }
        return None;
    }
    (lhs == rhs).then(|| render_unit(&c, &pos, &neg, ring.variables()))
}

fn render_unit(c: &BigRational, pos: &[u32], neg: &[u32], names: &[String]) -> String {
    let mut s = c.to_string();
    for (k, name) in names.iter().enumerate() {
        if pos[k] > 0 {
            s.push_str(&format!("*{name}^{}", pos[k]));
        }
        if neg[k] > 0 {
            s.push_str(&format!("*{name}^-{}", neg[k]));
        }
    }
    s
}

/// Evaluate a record. Structural problems (unknown variables, realization mismatch)
/// are errors; a false identity is a FAIL report.
pub fn run_identity(rec: &IdentityRecord) -> Result<Report, ProofError> {
    let start = Instant::now();
    let group = cached_group(rec.system, rec.realization)?;
    let ring = &rec.ring;
    match &rec.claim {
        Claim::Equation { lhs, rhs, expected } => {
            let l = product(&group, lhs, ring)?;
            let r = product(&group, rhs, ring)?;
            match expected {
                Expected::ZeroResidual => {
                    let v = verify_matrices(&l, &r, rec.realization == Realization::Pgl3)?;
                    if v.holds {
                        Ok(Report::new(&rec.name, Verdict::Pass, "0", start))
                    } else {
                        Ok(Report::new(&rec.name, failing(ring), summarize(&v.residual), start))
                    }
                }
                Expected::NamedResiduals { entries, units } => {
                    let res = l.try_sub(&r)?;
                    let mut found = Vec::new();
                    for e in entries {
                        if e.row == 0 || e.col == 0 || e.row > res.rows() || e.col > res.cols() {
                            return Err(ProofError::Record(rec.name.clone(), format!("entry ({},{})", e.row, e.col)));
                        }
                        let actual = res.get(e.row - 1, e.col - 1);
                        let claimed = e.poly.eval(ring)?;
                        match unit_ratio(actual, &claimed, units) {
                            Some(u) => found.push(format!("({},{}) = {} * ({})", e.row, e.col, u, e.poly)),
                            None => {
                                let msg = format!("({},{}): {} is not a unit multiple of {}", e.row, e.col, actual, e.poly);
                                return Ok(Report::new(&rec.name, failing(ring), msg, start));
                            }
                        }
                    }
                    Ok(Report::new(&rec.name, Verdict::Pass, found.join("; "), start))
                }
            }
        }
        Claim::Trace { root, expected } => {
            let tr = group.trace_poly(root)?;
            let want = expected.eval(tr.ring())?;
            let diff = tr.try_sub(&want)?;
            if diff.is_zero() {
                Ok(Report::new(&rec.name, Verdict::Pass, "0", start))
            } else {
                Ok(Report::new(&rec.name, Verdict::Fail, format!("trace = {tr}; difference {diff}"), start))
            }
        }
        Claim::Nilpotent { word, power } => {
            let m = group.evaluate_word(word, ring)?;
            let n = m.try_sub(&Matrix::identity(ring, group.dim()))?.pow(*power);
            if n.is_zero() {
                Ok(Report::new(&rec.name, Verdict::Pass, "0", start))
            } else {
                Ok(Report::new(&rec.name, failing(ring), summarize(&n), start))
            }
        }
    }
}

/// Run a list of records; errors become FAIL reports. Output is sorted by name.
pub fn run_catalog(records: &[IdentityRecord]) -> Vec<Report> {
    let mut out: Vec<Report> = records
        .iter()
        .map(|r| {
            let start = Instant::now();
            run_identity(r).unwrap_or_else(|e| Report::new(&r.name, Verdict::Fail, format!("error: {e}"), start))
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// `e` with the coefficient of its leading term increased by one.
fn bump(e: &Expr, ring: &Ring) -> Option<Expr> {
    let v = e.eval(ring).ok()?;
    let one = RingElement::one(ring);
    if v.as_residue().is_some() {
        return Some(Expr::from_element(&v.try_add(&one).ok()?));
    }
    let num = v.numerator()?;
    let Some((m, _)) = num.leading(ring.weights()) else {
        return Some(Expr::from_element(&one));
    };
    let term = Poly::term(m.clone(), BigRational::one());
    let delta = match v.denominator() {
        Some(d) => RingElement::fraction(ring, term, d.clone()).ok()?,
        None => RingElement::poly(ring, term).ok()?,
    };
    Some(Expr::from_element(&v.try_add(&delta).ok()?))
}

fn bump_letter(w: &GroupWord, ring: &Ring, pick: &dyn Fn(&Letter) -> bool) -> Option<GroupWord> {
    for (idx, l) in w.letters.iter().enumerate() {
        let replaced = match l {
            Letter::Group(inner, k) => bump_letter(inner, ring, pick).map(|ni| Letter::Group(ni, *k)),
            _ if !pick(l) => None,
            Letter::X(r, p) => Some(Letter::X(r.clone(), bump(p, ring)?)),
            Letter::H(r, p) => Some(Letter::H(r.clone(), bump(p, ring)?)),
            Letter::W(r, p) => Some(Letter::W(r.clone(), bump(p, ring)?)),
            Letter::T(i, p) => Some(Letter::T(*i, bump(p, ring)?)),
        };
        if let Some(nl) = replaced {
            let mut out = w.clone();
            out.letters[idx] = nl;
            return Some(out);
        }
    }
    None
}

fn bump_factors(fs: &[Factor], ring: &Ring, pick: &dyn Fn(&Letter) -> bool) -> Option<Vec<Factor>> {
    for (k, f) in fs.iter().enumerate() {
        if let Factor::Word(w) = f {
            if let Some(nw) = bump_letter(w, ring, pick) {
                let mut out = fs.to_vec();
                out[k] = Factor::Word(nw);
                return Some(out);
            }
        }
    }
    None
}

fn bump_matrix(fs: &[Factor], ring: &Ring) -> Option<Vec<Factor>> {
    for (k, f) in fs.iter().enumerate() {
        if let Factor::Matrix(rows) = f {
            let mut rows = rows.clone();
            for i in 0..rows.len() {
                for j in 0..rows[i].len() {
                    if !rows[i][j].is_literal_zero() {
                        rows[i][j] = bump(&rows[i][j], ring)?;
                        let mut out = fs.to_vec();
                        out[k] = Factor::Matrix(rows);
                        return Some(out);
                    }
                }
            }
        }
    }
    None
}

/// A one-coefficient perturbation of the record: the leading coefficient of one
/// parameter (or claimed polynomial) is increased by one.
pub fn mutate(rec: &IdentityRecord) -> Option<IdentityRecord> {
    let ring = &rec.ring;
    let is_x = |l: &Letter| matches!(l, Letter::X(..));
    let is_param = |l: &Letter| !matches!(l, Letter::Group(..));
    let claim = match &rec.claim {
        Claim::Equation { lhs, rhs, expected: Expected::NamedResiduals { entries, units } } => {
            let mut entries = entries.clone();
            let first = entries.first_mut()?;
            first.poly = bump(&first.poly, ring)?;
            Claim::Equation {
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                expected: Expected::NamedResiduals { entries, units: units.clone() },
            }
        }
        Claim::Equation { lhs, rhs, expected } => {
            let (l, r) = if let Some(r) = bump_factors(rhs, ring, &is_x) {
                (lhs.clone(), r)
            } else if let Some(l) = bump_factors(lhs, ring, &is_x) {
                (l, rhs.clone())
            } else if let Some(r) = bump_factors(rhs, ring, &is_param) {
                (lhs.clone(), r)
            } else if let Some(l) = bump_factors(lhs, ring, &is_param) {
                (l, rhs.clone())
            } else if let Some(r) = bump_matrix(rhs, ring) {
                (lhs.clone(), r)
            } else {
                (bump_matrix(lhs, ring)?, rhs.clone())
            };
            Claim::Equation { lhs: l, rhs: r, expected: expected.clone() }
        }
        Claim::Trace { root, expected } => {
            let st = RingSpec::polynomial(&["s", "t"]).ok()?;
            Claim::Trace { root: root.clone(), expected: bump(expected, &st)? }
        }
        Claim::Nilpotent { word, power } => {
            let symbolic_x = |l: &Letter| matches!(l, Letter::X(_, p) if !p.variables().is_empty());
            Claim::Nilpotent { word: bump_letter(word, ring, &symbolic_x)?, power: *power }
        }
    };
    Some(IdentityRecord { name: format!("{}~mutant", rec.name), claim, ..rec.clone() })
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FactorRepr {
    Word(String),
    Matrix(Vec<Vec<String>>),
}

#[derive(Serialize, Deserialize)]
struct ResidualRepr {
    row: usize,
    col: usize,
    poly: String,
}

#[derive(Serialize, Deserialize)]
struct RecordRepr {
    name: String,
    system: String,
    realization: String,
    ring: RingSpec,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lhs: Option<Vec<FactorRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rhs: Option<Vec<FactorRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    residuals: Option<Vec<ResidualRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    units: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    root: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    power: Option<u32>,
}

fn factors_repr(fs: &[Factor]) -> Vec<FactorRepr> {
    fs.iter()
        .map(|f| match f {
            Factor::Word(w) => FactorRepr::Word(w.to_string()),
            Factor::Matrix(rows) => {
                FactorRepr::Matrix(rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect())
            }
        })
        .collect()
}

fn factors_from(system: SystemType, fs: Vec<FactorRepr>) -> Result<Vec<Factor>, ProofError> {
    fs.into_iter()
        .map(|f| match f {
            FactorRepr::Word(w) => Ok(Factor::Word(GroupWord::parse(system, &w)?)),
            FactorRepr::Matrix(rows) => Ok(Factor::Matrix(
                rows.iter()
                    .map(|r| r.iter().map(|e| Expr::parse(e)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?,
            )),
        })
        .collect()
}

impl IdentityRecord {
    fn repr(&self) -> RecordRepr {
        let mut r = RecordRepr {
            name: self.name.clone(),
            system: self.system.to_string(),
            realization: self.realization.to_string(),
            ring: (*self.ring).clone(),
            kind: String::new(),
            lhs: None,
            rhs: None,
            residuals: None,
            units: None,
            root: None,
            expected: None,
            word: None,
            power: None,
        };
        match &self.claim {
            Claim::Equation { lhs, rhs, expected } => {
                r.lhs = Some(factors_repr(lhs));
                r.rhs = Some(factors_repr(rhs));
                match expected {
                    Expected::ZeroResidual => r.kind = "zero_residual".into(),
                    Expected::NamedResiduals { entries, units } => {
                        r.kind = "named_residuals".into();
                        r.residuals = Some(
                            entries
                                .iter()
                                .map(|e| ResidualRepr { row: e.row, col: e.col, poly: e.poly.to_string() })
                                .collect(),
                        );
                        r.units = Some(units.clone());
                    }
                }
            }
            Claim::Trace { root, expected } => {
                r.kind = "trace".into();
                r.root = Some(root.alias());
                r.expected = Some(expected.to_string());
            }
            Claim::Nilpotent { word, power } => {
                r.kind = "nilpotent".into();
                r.word = Some(word.to_string());
                r.power = Some(*power);
            }
        }
        r
    }

    fn from_repr(r: RecordRepr) -> Result<IdentityRecord, ProofError> {
        let system: SystemType = r.system.parse()?;
        let realization: Realization = r.realization.parse()?;
        let bad = |what: &str| ProofError::Record(r.name.clone(), format!("missing {what}"));
        let claim = match r.kind.as_str() {
            "zero_residual" | "named_residuals" => {
                let lhs = factors_from(system, r.lhs.ok_or_else(|| bad("lhs"))?)?;
                let rhs = factors_from(system, r.rhs.ok_or_else(|| bad("rhs"))?)?;
                let expected = if r.kind == "zero_residual" {
                    Expected::ZeroResidual
                } else {
                    let entries = r
                        .residuals
                        .ok_or_else(|| bad("residuals"))?
                        .into_iter()
                        .map(|e| Ok(NamedResidual { row: e.row, col: e.col, poly: Expr::parse(&e.poly)? }))
                        .collect::<Result<Vec<_>, ProofError>>()?;
                    Expected::NamedResiduals { entries, units: r.units.unwrap_or_default() }
                };
                Claim::Equation { lhs, rhs, expected }
            }
            "trace" => Claim::Trace {
                root: system.parse_root(&r.root.ok_or_else(|| bad("root"))?)?,
                expected: Expr::parse(&r.expected.ok_or_else(|| bad("expected"))?)?,
            },
            "nilpotent" => Claim::Nilpotent {
                word: GroupWord::parse(system, &r.word.ok_or_else(|| bad("word"))?)?,
                power: r.power.ok_or_else(|| bad("power"))?,
            },
            other => return Err(ProofError::Record(r.name.clone(), format!("unknown kind {other}"))),
        };
        Ok(IdentityRecord { name: r.name, system, realization, ring: Arc::new(r.ring), claim })
    }
}

/// One JSON object per line.
pub fn catalog_to_json(records: &[IdentityRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(&r.repr()).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn catalog_from_json(text: &str) -> Result<Vec<IdentityRecord>, ProofError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let repr: RecordRepr = serde_json::from_str(l).map_err(|e| ProofError::Catalog(e.to_string()))?;
            IdentityRecord::from_repr(repr)
        })
        .collect()
}

//! Centralizer parametrizations: symbolic checks, exhaustive scans over prime
//! fields, and the linear centralizer of a 3x3 matrix.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::Instant;

use chevgroup::{GroupWord, Realization, SystemType};
use decomp::weyl_representatives;
use exactring::linalg::{nullspace, rank};
use exactring::{BigRational, Expr, Matrix, RingElement, RingSpec};
use num_traits::Zero;
use shacheck::{default_realization, generate_group, ModMatrix, DEFAULT_CAP};

use crate::error::ProofError;
use crate::record::{cached_group, product, run_identity, Claim, Expected, Factor, IdentityRecord, Report, Verdict};

/// A claimed centralizer: `generic` with `constraints` substituted commutes with `x0`
/// for all values of the `free` parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralizerFamily {
    pub name: String,
    pub system: SystemType,
    pub realization: Realization,
    pub x0: GroupWord,
    pub generic: Factor,
    pub constraints: BTreeMap<String, Expr>,
    pub free: Vec<String>,
}

impl CentralizerFamily {
    /// The generic element with the constraints substituted.
    pub fn element(&self) -> Factor {
        let map: HashMap<String, Expr> = self.constraints.clone().into_iter().collect();
        substitute(&self.generic, &map)
    }
}

fn substitute(f: &Factor, map: &HashMap<String, Expr>) -> Factor {
    match f {
        Factor::Word(w) => Factor::Word(w.substitute(map)),
        Factor::Matrix(rows) => Factor::Matrix(rows.iter().map(|r| r.iter().map(|e| e.substitute(map)).collect()).collect()),
    }
}

fn family(
    name: &str,
    system: SystemType,
    realization: Realization,
    x0: &str,
    generic: Factor,
    constraints: &[(&str, &str)],
    free: &[&str],
) -> CentralizerFamily {
    CentralizerFamily {
        name: name.to_string(),
        system,
        realization,
        x0: GroupWord::parse(system, x0).expect("builtin word"),
        generic,
        constraints: constraints.iter().map(|(k, v)| (k.to_string(), Expr::parse(v).expect("builtin expr"))).collect(),
        free: free.iter().map(|s| s.to_string()).collect(),
    }
}

/// The builtin centralizer families, one or two per system.
pub fn builtin_families() -> Vec<CentralizerFamily> {
    use SystemType::*;
    vec![
        family(
            "A1-cent-x-a",
            A1,
            Realization::A1Std,
            "x(a,1)",
            Factor::matrix(&[&["a", "b", "2*h"], &["0", "a", "0"], &["0", "h", "a"]]),
            &[],
            &["a", "b", "h"],
        ),
        family(
            "A1-cent-x-minus-a",
            A1,
            Realization::A1Std,
            "x(-a,-1)",
            Factor::matrix(&[&["a", "0", "0"], &["b", "a", "2*c"], &["c", "0", "a"]]),
            &[],
            &["a", "b", "c"],
        ),
        family(
            "A2-cent-X0",
            A2,
            Realization::Pgl3,
            "x(a1,1) x(a2,1)",
            Factor::word(A2, "x(a1,b1) x(a2,b2) x(a1+a2,b3)"),
            &[("b1", "a"), ("b2", "a"), ("b3", "b")],
            &["a", "b"],
        ),
        family(
            "B2-cent-X0",
            B2,
            Realization::Adjoint,
            "x(a,1) x(b,1)",
            Factor::word(B2, "x(a,b1) x(b,b2) x(a+b,b3) x(a+2b,b4)"),
            &[("b1", "b"), ("b2", "b"), ("b3", "(b^2-b)/2"), ("b4", "d")],
            &["b", "d"],
        ),
        family(
            "G2-cent-X0",
            G2,
            Realization::Adjoint,
            "x(a,1) x(b,1)",
            Factor::word(G2, "x(a,b1) x(b,b2) x(a+b,b3) x(a+2b,b4) x(a+3b,b5) x(2a+3b,b6)"),
            &[
                ("b1", "b"),
                ("b2", "b"),
                ("b3", "(b-b^2)/2"),
                ("b4", "-2/3*b^3+1/2*b^2+1/6*b"),
                ("b5", "3/4*b^4-1/2*b^3-1/4*b^2"),
                ("b6", "d"),
            ],
            &["b", "d"],
        ),
    ]
}

pub fn builtin_family(name: &str) -> Option<CentralizerFamily> {
    builtin_families().into_iter().find(|f| f.name == name)
}

/// PASS iff the constrained element commutes with `x0` identically in the free parameters.
pub fn centralizer_check(fam: &CentralizerFamily) -> Result<Report, ProofError> {
    let free: Vec<&str> = fam.free.iter().map(String::as_str).collect();
    let x0 = Factor::Word(fam.x0.clone());
    let rec = IdentityRecord {
        name: fam.name.clone(),
        system: fam.system,
        realization: fam.realization,
        ring: RingSpec::polynomial(&free)?,
        claim: Claim::Equation {
            lhs: vec![fam.element(), x0.clone()],
            rhs: vec![x0, fam.element()],
            expected: Expected::ZeroResidual,
        },
    };
    run_identity(&rec)
}

/// Exhaustive centralizer of an element of a finite elementary group.
#[derive(Clone, Debug)]
pub struct CentralizerScan {
    pub count: usize,
    /// Canonical forms of the centralizing elements.
    pub elements: BTreeSet<ModMatrix>,
    /// Number of `(torus, Weyl, unipotent)` triples swept.
    pub sweep: u128,
}

/// Default bound on the number of swept triples.
pub const DEFAULT_SWEEP_CAP: u128 = 1_000_000;

fn all_tuples(p: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|t| (0..p).map(move |v| [t.clone(), vec![v]].concat())).collect();
    }
    out
}

/// Centralizer of `x0` in the elementary group over `F_p`, computed by sweeping every
/// element in its Bruhat form `u t n_w u'`. For each `y = t n_w u'` the admissible `u`
/// satisfy `u^{-1} x0 u = y x0 y^{-1}` and are looked up in a table over the unipotent radical.
pub fn centralizer_bruteforce(
    system: SystemType,
    p: u64,
    x0: &GroupWord,
    cap: u128,
) -> Result<CentralizerScan, ProofError> {
    let realization = default_realization(system);
    let projective = realization == Realization::Pgl3;
    let group = cached_group(system, realization)?;
    let ring = RingSpec::modular(p)?;
    let to_mod = |m: &Matrix| ModMatrix::from_matrix(m).map_err(|e| ProofError::Unsupported(e.to_string()));
    let x0m = to_mod(&group.evaluate_word(x0, &ring)?)?;
    let dim = x0m.dim();

    let positive = system.positive_roots();
    let mut unipotent = vec![ModMatrix::identity(dim, p as u32)];
    for r in &positive {
        let steps = (0..p)
            .map(|t| to_mod(&group.root_element(r, &RingElement::from_int(&ring, t as i64))?))
            .collect::<Result<Vec<_>, _>>()?;
        unipotent = unipotent.iter().flat_map(|u| steps.iter().map(move |s| u.mul(s))).collect();
    }
    let mut torus = BTreeSet::new();
    for units in all_tuples(p - 1, system.rank()) {
        let mut t = ModMatrix::identity(dim, p as u32);
        for (i, u) in units.iter().enumerate() {
            let h = group.torus_element(&system.simple_root(i), &RingElement::from_int(&ring, *u as i64 + 1))?;
            t = t.mul(&to_mod(&h)?);
        }
        torus.insert(t.canonical(projective));
    }
    let weyl = weyl_representatives(system)
        .iter()
        .map(|w| to_mod(&group.evaluate_word(&w.representative(system), &ring)?))
        .collect::<Result<Vec<_>, _>>()?;

    let sweep = (torus.len() * weyl.len() * unipotent.len()) as u128;
    if sweep > cap {
        return Err(ProofError::Unsupported(format!("centralizer sweep of {sweep} exceeds the cap {cap}")));
    }
    let inverse = |m: &ModMatrix| m.inverse().ok_or_else(|| ProofError::Unsupported("singular group element".into()));
    let mut lookup: HashMap<ModMatrix, Vec<usize>> = HashMap::new();
    for (i, u) in unipotent.iter().enumerate() {
        let key = inverse(u)?.mul(&x0m).mul(u).canonical(projective);
        lookup.entry(key).or_default().push(i);
    }
    let mut elements = BTreeSet::new();
    for t in &torus {
        for n in &weyl {
            let tn = t.mul(n);
            for up in &unipotent {
                let y = tn.mul(up);
                let m = y.mul(&x0m).mul(&inverse(&y)?).canonical(projective);
                if let Some(us) = lookup.get(&m) {
                    for &i in us {
                        elements.insert(unipotent[i].mul(&y).canonical(projective));
                    }
                }
            }
        }
    }
    Ok(CentralizerScan { count: elements.len(), elements, sweep })
}

/// The family evaluated at every point of `F_p^free`, keeping invertible members.
/// Errors when no point can be evaluated, e.g. a coefficient has denominator `p`.
pub fn family_over_fp(fam: &CentralizerFamily, p: u64) -> Result<BTreeSet<ModMatrix>, ProofError> {
    let group = cached_group(fam.system, fam.realization)?;
    let ring = RingSpec::modular(p)?;
    let projective = fam.realization == Realization::Pgl3;
    let element = fam.element();
    let mut out = BTreeSet::new();
    let mut defined = false;
    let mut last_err = None;
    for values in all_tuples(p, fam.free.len()) {
        let map: HashMap<String, Expr> =
            fam.free.iter().zip(&values).map(|(k, &v)| (k.clone(), Expr::int(v as i64))).collect();
        let m = match product(&group, &[substitute(&element, &map)], &ring) {
            Ok(m) => m,
            Err(e @ (ProofError::Ring(_) | ProofError::Chev(_))) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        defined = true;
        let m = ModMatrix::from_matrix(&m).map_err(|e| ProofError::Unsupported(e.to_string()))?;
        if m.inverse().is_some() {
            out.insert(m.canonical(projective));
        }
    }
    match (defined, last_err) {
        (false, Some(e)) => Err(ProofError::Unsupported(format!("{} is not defined over F{p}: {e}", fam.name))),
        _ => Ok(out),
    }
}

/// Compare the exhaustive centralizer of the family's `x0` with the family over `F_p`.
/// Families given by explicit matrices are first intersected with the group.
pub fn centralizer_agreement(fam: &CentralizerFamily, p: u64, cap: u128) -> Result<Report, ProofError> {
    let start = Instant::now();
    if fam.realization != default_realization(fam.system) {
        return Err(ProofError::Unsupported(format!("{} is not in the scan realization", fam.name)));
    }
    let mut fam_set = family_over_fp(fam, p)?;
    let scan = centralizer_bruteforce(fam.system, p, &fam.x0, cap)?;
    if matches!(fam.generic, Factor::Matrix(_)) {
        let g = generate_group(fam.system, p, fam.realization, DEFAULT_CAP)
            .map_err(|e| ProofError::Unsupported(e.to_string()))?;
        fam_set.retain(|m| g.index_of(m).is_some());
    }
    let name = format!("{}-F{p}", fam.name);
    if scan.elements == fam_set {
        Ok(Report::new(&name, Verdict::Pass, format!("{} elements", scan.count), start))
    } else {
        let only_scan = scan.elements.difference(&fam_set).count();
        let only_fam = fam_set.difference(&scan.elements).count();
        let msg = format!("scan {} vs family {}: {only_scan} only in scan, {only_fam} only in family", scan.count, fam_set.len());
        Ok(Report::new(&name, Verdict::Fail, msg, start))
    }
}

/// Basis of the space of 3x3 rational matrices commuting with `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpace {
    /// Basis matrices, each as nine row-major entries.
    pub basis: Vec<Vec<BigRational>>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether the span equals the span of the given row-major matrices.
    pub fn same_span(&self, other: &[Vec<BigRational>]) -> bool {
        let mut all = self.basis.clone();
        all.extend(other.iter().cloned());
        let r = rank(&all);
        r == rank(&self.basis) && r == rank(other)
    }

    /// Positions that vanish on the whole space.
    pub fn zero_positions(&self) -> Vec<(usize, usize)> {
        (0..9).filter(|&k| self.basis.iter().all(|b| b[k].is_zero())).map(|k| (k / 3 + 1, k % 3 + 1)).collect()
    }
}

/// Solve `X x = x X` for `X` over the rationals; `x` must have rational entries.
pub fn matrix_centralizer_a1(x: &Matrix) -> Result<SolutionSpace, ProofError> {
    if x.rows() != 3 || x.cols() != 3 {
        return Err(ProofError::Unsupported("expected a 3x3 matrix".into()));
    }
    let entry = |i: usize, j: usize| {
        x.get(i, j).as_rational().ok_or_else(|| ProofError::Unsupported(format!("entry ({},{}) is not rational", i + 1, j + 1)))
    };
    let mut xs = vec![vec![BigRational::zero(); 3]; 3];
    for (i, row) in xs.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = entry(i, j)?;
        }
    }
    let mut system = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut eq = vec![BigRational::zero(); 9];
            for k in 0..3 {
                eq[i * 3 + k] += &xs[k][j];
                eq[k * 3 + j] -= &xs[i][k];
            }
            system.push(eq);
        }
    }
    Ok(SolutionSpace { basis: nullspace(&system, 9) })
}

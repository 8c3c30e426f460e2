//! Group elements in the adjoint, PGL3 and A1 standard realizations.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use exactring::{BigInt, BigRational, Expr, Matrix, Ring, RingElement, RingError, RingSpec};
use num_traits::{One, ToPrimitive, Zero};
use rootsys::{cartan_integer, reflect, Root, SystemType};

use crate::basis::{build_basis, six_smooth, ChevalleyBasis};
use crate::error::ChevError;
use crate::word::{GroupWord, Letter};
use crate::Realization;

/// Sparse rational matrix: `(row, col, value)` triples.
type Sparse = Vec<(usize, usize, BigRational)>;

/// A Chevalley group of a fixed type in a fixed matrix realization.
#[derive(Clone, Debug)]
pub struct ChevalleyGroup {
    basis: Arc<ChevalleyBasis>,
    realization: Realization,
    dim: usize,
    /// For each root, the terms `N^k / k!` (k >= 1) of the exponential series.
    exp_terms: HashMap<Root, Vec<Sparse>>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn dense_mul(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j] += x * y;
                }
            }
        }
    }
    out
}

fn units(n: usize, entries: &[(usize, usize, i64)]) -> Vec<BigRational> {
    let mut m = vec![BigRational::zero(); n * n];
    for &(i, j, c) in entries {
        m[(i - 1) * n + (j - 1)] += q(c);
    }
    m
}

impl ChevalleyGroup {
    /// The group of `system` in `realization`, using the calibrated Chevalley basis.
    pub fn new(system: SystemType, realization: Realization) -> Result<Self, ChevError> {
        Self::from_basis(build_basis(system), realization)
    }

    /// Adjoint group of `system`.
    pub fn adjoint(system: SystemType) -> Self {
        Self::new(system, Realization::Adjoint).expect("adjoint realization exists for every type")
    }

    pub fn from_basis(basis: Arc<ChevalleyBasis>, realization: Realization) -> Result<Self, ChevError> {
        let system = basis.system();
        if !realization.supports(system) {
            return Err(ChevError::RealizationMismatch(realization, system));
        }
        let dim = if realization == Realization::Adjoint { basis.dim() } else { 3 };
        let mut g = ChevalleyGroup { basis, realization, dim, exp_terms: HashMap::new() };
        for r in system.roots() {
            let n = g.nilpotent(&r);
            let mut terms = Vec::new();
            let mut power = n.clone();
            let mut k = 1i64;
            let mut fact = BigRational::one();
            while power.iter().any(|c| !c.is_zero()) {
                fact *= q(k);
                let sparse: Sparse = power
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(idx, c)| (idx / dim, idx % dim, c / &fact))
                    .collect();
                assert!(sparse.iter().all(|(_, _, c)| six_smooth(c)), "exponential coefficient outside Z[1/6]");
                terms.push(sparse);
                power = dense_mul(&power, &n, dim);
                k += 1;
            }
            g.exp_terms.insert(r, terms);
        }
        Ok(g)
    }

    pub fn system(&self) -> SystemType {
        self.basis.system()
    }

    pub fn basis(&self) -> &Arc<ChevalleyBasis> {
        &self.basis
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn nilpotent(&self, r: &Root) -> Vec<BigRational> {
        match self.realization {
            Realization::Adjoint => self.basis.ad_matrix(self.basis.root_index(r)).to_vec(),
            Realization::Pgl3 => {
                let (i, j) = match r.abs().coords() {
                    [1, 0] => (1, 2),
                    [0, 1] => (2, 3),
                    _ => (1, 3),
                };
                if r.is_positive() {
                    units(3, &[(i, j, 1)])
                } else {
                    units(3, &[(j, i, 1)])
                }
            }
            Realization::A1Std => {
                if r.is_positive() {
                    units(3, &[(1, 3, 2), (3, 2, 1)])
                } else {
                    units(3, &[(2, 3, 2), (3, 1, 1)])
                }
            }
        }
    }

    fn check_root(&self, r: &Root) -> Result<(), ChevError> {
        if r.system() != self.system() {
            return Err(ChevError::SystemMismatch(r.system(), self.system()));
        }
        Ok(())
    }

    /// Root element `x_r(t) = sum_k t^k N^k / k!`.
    pub fn root_element(&self, r: &Root, t: &RingElement) -> Result<Matrix, ChevError> {
        self.check_root(r)?;
        let ring = t.ring();
        let mut m = Matrix::identity(ring, self.dim);
        if t.is_zero() {
            return Ok(m);
        }
        let terms = &self.exp_terms[r];
        let mut tp = t.clone();
        for (k, sparse) in terms.iter().enumerate() {
            if k > 0 {
                tp = &tp * t;
            }
            for (i, j, c) in sparse {
                let v = m.get(*i, *j).try_add(&tp.scale(c)?)?;
                m.set(*i, *j, v);
            }
        }
        Ok(m)
    }

    /// Exponents of the diagonal entries of `h_r(u)`.
    pub fn coroot_weights(&self, r: &Root) -> Vec<i32> {
        match self.realization {
            Realization::Adjoint => (0..self.dim)
                .map(|k| match self.basis.root_of_index(k) {
                    Some(d) => cartan_integer(&d, r).expect("same system"),
                    None => 0,
                })
                .collect(),
            Realization::Pgl3 => {
                let v = match r.abs().coords() {
                    [1, 0] => vec![1, -1, 0],
                    [0, 1] => vec![0, 1, -1],
                    _ => vec![1, 0, -1],
                };
                if r.is_positive() {
                    v
                } else {
                    v.into_iter().map(|x| -x).collect()
                }
            }
            Realization::A1Std => {
                if r.is_positive() {
                    vec![2, -2, 0]
                } else {
                    vec![-2, 2, 0]
                }
            }
        }
    }

    /// Exponents of the diagonal entries of `t_i(u)` (index from 1).
    pub fn torus_weights(&self, i: usize) -> Result<Vec<i32>, ChevError> {
        let rank = self.system().rank();
        if i == 0 || i > rank {
            return Err(ChevError::TorusIndex(i));
        }
        Ok(match self.realization {
            Realization::Adjoint => (0..self.dim)
                .map(|k| self.basis.root_of_index(k).map_or(0, |d| d.coords()[i - 1]))
                .collect(),
            Realization::Pgl3 => {
                if i == 1 {
                    vec![1, 0, 0]
                } else {
                    vec![0, 0, -1]
                }
            }
            Realization::A1Std => vec![1, -1, 0],
        })
    }

    fn diag(&self, weights: &[i32], u: &RingElement) -> Result<Matrix, ChevError> {
        let ring = u.ring();
        let inv = if weights.iter().any(|&w| w < 0) { Some(u.invert()?) } else { None };
        let mut cache: HashMap<i32, RingElement> = HashMap::new();
        let mut entries = Vec::with_capacity(weights.len());
        for &w in weights {
            let e = cache
                .entry(w)
                .or_insert_with(|| match w.cmp(&0) {
                    std::cmp::Ordering::Equal => RingElement::one(ring),
                    std::cmp::Ordering::Greater => u.pow(w as u32),
                    std::cmp::Ordering::Less => inv.as_ref().expect("inverse computed").pow((-w) as u32),
                })
                .clone();
            entries.push(e);
        }
        Ok(Matrix::diagonal(ring, entries))
    }

    /// Semisimple element `h_r(u)`, acting on weight vectors of weight `d` by `u^<d, r^vee>`.
    pub fn torus_element(&self, r: &Root, u: &RingElement) -> Result<Matrix, ChevError> {
        self.check_root(r)?;
        u.invert()?;
        self.diag(&self.coroot_weights(r), u)
    }

    /// Torus element `t_i(u)` scaling `x_d` by `u^(coefficient of alpha_i in d)`.
    pub fn diag_torus(&self, i: usize, u: &RingElement) -> Result<Matrix, ChevError> {
        let w = self.torus_weights(i)?;
        u.invert()?;
        self.diag(&w, u)
    }

    /// `w_r(u) = x_r(u) x_{-r}(-u^{-1}) x_r(u)`.
    pub fn weyl_element(&self, r: &Root, u: &RingElement) -> Result<Matrix, ChevError> {
        let inv = u.invert()?;
        let a = self.root_element(r, u)?;
        let b = self.root_element(&r.neg(), &-inv)?;
        Ok(a.try_mul(&b)?.try_mul(&a)?)
    }

    fn letter_matrix(&self, l: &Letter, ring: &Ring) -> Result<Matrix, ChevError> {
        match l {
            Letter::X(r, p) => self.root_element(r, &p.eval(ring)?),
            Letter::H(r, p) => self.torus_element(r, &p.eval(ring)?),
            Letter::W(r, p) => self.weyl_element(r, &p.eval(ring)?),
            Letter::T(i, p) => self.diag_torus(*i, &p.eval(ring)?),
            Letter::Group(w, k) => {
                let m = if *k < 0 { self.evaluate_word(&w.inverse(), ring)? } else { self.evaluate_word(w, ring)? };
                Ok(m.pow(k.unsigned_abs() as u32))
            }
        }
    }

    /// Product of the letter matrices, left to right.
    pub fn evaluate_word(&self, word: &GroupWord, ring: &Ring) -> Result<Matrix, ChevError> {
        if word.system != self.system() {
            return Err(ChevError::SystemMismatch(word.system, self.system()));
        }
        let mut acc: Option<Matrix> = None;
        for l in &word.letters {
            let m = self.letter_matrix(l, ring)?;
            acc = Some(match acc {
                None => m,
                Some(a) => a.try_mul(&m)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Matrix::identity(ring, self.dim)))
    }

    /// Parse and evaluate a word.
    pub fn evaluate_str(&self, text: &str, ring: &Ring) -> Result<Matrix, ChevError> {
        self.evaluate_word(&GroupWord::parse(self.system(), text)?, ring)
    }

    /// The Chevalley commutator formula for `[x_g(t), x_d(u)] = x_g(t) x_d(u) x_g(t)^{-1} x_d(u)^{-1}`,
    /// extracted from the adjoint realization.
    pub fn commutator_relation(&self, g: &Root, d: &Root) -> Result<CommutatorRelation, ChevError> {
        self.check_root(g)?;
        self.check_root(d)?;
        if *g == *d || *g == d.neg() {
            return Err(ChevError::Proportional);
        }
        if self.realization != Realization::Adjoint {
            return ChevalleyGroup::from_basis(self.basis.clone(), Realization::Adjoint)?.commutator_relation(g, d);
        }
        let system = self.system();
        let ring = RingSpec::polynomial(&["t", "u"])?;
        let t = RingElement::var(&ring, "t")?;
        let u = RingElement::var(&ring, "u")?;
        let m = self
            .root_element(g, &t)?
            .try_mul(&self.root_element(d, &u)?)?
            .try_mul(&self.root_element(g, &-&t)?)?
            .try_mul(&self.root_element(d, &-&u)?)?;
        let mut candidates: Vec<(i32, i32, Root)> = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                if let Some(r) = g.combo(i, d, j) {
                    candidates.push((i, j, r));
                }
            }
        }
        candidates.sort_by_key(|(i, j, _)| (i + j, *i));
        let mut m = m;
        let mut factors = Vec::new();
        for (i, j, r) in candidates {
            let k = (0..system.rank())
                .find(|&k| rootsys::pairing_with_simple(system, r.coords(), k) != 0)
                .expect("a root pairs nontrivially with some simple coroot");
            let pairing = rootsys::pairing_with_simple(system, r.coords(), k);
            let entry = m.get(self.basis.root_index(&r), self.basis.coroot_index(k)).clone();
            let c = entry.scale(&-(BigRational::one() / q(pairing as i64)))?;
            if c.is_zero() {
                continue;
            }
            let p = c.as_poly().expect("polynomial ring");
            let mono = vec![i as u32, j as u32];
            let coef = p.coefficient(&mono);
            if p.len() != 1 || !coef.denom().is_one() {
                return Err(ChevError::Internal(format!("unexpected coefficient {c} for {r}")));
            }
            m = self.root_element(&r, &-&c)?.try_mul(&m)?;
            factors.push(RelationFactor {
                root: r,
                coeff: coef.to_integer().to_i64().expect("small structure constant"),
                i: i as u32,
                j: j as u32,
            });
        }
        if !m.is_identity() {
            return Err(ChevError::Internal(format!("commutator of {g} and {d} is not a product of root elements")));
        }
        Ok(CommutatorRelation { gamma: g.clone(), delta: d.clone(), factors })
    }

    /// Trace of `x_r(t) x_{-r}(s)` as a polynomial in `Q[s, t]`.
    pub fn trace_poly(&self, r: &Root) -> Result<RingElement, ChevError> {
        let ring = RingSpec::polynomial(&["s", "t"])?;
        let t = RingElement::var(&ring, "t")?;
        let s = RingElement::var(&ring, "s")?;
        let m = self.root_element(r, &t)?.try_mul(&self.root_element(&r.neg(), &s)?)?;
        Ok(m.trace())
    }

    /// Sign `e` with `w_r(1) x_d(t) w_r(1)^{-1} = x_{s_r(d)}(e t)`.
    pub fn weyl_sign(&self, r: &Root, d: &Root) -> Result<i32, ChevError> {
        let ring = RingSpec::rationals();
        let one = RingElement::one(&ring);
        let w = self.weyl_element(r, &one)?;
        let winv = self.weyl_element(r, &-&one)?;
        let m = w.try_mul(&self.root_element(d, &one)?)?.try_mul(&winv)?;
        let target = reflect(d, r)?;
        for e in [1, -1] {
            let x = self.root_element(&target, &RingElement::from_int(&ring, e))?;
            let same = match self.realization {
                Realization::Pgl3 => pgl3_equal(&m, &x)?,
                _ => m == x,
            };
            if same {
                return Ok(e as i32);
            }
        }
        Err(ChevError::Internal(format!("w_{r}(1) does not map x_{d} onto x_{target}")))
    }
}

/// One factor `x_root(coeff * t^i * u^j)` of a commutator relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFactor {
    pub root: Root,
    pub coeff: i64,
    pub i: u32,
    pub j: u32,
}

impl RelationFactor {
    /// Parameter `coeff * t^i * u^j` as an expression in the given variable names.
    pub fn param(&self, t: &str, u: &str) -> Expr {
        let pw = |v: &str, e: u32| if e == 1 { Expr::var(v) } else { Expr::Pow(Box::new(Expr::var(v)), e as i64) };
        let c = self.coeff.abs();
        let mono = if c == 1 { pw(t, self.i) * pw(u, self.j) } else { Expr::int(c) * pw(t, self.i) * pw(u, self.j) };
        if self.coeff < 0 {
            -mono
        } else {
            mono
        }
    }
}

/// `[x_gamma(t), x_delta(u)] = prod x_root(N t^i u^j)`, factors in order of increasing `i + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorRelation {
    pub gamma: Root,
    pub delta: Root,
    pub factors: Vec<RelationFactor>,
}

impl CommutatorRelation {
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// The commutator word in parameters `t`, `u`.
    pub fn lhs_word(&self, t: &str, u: &str) -> GroupWord {
        let (tt, uu) = (Expr::var(t), Expr::var(u));
        GroupWord::new(
            self.gamma.system(),
            vec![
                Letter::X(self.gamma.clone(), tt.clone()),
                Letter::X(self.delta.clone(), uu.clone()),
                Letter::X(self.gamma.clone(), -tt),
                Letter::X(self.delta.clone(), -uu),
            ],
        )
    }

    /// The product of root elements in parameters `t`, `u`.
    pub fn rhs_word(&self, t: &str, u: &str) -> GroupWord {
        GroupWord::new(
            self.gamma.system(),
            self.factors.iter().map(|f| Letter::X(f.root.clone(), f.param(t, u))).collect(),
        )
    }
}

impl fmt::Display for CommutatorRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[x({}, t), x({}, u)] = {}", self.gamma.alias(), self.delta.alias(), self.rhs_word("t", "u"))
    }
}

fn require_field(m: &Matrix) -> Result<(), ChevError> {
    if !m.ring().is_field() {
        return Err(RingError::Unsupported(format!("projective comparison over {}", m.ring())).into());
    }
    Ok(())
}

/// `m = lambda n` for a unit `lambda`.
pub fn pgl3_equal(m: &Matrix, n: &Matrix) -> Result<bool, ChevError> {
    require_field(m)?;
    if m.ring() != n.ring() {
        return Err(RingError::SpecMismatch.into());
    }
    if m.rows() != n.rows() || m.cols() != n.cols() {
        return Ok(false);
    }
    let Some((i, j, nv)) = n.nonzero_entries().first().map(|(i, j, v)| (*i, *j, (*v).clone())) else {
        return Ok(m.is_zero());
    };
    let mv = m.get(i, j);
    if mv.is_zero() {
        return Ok(false);
    }
    let lambda = mv.try_mul(&nv.invert()?)?;
    Ok(*m == n.scale(&lambda))
}

/// Representative scaled so that its first nonzero entry is 1.
pub fn pgl3_canonical(m: &Matrix) -> Result<Matrix, ChevError> {
    require_field(m)?;
    match m.nonzero_entries().first() {
        None => Ok(m.clone()),
        Some((_, _, v)) => Ok(m.scale(&v.invert()?)),
    }
}

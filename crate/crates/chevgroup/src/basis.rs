//! Chevalley bases built from faithful matrix models of the simple Lie algebras.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use exactring::linalg;
use exactring::{BigInt, BigRational};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rootsys::{pairing_with_simple, Root, SystemType};

use crate::error::ChevError;

/// Small dense rational matrix used for the Lie algebra models.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct QMat {
    n: usize,
    d: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QMat {
    fn zero(n: usize) -> Self {
        QMat { n, d: vec![BigRational::zero(); n * n] }
    }

    fn unit(n: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut m = Self::zero(n);
        for &(i, j, c) in entries {
            m.d[(i - 1) * n + (j - 1)] += q(c);
        }
        m
    }

    fn mul(&self, o: &QMat) -> QMat {
        let n = self.n;
        let mut r = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.d[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.d[k * n + j];
                    if !b.is_zero() {
                        r.d[i * n + j] += a * b;
                    }
                }
            }
        }
        r
    }

    fn sub(&self, o: &QMat) -> QMat {
        QMat { n: self.n, d: self.d.iter().zip(&o.d).map(|(a, b)| a - b).collect() }
    }

    fn scale(&self, c: &BigRational) -> QMat {
        QMat { n: self.n, d: self.d.iter().map(|a| a * c).collect() }
    }

    fn bracket(&self, o: &QMat) -> QMat {
        self.mul(o).sub(&o.mul(self))
    }
}

/// Generators `e_i`, `f_i` of the defining (or smallest faithful) representation.
fn model_generators(system: SystemType) -> (Vec<QMat>, Vec<QMat>) {
    match system {
        SystemType::A1 => (vec![QMat::unit(2, &[(1, 2, 1)])], vec![QMat::unit(2, &[(2, 1, 1)])]),
        SystemType::A2 => (
            vec![QMat::unit(3, &[(1, 2, 1)]), QMat::unit(3, &[(2, 3, 1)])],
            vec![QMat::unit(3, &[(2, 1, 1)]), QMat::unit(3, &[(3, 2, 1)])],
        ),
        SystemType::B2 => (
            vec![QMat::unit(4, &[(2, 4, 1)]), QMat::unit(4, &[(1, 2, 1), (4, 3, -1)])],
            vec![QMat::unit(4, &[(4, 2, 1)]), QMat::unit(4, &[(2, 1, 1), (3, 4, -1)])],
        ),
        SystemType::G2 => (
            vec![
                QMat::unit(7, &[(2, 3, 1), (5, 6, 1)]),
                QMat::unit(7, &[(1, 2, 1), (3, 4, 1), (4, 5, 1), (6, 7, 1)]),
            ],
            vec![
                QMat::unit(7, &[(3, 2, 1), (6, 5, 1)]),
                QMat::unit(7, &[(2, 1, 1), (4, 3, 2), (5, 4, 2), (7, 6, 1)]),
            ],
        ),
    }
}

/// A Chevalley basis with its adjoint action.
///
/// Basis order: `e_r` for positive roots in canonical order, then `h_1..h_rank`,
/// then `e_{-r}` for positive roots in canonical order.
#[derive(Debug)]
pub struct ChevalleyBasis {
    system: SystemType,
    dim: usize,
    positive: Vec<Root>,
    labels: Vec<String>,
    /// `ad(b_i)` as a dense dim x dim rational matrix, row-major.
    ad: Vec<Vec<BigRational>>,
    /// Coordinates of `[b_i, b_j]`.
    brackets: Vec<Vec<Vec<BigRational>>>,
    /// Sign applied to `e_r` and `e_{-r}` for each positive root.
    flips: Vec<i32>,
}

impl ChevalleyBasis {
    /// Construct the basis with the given sign vector (one entry per positive root).
    pub fn with_flips(system: SystemType, flips: &[i32]) -> Result<ChevalleyBasis, ChevError> {
        let positive = system.positive_roots();
        if flips.len() != positive.len() || flips.iter().any(|f| f.abs() != 1) {
            return Err(ChevError::Internal("sign vector must have one +-1 per positive root".into()));
        }
        let rank = system.rank();
        let (es, fs) = model_generators(system);
        let hs: Vec<QMat> = (0..rank).map(|i| es[i].bracket(&fs[i])).collect();
        let mut e: BTreeMap<Vec<i32>, QMat> = BTreeMap::new();
        for i in 0..rank {
            let r = system.simple_root(i);
            e.insert(r.coords().to_vec(), es[i].clone());
            e.insert(r.neg().coords().to_vec(), fs[i].clone());
        }
        for g in &positive {
            if g.is_simple() {
                continue;
            }
            let (a, b) = (0..rank)
                .find_map(|i| {
                    let a = system.simple_root(i);
                    let b = g.combo(1, &a, -1)?;
                    b.is_positive().then_some((a, b))
                })
                .ok_or_else(|| ChevError::Internal(format!("no simple decomposition of {g}")))?;
            let mut p = 0;
            while b.combo(1, &a, -(p + 1)).is_some() {
                p += 1;
            }
            let k = BigRational::one() / q(p as i64 + 1);
            let pos = e[a.coords()].bracket(&e[b.coords()]).scale(&k);
            let neg = e[a.neg().coords()].bracket(&e[b.neg().coords()]).scale(&-k);
            e.insert(g.coords().to_vec(), pos);
            e.insert(g.neg().coords().to_vec(), neg);
        }
        let mut basis: Vec<QMat> = Vec::new();
        let mut labels = Vec::new();
        for (g, f) in positive.iter().zip(flips) {
            basis.push(e[g.coords()].scale(&q(*f as i64)));
            labels.push(format!("e[{g}]"));
        }
        for (i, h) in hs.iter().enumerate() {
            basis.push(h.clone());
            labels.push(format!("h{}", i + 1));
        }
        for (g, f) in positive.iter().zip(flips) {
            basis.push(e[g.neg().coords()].scale(&q(*f as i64)));
            labels.push(format!("e[{}]", g.neg()));
        }
        let dim = basis.len();
        let flat: Vec<Vec<BigRational>> = {
            let n2 = basis[0].n * basis[0].n;
            (0..n2).map(|row| basis.iter().map(|b| b.d[row].clone()).collect()).collect()
        };
        let coords = |m: &QMat| -> Result<Vec<BigRational>, ChevError> {
            linalg::solve(&flat, &m.d).ok_or_else(|| ChevError::Internal("bracket outside the span".into()))
        };
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                brackets[i][j] = coords(&basis[i].bracket(&basis[j]))?;
            }
        }
        let ad = (0..dim)
            .map(|i| {
                let mut m = vec![BigRational::zero(); dim * dim];
                for j in 0..dim {
                    for k in 0..dim {
                        m[k * dim + j] = brackets[i][j][k].clone();
                    }
                }
                m
            })
            .collect();
        Ok(ChevalleyBasis { system, dim, positive, labels, ad, brackets, flips: flips.to_vec() })
    }

    pub fn system(&self) -> SystemType {
        self.system
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn flips(&self) -> Vec<(Root, i32)> {
        self.positive.iter().cloned().zip(self.flips.iter().copied()).collect()
    }

    pub fn flip(&self, r: &Root) -> i32 {
        self.flips[r.positive_index()]
    }

    /// Basis index of `e_r`.
    pub fn root_index(&self, r: &Root) -> usize {
        let i = r.positive_index();
        if r.is_positive() {
            i
        } else {
            self.positive.len() + self.system.rank() + i
        }
    }

    /// Basis index of `h_i`.
    pub fn coroot_index(&self, i: usize) -> usize {
        self.positive.len() + i
    }

    /// Root of a basis index, `None` for the Cartan part.
    pub fn root_of_index(&self, k: usize) -> Option<Root> {
        let np = self.positive.len();
        let rank = self.system.rank();
        if k < np {
            Some(self.positive[k].clone())
        } else if k >= np + rank {
            Some(self.positive[k - np - rank].neg())
        } else {
            None
        }
    }

    /// `ad(b_k)` as a row-major rational matrix.
    pub fn ad_matrix(&self, k: usize) -> &[BigRational] {
        &self.ad[k]
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[BigRational] {
        &self.brackets[i][j]
    }

    /// Structure constant `N_{g,d}` with `[e_g, e_d] = N_{g,d} e_{g+d}`; `None` when `g+d` is not a root.
    pub fn structure_constant(&self, g: &Root, d: &Root) -> Option<i64> {
        let s = g.add(d)?;
        let v = &self.brackets[self.root_index(g)][self.root_index(d)][self.root_index(&s)];
        v.to_integer().to_i64()
    }

    /// All structure constants for root pairs whose sum is a root.
    pub fn structure_constants(&self) -> BTreeMap<(Root, Root), i64> {
        let roots = self.system.roots();
        let mut out = BTreeMap::new();
        for g in &roots {
            for d in &roots {
                if let Some(n) = self.structure_constant(g, d) {
                    out.insert((g.clone(), d.clone()), n);
                }
            }
        }
        out
    }

    /// Every bracket has integer coordinates.
    pub fn is_integral(&self) -> bool {
        self.brackets.iter().flatten().flatten().all(|c| c.denom().is_one())
    }

    /// `[e_r, e_{-r}]` expressed in the `h_i`.
    pub fn coroot_coordinates(&self, r: &Root) -> Vec<BigRational> {
        let v = &self.brackets[self.root_index(r)][self.root_index(&r.neg())];
        (0..self.system.rank()).map(|i| v[self.coroot_index(i)].clone()).collect()
    }

    /// `[h_i, e_r] = <r, alpha_i^vee> e_r`, checked for every root.
    pub fn cartan_action_consistent(&self) -> bool {
        self.system.roots().iter().all(|r| {
            (0..self.system.rank()).all(|i| {
                let v = &self.brackets[self.coroot_index(i)][self.root_index(r)];
                let k = pairing_with_simple(self.system, r.coords(), i);
                v.iter().enumerate().all(|(idx, c)| {
                    if idx == self.root_index(r) {
                        *c == q(k as i64)
                    } else {
                        c.is_zero()
                    }
                })
            })
        })
    }

    /// Jacobi identity on every basis triple, computed from the bracket table.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim;
        let br = |x: &[BigRational], j: usize| -> Vec<BigRational> {
            let mut out = vec![BigRational::zero(); n];
            for (i, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, v) in self.brackets[i][j].iter().enumerate() {
                    out[k] += c * v;
                }
            }
            out
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t1 = br(&self.brackets[a][b], c);
                    let t2 = br(&self.brackets[b][c], a);
                    let t3 = br(&self.brackets[c][a], b);
                    if (0..n).any(|k| !(&t1[k] + &t2[k] + &t3[k]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Antisymmetry `N_{d,g} = -N_{g,d}` and `|N_{g,d}| = p+1`.
    pub fn structure_constants_consistent(&self) -> bool {
        self.structure_constants().iter().all(|((g, d), n)| {
            let back = self.structure_constant(d, g) == Some(-n);
            let (p, _) = rootsys::root_string(g, d).expect("non-proportional");
            back && n.abs() == (p as i64 + 1)
        })
    }
}

static CACHE: [OnceLock<Arc<ChevalleyBasis>>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];

fn cache_slot(s: SystemType) -> usize {
    match s {
        SystemType::A1 => 0,
        SystemType::A2 => 1,
        SystemType::B2 => 2,
        SystemType::G2 => 3,
    }
}

/// The calibrated Chevalley basis of `system` (computed once, then shared).
pub fn build_basis(system: SystemType) -> Arc<ChevalleyBasis> {
    CACHE[cache_slot(system)]
        .get_or_init(|| {
            let flips = crate::calibrate::calibrate(system).expect("sign calibration");
            Arc::new(ChevalleyBasis::with_flips(system, &flips).expect("calibrated basis"))
        })
        .clone()
}

/// Denominators of `c` divide a power of 6.
pub(crate) fn six_smooth(c: &BigRational) -> bool {
    let mut d = c.denom().abs();
    for p in [2, 3] {
        let pb = BigInt::from(p);
        while (&d % &pb).is_zero() {
            d /= &pb;
        }
    }
    d.is_one()
}

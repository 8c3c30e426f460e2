//! Brute-force Bruhat decomposition `M = t u n_w u'` over small prime fields.

use chevgroup::{pgl3_equal, ChevalleyGroup, GroupWord, Letter, Realization};
use exactring::{Expr, Matrix, Ring, RingElement, RingSpec};
use rootsys::{reflect, Root, SystemType};

use crate::error::DecompError;

/// A Weyl group element with its canonical reduced word in the simple reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Simple-reflection indices, applied left to right.
    pub word: Vec<usize>,
    /// Images of the simple roots.
    pub images: Vec<Root>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Representative `prod w_{a_i}(1)`.
    pub fn representative(&self, system: SystemType) -> GroupWord {
        GroupWord::new(
            system,
            self.word.iter().map(|&i| Letter::W(system.simple_root(i), Expr::int(1))).collect(),
        )
    }
}

/// All Weyl group elements, by length and then lexicographic reduced word.
pub fn weyl_representatives(system: SystemType) -> Vec<WeylElement> {
    let simple = system.simple_roots();
    let mut out = vec![WeylElement { word: vec![], images: simple.clone() }];
    let mut frontier = 0;
    while frontier < out.len() {
        let end = out.len();
        for idx in frontier..end {
            for i in 0..system.rank() {
                let cur = out[idx].clone();
                let s = &simple[i];
                let images: Vec<Root> = cur.images.iter().map(|r| reflect(r, s).expect("same system")).collect();
                if out.iter().any(|w| w.images == images) {
                    continue;
                }
                let mut word = vec![i];
                word.extend(&cur.word);
                out.push(WeylElement { word, images });
            }
        }
        frontier = end;
    }
    out.sort_by(|a, b| (a.length(), &a.word).cmp(&(b.length(), &b.word)));
    out
}

/// `M = torus * u * weyl * u_prime`.
#[derive(Clone, Debug)]
pub struct BruhatFactorization {
    pub torus: GroupWord,
    pub u: GroupWord,
    pub weyl: GroupWord,
    pub u_prime: GroupWord,
    /// Index into [`weyl_representatives`].
    pub weyl_index: usize,
}

impl BruhatFactorization {
    pub fn word(&self) -> GroupWord {
        self.torus.then(&self.u).then(&self.weyl).then(&self.u_prime)
    }
}

struct Search {
    group: ChevalleyGroup,
    ring: Ring,
    positive: Vec<Root>,
    /// Inverses of the unipotent elements with their parameter tuples, in lexicographic order.
    unipotents: Vec<(Vec<u64>, Matrix)>,
    weyl: Vec<(WeylElement, Matrix)>,
}

fn field_order(ring: &Ring) -> Result<u64, DecompError> {
    match ring.modulus() {
        Some(p) if ring.is_field() => Ok(p),
        _ => Err(DecompError::Unsupported(format!("Bruhat search needs a prime field, got {ring}"))),
    }
}

impl Search {
    fn new(group: &ChevalleyGroup, ring: &Ring, cap: u128) -> Result<Search, DecompError> {
        let p = field_order(ring)?;
        let system = group.system();
        let positive = system.positive_roots();
        let weyl_list = weyl_representatives(system);
        let nu = (p as u128).pow(positive.len() as u32);
        let size = nu * nu * weyl_list.len() as u128;
        if size > cap {
            return Err(DecompError::TooLarge { size, cap });
        }
        let mut unipotents = Vec::new();
        for idx in 0..nu {
            let mut params = vec![0u64; positive.len()];
            let mut rest = idx;
            for slot in params.iter_mut().rev() {
                *slot = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            let mut minv = Matrix::identity(ring, group.dim());
            for (r, &c) in positive.iter().zip(&params) {
                let c = RingElement::from_int(ring, c as i64);
                minv = group.root_element(r, &-&c)?.try_mul(&minv)?;
            }
            unipotents.push((params, minv));
        }
        let mut weyl = Vec::new();
        for w in weyl_list {
            let inv = group.evaluate_word(&w.representative(system).inverse(), ring)?;
            weyl.push((w, inv));
        }
        Ok(Search { group: group.clone(), ring: ring.clone(), positive, unipotents, weyl })
    }

    fn projective(&self) -> bool {
        self.group.realization() == Realization::Pgl3
    }

    /// Scaling of `x_{a_i}` under conjugation by the diagonal matrix `d`, read off an
    /// entry where the root element is linear in its parameter.
    fn simple_characters(&self, d: &Matrix) -> Result<Vec<RingElement>, DecompError> {
        let system = self.group.system();
        let q = RingSpec::rationals();
        (0..system.rank())
            .map(|i| {
                let r = system.simple_root(i);
                let x1 = self.group.root_element(&r, &RingElement::from_int(&q, 1))?;
                let x2 = self.group.root_element(&r, &RingElement::from_int(&q, 2))?;
                let two = RingElement::from_int(&q, 2);
                let (row, col) = (0..x1.rows())
                    .flat_map(|a| (0..x1.cols()).map(move |b| (a, b)))
                    .find(|&(a, b)| a != b && !x1.get(a, b).is_zero() && *x2.get(a, b) == &two * x1.get(a, b))
                    .expect("root element has a linear entry");
                Ok(d.get(row, row).try_mul(&d.get(col, col).invert()?)?)
            })
            .collect()
    }

    fn torus_word(&self, chars: &[RingElement]) -> GroupWord {
        GroupWord::new(
            self.group.system(),
            chars.iter().enumerate().map(|(i, l)| Letter::T(i + 1, Expr::from_element(l))).collect(),
        )
    }

    fn same(&self, a: &Matrix, b: &Matrix) -> Result<bool, DecompError> {
        Ok(if self.projective() { pgl3_equal(a, b)? } else { a == b })
    }

    /// A torus element of the group equal to the diagonal matrix `d`.
    fn torus_of(&self, d: &Matrix) -> Result<Option<Vec<RingElement>>, DecompError> {
        let n = d.rows();
        if (0..n).any(|i| (0..n).any(|j| i != j && !d.get(i, j).is_zero())) {
            return Ok(None);
        }
        if (0..n).any(|i| d.get(i, i).invert().is_err()) {
            return Ok(None);
        }
        let chars = self.simple_characters(d)?;
        let rebuilt = self.group.evaluate_word(&self.torus_word(&chars), &self.ring)?;
        Ok(self.same(&rebuilt, d)?.then_some(chars))
    }

    /// First `(u, u')` with `u^{-1} M u'^{-1} n_w^{-1}` in the torus.
    fn find_in_cell(&self, m: &Matrix, w: usize) -> Result<Option<BruhatFactorization>, DecompError> {
        let (we, ninv) = &self.weyl[w];
        for (up, uinv) in &self.unipotents {
            let a = uinv.try_mul(m)?;
            for (upp, uinv2) in &self.unipotents {
                let d = a.try_mul(uinv2)?.try_mul(ninv)?;
                if let Some(chars) = self.torus_of(&d)? {
                    return Ok(Some(self.assemble(&chars, up, upp, we, w)?));
                }
            }
        }
        Ok(None)
    }

    fn assemble(
        &self,
        chars: &[RingElement],
        u: &[u64],
        u_prime: &[u64],
        w: &WeylElement,
        index: usize,
    ) -> Result<BruhatFactorization, DecompError> {
        let system = self.group.system();
        let xword = |params: &[u64], scale: &dyn Fn(&Root) -> Result<RingElement, DecompError>| {
            let mut letters = Vec::new();
            for (r, &c) in self.positive.iter().zip(params) {
                if c == 0 {
                    continue;
                }
                let v = RingElement::from_int(&self.ring, c as i64).try_mul(&scale(r)?)?;
                letters.push(Letter::X(r.clone(), Expr::from_element(&v)));
            }
            Ok::<_, DecompError>(GroupWord::new(system, letters))
        };
        let chi_inv = |r: &Root| -> Result<RingElement, DecompError> {
            let mut acc = RingElement::one(&self.ring);
            for (l, &k) in chars.iter().zip(r.coords()) {
                acc = acc.try_mul(&l.powi(k as i64)?)?;
            }
            Ok(acc.invert()?)
        };
        let one = |_: &Root| Ok(RingElement::one(&self.ring));
        Ok(BruhatFactorization {
            torus: self.torus_word(chars),
            u: xword(u, &chi_inv)?,
            weyl: w.representative(system),
            u_prime: xword(u_prime, &one)?,
            weyl_index: index,
        })
    }
}

/// Decompose `m`, searching Weyl cells in canonical order and unipotent parameters
/// lexicographically; `cap` bounds the number of candidate triples.
pub fn bruhat_bruteforce(group: &ChevalleyGroup, m: &Matrix, cap: u128) -> Result<BruhatFactorization, DecompError> {
    let s = Search::new(group, m.ring(), cap)?;
    for w in 0..s.weyl.len() {
        if let Some(f) = s.find_in_cell(m, w)? {
            return Ok(f);
        }
    }
    Err(DecompError::ElementNotInGroup)
}

/// Indices of every Weyl cell containing `m` (a single index for group elements).
pub fn bruhat_cells(group: &ChevalleyGroup, m: &Matrix, cap: u128) -> Result<Vec<usize>, DecompError> {
    let s = Search::new(group, m.ring(), cap)?;
    let mut out = Vec::new();
    for w in 0..s.weyl.len() {
        if s.find_in_cell(m, w)?.is_some() {
            out.push(w);
        }
    }
    Ok(out)
}

//! Endomorphisms determined by generator images.

use std::collections::BTreeSet;

use crate::classes::Classes;
use crate::table::FiniteGroupTable;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EndoMap {
    /// Image id of each search generator.
    pub images: Vec<u32>,
    /// Image id of every element.
    pub table: Vec<u32>,
}

impl EndoMap {
    pub fn apply(&self, g: u32) -> u32 {
        self.table[g as usize]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        EndoMap {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
            table: other.table.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        self.table.iter().collect::<BTreeSet<_>>().len() == self.table.len()
    }
}

fn generator_ids(g: &FiniteGroupTable) -> Vec<u32> {
    g.generators.iter().map(|(_, id)| *id).collect()
}

/// Breadth-first extension over the Cayley graph of the search generators;
/// `None` when two words for one element receive different images or the
/// generators do not reach every element.
pub fn extend_homomorphism(g: &FiniteGroupTable, images: &[u32]) -> Option<EndoMap> {
    let gens = generator_ids(g);
    if images.len() != gens.len() {
        return None;
    }
    let unset = u32::MAX;
    let mut table = vec![unset; g.len()];
    table[0] = 0;
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        let fx = table[x as usize];
        for (&s, &fs) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, fs);
            match table[y as usize] {
                v if v == unset => {
                    table[y as usize] = fy;
                    queue.push(y);
                }
                v if v != fy => return None,
                _ => {}
            }
        }
        head += 1;
    }
    (queue.len() == g.len()).then(|| EndoMap { images: images.to_vec(), table })
}

/// Conjugation `x -> h x h^{-1}`.
pub fn inner_map(g: &FiniteGroupTable, h: u32) -> EndoMap {
    EndoMap {
        images: generator_ids(g).iter().map(|&s| g.conj(h, s)).collect(),
        table: (0..g.len() as u32).map(|x| g.conj(h, x)).collect(),
    }
}

/// Smallest `h` with `phi = conj(h)`, if any.
pub fn is_inner(g: &FiniteGroupTable, phi: &EndoMap) -> Option<u32> {
    let gens = generator_ids(g);
    (0..g.len() as u32).find(|&h| gens.iter().zip(&phi.images).all(|(&s, &fs)| g.conj(h, s) == fs))
}

/// Whether `phi(x)` is conjugate to `x` for every element.
pub fn preserves_classes(classes: &Classes, phi: &EndoMap) -> bool {
    phi.table.iter().enumerate().all(|(x, &fx)| classes.same_class(x as u32, fx))
}

struct Search<'a> {
    g: &'a FiniteGroupTable,
    classes: &'a Classes,
    gens: Vec<u32>,
    out: Vec<EndoMap>,
}

impl Search<'_> {
    /// Pairwise prechecks of a partial tuple against the generators.
    fn compatible(&self, chosen: &[u32]) -> bool {
        let k = chosen.len() - 1;
        let (s, fs) = (self.gens[k], chosen[k]);
        (0..k).all(|i| {
            let (t, ft) = (self.gens[i], chosen[i]);
            self.classes.same_class(self.g.commutator(t, s), self.g.commutator(ft, fs))
                && self.classes.same_class(self.g.mul(t, s), self.g.mul(ft, fs))
        })
    }

    fn run(&mut self, chosen: &mut Vec<u32>) {
        if chosen.len() == self.gens.len() {
            if let Some(phi) = extend_homomorphism(self.g, chosen) {
                if preserves_classes(self.classes, &phi) {
                    self.out.push(phi);
                }
            }
            return;
        }
        let s = self.gens[chosen.len()];
        for &c in self.classes.class_members(s) {
            chosen.push(c);
            if self.compatible(chosen) {
                self.run(chosen);
            }
            chosen.pop();
        }
    }
}

/// Every class-preserving endomorphism, sorted by generator images.
pub fn class_preserving_endos(g: &FiniteGroupTable, classes: &Classes) -> Vec<EndoMap> {
    let mut search = Search { g, classes, gens: generator_ids(g), out: Vec::new() };
    search.run(&mut Vec::new());
    let mut out = search.out;
    out.sort();
    out
}

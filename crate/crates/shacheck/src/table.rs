//! Elementary groups over prime fields enumerated by closure.

use std::collections::HashMap;

use chevgroup::{ChevalleyGroup, GroupWord, Realization, SystemType};
use exactring::{Expr, RingElement, RingSpec};

use crate::error::ShaError;
use crate::modmat::ModMatrix;

pub const DEFAULT_CAP: usize = 10_000;

/// Full multiplication tables are stored up to this order.
const TABLE_LIMIT: usize = 2048;

/// Smallest faithful model used for each system.
pub fn default_realization(system: SystemType) -> Realization {
    match system {
        SystemType::A1 => Realization::A1Std,
        SystemType::A2 => Realization::Pgl3,
        _ => Realization::Adjoint,
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    pub system: SystemType,
    pub p: u64,
    pub realization: Realization,
    elements: Vec<ModMatrix>,
    index: HashMap<ModMatrix, u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
    /// Search generators `x_{±a_i}(1)` with their ids.
    pub generators: Vec<(GroupWord, u32)>,
    /// Ids of every `x_g(t)`, `t != 0`.
    pub root_elements: Vec<u32>,
}

fn search_generators(system: SystemType) -> Vec<GroupWord> {
    let mut out = Vec::new();
    for sign in [1, -1] {
        for i in 0..system.rank() {
            let r = system.simple_root(i);
            let r = if sign > 0 { r } else { r.neg() };
            out.push(GroupWord::x(&r, Expr::int(1)));
        }
    }
    out
}

impl FiniteGroupTable {
    pub fn projective(&self) -> bool {
        self.realization == Realization::Pgl3
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> &[ModMatrix] {
        &self.elements
    }

    pub fn element(&self, id: u32) -> &ModMatrix {
        &self.elements[id as usize]
    }

    /// Id of a matrix after canonicalization, if it lies in the group.
    pub fn index_of(&self, m: &ModMatrix) -> Option<u32> {
        self.index.get(&m.canonical(self.projective())).copied()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.len() + b as usize],
            None => self.index_of(&self.element(a).mul(self.element(b))).expect("closed under products"),
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `h g h^{-1}`.
    pub fn conj(&self, h: u32, g: u32) -> u32 {
        self.mul(self.mul(h, g), self.inv(h))
    }

    /// `a b a^{-1} b^{-1}`.
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn order(&self, a: u32) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Closure of `gens` under right multiplication, starting at the identity.
    pub fn closure(
        system: SystemType,
        p: u64,
        realization: Realization,
        gens: &[ModMatrix],
        cap: usize,
    ) -> Result<FiniteGroupTable, ShaError> {
        let projective = realization == Realization::Pgl3;
        let n = gens.first().map_or(1, ModMatrix::dim);
        let gens: Vec<ModMatrix> = gens.iter().map(|g| g.canonical(projective)).collect();
        let id = ModMatrix::identity(n, p as u32);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            for g in &gens {
                let next = cur.mul(g).canonical(projective);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(ShaError::CapExceeded(cap));
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            head += 1;
        }
        let inverse = elements
            .iter()
            .map(|m| {
                let inv = m.inverse().ok_or_else(|| ShaError::Invalid("singular group element".into()))?;
                index.get(&inv.canonical(projective)).copied().ok_or_else(|| ShaError::Invalid("inverse missing".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let table = (elements.len() <= TABLE_LIMIT).then(|| {
            elements
                .iter()
                .flat_map(|a| elements.iter().map(|b| index[&a.mul(b).canonical(projective)]))
                .collect()
        });
        Ok(FiniteGroupTable {
            system,
            p,
            realization,
            elements,
            index,
            inverse,
            table,
            generators: Vec::new(),
            root_elements: Vec::new(),
        })
    }
}

/// Root elements `x_g(t)` for every root and every nonzero residue.
pub fn root_element_matrices(system: SystemType, p: u64, realization: Realization) -> Result<Vec<ModMatrix>, ShaError> {
    let ring = RingSpec::modular(p)?;
    let group = ChevalleyGroup::new(system, realization)?;
    let mut out = Vec::new();
    for r in system.roots() {
        for t in 1..p {
            let m = group.root_element(&r, &RingElement::from_int(&ring, t as i64))?;
            out.push(ModMatrix::from_matrix(&m)?);
        }
    }
    Ok(out)
}

/// The group generated by all `x_g(t)`, `t` in `F_p`.
pub fn generate_group(
    system: SystemType,
    p: u64,
    realization: Realization,
    cap: usize,
) -> Result<FiniteGroupTable, ShaError> {
    if p < 2 {
        return Err(ShaError::Invalid(format!("modulus {p} is not prime")));
    }
    let gens = root_element_matrices(system, p, realization)?;
    let mut g = FiniteGroupTable::closure(system, p, realization, &gens, cap)?;
    g.root_elements = gens.iter().map(|m| g.index_of(m).expect("generator in closure")).collect();
    let ring = RingSpec::modular(p)?;
    let group = ChevalleyGroup::new(system, realization)?;
    for w in search_generators(system) {
        let m = ModMatrix::from_matrix(&group.evaluate_word(&w, &ring)?)?;
        let id = g.index_of(&m).expect("generator in closure");
        g.generators.push((w, id));
    }
    Ok(g)
}

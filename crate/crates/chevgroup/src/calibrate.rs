use std::sync::Arc;

use rootsys::SystemType;

use crate::basis::ChevalleyBasis;
use crate::error::ChevError;
use crate::group::{ChevalleyGroup, CommutatorRelation, RelationFactor};
use crate::relations::{normalized_relations, same_factors};
use crate::Realization;

/// Relation after rescaling `e_r` by `flips[r]` for every root.
fn rescale(rel: &CommutatorRelation, flips: &[i32]) -> CommutatorRelation {
    let s = |r: &rootsys::Root| flips[r.positive_index()] as i64;
    let (eg, ed) = (s(&rel.gamma), s(&rel.delta));
    CommutatorRelation {
        gamma: rel.gamma.clone(),
        delta: rel.delta.clone(),
        factors: rel
            .factors
            .iter()
            .map(|f| RelationFactor {
                root: f.root.clone(),
                coeff: f.coeff * s(&f.root) * eg.pow(f.i) * ed.pow(f.j),
                ..f.clone()
            })
            .collect(),
    }
}

/// First sign vector (simple roots fixed to +1, others enumerated from all +1)
/// under which every normalized relation is reproduced.
pub(crate) fn calibrate(system: SystemType) -> Result<Vec<i32>, ChevError> {
    let positive = system.positive_roots();
    let plain = vec![1; positive.len()];
    let wanted = normalized_relations(system);
    if wanted.is_empty() {
        return Ok(plain);
    }
    let basis = Arc::new(ChevalleyBasis::with_flips(system, &plain)?);
    let group = ChevalleyGroup::from_basis(basis, Realization::Adjoint)?;
    let raw: Vec<CommutatorRelation> =
        wanted.iter().map(|w| group.commutator_relation(&w.gamma, &w.delta)).collect::<Result<_, _>>()?;
    let free: Vec<usize> = positive.iter().enumerate().filter(|(_, r)| !r.is_simple()).map(|(i, _)| i).collect();
    for mask in 0u32..(1 << free.len()) {
        let mut flips = plain.clone();
        for (bit, &idx) in free.iter().enumerate() {
            if mask & (1 << (free.len() - 1 - bit)) != 0 {
                flips[idx] = -1;
            }
        }
        if raw.iter().zip(&wanted).all(|(r, w)| same_factors(&rescale(r, &flips), w)) {
            return Ok(flips);
        }
    }
    Err(ChevError::Internal(format!("no sign choice reproduces the {system} relations")))
}

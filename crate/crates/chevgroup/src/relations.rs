//! Normalization of the commutator relations that fixes the signs of the Chevalley basis.

use rootsys::{Root, SystemType};

use crate::group::{CommutatorRelation, RelationFactor};

/// `(gamma, delta, [(root, N, i, j)])` in alias notation.
type Row = (&'static str, &'static str, &'static [(&'static str, i64, u32, u32)]);

const A2: &[Row] = &[
    ("a1", "a2", &[("a1+a2", 1, 1, 1)]),
    ("a1", "-a1-a2", &[("-a2", -1, 1, 1)]),
    ("a2", "-a1-a2", &[("-a1", 1, 1, 1)]),
    ("a1+a2", "-a1", &[("a2", -1, 1, 1)]),
    ("a1+a2", "-a2", &[("a1", 1, 1, 1)]),
];

const B2: &[Row] = &[
    ("a", "b", &[("a+b", -1, 1, 1), ("a+2b", -1, 1, 2)]),
    ("a+b", "b", &[("a+2b", -2, 1, 1)]),
];

const G2: &[Row] = &[
    ("a", "b", &[("a+b", 1, 1, 1), ("a+3b", -1, 1, 3), ("a+2b", -1, 1, 2), ("2a+3b", 1, 2, 3)]),
    ("a+b", "b", &[("a+2b", 2, 1, 1), ("a+3b", 3, 1, 2), ("2a+3b", 3, 2, 1)]),
    ("a", "a+3b", &[("2a+3b", 1, 1, 1)]),
    ("a+2b", "b", &[("a+3b", -3, 1, 1)]),
    ("a+b", "a+2b", &[("2a+3b", 3, 1, 1)]),
];

/// The commutator relations the calibrated basis reproduces, factors in displayed order.
pub fn normalized_relations(system: SystemType) -> Vec<CommutatorRelation> {
    let rows: &[Row] = match system {
        SystemType::A1 => &[],
        SystemType::A2 => A2,
        SystemType::B2 => B2,
        SystemType::G2 => G2,
    };
    let root = |s: &str| -> Root { system.parse_root(s).expect("valid alias") };
    rows.iter()
        .map(|(g, d, fs)| CommutatorRelation {
            gamma: root(g),
            delta: root(d),
            factors: fs.iter().map(|(r, n, i, j)| RelationFactor { root: root(r), coeff: *n, i: *i, j: *j }).collect(),
        })
        .collect()
}

/// Same factors up to order.
pub fn same_factors(a: &CommutatorRelation, b: &CommutatorRelation) -> bool {
    let key = |r: &CommutatorRelation| {
        let mut v: Vec<_> = r.factors.iter().map(|f| (f.root.clone(), f.coeff, f.i, f.j)).collect();
        v.sort();
        v
    };
    a.gamma == b.gamma && a.delta == b.delta && key(a) == key(b)
}

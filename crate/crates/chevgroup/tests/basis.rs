use chevgroup::relations::{normalized_relations, same_factors};
use chevgroup::{build_basis, ChevalleyBasis, ChevalleyGroup, SystemType};
use rootsys::root_string;

#[test]
fn dimensions() {
    let dims: Vec<usize> = SystemType::ALL.iter().map(|&s| build_basis(s).dim()).collect();
    assert_eq!(dims, vec![3, 8, 10, 14]);
}

#[test]
fn a1_basis_order() {
    let b = build_basis(SystemType::A1);
    assert_eq!(b.labels(), &["e[a]", "h1", "e[-a]"]);
}

#[test]
fn jacobi_identity_and_integrality() {
    for s in SystemType::ALL {
        let b = build_basis(s);
        assert!(b.jacobi_holds(), "{s}");
        assert!(b.is_integral(), "{s}");
        assert!(b.cartan_action_consistent(), "{s}");
    }
}

#[test]
fn antisymmetry_and_magnitudes() {
    for s in SystemType::ALL {
        let b = build_basis(s);
        assert!(b.structure_constants_consistent(), "{s}");
        for ((g, d), n) in b.structure_constants() {
            assert_eq!(b.structure_constant(&d, &g), Some(-n));
            let (p, _) = root_string(&g, &d).unwrap();
            assert_eq!(n.abs(), p as i64 + 1, "{s} N({g},{d})");
        }
    }
}

#[test]
fn b2_structure_constant_pattern() {
    let s = SystemType::B2;
    let b = build_basis(s);
    let r = |t: &str| s.parse_root(t).unwrap();
    assert_eq!(b.structure_constant(&r("a"), &r("b")).map(i64::abs), Some(1));
    assert_eq!(b.structure_constant(&r("a+b"), &r("b")).map(i64::abs), Some(2));
    assert_eq!(b.structure_constant(&r("a"), &r("a+2b")), None);
}

#[test]
fn coroots_are_brackets_of_opposite_root_vectors() {
    for s in SystemType::ALL {
        let b = build_basis(s);
        for i in 0..s.rank() {
            let c = b.coroot_coordinates(&s.simple_root(i));
            for (k, v) in c.iter().enumerate() {
                assert_eq!(v.to_integer(), if k == i { 1.into() } else { 0.into() });
            }
        }
    }
}

#[test]
fn calibrated_signs() {
    let neg = |s: SystemType| -> Vec<String> {
        build_basis(s).flips().into_iter().filter(|(_, f)| *f < 0).map(|(r, _)| r.alias()).collect()
    };
    assert!(neg(SystemType::A1).is_empty());
    assert!(neg(SystemType::A2).is_empty());
    assert_eq!(neg(SystemType::B2), vec!["a+b", "a+2b"]);
    assert_eq!(neg(SystemType::G2), vec!["a+2b", "a+3b", "2a+3b"]);
}

#[test]
fn calibrated_basis_reproduces_normalized_relations() {
    for s in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(s);
        for want in normalized_relations(s) {
            let got = g.commutator_relation(&want.gamma, &want.delta).unwrap();
            assert!(same_factors(&got, &want), "{s}: got {got}, want {want}");
        }
    }
}

#[test]
fn unflipped_b2_basis_misses_the_normalization() {
    let s = SystemType::B2;
    let plain = std::sync::Arc::new(ChevalleyBasis::with_flips(s, &[1, 1, 1, 1]).unwrap());
    let g = ChevalleyGroup::from_basis(plain, chevgroup::Realization::Adjoint).unwrap();
    let mismatches = normalized_relations(s)
        .iter()
        .filter(|w| !same_factors(&g.commutator_relation(&w.gamma, &w.delta).unwrap(), w))
        .count();
    assert!(mismatches > 0);
}

#[test]
fn bad_sign_vector_is_rejected() {
    assert!(ChevalleyBasis::with_flips(SystemType::A2, &[1, 1]).is_err());
    assert!(ChevalleyBasis::with_flips(SystemType::A2, &[1, 2, 1]).is_err());
}

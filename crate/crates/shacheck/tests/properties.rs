use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use shacheck::table::root_element_matrices;
use shacheck::{class_preserving_endos, conjugacy_classes, extend_homomorphism, generate_group, inner_map, is_inner};
use shacheck::{FiniteGroupTable, DEFAULT_CAP};
use chevgroup::{Realization, SystemType};
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn a1_f5() -> &'static FiniteGroupTable {
    static G: OnceLock<FiniteGroupTable> = OnceLock::new();
    G.get_or_init(|| generate_group(SystemType::A1, 5, Realization::A1Std, DEFAULT_CAP).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn closure_ignores_generator_order(seed in any::<u64>()) {
        let g = a1_f5();
        let mut gens = root_element_matrices(SystemType::A1, 5, Realization::A1Std).unwrap();
        gens.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = FiniteGroupTable::closure(SystemType::A1, 5, Realization::A1Std, &gens, DEFAULT_CAP).unwrap();
        let a: BTreeSet<_> = g.elements().iter().cloned().collect();
        let b: BTreeSet<_> = h.elements().iter().cloned().collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn extension_respects_composition(h1 in 0u32..60, h2 in 0u32..60) {
        let g = a1_f5();
        let (a, b) = (inner_map(g, h1), inner_map(g, h2));
        let composed: Vec<u32> = b.images.iter().map(|&x| a.apply(x)).collect();
        let direct = extend_homomorphism(g, &composed).unwrap();
        prop_assert_eq!(direct, a.compose(&b));
    }

    #[test]
    fn extended_maps_are_homomorphisms(h in 0u32..60, x in 0u32..60, y in 0u32..60) {
        let g = a1_f5();
        let phi = extend_homomorphism(g, &inner_map(g, h).images).unwrap();
        prop_assert_eq!(phi.apply(g.mul(x, y)), g.mul(phi.apply(x), phi.apply(y)));
    }
}

#[test]
fn inner_maps_form_a_subgroup_of_the_class_preserving_set() {
    let g = a1_f5();
    let classes = conjugacy_classes(g);
    let endos = class_preserving_endos(g, &classes);
    let inner: Vec<_> = endos.iter().filter(|phi| is_inner(g, phi).is_some()).collect();
    let set: BTreeSet<_> = inner.iter().map(|phi| phi.images.clone()).collect();
    for a in &inner {
        for b in &inner {
            assert!(set.contains(&a.compose(b).images));
        }
    }
}

use std::collections::{HashSet, VecDeque};

use chevgroup::{pgl3_canonical, ChevalleyGroup, GroupWord, Realization, SystemType};
use decomp::*;
use exactring::{parse_element, Matrix, Ring, RingElement, RingError, RingSpec};
use proptest::prelude::*;

fn el(ring: &Ring, s: &str) -> RingElement {
    parse_element(ring, s).unwrap()
}

fn mat(ring: &Ring, rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(ring, rows.iter().map(|r| r.iter().map(|s| el(ring, s)).collect()).collect()).unwrap()
}

fn a1std() -> ChevalleyGroup {
    ChevalleyGroup::new(SystemType::A1, Realization::A1Std).unwrap()
}

#[test]
fn rank_one_round_trip_all_roots() {
    let ring = RingSpec::fraction(&["u", "v"]).unwrap();
    let (u, v) = (el(&ring, "u"), el(&ring, "v"));
    for sys in [SystemType::A1, SystemType::A2, SystemType::B2] {
        let g = ChevalleyGroup::adjoint(sys);
        for r in sys.roots() {
            let claim = rank_one_factor(&r, &u, &v).unwrap();
            let target = GroupWord::parse(sys, &format!("x({}, u) x({}, v)", r.neg().alias(), r.alias())).unwrap();
            let ver = verify_factorization(&g, &target, &claim, &ring).unwrap();
            assert!(ver.holds, "{sys} {r}: {:?}", ver.nonzero());
        }
    }
}

#[test]
fn rank_one_round_trip_g2_simple_roots() {
    let ring = RingSpec::fraction(&["u", "v"]).unwrap();
    let (u, v) = (el(&ring, "u"), el(&ring, "v"));
    let sys = SystemType::G2;
    let g = ChevalleyGroup::adjoint(sys);
    for name in ["a", "b", "-2a-3b"] {
        let r = sys.parse_root(name).unwrap();
        let claim = rank_one_factor(&r, &u, &v).unwrap();
        let target = GroupWord::parse(sys, &format!("x({}, u) x({}, v)", r.neg().alias(), r.alias())).unwrap();
        assert!(verify_factorization(&g, &target, &claim, &ring).unwrap().holds, "{r}");
    }
}

#[test]
fn rank_one_degenerate_cases() {
    let ring = RingSpec::fraction(&["v"]).unwrap();
    let g = ChevalleyGroup::adjoint(SystemType::A2);
    let r = SystemType::A2.parse_root("a1+a2").unwrap();
    let w = rank_one_factor(&r, &RingElement::zero(&ring), &el(&ring, "v")).unwrap();
    assert_eq!(g.evaluate_word(&w, &ring).unwrap(), g.root_element(&r, &el(&ring, "v")).unwrap());
    let f5 = RingSpec::modular(5).unwrap();
    let two = RingElement::from_int(&f5, 2);
    assert!(matches!(rank_one_factor(&r, &two, &two), Err(DecompError::Ring(RingError::NotAUnit(_)))));
}

#[test]
fn nilpotent_commutation() {
    let ring = exactring::quotient_ring(&["u"], None, &[("u^2", "0")]).unwrap();
    let u = el(&ring, "u");
    let sys = SystemType::A2;
    let a1 = sys.parse_root("a1").unwrap();
    let target = GroupWord::parse(sys, "x(-a1, u) x(a1, 1)").unwrap();
    for g in [ChevalleyGroup::adjoint(sys), ChevalleyGroup::new(sys, Realization::Pgl3).unwrap()] {
        let claim = nilpotent_commute(&a1, &u).unwrap();
        assert!(verify_factorization(&g, &target, &claim, &ring).unwrap().holds);
        let zero = nilpotent_commute(&a1, &RingElement::zero(&ring)).unwrap();
        let x1 = GroupWord::parse(sys, "x(a1, 1)").unwrap();
        assert!(verify_factorization(&g, &x1, &zero, &ring).unwrap().holds);
    }
}

#[test]
fn nilpotent_commutation_needs_the_rule() {
    let ring = RingSpec::polynomial(&["u"]).unwrap();
    let a1 = SystemType::A2.parse_root("a1").unwrap();
    assert!(matches!(nilpotent_commute(&a1, &el(&ring, "u")), Err(DecompError::MissingRule(..))));
    let g = ChevalleyGroup::new(SystemType::A2, Realization::Pgl3).unwrap();
    let frac = RingSpec::fraction(&["u"]).unwrap();
    let rhs_torus = g.evaluate_str("h(a1, 1-u) x(a1, 1+u) x(-a1, u)", &frac).unwrap();
    let lhs_frac = g.evaluate_str("x(-a1, u) x(a1, 1)", &frac).unwrap();
    let res = verify_matrices(&lhs_frac, &rhs_torus, false).unwrap();
    assert!(!res.holds);
    for (_, _, v) in res.residual.nonzero_entries() {
        let num = v.numerator().unwrap();
        assert!(num.terms().all(|(m, _)| m[0] >= 2), "residual {v} is not a multiple of u^2");
    }
}

#[test]
fn phi_factorization() {
    let ring = RingSpec::polynomial(&["h"]).unwrap();
    let g = a1std();
    let p_inv = mat(&ring, &[&["1", "-h", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
    let p = mat(&ring, &[&["1", "h", "0"], &["0", "1", "0"], &["0", "0", "1"]]);
    let x = g.evaluate_str("x(-a, 1)", &ring).unwrap();
    let target = &(&p_inv * &x) * &p;
    let claim = mat(&ring, &[&["1-h", "-h^2", "-2h"], &["1", "1+h", "2"], &["1", "h", "1"]]);
    assert!(verify_matrices(&target, &claim, false).unwrap().holds);
    assert!(verify_matrices(&target, &target, false).unwrap().holds);
    let flipped = mat(&ring, &[&["1+h", "-h^2", "-2h"], &["1", "1+h", "2"], &["1", "h", "1"]]);
    let v = verify_matrices(&target, &flipped, false).unwrap();
    assert!(!v.holds);
    assert_eq!(v.nonzero(), vec![(1, 1, "-2*h".to_string())]);
}

#[test]
fn gauss_examples() {
    let f5 = RingSpec::modular(5).unwrap();
    let g = a1std();
    let m = g.evaluate_str("x(-a, 1)", &f5).unwrap();
    let f = gauss_decompose_a1(&m).unwrap();
    let ints: Vec<u64> = [&f.t, &f.a, &f.b, &f.c].iter().map(|e| e.as_residue().unwrap()).collect();
    assert_eq!(ints, vec![1, 0, 1, 0]);
    let f = gauss_decompose_a1(&Matrix::identity(&f5, 3)).unwrap();
    let ints: Vec<u64> = [&f.t, &f.a, &f.b, &f.c].iter().map(|e| e.as_residue().unwrap()).collect();
    assert_eq!(ints, vec![1, 0, 0, 0]);
    let w = g.evaluate_str("w(a, 1)", &f5).unwrap();
    let f = gauss_decompose_a1(&w).unwrap();
    assert_eq!(g.evaluate_word(&f.word(), &f5).unwrap(), w);
}

#[test]
fn gauss_rejects_non_group_matrices() {
    let f5 = RingSpec::modular(5).unwrap();
    let d = Matrix::diagonal(&f5, vec![RingElement::from_int(&f5, 2), RingElement::one(&f5), RingElement::one(&f5)]);
    assert!(matches!(gauss_decompose_a1(&d), Err(DecompError::NoFactorization(_))));
    assert!(matches!(gauss_decompose_a1(&Matrix::zeros(&f5, 3, 3)), Err(DecompError::NoFactorization(_))));
    let q = RingSpec::rationals();
    assert!(matches!(gauss_decompose_a1(&Matrix::identity(&q, 3)), Err(DecompError::Unsupported(_))));
}

#[test]
fn gauss_entry_residuals() {
    let ring = RingSpec::fraction(&["t", "a", "b", "c"]).unwrap();
    let m = a1std().evaluate_str("t1(t) x(a, a) x(-a, b) x(a, c)", &ring).unwrap();
    assert_eq!(*m.get(2, 0), el(&ring, "b (a b + 1)"));
    assert_eq!(*m.get(1, 2), el(&ring, "2 b (b c + 1) / t"));
}

fn word_strategy() -> impl Strategy<Value = String> {
    let letter = prop_oneof![
        (0i64..50).prop_map(|p| format!("x(a, {p})")),
        (0i64..50).prop_map(|p| format!("x(-a, {p})")),
        (1i64..3).prop_map(|p| format!("w(a, {p})")),
    ];
    prop::collection::vec(letter, 0..7).prop_map(|v| v.join(" "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gauss_round_trip(word in word_strategy(), p in prop::sample::select(vec![3u64, 5, 7]), k in 1u32..3) {
        let ring = RingSpec::modular(p.pow(k)).unwrap();
        let g = a1std();
        let m = g.evaluate_str(&word, &ring).unwrap();
        let f = gauss_decompose_a1(&m).unwrap();
        prop_assert_eq!(g.evaluate_word(&f.word(), &ring).unwrap(), m);
    }
}

fn residues(m: &Matrix) -> Vec<u64> {
    m.entries().iter().map(|e| e.as_residue().unwrap()).collect()
}

/// Closure of the root elements `x_{+-a_i}(1)` under multiplication.
fn enumerate(g: &ChevalleyGroup, ring: &Ring) -> Vec<Matrix> {
    let sys = g.system();
    let one = RingElement::one(ring);
    let gens: Vec<Matrix> = sys
        .simple_roots()
        .iter()
        .flat_map(|r| [r.clone(), r.neg()])
        .map(|r| g.root_element(&r, &one).unwrap())
        .collect();
    let canon = |m: &Matrix| if g.realization() == Realization::Pgl3 { pgl3_canonical(m).unwrap() } else { m.clone() };
    let id = Matrix::identity(ring, g.dim());
    let mut seen = HashSet::from([residues(&id)]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for s in &gens {
            let n = canon(&(&m * s));
            if seen.insert(residues(&n)) {
                out.push(n.clone());
                queue.push_back(n);
            }
        }
    }
    out
}

fn check_partition(g: &ChevalleyGroup, p: u64, order: usize) {
    let ring = RingSpec::modular(p).unwrap();
    let elems = enumerate(g, &ring);
    assert_eq!(elems.len(), order);
    let nw = weyl_representatives(g.system()).len();
    let mut sizes = vec![0usize; nw];
    for m in &elems {
        let cells = bruhat_cells(g, m, 1_000_000).unwrap();
        assert_eq!(cells.len(), 1, "element in {} cells", cells.len());
        sizes[cells[0]] += 1;
        let f = bruhat_bruteforce(g, m, 1_000_000).unwrap();
        assert_eq!(f.weyl_index, cells[0]);
        let back = g.evaluate_word(&f.word(), &ring).unwrap();
        assert!(verify_matrices(&back, m, g.realization() == Realization::Pgl3).unwrap().holds);
    }
    assert_eq!(sizes.iter().sum::<usize>(), order);
    assert!(sizes.iter().all(|&s| s > 0));
}

#[test]
fn bruhat_cells_partition_a1_f3() {
    check_partition(&a1std(), 3, 12);
}

#[test]
fn bruhat_cells_partition_a1_f5() {
    check_partition(&a1std(), 5, 60);
}

#[test]
fn bruhat_cells_partition_a2_f2() {
    check_partition(&ChevalleyGroup::new(SystemType::A2, Realization::Pgl3).unwrap(), 2, 168);
}

#[test]
fn bruhat_examples() {
    let f3 = RingSpec::modular(3).unwrap();
    let g = a1std();
    let x = g.evaluate_str("x(a, 1)", &f3).unwrap();
    let f = bruhat_bruteforce(&g, &x, 1000).unwrap();
    assert!(f.weyl.is_empty());
    assert_eq!(g.evaluate_word(&f.word(), &f3).unwrap(), x);
    let w = g.evaluate_str("w(a, 1)", &f3).unwrap();
    let f = bruhat_bruteforce(&g, &w, 1000).unwrap();
    assert_eq!(f.weyl.to_string(), "w(a, 1)");
    let d = Matrix::diagonal(&f3, vec![RingElement::from_int(&f3, 2), RingElement::one(&f3), RingElement::one(&f3)]);
    assert!(matches!(bruhat_bruteforce(&g, &d, 1000), Err(DecompError::ElementNotInGroup)));
    assert!(matches!(bruhat_bruteforce(&g, &x, 10), Err(DecompError::TooLarge { .. })));
}

#[test]
fn weyl_group_orders() {
    let orders: Vec<usize> = SystemType::ALL.iter().map(|&s| weyl_representatives(s).len()).collect();
    assert_eq!(orders, vec![2, 6, 8, 12]);
    let g2 = weyl_representatives(SystemType::G2);
    assert_eq!(g2.last().unwrap().length(), 6);
}


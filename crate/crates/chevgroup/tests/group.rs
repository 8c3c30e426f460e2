use chevgroup::{pgl3_canonical, pgl3_equal, ChevError, ChevalleyGroup, GroupWord, Realization, SystemType};
use exactring::{parse_element, Matrix, Ring, RingElement, RingError, RingSpec};
use rootsys::{cartan_integer, reflect, Root};

fn el(ring: &Ring, s: &str) -> RingElement {
    parse_element(ring, s).unwrap()
}

fn mat(ring: &Ring, rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(ring, rows.iter().map(|r| r.iter().map(|s| el(ring, s)).collect()).collect()).unwrap()
}

fn root(s: SystemType, t: &str) -> Root {
    s.parse_root(t).unwrap()
}

fn a1std() -> ChevalleyGroup {
    ChevalleyGroup::new(SystemType::A1, Realization::A1Std).unwrap()
}

fn pgl3() -> ChevalleyGroup {
    ChevalleyGroup::new(SystemType::A2, Realization::Pgl3).unwrap()
}

#[test]
fn a1_standard_root_elements() {
    let ring = RingSpec::polynomial(&["t"]).unwrap();
    let t = el(&ring, "t");
    let g = a1std();
    let s = SystemType::A1;
    assert_eq!(
        g.root_element(&root(s, "a"), &t).unwrap(),
        mat(&ring, &[&["1", "t^2", "2t"], &["0", "1", "0"], &["0", "t", "1"]])
    );
    assert_eq!(
        g.root_element(&root(s, "-a"), &t).unwrap(),
        mat(&ring, &[&["1", "0", "0"], &["t^2", "1", "2t"], &["t", "0", "1"]])
    );
}

#[test]
fn a1_standard_torus_shape() {
    let ring = RingSpec::fraction(&["t"]).unwrap();
    let g = a1std();
    let m = g.diag_torus(1, &el(&ring, "t")).unwrap();
    assert_eq!(m, mat(&ring, &[&["t", "0", "0"], &["0", "1/t", "0"], &["0", "0", "1"]]));
}

#[test]
fn zero_parameter_gives_identity() {
    let ring = RingSpec::rationals();
    for s in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(s);
        for r in s.roots() {
            assert!(g.root_element(&r, &RingElement::zero(&ring)).unwrap().is_identity());
            assert!(g.torus_element(&r, &RingElement::one(&ring)).unwrap().is_identity());
        }
    }
}

#[test]
fn additivity() {
    let ring = RingSpec::polynomial(&["t", "s"]).unwrap();
    let (t, s) = (el(&ring, "t"), el(&ring, "s"));
    for sys in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(sys);
        for r in sys.roots() {
            let lhs = &g.root_element(&r, &t).unwrap() * &g.root_element(&r, &s).unwrap();
            assert_eq!(lhs, g.root_element(&r, &(&t + &s)).unwrap(), "{sys} {r}");
        }
    }
}

#[test]
fn nilpotency_of_g2_root_elements() {
    let ring = RingSpec::rationals();
    let g = ChevalleyGroup::adjoint(SystemType::G2);
    let one = RingElement::one(&ring);
    let id = Matrix::identity(&ring, 14);
    let long = &g.root_element(&root(SystemType::G2, "a"), &one).unwrap() - &id;
    assert!(long.pow(3).is_zero());
    assert!(!long.pow(2).is_zero());
    let short = &g.root_element(&root(SystemType::G2, "b"), &one).unwrap() - &id;
    assert!(short.pow(4).is_zero());
    assert!(!short.pow(3).is_zero());
}

#[test]
fn torus_conjugation_scales_by_pairing() {
    let ring = RingSpec::fraction(&["u", "t"]).unwrap();
    let (u, t) = (el(&ring, "u"), el(&ring, "t"));
    let uinv = u.invert().unwrap();
    for sys in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(sys);
        for gam in sys.roots() {
            let h = g.torus_element(&gam, &u).unwrap();
            let hinv = g.torus_element(&gam, &uinv).unwrap();
            for d in sys.roots() {
                let k = cartan_integer(&d, &gam).unwrap();
                let lhs = &(&h * &g.root_element(&d, &t).unwrap()) * &hinv;
                let scaled = &u.powi(k as i64).unwrap() * &t;
                assert_eq!(lhs, g.root_element(&d, &scaled).unwrap(), "{sys} h_{gam} x_{d}");
            }
        }
    }
}

#[test]
fn a1_rank_one_torus_relation() {
    let ring = RingSpec::fraction(&["u", "t"]).unwrap();
    let g = ChevalleyGroup::adjoint(SystemType::A1);
    let lhs = g.evaluate_str("h(a, u) x(a, t) h(a, u)^-1", &ring);
    assert!(lhs.is_err());
    let lhs = g.evaluate_str("h(a, u) x(a, t) (h(a, u))^-1", &ring).unwrap();
    assert_eq!(lhs, g.evaluate_str("x(a, u^2 t)", &ring).unwrap());
}

#[test]
fn a1_adjoint_minus_one_torus_is_trivial() {
    let ring = RingSpec::rationals();
    let g = ChevalleyGroup::adjoint(SystemType::A1);
    let m = g.torus_element(&root(SystemType::A1, "a"), &RingElement::from_int(&ring, -1)).unwrap();
    assert!(m.is_identity());
}

#[test]
fn torus_element_is_weyl_quotient() {
    let ring = RingSpec::fraction(&["u"]).unwrap();
    let u = el(&ring, "u");
    let minus_one = RingElement::from_int(&ring, -1);
    for sys in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(sys);
        for r in sys.roots() {
            let w = &g.weyl_element(&r, &u).unwrap() * &g.weyl_element(&r, &minus_one).unwrap();
            assert_eq!(w, g.torus_element(&r, &u).unwrap(), "{sys} {r}");
        }
    }
}

#[test]
fn weyl_action_permutes_root_subgroups() {
    let ring = RingSpec::polynomial(&["t"]).unwrap();
    let t = el(&ring, "t");
    let one = RingElement::one(&ring);
    for sys in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(sys);
        for gam in sys.roots() {
            let w = g.weyl_element(&gam, &one).unwrap();
            let winv = g.weyl_element(&gam, &-&one).unwrap();
            for d in sys.roots() {
                let e = g.weyl_sign(&gam, &d).unwrap();
                assert!(e == 1 || e == -1);
                let lhs = &(&w * &g.root_element(&d, &t).unwrap()) * &winv;
                let target = reflect(&d, &gam).unwrap();
                let rhs = g.root_element(&target, &t.scale(&exactring::BigRational::from_integer(e.into())).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{sys} w_{gam} x_{d}");
                assert_eq!(g.weyl_sign(&gam, &d).unwrap(), e);
            }
        }
    }
}

#[test]
fn weyl_element_matches_its_defining_word() {
    let ring = RingSpec::fraction(&["u"]).unwrap();
    let g = ChevalleyGroup::adjoint(SystemType::B2);
    let lhs = g.evaluate_str("w(a+b, u)", &ring).unwrap();
    let rhs = g.evaluate_str("x(a+b, u) x(-a-b, -u^-1) x(a+b, u)", &ring).unwrap();
    assert_eq!(lhs, rhs);
    let id = g.evaluate_str("w(b, 1) (w(b, 1))^-1", &ring).unwrap();
    assert!(id.is_identity());
}

#[test]
fn commutator_examples() {
    let a2 = ChevalleyGroup::adjoint(SystemType::A2);
    let rel = a2.commutator_relation(&root(SystemType::A2, "a1"), &root(SystemType::A2, "a2")).unwrap();
    assert_eq!(rel.to_string(), "[x(a1, t), x(a2, u)] = x(a1+a2, t*u)");
    let g2 = ChevalleyGroup::adjoint(SystemType::G2);
    let rel = g2.commutator_relation(&root(SystemType::G2, "a+2b"), &root(SystemType::G2, "b")).unwrap();
    assert_eq!(rel.to_string(), "[x(a+2b, t), x(b, u)] = x(a+3b, -3*t*u)");
    let b2 = ChevalleyGroup::adjoint(SystemType::B2);
    let rel = b2.commutator_relation(&root(SystemType::B2, "a"), &root(SystemType::B2, "a+2b")).unwrap();
    assert!(rel.is_trivial());
}

#[test]
fn commutator_relations_hold_as_words() {
    for sys in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(sys);
        let ring = RingSpec::polynomial(&["t", "u"]).unwrap();
        for a in sys.roots() {
            for b in sys.roots() {
                if a == b || a == b.neg() {
                    assert!(matches!(g.commutator_relation(&a, &b), Err(ChevError::Proportional)));
                    continue;
                }
                let rel = g.commutator_relation(&a, &b).unwrap();
                let lhs = g.evaluate_word(&rel.lhs_word("t", "u"), &ring).unwrap();
                let rhs = g.evaluate_word(&rel.rhs_word("t", "u"), &ring).unwrap();
                assert_eq!(lhs, rhs, "{sys} {rel}");
            }
        }
    }
}

#[test]
fn relations_agree_across_a2_realizations() {
    let ring = RingSpec::polynomial(&["t", "u"]).unwrap();
    let ad = ChevalleyGroup::adjoint(SystemType::A2);
    let p = pgl3();
    for a in SystemType::A2.roots() {
        for b in SystemType::A2.roots() {
            if a == b || a == b.neg() {
                continue;
            }
            let rel = ad.commutator_relation(&a, &b).unwrap();
            let lhs = p.evaluate_word(&rel.lhs_word("t", "u"), &ring).unwrap();
            let rhs = p.evaluate_word(&rel.rhs_word("t", "u"), &ring).unwrap();
            assert_eq!(lhs, rhs, "{rel}");
        }
    }
}

#[test]
fn traces() {
    let a1 = a1std().trace_poly(&root(SystemType::A1, "a")).unwrap();
    assert_eq!(a1.to_string(), "s^2*t^2 + 4*s*t + 3");
    let expect = [(SystemType::A2, "a1", "s^2*t^2 + 6*s*t + 8"), (SystemType::B2, "a", "s^2*t^2 + 6*s*t + 10"), (SystemType::G2, "a", "s^2*t^2 + 8*s*t + 14")];
    for (sys, r, want) in expect {
        let tr = ChevalleyGroup::adjoint(sys).trace_poly(&root(sys, r)).unwrap();
        assert_eq!(tr.to_string(), want);
    }
}

#[test]
fn trace_constant_term_is_dimension() {
    for sys in SystemType::ALL {
        let g = ChevalleyGroup::adjoint(sys);
        for r in sys.roots() {
            let tr = g.trace_poly(&r).unwrap();
            assert_eq!(tr.as_poly().unwrap().constant_term(), exactring::BigRational::from_integer(g.dim().into()));
        }
    }
}

#[test]
fn pgl3_weyl_element_of_highest_root() {
    let ring = RingSpec::rationals();
    let m = pgl3().evaluate_str("w(a1+a2, 1)", &ring).unwrap();
    let want = Matrix::from_int_rows(&ring, &[vec![0, 0, 1], vec![0, 1, 0], vec![-1, 0, 0]]);
    assert!(pgl3_equal(&m, &want).unwrap());
}

#[test]
fn pgl3_weyl_square_is_torus() {
    let ring = RingSpec::fraction(&["u"]).unwrap();
    let g = pgl3();
    for r in ["a1", "a2"] {
        let lhs = g.evaluate_str(&format!("w({r}, u) w({r}, u)"), &ring).unwrap();
        let rhs = g.evaluate_str(&format!("h({r}, -1)"), &ring).unwrap();
        assert!(pgl3_equal(&lhs, &rhs).unwrap());
    }
}

#[test]
fn pgl3_torus_is_diagonal() {
    let ring = RingSpec::fraction(&["u"]).unwrap();
    let m = pgl3().evaluate_str("h(a1, u)", &ring).unwrap();
    assert_eq!(m, mat(&ring, &[&["u", "0", "0"], &["0", "1/u", "0"], &["0", "0", "1"]]));
}

#[test]
fn pgl3_equality_examples() {
    let f7 = RingSpec::modular(7).unwrap();
    let g = pgl3();
    let m = g.evaluate_str("x(a1, 1) w(a2, 3)", &f7).unwrap();
    let two = RingElement::from_int(&f7, 2);
    assert!(pgl3_equal(&m, &m.scale(&two)).unwrap());
    let x = g.evaluate_str("x(a1, 1)", &f7).unwrap();
    assert!(!pgl3_equal(&Matrix::identity(&f7, 3), &x).unwrap());
    let lift = g.evaluate_str("x(a2, 3) x(-a2, -5) x(a2, 3) w(a2, -1)", &f7).unwrap();
    assert!(pgl3_equal(&lift, &g.evaluate_str("h(a2, 3)", &f7).unwrap()).unwrap());
    let c = pgl3_canonical(&m.scale(&two)).unwrap();
    assert_eq!(c, pgl3_canonical(&m).unwrap());
}

#[test]
fn pgl3_equality_needs_a_field() {
    let ring = RingSpec::polynomial(&["t"]).unwrap();
    let m = Matrix::identity(&ring, 3);
    assert!(matches!(pgl3_equal(&m, &m), Err(ChevError::Ring(RingError::Unsupported(_)))));
}

#[test]
fn char_seven_lift() {
    let f7 = RingSpec::modular(7).unwrap();
    let m = pgl3().evaluate_str("x(a1, 1) x(-a1, 2) x(a2, 3) x(-a2, -5) x(a2, 3) w(a2, -1)", &f7).unwrap();
    let want = Matrix::from_int_rows(&f7, &[vec![3, 3, 0], vec![2, 3, 0], vec![0, 0, 5]]);
    assert!(pgl3_equal(&m, &want).unwrap());
}

#[test]
fn evaluate_word_basics() {
    let ring = RingSpec::rationals();
    let g = a1std();
    assert!(g.evaluate_word(&GroupWord::empty(SystemType::A1), &ring).unwrap().is_identity());
    let quad = g.evaluate_str("(x(a, -1) x(-a, 1) x(a, -1))^2", &ring).unwrap();
    assert!(quad.is_identity());
}

#[test]
fn evaluation_is_multiplicative_and_inverts() {
    let ring = RingSpec::fraction(&["p", "q"]).unwrap();
    let g = ChevalleyGroup::adjoint(SystemType::G2);
    let a = GroupWord::parse(SystemType::G2, "x(a, p) h(b, q) w(a+b, 2)").unwrap();
    let b = GroupWord::parse(SystemType::G2, "t1(q) x(-2a-3b, p q) t2(3)").unwrap();
    let ab = g.evaluate_word(&a.then(&b), &ring).unwrap();
    assert_eq!(ab, &g.evaluate_word(&a, &ring).unwrap() * &g.evaluate_word(&b, &ring).unwrap());
    let id = g.evaluate_word(&a.then(&a.inverse()), &ring).unwrap();
    assert!(id.is_identity());
    let pw = g.evaluate_word(&a.pow(-2), &ring).unwrap();
    let sq = g.evaluate_word(&a.then(&a), &ring).unwrap();
    assert!((&pw * &sq).is_identity());
}

#[test]
fn errors() {
    let ring = RingSpec::rationals();
    assert!(matches!(ChevalleyGroup::new(SystemType::B2, Realization::Pgl3), Err(ChevError::RealizationMismatch(..))));
    assert!(matches!(ChevalleyGroup::new(SystemType::A2, Realization::A1Std), Err(ChevError::RealizationMismatch(..))));
    let g = ChevalleyGroup::adjoint(SystemType::A2);
    assert!(matches!(g.evaluate_str("h(a1, 0)", &ring), Err(ChevError::Ring(RingError::NotAUnit(_)))));
    assert!(matches!(g.evaluate_str("t3(2)", &ring), Err(ChevError::Parse(_))));
    let w = GroupWord::parse(SystemType::B2, "x(a, 1)").unwrap();
    assert!(matches!(g.evaluate_word(&w, &ring), Err(ChevError::SystemMismatch(..))));
    let poly = RingSpec::polynomial(&["t"]).unwrap();
    assert!(matches!(g.evaluate_str("w(a1, t)", &poly), Err(ChevError::Ring(RingError::NotAUnit(_)))));
}

//! Linkage: double links, residual invariants and the mapping cone.

use codim2::determinantal::bordiga;
use codim2::groebner::ideal::{hilbert_of, intersect, reduced_gb};
use codim2::invariants::{residual_invariants, InvariantSet};
use codim2::liaison::{double_link_audit, link, LinkSpec, ResidualMethod};
use codim2::parse::parse_ideal;
use codim2::resolution::SchemeData;
use codim2::{Fp, Ring};
use proptest::prelude::*;

fn p3() -> Ring {
    Ring::projective(3, Fp::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn double_link_returns_the_twisted_cubic(seed in 1u64..10_000, s in 2u32..4) {
        let ring = p3();
        let cubic = parse_ideal(&ring, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
        let audit = double_link_audit(&ring, &cubic, 2, s, seed).unwrap();
        prop_assert!(audit.all_pass(), "{}", audit.report());
        prop_assert!(audit.first.all_pass());
        // an ACM curve links to an ACM curve, so the cone applies
        prop_assert!(audit.first.cone.is_some());
    }

    #[test]
    fn double_link_returns_skew_lines(seed in 1u64..10_000) {
        let ring = p3();
        let x = ring.vars();
        let lines = intersect(&ring, &[x[0].clone(), x[1].clone()], &[x[2].clone(), x[3].clone()]).unwrap();
        let audit = double_link_audit(&ring, &lines, 2, 2, seed).unwrap();
        prop_assert!(audit.all_pass(), "{}", audit.report());
        // two skew lines link (2,2) to two skew lines
        prop_assert_eq!(audit.first.degree_genus(), (2, -1));
    }

    #[test]
    fn residual_invariants_are_an_involution(
        d in 1i64..30, pi in -5i64..40, cx in -3i64..4, cs in -3i64..30, r in 1i64..7, s in 1i64..7,
    ) {
        prop_assume!(d <= r * s);
        for inv in [InvariantSet::curve(d, pi), InvariantSet::surface(d, pi, cx), InvariantSet::threefold(d, pi, cx, cs)] {
            let once = residual_invariants(&inv, r, s).unwrap();
            prop_assert_eq!(once.d + inv.d, r * s);
            prop_assert_eq!(2 * (inv.pi - once.pi), (r + s - 4) * (inv.d - once.d));
            prop_assert_eq!(residual_invariants(&once, r, s).unwrap(), inv);
        }
    }
}

#[test]
fn residual_of_a_plane_curve_section() {
    // a line in P^3 linked (2,2) is a twisted cubic
    let ring = p3();
    let l = link(&ring, &LinkSpec::new(&[ring.var(0), ring.var(1)], 2, 2, 3)).unwrap();
    assert!(l.all_pass());
    assert_eq!(l.degree_genus(), (3, 0));
    assert!(matches!(l.method, ResidualMethod::Element(_)));
    let cone = l.cone.as_ref().unwrap();
    assert_eq!(cone.betti(), l.resolution.betti());
}

#[test]
fn linking_bordiga_by_cubics_agrees_with_the_formulas() {
    let ring = Ring::projective(4, Fp::default()).unwrap();
    let (_, c) = bordiga(&ring, 1).unwrap();
    let l = link(&ring, &LinkSpec::new(&c.ideal, 3, 3, 5)).unwrap();
    assert!(l.all_pass(), "{}", l.report());
    // d = 6 linked (3,3) has d' = 3: the cubic scroll
    assert_eq!(l.degree_genus(), (3, 0));
    let predicted = residual_invariants(&InvariantSet::surface(6, 3, 1), 3, 3).unwrap();
    assert_eq!(InvariantSet::from_hilbert(&hilbert_of(&ring, &l.ideal).unwrap(), 4), predicted);
}

#[test]
fn complete_intersection_links_to_the_unit_ideal() {
    let ring = p3();
    let f = ring.field();
    let ci = vec![ring.var(0).pow(2, f), ring.var(1).pow(3, f)];
    let l = link(&ring, &LinkSpec::new(&ci, 2, 3, 1).with_forms(ci[0].clone(), ci[1].clone())).unwrap();
    assert!(l.is_unit());
}

#[test]
fn rao_modules_of_linked_curves_are_dual() {
    let ring = p3();
    let x = ring.vars();
    let lines = intersect(&ring, &[x[0].clone(), x[1].clone()], &[x[2].clone(), x[3].clone()]).unwrap();
    let l = link(&ring, &LinkSpec::new(&lines, 3, 3, 11)).unwrap();
    let a = SchemeData::new(&ring, &lines).unwrap();
    let b = SchemeData::new(&ring, &l.ideal).unwrap();
    for t in -4..8 {
        assert_eq!(a.h(1, t), b.h(1, 3 + 3 - 4 - t), "twist {t}");
    }
    assert_ne!(reduced_gb(&ring, &l.ideal).unwrap(), reduced_gb(&ring, &lines).unwrap());
}

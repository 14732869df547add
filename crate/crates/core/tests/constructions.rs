//! Degeneracy loci of bundle maps and the smoothness check.

use codim2::determinantal::{
    bordiga, canonical_module, complete_intersection, construct_variety, hom_space, with_retries, BundleRep,
    ConstructOptions,
};
use codim2::parse::{parse_ideal, parse_poly};
use codim2::rng::stream;
use codim2::smoothness::{check_smooth, contains_scheme, SmoothOptions, SmoothVerdict};
use codim2::{Error, Fp, Ring};
use proptest::prelude::*;

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn p4() -> Ring {
    Ring::projective(4, Fp::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn bordiga_for_any_seed(seed in 1u64..100_000) {
        let ring = p4();
        let (phi, c) = bordiga(&ring, seed).unwrap();
        phi.audit().unwrap();
        prop_assert_eq!(c.degree_genus(), (6, 3));
        prop_assert_eq!(c.generator_degrees(), vec![3, 3, 3, 3]);
        prop_assert_eq!(c.cone_betti(), Some(c.ideal_betti()));
        prop_assert_eq!(c.c1_twist, c.twist as i64);
    }
}

#[test]
fn cotangent_bundles_have_the_expected_chern_data() {
    let ring = p4();
    let n = 4;
    for i in 1..n {
        let b = BundleRep::new(&ring).omega(1, i as usize).unwrap();
        assert_eq!(b.rank(), binom(n, i), "rank of Omega^{i}");
        // c1(Ω^i) = -binom(n-1, i-1)(n+1), then twist by i
        assert_eq!(b.c1(), -binom(n - 1, i - 1) * (n + 1) + i * binom(n, i), "c1 of Omega^{i}({i})");
    }
}

#[test]
fn hom_spaces_match_bott_formula() {
    let ring = p4();
    // Hom(O(-1), Ω^1(1)) = H^0(Ω^1(2)) has dimension binom(5, 2) = 10
    let src = BundleRep::new(&ring).lines(1, -1);
    let tgt = BundleRep::new(&ring).omega(1, 1).unwrap();
    assert_eq!(hom_space(&src, &tgt).unwrap().dim(), 10);
    // Hom(3O(-1), 4O) = 12 linear forms
    let src = BundleRep::new(&ring).lines(3, -1);
    let tgt = BundleRep::new(&ring).lines(4, 0);
    assert_eq!(hom_space(&src, &tgt).unwrap().dim(), 60);
}

#[test]
fn random_map_from_a_hom_space_gives_a_surface() {
    let ring = p4();
    let src = BundleRep::new(&ring).lines(3, -1);
    let tgt = BundleRep::new(&ring).lines(4, 0);
    let h = hom_space(&src, &tgt).unwrap();
    let phi = h.random_element(&mut stream(5, "test"));
    let c = construct_variety(&phi, ConstructOptions { cone: false }).unwrap();
    assert_eq!(c.degree_genus(), (6, 3));
    assert!(c.cone.is_none());
}

#[test]
fn complete_intersection_as_degeneracy_locus() {
    let ring = p4();
    let f = parse_poly(&ring, "x0^2 + x1*x2 + x3*x4").unwrap();
    let g = parse_poly(&ring, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3").unwrap();
    let (_, c) = complete_intersection(&ring, &f, &g).unwrap();
    assert_eq!(c.generator_degrees(), vec![2, 3]);
    assert_eq!(c.degree_genus(), (6, 4));
    let w = canonical_module(&ring, &c.resolution, 2).unwrap();
    // ω_X(1) = O_X(1): one generator of degree -1
    assert_eq!(w.target.rank(), 1);
    assert_eq!(w.target.gen_degree(0), -1);
}

#[test]
fn retries_stop_on_other_errors() {
    let mut calls = 0;
    let r: Result<((), u64), Error> = with_retries(1, 5, |_| {
        calls += 1;
        Err(Error::Range("no".into()))
    });
    assert!(matches!(r, Err(Error::Range(_))));
    assert_eq!(calls, 1);
    let mut calls = 0;
    let r = with_retries(10, 5, |s| {
        calls += 1;
        if s < 12 {
            Err(Error::Inconsistent("unlucky".into()))
        } else {
            Ok(s)
        }
    });
    assert_eq!(r.unwrap(), (12, 12));
    assert_eq!(calls, 3);
    let r: Result<((), u64), Error> = with_retries(1, 2, |_| Err(Error::Inconsistent("x".into())));
    assert!(matches!(r, Err(Error::Genericity { attempts: 2, .. })));
}

#[test]
fn cone_over_a_curve_is_singular_at_the_vertex() {
    let ring = p4();
    let cone = parse_ideal(&ring, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let rep = check_smooth(&ring, &cone, &SmoothOptions::default()).unwrap();
    assert_eq!(rep.verdict, SmoothVerdict::Singular);
    assert_eq!(rep.singular_dim, 0);
    // a general hyperplane misses the vertex
    let rep = check_smooth(&ring, &cone, &SmoothOptions::sliced(1, 3)).unwrap();
    assert_eq!(rep.verdict, SmoothVerdict::Smooth);
    assert!(rep.render().contains("linear section"));
}

#[test]
fn degree_threshold_for_slicing() {
    assert_eq!(SmoothOptions::for_degree(12, 1).method, codim2::smoothness::SmoothMethod::Full);
    assert_eq!(SmoothOptions::for_degree(13, 1).method, codim2::smoothness::SmoothMethod::Sliced(1));
}

#[test]
fn containment_of_schemes() {
    let ring = p4();
    let (_, c) = bordiga(&ring, 2).unwrap();
    assert!(contains_scheme(&ring, &c.ideal, &c.ideal).unwrap());
    assert!(!contains_scheme(&ring, &c.ideal, &[ring.var(0), ring.var(1), ring.var(2)]).unwrap());
}

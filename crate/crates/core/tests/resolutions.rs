//! Resolutions, Betti tables and cohomology tables on random ideals and
//! modules.

use codim2::factory::{dual_finite, generic_module, koszul_complex};
use codim2::groebner::ideal::{hilbert_of, intersect};
use codim2::monomial::monomials_of_degree;
use codim2::parse::parse_ideal;
use codim2::resolution::{resolve_ideal, BettiTable, SchemeData};
use codim2::{Fp, Poly, Ring};
use proptest::prelude::*;

fn form(n: usize, d: u32, terms: &[(usize, u32)]) -> Poly {
    let mons = monomials_of_degree(n, d);
    Poly::from_terms(Fp::default(), terms.iter().map(|&(i, c)| (mons[i % mons.len()], c)).collect())
}

fn terms() -> impl Strategy<Value = Vec<(usize, u32)>> {
    prop::collection::vec((0usize..200, 1u32..31991), 1..5)
}

fn betti_audits(ring: &Ring, gens: &[Poly]) -> Result<(), TestCaseError> {
    let res = resolve_ideal(ring, gens).unwrap();
    prop_assert!(res.is_complex());
    prop_assert!(res.is_minimal());
    let b = res.betti();
    // the alternating Betti numerator is the Hilbert numerator
    prop_assert_eq!(b.numerator(), hilbert_of(ring, gens).unwrap().numerator);
    prop_assert!(res.len() <= ring.nvars());
    let len = b.length();
    for c in [-(ring.nvars() as i32), 0, 3] {
        prop_assert_eq!(b.dual(len, c).dual(len, c), b.clone());
        prop_assert_eq!(res.dualize(c).betti(), b.dual(len, -c));
    }
    prop_assert_eq!(b.shift(2).shift(-2), b.clone());
    prop_assert_eq!(BettiTable::from_json(&b.to_json()).unwrap(), b);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_ideals_in_p3(x in terms(), y in terms(), z in terms()) {
        let ring = Ring::projective(3, Fp::default()).unwrap();
        let gens = vec![form(4, 2, &x), form(4, 2, &y), form(4, 3, &z)];
        betti_audits(&ring, &gens)?;
    }

    #[test]
    fn random_quadric_ideals_in_p4(x in terms(), y in terms()) {
        let ring = Ring::projective(4, Fp::default()).unwrap();
        let gens = vec![form(5, 2, &x[..1.min(x.len())]), form(5, 2, &y), form(5, 2, &x)];
        betti_audits(&ring, &gens)?;
    }

    #[test]
    fn cohomology_tables_have_consistent_euler_characteristics(x in terms(), y in terms(), k in 1u32..3) {
        let ring = Ring::projective(3, Fp::default()).unwrap();
        let f = ring.field();
        // a curve: complete intersection union a line, or just the c.i.
        let ci = vec![form(4, 2, &x), form(4, k + 1, &y)];
        let line = vec![ring.var(0).add(&ring.var(3), f), ring.var(1)];
        for ideal in [ci.clone(), intersect(&ring, &ci, &line).unwrap()] {
            let sd = SchemeData::new(&ring, &ideal).unwrap();
            let t = sd.cohomology_table(-3, 6);
            for m in -3..=6 {
                prop_assert_eq!(t.euler(m), sd.expected_euler(m));
                for i in 0..=3 {
                    prop_assert!(t.get(i, m) >= 0);
                }
            }
        }
    }

    #[test]
    fn generic_modules_hit_their_hilbert_function(a in 1i64..4, b in 0i64..4, seed in 1u64..1000) {
        let ring = Ring::projective(3, Fp::default()).unwrap();
        let hf = [1, a + 1, b];
        let m = generic_module(&ring, &hf, 0, seed).unwrap();
        m.check_hf().unwrap();
        let res = m.resolution().unwrap();
        prop_assert!(res.is_complex());
        prop_assert!(res.is_minimal());
        // finite length: Euler characteristic of the resolution is zero
        prop_assert_eq!(res.betti().numerator().at_one(), 0);
        let d = dual_finite(&m).unwrap();
        let trim = |v: Vec<i64>| {
            let lo = v.iter().position(|&x| x != 0).unwrap_or(v.len());
            let hi = v.iter().rposition(|&x| x != 0).map_or(lo, |i| i + 1);
            v[lo..hi].to_vec()
        };
        let mut rev = hf.to_vec();
        rev.reverse();
        prop_assert_eq!(trim(d.achieved_hf().unwrap()), trim(rev));
    }
}

#[test]
fn koszul_complex_is_exact_on_a_regular_sequence() {
    let ring = Ring::projective(4, Fp::default()).unwrap();
    let f = ring.field();
    let forms = vec![ring.var(0).pow(2, f), ring.var(1).pow(3, f), ring.var(2).add(&ring.var(3), f)];
    let k = koszul_complex(&ring, &forms, 0).unwrap();
    assert!(k.is_complex());
    assert_eq!(k.ranks(), vec![1, 3, 3, 1]);
    let direct = resolve_ideal(&ring, &forms).unwrap();
    assert_eq!(k.betti(), direct.betti());
}

#[test]
fn skew_lines_have_one_dimensional_rao_module() {
    let ring = Ring::projective(3, Fp::default()).unwrap();
    let x = ring.vars();
    let ideal = intersect(&ring, &[x[0].clone(), x[1].clone()], &[x[2].clone(), x[3].clone()]).unwrap();
    let sd = SchemeData::new(&ring, &ideal).unwrap();
    let h1: Vec<i64> = (-2..=3).map(|m| sd.h(1, m)).collect();
    assert_eq!(h1, vec![0, 0, 1, 0, 0, 0]);
    assert_eq!(sd.h(0, 2), 4);
}

#[test]
fn rational_normal_scroll_resolution() {
    let ring = Ring::projective(4, Fp::default()).unwrap();
    let ideal = parse_ideal(&ring, "x0*x3 - x1*x2, x0*x4 - x1*x3, x2*x4 - x3^2").unwrap();
    let res = resolve_ideal(&ring, &ideal).unwrap();
    assert_eq!(res.betti(), BettiTable::from_triples(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
}

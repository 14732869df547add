//! Double point formulas against complete intersections, where the
//! canonical class is known, and against the recorded catalog.

use codim2::invariants::{
    catalog, catalog_audit, ci_chi, segre_pencil_defaults, surface_counts, surface_k2, threefold_k_products,
    InvariantSet, Verdict,
};
use proptest::prelude::*;

/// `χ(O_{P^n}(k)) = binom(n + k, n)` as a polynomial in `k`.
fn chi_pn(n: i64, k: i64) -> i64 {
    (1..=n).fold(1i128, |acc, i| acc * (k + i) as i128) as i64 / (1..=n).product::<i64>()
}

/// `χ(O_X)` of a complete intersection of type `(a, b)` in `P^n` from the
/// Koszul complex.
fn chi_ci(n: i64, a: i64, b: i64) -> i64 {
    chi_pn(n, 0) - chi_pn(n, -a) - chi_pn(n, -b) + chi_pn(n, -a - b)
}

proptest! {
    #[test]
    fn threefold_products_of_complete_intersections(a in 1i64..8, b in 1i64..8) {
        let d = a * b;
        let pi = 1 + a * b * (a + b - 4) / 2;
        let p = threefold_k_products(d, pi, chi_ci(5, a, b), chi_ci(4, a, b));
        let k = a + b - 6;
        prop_assert_eq!((p.h2k, p.hk2, p.k3), (d * k, d * k * k, d * k * k * k));
        let m = k + 1;
        prop_assert_eq!(p.pluridegrees, [d, d * m, d * m * m, d * m * m * m]);
        prop_assert_eq!(ci_chi(5, a, b), chi_ci(5, a, b));
    }

    #[test]
    fn surface_products_of_complete_intersections(a in 1i64..9, b in 1i64..9) {
        let d = a * b;
        let pi = 1 + a * b * (a + b - 4) / 2;
        let k = a + b - 5;
        prop_assert_eq!(surface_k2(d, pi, chi_ci(4, a, b)).unwrap(), (d * k, d * k * k));
    }

    #[test]
    fn sections_lower_the_dimension(a in 1i64..7, b in 1i64..7) {
        let d = a * b;
        let pi = 1 + a * b * (a + b - 4) / 2;
        let x = InvariantSet::threefold(d, pi, chi_ci(5, a, b), chi_ci(4, a, b));
        prop_assert_eq!(x.section().unwrap(), InvariantSet::surface(d, pi, chi_ci(4, a, b)));
    }
}

#[test]
fn recorded_surfaces() {
    assert_eq!(surface_k2(6, 3, 1).unwrap(), (-2, -1));
    assert_eq!(surface_k2(11, 11, 3).unwrap(), (9, 1));
    // the cubic scroll is F_1 embedded by C_0 + 2f
    assert_eq!(surface_k2(3, 0, 1).unwrap(), (-5, 8));
}

#[test]
fn degree_17_and_13_products() {
    let p = threefold_k_products(17, 32, 0, 24);
    assert_eq!((p.h2k, p.hk2, p.k3), (28, 18, -52));
    assert_eq!(p.adjoint_k_square(), -34);
    let q = threefold_k_products(13, 18, 0, 10);
    assert_eq!((q.h2k, q.hk2, q.k3), (8, -2, -4));
    let r = threefold_k_products(18, 35, 2, 26);
    assert_eq!(r.adjoint_square_k(), -4);
}

#[test]
fn five_pencils_on_the_degree_17_threefold() {
    let sp = segre_pencil_defaults(17).unwrap();
    assert_eq!((sp.hs2, sp.s2s, sp.s3), (-5, -4, -16));
    assert_eq!(sp.full_cube(5), 120);
    sp.check_relations().unwrap();
    // (H - S_i)^2 = 0 as a class, so its cube with anything vanishes
    assert_eq!(sp.cube(1, &[0]), 0);
}

#[test]
fn catalog_has_no_unflagged_failures() {
    let cat = catalog();
    assert!(cat.len() >= 30);
    let rep = catalog_audit(&cat);
    assert_eq!(rep.count(Verdict::Fail), 0, "{}", rep.render());
    assert_eq!(rep.passing_edges(), 21);
    for e in &cat {
        let p = e.products();
        assert_eq!(p.pluridegrees[0], e.d, "{}", e.label);
    }
}

#[test]
fn surface_counts_cover_low_degrees() {
    let rows = surface_counts();
    assert!(rows.iter().any(|r| r.degree == "11"));
    assert!(rows.iter().all(|r| !r.counts.is_empty()));
}

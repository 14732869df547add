use super::hilbert::HilbertData;
use super::ideal::*;
use super::*;
use crate::linalg;
use crate::monomial::monomials_of_degree;
use crate::parse::parse_poly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ring(n: usize) -> Ring {
    Ring::new(n, Fp::default()).unwrap()
}

fn polys(r: &Ring, s: &[&str]) -> Vec<Poly> {
    s.iter().map(|x| parse_poly(r, x).unwrap()).collect()
}

fn random_form(r: &Ring, d: u32, rng: &mut ChaCha8Rng) -> Poly {
    let f = r.field();
    let t = monomials_of_degree(r.nvars(), d)
        .into_iter()
        .map(|m| (m, rng.gen_range(0..f.p())))
        .collect();
    Poly::from_terms(f, t)
}

fn segre(r: &Ring) -> Vec<Poly> {
    polys(r, &["x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"])
}

/// Spanning set of `I_d` as coefficient rows over the monomials of degree `d`.
fn graded_piece(r: &Ring, gens: &[Poly], d: u32) -> (Vec<Mono>, linalg::Mat) {
    let f = r.field();
    let basis = monomials_of_degree(r.nvars(), d);
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.degree().unwrap();
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(r.nvars(), d - gd) {
            let p = g.mul_term(m, 1, f);
            rows.push(basis.iter().map(|&b| p.coeff(b)).collect());
        }
    }
    (basis, rows)
}

#[test]
fn linear_forms_are_a_basis() {
    let r = ring(4);
    let gb = gb_ideal(&r, &r.vars(), GbOptions::default()).unwrap();
    assert_eq!(gb.polys(), r.vars());
}

#[test]
fn segre_quadrics_are_a_basis() {
    let r = ring(6);
    let gb = gb_ideal(&r, &segre(&r), GbOptions::default()).unwrap();
    assert_eq!(gb.len(), 3);
    let hd = HilbertData::from_gb(&gb);
    assert_eq!((hd.projective_dim(), hd.degree), (3, 3));
    assert_eq!(dim_codim(&gb), (4, 2));
}

#[test]
fn principal_ideal_is_monic_generator() {
    let r = ring(3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g = random_form(&r, 3, &mut rng);
    let gb = gb_ideal(&r, std::slice::from_ref(&g), GbOptions::default()).unwrap();
    assert_eq!(gb.polys(), vec![g.monic(r.field())]);
}

#[test]
fn normal_form_matches_dense_projection() {
    let r = ring(6);
    let f = r.field();
    let gens = segre(&r);
    let gb = gb_ideal(&r, &gens, GbOptions::default()).unwrap();
    let (basis, rows) = graded_piece(&r, &gens, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let c = random_form(&r, 3, &mut rng);
        let nf = gb.normal_form_poly(&c);
        // c - nf(c) lies in I_3
        let diff = c.sub(&nf, f);
        let v: Vec<u32> = basis.iter().map(|&b| diff.coeff(b)).collect();
        let mut aug = rows.clone();
        let r0 = linalg::rank(&aug, f);
        aug.push(v);
        assert_eq!(linalg::rank(&aug, f), r0);
        // nf(c) has no term in the leading-term ideal
        for (m, _) in &nf.terms {
            assert!(!gb.leading_terms().iter().any(|&(l, _)| l.divides(*m)));
        }
    }
}

#[test]
fn membership_of_explicit_combinations() {
    let r = ring(5);
    let f = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let gens: Vec<Poly> = (0..3).map(|_| random_form(&r, 2, &mut rng)).collect();
    let gb = gb_ideal(&r, &gens, GbOptions::default()).unwrap();
    for _ in 0..5 {
        let mut h = Poly::zero();
        for g in &gens {
            h = h.add(&g.mul(&random_form(&r, 2, &mut rng), f), f);
        }
        assert!(gb.contains_poly(&h));
    }
    assert!(!gb.contains_poly(&r.var(0).pow(3, f)));
}

#[test]
fn basis_is_idempotent() {
    let r = ring(4);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let gens: Vec<Poly> = (0..3).map(|_| random_form(&r, 2, &mut rng)).collect();
    let a = reduced_gb(&r, &gens).unwrap();
    let b = reduced_gb(&r, &a).unwrap();
    assert_eq!(a, b);
}

#[test]
fn hilbert_function_matches_dense_rank() {
    let r = ring(4);
    let f = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let gens: Vec<Poly> = vec![random_form(&r, 2, &mut rng), random_form(&r, 3, &mut rng)];
    let hd = hilbert_of(&r, &gens).unwrap();
    for d in 0..7u32 {
        let (basis, rows) = graded_piece(&r, &gens, d);
        let want = basis.len() - if rows.is_empty() { 0 } else { linalg::rank(&rows, f) };
        assert_eq!(hd.hf(d as i64), want as i64, "degree {d}");
    }
}

#[test]
fn hilbert_additivity_for_nonzerodivisor() {
    let r = ring(5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let i: Vec<Poly> = vec![random_form(&r, 2, &mut rng), random_form(&r, 2, &mut rng)];
    let g = random_form(&r, 3, &mut rng);
    let a = hilbert_of(&r, &i).unwrap();
    let mut ig = i.clone();
    ig.push(g);
    let b = hilbert_of(&r, &ig).unwrap();
    for q in 0..10 {
        assert_eq!(b.hf(q), a.hf(q) - a.hf(q - 3));
    }
}

#[test]
fn syzygies_annihilate_inputs() {
    let r = ring(4);
    let f = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let gens: Vec<Poly> = (0..4).map(|k| random_form(&r, 2 + (k % 2), &mut rng)).collect();
    let (_, syz) = syzygies_of_forms(&r, &gens).unwrap();
    assert!(!syz.is_empty());
    for s in &syz {
        let mut acc = Poly::zero();
        for (j, g) in gens.iter().enumerate() {
            acc = acc.add(&s.component(j).mul(g, f), f);
        }
        assert!(acc.is_zero());
    }
}

#[test]
fn syzygies_of_two_forms_are_koszul() {
    let r = ring(3);
    let g = polys(&r, &["x0", "x1"]);
    let (_, syz) = syzygies_of_forms(&r, &g).unwrap();
    assert_eq!(syz.len(), 1);
    let s = syz[0].monic(r.field());
    assert_eq!(r.fmt_poly(&s.component(0)), "-x1");
    assert_eq!(r.fmt_poly(&s.component(1)), "x0");
}

#[test]
fn division_with_representation() {
    let r = ring(4);
    let f = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let gens: Vec<Poly> = (0..3).map(|_| random_form(&r, 2, &mut rng)).collect();
    let v: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
    let gb = buchberger(&r, &FreeModule::uniform(1, 0), &v, GbOptions::tracked(Track::All)).unwrap();
    let h = random_form(&r, 4, &mut rng);
    let (rem, q) = gb.divide(&Vector::from_poly(&h, 0)).unwrap();
    let mut acc = rem.component(0);
    for (j, g) in gens.iter().enumerate() {
        acc = acc.add(&q.component(j).mul(g, f), f);
    }
    assert_eq!(acc, h);
}

#[test]
fn quotient_examples() {
    let r = ring(3);
    let f = r.field();
    let a = parse_poly(&r, "x0^2 + x1*x2").unwrap();
    let b = parse_poly(&r, "x1 - x2").unwrap();
    let q = quotient(&r, &[a.mul(&b, f)], std::slice::from_ref(&a)).unwrap();
    assert_eq!(q, vec![b.monic(f)]);
    let q = quotient(&r, &[a.clone(), b.clone()], &[a, b]).unwrap();
    assert!(q.iter().any(|p| p.is_constant()));
}

#[test]
fn saturation_removes_irrelevant_component() {
    let r = ring(4);
    let f = r.field();
    let x0 = r.var(0);
    let gens: Vec<Poly> = r.vars().iter().map(|v| v.mul(&x0, f)).collect();
    let s = saturate(&r, &gens).unwrap();
    assert_eq!(s, vec![x0.clone()]);
    assert_eq!(saturate(&r, &s).unwrap(), s);
    assert_eq!(saturate_by_variables(&r, &gens).unwrap(), s);
}

#[test]
fn saturation_of_random_embedded_point() {
    // (twisted cubic) ∩ (x0,x1,x2,x3)^3 has the twisted cubic as saturation
    let r = ring(4);
    let cubic = polys(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
    let m3: Vec<Poly> = monomials_of_degree(4, 3).into_iter().map(|m| Poly::monomial(m, 1)).collect();
    let i = intersect(&r, &cubic, &m3).unwrap();
    assert!(i.iter().all(|g| g.degree() == Some(3)));
    let s = saturate(&r, &i).unwrap();
    assert_eq!(s, reduced_gb(&r, &cubic).unwrap());
    assert!(is_saturated(&r, &s).unwrap());
}

#[test]
fn unit_and_zero_ideals() {
    let r = ring(3);
    let gb = gb_ideal(&r, &[Poly::constant(5)], GbOptions::default()).unwrap();
    assert!(gb.is_unit());
    let hd = HilbertData::from_gb(&gb);
    assert_eq!(hd.projective_dim(), -1);
    let z = gb_ideal(&r, &[], GbOptions::default()).unwrap();
    assert_eq!(HilbertData::from_gb(&z).hf(2), 6);
    let irr = gb_ideal(&r, &r.vars(), GbOptions::default()).unwrap();
    assert_eq!(HilbertData::from_gb(&irr).projective_dim(), -1);
}

#[test]
fn module_basis_of_koszul_image() {
    // image of (x0 x1 x2) columns in R^1 and the syzygy module of rank 3
    let r = ring(3);
    let m = PolyMatrix::new(
        FreeModule::new(vec![0]),
        FreeModule::new(vec![-1, -1, -1]),
        r.vars(),
    )
    .unwrap();
    let gb = gb_matrix(&r, &m, GbOptions::tracked(Track::Minimal)).unwrap();
    assert_eq!(gb.syzygies.len(), 3);
    let sm = gb.syzygy_matrix().unwrap();
    assert!(m.compose(&sm, r.field()).unwrap().is_zero());
    let gb2 = gb_matrix(&r, &sm, GbOptions::tracked(Track::Minimal)).unwrap();
    assert_eq!(gb2.accepted.len(), 3);
    assert_eq!(gb2.syzygies.len(), 1);
}

#[test]
fn truncated_run_reports_degree() {
    let r = ring(4);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let gens: Vec<Poly> = (0..3).map(|_| random_form(&r, 2, &mut rng)).collect();
    let opts = GbOptions {
        max_degree: Some(3),
        track: Track::None,
        ..Default::default()
    };
    let gb = gb_ideal(&r, &gens, opts).unwrap();
    let full = gb_ideal(&r, &gens, GbOptions::default()).unwrap();
    assert!(gb.degrees.iter().all(|&d| d <= 3));
    if full.degrees.iter().any(|&d| d > 3) {
        assert_eq!(gb.truncated_at, Some(3));
    }
}

//! Seeded random draws. Every consumer asks for a named stream so draws in
//! one part of a pipeline do not shift the draws of another.

use crate::module::{FreeModule, PolyMatrix};
use crate::monomial::monomials_of_degree;
use crate::poly::{Poly, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent generator for `(seed, name)`.
pub fn stream(seed: u64, name: &str) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    // FNV-1a of the name selects the ChaCha stream
    let mut h: u64 = 0xcbf29ce484222325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    r.set_stream(h);
    r
}

/// Uniformly random form of degree `d` (zero for negative `d`).
pub fn random_form(ring: &Ring, d: i32, rng: &mut impl Rng) -> Poly {
    if d < 0 {
        return Poly::zero();
    }
    let f = ring.field();
    let t = monomials_of_degree(ring.nvars(), d as u32)
        .into_iter()
        .map(|m| (m, rng.gen_range(0..f.p())))
        .collect();
    Poly::from_terms(f, t)
}

/// Random degree-zero map `source -> target`.
pub fn random_map(ring: &Ring, target: &FreeModule, source: &FreeModule, rng: &mut impl Rng) -> PolyMatrix {
    let mut m = PolyMatrix::zero(target.clone(), source.clone());
    for i in 0..target.rank() {
        for j in 0..source.rank() {
            let d = target.twists[i] - source.twists[j];
            m.set(i, j, random_form(ring, d, rng));
        }
    }
    m
}

/// Random element of the ideal in degree `d`: `Σ r_k g_k` with random `r_k`.
pub fn random_ideal_element(ring: &Ring, gens: &[Poly], d: i32, rng: &mut impl Rng) -> Poly {
    let f = ring.field();
    let mut acc = Poly::zero();
    for g in gens {
        let gd = g.degree().unwrap_or(0) as i32;
        if gd <= d {
            acc = acc.add(&random_form(ring, d - gd, rng).mul(g, f), f);
        }
    }
    acc
}

/// Random `rows × cols` matrix over `F_p`.
pub fn random_scalars(ring: &Ring, rows: usize, cols: usize, rng: &mut impl Rng) -> Vec<Vec<u32>> {
    let p = ring.field().p();
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect()).collect()
}

//! Ideal operations built on the Buchberger engine: quotients, intersections,
//! saturation, dimension and minimal generators.

use super::hilbert::HilbertData;
use super::{gb_ideal, buchberger, GbOptions, GroebnerBasis, Track};
use crate::error::Result;
use crate::field::Fp;
use crate::module::{FreeModule, Vector};
use crate::monomial::Mono;
use crate::poly::{Poly, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reduced Gröbner basis of an ideal, as polynomials sorted by leading
/// monomial (ascending), so equal ideals give equal vectors.
pub fn reduced_gb(ring: &Ring, gens: &[Poly]) -> Result<Vec<Poly>> {
    let mut g = gb_ideal(ring, gens, GbOptions::default())?.polys();
    g.sort_by_key(|a| a.lead_mono());
    Ok(g)
}

/// A minimal homogeneous generating set chosen among `gens`.
pub fn minimal_generators(ring: &Ring, gens: &[Poly]) -> Result<Vec<Poly>> {
    let nz: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let gb = gb_ideal(ring, &nz, GbOptions::default())?;
    Ok(gb.accepted.iter().map(|&j| nz[j].clone()).collect())
}

/// Syzygies of a list of forms, as vectors in `⊕ R(-deg g_j)`.
pub fn syzygies_of_forms(ring: &Ring, gens: &[Poly]) -> Result<(FreeModule, Vec<Vector>)> {
    let v: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
    let degs: Vec<i32> = gens.iter().map(|g| g.degree().unwrap_or(0) as i32).collect();
    let gb = super::buchberger_with_degrees(
        ring,
        &FreeModule::uniform(1, 0),
        &v,
        &degs,
        GbOptions::tracked(Track::All),
    )?;
    Ok((gb.rep_module.clone(), gb.syzygies))
}

/// `I : h`, as a reduced Gröbner basis.
pub fn quotient_by_element(ring: &Ring, ideal: &[Poly], h: &Poly) -> Result<Vec<Poly>> {
    if h.is_zero() {
        return Ok(vec![Poly::constant(1)]);
    }
    let mut gens = vec![h.clone()];
    gens.extend(ideal.iter().filter(|g| !g.is_zero()).cloned());
    let (_, syz) = syzygies_of_forms(ring, &gens)?;
    let firsts: Vec<Poly> = syz.iter().map(|s| s.component(0)).filter(|p| !p.is_zero()).collect();
    // I ⊆ I : h always; including it keeps the zero case right
    let mut all = firsts;
    all.extend(ideal.iter().cloned());
    reduced_gb(ring, &all)
}

/// `I : J = ∩_k (I : h_k)` over generators `h_k` of `J`.
pub fn quotient(ring: &Ring, ideal: &[Poly], by: &[Poly]) -> Result<Vec<Poly>> {
    let mut acc: Option<Vec<Poly>> = None;
    for h in by.iter().filter(|h| !h.is_zero()) {
        let q = quotient_by_element(ring, ideal, h)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(ring, &a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| vec![Poly::constant(1)]))
}

/// `I ∩ J` from the syzygies of `(g_1..g_a, h_1..h_b)`.
pub fn intersect(ring: &Ring, a: &[Poly], b: &[Poly]) -> Result<Vec<Poly>> {
    let f = ring.field();
    let a: Vec<Poly> = a.iter().filter(|g| !g.is_zero()).cloned().collect();
    let b: Vec<Poly> = b.iter().filter(|g| !g.is_zero()).cloned().collect();
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut gens = a.clone();
    gens.extend(b.iter().cloned());
    let (_, syz) = syzygies_of_forms(ring, &gens)?;
    let mut out = Vec::new();
    for s in &syz {
        let mut e = Poly::zero();
        for (j, g) in a.iter().enumerate() {
            let c = s.component(j);
            if !c.is_zero() {
                e = e.add(&c.mul(g, f), f);
            }
        }
        if !e.is_zero() {
            out.push(e);
        }
    }
    reduced_gb(ring, &out)
}

/// Permutes variables: `x_i -> x_{perm[i]}`.
pub fn permute_poly(p: &Poly, perm: &[usize], f: Fp) -> Poly {
    let t = p
        .terms
        .iter()
        .map(|&(m, c)| {
            let mut e = [0u32; 7];
            for (i, &j) in perm.iter().enumerate() {
                e[j] = m.exp(i);
            }
            (Mono::from_exps(&e[..perm.len()]), c)
        })
        .collect();
    Poly::from_terms(f, t)
}

fn invert_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &j) in perm.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Divides every element of a grevlex basis by the largest power of the
/// last variable; the result generates `I : x_last^∞`.
fn divide_out_last(gb: &[Poly], last: usize) -> Vec<Poly> {
    gb.iter()
        .map(|g| {
            let k = g.terms.iter().map(|t| t.0.exp(last)).min().unwrap_or(0);
            if k == 0 {
                return g.clone();
            }
            let d = Mono::var_pow(last, k);
            Poly {
                terms: g.terms.iter().map(|&(m, c)| (d.div_into(m), c)).collect(),
            }
        })
        .collect()
}

/// `I : x_i^∞`, exact.
pub fn saturate_variable(ring: &Ring, ideal: &[Poly], i: usize) -> Result<Vec<Poly>> {
    let f = ring.field();
    let n = ring.nvars();
    // move x_i to the last position
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i, n - 1);
    let moved: Vec<Poly> = ideal.iter().map(|g| permute_poly(g, &perm, f)).collect();
    let gb = reduced_gb(ring, &moved)?;
    let div = divide_out_last(&gb, n - 1);
    let inv = invert_perm(&perm);
    let back: Vec<Poly> = div.iter().map(|g| permute_poly(g, &inv, f)).collect();
    reduced_gb(ring, &back)
}

/// Hilbert data of `R/I`.
pub fn hilbert_of(ring: &Ring, ideal: &[Poly]) -> Result<HilbertData> {
    Ok(HilbertData::from_gb(&gb_ideal(ring, ideal, GbOptions::default())?))
}

/// Saturation with respect to the irrelevant ideal.
///
/// Tries `I : x^∞` for each variable (then for random linear forms). A
/// candidate `S` on which the divided-out form is a nonzerodivisor is
/// saturated, and `S ⊇ I` with equal Hilbert polynomials forces `S ⊆ I^sat`;
/// so a candidate passing the Hilbert polynomial comparison is `I^sat`.
pub fn saturate(ring: &Ring, ideal: &[Poly]) -> Result<Vec<Poly>> {
    let gens: Vec<Poly> = ideal.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let gb = gb_ideal(ring, &gens, GbOptions::default())?;
    if gb.is_unit() {
        return Ok(vec![Poly::constant(1)]);
    }
    let hd = HilbertData::from_gb(&gb);
    if hd.dim == 0 {
        return Ok(vec![Poly::constant(1)]);
    }
    let n = ring.nvars();
    let base = gb.polys();
    // the last variable is a nonzerodivisor mod I when no element of the
    // grevlex basis is divisible by it
    if divide_out_last(&base, n - 1) == base {
        let mut s = base;
        s.sort_by_key(|a| a.lead_mono());
        return Ok(s);
    }
    let same_hp = |s: &[Poly]| -> Result<bool> {
        let h2 = hilbert_of(ring, s)?;
        Ok(h2.dim == hd.dim && h2.reduced == hd.reduced)
    };
    for i in (0..n).rev() {
        let s = saturate_variable(ring, &base, i)?;
        if same_hp(&s)? {
            return Ok(s);
        }
    }
    let f = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a7u64 ^ base.len() as u64);
    for _ in 0..3 {
        let (fwd, bwd) = random_linear_change(ring, &mut rng);
        let moved: Vec<Poly> = base.iter().map(|g| g.substitute(&fwd, f)).collect();
        let mgb = reduced_gb(ring, &moved)?;
        let div = divide_out_last(&mgb, n - 1);
        let back: Vec<Poly> = div.iter().map(|g| g.substitute(&bwd, f)).collect();
        let s = reduced_gb(ring, &back)?;
        if same_hp(&s)? {
            return Ok(s);
        }
    }
    saturate_by_variables(ring, &base)
}

/// `∩_i (I : x_i^∞)`, the exact fallback.
pub fn saturate_by_variables(ring: &Ring, ideal: &[Poly]) -> Result<Vec<Poly>> {
    let mut acc: Option<Vec<Poly>> = None;
    for i in 0..ring.nvars() {
        let s = saturate_variable(ring, ideal, i)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(ring, &a, &s)?,
        });
    }
    Ok(acc.unwrap())
}

/// A random invertible change of coordinates and its inverse, as images of
/// the variables.
pub fn random_linear_change(ring: &Ring, rng: &mut impl Rng) -> (Vec<Poly>, Vec<Poly>) {
    let f = ring.field();
    let n = ring.nvars();
    loop {
        let a: Vec<Vec<u32>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.p())).collect())
            .collect();
        if let Some(inv) = crate::linalg::invert(&a, f) {
            let img = |m: &Vec<Vec<u32>>| -> Vec<Poly> {
                (0..n)
                    .map(|i| {
                        Poly::from_terms(f, (0..n).map(|j| (Mono::var(j), m[i][j])).collect())
                    })
                    .collect()
            };
            return (img(&a), img(&inv));
        }
    }
}

pub fn is_saturated(ring: &Ring, ideal: &[Poly]) -> Result<bool> {
    let s = saturate(ring, ideal)?;
    let gb = gb_ideal(ring, ideal, GbOptions::default())?;
    Ok(s.iter().all(|g| gb.contains_poly(g)))
}

/// `(Krull dimension of R/I, codimension)`.
pub fn dim_codim(gb: &GroebnerBasis) -> (i64, i64) {
    if gb.is_unit() {
        return (0, gb.ring.nvars() as i64);
    }
    let lts: Vec<Mono> = gb.leading_terms().iter().map(|t| t.0).collect();
    let d = super::hilbert::monomial_dimension(gb.ring.nvars(), &lts) as i64;
    (d, gb.ring.nvars() as i64 - d)
}

/// True if `I ⊆ J`.
pub fn contained_in(ring: &Ring, i: &[Poly], j_gb: &GroebnerBasis) -> bool {
    let _ = ring;
    i.iter().all(|g| j_gb.contains_poly(g))
}

/// Gröbner basis of a submodule of a free module with default options.
pub fn module_gb(ring: &Ring, module: &FreeModule, gens: &[Vector]) -> Result<GroebnerBasis> {
    buchberger(ring, module, gens, GbOptions::default())
}

//! Finite-length graded modules: Koszul complexes, generic modules with a
//! prescribed Hilbert function, graded duals and the four-lines module.

use crate::error::{Error, Result};
use crate::linalg;
use crate::module::{subsets, FreeModule, PolyMatrix, VTerm, Vector};
use crate::monomial::{monomials_of_degree, Mono};
use crate::poly::{Poly, Ring};
use crate::resolution::{module_hilbert, prune, resolve, BettiTable, FreeResolution};
use crate::rng::{random_form, random_scalars, stream};
use rand::Rng;
use std::collections::HashMap;

/// How a finite module was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Generic,
    Koszul,
    FourLines,
    DualOf(Box<Recipe>),
    Explicit,
}

/// A finite-length module given by a presentation, with the Hilbert
/// function it was built to have (starting at degree `start`).
#[derive(Clone, Debug)]
pub struct FiniteModule {
    pub ring: Ring,
    pub presentation: PolyMatrix,
    pub hf: Vec<i64>,
    pub start: i32,
    pub recipe: Recipe,
    pub seed: u64,
}

impl FiniteModule {
    /// Hilbert function of the presentation on `start..start+len`, plus one
    /// trailing degree that must vanish.
    pub fn achieved_hf(&self) -> Result<Vec<i64>> {
        let h = module_hilbert(&self.ring, &self.presentation)?;
        Ok((0..=self.hf.len() as i32).map(|k| h.hf((self.start + k) as i64)).collect())
    }

    pub fn check_hf(&self) -> Result<()> {
        let got = self.achieved_hf()?;
        let mut want = self.hf.clone();
        want.push(0);
        if got != want {
            return Err(Error::Genericity {
                attempts: 1,
                reason: format!("Hilbert function {got:?}, wanted {want:?}"),
            });
        }
        Ok(())
    }

    pub fn resolution(&self) -> Result<FreeResolution> {
        resolve(&self.ring, &self.presentation)
    }
}

/// Koszul complex on `forms`: `F_j = ∧^j` with basis the `j`-subsets,
/// `d(e_S) = Σ_p (-1)^p f_{S_p} e_{S \ S_p}`; `F_0 = R(twist)`.
pub fn koszul_complex(ring: &Ring, forms: &[Poly], twist: i32) -> Result<FreeResolution> {
    let f = ring.field();
    let k = forms.len();
    let degs: Vec<i32> = forms
        .iter()
        .map(|g| g.degree().map(|d| d as i32).ok_or_else(|| Error::Range("zero form in Koszul complex".into())))
        .collect::<Result<_>>()?;
    let module_of = |sets: &[Vec<usize>]| {
        FreeModule::new(sets.iter().map(|s| twist - s.iter().map(|&i| degs[i]).sum::<i32>()).collect())
    };
    let mut maps = Vec::with_capacity(k);
    for j in 1..=k {
        let src = subsets(k, j);
        let tgt = subsets(k, j - 1);
        let index: HashMap<&Vec<usize>, usize> = tgt.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut m = PolyMatrix::zero(module_of(&tgt), module_of(&src));
        for (c, s) in src.iter().enumerate() {
            for p in 0..s.len() {
                let mut rest = s.clone();
                let v = rest.remove(p);
                let e = if p % 2 == 0 { forms[v].clone() } else { forms[v].neg(f) };
                m.set(index[&rest], c, e);
            }
        }
        maps.push(m);
    }
    Ok(FreeResolution { ring: *ring, maps })
}

/// Resolution of the residue field `k(i + twist)` by the Koszul complex on
/// the variables. Its syzygy module `Syz_i` sheafifies to `Ω^i(i)` (twisted).
pub fn koszul_module(ring: &Ring, i: usize, twist: i32) -> Result<FreeResolution> {
    if i > ring.nvars() {
        return Err(Error::Range(format!("Koszul index {i} exceeds {}", ring.nvars())));
    }
    koszul_complex(ring, &ring.vars(), i as i32 + twist)
}

/// Dense coordinates of degree-`t` elements of a free module with generator
/// degrees `gdeg`.
struct Piece {
    basis: Vec<(Mono, u32)>,
    index: HashMap<(Mono, u32), usize>,
}

impl Piece {
    fn new(nvars: usize, gdeg: &[i32], t: i32) -> Piece {
        let mut basis = Vec::new();
        for (c, &g) in gdeg.iter().enumerate() {
            if g <= t {
                for m in monomials_of_degree(nvars, (t - g) as u32) {
                    basis.push((m, c as u32));
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        Piece { basis, index }
    }

    fn dense(&self, v: &Vector) -> Vec<u32> {
        let mut row = vec![0u32; self.basis.len()];
        for t in &v.terms {
            row[self.index[&(t.m, t.c)]] = t.a;
        }
        row
    }

    fn sparse(&self, row: &[u32], f: crate::field::Fp) -> Vector {
        Vector::from_terms(
            f,
            row.iter()
                .zip(&self.basis)
                .filter(|(&a, _)| a != 0)
                .map(|(&a, &(m, c))| VTerm { m, c, a })
                .collect(),
        )
    }
}

/// The generic module with Hilbert function `hf`, `hf[k]` in degree
/// `start + k`. Generators sit in the lowest possible degrees; in each degree
/// random relations cut the span of the previous relations down to `hf`.
pub fn generic_module(ring: &Ring, hf: &[i64], start: i32, seed: u64) -> Result<FiniteModule> {
    if hf.is_empty() || hf[0] < 1 || hf.iter().any(|&h| h < 0) {
        return Err(Error::Range(format!("bad Hilbert function {hf:?}")));
    }
    let f = ring.field();
    let n = ring.nvars();
    let mut rng = stream(seed, "generic-module");
    let mut gdeg: Vec<i32> = vec![start; hf[0] as usize];
    let mut relations: Vec<Vector> = Vec::new();
    let mut prev: Vec<Vector> = Vec::new();
    for k in 1..=hf.len() {
        let t = start + k as i32;
        let want = hf.get(k).copied().unwrap_or(0) as usize;
        let piece = Piece::new(n, &gdeg, t);
        let mut rows: linalg::Mat = Vec::new();
        for u in &prev {
            for i in 0..n {
                rows.push(piece.dense(&u.mul_term(Mono::var(i), 1, f)));
            }
        }
        let w = if rows.is_empty() { 0 } else { linalg::rref(&mut rows, f).len() };
        rows.truncate(w);
        let mut q = piece.basis.len() - w;
        let mut piece = piece;
        if q < want {
            gdeg.extend(std::iter::repeat_n(t, want - q));
            piece = Piece::new(n, &gdeg, t);
            rows = rows.iter().map(|r| {
                let mut r = r.clone();
                r.resize(piece.basis.len(), 0);
                r
            }).collect();
            q = want;
        }
        let extra = q - want;
        let mut fresh: Vec<Vec<u32>> = Vec::new();
        for _attempt in 0..8 {
            fresh = random_scalars(ring, extra, piece.basis.len(), &mut rng);
            let mut all = rows.clone();
            all.extend(fresh.iter().cloned());
            if all.is_empty() || linalg::rank(&all, f) == w + extra {
                break;
            }
            fresh.clear();
        }
        if fresh.len() != extra {
            return Err(Error::Genericity {
                attempts: 8,
                reason: format!("random relations in degree {t} are dependent"),
            });
        }
        relations.extend(fresh.iter().map(|r| piece.sparse(r, f)));
        prev = rows.iter().chain(fresh.iter()).map(|r| piece.sparse(r, f)).collect();
    }
    let target = FreeModule::from_gen_degrees(&gdeg);
    let src = FreeModule::new(relations.iter().map(|v| -v.degree_in(&target).unwrap()).collect());
    let pres = PolyMatrix::from_columns_with_source(target, src, &relations)?;
    let m = FiniteModule {
        ring: *ring,
        presentation: prune(ring, &pres)?,
        hf: hf.to_vec(),
        start,
        recipe: Recipe::Generic,
        seed,
    };
    m.check_hf()?;
    Ok(m)
}

/// Presentation of the graded dual `Hom_k(M, k) = Ext^{nvars}(M, R(-nvars))`
/// of a finite-length module, from the transposed last differential.
pub fn dual_module(ring: &Ring, pres: &PolyMatrix) -> Result<PolyMatrix> {
    let h = module_hilbert(ring, pres)?;
    if h.dim != 0 {
        return Err(Error::Range("dual_module needs a finite-length module".into()));
    }
    if pres.rows() == 0 {
        return Ok(pres.clone());
    }
    let res = resolve(ring, pres)?;
    let l = res.len();
    if l != ring.nvars() {
        return Err(Error::Inconsistent(format!("finite-length module with resolution length {l}")));
    }
    prune(ring, &res.maps[l - 1].transpose().shift(-(ring.nvars() as i32)))
}

/// Dual of a [`FiniteModule`], Hilbert function reversed.
pub fn dual_finite(m: &FiniteModule) -> Result<FiniteModule> {
    let mut hf = m.hf.clone();
    hf.reverse();
    let start = -(m.start + m.hf.len() as i32 - 1);
    Ok(FiniteModule {
        ring: m.ring,
        presentation: dual_module(&m.ring, &m.presentation)?,
        hf,
        start,
        recipe: Recipe::DualOf(Box::new(m.recipe.clone())),
        seed: m.seed,
    })
}

/// The module `M` of the four-lines construction and its ingredients.
#[derive(Clone, Debug)]
pub struct FourLines {
    /// `k[x0..x3]`.
    pub small: Ring,
    /// The two linear forms of each line inside `V(x4)`.
    pub lines: Vec<[Poly; 2]>,
    /// `γ = (δ ε | γ_2)` presenting `M'*` over the small ring.
    pub gamma: PolyMatrix,
    /// `M'` over the small ring, generated in degree `-2`.
    pub m_prime: FiniteModule,
    /// `M = M' ⊗ Koszul(x4)` over the big ring, presented by `(x4, β)`.
    pub m: FiniteModule,
    /// Number of extra syzygies `a` in the resolution of `M'`.
    pub a: usize,
}

/// The two linear forms vanishing on the row span of a random full-rank
/// `2 × 4` matrix.
fn random_line(small: &Ring, rng: &mut impl Rng) -> [Poly; 2] {
    let f = small.field();
    loop {
        let a = random_scalars(small, 2, 4, rng);
        if linalg::rank(&a, f) < 2 {
            continue;
        }
        let k = linalg::kernel(&a, 4, f);
        let form = |c: &Vec<u32>| Poly::from_terms(f, (0..4).map(|j| (Mono::var(j), c[j])).collect());
        return [form(&k[0]), form(&k[1])];
    }
}

/// `β_{3,2}` of a module generated in degree `-2` over four variables.
pub fn extra_syzygies(b: &BettiTable) -> usize {
    b.get(3, 2)
}

/// Builds `M` from four general lines in `V(x4) ⊂ P^4`. Fails with a
/// genericity error when the Hilbert functions come out wrong.
pub fn four_lines_module(ring: &Ring, seed: u64) -> Result<FourLines> {
    if ring.nvars() != 5 {
        return Err(Error::Ambient("the four-lines module lives on P^4".into()));
    }
    let f = ring.field();
    let small = Ring::new(4, f)?;
    let mut rng = stream(seed, "four-lines");
    let lines: Vec<[Poly; 2]> = (0..4).map(|_| random_line(&small, &mut rng)).collect();
    let mut eps = PolyMatrix::zero(FreeModule::uniform(4, 0), FreeModule::uniform(8, -1));
    for (i, l) in lines.iter().enumerate() {
        eps.set(i, 2 * i, l[0].clone());
        eps.set(i, 2 * i + 1, l[1].clone());
    }
    let delta = random_scalars(&small, 3, 4, &mut rng);
    let mut gamma1 = PolyMatrix::zero(FreeModule::uniform(3, 0), FreeModule::uniform(8, -1));
    for r in 0..3 {
        for c in 0..8 {
            let mut e = Poly::zero();
            for k in 0..4 {
                e = e.add(&eps.get(k, c).scale(delta[r][k], f), f);
            }
            gamma1.set(r, c, e);
        }
    }
    let mut gamma2 = PolyMatrix::zero(FreeModule::uniform(3, 0), FreeModule::uniform(1, -2));
    for r in 0..3 {
        gamma2.set(r, 0, random_form(&small, 2, &mut rng));
    }
    let gamma = gamma1.hconcat(&gamma2)?;
    let dual_star = FiniteModule {
        ring: small,
        presentation: gamma.clone(),
        hf: vec![3, 4, 1],
        start: 0,
        recipe: Recipe::Explicit,
        seed,
    };
    dual_star.check_hf()?;
    // M'* lives in degrees 0..2, so its dual lives in -2..0
    let mp = FiniteModule {
        ring: small,
        presentation: dual_module(&small, &gamma)?,
        hf: vec![1, 4, 3],
        start: -2,
        recipe: Recipe::FourLines,
        seed,
    };
    mp.check_hf()?;
    let p = &mp.presentation;
    if p.rows() != 1 || p.cols() != 7 || (0..7).any(|j| p.source.twists[j] != 0) {
        return Err(Error::Genericity {
            attempts: 1,
            reason: format!("M' presentation has shape {}x{}", p.rows(), p.cols()),
        });
    }
    let a = extra_syzygies(&mp.resolution()?.betti());
    // over the big ring: S(2) <- S(1) + 7S given by (x4, β)
    let mut mm = PolyMatrix::zero(FreeModule::new(vec![2]), FreeModule::new(vec![1, 0, 0, 0, 0, 0, 0, 0]));
    mm.set(0, 0, ring.var(4));
    for j in 0..7 {
        mm.set(0, j + 1, p.get(0, j).clone());
    }
    let m = FiniteModule {
        ring: *ring,
        presentation: mm,
        hf: vec![1, 4, 3],
        start: -2,
        recipe: Recipe::FourLines,
        seed,
    };
    m.check_hf()?;
    Ok(FourLines {
        small,
        lines,
        gamma,
        m_prime: mp,
        m,
        a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn ring(n: usize) -> Ring {
        Ring::new(n, Fp::default()).unwrap()
    }

    #[test]
    fn koszul_ranks_are_binomial() {
        let r = ring(3);
        let k = koszul_module(&r, 0, 0).unwrap();
        assert_eq!(k.ranks(), vec![1, 3, 3, 1]);
        assert!(k.is_complex());
        let r = ring(6);
        let k = koszul_module(&r, 2, 0).unwrap();
        assert_eq!(k.ranks(), vec![1, 6, 15, 20, 15, 6, 1]);
        assert!(k.is_complex());
        assert_eq!(k.module(0).twists, vec![2]);
    }

    #[test]
    fn residue_field_is_self_dual() {
        let r = ring(4);
        let k = generic_module(&r, &[1], 0, 1).unwrap();
        assert_eq!(k.presentation.cols(), 4);
        let d = dual_finite(&k).unwrap();
        d.check_hf().unwrap();
        assert_eq!(d.resolution().unwrap().betti(), k.resolution().unwrap().betti());
    }

    #[test]
    fn small_generic_module_and_its_dual() {
        let r = ring(3);
        let m = generic_module(&r, &[1, 3, 2], 0, 5).unwrap();
        let d = dual_finite(&m).unwrap();
        assert_eq!(d.hf, vec![2, 3, 1]);
        d.check_hf().unwrap();
        let b = m.resolution().unwrap().betti();
        let bd = d.resolution().unwrap().betti();
        assert_eq!(bd, b.dual(3, 3));
        let dd = dual_finite(&d).unwrap();
        assert_eq!(dd.resolution().unwrap().betti(), b);
    }
}

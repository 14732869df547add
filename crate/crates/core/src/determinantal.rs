//! Bundle maps `φ: F -> G` with `rk G = rk F + 1` and their degeneracy loci.
//!
//! A bundle is a direct sum of line bundles and syzygy sheaves. Each summand
//! is carried by a graded module with a presentation: `O(a)` by `R(a)`, and
//! `Syz_i(M)` by `coker(α_{i+2}: L_{i+2} -> L_{i+1})` from a resolution of
//! `M`. Maps are degree-zero module maps between the generators.

use crate::error::{Error, Result};
use crate::factory::{four_lines_module, generic_module, koszul_module};
use crate::groebner::hilbert::{binom_poly, HilbertData};
use crate::groebner::ideal::{dim_codim, minimal_generators, saturate};
use crate::groebner::{gb_ideal, gb_matrix, GbOptions};
use crate::linalg;
use crate::module::{FreeModule, PolyMatrix, VTerm, Vector};
use crate::monomial::monomials_of_degree;
use crate::poly::{Poly, Ring};
use crate::resolution::{
    lift_chain_map, mapping_cone, minimalize, module_hilbert, prune, resolve, resolve_ideal, syzygies,
    BettiTable, FreeResolution,
};
use crate::rng::{random_map, stream};
use rand::Rng;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// One summand of a bundle.
#[derive(Clone, Debug)]
pub enum Summand {
    /// `O(a)`.
    Line(i32),
    /// `Syz_index(M)(twist)` where `res` resolves `M`.
    Syzygy {
        label: String,
        res: Arc<FreeResolution>,
        index: usize,
        twist: i32,
    },
}

impl Summand {
    /// The resolution of the carrying module, starting at its generators.
    pub fn resolution(&self, ring: &Ring) -> FreeResolution {
        match self {
            Summand::Line(a) => FreeResolution {
                ring: *ring,
                maps: vec![PolyMatrix::zero(FreeModule::new(vec![*a]), FreeModule::new(Vec::new()))],
            },
            Summand::Syzygy { res, index, twist, .. } => {
                let maps: Vec<PolyMatrix> = res.maps[index + 1..].iter().map(|m| m.shift(*twist)).collect();
                if maps.is_empty() {
                    let gens = res.module(index + 1).shift(*twist);
                    return FreeResolution {
                        ring: *ring,
                        maps: vec![PolyMatrix::zero(gens, FreeModule::new(Vec::new()))],
                    };
                }
                FreeResolution { ring: *ring, maps }
            }
        }
    }

    pub fn rank(&self, ring: &Ring) -> i64 {
        let r = self.resolution(ring);
        r.ranks()
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum()
    }

    pub fn c1(&self, ring: &Ring) -> i64 {
        let r = self.resolution(ring);
        (0..=r.len())
            .map(|k| if k % 2 == 0 { r.module(k).c1() } else { -r.module(k).c1() })
            .sum()
    }

    fn name(&self) -> String {
        match self {
            Summand::Line(0) => "O".into(),
            Summand::Line(a) => format!("O({a})"),
            Summand::Syzygy { label, twist: 0, .. } => label.clone(),
            Summand::Syzygy { label, twist, .. } => format!("{label}({twist})"),
        }
    }
}

/// A direct sum of summands on one ambient space.
#[derive(Clone, Debug)]
pub struct BundleRep {
    pub ring: Ring,
    pub summands: Vec<Summand>,
}

impl fmt::Display for BundleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(String, usize)> = Vec::new();
        for s in &self.summands {
            let n = s.name();
            match parts.last_mut() {
                Some((p, c)) if *p == n => *c += 1,
                _ => parts.push((n, 1)),
            }
        }
        let txt: Vec<String> = parts
            .iter()
            .map(|(n, c)| if *c == 1 { n.clone() } else { format!("{c}{n}") })
            .collect();
        write!(f, "{}", txt.join(" + "))
    }
}

impl BundleRep {
    pub fn new(ring: &Ring) -> BundleRep {
        BundleRep {
            ring: *ring,
            summands: Vec::new(),
        }
    }

    /// Adds `count` copies of `O(a)`.
    pub fn lines(mut self, count: usize, a: i32) -> BundleRep {
        self.summands.extend(std::iter::repeat_n(Summand::Line(a), count));
        self
    }

    /// Adds `count` copies of `Syz_index(M)`; `1 <= index <= n - 1`.
    pub fn syzygy(mut self, count: usize, label: &str, res: Arc<FreeResolution>, index: usize) -> Result<BundleRep> {
        let n = self.ring.pn();
        if index < 1 || index + 1 > n {
            return Err(Error::Range(format!("syzygy index {index} outside 1..={}", n - 1)));
        }
        if res.len() < index + 2 {
            return Err(Error::Range(format!("resolution too short for Syz_{index}")));
        }
        for _ in 0..count {
            self.summands.push(Summand::Syzygy {
                label: label.to_string(),
                res: res.clone(),
                index,
                twist: 0,
            });
        }
        Ok(self)
    }

    /// Adds `count` copies of `Ω^i(i)`, carried by the Koszul syzygy module.
    pub fn omega(self, count: usize, i: usize) -> Result<BundleRep> {
        let k = Arc::new(koszul_module(&self.ring, i, 0)?);
        let label = format!("Omega^{i}({i})");
        self.syzygy(count, &label, k, i)
    }

    pub fn rank(&self) -> i64 {
        self.summands.iter().map(|s| s.rank(&self.ring)).sum()
    }

    pub fn c1(&self) -> i64 {
        self.summands.iter().map(|s| s.c1(&self.ring)).sum()
    }

    /// Block-diagonal sum of the summand resolutions.
    pub fn resolution(&self) -> FreeResolution {
        let parts: Vec<FreeResolution> = self.summands.iter().map(|s| s.resolution(&self.ring)).collect();
        let len = parts.iter().map(|p| p.len()).max().unwrap_or(1).max(1);
        let mut maps = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc: Option<PolyMatrix> = None;
            for p in &parts {
                let m = match p.maps.get(k) {
                    Some(m) => m.clone(),
                    None => PolyMatrix::zero(p.module(k), FreeModule::new(Vec::new())),
                };
                acc = Some(match acc {
                    None => m,
                    Some(a) => a.block_sum(&m),
                });
            }
            maps.push(acc.unwrap_or_else(|| PolyMatrix::zero(FreeModule::new(Vec::new()), FreeModule::new(Vec::new()))));
        }
        FreeResolution { ring: self.ring, maps }
    }

    /// Presentation `L_1 -> L_0` of the carrying module.
    pub fn presentation(&self) -> PolyMatrix {
        self.resolution().maps.swap_remove(0)
    }

    pub fn generators(&self) -> FreeModule {
        self.presentation().target
    }
}

/// A degree-zero map between the carrying modules, as a matrix between
/// their generators.
#[derive(Clone, Debug)]
pub struct BundleMap {
    pub source: BundleRep,
    pub target: BundleRep,
    pub matrix: PolyMatrix,
}

impl BundleMap {
    /// Checks that relations of the source go to relations of the target.
    pub fn audit(&self) -> Result<()> {
        let ring = self.source.ring;
        let pf = self.source.presentation();
        let pg = self.target.presentation();
        let img = self.matrix.compose(&pf, ring.field())?;
        if img.cols() == 0 || pg.cols() == 0 {
            return if img.is_zero() {
                Ok(())
            } else {
                Err(Error::NotChainMap("relations map outside the target relations".into()))
            };
        }
        let gb = gb_matrix(&ring, &pg, GbOptions::default())?;
        if img.columns().iter().all(|c| gb.contains(c)) {
            Ok(())
        } else {
            Err(Error::NotChainMap("relations map outside the target relations".into()))
        }
    }
}

/// Basis of `Hom(F, G)_0`.
pub struct HomSpace {
    pub source: BundleRep,
    pub target: BundleRep,
    pub basis: Vec<PolyMatrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_k basis_k` with random coefficients.
    pub fn random_element(&self, rng: &mut impl Rng) -> BundleMap {
        let ring = self.source.ring;
        let f = ring.field();
        let mut m = PolyMatrix::zero(self.target.generators(), self.source.generators());
        for b in &self.basis {
            let c = rng.gen_range(1..f.p());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let e = b.get(i, j);
                    if !e.is_zero() {
                        let v = m.get(i, j).add(&e.scale(c, f), f);
                        m.set(i, j, v);
                    }
                }
            }
        }
        BundleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: m,
        }
    }
}

/// Degree-zero homomorphisms between the carrying modules of `F` and `G`.
///
/// Each generator of `F` goes to a combination of standard monomials of the
/// target (normal forms modulo its relations); a choice is a homomorphism
/// iff every relation of `F` maps to zero modulo the target relations. That
/// is a linear system whose kernel is the answer.
pub fn hom_space(src: &BundleRep, tgt: &BundleRep) -> Result<HomSpace> {
    let ring = src.ring;
    ring.check_same(&tgt.ring)?;
    let f = ring.field();
    let n = ring.nvars();
    let pf = src.presentation();
    let pg = tgt.presentation();
    let gmod = pg.target.clone();
    let gb = if pg.cols() > 0 {
        Some(gb_matrix(&ring, &pg, GbOptions::default())?)
    } else {
        None
    };
    let leads = gb
        .as_ref()
        .map(|g| g.leading_monomials_by_component())
        .unwrap_or_else(|| vec![Vec::new(); gmod.rank()]);
    // standard monomial basis of the target module in degree t
    let standard = |t: i32| -> Vec<(crate::monomial::Mono, u32)> {
        let mut out = Vec::new();
        for c in 0..gmod.rank() {
            let d = t - gmod.gen_degree(c);
            if d < 0 {
                continue;
            }
            for m in monomials_of_degree(n, d as u32) {
                if !leads[c].iter().any(|l| l.divides(m)) {
                    out.push((m, c as u32));
                }
            }
        }
        out
    };
    let mut unknowns: Vec<(usize, crate::monomial::Mono, u32)> = Vec::new();
    let mut by_gen: Vec<Vec<usize>> = vec![Vec::new(); pf.rows()];
    for j in 0..pf.rows() {
        for (m, c) in standard(pf.target.gen_degree(j)) {
            by_gen[j].push(unknowns.len());
            unknowns.push((j, m, c));
        }
    }
    let nf = |v: &Vector| -> Vector {
        match &gb {
            Some(g) => g.normal_form(v),
            None => v.clone(),
        }
    };
    let mut row_index: HashMap<(usize, crate::monomial::Mono, u32), usize> = HashMap::new();
    let mut cols: Vec<Vec<(usize, u32)>> = vec![Vec::new(); unknowns.len()];
    for k in 0..pf.cols() {
        for j in 0..pf.rows() {
            let p = pf.get(j, k);
            if p.is_zero() {
                continue;
            }
            for &u in &by_gen[j] {
                let (_, m, c) = unknowns[u];
                let v = Vector {
                    terms: vec![VTerm { m, c, a: 1 }],
                }
                .mul_poly(p, f);
                for t in nf(&v).terms {
                    let len = row_index.len();
                    let r = *row_index.entry((k, t.m, t.c)).or_insert(len);
                    cols[u].push((r, t.a));
                }
            }
        }
    }
    let nrows = row_index.len();
    let mut a: linalg::Mat = vec![vec![0u32; unknowns.len()]; nrows];
    for (u, col) in cols.iter().enumerate() {
        for &(r, x) in col {
            a[r][u] = f.add(a[r][u], x);
        }
    }
    let kernel = if nrows == 0 {
        (0..unknowns.len())
            .map(|u| {
                let mut v = vec![0u32; unknowns.len()];
                v[u] = 1;
                v
            })
            .collect()
    } else {
        linalg::kernel(&a, unknowns.len(), f)
    };
    let basis = kernel
        .iter()
        .map(|kv| {
            let mut m = PolyMatrix::zero(gmod.clone(), pf.target.clone());
            for (u, &x) in kv.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let (j, mono, c) = unknowns[u];
                let e = m.get(c as usize, j).add(&Poly::monomial(mono, x), f);
                m.set(c as usize, j, e);
            }
            m
        })
        .collect();
    Ok(HomSpace {
        source: src.clone(),
        target: tgt.clone(),
        basis,
    })
}

/// The degeneracy locus of a bundle map and everything computed on the way.
#[derive(Clone, Debug)]
pub struct Construction {
    pub ring: Ring,
    /// Minimal generators of the saturated ideal.
    pub ideal: Vec<Poly>,
    /// `m` with `coker φ ≅ J_X(m)`.
    pub twist: i32,
    /// `c1 G - c1 F`.
    pub c1_twist: i64,
    /// Minimal presentation of `coker φ`.
    pub coker: PolyMatrix,
    /// Minimalized mapping cone resolving `coker φ`.
    pub cone: Option<FreeResolution>,
    /// Minimal resolution of `R/I_X`.
    pub resolution: FreeResolution,
    pub hilbert: HilbertData,
}

impl Construction {
    /// Betti table of `I_X` (not of `R/I_X`).
    pub fn ideal_betti(&self) -> BettiTable {
        self.resolution.betti().drop_first()
    }

    /// Betti table of the cone, moved to `I_X` by the twist.
    pub fn cone_betti(&self) -> Option<BettiTable> {
        self.cone.as_ref().map(|c| c.betti().shift(-self.twist))
    }

    /// Generator degrees with multiplicity, sorted.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.ideal.iter().filter_map(|g| g.degree()).collect();
        d.sort_unstable();
        d
    }

    /// `(d, π)` from the Hilbert polynomial.
    pub fn degree_genus(&self) -> (i64, i64) {
        self.hilbert.degree_genus()
    }
}

/// Options for [`construct_variety`].
#[derive(Clone, Copy, Debug)]
pub struct ConstructOptions {
    /// Also resolve `coker φ` by the mapping cone.
    pub cone: bool,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { cone: true }
    }
}

/// Extracts `I_X` from `coker φ`: the unique (up to scalar) map
/// `coker φ -> R(m)` comes from the kernel of the transposed presentation;
/// its image, saturated, is `I_X`. Certified by codimension and by the
/// Hilbert polynomial of `coker φ`.
pub fn construct_variety(phi: &BundleMap, opts: ConstructOptions) -> Result<Construction> {
    let ring = phi.source.ring;
    let n = ring.pn();
    let rf = phi.source.rank();
    let rg = phi.target.rank();
    if rg != rf + 1 {
        return Err(Error::Range(format!("rk G = {rg} must be rk F + 1 = {}", rf + 1)));
    }
    let c1_twist = phi.target.c1() - phi.source.c1();
    let pg = phi.target.presentation();
    let pres = pg.hconcat(&phi.matrix)?;
    let coker = prune(&ring, &pres)?;
    // Hom(coker φ, R) is free of rank one
    let hom = syzygies(&ring, &coker.transpose())?;
    if hom.cols() != 1 {
        return Err(Error::Genericity {
            attempts: 1,
            reason: format!("Hom(coker φ, R) needs {} generators, expected 1", hom.cols()),
        });
    }
    let v = hom.column(0);
    let twist = -hom.source.twists[0];
    let gens: Vec<Poly> = (0..hom.rows()).map(|k| v.component(k)).filter(|p| !p.is_zero()).collect();
    let sat = saturate(&ring, &gens)?;
    let gb = gb_ideal(&ring, &sat, GbOptions::default())?;
    let (_, codim) = dim_codim(&gb);
    if codim != 2 {
        return Err(Error::Codimension { expected: 2, found: codim });
    }
    let hilbert = HilbertData::from_gb(&gb);
    // HP(R/I)(t) = dim R_t - HP_coker(t - m)
    let hn = module_hilbert(&ring, &coker)?;
    for t in 0..=(n as i64 + 2) {
        let want = binom_poly(t + n as i64, n) as i64 - hn.hp(t - twist as i64);
        if hilbert.hp(t) != want {
            return Err(Error::Inconsistent(format!(
                "Hilbert polynomial of the ideal disagrees with coker φ at t = {t}"
            )));
        }
    }
    let mut ideal = minimal_generators(&ring, &sat)?;
    ideal.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.lead_mono().cmp(&a.lead_mono())));
    let ideal: Vec<Poly> = ideal.iter().map(|g| g.monic(ring.field())).collect();
    let cone = if opts.cone {
        let rf = phi.source.resolution();
        let rg = phi.target.resolution();
        let cm = lift_chain_map(&rf, &rg, phi.matrix.clone())?;
        Some(minimalize(&ring, &mapping_cone(&cm)?))
    } else {
        None
    };
    let resolution = resolve_ideal(&ring, &ideal)?;
    Ok(Construction {
        ring,
        ideal,
        twist,
        c1_twist,
        coker,
        cone,
        resolution,
        hilbert,
    })
}

/// Runs `attempt` on `seed, seed+1, ..` until it succeeds, at most `cap`
/// times. Only genericity-type failures are retried.
pub fn with_retries<T>(seed: u64, cap: usize, mut attempt: impl FnMut(u64) -> Result<T>) -> Result<(T, u64)> {
    let mut last = String::new();
    for k in 0..cap as u64 {
        match attempt(seed + k) {
            Ok(t) => return Ok((t, seed + k)),
            Err(e @ (Error::Genericity { .. } | Error::Codimension { .. } | Error::Inconsistent(_))) => {
                last = e.to_string();
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity {
        attempts: cap,
        reason: last,
    })
}

fn expect_ring(ring: &Ring, n: usize, what: &str) -> Result<()> {
    if ring.pn() != n {
        return Err(Error::Ambient(format!("{what} lives on P^{n}, not P^{}", ring.pn())));
    }
    Ok(())
}

/// Generic linear map `3O(-1) -> 4O` on `P^4`: the Bordiga surface.
pub fn bordiga(ring: &Ring, seed: u64) -> Result<(BundleMap, Construction)> {
    expect_ring(ring, 4, "the Bordiga surface")?;
    let fb = BundleRep::new(ring).lines(3, -1);
    let gb = BundleRep::new(ring).lines(4, 0);
    let mut rng = stream(seed, "bordiga");
    let m = random_map(ring, &gb.generators(), &fb.generators(), &mut rng);
    let phi = BundleMap {
        source: fb,
        target: gb,
        matrix: m,
    };
    let c = construct_variety(&phi, ConstructOptions::default())?;
    Ok((phi, c))
}

/// `O(-a-b) -> O(-a) + O(-b)` by `(g, -f)`: the complete intersection `(f, g)`.
pub fn complete_intersection(ring: &Ring, fpoly: &Poly, gpoly: &Poly) -> Result<(BundleMap, Construction)> {
    let fld = ring.field();
    let a = fpoly.degree().ok_or_else(|| Error::Range("zero form".into()))? as i32;
    let b = gpoly.degree().ok_or_else(|| Error::Range("zero form".into()))? as i32;
    let src = BundleRep::new(ring).lines(1, -a - b);
    let tgt = BundleRep::new(ring).lines(1, -a).lines(1, -b);
    let m = PolyMatrix::new(tgt.generators(), src.generators(), vec![gpoly.clone(), fpoly.neg(fld)])?;
    let phi = BundleMap {
        source: src,
        target: tgt,
        matrix: m,
    };
    let c = construct_variety(&phi, ConstructOptions::default())?;
    Ok((phi, c))
}

/// The resolution data of the generic `(1,6,3)` module on `P^5`.
pub const GENERIC_163_BETTI: [(usize, i32, usize); 8] = [
    (0, -4, 1),
    (1, -2, 18),
    (2, -1, 52),
    (3, 0, 60),
    (4, 1, 24),
    (4, 2, 10),
    (5, 3, 12),
    (6, 4, 3),
];

/// The 3-fold of degree 18 on `P^5`: `24O(-1) -> Syz_3(M)` for the generic
/// module `M` with Hilbert function `(1,6,3)`, the map including the linear
/// part of the fourth syzygies.
pub fn threefold_d18(ring: &Ring, seed: u64, opts: ConstructOptions) -> Result<(BundleMap, Construction)> {
    expect_ring(ring, 5, "the degree-18 3-fold")?;
    let m = generic_module(ring, &[1, 6, 3], -4, seed)?;
    let res = Arc::new(m.resolution()?);
    if res.betti() != BettiTable::from_triples(&GENERIC_163_BETTI) {
        return Err(Error::Genericity {
            attempts: 1,
            reason: format!("module resolution {:?}", res.ranks()),
        });
    }
    let g = BundleRep::new(ring).syzygy(1, "Syz_3(M)", res.clone(), 3)?;
    let gens = g.generators();
    let lin: Vec<usize> = (0..gens.rank()).filter(|&i| gens.gen_degree(i) == 1).collect();
    let fb = BundleRep::new(ring).lines(lin.len(), -1);
    let mut mat = PolyMatrix::zero(gens.clone(), fb.generators());
    for (j, &i) in lin.iter().enumerate() {
        mat.set(i, j, Poly::constant(1));
    }
    let phi = BundleMap {
        source: fb,
        target: g,
        matrix: mat,
    };
    let c = construct_variety(&phi, opts)?;
    Ok((phi, c))
}

/// The surface with `d = π = 11`, `χ = 3` on `P^4`:
/// `2O(-1) + Ω^3(3) -> Syz_1(M)` for the four-lines module `M`, generic map.
pub fn surface_d11(ring: &Ring, seed: u64, opts: ConstructOptions) -> Result<(BundleMap, Construction)> {
    expect_ring(ring, 4, "the four-lines surface")?;
    let fl = four_lines_module(ring, seed)?;
    if fl.a != 1 {
        return Err(Error::Genericity {
            attempts: 1,
            reason: format!("four-lines module has a = {}", fl.a),
        });
    }
    let res = Arc::new(fl.m.resolution()?);
    let g = BundleRep::new(ring).syzygy(1, "Syz_1(M)", res, 1)?;
    let fb = BundleRep::new(ring).lines(2, -1).omega(1, 3)?;
    let hom = hom_space(&fb, &g)?;
    let phi = hom.random_element(&mut stream(seed, "phi"));
    let c = construct_variety(&phi, opts)?;
    Ok((phi, c))
}

/// The 3-fold with `d = 17`, `π = 32` on `P^5`:
/// `O(-1) + 4Ω^4(4) -> 2Ω^3(3) + 2O`, generic map.
pub fn threefold_d17(ring: &Ring, seed: u64, opts: ConstructOptions) -> Result<(BundleMap, Construction)> {
    expect_ring(ring, 5, "the degree-17 3-fold")?;
    let fb = BundleRep::new(ring).lines(1, -1).omega(4, 4)?;
    let gb = BundleRep::new(ring).omega(2, 3)?.lines(2, 0);
    let hom = hom_space(&fb, &gb)?;
    let phi = hom.random_element(&mut stream(seed, "phi"));
    let c = construct_variety(&phi, opts)?;
    Ok((phi, c))
}

/// The residual 3-fold with `d = 13`, `π = 18` on `P^5`:
/// `O(-1) + 2Ω^2(2) -> 4Ω^1(1) + 2O`, generic map.
pub fn threefold_d13(ring: &Ring, seed: u64, opts: ConstructOptions) -> Result<(BundleMap, Construction)> {
    expect_ring(ring, 5, "the degree-13 3-fold")?;
    let fb = BundleRep::new(ring).lines(1, -1).omega(2, 2)?;
    let gb = BundleRep::new(ring).omega(4, 1)?.lines(2, 0);
    let hom = hom_space(&fb, &gb)?;
    let phi = hom.random_element(&mut stream(seed, "phi"));
    let c = construct_variety(&phi, opts)?;
    Ok((phi, c))
}

/// Presentation of `ω_X(1) = Ext^c(R/I, R(-n-1))(1)` for a resolution of
/// `R/I` of a codimension-`c` scheme.
pub fn canonical_module(ring: &Ring, res: &FreeResolution, codim: usize) -> Result<PolyMatrix> {
    let exts = crate::resolution::ext_modules(res)?;
    let e = exts
        .get(codim)
        .ok_or_else(|| Error::Range(format!("no Ext^{codim}")))?;
    Ok(e.shift(-(ring.nvars() as i32) + 1))
}

/// Resolution of `coker(p)` re-derived from scratch (for audits).
pub fn resolve_coker(ring: &Ring, p: &PolyMatrix) -> Result<FreeResolution> {
    resolve(ring, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::parse::parse_poly;

    fn ring(n: usize) -> Ring {
        Ring::new(n, Fp::default()).unwrap()
    }

    #[test]
    fn hom_between_line_bundles() {
        let r = ring(6);
        let a = BundleRep::new(&r).lines(1, -1);
        let b = BundleRep::new(&r).lines(1, 0);
        assert_eq!(hom_space(&a, &b).unwrap().dim(), 6);
    }

    #[test]
    fn hom_between_omegas_is_exterior_power() {
        let r = ring(6);
        let a = BundleRep::new(&r).omega(1, 4).unwrap();
        let b = BundleRep::new(&r).omega(1, 3).unwrap();
        let h = hom_space(&a, &b).unwrap();
        assert_eq!(h.dim(), 6);
        for m in &h.basis {
            BundleMap {
                source: a.clone(),
                target: b.clone(),
                matrix: m.clone(),
            }
            .audit()
            .unwrap();
        }
        assert_eq!(a.rank(), 5);
        assert_eq!(a.c1(), -4);
        assert_eq!(b.c1(), -6);
    }

    #[test]
    fn complete_intersection_is_recovered() {
        let r = ring(4);
        let f = parse_poly(&r, "x0^2 + x1*x3").unwrap();
        let g = parse_poly(&r, "x2^3 - x0*x1*x3").unwrap();
        let (_, c) = complete_intersection(&r, &f, &g).unwrap();
        assert_eq!(c.generator_degrees(), vec![2, 3]);
        assert_eq!(c.hilbert.degree, 6);
        assert_eq!(c.twist, 0);
        assert_eq!(c.c1_twist, 0);
    }

    #[test]
    fn bordiga_surface() {
        let r = ring(5);
        let (phi, c) = bordiga(&r, 1).unwrap();
        assert_eq!(phi.source.to_string(), "3O(-1)");
        assert_eq!(c.generator_degrees(), vec![3, 3, 3, 3]);
        assert_eq!(c.degree_genus(), (6, 3));
        assert_eq!(c.twist, 3);
        assert_eq!(c.cone_betti().unwrap(), c.ideal_betti());
        let w = canonical_module(&r, &c.resolution, 2).unwrap();
        let w = prune(&r, &w).unwrap();
        assert_eq!(w.target.twists, vec![0, 0, 0]);
        assert_eq!(w.source.twists, vec![-1, -1, -1, -1]);
    }
}

//! Homogeneous Buchberger algorithm for submodules of graded free modules.
//!
//! Degrees are processed in increasing order (normal strategy). Within a
//! degree, S-pairs are reduced before the input generators, so an input that
//! reduces to zero is redundant and the accepted inputs form a minimal
//! generating set. Optional tracking expresses every basis element through
//! the inputs; zero reductions then yield syzygies.

pub mod hilbert;
pub mod ideal;
pub mod space;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::module::{FreeModule, PolyMatrix, VTerm, Vector};
use crate::monomial::{Mono, MonoRanker};
use crate::poly::{Poly, Ring};
pub use space::ModuleOrder;
use space::{Space, SpaceCache};

/// What to record besides the basis itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Track {
    /// Basis only.
    None,
    /// Representations and syzygies in terms of all inputs.
    All,
    /// Representations and syzygies in terms of the accepted (minimal)
    /// inputs only; relations expressing redundant inputs are dropped.
    Minimal,
}

#[derive(Clone, Debug)]
pub struct GbOptions {
    /// Stop after this total degree.
    pub max_degree: Option<i32>,
    pub track: Track,
    /// Term order on the ambient module. Under a non-standard order the
    /// basis elements keep their terms sorted in that order.
    pub order: ModuleOrder,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            max_degree: None,
            track: Track::None,
            order: ModuleOrder::Standard,
        }
    }
}

impl GbOptions {
    pub fn tracked(track: Track) -> GbOptions {
        GbOptions {
            max_degree: None,
            track,
            order: ModuleOrder::Standard,
        }
    }

    pub fn with_order(mut self, order: ModuleOrder) -> GbOptions {
        self.order = order;
        self
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    deg: i32,
}

/// A reduced Gröbner basis (up to `truncated_at` if set) of a submodule of
/// `module`, with elements monic and grouped by degree.
pub struct GroebnerBasis {
    pub ring: Ring,
    pub module: FreeModule,
    pub elems: Vec<Vector>,
    pub degrees: Vec<i32>,
    /// Representation of each element through the inputs (empty if untracked).
    pub reps: Vec<Vector>,
    /// Module the representations live in.
    pub rep_module: FreeModule,
    /// Indices of inputs that were not redundant, in processing order.
    pub accepted: Vec<usize>,
    /// Syzygies of the inputs (or of the accepted inputs under `Track::Minimal`).
    pub syzygies: Vec<Vector>,
    /// `Some(d)` if the computation stopped after degree `d` with work left.
    pub truncated_at: Option<i32>,
    pub track: Track,
    lead: Vec<Vec<(Mono, usize)>>,
    cache: SpaceCache,
    rep_cache: SpaceCache,
}

/// Loads `scale * m * v` into a dense accumulator.
#[inline]
fn load(acc: &mut [u64], sp: &Space, rk: &MonoRanker, v: &Vector, scale: u32, m: Mono) {
    let s = scale as u64;
    for t in &v.terms {
        let k = sp.index(rk, t.m.mul(m), t.c);
        acc[k] += s * t.a as u64;
    }
}

fn extract(acc: &[u64], sp: &Space, p: u64) -> Vector {
    let mut out = Vec::new();
    for i in (0..acc.len()).rev() {
        let c = acc[i] % p;
        if c != 0 {
            let (m, comp) = sp.table[i];
            out.push(VTerm {
                m,
                c: comp,
                a: c as u32,
            });
        }
    }
    Vector { terms: out }
}

struct RepWork<'a> {
    reps: &'a [Vector],
    sp: &'a Space,
    rk: &'a MonoRanker,
    acc: &'a mut [u64],
}

/// Full reduction of the accumulator against the basis.
#[allow(clippy::too_many_arguments)]
fn reduce_dense(
    f: Fp,
    sp: &Space,
    rk: &MonoRanker,
    acc: &mut [u64],
    elems: &[Vector],
    lead: &[Vec<(Mono, usize)>],
    skip: Option<usize>,
    mut rep: Option<RepWork<'_>>,
) {
    let p = f.p() as u64;
    for i in (0..acc.len()).rev() {
        let c = acc[i] % p;
        acc[i] = c;
        if c == 0 {
            continue;
        }
        let (m, comp) = sp.table[i];
        let found = lead[comp as usize]
            .iter()
            .find(|&&(lm, k)| Some(k) != skip && lm.divides(m));
        if let Some(&(lm, k)) = found {
            let u = lm.div_into(m);
            let q = (p - c) as u32;
            load(acc, sp, rk, &elems[k], q, u);
            debug_assert_eq!(acc[i] % p, 0);
            acc[i] = 0;
            if let Some(r) = rep.as_mut() {
                load(r.acc, r.sp, r.rk, &r.reps[k], q, u);
            }
        }
    }
}

struct Engine {
    f: Fp,
    gdeg: Vec<i32>,
    rank1: bool,
    elems: Vec<Vector>,
    degrees: Vec<i32>,
    reps: Vec<Vector>,
    lead: Vec<Vec<(Mono, usize)>>,
    leads: Vec<(Mono, u32)>,
    pairs: Vec<Pair>,
    syz: Vec<Vector>,
    koszul_pending: Vec<(usize, usize)>,
    track: Track,
    cache: SpaceCache,
    rep_cache: SpaceCache,
}

impl Engine {
    fn tracking(&self) -> bool {
        self.track != Track::None
    }

    /// Reduces `acc` (degree `t`), returning the remainder and, if tracked,
    /// the updated representation.
    fn reduce(&self, t: i32, acc: &mut [u64], racc: Option<&mut [u64]>, skip: Option<usize>) -> (Vector, Option<Vector>) {
        let sp = self.cache.get(t);
        let p = self.f.p() as u64;
        match racc {
            Some(ra) => {
                let rsp = self.rep_cache.get(t);
                reduce_dense(
                    self.f,
                    &sp,
                    &self.cache.ranker,
                    acc,
                    &self.elems,
                    &self.lead,
                    skip,
                    Some(RepWork {
                        reps: &self.reps,
                        sp: &rsp,
                        rk: &self.rep_cache.ranker,
                        acc: ra,
                    }),
                );
                (extract(acc, &sp, p), Some(extract(ra, &rsp, p)))
            }
            None => {
                reduce_dense(self.f, &sp, &self.cache.ranker, acc, &self.elems, &self.lead, skip, None);
                (extract(acc, &sp, p), None)
            }
        }
    }

    fn buffers(&self, t: i32) -> (Vec<u64>, Option<Vec<u64>>) {
        let n = self.cache.get(t).len();
        let r = if self.tracking() {
            Some(vec![0u64; self.rep_cache.get(t).len()])
        } else {
            None
        };
        (vec![0u64; n], r)
    }

    fn add_element(&mut self, v: Vector, rep: Option<Vector>, t: i32) {
        let lt = v.terms[0];
        let inv = self.f.inv(lt.a);
        let v = v.scale(inv, self.f);
        let h = self.elems.len();
        self.elems.push(v);
        self.degrees.push(t);
        if let Some(r) = rep {
            self.reps.push(r.scale(inv, self.f));
        }
        self.update_pairs(h, lt.m, lt.c);
        self.lead[lt.c as usize].push((lt.m, h));
        self.leads.push((lt.m, lt.c));
    }

    /// Gebauer–Möller update for the new element `h`.
    fn update_pairs(&mut self, h: usize, lh: Mono, ch: u32) {
        let cands: Vec<(usize, Mono)> = self.lead[ch as usize]
            .iter()
            .map(|&(lg, g)| (g, lg.lcm(lh)))
            .collect();
        let disjoint: Vec<bool> = cands
            .iter()
            .map(|&(g, _)| self.rank1 && self.leads[g].0.coprime(lh))
            .collect();
        let mut keep: Vec<(usize, Mono, bool)> = Vec::new();
        for (k, &(g, l)) in cands.iter().enumerate() {
            let covered_later = cands[k + 1..].iter().any(|&(_, l2)| l2.divides(l));
            let covered_kept = keep.iter().any(|&(_, l2, _)| l2.divides(l));
            if disjoint[k] || (!covered_later && !covered_kept) {
                keep.push((g, l, disjoint[k]));
            }
        }
        let mut fresh = Vec::new();
        for (g, l, dj) in keep {
            if dj {
                if self.tracking() {
                    self.koszul_pending.push((g, h));
                }
            } else {
                fresh.push(Pair {
                    i: g,
                    j: h,
                    lcm: l,
                    deg: l.deg() as i32 + self.gdeg[ch as usize],
                });
            }
        }
        let leads = &self.leads;
        self.pairs.retain(|pr| {
            let c = leads[pr.i].1;
            if c != ch || !lh.divides(pr.lcm) {
                return true;
            }
            let l1 = leads[pr.i].0.lcm(lh);
            let l2 = leads[pr.j].0.lcm(lh);
            l1 == pr.lcm || l2 == pr.lcm
        });
        self.pairs.extend(fresh);
    }

    /// `g_h * rep_g - g_g * rep_h` for coprime leading terms (ideal case).
    /// Called once both elements are final.
    fn koszul_syzygy(&mut self, g: usize, h: usize) {
        let pg = self.elems[g].component(0);
        let ph = self.elems[h].component(0);
        let a = self.reps[g].mul_poly(&ph, self.f);
        let b = self.reps[h].mul_poly(&pg, self.f);
        let s = a.sub(&b, self.f);
        if !s.is_zero() {
            self.syz.push(s);
        }
    }

    /// Makes the elements of degree `t` reduced with respect to each other.
    fn interreduce_degree(&mut self, t: i32) {
        let idx: Vec<usize> = (0..self.elems.len()).filter(|&k| self.degrees[k] == t).collect();
        if idx.len() < 2 {
            return;
        }
        let sp = self.cache.get(t);
        let rk = &self.cache.ranker;
        for &k in &idx {
            let (mut acc, mut racc) = self.buffers(t);
            load(&mut acc, &sp, rk, &self.elems[k], 1, Mono::ONE);
            if let Some(ra) = racc.as_mut() {
                let rsp = self.rep_cache.get(t);
                load(ra, &rsp, &self.rep_cache.ranker, &self.reps[k], 1, Mono::ONE);
            }
            // the leading term is kept because `k` itself is skipped
            let (v, r) = self.reduce(t, &mut acc, racc.as_deref_mut(), Some(k));
            debug_assert_eq!(v.terms[0].m, self.elems[k].terms[0].m);
            self.elems[k] = v;
            if let Some(r) = r {
                self.reps[k] = r;
            }
        }
    }
}

/// Computes a Gröbner basis of the submodule of `module` generated by `gens`,
/// where `degs[j]` is the degree of `gens[j]` (needed for zero inputs).
pub fn buchberger_with_degrees(
    ring: &Ring,
    module: &FreeModule,
    gens: &[Vector],
    degs: &[i32],
    opts: GbOptions,
) -> Result<GroebnerBasis> {
    let f = ring.field();
    let gdeg = module.gen_degrees();
    for (j, g) in gens.iter().enumerate() {
        if let Some(d) = g.degree_in(module) {
            if d != degs[j] {
                return Err(Error::NotHomogeneous(format!(
                    "input {j} has degree {d}, declared {}",
                    degs[j]
                )));
            }
        } else if !g.is_zero() {
            return Err(Error::NotHomogeneous(format!("input {j}")));
        }
        if g.terms.iter().any(|t| t.c as usize >= module.rank()) {
            return Err(Error::Ambient(format!("input {j} has a component outside the module")));
        }
    }
    let rep_module = FreeModule::from_gen_degrees(degs);
    let mut e = Engine {
        f,
        gdeg: gdeg.clone(),
        rank1: module.rank() == 1,
        elems: Vec::new(),
        degrees: Vec::new(),
        reps: Vec::new(),
        lead: vec![Vec::new(); module.rank()],
        leads: Vec::new(),
        pairs: Vec::new(),
        syz: Vec::new(),
        koszul_pending: Vec::new(),
        track: opts.track,
        cache: SpaceCache::with_order(ring.nvars(), gdeg, opts.order.clone()),
        rep_cache: SpaceCache::new(ring.nvars(), degs.to_vec()),
    };
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&j| degs[j]);
    let mut accepted = Vec::new();
    let mut next = 0;
    let mut truncated_at = None;
    loop {
        let pd = e.pairs.iter().map(|p| p.deg).min();
        let mut nd = None;
        while next < order.len() && gens[order[next]].is_zero() {
            if e.track == Track::All {
                e.syz.push(Vector::basis(order[next]));
            }
            next += 1;
        }
        if next < order.len() {
            nd = Some(degs[order[next]]);
        }
        let t = match (pd, nd) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        if let Some(md) = opts.max_degree {
            if t > md {
                truncated_at = Some(md);
                break;
            }
        }
        let mut cur: Vec<Pair> = Vec::new();
        e.pairs.retain(|p| {
            if p.deg == t {
                cur.push(*p);
                false
            } else {
                true
            }
        });
        cur.sort_by(|a, b| a.lcm.cmp(&b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
        for pr in cur {
            let (mut acc, mut racc) = e.buffers(t);
            let sp = e.cache.get(t);
            let rk = &e.cache.ranker;
            let ui = e.leads[pr.i].0.div_into(pr.lcm);
            let uj = e.leads[pr.j].0.div_into(pr.lcm);
            let m1 = f.p() - 1;
            load(&mut acc, &sp, rk, &e.elems[pr.i], 1, ui);
            load(&mut acc, &sp, rk, &e.elems[pr.j], m1, uj);
            if let Some(ra) = racc.as_mut() {
                let rsp = e.rep_cache.get(t);
                let rrk = &e.rep_cache.ranker;
                load(ra, &rsp, rrk, &e.reps[pr.i], 1, ui);
                load(ra, &rsp, rrk, &e.reps[pr.j], m1, uj);
            }
            let (v, r) = e.reduce(t, &mut acc, racc.as_deref_mut(), None);
            if v.is_zero() {
                if let Some(r) = r {
                    if !r.is_zero() {
                        e.syz.push(r);
                    }
                }
            } else {
                e.add_element(v, r, t);
            }
        }
        while next < order.len() && degs[order[next]] == t {
            let j = order[next];
            next += 1;
            if gens[j].is_zero() {
                if e.track == Track::All {
                    e.syz.push(Vector::basis(j));
                }
                continue;
            }
            let (mut acc, mut racc) = e.buffers(t);
            let sp = e.cache.get(t);
            load(&mut acc, &sp, &e.cache.ranker, &gens[j], 1, Mono::ONE);
            if let Some(ra) = racc.as_mut() {
                let rsp = e.rep_cache.get(t);
                let k = rsp.index(&e.rep_cache.ranker, Mono::ONE, j as u32);
                ra[k] = 1;
            }
            let (v, r) = e.reduce(t, &mut acc, racc.as_deref_mut(), None);
            if v.is_zero() {
                if e.track == Track::All {
                    if let Some(r) = r {
                        e.syz.push(r);
                    }
                }
            } else {
                accepted.push(j);
                e.add_element(v, r, t);
            }
        }
        e.interreduce_degree(t);
        for (g, h) in std::mem::take(&mut e.koszul_pending) {
            e.koszul_syzygy(g, h);
        }
    }
    let Engine {
        elems,
        degrees,
        mut reps,
        lead,
        mut syz,
        cache,
        rep_cache,
        ..
    } = e;
    let mut rep_module = rep_module;
    if opts.track == Track::Minimal {
        let mut map = vec![None; gens.len()];
        for (k, &j) in accepted.iter().enumerate() {
            map[j] = Some(k);
        }
        reps = reps.iter().map(|r| r.remap(&map, f)).collect();
        syz = syz.iter().map(|s| s.remap(&map, f)).collect();
        rep_module = FreeModule::from_gen_degrees(&accepted.iter().map(|&j| degs[j]).collect::<Vec<_>>());
    }
    let rep_cache = if opts.track == Track::Minimal {
        SpaceCache::new(ring.nvars(), rep_module.gen_degrees())
    } else {
        rep_cache
    };
    Ok(GroebnerBasis {
        ring: *ring,
        module: module.clone(),
        elems,
        degrees,
        reps,
        rep_module,
        accepted,
        syzygies: syz,
        truncated_at,
        track: opts.track,
        lead,
        cache,
        rep_cache,
    })
}

/// Gröbner basis of the submodule generated by homogeneous `gens`.
pub fn buchberger(ring: &Ring, module: &FreeModule, gens: &[Vector], opts: GbOptions) -> Result<GroebnerBasis> {
    let degs = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            g.degree_in(module)
                .ok_or_else(|| Error::NotHomogeneous(format!("input {j} is zero or inhomogeneous; use explicit degrees")))
        })
        .collect::<Result<Vec<_>>>()?;
    buchberger_with_degrees(ring, module, gens, &degs, opts)
}

/// Gröbner basis of the image of a matrix, one input per column.
pub fn gb_matrix(ring: &Ring, m: &PolyMatrix, opts: GbOptions) -> Result<GroebnerBasis> {
    buchberger_with_degrees(ring, &m.target, &m.columns(), &m.source.gen_degrees(), opts)
}

/// Gröbner basis of an ideal. Zero generators are ignored.
pub fn gb_ideal(ring: &Ring, gens: &[Poly], opts: GbOptions) -> Result<GroebnerBasis> {
    let m = FreeModule::uniform(1, 0);
    let v: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).map(|g| Vector::from_poly(g, 0)).collect();
    for (j, g) in gens.iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!("generator {j}")));
        }
    }
    buchberger(ring, &m, &v, opts)
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn field(&self) -> Fp {
        self.ring.field()
    }

    pub fn is_complete(&self) -> bool {
        self.truncated_at.is_none()
    }

    /// Elements as polynomials (ideal case).
    pub fn polys(&self) -> Vec<Poly> {
        self.elems.iter().map(|v| v.component(0)).collect()
    }

    /// Leading terms `(monomial, component)`.
    pub fn leading_terms(&self) -> Vec<(Mono, u32)> {
        self.elems.iter().map(|v| (v.terms[0].m, v.terms[0].c)).collect()
    }

    /// True if the basis contains a unit (a constant times a basis vector).
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|v| v.terms[0].m == Mono::ONE)
    }

    fn check_degree(&self, d: i32) {
        if let Some(t) = self.truncated_at {
            debug_assert!(d <= t, "normal form above truncation degree {t}");
        }
    }

    /// Normal form; works on inhomogeneous input degree by degree.
    pub fn normal_form(&self, v: &Vector) -> Vector {
        let f = self.field();
        let mut by_deg: std::collections::BTreeMap<i32, Vec<VTerm>> = Default::default();
        for t in &v.terms {
            let d = t.m.deg() as i32 + self.module.gen_degree(t.c as usize);
            by_deg.entry(d).or_default().push(*t);
        }
        let mut out = Vec::new();
        for (d, terms) in by_deg {
            self.check_degree(d);
            let sp = self.cache.get(d);
            let mut acc = vec![0u64; sp.len()];
            load(&mut acc, &sp, &self.cache.ranker, &Vector { terms }, 1, Mono::ONE);
            reduce_dense(f, &sp, &self.cache.ranker, &mut acc, &self.elems, &self.lead, None, None);
            out.extend(extract(&acc, &sp, f.p() as u64).terms);
        }
        Vector::from_terms(f, out)
    }

    pub fn normal_form_poly(&self, p: &Poly) -> Poly {
        self.normal_form(&Vector::from_poly(p, 0)).component(0)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn contains_poly(&self, p: &Poly) -> bool {
        self.normal_form_poly(p).is_zero()
    }

    /// Division with representation for homogeneous `v`: returns `(r, q)` with
    /// `v = sum_j q_j * input_j + r`, `q` in `rep_module`. Needs tracking.
    pub fn divide(&self, v: &Vector) -> Result<(Vector, Vector)> {
        if self.track == Track::None {
            return Err(Error::Range("division needs a tracked basis".into()));
        }
        let f = self.field();
        if v.is_zero() {
            return Ok((Vector::zero(), Vector::zero()));
        }
        let d = v
            .degree_in(&self.module)
            .ok_or_else(|| Error::NotHomogeneous("divide".into()))?;
        self.check_degree(d);
        let sp = self.cache.get(d);
        let rsp = self.rep_cache.get(d);
        let mut acc = vec![0u64; sp.len()];
        let mut racc = vec![0u64; rsp.len()];
        load(&mut acc, &sp, &self.cache.ranker, v, 1, Mono::ONE);
        reduce_dense(
            f,
            &sp,
            &self.cache.ranker,
            &mut acc,
            &self.elems,
            &self.lead,
            None,
            Some(RepWork {
                reps: &self.reps,
                sp: &rsp,
                rk: &self.rep_cache.ranker,
                acc: &mut racc,
            }),
        );
        let p = f.p() as u64;
        let r = extract(&acc, &sp, p);
        let q = extract(&racc, &rsp, p).scale(f.p() - 1, f);
        Ok((r, q))
    }

    /// Leading-term ideal of each component, as monomial generator lists.
    pub fn leading_monomials_by_component(&self) -> Vec<Vec<Mono>> {
        let mut out = vec![Vec::new(); self.module.rank()];
        for v in &self.elems {
            out[v.terms[0].c as usize].push(v.terms[0].m);
        }
        out
    }

    /// The recorded syzygies as columns of a matrix into `rep_module`.
    pub fn syzygy_matrix(&self) -> Result<PolyMatrix> {
        PolyMatrix::from_columns(self.rep_module.clone(), &self.syzygies)
    }
}

#[cfg(test)]
mod tests;

//! Free resolutions, Betti tables, Ext modules and cohomology tables.
//!
//! A complex is a list of maps `maps[k]: F_{k+1} -> F_k`. For a resolution of
//! `M = coker(maps[0])`. Twists follow [`FreeModule`]: generator degree is
//! minus the twist, and Betti tables are indexed by generator degree.

use crate::error::{Error, Result};
use crate::groebner::hilbert::{binom_poly, HilbertData, Laurent};
use std::sync::Arc;
use crate::monomial::Mono;
use crate::groebner::{gb_matrix, GbOptions, ModuleOrder, Track};
use crate::module::{FreeModule, PolyMatrix, Vector};
use crate::poly::{Poly, Ring};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: Ring,
    pub maps: Vec<PolyMatrix>,
}

impl FreeResolution {
    /// Number of maps.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `F_k`.
    pub fn module(&self, k: usize) -> FreeModule {
        if k == 0 {
            match self.maps.first() {
                Some(m) => m.target.clone(),
                None => FreeModule::new(Vec::new()),
            }
        } else if k <= self.maps.len() {
            self.maps[k - 1].source.clone()
        } else {
            FreeModule::new(Vec::new())
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.maps.len()).map(|k| self.module(k).rank()).collect()
    }

    /// Composite of consecutive maps is zero everywhere.
    pub fn is_complex(&self) -> bool {
        let f = self.ring.field();
        self.maps
            .windows(2)
            .all(|w| w[0].compose(&w[1], f).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// No differential has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| !m.has_unit_entry())
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_modules(&(0..=self.maps.len()).map(|k| self.module(k)).collect::<Vec<_>>())
    }

    /// Twists every module by `s`.
    pub fn shift(&self, s: i32) -> FreeResolution {
        FreeResolution {
            ring: self.ring,
            maps: self.maps.iter().map(|m| m.shift(s)).collect(),
        }
    }

    /// `Hom(F_•, R(twist))` reindexed so that the new `F_0` is the dual of
    /// the old last module.
    pub fn dualize(&self, twist: i32) -> FreeResolution {
        FreeResolution {
            ring: self.ring,
            maps: self.maps.iter().rev().map(|m| m.transpose().shift(twist)).collect(),
        }
    }

    /// Drops trailing zero modules.
    fn trim(mut self) -> FreeResolution {
        while self.maps.last().map(|m| m.cols() == 0).unwrap_or(false) {
            self.maps.pop();
        }
        self
    }
}

/// Graded Betti numbers `β_{i,j}`: `i` homological degree, `j` generator
/// degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    betti: Vec<(usize, i32, usize)>,
}

impl BettiTable {
    pub fn from_modules(mods: &[FreeModule]) -> BettiTable {
        let mut e = BTreeMap::new();
        for (i, m) in mods.iter().enumerate() {
            for d in m.gen_degrees() {
                *e.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries: e }
    }

    /// Builds a table from `(i, j, rank)` triples.
    pub fn from_triples(t: &[(usize, i32, usize)]) -> BettiTable {
        let mut e = BTreeMap::new();
        for &(i, j, r) in t {
            if r > 0 {
                *e.entry((i, j)).or_insert(0) += r;
            }
        }
        BettiTable { entries: e }
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, &v)| v).sum()
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.length()).map(|i| self.rank(i)).collect()
    }

    /// `(generator degree, rank)` pairs in homological degree `i`.
    pub fn column(&self, i: usize) -> Vec<(i32, usize)> {
        self.entries
            .iter()
            .filter(|(k, _)| k.0 == i)
            .map(|(k, &v)| (k.1, v))
            .collect()
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the K-polynomial.
    pub fn numerator(&self) -> Laurent {
        let mut acc = Laurent::zero();
        for (&(i, j), &v) in &self.entries {
            let s = if i % 2 == 0 { v as i64 } else { -(v as i64) };
            acc = acc.add(&Laurent::from_coeffs(j, vec![s]));
        }
        acc
    }

    /// Twist by `s`: generator degrees move by `-s`.
    pub fn shift(&self, s: i32) -> BettiTable {
        BettiTable {
            entries: self.entries.iter().map(|(&(i, j), &v)| ((i, j - s), v)).collect(),
        }
    }

    /// `β'_{i,j} = β_{len-i, c-j}`: the table of the dual complex
    /// `Hom(F_•, R(-c))` reindexed from the end.
    pub fn dual(&self, len: usize, c: i32) -> BettiTable {
        BettiTable {
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &v)| ((len - i, c - j), v))
                .collect(),
        }
    }

    /// Drops homological degree 0 and shifts down (ideal from quotient).
    pub fn drop_first(&self) -> BettiTable {
        BettiTable {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| k.0 > 0)
                .map(|(&(i, j), &v)| ((i - 1, j), v))
                .collect(),
        }
    }

    /// Macaulay-style grid: row `r` holds `β_{i, i+r}`.
    pub fn fmt_grid(&self) -> String {
        if self.entries.is_empty() {
            return "0\n".into();
        }
        let len = self.length();
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
            r.sort_unstable();
            r.dedup();
            (r[0]..=*r.last().unwrap()).collect()
        };
        let cells: Vec<Vec<String>> = std::iter::once(
            (0..=len).map(|i| self.rank(i).to_string()).collect(),
        )
        .chain(rows.iter().map(|&r| {
            (0..=len)
                .map(|i| match self.get(i, i as i32 + r) {
                    0 => ".".to_string(),
                    v => v.to_string(),
                })
                .collect()
        }))
        .collect();
        let w = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        let labels: Vec<String> = std::iter::once("total:".to_string())
            .chain(rows.iter().map(|r| format!("{r}:")))
            .collect();
        let lw = labels.iter().map(|s| s.len()).max().unwrap();
        let mut s = String::new();
        let _ = write!(s, "{:>lw$}", "");
        for i in 0..=len {
            let _ = write!(s, " {:>w$}", i);
        }
        s.push('\n');
        for (lab, row) in labels.iter().zip(&cells) {
            let _ = write!(s, "{:>lw$}", lab);
            for c in row {
                let _ = write!(s, " {:>w$}", c);
            }
            s.push('\n');
        }
        s
    }

    /// Sheaf notation per homological degree: `2O(-5) + 5O(-6) <- 8O(-7)`.
    pub fn fmt_sheaves(&self) -> String {
        (0..=self.length())
            .map(|i| {
                let parts: Vec<String> = self
                    .column(i)
                    .iter()
                    .map(|&(j, r)| {
                        let tw = if j == 0 { "O".to_string() } else { format!("O({})", -j) };
                        if r == 1 {
                            tw
                        } else {
                            format!("{r}{tw}")
                        }
                    })
                    .collect();
                parts.join(" + ")
            })
            .collect::<Vec<_>>()
            .join(" <- ")
    }

    pub fn to_json(&self) -> String {
        let b = BettiJson {
            betti: self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect(),
        };
        serde_json::to_string(&b).expect("betti json")
    }

    pub fn from_json(s: &str) -> Result<BettiTable> {
        let b: BettiJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(BettiTable::from_triples(&b.betti))
    }
}

/// Gröbner basis of the columns, keeping syzygies of the minimal ones.
/// Columns that minimally generate the image.
pub fn minimal_columns(ring: &Ring, m: &PolyMatrix) -> Result<PolyMatrix> {
    let gb = gb_matrix(ring, m, GbOptions::default())?;
    let mut acc = gb.accepted.clone();
    acc.sort_unstable_by_key(|&j| (m.source.gen_degree(j), j));
    Ok(m.submatrix(&(0..m.rows()).collect::<Vec<_>>(), &acc))
}

/// Minimal generators of the kernel of `m`, as columns.
pub fn syzygies(ring: &Ring, m: &PolyMatrix) -> Result<PolyMatrix> {
    Ok(syzygies_ordered(ring, m, &ModuleOrder::Standard)?.0)
}

/// Order on the source of `m` induced by the lead terms of its columns in
/// `order` (zero columns get an arbitrary lead).
pub fn induced_order(m: &PolyMatrix, order: &ModuleOrder) -> ModuleOrder {
    let leads = m
        .columns()
        .iter()
        .map(|v| order.lead(v.terms.iter().map(|t| (t.m, t.c))).unwrap_or((Mono::ONE, 0)))
        .collect();
    ModuleOrder::Induced {
        base: Arc::new(order.clone()),
        leads,
    }
}

/// Kernel of `m` with the target ordered by `order`; also returns the order
/// used on the source, for chaining.
pub fn syzygies_ordered(ring: &Ring, m: &PolyMatrix, order: &ModuleOrder) -> Result<(PolyMatrix, ModuleOrder)> {
    if m.rows() == 0 {
        return Ok((PolyMatrix::identity(&m.source), ModuleOrder::Standard));
    }
    let gb = gb_matrix(ring, m, GbOptions::tracked(Track::All).with_order(order.clone()))?;
    let src_order = induced_order(m, order);
    let syz: Vec<Vector> = gb.syzygies.iter().filter(|s| !s.is_zero()).cloned().collect();
    if syz.is_empty() {
        return Ok((PolyMatrix::zero(m.source.clone(), FreeModule::new(Vec::new())), src_order));
    }
    let all = PolyMatrix::from_columns(m.source.clone(), &syz)?;
    let mgb = gb_matrix(ring, &all, GbOptions::default().with_order(src_order.clone()))?;
    let mut keep = mgb.accepted.clone();
    keep.sort_unstable_by_key(|&j| (all.source.gen_degree(j), j));
    Ok((all.submatrix(&(0..all.rows()).collect::<Vec<_>>(), &keep), src_order))
}

/// Splits off one unit entry at `(i, j)` of `d_k` in a complex: removes row
/// `i` and column `j` of `d_k`, row `j` of `d_{k+1}` and column `i` of
/// `d_{k-1}`.
fn split_unit(ring: &Ring, maps: &mut [PolyMatrix], k: usize, i: usize, j: usize) {
    let f = ring.field();
    let d = &maps[k];
    let u = d.get(i, j).terms[0].1;
    let uinv = f.inv(u);
    let rows: Vec<usize> = (0..d.rows()).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..d.cols()).filter(|&c| c != j).collect();
    let mut nd = d.submatrix(&rows, &cols);
    for (ri, &r) in rows.iter().enumerate() {
        let b = d.get(r, j);
        if b.is_zero() {
            continue;
        }
        let bs = b.scale(uinv, f);
        for (ci, &c) in cols.iter().enumerate() {
            let g = d.get(i, c);
            if g.is_zero() {
                continue;
            }
            let e = nd.get(ri, ci).sub(&bs.mul(g, f), f);
            nd.set(ri, ci, e);
        }
    }
    maps[k] = nd;
    if k + 1 < maps.len() {
        let n = &maps[k + 1];
        let rows: Vec<usize> = (0..n.rows()).filter(|&r| r != j).collect();
        maps[k + 1] = n.submatrix(&rows, &(0..n.cols()).collect::<Vec<_>>());
    }
    if k > 0 {
        let p = &maps[k - 1];
        let cols: Vec<usize> = (0..p.cols()).filter(|&c| c != i).collect();
        maps[k - 1] = p.submatrix(&(0..p.rows()).collect::<Vec<_>>(), &cols);
    }
}

fn find_unit(m: &PolyMatrix) -> Option<(usize, usize)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = m.get(i, j);
            if e.is_constant() && !e.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Removes all unit entries from a complex by Gaussian elimination, keeping
/// it homotopy equivalent (and with the same homology).
pub fn minimalize(ring: &Ring, cx: &FreeResolution) -> FreeResolution {
    let mut maps = cx.maps.clone();
    loop {
        let hit = (0..maps.len()).find_map(|k| find_unit(&maps[k]).map(|(i, j)| (k, i, j)));
        match hit {
            Some((k, i, j)) => split_unit(ring, &mut maps, k, i, j),
            None => break,
        }
    }
    FreeResolution { ring: *ring, maps }
}

/// A minimal presentation of `coker(p)`: no unit entries, minimal columns.
pub fn prune(ring: &Ring, p: &PolyMatrix) -> Result<PolyMatrix> {
    let mut maps = vec![p.clone()];
    while let Some((i, j)) = find_unit(&maps[0]) {
        split_unit(ring, &mut maps, 0, i, j);
    }
    let m = maps.pop().unwrap();
    if m.cols() == 0 {
        return Ok(m);
    }
    minimal_columns(ring, &m)
}

/// Minimal free resolution of `coker(p)`.
///
/// Each kernel is computed in the order induced by the lead terms of the
/// previous map, which keeps the syzygy Gröbner bases in low degree.
pub fn resolve(ring: &Ring, p: &PolyMatrix) -> Result<FreeResolution> {
    let limit = ring.nvars() + 2;
    let mut cur = prune(ring, p)?;
    let mut maps: Vec<PolyMatrix> = Vec::new();
    if cur.cols() == 0 {
        maps.push(cur);
        return Ok(FreeResolution { ring: *ring, maps });
    }
    let mut order = ModuleOrder::Standard;
    loop {
        let gb = gb_matrix(ring, &cur, GbOptions::tracked(Track::Minimal).with_order(order.clone()))?;
        let acc = gb.accepted.clone();
        let d = cur.submatrix(&(0..cur.rows()).collect::<Vec<_>>(), &acc);
        let syz: Vec<Vector> = gb.syzygies.iter().filter(|s| !s.is_zero()).cloned().collect();
        let leads = (0..d.cols())
            .map(|j| order.lead(d.column(j).terms.iter().map(|t| (t.m, t.c))).unwrap())
            .collect();
        maps.push(d);
        if syz.is_empty() {
            break;
        }
        if maps.len() > limit {
            return Err(Error::Inconsistent("resolution longer than the syzygy theorem allows".into()));
        }
        order = ModuleOrder::Induced {
            base: Arc::new(order),
            leads,
        };
        // drop redundant syzygies before the tracked pass over them
        let all = PolyMatrix::from_columns(gb.rep_module.clone(), &syz)?;
        let mgb = gb_matrix(ring, &all, GbOptions::default().with_order(order.clone()))?;
        let mut keep = mgb.accepted.clone();
        keep.sort_unstable_by_key(|&j| (all.source.gen_degree(j), j));
        cur = all.submatrix(&(0..all.rows()).collect::<Vec<_>>(), &keep);
    }
    Ok(FreeResolution { ring: *ring, maps })
}

/// The row matrix `R <- ⊕ R(-deg g)` presenting `R/I`.
pub fn ideal_presentation(ring: &Ring, gens: &[Poly]) -> Result<PolyMatrix> {
    let gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let src: Vec<i32> = gens
        .iter()
        .map(|g| -(g.degree().unwrap() as i32))
        .collect();
    let _ = ring;
    PolyMatrix::new(FreeModule::new(vec![0]), FreeModule::new(src), gens)
}

/// Minimal resolution of `R/I`.
pub fn resolve_ideal(ring: &Ring, gens: &[Poly]) -> Result<FreeResolution> {
    resolve(ring, &ideal_presentation(ring, gens)?)
}

/// Hilbert data of `coker(p)`.
pub fn module_hilbert(ring: &Ring, p: &PolyMatrix) -> Result<HilbertData> {
    if p.rows() == 0 {
        return Ok(HilbertData::from_numerator(ring.nvars(), Laurent::zero()));
    }
    Ok(HilbertData::from_gb(&gb_matrix(ring, p, GbOptions::default())?))
}

/// Expresses every column of `a` through the columns of `k`
/// (`a = k * c`); fails if some column is not in the image.
pub fn lift(ring: &Ring, k: &PolyMatrix, a: &PolyMatrix) -> Result<PolyMatrix> {
    let gb = gb_matrix(ring, k, GbOptions::tracked(Track::All))?;
    let mut cols = Vec::with_capacity(a.cols());
    for v in a.columns() {
        let (r, q) = gb.divide(&v)?;
        if !r.is_zero() {
            return Err(Error::NotChainMap("column does not lift".into()));
        }
        cols.push(q);
    }
    PolyMatrix::from_columns_with_source(k.source.clone(), a.source.clone(), &cols)
}

/// Presentation of `ker(b) / im(a)` where `b * a = 0` (`a: X -> Y`,
/// `b: Y -> Z`). Pass `None` for a missing map.
pub fn homology(ring: &Ring, a: Option<&PolyMatrix>, b: Option<&PolyMatrix>, y: &FreeModule) -> Result<PolyMatrix> {
    let (k, korder) = match b {
        Some(b) => syzygies_ordered(ring, b, &ModuleOrder::Standard)?,
        None => (PolyMatrix::identity(y), ModuleOrder::Standard),
    };
    if k.cols() == 0 {
        return Ok(PolyMatrix::zero(FreeModule::new(Vec::new()), FreeModule::new(Vec::new())));
    }
    let ks = syzygies_ordered(ring, &k, &korder)?.0;
    let pres = match a {
        Some(a) if a.cols() > 0 => lift(ring, &k, a)?.hconcat(&ks)?,
        _ => ks,
    };
    prune(ring, &pres)
}

/// Presentations of `Ext^i(M, R)` for `i = 0..=len`, computed from a free
/// resolution of `M`.
pub fn ext_modules(res: &FreeResolution) -> Result<Vec<PolyMatrix>> {
    let ring = res.ring;
    let l = res.len();
    // dual complex: F_0* -> F_1* -> ... ; d_i* = transpose(maps[i-1]): F_{i-1}* -> F_i*
    let duals: Vec<PolyMatrix> = res.maps.iter().map(|m| m.transpose()).collect();
    let mut out = Vec::with_capacity(l + 1);
    for i in 0..=l {
        let a = if i == 0 { None } else { Some(&duals[i - 1]) };
        let b = if i < l { Some(&duals[i]) } else { None };
        out.push(homology(&ring, a, b, &res.module(i).dual())?);
    }
    Ok(out)
}

/// `dim Ext^i(M, R)_t` for every `i` from presentations.
pub struct ExtDims {
    pub hilbert: Vec<HilbertData>,
}

impl ExtDims {
    pub fn new(ring: &Ring, exts: &[PolyMatrix]) -> Result<ExtDims> {
        Ok(ExtDims {
            hilbert: exts.iter().map(|p| module_hilbert(ring, p)).collect::<Result<_>>()?,
        })
    }

    pub fn dim(&self, i: usize, t: i64) -> i64 {
        self.hilbert.get(i).map(|h| h.hf(t)).unwrap_or(0)
    }
}

/// `h^i(J_X(m))` for `i = 0..=n` over a window of twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    /// `rows[i][m - lo]`.
    pub rows: Vec<Vec<i64>>,
}

impl CohomologyTable {
    pub fn get(&self, i: usize, m: i64) -> i64 {
        self.rows[i][(m - self.lo) as usize]
    }

    pub fn euler(&self, m: i64) -> i64 {
        (0..=self.n)
            .map(|i| if i % 2 == 0 { self.get(i, m) } else { -self.get(i, m) })
            .sum()
    }

    /// Grid with the top cohomology first, twists left to right.
    pub fn fmt_grid(&self) -> String {
        let w = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(self.hi.to_string().len())
            .max(self.lo.to_string().len());
        let mut s = String::new();
        for i in (0..=self.n).rev() {
            let _ = write!(s, "h^{i}:");
            for m in self.lo..=self.hi {
                let v = self.get(i, m);
                let c = if v == 0 { ".".to_string() } else { v.to_string() };
                let _ = write!(s, " {c:>w$}");
            }
            s.push('\n');
        }
        let _ = write!(s, "m:  ");
        for m in self.lo..=self.hi {
            let _ = write!(s, " {m:>w$}");
        }
        s.push('\n');
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cohomology json")
    }

    pub fn from_json(s: &str) -> Result<CohomologyTable> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Everything needed to read off cohomology of `J_X` for a saturated ideal.
pub struct SchemeData {
    pub ring: Ring,
    pub gens: Vec<Poly>,
    pub resolution: FreeResolution,
    pub hilbert: HilbertData,
    pub ext: ExtDims,
}

impl SchemeData {
    /// Resolves `R/I` and computes its Ext modules. Fails with
    /// [`Error::Unsaturated`] if `depth R/I = 0`.
    pub fn new(ring: &Ring, gens: &[Poly]) -> Result<SchemeData> {
        let resolution = resolve_ideal(ring, gens)?;
        let gens: Vec<Poly> = resolution
            .maps
            .first()
            .map(|m| (0..m.cols()).map(|j| m.get(0, j).clone()).collect())
            .unwrap_or_default();
        if resolution.len() > ring.pn() && !gens.iter().any(|g| g.is_constant()) {
            return Err(Error::Unsaturated);
        }
        let hilbert = module_hilbert(ring, &ideal_presentation(ring, &gens)?)?;
        let exts = ext_modules(&resolution)?;
        let ext = ExtDims::new(ring, &exts)?;
        Ok(SchemeData {
            ring: *ring,
            gens,
            resolution,
            hilbert,
            ext,
        })
    }

    /// `dim Ext^i(R/I, R(-n-1))_t`.
    pub fn ext_dim(&self, i: usize, t: i64) -> i64 {
        self.ext.dim(i, t - self.ring.nvars() as i64)
    }

    /// `h^i(J_X(m))` through local duality.
    pub fn h(&self, i: usize, m: i64) -> i64 {
        let n = self.ring.pn();
        let np1 = n as i64 + 1;
        let rdim = |q: i64| binom_nonneg(q + n as i64, n as i64);
        if self.gens.iter().any(|g| g.is_constant()) {
            // J_X = O
            return match i {
                0 => rdim(m),
                _ if i == n => rdim(-m - np1),
                _ => 0,
            };
        }
        match i {
            0 => rdim(m) - self.hilbert.hf(m),
            _ if i == n => self.ext_dim(1, -m) + rdim(-m - np1),
            _ if i < n => self.ext_dim(n + 1 - i, -m),
            _ => 0,
        }
    }

    pub fn cohomology_table(&self, lo: i64, hi: i64) -> CohomologyTable {
        let n = self.ring.pn();
        CohomologyTable {
            n,
            lo,
            hi,
            rows: (0..=n).map(|i| (lo..=hi).map(|m| self.h(i, m)).collect()).collect(),
        }
    }

    /// `χ(J_X(m)) = χ(O(m)) - HP_{R/I}(m)`.
    pub fn expected_euler(&self, m: i64) -> i64 {
        let n = self.ring.pn();
        binom_poly(m + n as i64, n) as i64 - self.hilbert.hp(m)
    }

    /// `dim Ext^c(R/I, R(-n-1))_1 = h^0(ω_X(1))` for codimension `c`.
    pub fn canonical_sections(&self, codim: usize, twist: i64) -> i64 {
        self.ext_dim(codim, twist)
    }
}

fn binom_nonneg(a: i64, b: i64) -> i64 {
    if a < b || a < 0 {
        0
    } else {
        binom_poly(a, b as usize) as i64
    }
}

/// Cohomology table of `J_X` for a saturated ideal over twists `lo..=hi`.
pub fn cohomology_table(ring: &Ring, gens: &[Poly], lo: i64, hi: i64) -> Result<CohomologyTable> {
    Ok(SchemeData::new(ring, gens)?.cohomology_table(lo, hi))
}

/// A chain map `f_k: A_k -> B_k` between two complexes.
pub struct ChainMap {
    pub source: FreeResolution,
    pub target: FreeResolution,
    pub maps: Vec<PolyMatrix>,
}

impl ChainMap {
    /// Checks `b_k f_k = f_{k-1} a_k` for all `k`.
    pub fn check(&self) -> Result<()> {
        let f = self.source.ring.field();
        for k in 1..self.maps.len() {
            if k > self.source.len() || k > self.target.len() {
                break;
            }
            let l = self.target.maps[k - 1].compose(&self.maps[k], f)?;
            let r = self.maps[k - 1].compose(&self.source.maps[k - 1], f)?;
            if l != r {
                return Err(Error::NotChainMap(format!("square {k} does not commute")));
            }
        }
        Ok(())
    }
}

/// Extends `f0: A_0 -> B_0` (inducing a map on cokernels) to a chain map
/// between the complexes, degree by degree.
pub fn lift_chain_map(a: &FreeResolution, b: &FreeResolution, f0: PolyMatrix) -> Result<ChainMap> {
    let ring = a.ring;
    let f = ring.field();
    let mut maps = vec![f0];
    for k in 1..=a.len() {
        let prev = maps.last().unwrap();
        let need = prev.compose(&a.maps[k - 1], f)?;
        if k > b.len() {
            if !need.is_zero() {
                return Err(Error::NotChainMap(format!("no target in degree {k}")));
            }
            maps.push(PolyMatrix::zero(FreeModule::new(Vec::new()), a.module(k)));
            continue;
        }
        maps.push(lift(&ring, &b.maps[k - 1], &need)?);
    }
    Ok(ChainMap {
        source: a.clone(),
        target: b.clone(),
        maps,
    })
}

/// Mapping cone: `C_k = B_k ⊕ A_{k-1}`, `d(b, a) = (d b + f a, -d a)`.
pub fn mapping_cone(cm: &ChainMap) -> Result<FreeResolution> {
    cm.check()?;
    let ring = cm.source.ring;
    let f = ring.field();
    let a = &cm.source;
    let b = &cm.target;
    let top = (b.len()).max(a.len() + 1);
    let mut maps = Vec::with_capacity(top);
    for k in 1..=top {
        // C_k -> C_{k-1}
        let bk = b.module(k);
        let bk1 = b.module(k - 1);
        let ak1 = a.module(k - 1);
        let ak2 = if k >= 2 { a.module(k - 2) } else { FreeModule::new(Vec::new()) };
        let tgt = bk1.direct_sum(&ak2);
        let src = bk.direct_sum(&ak1);
        let mut m = PolyMatrix::zero(tgt, src);
        if k <= b.len() {
            let d = &b.maps[k - 1];
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    m.set(i, j, d.get(i, j).clone());
                }
            }
        }
        if let Some(fm) = cm.maps.get(k - 1) {
            for i in 0..fm.rows().min(bk1.rank()) {
                for j in 0..fm.cols() {
                    m.set(i, bk.rank() + j, fm.get(i, j).clone());
                }
            }
        }
        if k >= 2 && k - 1 <= a.len() {
            let d = &a.maps[k - 2];
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    m.set(bk1.rank() + i, bk.rank() + j, d.get(i, j).neg(f));
                }
            }
        }
        maps.push(m);
    }
    Ok(FreeResolution { ring, maps }.trim())
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
    fn koszul_betti_numbers() {
        let r = ring(5);
        let res = resolve_ideal(&r, &r.vars()).unwrap();
        assert_eq!(res.ranks(), vec![1, 5, 10, 10, 5, 1]);
        assert!(res.is_complex());
        assert!(res.is_minimal());
        let b = res.betti();
        assert_eq!(b.get(3, 3), 10);
    }

    #[test]
    fn twisted_cubic_resolution() {
        let r = ring(4);
        let g: Vec<Poly> = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]
            .iter()
            .map(|s| parse_poly(&r, s).unwrap())
            .collect();
        let res = resolve_ideal(&r, &g).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 2]);
        let b = res.betti();
        assert_eq!(b.get(1, 2), 3);
        assert_eq!(b.get(2, 3), 2);
        let sd = SchemeData::new(&r, &g).unwrap();
        let t = sd.cohomology_table(-3, 3);
        for m in -3..=3 {
            assert_eq!(t.euler(m), sd.expected_euler(m), "twist {m}");
        }
        // ACM curve
        for m in -3..=3 {
            assert_eq!(t.get(1, m), 0);
        }
        assert_eq!(b.numerator(), sd.hilbert.numerator);
    }

    #[test]
    fn betti_formats_round_trip() {
        let b = BettiTable::from_triples(&[(0, 0, 1), (1, 6, 10), (2, 7, 12), (3, 8, 3)]);
        assert_eq!(BettiTable::from_json(&b.to_json()).unwrap(), b);
        let g = b.fmt_grid();
        assert!(g.contains("total:"));
        assert_eq!(b.drop_first().fmt_sheaves(), "10O(-6) <- 12O(-7) <- 3O(-8)");
    }

    #[test]
    fn cone_over_identity_is_trivial() {
        let r = ring(3);
        let res = resolve_ideal(&r, &r.vars()).unwrap();
        let id = PolyMatrix::identity(&res.module(0));
        let cm = lift_chain_map(&res, &res, id).unwrap();
        let cone = mapping_cone(&cm).unwrap();
        assert!(cone.is_complex());
        let m = minimalize(&r, &cone);
        assert!(m.maps.iter().all(|d| d.rows() == 0 && d.cols() == 0));
    }

    #[test]
    fn unsaturated_ideal_is_rejected() {
        let r = ring(3);
        let f = r.field();
        let x0 = r.var(0);
        let g: Vec<Poly> = r.vars().iter().map(|v| v.mul(&x0, f)).collect();
        assert!(matches!(SchemeData::new(&r, &g), Err(Error::Unsaturated)));
    }
}

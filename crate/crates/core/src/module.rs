//! Graded free modules, their elements, and matrices of polynomials.
//!
//! `FreeModule` holds twists `[a_1, .., a_r]` for `R(a_1) ⊕ .. ⊕ R(a_r)`;
//! basis vector `e_i` sits in degree `-a_i`. A `PolyMatrix` maps `source`
//! to `target`, so a degree-zero map has entry `(i, j)` homogeneous of degree
//! `target[i] - source[j]`.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Mono;
use crate::poly::{Poly, Ring};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeModule {
    pub twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(twists: Vec<i32>) -> FreeModule {
        FreeModule { twists }
    }

    /// `r` copies of `R(a)`.
    pub fn uniform(r: usize, a: i32) -> FreeModule {
        FreeModule {
            twists: vec![a; r],
        }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Degree of the basis vector `e_i`.
    #[inline]
    pub fn gen_degree(&self, i: usize) -> i32 {
        -self.twists[i]
    }

    pub fn gen_degrees(&self) -> Vec<i32> {
        self.twists.iter().map(|a| -a).collect()
    }

    pub fn from_gen_degrees(d: &[i32]) -> FreeModule {
        FreeModule {
            twists: d.iter().map(|x| -x).collect(),
        }
    }

    pub fn direct_sum(&self, o: &FreeModule) -> FreeModule {
        let mut t = self.twists.clone();
        t.extend_from_slice(&o.twists);
        FreeModule { twists: t }
    }

    pub fn shift(&self, s: i32) -> FreeModule {
        FreeModule {
            twists: self.twists.iter().map(|a| a + s).collect(),
        }
    }

    pub fn dual(&self) -> FreeModule {
        FreeModule {
            twists: self.twists.iter().map(|a| -a).collect(),
        }
    }

    /// `dim_k` of the degree-`t` piece.
    pub fn dim(&self, ring: &Ring, t: i64) -> u64 {
        self.twists.iter().map(|&a| ring.dim(t + a as i64)).sum()
    }

    /// First Chern class `sum a_i`.
    pub fn c1(&self) -> i64 {
        self.twists.iter().map(|&a| a as i64).sum()
    }
}

/// One term `a * m * e_c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub m: Mono,
    pub c: u32,
    pub a: u32,
}

/// Position-over-term is not used: terms compare by monomial first, then by
/// component with lower index larger.
#[inline]
pub fn term_cmp(m1: Mono, c1: u32, m2: Mono, c2: u32) -> Ordering {
    m1.cmp(&m2).then_with(|| c2.cmp(&c1))
}

/// Sparse element of a free module, terms strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    pub terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    pub fn basis(c: usize) -> Vector {
        Vector {
            terms: vec![VTerm {
                m: Mono::ONE,
                c: c as u32,
                a: 1,
            }],
        }
    }

    pub fn from_poly(p: &Poly, c: usize) -> Vector {
        Vector {
            terms: p
                .terms
                .iter()
                .map(|&(m, a)| VTerm { m, c: c as u32, a })
                .collect(),
        }
    }

    /// Builds a vector from per-component polynomials.
    pub fn from_polys(ps: &[Poly], f: Fp) -> Vector {
        let mut t = Vec::new();
        for (c, p) in ps.iter().enumerate() {
            for &(m, a) in &p.terms {
                t.push(VTerm { m, c: c as u32, a });
            }
        }
        Vector::from_terms(f, t)
    }

    pub fn from_terms(f: Fp, mut t: Vec<VTerm>) -> Vector {
        t.sort_by(|x, y| term_cmp(y.m, y.c, x.m, x.c));
        let mut out: Vec<VTerm> = Vec::with_capacity(t.len());
        for x in t {
            match out.last_mut() {
                Some(l) if l.m == x.m && l.c == x.c => l.a = f.add(l.a, x.a),
                _ => out.push(x),
            }
        }
        out.retain(|x| x.a != 0);
        Vector { terms: out }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<VTerm> {
        self.terms.first().copied()
    }

    /// Component `c` as a polynomial.
    pub fn component(&self, c: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.c as usize == c)
                .map(|t| (t.m, t.a))
                .collect(),
        }
    }

    pub fn to_polys(&self, rank: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); rank];
        for t in &self.terms {
            out[t.c as usize].terms.push((t.m, t.a));
        }
        out
    }

    /// Degree in a module with the given twists, if homogeneous.
    pub fn degree_in(&self, fm: &FreeModule) -> Option<i32> {
        let mut d = None;
        for t in &self.terms {
            let e = t.m.deg() as i32 + fm.gen_degree(t.c as usize);
            match d {
                None => d = Some(e),
                Some(x) if x != e => return None,
                _ => {}
            }
        }
        d
    }

    pub fn add(&self, o: &Vector, f: Fp) -> Vector {
        self.axpy(1, Mono::ONE, o, f)
    }

    pub fn sub(&self, o: &Vector, f: Fp) -> Vector {
        self.axpy(f.p() - 1, Mono::ONE, o, f)
    }

    /// `self + a * m * o`.
    pub fn axpy(&self, a: u32, m: Mono, o: &Vector, f: Fp) -> Vector {
        if a == 0 || o.is_zero() {
            return self.clone();
        }
        let (x, y) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let ord = if i == x.len() {
                Ordering::Less
            } else if j == y.len() {
                Ordering::Greater
            } else {
                term_cmp(x[i].m, x[i].c, y[j].m.mul(m), y[j].c)
            };
            match ord {
                Ordering::Greater => {
                    out.push(x[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(VTerm {
                        m: y[j].m.mul(m),
                        c: y[j].c,
                        a: f.mul(a, y[j].a),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(x[i].a, f.mul(a, y[j].a));
                    if s != 0 {
                        out.push(VTerm { a: s, ..x[i] });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    pub fn scale(&self, a: u32, f: Fp) -> Vector {
        if a == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    a: f.mul(t.a, a),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, m: Mono, a: u32, f: Fp) -> Vector {
        if a == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    m: t.m.mul(m),
                    c: t.c,
                    a: f.mul(t.a, a),
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly, f: Fp) -> Vector {
        let mut t = Vec::with_capacity(self.terms.len() * p.len());
        for &(m, a) in &p.terms {
            for x in &self.terms {
                t.push(VTerm {
                    m: x.m.mul(m),
                    c: x.c,
                    a: f.mul(x.a, a),
                });
            }
        }
        Vector::from_terms(f, t)
    }

    /// Renumbers components through `map` (entries `None` must not occur).
    pub fn remap(&self, map: &[Option<usize>], f: Fp) -> Vector {
        Vector::from_terms(
            f,
            self.terms
                .iter()
                .map(|t| VTerm {
                    c: map[t.c as usize].expect("component dropped by remap") as u32,
                    ..*t
                })
                .collect(),
        )
    }

    pub fn monic(&self, f: Fp) -> Vector {
        match self.lead() {
            None => Vector::zero(),
            Some(t) => self.scale(f.inv(t.a), f),
        }
    }
}

/// A matrix of polynomials between graded free modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub target: FreeModule,
    pub source: FreeModule,
    /// Row-major, `rows = target.rank()`, `cols = source.rank()`.
    pub entries: Vec<Poly>,
}

impl PolyMatrix {
    /// Builds a matrix and audits entry degrees.
    pub fn new(target: FreeModule, source: FreeModule, entries: Vec<Poly>) -> Result<PolyMatrix> {
        if entries.len() != target.rank() * source.rank() {
            return Err(Error::Range(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                target.rank(),
                source.rank()
            )));
        }
        let m = PolyMatrix {
            target,
            source,
            entries,
        };
        m.audit_degrees()?;
        Ok(m)
    }

    pub fn zero(target: FreeModule, source: FreeModule) -> PolyMatrix {
        let n = target.rank() * source.rank();
        PolyMatrix {
            target,
            source,
            entries: vec![Poly::zero(); n],
        }
    }

    pub fn identity(m: &FreeModule) -> PolyMatrix {
        let mut z = PolyMatrix::zero(m.clone(), m.clone());
        for i in 0..m.rank() {
            z.set(i, i, Poly::constant(1));
        }
        z
    }

    /// Matrix whose columns are the given vectors of `target`.
    pub fn from_columns(target: FreeModule, cols: &[Vector]) -> Result<PolyMatrix> {
        let mut src = Vec::with_capacity(cols.len());
        let mut entries = vec![Poly::zero(); target.rank() * cols.len()];
        for (j, v) in cols.iter().enumerate() {
            let d = v.degree_in(&target).ok_or_else(|| {
                Error::NotHomogeneous(format!("column {j} is not homogeneous"))
            })?;
            src.push(-d);
            for t in &v.terms {
                entries[t.c as usize * cols.len() + j].terms.push((t.m, t.a));
            }
        }
        Ok(PolyMatrix {
            target,
            source: FreeModule::new(src),
            entries,
        })
    }

    /// Like `from_columns` but with explicit source twists (zero columns allowed).
    pub fn from_columns_with_source(
        target: FreeModule,
        source: FreeModule,
        cols: &[Vector],
    ) -> Result<PolyMatrix> {
        let mut entries = vec![Poly::zero(); target.rank() * cols.len()];
        for (j, v) in cols.iter().enumerate() {
            for t in &v.terms {
                entries[t.c as usize * cols.len() + j].terms.push((t.m, t.a));
            }
        }
        PolyMatrix::new(target, source, entries)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        let c = self.cols();
        self.entries[i * c + j] = p;
    }

    /// Required degree of entry `(i, j)`.
    pub fn entry_degree(&self, i: usize, j: usize) -> i32 {
        self.target.twists[i] - self.source.twists[j]
    }

    pub fn audit_degrees(&self) -> Result<()> {
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let e = self.get(i, j);
                let want = self.entry_degree(i, j);
                if e.terms.iter().any(|t| t.0.deg() as i32 != want) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i},{j}) should have degree {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn column(&self, j: usize) -> Vector {
        let mut t = Vec::new();
        for i in 0..self.rows() {
            for &(m, a) in &self.get(i, j).terms {
                t.push(VTerm { m, c: i as u32, a });
            }
        }
        let mut v = Vector { terms: t };
        v.terms.sort_by(|x, y| term_cmp(y.m, y.c, x.m, x.c));
        v
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &PolyMatrix, f: Fp) -> Result<PolyMatrix> {
        if self.source != g.target {
            return Err(Error::Twist(format!(
                "source {:?} vs target {:?}",
                self.source.twists, g.target.twists
            )));
        }
        let (r, k, c) = (self.rows(), self.cols(), g.cols());
        let mut out = PolyMatrix::zero(self.target.clone(), g.source.clone());
        for i in 0..r {
            for j in 0..c {
                let mut acc: Vec<(Mono, u32)> = Vec::new();
                for l in 0..k {
                    let a = self.get(i, l);
                    let b = g.get(l, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc.extend(a.mul(b, f).terms);
                }
                out.set(i, j, Poly::from_terms(f, acc));
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a vector of the source.
    pub fn apply(&self, v: &Vector, f: Fp) -> Vector {
        let mut t = Vec::new();
        for x in &v.terms {
            let j = x.c as usize;
            for i in 0..self.rows() {
                for &(m, a) in &self.get(i, j).terms {
                    t.push(VTerm {
                        m: m.mul(x.m),
                        c: i as u32,
                        a: f.mul(a, x.a),
                    });
                }
            }
        }
        Vector::from_terms(f, t)
    }

    /// Transpose, as a map between dual modules shifted by `shift`:
    /// `target^*(shift) -> source^*(shift)` reversed.
    pub fn transpose(&self) -> PolyMatrix {
        let (r, c) = (self.rows(), self.cols());
        let mut e = Vec::with_capacity(r * c);
        for j in 0..c {
            for i in 0..r {
                e.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            target: self.source.dual(),
            source: self.target.dual(),
            entries: e,
        }
    }

    /// Same entries, both modules twisted by `s`.
    pub fn shift(&self, s: i32) -> PolyMatrix {
        PolyMatrix {
            target: self.target.shift(s),
            source: self.source.shift(s),
            entries: self.entries.clone(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut e = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                e.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            target: FreeModule::new(rows.iter().map(|&i| self.target.twists[i]).collect()),
            source: FreeModule::new(cols.iter().map(|&j| self.source.twists[j]).collect()),
            entries: e,
        }
    }

    /// `[self | o]` sharing a target.
    pub fn hconcat(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.target != o.target {
            return Err(Error::Twist("hconcat with different targets".into()));
        }
        let (r, c1, c2) = (self.rows(), self.cols(), o.cols());
        let mut e = Vec::with_capacity(r * (c1 + c2));
        for i in 0..r {
            for j in 0..c1 {
                e.push(self.get(i, j).clone());
            }
            for j in 0..c2 {
                e.push(o.get(i, j).clone());
            }
        }
        Ok(PolyMatrix {
            target: self.target.clone(),
            source: self.source.direct_sum(&o.source),
            entries: e,
        })
    }

    /// Block-diagonal sum.
    pub fn block_sum(&self, o: &PolyMatrix) -> PolyMatrix {
        let t = self.target.direct_sum(&o.target);
        let s = self.source.direct_sum(&o.source);
        let mut z = PolyMatrix::zero(t, s);
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                z.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows() {
            for j in 0..o.cols() {
                z.set(self.rows() + i, self.cols() + j, o.get(i, j).clone());
            }
        }
        z
    }

    /// True if some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.entries
            .iter()
            .any(|e| !e.is_zero() && e.is_constant())
    }

    /// All `k x k` minors, rows and columns in lexicographic subset order.
    pub fn minors(&self, k: usize, f: Fp) -> Result<Vec<Poly>> {
        if k == 0 || k > self.rows().min(self.cols()) {
            return Err(Error::Range(format!(
                "minor size {k} for a {}x{} matrix",
                self.rows(),
                self.cols()
            )));
        }
        let rs = subsets(self.rows(), k);
        let cs = subsets(self.cols(), k);
        let mut out = Vec::with_capacity(rs.len() * cs.len());
        for r in &rs {
            for c in &cs {
                out.push(self.det_of(r, c, f));
            }
        }
        Ok(out)
    }

    /// Determinant of a square submatrix by cofactor expansion along the first row.
    pub fn det_of(&self, rows: &[usize], cols: &[usize], f: Fp) -> Poly {
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = Poly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.det_of(&rows[1..], &rest, f);
            let term = e.mul(&sub, f);
            acc = if k % 2 == 0 {
                acc.add(&term, f)
            } else {
                acc.sub(&term, f)
            };
        }
        acc
    }

    pub fn fmt(&self, ring: &Ring) -> String {
        let mut s = String::new();
        s.push_str(&format!("target: {}\n", fmt_twists(&self.target)));
        s.push_str(&format!("source: {}\n", fmt_twists(&self.source)));
        for i in 0..self.rows() {
            let row: Vec<String> = (0..self.cols()).map(|j| ring.fmt_poly(self.get(i, j))).collect();
            s.push_str(&format!("[{}]\n", row.join(", ")));
        }
        s
    }
}

pub fn fmt_twists(m: &FreeModule) -> String {
    m.twists
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

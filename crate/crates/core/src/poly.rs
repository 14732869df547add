//! Sparse polynomials over `F_p` and the ring they live in.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::{count_monomials, Mono, MAX_VARS};
use std::fmt::Write as _;

/// `k[x0..x_{nvars-1}]` with the standard grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: Fp,
}

impl Ring {
    pub fn new(nvars: usize, field: Fp) -> Result<Ring> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::Range(format!(
                "number of variables must be in 1..={MAX_VARS}, got {nvars}"
            )));
        }
        Ok(Ring { nvars, field })
    }

    /// Coordinate ring of `P^n`.
    pub fn projective(n: usize, field: Fp) -> Result<Ring> {
        Ring::new(n + 1, field)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Projective dimension `n` of the ambient space.
    pub fn pn(&self) -> usize {
        self.nvars - 1
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    /// `dim_k R_q`.
    pub fn dim(&self, q: i64) -> u64 {
        count_monomials(self.nvars, q)
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars);
        Poly::monomial(Mono::var(i), 1)
    }

    pub fn vars(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.var(i)).collect()
    }

    pub fn check_same(&self, o: &Ring) -> Result<()> {
        if self != o {
            return Err(Error::Ambient(format!(
                "{} variables over F_{} vs {} variables over F_{}",
                self.nvars,
                self.field.p(),
                o.nvars,
                o.field.p()
            )));
        }
        Ok(())
    }

    pub fn fmt_mono(&self, m: Mono) -> String {
        let mut s = String::new();
        for i in 0..self.nvars {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            if e == 1 {
                let _ = write!(s, "x{i}");
            } else {
                let _ = write!(s, "x{i}^{e}");
            }
        }
        s
    }

    pub fn fmt_poly(&self, f: &Poly) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, &(m, c)) in f.terms.iter().enumerate() {
            let c = self.field.to_signed(c);
            let (neg, a) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let ms = self.fmt_mono(m);
            if ms.is_empty() {
                let _ = write!(s, "{a}");
            } else if a == 1 {
                s.push_str(&ms);
            } else {
                let _ = write!(s, "{a}*{ms}");
            }
        }
        s
    }
}

/// A polynomial as a list of `(monomial, coefficient)` pairs, strictly
/// decreasing in grevlex, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    pub terms: Vec<(Mono, u32)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: u32) -> Poly {
        Poly::monomial(Mono::ONE, c)
    }

    pub fn monomial(m: Mono, c: u32) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging and sorting.
    pub fn from_terms(f: Fp, mut t: Vec<(Mono, u32)>) -> Poly {
        t.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, u32)> = Vec::with_capacity(t.len());
        for (m, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c % f.p()),
                _ => out.push((m, c % f.p())),
            }
        }
        out.retain(|x| x.1 != 0);
        Poly { terms: out }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(Mono, u32)> {
        self.terms.first().copied()
    }

    pub fn lead_mono(&self) -> Mono {
        self.terms[0].0
    }

    /// Degree of the leading term (for homogeneous input, the degree).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.deg()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(&(m, _)) => self.terms.iter().all(|t| t.0.deg() == m.deg()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0 == Mono::ONE)
    }

    pub fn coeff(&self, m: Mono) -> u32 {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    pub fn add(&self, o: &Poly, f: Fp) -> Poly {
        self.combine(o, f, false)
    }

    pub fn sub(&self, o: &Poly, f: Fp) -> Poly {
        self.combine(o, f, true)
    }

    fn combine(&self, o: &Poly, f: Fp, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let g = |c: u32| if negate { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, g(b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(a[i].1, g(b[j].1));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, c)| (m, g(c))));
        Poly { terms: out }
    }

    pub fn neg(&self, f: Fp) -> Poly {
        Poly {
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: u32, f: Fp) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: Mono, c: u32, f: Fp) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Poly, f: Fp) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.len() == 1 {
            return self.mul_term(o.terms[0].0, o.terms[0].1, f);
        }
        if self.len() == 1 {
            return o.mul_term(self.terms[0].0, self.terms[0].1, f);
        }
        let p = f.p() as u64;
        let mut prods: Vec<(Mono, u64)> = Vec::with_capacity(self.len() * o.len());
        for &(m1, c1) in &self.terms {
            for &(m2, c2) in &o.terms {
                prods.push((m1.mul(m2), c1 as u64 * c2 as u64));
            }
        }
        prods.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out = Vec::new();
        let mut k = 0;
        while k < prods.len() {
            let m = prods[k].0;
            let mut acc = 0u64;
            while k < prods.len() && prods[k].0 == m {
                acc = (acc + prods[k].1) % p;
                k += 1;
            }
            if acc != 0 {
                out.push((m, acc as u32));
            }
        }
        Poly { terms: out }
    }

    pub fn pow(&self, e: u32, f: Fp) -> Poly {
        let mut r = Poly::constant(1);
        for _ in 0..e {
            r = r.mul(self, f);
        }
        r
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize, f: Fp) -> Poly {
        let mut t = Vec::new();
        for &(m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let c2 = f.mul(c, e % f.p());
            if c2 != 0 {
                t.push((Mono(m.0 - Mono::var(i).0), c2));
            }
        }
        // dividing by x_i keeps grevlex order among the survivors
        Poly { terms: t }
    }

    /// Substitutes `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Poly], f: Fp) -> Poly {
        let mut cache: Vec<Vec<Poly>> = images.iter().map(|g| vec![Poly::constant(1), g.clone()]).collect();
        let mut acc: Vec<(Mono, u32)> = Vec::new();
        for &(m, c) in &self.terms {
            let mut t = Poly::constant(c);
            for (i, g) in images.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap().mul(g, f);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][e], f);
            }
            acc.extend(t.terms);
        }
        Poly::from_terms(f, acc)
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self, f: Fp) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(f.inv(c), f),
        }
    }

    /// Value at a point.
    pub fn eval(&self, pt: &[u32], f: Fp) -> u32 {
        let mut s = 0;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &x) in pt.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            s = f.add(s, v);
        }
        s
    }
}

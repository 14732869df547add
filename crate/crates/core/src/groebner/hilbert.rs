//! Hilbert series of monomial ideals and the data derived from them.

use crate::groebner::GroebnerBasis;
use crate::monomial::Mono;
use num_rational::Ratio;
use serde::Serialize;

/// Integer polynomial in `t` with a lowest exponent `shift` (Laurent allowed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Laurent {
    pub shift: i32,
    pub coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent {
            shift: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(shift: i32, coeffs: Vec<i64>) -> Laurent {
        let mut l = Laurent { shift, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.shift = 0;
            return;
        }
        self.coeffs.drain(..lead_zeros);
        self.shift += lead_zeros as i32;
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let k = e - self.shift;
        if k < 0 || k as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[k as usize]
        }
    }

    pub fn top(&self) -> i32 {
        self.shift + self.coeffs.len() as i32 - 1
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        if self.coeffs.is_empty() {
            return o.clone();
        }
        if o.coeffs.is_empty() {
            return self.clone();
        }
        let lo = self.shift.min(o.shift);
        let hi = self.top().max(o.top());
        let c = (lo..=hi).map(|e| self.coeff(e) + o.coeff(e)).collect();
        Laurent::from_coeffs(lo, c)
    }

    pub fn shifted(&self, s: i32) -> Laurent {
        Laurent {
            shift: self.shift + s,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Divides by `(1 - t)` exactly, if possible.
    pub fn div_one_minus_t(&self) -> Option<Laurent> {
        if self.coeffs.is_empty() {
            return Some(self.clone());
        }
        if self.coeffs.iter().sum::<i64>() != 0 {
            return None;
        }
        // q_k = sum_{i<=k} c_i
        let mut q = Vec::with_capacity(self.coeffs.len() - 1);
        let mut s = 0;
        for &c in &self.coeffs[..self.coeffs.len() - 1] {
            s += c;
            q.push(s);
        }
        Some(Laurent::from_coeffs(self.shift, q))
    }
}

fn mul_poly(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

fn add_into(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &x) in b.iter().enumerate() {
        a[i + shift] += x;
    }
}

fn minimalize(mut g: Vec<Mono>) -> Vec<Mono> {
    g.sort_by_key(|m| m.deg());
    g.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(g.len());
    for m in g {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `K(t)` with `HS(R/I) = K(t) / (1-t)^nvars` for a monomial ideal.
pub fn monomial_numerator(gens: &[Mono]) -> Vec<i64> {
    numerator_rec(minimalize(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Mono>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.contains(&Mono::ONE) {
        return Vec::new();
    }
    // pairwise coprime: product of (1 - t^deg)
    let mut union = 0u32;
    let mut total = 0u32;
    for m in &gens {
        let s = m.support();
        union |= s;
        total += s.count_ones();
    }
    if union.count_ones() == total {
        let mut r = vec![1i64];
        for m in &gens {
            let mut f = vec![0i64; m.deg() as usize + 1];
            f[0] = 1;
            f[m.deg() as usize] -= 1;
            r = mul_poly(&r, &f);
        }
        return r;
    }
    // pivot on the variable occurring in most non-pure-power generators
    let mut counts = [0usize; 8];
    for m in &gens {
        let s = m.support();
        if s.count_ones() > 1 {
            for (v, c) in counts.iter_mut().enumerate() {
                if s & (1 << v) != 0 {
                    *c += 1;
                }
            }
        }
    }
    let v = (0..8).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|m| m.support().count_ones() > 1)
        .map(|m| m.exp(v))
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2].max(1);
    let pivot = Mono::var_pow(v, e);
    // I + (pivot)
    let mut plus = gens.clone();
    plus.push(pivot);
    let a = numerator_rec(minimalize(plus));
    // I : pivot
    let colon: Vec<Mono> = gens
        .iter()
        .map(|&m| {
            let g = m.gcd(pivot);
            g.div_into(m)
        })
        .collect();
    let b = numerator_rec(minimalize(colon));
    let mut r = a;
    add_into(&mut r, &b, e as usize);
    r
}

/// Krull dimension of `R/I` from the supports of a monomial ideal: the
/// largest set of variables containing no generator's support.
pub fn monomial_dimension(nvars: usize, gens: &[Mono]) -> usize {
    let sups: Vec<u32> = gens.iter().map(|m| m.support()).collect();
    let mut best = 0;
    for s in 0u32..(1 << nvars) {
        if sups.iter().all(|&g| g & !s != 0) {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

/// Generalized binomial `C(x, r)` for any integer `x`.
pub fn binom_poly(x: i64, r: usize) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 0..r as i128 {
        num *= x as i128 - j;
        den *= j + 1;
    }
    num / den
}

/// Hilbert function, polynomial, dimension and degree of a graded module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// `HS = numerator / (1-t)^nvars`.
    pub numerator: Laurent,
    /// Krull dimension (projective dimension plus one).
    pub dim: usize,
    /// `HS = reduced / (1-t)^dim`.
    pub reduced: Laurent,
    pub degree: i64,
}

impl HilbertData {
    pub fn from_numerator(nvars: usize, numerator: Laurent) -> HilbertData {
        let mut q = numerator.clone();
        let mut dim = nvars;
        if q.coeffs.is_empty() {
            return HilbertData {
                nvars,
                numerator,
                dim: 0,
                reduced: q,
                degree: 0,
            };
        }
        while dim > 0 {
            match q.div_one_minus_t() {
                Some(r) => {
                    q = r;
                    dim -= 1;
                }
                None => break,
            }
        }
        let degree = q.coeffs.iter().sum();
        HilbertData {
            nvars,
            numerator,
            dim,
            reduced: q,
            degree,
        }
    }

    /// Hilbert data of `F/M` from a Gröbner basis of `M ⊆ F`.
    pub fn from_gb(gb: &GroebnerBasis) -> HilbertData {
        let lts = gb.leading_monomials_by_component();
        let mut num = Laurent::zero();
        for (c, ms) in lts.iter().enumerate() {
            let k = monomial_numerator(ms);
            let l = Laurent::from_coeffs(gb.module.gen_degree(c), k);
            num = num.add(&l);
        }
        HilbertData::from_numerator(gb.ring.nvars(), num)
    }

    /// Projective dimension (−1 for the empty scheme).
    pub fn projective_dim(&self) -> i64 {
        self.dim as i64 - 1
    }

    /// `HF(k)`.
    pub fn hf(&self, k: i64) -> i64 {
        let n = self.nvars;
        let mut s: i128 = 0;
        for (i, &c) in self.numerator.coeffs.iter().enumerate() {
            let e = self.numerator.shift as i64 + i as i64;
            if k - e < 0 {
                continue;
            }
            s += c as i128 * binom_poly(k - e + n as i64 - 1, n - 1);
        }
        s as i64
    }

    pub fn hf_window(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|k| self.hf(k)).collect()
    }

    /// `HP(k)`, valid for every integer `k`.
    pub fn hp(&self, k: i64) -> i64 {
        if self.dim == 0 {
            return 0;
        }
        let d = self.dim;
        let mut s: i128 = 0;
        for (i, &c) in self.reduced.coeffs.iter().enumerate() {
            let e = self.reduced.shift as i64 + i as i64;
            s += c as i128 * binom_poly(k - e + d as i64 - 1, d - 1);
        }
        s as i64
    }

    /// Smallest `k0` with `HF(k) = HP(k)` for all `k >= k0`.
    pub fn regularity_bound(&self) -> i64 {
        if self.reduced.coeffs.is_empty() {
            return i64::MIN / 4;
        }
        self.reduced.top() as i64 - self.dim as i64 + 1
    }

    /// Hilbert polynomial coefficients `c_0 .. c_{dim-1}` (ascending powers).
    pub fn hp_coefficients(&self) -> Vec<Ratio<i128>> {
        let d = self.dim;
        if d == 0 {
            return Vec::new();
        }
        // interpolate through d points
        let xs: Vec<i64> = (0..d as i64).collect();
        let ys: Vec<Ratio<i128>> = xs.iter().map(|&x| Ratio::from_integer(self.hp(x) as i128)).collect();
        let mut coeffs = vec![Ratio::from_integer(0i128); d];
        for (i, &xi) in xs.iter().enumerate() {
            // Lagrange basis polynomial
            let mut basis = vec![Ratio::from_integer(1i128)];
            let mut den = Ratio::from_integer(1i128);
            for (j, &xj) in xs.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut nb = vec![Ratio::from_integer(0i128); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    nb[k + 1] += *b;
                    nb[k] -= *b * Ratio::from_integer(xj as i128);
                }
                basis = nb;
                den *= Ratio::from_integer((xi - xj) as i128);
            }
            for (k, b) in basis.iter().enumerate() {
                coeffs[k] += ys[i] * *b / den;
            }
        }
        coeffs
    }

    pub fn hp_string(&self) -> String {
        let c = self.hp_coefficients();
        if c.iter().all(|x| *x == Ratio::from_integer(0)) {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, x) in c.iter().enumerate().rev() {
            if *x == Ratio::from_integer(0) {
                continue;
            }
            let xs = if *x.denom() == 1 {
                x.numer().to_string()
            } else {
                format!("{}/{}", x.numer(), x.denom())
            };
            parts.push(match k {
                0 => xs,
                1 => format!("{xs} t"),
                _ => format!("{xs} t^{k}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    /// `HF: [..] HP: .. dim: D deg: d` over a window.
    pub fn summary(&self, lo: i64, hi: i64) -> String {
        let hf: Vec<String> = self.hf_window(lo, hi).iter().map(|x| x.to_string()).collect();
        format!(
            "HF: [{}] HP: {} dim: {} deg: {}",
            hf.join(", "),
            self.hp_string(),
            self.dim,
            self.degree
        )
    }

    /// Degree and sectional genus of the projective scheme, plus `HP(0)`.
    /// The genus is `1 - HP_C(0)` for a general curve section `C`, obtained
    /// by taking finite differences of the Hilbert polynomial.
    pub fn degree_genus(&self) -> (i64, i64) {
        let r = self.dim as i64 - 1;
        if r < 1 {
            return (self.degree, 0);
        }
        // Δ^{r-1} HP evaluated at 0 equals HP of the curve section at 0
        let mut vals: Vec<i64> = (-(r - 1)..=0).map(|k| self.hp(k)).collect();
        for _ in 0..(r - 1) {
            vals = vals.windows(2).map(|w| w[1] - w[0]).collect();
        }
        (self.degree, 1 - vals[0])
    }
}

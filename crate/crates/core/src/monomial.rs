//! Packed monomials.
//!
//! A monomial in at most seven variables lives in one `u64`: byte `i` holds
//! the exponent of `x_i` (below 128), the top byte holds the total degree.
//! Multiplication is integer addition, and the numeric layout makes graded
//! reverse lexicographic comparison two integer compares.

use std::cmp::Ordering;

pub const MAX_VARS: usize = 7;
pub const MAX_EXP: u32 = 127;

const GUARD: u64 = 0x0080_8080_8080_8080;
const EXP_MASK: u64 = 0x00ff_ffff_ffff_ffff;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn from_exps(e: &[u32]) -> Mono {
        assert!(e.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut w = 0u64;
        let mut d = 0u32;
        for (i, &x) in e.iter().enumerate() {
            assert!(x <= MAX_EXP, "exponent {x} too large");
            w |= (x as u64) << (8 * i);
            d += x;
        }
        assert!(d < 256, "degree {d} too large");
        Mono(w | ((d as u64) << 56))
    }

    pub fn var(i: usize) -> Mono {
        Mono((1u64 << (8 * i)) | (1u64 << 56))
    }

    pub fn var_pow(i: usize, e: u32) -> Mono {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Mono::from_exps(&v)
    }

    #[inline]
    pub fn deg(self) -> u32 {
        (self.0 >> 56) as u32
    }

    #[inline]
    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn exps(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    #[inline]
    pub fn mul(self, o: Mono) -> Mono {
        debug_assert!((0..MAX_VARS).all(|i| self.exp(i) + o.exp(i) <= MAX_EXP));
        Mono(self.0 + o.0)
    }

    /// True if `self` divides `o`.
    #[inline]
    pub fn divides(self, o: Mono) -> bool {
        let a = self.0 & EXP_MASK;
        let b = o.0 & EXP_MASK;
        ((b | GUARD) - a) & GUARD == GUARD
    }

    /// `o / self`, assuming divisibility.
    #[inline]
    pub fn div_into(self, o: Mono) -> Mono {
        debug_assert!(self.divides(o));
        Mono(o.0 - self.0)
    }

    pub fn lcm(self, o: Mono) -> Mono {
        let mut w = 0u64;
        let mut d = 0u64;
        for i in 0..MAX_VARS {
            let x = self.exp(i).max(o.exp(i)) as u64;
            w |= x << (8 * i);
            d += x;
        }
        Mono(w | (d << 56))
    }

    pub fn gcd(self, o: Mono) -> Mono {
        let mut w = 0u64;
        let mut d = 0u64;
        for i in 0..MAX_VARS {
            let x = self.exp(i).min(o.exp(i)) as u64;
            w |= x << (8 * i);
            d += x;
        }
        Mono(w | (d << 56))
    }

    #[inline]
    pub fn coprime(self, o: Mono) -> bool {
        // a byte is nonzero in both iff the gcd has positive degree
        for i in 0..MAX_VARS {
            if self.exp(i) > 0 && o.exp(i) > 0 {
                return false;
            }
        }
        true
    }

    /// Graded reverse lexicographic comparison.
    #[inline]
    pub fn grevlex(self, o: Mono) -> Ordering {
        (self.0 >> 56)
            .cmp(&(o.0 >> 56))
            .then_with(|| (o.0 & EXP_MASK).cmp(&(self.0 & EXP_MASK)))
    }

    /// Bitmask of variables that occur.
    pub fn support(self) -> u32 {
        let mut s = 0;
        for i in 0..MAX_VARS {
            if self.exp(i) > 0 {
                s |= 1 << i;
            }
        }
        s
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.grevlex(*o)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl std::fmt::Debug for Mono {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.exps(MAX_VARS))
    }
}

/// All monomials of degree `d` in `n` variables, ascending in grevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Mono>) {
        let n = e.len();
        if i + 1 == n {
            e[i] = left;
            out.push(Mono::from_exps(e));
            return;
        }
        for x in 0..=left {
            e[i] = x;
            rec(i + 1, left - x, e, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Mono::ONE);
        }
        return out;
    }
    rec(0, d, &mut e, &mut out);
    out.sort();
    out
}

/// Binomial coefficients as a lookup table.
pub struct Binom {
    t: Vec<Vec<u64>>,
}

impl Binom {
    pub fn new(max: usize) -> Binom {
        let mut t = vec![vec![0u64; max + 1]; max + 1];
        for n in 0..=max {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1].saturating_add(if k < n { t[n - 1][k] } else { 0 });
            }
        }
        Binom { t }
    }

    #[inline]
    pub fn get(&self, n: i64, k: i64) -> u64 {
        if n < 0 || k < 0 || k > n {
            0
        } else {
            self.t[n as usize][k as usize]
        }
    }
}

/// Number of monomials of degree `d` in `n` variables, `C(n-1+d, n-1)`.
pub fn count_monomials(n: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return (d == 0) as u64;
    }
    let mut r: u128 = 1;
    for i in 1..n as u128 {
        r = r * (d as u128 + i) / i;
    }
    r as u64
}

/// Rank of a monomial among all monomials of its degree, ascending in
/// grevlex. Ascending grevlex is descending lex on the reversed exponent
/// vector, which has a closed-form rank.
pub struct MonoRanker {
    n: usize,
    binom: Binom,
}

impl MonoRanker {
    pub fn new(n: usize) -> MonoRanker {
        MonoRanker {
            n,
            binom: Binom::new(64),
        }
    }

    #[inline]
    pub fn rank(&self, m: Mono) -> u64 {
        let n = self.n;
        let d = m.deg() as i64;
        debug_assert!(d + (n as i64) < 64);
        if n <= 1 {
            return 0;
        }
        let total = self.binom.get(d + n as i64 - 1, n as i64 - 1);
        // lex rank of r = (e_{n-1}, ..., e_0) among compositions of d
        let mut rem = d;
        let mut lr = 0u64;
        for i in 0..n - 1 {
            let ri = m.exp(n - 1 - i) as i64;
            let k = (n - i - 2) as i64;
            lr += self.binom.get(rem + k + 1, k + 1) - self.binom.get(rem - ri + k + 1, k + 1);
            rem -= ri;
        }
        total - 1 - lr
    }
}

//! Dense coordinates for one graded piece of a free module.
//!
//! The degree-`t` piece of `⊕ R e_c` is indexed so that index order equals
//! term order, which lets reduction scan a flat coefficient array from the
//! top down.

use crate::module::term_cmp;
use crate::monomial::{monomials_of_degree, Mono, MonoRanker};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Term order on a free module.
#[derive(Clone, Debug, Default)]
pub enum ModuleOrder {
    /// Degree, then grevlex, then lower component index first.
    #[default]
    Standard,
    /// `m e_j` is compared as `m * lead_j` in `base`, ties broken by the
    /// lower index first. Used for syzygy modules.
    Induced {
        base: Arc<ModuleOrder>,
        leads: Vec<(Mono, u32)>,
    },
}

impl ModuleOrder {
    pub fn is_standard(&self) -> bool {
        matches!(self, ModuleOrder::Standard)
    }

    pub fn cmp_terms(&self, a: (Mono, u32), b: (Mono, u32)) -> Ordering {
        match self {
            ModuleOrder::Standard => term_cmp(a.0, a.1, b.0, b.1),
            ModuleOrder::Induced { base, leads } => {
                let la = leads[a.1 as usize];
                let lb = leads[b.1 as usize];
                base.cmp_terms((a.0.mul(la.0), la.1), (b.0.mul(lb.0), lb.1))
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }

    /// Leading term of a nonzero vector in this order.
    pub fn lead(&self, terms: impl IntoIterator<Item = (Mono, u32)>) -> Option<(Mono, u32)> {
        terms
            .into_iter()
            .max_by(|&a, &b| self.cmp_terms(a, b))
    }
}

pub struct Space {
    pub t: i32,
    /// `(monomial, component)` for each index, ascending in term order.
    pub table: Vec<(Mono, u32)>,
    base: Vec<u64>,
    stride: Vec<u64>,
    pos: Vec<u64>,
    /// Per-component index by monomial rank, for non-standard orders.
    lookup: Option<Vec<Vec<u32>>>,
}

impl Space {
    pub fn new(nvars: usize, gdeg: &[i32], t: i32) -> Space {
        let mut gs: Vec<i32> = gdeg.iter().copied().filter(|&g| g <= t).collect();
        gs.sort_unstable_by(|a, b| b.cmp(a));
        gs.dedup();
        let r = gdeg.len();
        let mut base = vec![u64::MAX; r];
        let mut stride = vec![0; r];
        let mut pos = vec![0; r];
        let mut table = Vec::new();
        for g in gs {
            let d = (t - g) as u32;
            let comps: Vec<usize> = (0..r).filter(|&c| gdeg[c] == g).collect();
            let cnt = comps.len();
            let off = table.len() as u64;
            for (k, &c) in comps.iter().enumerate() {
                base[c] = off;
                stride[c] = cnt as u64;
                pos[c] = (cnt - 1 - k) as u64;
            }
            for m in monomials_of_degree(nvars, d) {
                for k in (0..cnt).rev() {
                    table.push((m, comps[k] as u32));
                }
            }
        }
        Space {
            t,
            table,
            base,
            stride,
            pos,
            lookup: None,
        }
    }

    /// The same terms, indexed in ascending `order`.
    pub fn with_order(nvars: usize, gdeg: &[i32], t: i32, order: &ModuleOrder, rk: &MonoRanker) -> Space {
        let mut sp = Space::new(nvars, gdeg, t);
        if order.is_standard() {
            return sp;
        }
        sp.table.sort_by(|&a, &b| order.cmp_terms(a, b));
        let mut lookup: Vec<Vec<u32>> = gdeg
            .iter()
            .map(|&g| {
                if g <= t {
                    vec![0; crate::monomial::count_monomials(nvars, (t - g) as i64) as usize]
                } else {
                    Vec::new()
                }
            })
            .collect();
        for (i, &(m, c)) in sp.table.iter().enumerate() {
            lookup[c as usize][rk.rank(m) as usize] = i as u32;
        }
        sp.lookup = Some(lookup);
        sp
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    #[inline]
    pub fn index(&self, rk: &MonoRanker, m: Mono, c: u32) -> usize {
        let c = c as usize;
        if let Some(l) = &self.lookup {
            return l[c][rk.rank(m) as usize] as usize;
        }
        debug_assert!(self.base[c] != u64::MAX, "component outside this degree");
        (self.base[c] + rk.rank(m) * self.stride[c] + self.pos[c]) as usize
    }
}

/// Thread-safe cache of spaces for one free module.
pub struct SpaceCache {
    nvars: usize,
    gdeg: Vec<i32>,
    order: ModuleOrder,
    pub ranker: MonoRanker,
    map: RwLock<HashMap<i32, Arc<Space>>>,
}

impl SpaceCache {
    pub fn new(nvars: usize, gdeg: Vec<i32>) -> SpaceCache {
        SpaceCache::with_order(nvars, gdeg, ModuleOrder::Standard)
    }

    pub fn with_order(nvars: usize, gdeg: Vec<i32>, order: ModuleOrder) -> SpaceCache {
        SpaceCache {
            nvars,
            gdeg,
            order,
            ranker: MonoRanker::new(nvars),
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, t: i32) -> Arc<Space> {
        if let Some(s) = self.map.read().unwrap().get(&t) {
            return s.clone();
        }
        let s = Arc::new(Space::with_order(self.nvars, &self.gdeg, t, &self.order, &self.ranker));
        self.map.write().unwrap().insert(t, s.clone());
        s
    }

    /// Forgets cached spaces (used when memory matters between degrees).
    pub fn clear(&self) {
        self.map.write().unwrap().clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::term_cmp;
    use std::cmp::Ordering;

    #[test]
    fn index_order_is_term_order() {
        let gdeg = [0, 1, 0, 2, 1];
        let sp = Space::new(3, &gdeg, 3);
        let rk = MonoRanker::new(3);
        for (i, &(m, c)) in sp.table.iter().enumerate() {
            assert_eq!(sp.index(&rk, m, c), i);
            assert_eq!(m.deg() as i32 + gdeg[c as usize], 3);
        }
        for w in sp.table.windows(2) {
            assert_eq!(term_cmp(w[0].0, w[0].1, w[1].0, w[1].1), Ordering::Less);
        }
    }
}

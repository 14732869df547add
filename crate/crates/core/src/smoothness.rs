//! Jacobian criterion over `F_p`. A "smooth" verdict certifies the mod-p
//! reduction of the scheme (or of a general linear section of it), not the
//! characteristic-zero variety.

use crate::error::{Error, Result};
use crate::groebner::hilbert::HilbertData;
use crate::groebner::ideal::dim_codim;
use crate::groebner::{gb_ideal, GbOptions};
use crate::module::{subsets, FreeModule, PolyMatrix};
use crate::monomial::Mono;
use crate::poly::{Poly, Ring};
use crate::rng::stream;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmoothVerdict {
    Smooth,
    Singular,
    Inconclusive,
}

impl fmt::Display for SmoothVerdict {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fm.write_str(match self {
            SmoothVerdict::Smooth => "smooth",
            SmoothVerdict::Singular => "singular",
            SmoothVerdict::Inconclusive => "inconclusive",
        })
    }
}

/// Where the criterion is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmoothMethod {
    /// On the scheme itself.
    Full,
    /// On its intersection with a seeded general linear subspace of this
    /// codimension.
    Sliced(usize),
}

#[derive(Clone, Debug)]
pub struct SmoothOptions {
    pub method: SmoothMethod,
    pub seed: u64,
    /// Give up (inconclusive) when the singular-locus basis needs higher
    /// degrees.
    pub max_degree: Option<i32>,
}

impl Default for SmoothOptions {
    fn default() -> Self {
        SmoothOptions {
            method: SmoothMethod::Full,
            seed: 1,
            max_degree: None,
        }
    }
}

impl SmoothOptions {
    pub fn sliced(codim: usize, seed: u64) -> SmoothOptions {
        SmoothOptions {
            method: SmoothMethod::Sliced(codim),
            seed,
            max_degree: None,
        }
    }

    /// Full check for small degree, one hyperplane section from degree 13 on.
    pub fn for_degree(d: i64, seed: u64) -> SmoothOptions {
        if d >= 13 {
            SmoothOptions::sliced(1, seed)
        } else {
            SmoothOptions {
                seed,
                ..SmoothOptions::default()
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmoothnessReport {
    pub verdict: SmoothVerdict,
    pub method: SmoothMethod,
    pub codim: usize,
    /// Number of Jacobian minors added.
    pub minors: usize,
    /// Projective dimension of the singular locus (`-1` when empty).
    pub singular_dim: i64,
    /// Degree of the (usually non-reduced) Jacobian scheme.
    pub singular_degree: i64,
    /// Images of the variables under the slice, one line per variable.
    pub slice: Option<Vec<String>>,
}

impl SmoothnessReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("verdict: {}\n", self.verdict));
        match self.method {
            SmoothMethod::Full => out.push_str("method: full\n"),
            SmoothMethod::Sliced(k) => {
                out.push_str(&format!("method: sliced by a general linear space of codimension {k}\n"))
            }
        }
        out.push_str(&format!("codimension: {}\n", self.codim));
        out.push_str(&format!("jacobian minors: {}\n", self.minors));
        if self.singular_dim >= 0 {
            out.push_str(&format!(
                "singular scheme: dimension {}, degree {}\n",
                self.singular_dim, self.singular_degree
            ));
        } else if self.verdict == SmoothVerdict::Smooth {
            out.push_str("singular locus: empty\n");
        }
        if let Some(s) = &self.slice {
            for (i, l) in s.iter().enumerate() {
                out.push_str(&format!("slice x{i} = {l}\n"));
            }
        }
        let scope = match self.method {
            SmoothMethod::Full => "the reduction mod p",
            SmoothMethod::Sliced(_) => "the reduction mod p of the linear section only",
        };
        out.push_str(&format!("note: the verdict concerns {scope}\n"));
        out
    }
}

/// Jacobian matrix `(∂g_i/∂x_j)`, rows indexed by generators.
fn jacobian(ring: &Ring, gens: &[Poly]) -> Vec<Vec<Poly>> {
    let f = ring.field();
    gens.iter()
        .map(|g| (0..ring.nvars()).map(|j| g.derivative(j, f)).collect())
        .collect()
}

/// Restricts `gens` to a general linear subspace of codimension `k`, written
/// in coordinates of `P^{n-k}`.
pub fn slice(ring: &Ring, gens: &[Poly], k: usize, seed: u64) -> Result<(Ring, Vec<Poly>, Vec<Poly>)> {
    let n = ring.pn();
    if k > n {
        return Err(Error::Range(format!("cannot slice P^{n} by a codimension {k} space")));
    }
    let small = Ring::projective(n - k, ring.field())?;
    let f = ring.field();
    let mut rng = stream(seed, "slice");
    let images: Vec<Poly> = (0..ring.nvars())
        .map(|_| {
            Poly::from_terms(
                f,
                (0..small.nvars()).map(|j| (Mono::var(j), rng.gen_range(0..f.p()))).collect(),
            )
        })
        .collect();
    let out = gens.iter().map(|g| g.substitute(&images, f)).filter(|g| !g.is_zero()).collect();
    Ok((small, out, images))
}

/// Singular locus `V(I + c×c minors of the Jacobian)` for `I` of
/// codimension `c`; smooth iff that ideal is irrelevant.
pub fn check_smooth(ring: &Ring, ideal: &[Poly], opts: &SmoothOptions) -> Result<SmoothnessReport> {
    let gens: Vec<Poly> = ideal.iter().filter(|g| !g.is_zero()).cloned().collect();
    let gb = gb_ideal(ring, &gens, GbOptions::default())?;
    let (_, codim) = dim_codim(&gb);
    if gb.is_unit() {
        return Err(Error::Range("the ideal defines the empty scheme".into()));
    }
    let codim = codim as usize;
    let (work_ring, work, slice_desc) = match opts.method {
        SmoothMethod::Full => (*ring, gens, None),
        SmoothMethod::Sliced(k) => {
            let (small, g, images) = slice(ring, &gens, k, opts.seed)?;
            let desc = images.iter().map(|p| small.fmt_poly(p)).collect();
            (small, g, Some(desc))
        }
    };
    let f = work_ring.field();
    let rows = work.len();
    let cols = work_ring.nvars();
    let mut sing = work.clone();
    let mut minors = 0;
    if codim <= rows && codim <= cols {
        // entries have mixed degrees, so only det_of is used on this matrix
        let m = jacobian_matrix(&work_ring, &work);
        let pairs: Vec<(Vec<usize>, Vec<usize>)> = subsets(rows, codim)
            .into_iter()
            .flat_map(|rs| subsets(cols, codim).into_iter().map(move |cs| (rs.clone(), cs)))
            .collect();
        let dets: Vec<Poly> = pairs
            .par_iter()
            .map(|(rs, cs)| m.det_of(rs, cs, f))
            .filter(|d| !d.is_zero())
            .collect();
        minors = dets.len();
        sing.extend(dets);
    }
    let sgb = gb_ideal(
        &work_ring,
        &sing,
        GbOptions {
            max_degree: opts.max_degree,
            ..GbOptions::default()
        },
    )?;
    if !sgb.is_complete() {
        return Ok(SmoothnessReport {
            verdict: SmoothVerdict::Inconclusive,
            method: opts.method,
            codim,
            minors,
            singular_dim: -1,
            singular_degree: 0,
            slice: slice_desc,
        });
    }
    let hd = HilbertData::from_gb(&sgb);
    let (dim, degree) = if sgb.is_unit() || hd.dim == 0 { (-1, 0) } else { (hd.dim as i64 - 1, hd.degree) };
    Ok(SmoothnessReport {
        verdict: if dim < 0 { SmoothVerdict::Smooth } else { SmoothVerdict::Singular },
        method: opts.method,
        codim,
        minors,
        singular_dim: dim,
        singular_degree: degree,
        slice: slice_desc,
    })
}

fn jacobian_matrix(ring: &Ring, gens: &[Poly]) -> PolyMatrix {
    let jac = jacobian(ring, gens);
    let mut m = PolyMatrix::zero(FreeModule::new(vec![0; gens.len()]), FreeModule::new(vec![0; ring.nvars()]));
    for (i, row) in jac.into_iter().enumerate() {
        for (j, e) in row.into_iter().enumerate() {
            m.set(i, j, e);
        }
    }
    m
}

/// `V(I_W) ⊆ V(I_X)` scheme-theoretically, i.e. `I_X ⊆ I_W`.
pub fn contains_scheme(ring: &Ring, ix: &[Poly], iw: &[Poly]) -> Result<bool> {
    let gb = gb_ideal(ring, iw, GbOptions::default())?;
    Ok(ix.iter().all(|g| gb.contains_poly(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::groebner::ideal::intersect;

    #[test]
    fn planes_meeting_in_a_point_are_singular() {
        let r = Ring::projective(4, Fp::default()).unwrap();
        let x = r.vars();
        let a = vec![x[0].clone(), x[1].clone()];
        let b = vec![x[2].clone(), x[3].clone()];
        let i = intersect(&r, &a, &b).unwrap();
        let rep = check_smooth(&r, &i, &SmoothOptions::default()).unwrap();
        assert_eq!(rep.verdict, SmoothVerdict::Singular);
        assert_eq!(rep.singular_dim, 0);
    }

    #[test]
    fn containment_is_reflexive() {
        let r = Ring::projective(3, Fp::default()).unwrap();
        let x = r.vars();
        let i = vec![x[0].clone(), x[1].mul(&x[2], r.field())];
        assert!(contains_scheme(&r, &i, &i).unwrap());
        assert!(!contains_scheme(&r, &i, &[x[0].clone()]).unwrap());
    }
}

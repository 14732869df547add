//! Linkage by complete intersections: residual ideals `(f, g) : I_X`, the
//! residual resolution by the dual mapping cone, the reducible 3-fold `Z`
//! built from a Segre scroll and five 3-planes, and the audits that compare
//! residual invariants and intermediate cohomology across a link.

use crate::error::{Error, Result};
use crate::factory::koszul_complex;
use crate::groebner::hilbert::HilbertData;
use crate::groebner::ideal::{dim_codim, intersect, minimal_generators, reduced_gb};
use crate::groebner::{gb_ideal, GbOptions, GroebnerBasis};
use crate::invariants::{residual_invariants, InvariantSet};
use crate::module::{FreeModule, PolyMatrix};
use crate::monomial::Mono;
use crate::poly::{Poly, Ring};
use crate::resolution::{
    ideal_presentation, lift_chain_map, mapping_cone, minimalize, resolve_ideal, syzygies, BettiTable, ChainMap,
    FreeResolution, SchemeData,
};
use crate::rng::{random_ideal_element, stream};
use rand::Rng;
use std::fmt;

/// A request to link `V(ideal)` by forms of degrees `(r, s)`.
#[derive(Clone, Debug)]
pub struct LinkSpec {
    pub ideal: Vec<Poly>,
    pub r: u32,
    pub s: u32,
    /// Explicit forms in the ideal; drawn at random when `None`.
    pub f: Option<Poly>,
    pub g: Option<Poly>,
    pub seed: u64,
}

impl LinkSpec {
    pub fn new(ideal: &[Poly], r: u32, s: u32, seed: u64) -> LinkSpec {
        LinkSpec {
            ideal: ideal.to_vec(),
            r,
            s,
            f: None,
            g: None,
            seed,
        }
    }

    pub fn with_forms(mut self, f: Poly, g: Poly) -> LinkSpec {
        self.f = Some(f);
        self.g = Some(g);
        self
    }
}

/// One numeric comparison with its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: i64,
    pub found: i64,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: i64, found: i64) -> Check {
        Check {
            name: name.into(),
            expected,
            found,
        }
    }

    pub fn pass(&self) -> bool {
        self.expected == self.found
    }
}

impl fmt::Display for Check {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.pass() { "PASS" } else { "FAIL" };
        write!(fm, "{v} {}: expected {}, found {}", self.name, self.expected, self.found)
    }
}

/// How the residual ideal was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualMethod {
    /// `(f, g) : h` for a general `h ∈ I_X` of this degree, certified by
    /// `((f, g) : h) · I_X ⊆ (f, g)`.
    Element(u32),
    /// Intersection of `(f, g) : h_k` over all generators.
    Full,
    /// `I_X = (f, g)`: the residual is empty.
    Unit,
}

/// The result of a link.
#[derive(Clone, Debug)]
pub struct Link {
    pub ring: Ring,
    pub r: u32,
    pub s: u32,
    pub f: Poly,
    pub g: Poly,
    pub method: ResidualMethod,
    /// Minimal generators of `I_X' = (f, g) : I_X`.
    pub ideal: Vec<Poly>,
    /// Minimal resolution of `R/I_X'`.
    pub resolution: FreeResolution,
    pub hilbert: HilbertData,
    /// Dual mapping cone before and after minimalization (ACM `X` only).
    pub raw_cone: Option<FreeResolution>,
    pub cone: Option<FreeResolution>,
    pub source: InvariantSet,
    pub residual: InvariantSet,
    pub predicted: Option<InvariantSet>,
    pub checks: Vec<Check>,
}

impl Link {
    pub fn is_unit(&self) -> bool {
        self.method == ResidualMethod::Unit
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }

    /// Betti table of `I_X'`.
    pub fn ideal_betti(&self) -> BettiTable {
        self.resolution.betti().drop_first()
    }

    pub fn degree_genus(&self) -> (i64, i64) {
        (self.residual.d, self.residual.pi)
    }

    pub fn report(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("link ({}, {})\n", self.r, self.s));
        let method = match self.method {
            ResidualMethod::Element(t) => format!("(f,g):h with h of degree {t}, certified"),
            ResidualMethod::Full => "(f,g):I".to_string(),
            ResidualMethod::Unit => "I = (f,g), residual is empty".to_string(),
        };
        out.push_str(&format!("residual: {method}\n"));
        out.push_str(&format!("X : {}\n", self.source));
        out.push_str(&format!("X': {}\n", self.residual));
        if !self.is_unit() {
            out.push_str(&self.ideal_betti().fmt_sheaves());
            out.push('\n');
        }
        for c in &self.checks {
            out.push_str(&format!("{c}\n"));
        }
        out
    }
}

fn expect_homogeneous(gens: &[Poly]) -> Result<()> {
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(format!("{} terms", g.len())));
    }
    Ok(())
}

/// `I : h`, from the syzygies of `(h, g_1, ..)`.
pub fn colon_element(ring: &Ring, ideal: &[Poly], h: &Poly) -> Result<Vec<Poly>> {
    let mut gens = vec![h.clone()];
    gens.extend(ideal.iter().filter(|g| !g.is_zero()).cloned());
    let k = syzygies(ring, &ideal_presentation(ring, &gens)?)?;
    let mut out: Vec<Poly> = (0..k.cols()).map(|j| k.get(0, j).clone()).filter(|p| !p.is_zero()).collect();
    out.extend(ideal.iter().cloned());
    minimal_generators(ring, &out)
}

/// True when every product `a · b` lies in the ideal with basis `gb`.
fn products_inside(ring: &Ring, a: &[Poly], b: &[Poly], gb: &GroebnerBasis) -> bool {
    let f = ring.field();
    a.iter().all(|x| b.iter().all(|y| gb.contains_poly(&x.mul(y, f))))
}

/// Lowest degree of a generator of `I` outside the ideal with basis `gb`.
fn first_degree_outside(ideal: &[Poly], gb: &GroebnerBasis) -> Option<u32> {
    ideal.iter().filter(|g| !gb.contains_poly(g)).filter_map(|g| g.degree()).min()
}

fn draw_form(ring: &Ring, ideal: &[Poly], d: u32, seed: u64, name: &str) -> Result<Poly> {
    let mut rng = stream(seed, name);
    let p = random_ideal_element(ring, ideal, d as i32, &mut rng);
    if p.is_zero() {
        return Err(Error::Range(format!("the ideal has no forms of degree {d}")));
    }
    Ok(p)
}

/// Residual `(f, g) : I` with `J = (f, g)`.
fn residual_ideal(ring: &Ring, ideal: &[Poly], j: &[Poly], jgb: &GroebnerBasis, seed: u64) -> Result<(Vec<Poly>, ResidualMethod)> {
    let t0 = first_degree_outside(ideal, jgb).expect("I is not inside (f,g)");
    // (J : I) ⊆ (J : h); equality once (J : h) · I ⊆ J
    for (k, t) in [t0, t0, t0 + 1].into_iter().enumerate() {
        let h = match draw_form(ring, ideal, t, seed, &format!("link-h-{k}")) {
            Ok(h) => h,
            Err(_) => continue,
        };
        if jgb.contains_poly(&h) {
            continue;
        }
        let q = colon_element(ring, j, &h)?;
        if products_inside(ring, &q, ideal, jgb) {
            return Ok((q, ResidualMethod::Element(t)));
        }
    }
    let mut acc: Option<Vec<Poly>> = None;
    for h in ideal.iter().filter(|h| !jgb.contains_poly(h)) {
        let q = colon_element(ring, j, h)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(ring, &a, &q)?,
        });
    }
    Ok((acc.unwrap(), ResidualMethod::Full))
}

/// Residual resolution for ACM `X` with `0 <- R/I_X <- R <- F_1 <- F_2 <- 0`:
/// lift `Koszul(f, g) -> res(R/I_X)`, dualize into `R(-r-s)` and take the
/// cone. Returns the raw cone; it resolves `R/I_X'`.
pub fn dual_mapping_cone(ring: &Ring, res_x: &FreeResolution, f: &Poly, g: &Poly) -> Result<FreeResolution> {
    let ab = (f.degree().unwrap() + g.degree().unwrap()) as i32;
    let kos = koszul_complex(ring, &[f.clone(), g.clone()], 0)?;
    let one = PolyMatrix::identity(&FreeModule::new(vec![0]));
    let alpha = lift_chain_map(&kos, res_x, one)?;
    let len = res_x.len();
    let source = res_x.dualize(-ab);
    let target = kos.dualize(-ab);
    let maps = (0..=len)
        .map(|k| alpha.maps[len - k].transpose().shift(-ab))
        .collect();
    mapping_cone(&ChainMap { source, target, maps })
}

/// Links `X` by two forms of `I_X`. The residual is saturated whenever `I_X`
/// is, since `(f, g)` is unmixed.
pub fn link(ring: &Ring, spec: &LinkSpec) -> Result<Link> {
    let n = ring.pn();
    let fld = ring.field();
    let ideal: Vec<Poly> = spec.ideal.iter().filter(|g| !g.is_zero()).cloned().collect();
    expect_homogeneous(&ideal)?;
    if spec.r < 1 || spec.s < 1 {
        return Err(Error::Range(format!("link degrees ({}, {}) must be positive", spec.r, spec.s)));
    }
    let igb = gb_ideal(ring, &ideal, GbOptions::default())?;
    let (_, codim) = dim_codim(&igb);
    if codim != 2 {
        return Err(Error::Codimension { expected: 2, found: codim });
    }
    let pick = |given: &Option<Poly>, d: u32, name: &str| -> Result<Poly> {
        match given {
            Some(p) => {
                if p.degree() != Some(d) || !p.is_homogeneous() {
                    return Err(Error::Range(format!("{name} must be a form of degree {d}")));
                }
                if !igb.contains_poly(p) {
                    return Err(Error::Inconsistent(format!("{name} is not in the ideal")));
                }
                Ok(p.clone())
            }
            None => draw_form(ring, &ideal, d, spec.seed, &format!("link-{name}")),
        }
    };
    let f = pick(&spec.f, spec.r, "f")?;
    let g = pick(&spec.g, spec.s, "g")?;
    let j = vec![f.clone(), g.clone()];
    let jgb = gb_ideal(ring, &j, GbOptions::default())?;
    let (_, jc) = dim_codim(&jgb);
    if jc != 2 {
        // f, g is not a regular sequence
        return Err(Error::Codimension { expected: 2, found: jc });
    }
    let hd_x = HilbertData::from_gb(&igb);
    let source = InvariantSet::from_hilbert(&hd_x, n);
    if ideal.iter().all(|p| jgb.contains_poly(p)) {
        let one = vec![Poly::constant(1)];
        let hilbert = HilbertData::from_gb(&gb_ideal(ring, &one, GbOptions::default())?);
        return Ok(Link {
            ring: *ring,
            r: spec.r,
            s: spec.s,
            f,
            g,
            method: ResidualMethod::Unit,
            resolution: resolve_ideal(ring, &one)?,
            hilbert,
            raw_cone: None,
            cone: None,
            residual: InvariantSet {
                n,
                d: 0,
                pi: 0,
                chi: vec![0; source.chi.len()],
            },
            predicted: None,
            source,
            ideal: one,
            checks: Vec::new(),
        });
    }
    let (q, method) = residual_ideal(ring, &ideal, &j, &jgb, spec.seed)?;
    let mut res_ideal: Vec<Poly> = minimal_generators(ring, &q)?.iter().map(|p| p.monic(fld)).collect();
    res_ideal.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.lead_mono().cmp(&a.lead_mono())));
    let rgb = gb_ideal(ring, &res_ideal, GbOptions::default())?;
    let hilbert = HilbertData::from_gb(&rgb);
    let residual = InvariantSet::from_hilbert(&hilbert, n);
    let resolution = resolve_ideal(ring, &res_ideal)?;

    let (r, s) = (spec.r as i64, spec.s as i64);
    let mut checks = vec![
        Check::new("deg X + deg X' = rs", r * s, source.d + residual.d),
        Check::new(
            "2(π - π') = (r+s-4)(d - d')",
            (r + s - 4) * (source.d - residual.d),
            2 * (source.pi - residual.pi),
        ),
    ];
    let predicted = residual_invariants(&source, r, s).ok();
    if let Some(p) = &predicted {
        for (k, (a, b)) in p.chi.iter().zip(&residual.chi).enumerate() {
            let name = if k == 0 { "χ(O_X')".to_string() } else { format!("χ(O) of the {k}-fold section of X'") };
            checks.push(Check::new(name, *a, *b));
        }
    }
    let res_x = resolve_ideal(ring, &ideal)?;
    let (raw_cone, cone) = if res_x.len() == 2 {
        let raw = dual_mapping_cone(ring, &res_x, &f, &g)?;
        let min = minimalize(ring, &raw);
        let same = min.betti() == resolution.betti();
        checks.push(Check::new("dual mapping cone matches the residual resolution", 1, same as i64));
        (Some(raw), Some(min))
    } else {
        (None, None)
    };
    Ok(Link {
        ring: *ring,
        r: spec.r,
        s: spec.s,
        f,
        g,
        method,
        ideal: res_ideal,
        resolution,
        hilbert,
        raw_cone,
        cone,
        source,
        residual,
        predicted,
        checks,
    })
}

/// The reducible 3-fold `Z = Y ∪ Π_1 ∪ .. ∪ Π_5 ⊂ P^5`: `Y` the Segre scroll
/// `P^1 × P^2` (2×2 minors of `[[x0,x1,x2],[x3,x4,x5]]`) and `Π_i` the span
/// of `P^1 × L_i` for lines `L_i = {u_i · a = 0}` of `P^2`.
#[derive(Clone, Debug)]
pub struct ZConfig {
    pub ring: Ring,
    pub scroll: Vec<Poly>,
    /// Normal vectors `u_i` of the lines `L_i`.
    pub normals: Vec<[u32; 3]>,
    /// Linear ideals of the 3-planes `Π_i`.
    pub planes: Vec<Vec<Poly>>,
    /// `((i, j), I(L_ij))` for `i < j`, with `L_ij = Π_i ∩ Π_j = P^1 × {p_ij}`.
    pub lines: Vec<((usize, usize), Vec<Poly>)>,
    /// Minimal generators of `I_Z`.
    pub ideal: Vec<Poly>,
    pub hilbert: HilbertData,
    pub degree: i64,
}

impl ZConfig {
    /// `h^0(J_Z(t))` for `t` in `lo..=hi`.
    pub fn h0_ladder(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|t| self.ring.dim(t) as i64 - self.hilbert.hf(t)).collect()
    }

    /// `p_ij = u_i × u_j`, the intersection point of `L_i` and `L_j`.
    pub fn point(&self, i: usize, j: usize) -> [u32; 3] {
        cross(self.ring, self.normals[i], self.normals[j])
    }
}

fn cross(ring: Ring, u: [u32; 3], v: [u32; 3]) -> [u32; 3] {
    let f = ring.field();
    let m = |a: u32, b: u32, c: u32, d: u32| f.sub(f.mul(a, b), f.mul(c, d));
    [m(u[1], v[2], u[2], v[1]), m(u[2], v[0], u[0], v[2]), m(u[0], v[1], u[1], v[0])]
}

fn det3(ring: Ring, a: [u32; 3], b: [u32; 3], c: [u32; 3]) -> u32 {
    let f = ring.field();
    let x = cross(ring, b, c);
    (0..3).fold(0, |s, k| f.add(s, f.mul(a[k], x[k])))
}

fn linear_form(ring: &Ring, u: [u32; 3], offset: usize) -> Poly {
    Poly::from_terms(ring.field(), (0..3).map(|k| (Mono::var(offset + k), u[k])).collect())
}

/// Ideal of the Segre scroll `P^1 × P^2 ⊂ P^5`.
pub fn segre_scroll(ring: &Ring) -> Vec<Poly> {
    let f = ring.field();
    let x = ring.vars();
    let mut out = Vec::new();
    for a in 0..3 {
        for b in a + 1..3 {
            out.push(x[a].mul(&x[3 + b], f).sub(&x[b].mul(&x[3 + a], f), f));
        }
    }
    out
}

/// Builds `Z` from five seeded lines. No two lines may coincide and no three
/// may be concurrent; otherwise a genericity error asks for another seed.
pub fn build_z_config(ring: &Ring, seed: u64) -> Result<ZConfig> {
    if ring.pn() != 5 {
        return Err(Error::Ambient(format!("Z lives on P^5, not P^{}", ring.pn())));
    }
    let p = ring.field().p();
    let mut rng = stream(seed, "z-lines");
    let normals: Vec<[u32; 3]> = (0..5)
        .map(|_| [rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p)])
        .collect();
    for i in 0..5 {
        for j in i + 1..5 {
            if cross(*ring, normals[i], normals[j]) == [0, 0, 0] {
                return Err(Error::Genericity {
                    attempts: 1,
                    reason: format!("lines {i} and {j} coincide"),
                });
            }
            for k in j + 1..5 {
                if det3(*ring, normals[i], normals[j], normals[k]) == 0 {
                    return Err(Error::Genericity {
                        attempts: 1,
                        reason: format!("lines {i}, {j}, {k} are concurrent"),
                    });
                }
            }
        }
    }
    let planes: Vec<Vec<Poly>> = normals
        .iter()
        .map(|&u| vec![linear_form(ring, u, 0), linear_form(ring, u, 3)])
        .collect();
    let mut lines = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            let mut l = planes[i].clone();
            l.extend(planes[j].iter().cloned());
            lines.push(((i, j), reduced_gb(ring, &l)?));
        }
    }
    let scroll = segre_scroll(ring);
    let mut acc = scroll.clone();
    for pl in &planes {
        acc = intersect(ring, &acc, pl)?;
    }
    let fld = ring.field();
    let mut ideal: Vec<Poly> = minimal_generators(ring, &acc)?.iter().map(|g| g.monic(fld)).collect();
    ideal.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.lead_mono().cmp(&a.lead_mono())));
    let hilbert = HilbertData::from_gb(&gb_ideal(ring, &ideal, GbOptions::default())?);
    let degree = hilbert.degree;
    Ok(ZConfig {
        ring: *ring,
        scroll,
        normals,
        planes,
        lines,
        ideal,
        hilbert,
        degree,
    })
}

/// `h^{n-1-i}(J_X(t)) = h^i(J_X'(r+s-n-1-t))` for `1 <= i <= n-2`, over a
/// window of `t` wide enough to cover both modules. One check per `i`
/// counting the twists where the two sides differ.
pub fn rao_mirror(x: &SchemeData, xp: &SchemeData, r: u32, s: u32) -> Vec<Check> {
    let n = x.ring.pn();
    let rs = (r + s) as i64;
    let w = rs + n as i64 + 2;
    let mut out = Vec::new();
    for i in 1..=n.saturating_sub(2) {
        let mut lhs_total = 0;
        let mut rhs_total = 0;
        let mut bad = 0;
        for t in -w..=w {
            let a = x.h(n - 1 - i, t);
            let b = xp.h(i, rs - n as i64 - 1 - t);
            lhs_total += a;
            rhs_total += b;
            if a != b {
                bad += 1;
            }
        }
        out.push(Check::new(
            format!(
                "twists where h^{}(J_X(t)) != h^{i}(J_X'(r+s-n-1-t)) (totals {lhs_total}, {rhs_total})",
                n - 1 - i
            ),
            0,
            bad,
        ));
    }
    out
}

/// Links `X` to `X'` and back by the same forms, then compares the ideals and
/// the intermediate cohomology of the pair.
#[derive(Clone, Debug)]
pub struct DoubleLinkAudit {
    pub first: Link,
    pub back: Link,
    pub checks: Vec<Check>,
}

impl DoubleLinkAudit {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }

    pub fn report(&self) -> String {
        let mut out = self.first.report();
        for c in &self.checks {
            out.push_str(&format!("{c}\n"));
        }
        out
    }
}

pub fn double_link_audit(ring: &Ring, ideal: &[Poly], r: u32, s: u32, seed: u64) -> Result<DoubleLinkAudit> {
    let first = link(ring, &LinkSpec::new(ideal, r, s, seed))?;
    if first.is_unit() {
        return Err(Error::Range("the ideal is itself a complete intersection of type (r, s)".into()));
    }
    let spec = LinkSpec::new(&first.ideal, r, s, seed).with_forms(first.f.clone(), first.g.clone());
    let back = link(ring, &spec)?;
    let same = reduced_gb(ring, ideal)? == reduced_gb(ring, &back.ideal)?;
    let mut checks = vec![Check::new("(f,g) : ((f,g) : I) = I", 1, same as i64)];
    let x = SchemeData::new(ring, ideal)?;
    let xp = SchemeData::new(ring, &first.ideal)?;
    checks.extend(rao_mirror(&x, &xp, r, s));
    Ok(DoubleLinkAudit { first, back, checks })
}

/// `P^3 = V(x4, x5) ⊂ P^5` linked `(2, 3)` to a Castelnuovo 3-fold, which is
/// linked `(4, 4)` to a 3-fold of degree 11 and sectional genus 14.
pub fn castelnuovo_chain(ring: &Ring, seed: u64) -> Result<(Link, Link)> {
    if ring.pn() != 5 {
        return Err(Error::Ambient(format!("the chain lives on P^5, not P^{}", ring.pn())));
    }
    let p3 = vec![ring.var(4), ring.var(5)];
    let a = link(ring, &LinkSpec::new(&p3, 2, 3, seed))?;
    let b = link(ring, &LinkSpec::new(&a.ideal, 4, 4, seed))?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn ring(n: usize) -> Ring {
        Ring::projective(n, Fp::default()).unwrap()
    }

    #[test]
    fn plane_by_quadrics_gives_scroll() {
        let r = ring(5);
        let p3 = vec![r.var(4), r.var(5)];
        let l = link(&r, &LinkSpec::new(&p3, 2, 2, 3)).unwrap();
        assert_eq!(l.degree_genus(), (3, 0));
        assert_eq!(l.ideal.len(), 3);
        assert!(l.all_pass(), "{}", l.report());
        assert!(l.cone.is_some());
    }

    #[test]
    fn complete_intersection_has_empty_residual() {
        let r = ring(4);
        let f = r.var(0).mul(&r.var(1), r.field());
        let g = r.var(2).pow(3, r.field());
        let l = link(&r, &LinkSpec::new(&[f.clone(), g.clone()], 2, 3, 1).with_forms(f, g)).unwrap();
        assert!(l.is_unit());
    }

    #[test]
    fn dependent_forms_are_rejected() {
        let r = ring(4);
        let x = r.vars();
        let f = x[0].mul(&x[1], r.field());
        let g = x[0].mul(&x[2], r.field());
        let spec = LinkSpec::new(&[x[0].clone(), x[1].clone()], 2, 2, 1).with_forms(f, g);
        assert!(matches!(link(&r, &spec), Err(Error::Codimension { .. })));
    }

    #[test]
    fn cross_product_is_on_both_lines() {
        let r = ring(5);
        let z = build_z_config(&r, 1).unwrap();
        let f = r.field();
        let p = z.point(0, 1);
        for i in [0, 1] {
            let u = z.normals[i];
            let dot = (0..3).fold(0, |s, k| f.add(s, f.mul(u[k], p[k])));
            assert_eq!(dot, 0);
        }
    }
}

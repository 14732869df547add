//! End-to-end acceptance run: one PASS/FAIL line per criterion. Exits
//! nonzero when a criterion deviates from its recorded outcome.

use clap::Parser;
use codim2::cli::{dispatch, Output, RunConfig};
use codim2::factory::generic_module;
use codim2::groebner::ideal::{hilbert_of, intersect, saturate};
use codim2::invariants::{
    adjoint_dimension, catalog, catalog_audit, residual_invariants, segre_pencil_defaults, threefold_k_products,
    InvariantSet, Verdict,
};
use codim2::liaison::{build_z_config, castelnuovo_chain, double_link_audit, link, Link, LinkSpec};
use codim2::parse::parse_ideal;
use codim2::resolution::{resolve_ideal, BettiTable, SchemeData};
use codim2::smoothness::{check_smooth, contains_scheme, SmoothOptions, SmoothVerdict};
use codim2::{Fp, Poly, Ring};
use std::time::{Duration, Instant};

/// Outcome of one criterion: failed sub-checks, and notes for the line.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, found: T) {
        if expected != found {
            self.failures.push(format!("{what}: expected {expected:?}, found {found:?}"));
        }
    }

    fn ok(&mut self, what: &str, cond: bool) {
        if !cond {
            self.failures.push(what.to_string());
        }
    }

    fn within(&mut self, budget: Duration, t: Instant) {
        let e = t.elapsed();
        self.notes.push(format!("{:.1}s", e.as_secs_f64()));
        self.ok(&format!("runtime within {}s", budget.as_secs()), e <= budget);
    }
}

fn cli(args: &[&str]) -> codim2::Result<Output> {
    let cfg = RunConfig::try_parse_from(std::iter::once("codim2").chain(args.iter().copied()))
        .map_err(|e| codim2::Error::Range(e.to_string()))?;
    dispatch(&cfg)
}

fn triples(t: &[(usize, i32, usize)]) -> BettiTable {
    BettiTable::from_triples(t)
}

fn p4() -> Ring {
    Ring::projective(4, Fp::default()).unwrap()
}

fn p5() -> Ring {
    Ring::projective(5, Fp::default()).unwrap()
}

fn bordiga() -> codim2::Result<Outcome> {
    let t = Instant::now();
    let mut o = Outcome::default();
    let out = cli(&["construct", "--recipe", "bordiga", "--smooth"])?;
    o.eq("degree", Some("6"), out.get("degree"));
    o.eq("genus", Some("3"), out.get("genus"));
    o.eq("generators", Some("4 of degrees [3, 3, 3, 3]"), out.get("generators"));
    o.eq("smoothness", Some("smooth"), out.get("smoothness"));
    o.eq("omega_X(1)", Some("3O <- 4O(-1)"), out.get("omega_X(1) presentation"));
    o.ok("construction checks", out.all_pass());
    o.within(Duration::from_secs(60), t);
    Ok(o)
}

fn generic_tables() -> codim2::Result<Outcome> {
    let t = Instant::now();
    let mut o = Outcome::default();
    let want = triples(&[(0, -4, 1), (1, -2, 18), (2, -1, 52), (3, 0, 60), (4, 1, 24), (4, 2, 10), (5, 3, 12), (6, 4, 3)]);
    let mut hits = 0;
    for seed in 1..=5 {
        let m = generic_module(&p5(), &[1, 6, 3], -4, seed)?;
        if m.resolution()?.betti() == want {
            hits += 1;
        }
    }
    o.notes.push(format!("(1,6,3): {hits}/5 seeds"));
    o.ok("(1,6,3) table for at least 3 of 5 seeds", hits >= 3);
    let r4 = Ring::new(4, Fp::default())?;
    let m = generic_module(&r4, &[1, 4, 3], -2, 1)?;
    let want = triples(&[(0, -2, 1), (1, 0, 7), (2, 1, 8), (2, 2, 3), (3, 3, 8), (4, 4, 3)]);
    o.eq("(1,4,3) table", want, m.resolution()?.betti());
    o.within(Duration::from_secs(300), t);
    Ok(o)
}

fn threefold_d18() -> codim2::Result<Outcome> {
    let t = Instant::now();
    let mut o = Outcome::default();
    let out = cli(&["construct", "--recipe", "d18-threefold", "--smooth"])?;
    o.eq("betti", Some(triples(&[(0, 6, 10), (1, 7, 12), (2, 8, 3)])), out.betti_table());
    o.eq("degree", Some("18"), out.get("degree"));
    o.eq("genus", Some("35"), out.get("genus"));
    o.eq("sliced smoothness", Some("smooth"), out.get("smoothness"));
    o.ok("construction checks", out.all_pass());
    let dir = std::env::temp_dir().join(format!("codim2-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("x18.txt");
    std::fs::write(&path, out.ideal_file().unwrap_or_default())?;
    let inv = cli(&["invariants", "--ideal", path.to_str().unwrap()])?;
    o.eq("(K+H)^2 K", Some("-4"), inv.get("(K+H)^2 K"));
    let _ = std::fs::remove_dir_all(&dir);
    o.within(Duration::from_secs(3600), t);
    Ok(o)
}

fn surface_d11() -> codim2::Result<Outcome> {
    let t = Instant::now();
    let mut o = Outcome::default();
    let out = cli(&["construct", "--recipe", "d11-surface"])?;
    o.eq("generators", Some("12 of degrees [5, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6]"), out.get("generators"));
    o.eq("degree", Some("11"), out.get("degree"));
    o.eq("genus", Some("11"), out.get("genus"));
    o.eq("chi", Some("[3]"), out.get("chi"));
    o.eq("K2", Some("1"), out.get("K2"));
    o.ok("construction checks", out.all_pass());
    o.within(Duration::from_secs(1800), t);
    Ok(o)
}

/// The degree-17 3-fold and its (5,6) residual, shared with the liaison
/// criterion.
struct Pipeline {
    x: Link,
    xp: Link,
}

fn reducible_link(store: &mut Option<Pipeline>) -> codim2::Result<Outcome> {
    let t = Instant::now();
    let mut o = Outcome::default();
    let ring = p5();
    let z = build_z_config(&ring, 1)?;
    o.eq("deg Z", 8, z.degree);
    o.eq("h0 J_Z(3..5)", vec![0, 1, 26], z.h0_ladder(3, 5));
    let x = link(&ring, &LinkSpec::new(&z.ideal, 5, 5, 1))?;
    o.eq("(d, π) of X", (17, 32), x.degree_genus());
    o.eq("betti of X", triples(&[(0, 5, 2), (0, 6, 5), (1, 7, 8), (2, 8, 2)]), x.ideal_betti());
    o.ok("link checks for X", x.all_pass());
    let mut on = 0;
    for (_, l) in &z.lines {
        on += contains_scheme(&ring, &x.ideal, l)? as usize;
    }
    o.eq("lines L_ij on X", 10, on);
    let s = &x.residual;
    let p = threefold_k_products(s.d, s.pi, s.chi[0], s.chi[1]);
    o.eq("K products of X", (28, 18, -52), (p.h2k, p.hk2, p.k3));
    let sm = check_smooth(&ring, &x.ideal, &SmoothOptions::sliced(1, 1))?;
    o.eq("sliced smoothness of X", SmoothVerdict::Smooth, sm.verdict);
    let xp = link(&ring, &LinkSpec::new(&x.ideal, 5, 6, 1))?;
    o.eq("(d, π) of X'", (13, 18), xp.degree_genus());
    o.eq(
        "betti of X'",
        triples(&[(0, 5, 2), (0, 6, 19), (1, 7, 50), (2, 8, 48), (3, 9, 22), (4, 10, 4)]),
        xp.ideal_betti(),
    );
    o.ok("link checks for X'", xp.all_pass());
    let s = &xp.residual;
    let p = threefold_k_products(s.d, s.pi, s.chi[0], s.chi[1]);
    o.eq("K products of X'", (8, -2, -4), (p.h2k, p.hk2, p.k3));
    o.eq("dim |K'+H'|", 9, adjoint_dimension(&ring, &xp.ideal)?);
    o.within(Duration::from_secs(7200), t);
    // The presentation O(1) + 18O of ω_X(1) has 24 sections, so |K+H| has
    // projective dimension 23, the value the image in P^23 also shows.
    let adj = adjoint_dimension(&ring, &x.ideal)?;
    o.eq("dim |K+H|", 24, adj);
    o.notes.push(format!("dim |K+H| = {adj} = h0(ω_X(1)) - 1"));
    *store = Some(Pipeline { x, xp });
    Ok(o)
}

fn pencils() -> codim2::Result<Outcome> {
    let mut o = Outcome::default();
    let sp = segre_pencil_defaults(17)?;
    o.eq("(H S^2, S_i^2 S_j, S^3)", (-5, -4, -16), (sp.hs2, sp.s2s, sp.s3));
    o.eq("(5H - ΣS)^3", 120, sp.full_cube(5));
    Ok(o)
}

fn liaison_relations(store: &Option<Pipeline>) -> codim2::Result<Outcome> {
    let mut o = Outcome::default();
    let a = residual_invariants(&InvariantSet::threefold(11, 14, 0, 8), 4, 4)?;
    o.eq("(11,14) by (4,4)", (5, 2), (a.d, a.pi));
    let b = residual_invariants(&InvariantSet::threefold(17, 32, 0, 24), 5, 6)?;
    o.eq("(17,32) by (5,6)", (13, 18), (b.d, b.pi));
    let ring = p5();
    let (_, x11) = castelnuovo_chain(&ring, 1)?;
    o.eq("executed chain end", (11, 14), x11.degree_genus());
    let back = link(&ring, &LinkSpec::new(&x11.ideal, 4, 4, 2))?;
    o.eq("executed (4,4) link of (11,14)", (5, 2), back.degree_genus());
    o.ok("link checks", back.all_pass());
    match store {
        Some(p) => {
            o.eq("executed (5,6) source", (17, 32), p.x.degree_genus());
            o.eq("executed (5,6) residual", (13, 18), p.xp.degree_genus());
        }
        None => o.ok("degree-17 pipeline available", false),
    }
    Ok(o)
}

fn catalog_edges() -> codim2::Result<Outcome> {
    let mut o = Outcome::default();
    let rep = catalog_audit(&catalog());
    o.eq("failing checks", 0, rep.count(Verdict::Fail));
    o.ok(
        "only the misprint candidates are flagged",
        rep.lines.iter().filter(|l| l.verdict == Verdict::Flagged).all(|l| l.label == "X12" || l.check.ends_with("as printed")),
    );
    o.notes.push(format!("{} edges pass both relations", rep.passing_edges()));
    Ok(o)
}

fn sample_ideals() -> Vec<(Ring, Vec<Poly>)> {
    let p3 = Ring::projective(3, Fp::default()).unwrap();
    let x = p3.vars();
    let skew = intersect(&p3, &[x[0].clone(), x[1].clone()], &[x[2].clone(), x[3].clone()]).unwrap();
    let cubic = parse_ideal(&p3, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let r = p4();
    let ci = parse_ideal(&r, "x0^2 + x1*x2 + x3*x4, x0^3 + x1^3 - x2^3 + x3*x4^2").unwrap();
    let scroll = parse_ideal(&r, "x0*x3 - x1*x2, x0*x4 - x1*x3, x2*x4 - x3^2").unwrap();
    vec![(p3, skew), (p3, cubic), (r, ci), (r, scroll)]
}

fn properties() -> codim2::Result<Outcome> {
    let mut o = Outcome::default();
    for (k, (ring, gens)) in sample_ideals().into_iter().enumerate() {
        let res = resolve_ideal(&ring, &gens)?;
        o.ok(&format!("d^2 = 0 for sample {k}"), res.is_complex());
        o.ok(&format!("minimality for sample {k}"), res.is_minimal());
        let b = res.betti();
        o.eq(&format!("numerator for sample {k}"), hilbert_of(&ring, &gens)?.numerator, b.numerator());
        let c = -(ring.nvars() as i32);
        o.eq(&format!("double dual for sample {k}"), b.clone(), b.dual(b.length(), c).dual(b.length(), c));
        o.eq(&format!("transpose-reverse for sample {k}"), b.dual(b.length(), -c), res.dualize(c).betti());
        let sd = SchemeData::new(&ring, &gens)?;
        let t = sd.cohomology_table(-3, 5);
        o.ok(&format!("Euler characteristics for sample {k}"), (-3..=5).all(|m| t.euler(m) == sd.expected_euler(m)));
        let s = saturate(&ring, &gens)?;
        o.eq(&format!("saturation idempotence for sample {k}"), s.clone(), saturate(&ring, &s)?);
    }
    let p3 = Ring::projective(3, Fp::default())?;
    let cubic = parse_ideal(&p3, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2")?;
    o.ok("double-link identity (2,2)", double_link_audit(&p3, &cubic, 2, 2, 1)?.all_pass());
    let x = p3.vars();
    let skew = intersect(&p3, &[x[0].clone(), x[1].clone()], &[x[2].clone(), x[3].clone()])?;
    o.ok("double-link identity (2,3)", double_link_audit(&p3, &skew, 2, 3, 1)?.all_pass());
    Ok(o)
}

fn main() {
    let mut store = None;
    // (number, title, result, sub-check expected to fail)
    let mut rows: Vec<(usize, &str, codim2::Result<Outcome>, Option<&str>)> = vec![
        (1, "determinantal surface of degree 6", bordiga(), None),
        (2, "generic module Betti tables", generic_tables(), None),
        (3, "3-fold of degree 18", threefold_d18(), None),
        (4, "surface of degree 11", surface_d11(), None),
    ];
    let five = reducible_link(&mut store);
    rows.push((5, "reducible link to degree 17 and 13", five, Some("dim |K+H|")));
    rows.push((6, "five pencils", pencils(), None));
    rows.push((7, "liaison relations", liaison_relations(&store), None));
    rows.push((8, "catalog audit", catalog_edges(), None));
    rows.push((9, "property suites", properties(), None));

    let mut unexpected = 0;
    for (n, title, res, known) in rows {
        match res {
            Ok(o) => {
                let pass = o.failures.is_empty();
                let tag = if pass { "PASS" } else { "FAIL" };
                let mut detail = o.failures.clone();
                detail.extend(o.notes.iter().cloned());
                println!("{tag} {n} {title}{}{}", if detail.is_empty() { "" } else { ": " }, detail.join("; "));
                let as_recorded = match known {
                    None => pass,
                    Some(k) => o.failures.len() == 1 && o.failures[0].starts_with(k),
                };
                if !as_recorded {
                    unexpected += 1;
                }
            }
            Err(e) => {
                println!("FAIL {n} {title}: error {e}");
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria deviate from their recorded outcome");
        std::process::exit(1);
    }
}

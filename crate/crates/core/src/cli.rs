//! Run configuration and verbs of the `codim2` binary.
//!
//! Every verb produces an [`Output`] record, rendered as text or JSON. With
//! `--out DIR` the rendering is also written to `DIR/report.{txt,json}`,
//! along with `ideal.txt`, `betti.json` and `cohomology.json` when present.

use crate::determinantal::{
    bordiga, canonical_module, construct_variety, surface_d11, threefold_d13, threefold_d17, threefold_d18, with_retries, BundleMap,
    BundleRep, ConstructOptions, Construction,
};
use crate::error::{Error, Result};
use crate::factory::{dual_finite, four_lines_module, generic_module, koszul_module};
use crate::field::Fp;
use crate::groebner::hilbert::HilbertData;
use crate::groebner::ideal::{hilbert_of, quotient, reduced_gb, saturate};
use crate::groebner::{gb_ideal, GbOptions};
use crate::invariants::{
    adjoint_dimension, catalog, catalog_audit, segre_pencil_defaults, surface_k2, threefold_k_products, InvariantSet,
};
use crate::liaison::{build_z_config, double_link_audit, link, Check, LinkSpec};
use crate::parse::{parse_ideal, parse_matrix, parse_poly, ring_for};
use crate::poly::{Poly, Ring};
use crate::resolution::{
    ideal_presentation, module_hilbert, resolve, BettiTable, CohomologyTable, FreeResolution, SchemeData,
};
use crate::smoothness::{check_smooth, contains_scheme, SmoothOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug, Clone)]
#[command(name = "codim2", version, about = "Codimension-2 subvarieties of projective space from syzygies")]
pub struct RunConfig {
    /// Characteristic of the prime field.
    #[arg(long = "char", global = true, env = "CODIM2_CHAR", default_value_t = crate::field::DEFAULT_CHAR)]
    pub characteristic: u32,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for report, ideal and table files.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seeds tried before a genericity failure is reported.
    #[arg(long, global = true, default_value_t = 5)]
    pub retries: usize,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// Generic `3O(-1) -> 4O` on `P^4`.
    Bordiga,
    /// Degree-18 3-fold on `P^5` from the generic `(1,6,3)` module.
    #[value(name = "d18-threefold")]
    D18Threefold,
    /// Surface with `d = π = 11` on `P^4` from the four-lines module.
    #[value(name = "d11-surface")]
    D11Surface,
    /// Degree-17 3-fold on `P^5`.
    #[value(name = "d17-threefold")]
    D17Threefold,
    /// Degree-13 3-fold on `P^5`.
    #[value(name = "d13-threefold")]
    D13Threefold,
}

impl Recipe {
    fn ambient(self) -> usize {
        match self {
            Recipe::Bordiga | Recipe::D11Surface => 4,
            _ => 5,
        }
    }
}

/// An ideal from a file, on `vars` variables (default: the file's `vars`
/// line, else the highest variable mentioned).
#[derive(Args, Debug, Clone)]
pub struct IdealArg {
    /// File with one generator per line.
    #[arg(long)]
    pub ideal: PathBuf,
    /// Number of variables.
    #[arg(long)]
    pub vars: Option<usize>,
}

/// An ideal or a presentation matrix.
#[derive(Args, Debug, Clone)]
pub struct InputArg {
    /// File with one generator per line.
    #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
    pub ideal: Option<PathBuf>,
    /// Presentation matrix of a module (its cokernel is used).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Number of variables.
    #[arg(long)]
    pub vars: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Reduced Gröbner basis.
    Gb(IdealArg),
    /// Normal forms modulo an ideal.
    Nf {
        #[command(flatten)]
        input: IdealArg,
        /// Polynomial to reduce; repeat for several.
        #[arg(long, required = true)]
        poly: Vec<String>,
    },
    /// Ideal quotient `I : J`.
    Quotient {
        #[command(flatten)]
        input: IdealArg,
        /// File with the generators of `J`.
        #[arg(long)]
        by: PathBuf,
    },
    /// Saturation by the irrelevant ideal.
    Saturate(IdealArg),
    /// Hilbert function, polynomial, degree and genus.
    Hilbert {
        #[command(flatten)]
        input: InputArg,
        /// Degrees `lo,hi` to tabulate.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_values_t = [0, 10])]
        window: Vec<i64>,
    },
    /// Minimal free resolution with its differentials.
    Resolve(InputArg),
    /// Betti table of the minimal free resolution.
    Betti(InputArg),
    /// `h^i(J_X(m))` for a saturated ideal.
    Cohomology {
        #[command(flatten)]
        input: IdealArg,
        /// Twists `lo,hi` to tabulate.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_values_t = [-3, 6])]
        window: Vec<i64>,
    },
    /// Finite-length modules: generic with given Hilbert function, Koszul
    /// syzygy modules, the four-lines module.
    MakeModule {
        /// Hilbert function of a generic module, e.g. `1,6,3`.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["koszul", "four_lines"])]
        hf: Option<Vec<i64>>,
        /// Syzygy module `Syz_i` of the residue field.
        #[arg(long)]
        koszul: Option<usize>,
        /// The module of four general lines in a hyperplane of `P^4`.
        #[arg(long)]
        four_lines: bool,
        /// Number of variables.
        #[arg(long, default_value_t = 6)]
        vars: usize,
        /// Degree of the first graded piece (generic modules) or twist
        /// (Koszul modules).
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        start: i32,
        /// Replace a generic module by its dual.
        #[arg(long)]
        dual: bool,
    },
    /// Degeneracy locus of a bundle map.
    Construct {
        /// Built-in bundle map.
        #[arg(long, conflicts_with = "from_map", required_unless_present = "from_map")]
        recipe: Option<Recipe>,
        /// Matrix file of a map between sums of line bundles.
        #[arg(long)]
        from_map: Option<PathBuf>,
        /// Ambient dimension, checked against the recipe.
        #[arg(long)]
        n: Option<usize>,
        /// Skip the mapping-cone resolution of coker φ.
        #[arg(long)]
        no_cone: bool,
        /// Also run the smoothness check (sliced from degree 13 on).
        #[arg(long)]
        smooth: bool,
    },
    /// Residual scheme in a complete intersection.
    Link {
        #[command(flatten)]
        input: IdealArg,
        /// Degrees `r,s` of the complete intersection.
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        degrees: Vec<u32>,
        /// File with the two forms `f`, `g` (random members otherwise).
        #[arg(long)]
        forms: Option<PathBuf>,
        /// Link back by the same forms and compare intermediate cohomology.
        #[arg(long)]
        audit: bool,
    },
    /// The degree-8 union of a Segre scroll and five 3-planes in `P^5`.
    BuildZ {
        /// Also link it by two general quintics.
        #[arg(long)]
        link: bool,
    },
    /// Double point formulas and intersection numbers.
    Invariants {
        /// Surface in `P^4` given as `d,π,χ`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        surface: Option<Vec<i64>>,
        /// 3-fold in `P^5` given as `d,π,χ_X,χ_S`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        threefold: Option<Vec<i64>>,
        /// Intersection table of five pencils `|H - S_i|` on a 3-fold of
        /// this degree.
        #[arg(long)]
        pencils: Option<i64>,
        /// Read `d, π, χ` from the Hilbert polynomial of an ideal.
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Number of variables of the ideal.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Consistency audit of the catalog of 3-folds in `P^5`.
    CatalogAudit,
    /// Jacobian criterion.
    Smooth {
        #[command(flatten)]
        input: IdealArg,
        /// Check the scheme itself rather than a hyperplane section.
        #[arg(long)]
        full: bool,
        /// Codimension of the slicing linear space.
        #[arg(long, default_value_t = 1)]
        slice: usize,
    },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Gb(_) => "gb",
            Verb::Nf { .. } => "nf",
            Verb::Quotient { .. } => "quotient",
            Verb::Saturate(_) => "saturate",
            Verb::Hilbert { .. } => "hilbert",
            Verb::Resolve(_) => "resolve",
            Verb::Betti(_) => "betti",
            Verb::Cohomology { .. } => "cohomology",
            Verb::MakeModule { .. } => "make-module",
            Verb::Construct { .. } => "construct",
            Verb::Link { .. } => "link",
            Verb::BuildZ { .. } => "build-z",
            Verb::Invariants { .. } => "invariants",
            Verb::CatalogAudit => "catalog-audit",
            Verb::Smooth { .. } => "smooth",
        }
    }
}

/// One PASS/FAIL line of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl From<&Check> for CheckLine {
    fn from(c: &Check) -> CheckLine {
        CheckLine {
            name: c.name.clone(),
            pass: c.pass(),
            detail: format!("expected {}, found {}", c.expected, c.found),
        }
    }
}

/// Everything a verb reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Output {
    pub verb: String,
    /// Seed actually used (after genericity retries).
    pub seed: u64,
    /// Ordered `key: value` lines.
    pub fields: Vec<(String, String)>,
    /// Number of variables and generators of the resulting ideal.
    pub vars: Option<usize>,
    pub ideal: Option<Vec<String>>,
    /// `(i, j, β_ij)` triples.
    pub betti: Option<Vec<(usize, i32, usize)>>,
    pub cohomology: Option<CohomologyTable>,
    pub checks: Vec<CheckLine>,
    /// Titled free-text blocks.
    pub blocks: Vec<(String, String)>,
}

impl Output {
    fn new(verb: &str, seed: u64) -> Output {
        Output {
            verb: verb.to_string(),
            seed,
            ..Output::default()
        }
    }

    fn field(&mut self, k: &str, v: impl ToString) {
        self.fields.push((k.to_string(), v.to_string()));
    }

    fn set_ideal(&mut self, ring: &Ring, gens: &[Poly]) {
        self.vars = Some(ring.nvars());
        self.ideal = Some(gens.iter().map(|g| ring.fmt_poly(g)).collect());
    }

    fn set_betti(&mut self, b: &BettiTable) {
        self.betti = Some(b.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect());
    }

    fn block(&mut self, title: &str, body: impl Into<String>) {
        self.blocks.push((title.to_string(), body.into()));
    }

    fn check(&mut self, c: &Check) {
        self.checks.push(c.into());
    }

    pub fn betti_table(&self) -> Option<BettiTable> {
        self.betti.as_ref().map(|b| BettiTable::from_triples(b))
    }

    pub fn get(&self, k: &str) -> Option<&str> {
        self.fields.iter().find(|(a, _)| a == k).map(|(_, v)| v.as_str())
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The ideal in the ideal-file format.
    pub fn ideal_file(&self) -> Option<String> {
        let gens = self.ideal.as_ref()?;
        let mut s = format!("vars {}\n", self.vars.unwrap_or(0));
        for g in gens {
            s.push_str(g);
            s.push('\n');
        }
        Some(s)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "verb: {}", self.verb);
        let _ = writeln!(s, "seed: {}", self.seed);
        for (k, v) in &self.fields {
            let _ = writeln!(s, "{k}: {v}");
        }
        if let Some(i) = self.ideal_file() {
            let _ = write!(s, "ideal:\n{i}");
        }
        if let Some(b) = self.betti_table() {
            let _ = write!(s, "betti:\n{}", b.fmt_grid());
        }
        if let Some(c) = &self.cohomology {
            let _ = write!(s, "cohomology:\n{}", c.fmt_grid());
        }
        for (t, b) in &self.blocks {
            let _ = write!(s, "{t}:\n{b}");
            if !b.ends_with('\n') {
                s.push('\n');
            }
        }
        for c in &self.checks {
            let v = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{v} {}: {}", c.name, c.detail);
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output json")
    }

    pub fn from_json(s: &str) -> Result<Output> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Text => self.render_text(),
            Format::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
        }
    }

    /// Writes the report and the artifacts it carries into `dir`.
    pub fn write_files(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.txt"), self.render_text())?;
        std::fs::write(dir.join("report.json"), self.to_json())?;
        if let Some(i) = self.ideal_file() {
            std::fs::write(dir.join("ideal.txt"), i)?;
        }
        if let Some(b) = self.betti_table() {
            std::fs::write(dir.join("betti.json"), b.to_json())?;
        }
        if let Some(c) = &self.cohomology {
            std::fs::write(dir.join("cohomology.json"), c.to_json())?;
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load_ideal(f: Fp, path: &Path, vars: Option<usize>) -> Result<(Ring, Vec<Poly>)> {
    let text = read(path)?;
    let ring = ring_for(&text, vars, f)?;
    let gens = parse_ideal(&ring, &text)?;
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(ring.fmt_poly(g)));
    }
    Ok((ring, gens))
}

/// The presentation matrix of the input (`R <- ⊕R(-d_j)` for an ideal).
fn load_input(f: Fp, input: &InputArg) -> Result<(Ring, crate::module::PolyMatrix, Option<Vec<Poly>>)> {
    match (&input.ideal, &input.matrix) {
        (Some(p), _) => {
            let (ring, gens) = load_ideal(f, p, input.vars)?;
            let pres = ideal_presentation(&ring, &gens)?;
            Ok((ring, pres, Some(gens)))
        }
        (None, Some(p)) => {
            let text = read(p)?;
            let ring = ring_for(&text, input.vars, f)?;
            Ok((ring, parse_matrix(&ring, &text)?, None))
        }
        (None, None) => Err(Error::Range("give --ideal or --matrix".into())),
    }
}

fn window(w: &[i64]) -> Result<(i64, i64)> {
    match w {
        [lo, hi] if lo <= hi => Ok((*lo, *hi)),
        _ => Err(Error::Range(format!("window {w:?} must be lo,hi with lo <= hi"))),
    }
}

fn hilbert_fields(out: &mut Output, hd: &HilbertData, n: usize, lo: i64, hi: i64) {
    out.field("hilbert function", format!("{:?} for t = {lo}..{hi}", hd.hf_window(lo, hi)));
    out.field("hilbert polynomial", hd.hp_string());
    out.field("dimension", hd.projective_dim());
    out.field("degree", hd.degree);
    if hd.dim >= 2 {
        let inv = InvariantSet::from_hilbert(hd, n);
        out.field("genus", inv.pi);
        if !inv.chi.is_empty() {
            out.field("chi", format!("{:?}", inv.chi));
        }
    }
}

fn resolution_block(ring: &Ring, res: &FreeResolution) -> String {
    let mut s = String::new();
    for (k, m) in res.maps.iter().enumerate() {
        let _ = write!(s, "d{}:\n{}", k + 1, m.fmt(ring));
    }
    s
}

fn construction_output(out: &mut Output, c: &Construction) {
    let (d, pi) = c.degree_genus();
    out.set_ideal(&c.ring, &c.ideal);
    out.set_betti(&c.ideal_betti());
    out.field("ambient", format!("P^{}", c.ring.pn()));
    out.field("generators", format!("{} of degrees {:?}", c.ideal.len(), c.generator_degrees()));
    out.field("twist", c.twist);
    out.field("c1 G - c1 F", c.c1_twist);
    out.field("degree", d);
    out.field("genus", pi);
    let inv = InvariantSet::from_hilbert(&c.hilbert, c.ring.pn());
    if !inv.chi.is_empty() {
        out.field("chi", format!("{:?}", inv.chi));
    }
    out.field("hilbert polynomial", c.hilbert.hp_string());
    out.block("ideal sheaf resolution", c.ideal_betti().fmt_sheaves());
    if let Ok(w) = canonical_module(&c.ring, &c.resolution, 2) {
        let b = BettiTable::from_modules(&[w.target.clone(), w.source.clone()]);
        out.field("omega_X(1) presentation", b.fmt_sheaves());
    }
    if let Some(cb) = c.cone_betti() {
        out.check(&Check::new("mapping cone agrees with the resolution of I_X", 1, (cb == c.ideal_betti()) as i64));
    }
    out.check(&Check::new("twist m = c1 G - c1 F", c.c1_twist, c.twist as i64));
    match inv.dim() {
        2 => {
            if let Ok((hk, k2)) = surface_k2(inv.d, inv.pi, inv.chi[0]) {
                out.field("HK", hk);
                out.field("K2", k2);
            }
        }
        3 => {
            let p = threefold_k_products(inv.d, inv.pi, inv.chi[0], inv.chi[1]);
            out.field("K products", p);
            out.field("(K+H)^2 K", p.adjoint_square_k());
        }
        _ => {}
    }
}

fn map_from_file(f: Fp, path: &Path) -> Result<BundleMap> {
    let text = read(path)?;
    let ring = ring_for(&text, None, f)?;
    let m = parse_matrix(&ring, &text)?;
    let mut source = BundleRep::new(&ring);
    for &a in &m.source.twists {
        source = source.lines(1, a);
    }
    let mut target = BundleRep::new(&ring);
    for &a in &m.target.twists {
        target = target.lines(1, a);
    }
    let phi = BundleMap {
        source,
        target,
        matrix: m,
    };
    phi.audit()?;
    Ok(phi)
}

fn run_recipe(ring: &Ring, r: Recipe, seed: u64, opts: ConstructOptions) -> Result<Construction> {
    Ok(match r {
        Recipe::Bordiga => bordiga(ring, seed)?.1,
        Recipe::D18Threefold => threefold_d18(ring, seed, opts)?.1,
        Recipe::D11Surface => surface_d11(ring, seed, opts)?.1,
        Recipe::D17Threefold => threefold_d17(ring, seed, opts)?.1,
        Recipe::D13Threefold => threefold_d13(ring, seed, opts)?.1,
    })
}

fn smooth_output(out: &mut Output, ring: &Ring, ideal: &[Poly], opts: &SmoothOptions) -> Result<()> {
    let rep = check_smooth(ring, ideal, opts)?;
    out.field("smoothness", rep.verdict);
    out.block("smoothness report", rep.render());
    Ok(())
}

/// Runs one verb.
pub fn dispatch(cfg: &RunConfig) -> Result<Output> {
    let f = Fp::new(cfg.characteristic)?;
    let seed = cfg.seed;
    let mut out = Output::new(cfg.verb.name(), seed);
    match &cfg.verb {
        Verb::Gb(a) => {
            let (ring, gens) = load_ideal(f, &a.ideal, a.vars)?;
            let gb = reduced_gb(&ring, &gens)?;
            out.field("elements", gb.len());
            out.set_ideal(&ring, &gb);
        }
        Verb::Nf { input, poly } => {
            let (ring, gens) = load_ideal(f, &input.ideal, input.vars)?;
            let gb = gb_ideal(&ring, &gens, GbOptions::default())?;
            let mut body = String::new();
            for p in poly {
                let q = parse_poly(&ring, p)?;
                let _ = writeln!(body, "{}", ring.fmt_poly(&gb.normal_form_poly(&q)));
            }
            out.block("normal forms", body);
        }
        Verb::Quotient { input, by } => {
            let (ring, gens) = load_ideal(f, &input.ideal, input.vars)?;
            let by_text = read(by)?;
            let by_gens = parse_ideal(&ring, &by_text)?;
            let q = quotient(&ring, &gens, &by_gens)?;
            out.set_ideal(&ring, &q);
        }
        Verb::Saturate(a) => {
            let (ring, gens) = load_ideal(f, &a.ideal, a.vars)?;
            let s = saturate(&ring, &gens)?;
            out.field("saturated input", reduced_gb(&ring, &gens)? == s);
            out.set_ideal(&ring, &s);
        }
        Verb::Hilbert { input, window: w } => {
            let (lo, hi) = window(w)?;
            let (ring, pres, gens) = load_input(f, input)?;
            let hd = match gens {
                Some(g) => hilbert_of(&ring, &g)?,
                None => module_hilbert(&ring, &pres)?,
            };
            hilbert_fields(&mut out, &hd, ring.pn(), lo, hi);
        }
        Verb::Resolve(input) | Verb::Betti(input) => {
            let (ring, pres, _) = load_input(f, input)?;
            let res = resolve(&ring, &pres)?;
            out.set_betti(&res.betti());
            out.field("ranks", format!("{:?}", res.ranks()));
            out.check(&Check::new("d^2 = 0", 1, res.is_complex() as i64));
            out.check(&Check::new("minimal", 1, res.is_minimal() as i64));
            if matches!(cfg.verb, Verb::Resolve(_)) {
                out.block("differentials", resolution_block(&ring, &res));
            }
        }
        Verb::Cohomology { input, window: w } => {
            let (lo, hi) = window(w)?;
            let (ring, gens) = load_ideal(f, &input.ideal, input.vars)?;
            let sd = SchemeData::new(&ring, &gens)?;
            let t = sd.cohomology_table(lo, hi);
            let bad = (lo..=hi).filter(|&m| t.euler(m) != sd.expected_euler(m)).count();
            out.check(&Check::new("twists with Σ(-1)^i h^i != χ(J_X(m))", 0, bad as i64));
            out.cohomology = Some(t);
        }
        Verb::MakeModule {
            hf,
            koszul,
            four_lines,
            vars,
            start,
            dual,
        } => {
            let ring = Ring::new(*vars, f)?;
            let (pres, used) = if let Some(i) = koszul {
                let res = koszul_module(&ring, *i, *start)?;
                (res.maps[0].clone(), seed)
            } else if *four_lines {
                let (fl, s) = with_retries(seed, cfg.retries, |s| {
                    let fl = four_lines_module(&ring, s)?;
                    if fl.a != 1 {
                        return Err(Error::Genericity {
                            attempts: 1,
                            reason: format!("a = {}", fl.a),
                        });
                    }
                    Ok(fl)
                })?;
                (fl.m.presentation, s)
            } else {
                let hf = hf.clone().ok_or_else(|| Error::Range("give --hf, --koszul or --four-lines".into()))?;
                let (m, s) = with_retries(seed, cfg.retries, |s| {
                    let m = generic_module(&ring, &hf, *start, s)?;
                    m.check_hf()?;
                    if *dual {
                        dual_finite(&m)
                    } else {
                        Ok(m)
                    }
                })?;
                (m.presentation, s)
            };
            out.seed = used;
            let res = resolve(&ring, &pres)?;
            let hd = module_hilbert(&ring, &pres)?;
            let nz: Vec<(i64, i64)> = (-10..=10).map(|t| (t, hd.hf(t))).filter(|&(_, v)| v != 0).collect();
            out.field("hilbert function", format!("{nz:?}"));
            out.set_betti(&res.betti());
            out.block("presentation", pres.fmt(&ring));
        }
        Verb::Construct {
            recipe,
            from_map,
            n,
            no_cone,
            smooth,
        } => {
            let opts = ConstructOptions { cone: !*no_cone };
            let (c, used) = match (recipe, from_map) {
                (Some(r), _) => {
                    if let Some(n) = n {
                        if *n != r.ambient() {
                            return Err(Error::Ambient(format!(
                                "recipe {} lives on P^{}, not P^{n}",
                                r.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
                                r.ambient()
                            )));
                        }
                    }
                    let ring = Ring::projective(r.ambient(), f)?;
                    with_retries(seed, cfg.retries, |s| run_recipe(&ring, *r, s, opts))?
                }
                (None, Some(p)) => {
                    let phi = map_from_file(f, p)?;
                    (construct_variety(&phi, opts)?, seed)
                }
                (None, None) => return Err(Error::Range("give --recipe or --from-map".into())),
            };
            out.seed = used;
            construction_output(&mut out, &c);
            if *smooth {
                let (d, _) = c.degree_genus();
                smooth_output(&mut out, &c.ring, &c.ideal, &SmoothOptions::for_degree(d, used))?;
            }
        }
        Verb::Link {
            input,
            degrees,
            forms,
            audit,
        } => {
            let (ring, gens) = load_ideal(f, &input.ideal, input.vars)?;
            let (r, s) = match degrees.as_slice() {
                [r, s] => (*r, *s),
                _ => return Err(Error::Range("--degrees takes r,s".into())),
            };
            let given = match forms {
                Some(p) => {
                    let fg = parse_ideal(&ring, &read(p)?)?;
                    if fg.len() != 2 {
                        return Err(Error::Parse("the forms file must hold exactly two forms".into()));
                    }
                    Some((fg[0].clone(), fg[1].clone()))
                }
                None => None,
            };
            let (l, used) = with_retries(seed, if given.is_some() { 1 } else { cfg.retries }, |sd| {
                let mut spec = LinkSpec::new(&gens, r, s, sd);
                if let Some((a, b)) = &given {
                    spec = spec.with_forms(a.clone(), b.clone());
                }
                link(&ring, &spec)
            })?;
            out.seed = used;
            out.set_ideal(&ring, &l.ideal);
            out.field("unit residual", l.is_unit());
            out.field("X", &l.source);
            out.field("X'", &l.residual);
            if !l.is_unit() {
                out.set_betti(&l.ideal_betti());
                out.block("residual ideal sheaf resolution", l.ideal_betti().fmt_sheaves());
            }
            for c in &l.checks {
                out.check(c);
            }
            if *audit {
                let a = double_link_audit(&ring, &gens, r, s, used)?;
                for c in &a.checks {
                    out.check(c);
                }
            }
        }
        Verb::BuildZ { link: do_link } => {
            let ring = Ring::projective(5, f)?;
            let (z, used) = with_retries(seed, cfg.retries, |s| build_z_config(&ring, s))?;
            out.seed = used;
            out.field("degree", z.degree);
            out.field("h0 J_Z(t), t = 3..5", format!("{:?}", z.h0_ladder(3, 5)));
            out.field("lines L_ij", z.lines.len());
            if *do_link {
                let l = link(&ring, &LinkSpec::new(&z.ideal, 5, 5, used))?;
                out.set_ideal(&ring, &l.ideal);
                out.set_betti(&l.ideal_betti());
                out.field("X", &l.residual);
                out.block("residual ideal sheaf resolution", l.ideal_betti().fmt_sheaves());
                for c in &l.checks {
                    out.check(c);
                }
                let mut inside = 0;
                for (_, li) in &z.lines {
                    inside += contains_scheme(&ring, &l.ideal, li)? as i64;
                }
                out.check(&Check::new("lines L_ij on X", z.lines.len() as i64, inside));
            } else {
                out.set_ideal(&ring, &z.ideal);
            }
        }
        Verb::Invariants {
            surface,
            threefold,
            pencils,
            ideal,
            vars,
        } => {
            if let Some(v) = surface {
                let [d, pi, chi] = v.as_slice() else {
                    return Err(Error::Range("--surface takes d,pi,chi".into()));
                };
                let (hk, k2) = surface_k2(*d, *pi, *chi)?;
                out.field("HK", hk);
                out.field("K2", k2);
            }
            if let Some(v) = threefold {
                let [d, pi, cx, cs] = v.as_slice() else {
                    return Err(Error::Range("--threefold takes d,pi,chiX,chiS".into()));
                };
                let p = threefold_k_products(*d, *pi, *cx, *cs);
                out.field("K products", p);
                out.field("pluridegrees", format!("{:?}", p.pluridegrees));
                out.field("(K+H)^2 K", p.adjoint_square_k());
                out.field("(K+H) K^2", p.adjoint_k_square());
            }
            if let Some(d) = pencils {
                let sp = segre_pencil_defaults(*d)?;
                out.field("H S_i^2", sp.hs2);
                out.field("S_i^2 S_j", sp.s2s);
                out.field("S_i^3", sp.s3);
                out.field("(5H - ΣS_i)^3", sp.full_cube(5));
            }
            if let Some(p) = ideal {
                let (ring, gens) = load_ideal(f, p, *vars)?;
                let hd = hilbert_of(&ring, &gens)?;
                let inv = InvariantSet::from_hilbert(&hd, ring.pn());
                out.field("invariants", &inv);
                match (inv.dim(), inv.chi.as_slice()) {
                    (2, [chi]) if ring.pn() == 4 => {
                        let (hk, k2) = surface_k2(inv.d, inv.pi, *chi)?;
                        out.field("HK", hk);
                        out.field("K2", k2);
                    }
                    (3, [cx, cs]) if ring.pn() == 5 => {
                        let p = threefold_k_products(inv.d, inv.pi, *cx, *cs);
                        out.field("K products", p);
                        out.field("(K+H)^2 K", p.adjoint_square_k());
                        out.field("(K+H) K^2", p.adjoint_k_square());
                    }
                    _ => {}
                }
                out.field("adjoint dimension", adjoint_dimension(&ring, &gens)?);
            }
            if out.fields.is_empty() {
                return Err(Error::Range("give --surface, --threefold, --pencils or --ideal".into()));
            }
        }
        Verb::CatalogAudit => {
            let rep = catalog_audit(&catalog());
            out.field("passing edges", rep.passing_edges());
            out.block("audit", rep.render());
        }
        Verb::Smooth { input, full, slice } => {
            let (ring, gens) = load_ideal(f, &input.ideal, input.vars)?;
            let opts = if *full {
                SmoothOptions {
                    seed,
                    ..SmoothOptions::default()
                }
            } else {
                SmoothOptions::sliced(*slice, seed)
            };
            smooth_output(&mut out, &ring, &gens, &opts)?;
        }
    }
    Ok(out)
}

/// Exit status for a result: 0 success, 2 genericity retries exhausted,
/// 1 any other error.
pub fn exit_code(r: &Result<Output>) -> i32 {
    match r {
        Ok(_) => 0,
        Err(Error::Genericity { .. }) => 2,
        Err(_) => 1,
    }
}

/// Parses arguments, runs the verb, prints and writes its output.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let r = dispatch(&cfg);
    match &r {
        Ok(out) => {
            print!("{}", out.render(cfg.format));
            if let Some(dir) = &cfg.out {
                if let Err(e) = out.write_files(dir) {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    exit_code(&r)
}

//! The command-line verbs: outputs, determinism, files and exit codes.

use codim2::cli::Output;
use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_codim2"));
    c.env_remove("CODIM2_CHAR");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = bin().args(args).output().unwrap();
    (
        o.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&o.stdout).into_owned(),
        String::from_utf8_lossy(&o.stderr).into_owned(),
    )
}

fn json(args: &[&str]) -> Output {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{err}");
    Output::from_json(&out).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("codim2-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const CUBIC: &str = "vars 4\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n";

#[test]
fn groebner_verbs() {
    let d = scratch("gb");
    let cubic = write(&d, "cubic.txt", CUBIC);
    let out = json(&["gb", "--ideal", &cubic]);
    assert_eq!(out.ideal.as_ref().unwrap().len(), 3);
    let nf = json(&["nf", "--ideal", &cubic, "--poly", "x1^2", "--poly", "x0*x2"]);
    assert_eq!(nf.get("nf(x1^2)"), nf.get("nf(x0*x2)"));
    let lines = write(&d, "m.txt", "vars 4\nx0\nx1\nx2\nx3\n");
    let q = json(&["quotient", "--ideal", &cubic, "--by", &lines]);
    assert_eq!(q.ideal.as_ref().unwrap().len(), 3);
    let h = json(&["hilbert", "--ideal", &cubic, "--window", "0,4"]);
    assert_eq!(h.get("degree"), Some("3"));
    assert_eq!(h.get("genus"), Some("0"));
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn resolution_verbs() {
    let d = scratch("res");
    let cubic = write(&d, "cubic.txt", CUBIC);
    let b = json(&["betti", "--ideal", &cubic]);
    let t = b.betti_table().unwrap();
    assert_eq!(t.ranks(), vec![1, 3, 2]);
    let r = json(&["resolve", "--ideal", &cubic]);
    assert_eq!(r.betti_table(), Some(t));
    let skew = write(&d, "skew.txt", "vars 4\nx0*x2\nx0*x3\nx1*x2\nx1*x3\n");
    let c = json(&["cohomology", "--ideal", &skew, "--window", "-1,3"]);
    let tab = c.cohomology.unwrap();
    assert_eq!(tab.get(1, 0), 1);
    assert_eq!(tab.get(1, 1), 0);
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn module_verbs() {
    let m = json(&["make-module", "--hf", "1,4,3", "--vars", "4", "--start", "-2"]);
    assert_eq!(m.betti_table().unwrap().ranks(), vec![1, 7, 11, 8, 3]);
    let k = json(&["make-module", "--koszul", "2", "--vars", "5"]);
    assert!(k.betti_table().is_some());
    let fl = json(&["make-module", "--four-lines", "--vars", "5"]);
    assert!(fl.betti_table().is_some());
}

#[test]
fn construct_is_deterministic_per_seed() {
    let a = run(&["--format", "json", "--seed", "3", "construct", "--recipe", "bordiga"]);
    let b = run(&["--format", "json", "--seed", "3", "construct", "--recipe", "bordiga"]);
    assert_eq!(a, b);
    let c = run(&["--format", "json", "--seed", "4", "construct", "--recipe", "bordiga"]);
    let (oa, oc) = (Output::from_json(&a.1).unwrap(), Output::from_json(&c.1).unwrap());
    assert_ne!(oa.ideal, oc.ideal);
    assert_eq!(oa.get("degree"), oc.get("degree"));
    assert_eq!(oa.betti, oc.betti);
}

#[test]
fn json_round_trip_and_files() {
    let d = scratch("files");
    let (code, out, _) = run(&["--format", "json", "--out", d.to_str().unwrap(), "construct", "--recipe", "bordiga"]);
    assert_eq!(code, 0);
    let o = Output::from_json(&out).unwrap();
    assert_eq!(Output::from_json(&o.to_json()).unwrap(), o);
    for f in ["report.txt", "report.json", "ideal.txt", "betti.json"] {
        assert!(d.join(f).exists(), "{f}");
    }
    // the written ideal reads back through the ideal verbs
    let ideal = d.join("ideal.txt");
    let h = json(&["hilbert", "--ideal", ideal.to_str().unwrap()]);
    assert_eq!((h.get("degree"), h.get("genus")), (Some("6"), Some("3")));
    let s = json(&["smooth", "--ideal", ideal.to_str().unwrap(), "--full"]);
    assert_eq!(s.get("smoothness"), Some("smooth"));
    let l = json(&["link", "--ideal", ideal.to_str().unwrap(), "--degrees", "3,3"]);
    assert!(l.all_pass());
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn invariant_verbs() {
    let i = json(&["invariants", "--threefold", "17,32,0,24"]);
    assert_eq!(i.get("K products"), Some("H2K=28 HK2=18 K3=-52"));
    let p = json(&["invariants", "--pencils", "17"]);
    assert_eq!(p.get("(5H - ΣS_i)^3"), Some("120"));
    let a = json(&["catalog-audit"]);
    assert_eq!(a.get("passing edges"), Some("21"));
}

#[test]
fn characteristic_flag_and_environment() {
    let d = scratch("char");
    let cubic = write(&d, "cubic.txt", CUBIC);
    let (code, out, _) = run(&["--char", "101", "hilbert", "--ideal", &cubic]);
    assert_eq!(code, 0);
    assert!(out.contains("degree: 3"));
    let o = bin().env("CODIM2_CHAR", "32003").args(["--format", "json", "hilbert", "--ideal", &cubic]).output().unwrap();
    assert!(o.status.success());
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["no-such-verb"]).0, 1);
    assert_eq!(run(&["gb", "--ideal", "/nonexistent/ideal.txt"]).0, 1);
    // 4 is not prime
    assert_eq!(run(&["--char", "4", "catalog-audit"]).0, 1);
    let (code, _, err) = run(&["invariants"]);
    assert_eq!(code, 1);
    assert!(err.contains("error"));
}

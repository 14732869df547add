//! Text formats: polynomials `c*x0^2*x3 + ...`, ideal files and matrix files.
//!
//! Ideal file: optional `vars N` line, then one polynomial per line (commas
//! also separate). Matrix file: `target: a1 a2 ..`, `source: b1 b2 ..`, then
//! one row per line as `[e11, e12, ..]`. `#` starts a comment.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::module::{FreeModule, PolyMatrix};
use crate::monomial::{Mono, MAX_VARS};
use crate::poly::{Poly, Ring};

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    f: Fp,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at byte {} in {:?}",
            self.i,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn number(&mut self) -> Result<u64> {
        self.ws();
        let st = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if st == self.i {
            return Err(self.err("expected number"));
        }
        std::str::from_utf8(&self.s[st..self.i])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| self.err("number too large"))
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                true
            }
            Some(b'+') => {
                self.i += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if sign { acc.sub(&t, self.f) } else { acc.add(&t, self.f) };
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    sign = false;
                }
                Some(b'-') => {
                    self.i += 1;
                    sign = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.i += 1;
            let g = self.factor()?;
            acc = acc.mul(&g, self.f);
        }
        Ok(acc)
    }

    // factor := atom ('^' number)?
    fn factor(&mut self) -> Result<Poly> {
        let a = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.number()?;
            if e > 127 {
                return Err(self.err("exponent too large"));
            }
            return Ok(a.pow(e as u32, self.f));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.i += 1;
                let k = self.number()? as usize;
                if k >= self.nvars {
                    return Err(self.err(&format!(
                        "variable x{k} outside ring with {} variables",
                        self.nvars
                    )));
                }
                Ok(Poly::monomial(Mono::var(k), 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(Poly::constant((n % self.f.p() as u64) as u32))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

pub fn parse_poly(ring: &Ring, s: &str) -> Result<Poly> {
    let mut p = Parser {
        s: s.as_bytes(),
        i: 0,
        f: ring.field(),
        nvars: ring.nvars(),
    };
    let r = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}

fn strip_comment(l: &str) -> &str {
    match l.find('#') {
        Some(k) => &l[..k],
        None => l,
    }
}

/// Highest variable index mentioned in the text, plus one.
pub fn infer_nvars(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let mut j = i + 1;
            let mut v = 0usize;
            while j < b.len() && b[j].is_ascii_digit() {
                v = v * 10 + (b[j] - b'0') as usize;
                j += 1;
            }
            if j > i + 1 {
                best = best.max(v + 1);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

/// Reads the `vars N` header of an ideal or matrix file, if present.
pub fn declared_nvars(text: &str) -> Option<usize> {
    for l in text.lines() {
        let l = strip_comment(l).trim();
        if let Some(rest) = l.strip_prefix("vars") {
            return rest.trim().parse().ok();
        }
    }
    None
}

/// Ring for a file: explicit `vars`, else the caller's default, else inferred.
pub fn ring_for(text: &str, default_nvars: Option<usize>, f: Fp) -> Result<Ring> {
    let n = declared_nvars(text)
        .or(default_nvars)
        .unwrap_or_else(|| infer_nvars(text).max(1));
    if n > MAX_VARS {
        return Err(Error::Range(format!("{n} variables exceeds {MAX_VARS}")));
    }
    Ring::new(n, f)
}

pub fn parse_ideal(ring: &Ring, text: &str) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for l in text.lines() {
        let l = strip_comment(l).trim();
        if l.is_empty() || l.starts_with("vars") {
            continue;
        }
        for piece in l.split([',', ';']) {
            let piece = piece.trim();
            if !piece.is_empty() {
                out.push(parse_poly(ring, piece)?);
            }
        }
    }
    Ok(out)
}

pub fn format_ideal(ring: &Ring, gens: &[Poly]) -> String {
    let mut s = format!("vars {}\n", ring.nvars());
    for g in gens {
        s.push_str(&ring.fmt_poly(g));
        s.push('\n');
    }
    s
}

fn parse_twists(s: &str) -> Result<Vec<i32>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad twist {t:?}")))
        })
        .collect()
}

/// Parses a matrix file. Missing twist lines default to a degree-zero
/// target and sources inferred from the first nonzero entry of each column.
pub fn parse_matrix(ring: &Ring, text: &str) -> Result<PolyMatrix> {
    let mut target: Option<Vec<i32>> = None;
    let mut source: Option<Vec<i32>> = None;
    let mut rows: Vec<Vec<Poly>> = Vec::new();
    for l in text.lines() {
        let l = strip_comment(l).trim();
        if l.is_empty() || l.starts_with("vars") {
            continue;
        }
        if let Some(r) = l.strip_prefix("target:") {
            target = Some(parse_twists(r)?);
        } else if let Some(r) = l.strip_prefix("source:") {
            source = Some(parse_twists(r)?);
        } else {
            let inner = l
                .trim_start_matches('[')
                .trim_end_matches(',')
                .trim_end_matches(']');
            let row = inner
                .split(',')
                .map(|e| parse_poly(ring, e.trim()))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
    }
    let nr = rows.len();
    let nc = rows.first().map(|r| r.len()).unwrap_or(0);
    if rows.iter().any(|r| r.len() != nc) {
        return Err(Error::Parse("ragged matrix rows".into()));
    }
    let target = target.unwrap_or_else(|| vec![0; nr]);
    if target.len() != nr {
        return Err(Error::Parse("target length does not match rows".into()));
    }
    let source = match source {
        Some(s) => s,
        None => (0..nc)
            .map(|j| {
                (0..nr)
                    .find_map(|i| rows[i][j].degree().map(|d| target[i] - d as i32))
                    .unwrap_or(0)
            })
            .collect(),
    };
    let entries = rows.into_iter().flatten().collect();
    PolyMatrix::new(FreeModule::new(target), FreeModule::new(source), entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new(n, Fp::default()).unwrap()
    }

    #[test]
    fn roundtrip_poly() {
        let r = ring(4);
        let p = parse_poly(&r, "3*x0^2*x3 - x1*x2 + 5").unwrap();
        let s = r.fmt_poly(&p);
        assert_eq!(parse_poly(&r, &s).unwrap(), p);
        assert_eq!(s, "3*x0^2*x3 - x1*x2 + 5");
    }

    #[test]
    fn parentheses_expand() {
        let r = ring(2);
        let p = parse_poly(&r, "(x0+x1)*(x0-x1)").unwrap();
        assert_eq!(r.fmt_poly(&p), "x0^2 - x1^2");
        let q = parse_poly(&r, "-(x0 + x1)^2").unwrap();
        assert_eq!(r.fmt_poly(&q), "-x0^2 - 2*x0*x1 - x1^2");
    }

    #[test]
    fn errors() {
        let r = ring(2);
        assert!(parse_poly(&r, "x5").is_err());
        assert!(parse_poly(&r, "x0 +").is_err());
        assert!(parse_poly(&r, "x0 x1").is_err());
    }

    #[test]
    fn matrix_file() {
        let r = ring(6);
        let m = parse_matrix(&r, "target: 0 0\n[x0, x1, x2]\n[x3, x4, x5]\n").unwrap();
        assert_eq!(m.source.twists, vec![-1, -1, -1]);
        let back = parse_matrix(&r, &m.fmt(&r)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn ideal_file() {
        let text = "vars 3\n# comment\nx0*x1, x2^2\nx0 - x1\n";
        let r = ring_for(text, None, Fp::default()).unwrap();
        assert_eq!(r.nvars(), 3);
        let g = parse_ideal(&r, text).unwrap();
        assert_eq!(g.len(), 3);
        let again = parse_ideal(&r, &format_ideal(&r, &g)).unwrap();
        assert_eq!(again, g);
    }
}

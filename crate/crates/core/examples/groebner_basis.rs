//! Gröbner bases, normal forms, quotients and saturation of ideals.

use codim2::groebner::ideal::{quotient, reduced_gb, saturate};
use codim2::groebner::{gb_ideal, GbOptions};
use codim2::parse::{parse_ideal, parse_poly};
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(3, Fp::default())?;
    // twisted cubic
    let cubic = parse_ideal(&ring, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2")?;
    for g in reduced_gb(&ring, &cubic)? {
        println!("gb: {}", ring.fmt_poly(&g));
    }
    let gb = gb_ideal(&ring, &cubic, GbOptions::default())?;
    let p = parse_poly(&ring, "x1^3 + x0*x3^2")?;
    println!("nf({}) = {}", ring.fmt_poly(&p), ring.fmt_poly(&gb.normal_form_poly(&p)));

    // multiplying by the irrelevant ideal and saturating gives the ideal back
    let f = ring.field();
    let m: Vec<_> = cubic.iter().flat_map(|g| ring.vars().into_iter().map(move |x| (g.clone(), x))).map(|(g, x)| g.mul(&x, f)).collect();
    let s = saturate(&ring, &m)?;
    println!("saturation recovers the cubic: {}", s == reduced_gb(&ring, &cubic)?);
    let q = quotient(&ring, &m, &ring.vars())?;
    println!("(m·I) : m has {} basis elements", q.len());
    Ok(())
}

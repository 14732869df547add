//! Minimal free resolutions and Betti tables, with the audits every
//! resolution passes.

use codim2::parse::parse_ideal;
use codim2::resolution::resolve_ideal;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(4, Fp::default())?;
    let koszul = resolve_ideal(&ring, &ring.vars())?;
    println!("residue field on P^4: ranks {:?}", koszul.ranks());

    let scroll = parse_ideal(&ring, "x0*x3 - x1*x2, x0*x4 - x1*x3, x2*x4 - x3^2")?;
    let res = resolve_ideal(&ring, &scroll)?;
    println!("{}", res.betti().fmt_grid());
    println!("ideal sheaf: {}", res.betti().drop_first().fmt_sheaves());
    println!("d^2 = 0: {}, minimal: {}", res.is_complex(), res.is_minimal());
    Ok(())
}

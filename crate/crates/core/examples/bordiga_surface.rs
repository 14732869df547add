//! Degeneracy locus of a generic map 3O(-1) -> 4O on P^4, with its
//! canonical module and the smoothness check.

use codim2::determinantal::{bordiga, canonical_module};
use codim2::resolution::BettiTable;
use codim2::smoothness::{check_smooth, SmoothOptions};
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(4, Fp::default())?;
    let (_, c) = bordiga(&ring, 1)?;
    println!("(d, π) = {:?}, generators of degrees {:?}", c.degree_genus(), c.generator_degrees());
    println!("J_X: {}", c.ideal_betti().fmt_sheaves());
    let w = canonical_module(&ring, &c.resolution, 2)?;
    println!("ω_X(1): {}", BettiTable::from_modules(&[w.target.clone(), w.source.clone()]).fmt_sheaves());
    print!("{}", check_smooth(&ring, &c.ideal, &SmoothOptions::default())?.render());
    Ok(())
}

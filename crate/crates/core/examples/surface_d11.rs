//! A surface with d = π = 11 in P^4 from the four-lines module, and its
//! cohomology table.

use codim2::determinantal::{surface_d11, with_retries, ConstructOptions};
use codim2::invariants::{surface_k2, InvariantSet};
use codim2::resolution::SchemeData;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(4, Fp::default())?;
    let ((_, c), _) = with_retries(1, 5, |s| surface_d11(&ring, s, ConstructOptions::default()))?;
    println!("J_X: {}", c.ideal_betti().fmt_sheaves());
    let inv = InvariantSet::from_hilbert(&c.hilbert, 4);
    let (hk, k2) = surface_k2(inv.d, inv.pi, inv.chi[0])?;
    println!("{inv} HK={hk} K2={k2}");
    print!("{}", SchemeData::new(&ring, &c.ideal)?.cohomology_table(-1, 6).fmt_grid());
    Ok(())
}

//! A 3-fold of degree 18 in P^5: the dependency locus of 24O(-1) -> Syz_3(M)
//! for the generic module with Hilbert function (1,6,3).

use codim2::determinantal::{threefold_d18, with_retries, ConstructOptions};
use codim2::invariants::{threefold_k_products, InvariantSet};
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(5, Fp::default())?;
    let ((_, c), seed) = with_retries(1, 5, |s| threefold_d18(&ring, s, ConstructOptions::default()))?;
    println!("seed {seed}: J_X: {}", c.ideal_betti().fmt_sheaves());
    let inv = InvariantSet::from_hilbert(&c.hilbert, 5);
    println!("{inv}");
    let p = threefold_k_products(inv.d, inv.pi, inv.chi[0], inv.chi[1]);
    println!("{p}, (K+H)^2 K = {}", p.adjoint_square_k());
    Ok(())
}

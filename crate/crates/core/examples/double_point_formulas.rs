//! Double point formulas for surfaces in P^4 and 3-folds in P^5, residual
//! invariants under linkage and the intersection table of five pencils.

use codim2::invariants::{residual_invariants, segre_pencil_defaults, surface_k2, threefold_k_products, InvariantSet};

fn main() -> codim2::Result<()> {
    for (d, pi, chi) in [(6, 3, 1), (11, 11, 3), (4, 1, 1)] {
        let (hk, k2) = surface_k2(d, pi, chi)?;
        println!("surface d={d} π={pi} χ={chi}: HK={hk} K2={k2}");
    }
    for (d, pi, cx, cs) in [(17, 32, 0, 24), (13, 18, 0, 10), (18, 35, 2, 26)] {
        let p = threefold_k_products(d, pi, cx, cs);
        println!("3-fold d={d} π={pi}: {p} pluridegrees {:?}", p.pluridegrees);
    }
    let x = InvariantSet::threefold(17, 32, 0, 24);
    println!("linked (5,6): {}", residual_invariants(&x, 5, 6)?);
    let sp = segre_pencil_defaults(17)?;
    println!("H S^2 = {}, S_i^2 S_j = {}, S^3 = {}, (5H - ΣS)^3 = {}", sp.hs2, sp.s2s, sp.s3, sp.full_cube(5));
    Ok(())
}

//! Linkage by complete intersections: a 3-space linked (2,3) to a
//! Castelnuovo 3-fold, then (4,4) to a 3-fold of degree 11, with the
//! double-link and Rao-module audits.

use codim2::invariants::adjoint_dimension;
use codim2::liaison::{castelnuovo_chain, double_link_audit};
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(5, Fp::default())?;
    let (a, b) = castelnuovo_chain(&ring, 1)?;
    print!("{}", a.report());
    print!("{}", b.report());
    println!("dim |K+H| = {}", adjoint_dimension(&ring, &b.ideal)?);
    let audit = double_link_audit(&ring, &a.ideal, 4, 4, 1)?;
    for c in &audit.checks {
        println!("{c}");
    }
    Ok(())
}

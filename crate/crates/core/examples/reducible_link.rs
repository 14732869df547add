//! The union Z of a Segre scroll and five 3-planes in P^5, linked (5,5) to a
//! smooth 3-fold X of degree 17 which is then linked (5,6) to a 3-fold of
//! degree 13.

use codim2::invariants::{adjoint_dimension, threefold_k_products};
use codim2::liaison::{build_z_config, link, LinkSpec};
use codim2::smoothness::contains_scheme;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(5, Fp::default())?;
    let z = build_z_config(&ring, 1)?;
    println!("deg Z = {}, h0 J_Z(3..5) = {:?}", z.degree, z.h0_ladder(3, 5));
    let x = link(&ring, &LinkSpec::new(&z.ideal, 5, 5, 1))?;
    print!("{}", x.report());
    let mut on = 0;
    for (_, l) in &z.lines {
        on += contains_scheme(&ring, &x.ideal, l)? as usize;
    }
    println!("{on} of {} lines L_ij lie on X", z.lines.len());
    let i = &x.residual;
    println!("{}", threefold_k_products(i.d, i.pi, i.chi[0], i.chi[1]));
    println!("h0(ω_X(1)) - 1 = {}", adjoint_dimension(&ring, &x.ideal)?);
    let xp = link(&ring, &LinkSpec::new(&x.ideal, 5, 6, 1))?;
    print!("{}", xp.report());
    let i = &xp.residual;
    println!("{}", threefold_k_products(i.d, i.pi, i.chi[0], i.chi[1]));
    println!("h0(ω_X'(1)) - 1 = {}", adjoint_dimension(&ring, &xp.ideal)?);
    Ok(())
}

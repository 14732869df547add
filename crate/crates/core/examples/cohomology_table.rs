//! Cohomology table `h^i(J_X(m))` of an ideal sheaf by local duality,
//! here for two skew lines in P^3 (not arithmetically Cohen-Macaulay).

use codim2::groebner::ideal::intersect;
use codim2::resolution::SchemeData;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(3, Fp::default())?;
    let x = ring.vars();
    let lines = intersect(&ring, &[x[0].clone(), x[1].clone()], &[x[2].clone(), x[3].clone()])?;
    let sd = SchemeData::new(&ring, &lines)?;
    let t = sd.cohomology_table(-2, 4);
    print!("{}", t.fmt_grid());
    for m in -2..=4 {
        assert_eq!(t.euler(m), sd.expected_euler(m));
    }
    println!("Euler characteristics agree with the Hilbert polynomial");
    Ok(())
}

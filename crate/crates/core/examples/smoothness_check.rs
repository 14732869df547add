//! Jacobian criterion on a singular union of planes and on a smooth
//! complete intersection, full and sliced.

use codim2::groebner::ideal::intersect;
use codim2::parse::parse_ideal;
use codim2::smoothness::{check_smooth, SmoothOptions};
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(4, Fp::default())?;
    let x = ring.vars();
    let planes = intersect(&ring, &[x[0].clone(), x[1].clone()], &[x[2].clone(), x[3].clone()])?;
    print!("two planes meeting in a point:\n{}", check_smooth(&ring, &planes, &SmoothOptions::default())?.render());
    let ci = parse_ideal(&ring, "x0^2 + x1^2 + x2^2 + x3^2 + x4^2, x0^3 + 2*x1^3 - x2^3 + x3^3 + 5*x4^3")?;
    print!("\n(2,3) complete intersection:\n{}", check_smooth(&ring, &ci, &SmoothOptions::default())?.render());
    print!("\nsliced:\n{}", check_smooth(&ring, &ci, &SmoothOptions::sliced(1, 7))?.render());
    Ok(())
}

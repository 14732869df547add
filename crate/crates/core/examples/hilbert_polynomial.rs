//! Hilbert function and polynomial, degree and sectional genus.

use codim2::groebner::ideal::hilbert_of;
use codim2::parse::parse_ideal;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(3, Fp::default())?;
    let cubic = parse_ideal(&ring, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2")?;
    let hd = hilbert_of(&ring, &cubic)?;
    println!("twisted cubic: {}", hd.summary(0, 6));
    println!("(degree, genus) = {:?}", hd.degree_genus());

    let ring = Ring::projective(4, Fp::default())?;
    let ci = parse_ideal(&ring, "x0^2 + x1*x2 + x3*x4, x0^3 + x1^3 + x2^3 + x3^3 + x4^3")?;
    let hd = hilbert_of(&ring, &ci)?;
    println!("(2,3) complete intersection surface: HP = {}, (d, π) = {:?}", hd.hp_string(), hd.degree_genus());
    Ok(())
}

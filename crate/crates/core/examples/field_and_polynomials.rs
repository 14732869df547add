//! Arithmetic in F_p and in the polynomial ring: parse, multiply,
//! differentiate, substitute.

use codim2::parse::parse_poly;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let f = Fp::default();
    println!("p = {}", f.p());
    let a = 12345;
    println!("{a}^-1 = {}, check {}", f.inv(a), f.mul(a, f.inv(a)));

    let ring = Ring::projective(3, f)?;
    let g = parse_poly(&ring, "x0^2*x1 - 3*x2*x3^2 + x1^3")?;
    let h = parse_poly(&ring, "x0 + x3")?;
    println!("g = {}", ring.fmt_poly(&g));
    println!("g*h = {}", ring.fmt_poly(&g.mul(&h, f)));
    println!("dg/dx0 = {}", ring.fmt_poly(&g.derivative(0, f)));
    let img = vec![ring.var(1), ring.var(0), ring.var(2), ring.var(3)];
    println!("g(x1,x0,x2,x3) = {}", ring.fmt_poly(&g.substitute(&img, f)));
    Ok(())
}

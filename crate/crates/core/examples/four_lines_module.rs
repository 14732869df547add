//! The module built from four general lines in a hyperplane of P^4, which
//! has one extra syzygy compared with the generic module of the same
//! Hilbert function.

use codim2::factory::four_lines_module;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(4, Fp::default())?;
    let fl = four_lines_module(&ring, 1)?;
    println!("extra syzygies a = {}", fl.a);
    println!("M' over P^3:\n{}", fl.m_prime.resolution()?.betti().fmt_grid());
    println!("M over P^4:\n{}", fl.m.resolution()?.betti().fmt_grid());
    Ok(())
}

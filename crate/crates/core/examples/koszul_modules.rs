//! Koszul complexes and the syzygy modules of the residue field, which
//! represent the twisted cotangent bundles.

use codim2::factory::{koszul_complex, koszul_module};
use codim2::resolution::BettiTable;
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let ring = Ring::projective(4, Fp::default())?;
    let f = ring.field();
    let forms = vec![ring.var(0).pow(2, f), ring.var(1).pow(3, f)];
    let k = koszul_complex(&ring, &forms, 0)?;
    println!("Koszul(x0^2, x1^3): {}", k.betti().fmt_sheaves());
    let k = koszul_module(&ring, 0, 0)?;
    for i in 1..=5 {
        let pres = BettiTable::from_modules(&[k.module(i), k.module(i + 1)]);
        println!("Syz_{i} presented by {}", pres.fmt_sheaves());
    }
    Ok(())
}

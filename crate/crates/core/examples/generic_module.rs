//! Generic finite-length modules with a prescribed Hilbert function, and
//! their Betti tables.

use codim2::factory::{dual_finite, generic_module};
use codim2::{Fp, Ring};

fn main() -> codim2::Result<()> {
    let f = Fp::default();
    let p5 = Ring::projective(5, f)?;
    let m = generic_module(&p5, &[1, 6, 3], -4, 1)?;
    m.check_hf()?;
    println!("HF (1,6,3) on P^5:\n{}", m.resolution()?.betti().fmt_grid());

    let r4 = Ring::new(4, f)?;
    let m = generic_module(&r4, &[1, 4, 3], -2, 1)?;
    println!("HF (1,4,3) in 4 variables:\n{}", m.resolution()?.betti().fmt_grid());
    let d = dual_finite(&m)?;
    println!("its dual has HF {:?}:\n{}", d.hf, d.resolution()?.betti().fmt_grid());
    Ok(())
}

//! Schur-Weyl blocks for the lattice family `L = A_{2n}`: four 1's and n 2's.

use fuscond::builtin::build;
use fuscond::{schur_weyl, ExampleSpec};

fn main() -> fuscond::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let b = build(&ExampleSpec::A2n(n))?;
    assert!(b.check(1e-9).is_valid());
    let sw = schur_weyl(&b, 1e-9)?;
    println!("|Irr(C_A)| = {}, kernel {}, blocks {:?}", sw.rank, sw.kernel_dim, sw.simple_dims());
    println!("dim C_A = {:.6}, d(A) = {:.6}", b.module_dim(), b.algebra().dim());
    let labels = b.ambient().labels();
    for blk in &sw.blocks {
        let x = blk.x.map(|x| labels[x].as_str()).unwrap_or("?");
        println!("  W_{x}: n = {}", blk.simple_dim);
    }
    Ok(())
}

//! Validate a fusion ring, read off Frobenius-Perron dimensions and its subring lattice.
//!
//! Run with `cargo run --example validate_ring`.

use fuscond::builtin::tambara_yamagami;
use fuscond::{BasedRing, FiniteGroup, Subring};

fn main() -> fuscond::Result<()> {
    let s3 = FiniteGroup::symmetric(3).group_ring();
    println!("S3 group ring: {}", s3.validate());

    // Tambara-Yamagami over Z3: T*T = 1 + g + g^2.
    let ty = tambara_yamagami(3);
    let dims = ty.fp_dims()?;
    for (i, d) in dims.values.iter().enumerate() {
        println!("d({}) = {d:.6}", ty.name(i));
    }
    println!("global dimension {:.6}", ty.global_dim(&dims));
    for sub in ty.enumerate_subrings(&Subring::unit())? {
        println!("subring {:?}", sub.names(&ty));
    }

    // A broken table: g*g = 2 violates rigidity.
    let broken = BasedRing::new(vec!["1".into(), "g".into()], vec![1, 0, 0, 1, 0, 1, 2, 0], vec![0, 1])?;
    print!("broken ring: {}", broken.validate());
    Ok(())
}

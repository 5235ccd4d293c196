//! Modular data: the Verlinde formula and the S-matrix idempotents.

use fuscond::builtin::{ising, toric_code};
use fuscond::semisimple::AssocAlgebra;

fn main() -> fuscond::Result<()> {
    for md in [toric_code(), ising()] {
        let rep = md.validate(1e-9);
        println!("{:?}: {}", md.labels(), if rep.is_valid() { "valid" } else { "INVALID" });
        let ring = md.verlinde()?;
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                let prod: Vec<String> = ring.product(i, j).iter().map(|&(k, n)| format!("{n}·{}", ring.name(k))).collect();
                println!("  {} x {} = {}", ring.name(i), ring.name(j), prod.join(" + "));
            }
        }
        println!("  idempotent residual {:.2e}", md.idempotent_residual(&ring)?);
        let profile = AssocAlgebra::from_ring(&ring).central_idempotents(fuscond::semisimple::DEFAULT_SEED)?;
        println!("  Wedderburn blocks {:?}", profile.simple_dims());
    }
    Ok(())
}

//! The diagonal algebra in `U ⊠ U^rev`, with U read from an mtc.v1 file (Ising if absent).

use fuscond::builtin::{build, ising};
use fuscond::schema::mtc_from_json;
use fuscond::{schur_weyl, ExampleSpec};

fn main() -> fuscond::Result<()> {
    let md = match std::env::args().nth(1) {
        Some(path) => mtc_from_json(&std::fs::read_to_string(path)?)?,
        None => ising(),
    };
    let b = build(&ExampleSpec::CosetDiagonal(Box::new(md.clone())))?;
    let sw = schur_weyl(&b, 1e-9)?;
    let sum: usize = sw.simple_dims().iter().map(|m| m * m).sum();
    println!("rank U = {}, kernel {}, blocks {:?}, sum n^2 = {sum}", md.rank(), sw.kernel_dim, sw.simple_dims());
    Ok(())
}

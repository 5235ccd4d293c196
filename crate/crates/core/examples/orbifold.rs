//! Orbifold detection: when e1 K(C_A) is a group algebra, A is the fixed points of that group.

use fuscond::builtin::build;
use fuscond::{group_quotient, schur_weyl, ExampleSpec};

fn main() -> fuscond::Result<()> {
    for spec in [ExampleSpec::ToricCode, ExampleSpec::VLplusOrbifold(1), ExampleSpec::VLplusOrbifold(2), ExampleSpec::A2n(1)] {
        let b = build(&spec)?;
        let sw = schur_weyl(&b, 1e-9)?;
        let q = group_quotient(&b, &sw, 1e-9);
        let g = q.group.as_ref().map(|g| g.describe()).unwrap_or_else(|| "not a group algebra".into());
        println!("{spec:?}: kernel {}, quotient {g}, pointed part {}", sw.kernel_dim, q.pointed.describe());
    }
    Ok(())
}

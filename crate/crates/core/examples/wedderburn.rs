//! Character degrees of finite groups from the Wedderburn split of their group rings.

use fuscond::semisimple::{AssocAlgebra, DEFAULT_SEED};
use fuscond::FiniteGroup;

fn main() -> fuscond::Result<()> {
    let groups = [
        ("Z6", FiniteGroup::cyclic(6)),
        ("S3", FiniteGroup::symmetric(3)),
        ("D8", FiniteGroup::dihedral(4)),
        ("Q8", FiniteGroup::quaternion()),
        ("A4", FiniteGroup::alternating(4)),
        ("S4", FiniteGroup::symmetric(4)),
    ];
    for (name, g) in groups {
        let alg = AssocAlgebra::from_ring(&g.group_ring());
        let profile = alg.central_idempotents(DEFAULT_SEED)?;
        println!(
            "{name}: order {}, {} classes, degrees {:?} (orthogonality {:.1e})",
            g.order(),
            g.conjugacy_classes().len(),
            profile.simple_dims(),
            profile.orthogonality_residual
        );
    }
    Ok(())
}

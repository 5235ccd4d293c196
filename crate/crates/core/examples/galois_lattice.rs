//! Subrings containing the local part, their invariant subalgebras and the Hasse diagram.

use fuscond::builtin::build;
use fuscond::galois::{hasse_dot, markdown};
use fuscond::{schur_weyl, verify_correspondence, ExampleSpec};

fn main() -> fuscond::Result<()> {
    let b = build(&ExampleSpec::A2n(1))?;
    let sw = schur_weyl(&b, 1e-9)?;
    let rep = verify_correspondence(&b, &sw, 1e-9)?;
    print!("{}", markdown(&b, &rep));
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, hasse_dot(&rep))?;
        println!("wrote {path}");
    } else {
        print!("{}", hasse_dot(&rep));
    }
    Ok(())
}

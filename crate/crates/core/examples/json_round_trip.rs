//! Emit a bundle as bundle.v1, parse it back and emit again.

use fuscond::builtin::build;
use fuscond::schema::{bundle_from_json, bundle_to_json};
use fuscond::ExampleSpec;

fn main() -> fuscond::Result<()> {
    let text = bundle_to_json(&build(&ExampleSpec::VLplusOrbifold(1))?)?;
    let again = bundle_to_json(&bundle_from_json(&text)?)?;
    println!("{} bytes, byte-identical: {}", text.len(), text == again);
    for line in text.lines().take(6) {
        println!("{line}");
    }
    println!("  ...");
    Ok(())
}

//! Formal codegrees and indicator rows.

use fuscond::builtin::build;
use fuscond::{codegree_check, indicator_row, schur_weyl, ExampleSpec};

fn main() -> fuscond::Result<()> {
    for spec in [ExampleSpec::ToricCode, ExampleSpec::IsingSquare] {
        let b = build(&spec)?;
        let sw = schur_weyl(&b, 1e-9)?;
        let cg = codegree_check(&b, &sw, 1e-9);
        let labels = b.ambient().labels();
        println!("{spec:?}");
        for e in &cg.entries {
            let x = e.x.unwrap();
            let row: Vec<String> = indicator_row(&sw, x)?.iter().map(|z| format!("{:.3}", z.re)).collect();
            println!(
                "  W_{}: codegree {:.6} (expected {:.6}), off-block {:.1e}, chi = [{}]",
                labels[x],
                e.on_block.re,
                e.expected.unwrap(),
                e.off_block,
                row.join(", ")
            );
        }
        assert!(cg.checks.is_valid());
    }
    Ok(())
}

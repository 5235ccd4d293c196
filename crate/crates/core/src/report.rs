use std::fmt;

/// One violated axiom, with the index tuple where it fails.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

/// A named numerical or exact check and its outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub passed: bool,
}

impl Check {
    pub fn residual(name: impl Into<String>, residual: f64, tol: f64) -> Self {
        Check { name: name.into(), residual, passed: residual.is_finite() && residual < tol }
    }

    pub fn exact(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), residual: if passed { 0.0 } else { 1.0 }, passed }
    }
}

/// Outcome of validating a ring, modular data or bundle.
///
/// Empty `violations` means valid. `checks` carries residuals of tolerance-based tests,
/// whose failures are mirrored into `violations`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violate(&mut self, axiom: &str, indices: Vec<usize>, detail: impl Into<String>) {
        self.violations.push(Violation { axiom: axiom.to_string(), indices, detail: detail.into() });
    }

    pub fn record(&mut self, check: Check) {
        if !check.passed {
            self.violations.push(Violation {
                axiom: check.name.clone(),
                indices: Vec::new(),
                detail: format!("residual {:.3e}", check.residual),
            });
        }
        self.checks.push(check);
    }

    pub fn merge(&mut self, prefix: &str, other: ValidationReport) {
        for mut v in other.violations {
            v.axiom = format!("{prefix}.{}", v.axiom);
            self.violations.push(v);
        }
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            writeln!(f, "valid ({} checks passed)", self.checks.len())?;
        } else {
            writeln!(f, "{} violation(s):", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  - {} at {:?}: {}", v.axiom, v.indices, v.detail)?;
            }
        }
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {} (residual {:.3e})",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.residual
            )?;
        }
        Ok(())
    }
}

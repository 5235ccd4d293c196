//! The `fuscond` command line.
//!
//! Exit status: 0 when every check passes, 1 on a failed check, 2 when the input
//! cannot be read or parsed, 3 on numerical degeneracy.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use crate::builtin::{build, ExampleSpec};
use crate::condensation::{codegree_check, indicator_row, schur_weyl_seeded, CondensationBundle, SchurWeylReport};
use crate::error::{Error, Result};
use crate::galois::{hasse_dot, markdown, verify_correspondence};
use crate::report::ValidationReport;
use crate::schema::{bundle_from_json, bundle_to_json, mtc_from_json, parse_document, Document};
use crate::semisimple::DEFAULT_SEED;

/// Environment variable overriding the idempotent-splitting seed.
pub const SEED_VAR: &str = "FUSCOND_SEED";

/// Significant digits an `f64` can carry.
pub const F64_DIGITS: u32 = 17;

#[derive(Debug, Parser)]
#[command(name = "fuscond", version, about = "Verify condensation data: Schur-Weyl blocks and the subring lattice")]
pub struct Cli {
    /// Residual tolerance for every float check.
    #[arg(long, global = true, default_value_t = crate::DEFAULT_TOL)]
    pub tol: f64,
    /// Working precision in decimal digits; the float backend is f64, so values above 17 are clamped.
    #[arg(long, global = true)]
    pub digits: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a ring.v1, mtc.v1 or bundle.v1 file against its axioms.
    Validate { file: PathBuf },
    /// Bundle checks, Schur-Weyl blocks and formal codegrees.
    Analyze { bundle: PathBuf },
    /// Lattice of subrings containing the local part and their invariant subalgebras.
    Galois {
        bundle: PathBuf,
        /// Write the Hasse diagram here in DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Materialize a built-in bundle.
    Example {
        /// One of a2n, a2n1, vl-orbifold, toric, ising-square, coset.
        name: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Write bundle.v1 here instead of stdout.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// mtc.v1 input for the coset example (Ising by default).
        #[arg(long)]
        mtc: Option<PathBuf>,
    },
    /// Character of W_x on every simple of C_A.
    Indicators {
        bundle: PathBuf,
        #[arg(long)]
        x: String,
    },
}

/// Resolved run settings.
#[derive(Clone, Debug)]
pub struct Settings {
    pub tol: f64,
    pub digits: u32,
    pub seed: u64,
}

/// Exit status for an error.
pub fn exit_status(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Io(_) => 2,
        Error::Degenerate(_) | Error::Numerical(_) => 3,
        _ => 1,
    }
}

fn parse_seed(s: &str) -> Result<u64> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| Error::Parse(format!("{SEED_VAR}={s:?}: {e}")))
}

impl Settings {
    /// Reads `--tol`, `--digits` and the seed variable; warnings go to `err`.
    pub fn resolve(cli: &Cli, seed_var: Option<&str>, err: &mut dyn Write) -> Result<Self> {
        if !(cli.tol.is_finite() && cli.tol > 0.0) {
            return Err(Error::Parse(format!("--tol must be positive, got {}", cli.tol)));
        }
        let digits = match cli.digits {
            None => F64_DIGITS,
            Some(0) => return Err(Error::Parse("--digits must be positive".into())),
            Some(d) if d > F64_DIGITS => {
                let _ = writeln!(err, "warning: --digits {d} exceeds f64 precision, using {F64_DIGITS}");
                F64_DIGITS
            }
            Some(d) => d,
        };
        let seed = seed_var.map(parse_seed).transpose()?.unwrap_or(DEFAULT_SEED);
        Ok(Settings { tol: cli.tol, digits, seed })
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Shape errors while loading are schema errors.
fn load_error(e: Error) -> Error {
    match e {
        Error::Structural(m) => Error::Parse(m),
        Error::InvalidIndex { index, rank } => Error::Parse(format!("label index {index} out of range (rank {rank})")),
        other => other,
    }
}

fn load_bundle(path: &Path) -> Result<CondensationBundle> {
    bundle_from_json(&read(path)?).map_err(load_error)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(Error::Io)
}

/// Formats with `digits` significant digits, dropping a negligible imaginary part.
pub fn format_complex(z: Complex64, digits: u32, tol: f64) -> String {
    let sig = |x: f64| {
        let x = if x.abs() < tol { 0.0 } else { x };
        let rounded = x.round();
        if (x - rounded).abs() < tol {
            format!("{}", rounded as i64)
        } else {
            let p = digits.saturating_sub(1) as usize;
            format!("{x:.p$e}")
        }
    };
    if z.im.abs() < tol {
        sig(z.re)
    } else {
        format!("{}{}{}i", sig(z.re), if z.im < 0.0 { "-" } else { "+" }, sig(z.im.abs()))
    }
}

fn checks_section(out: &mut String, title: &str, rep: &ValidationReport) {
    let _ = writeln!(out, "\n## {title}\n\n```\n{rep}```");
}

/// Markdown report of a Schur-Weyl analysis.
pub fn analysis_markdown(b: &CondensationBundle, sw: &SchurWeylReport, s: &Settings) -> (String, bool) {
    let cg = codegree_check(b, sw, s.tol);
    let labels = b.ambient().labels();
    let mut out = String::from("# Schur-Weyl analysis\n\n");
    let _ = writeln!(out, "- rank of K(C_A): {}", sw.rank);
    let _ = writeln!(out, "- ideal_dim: {}", sw.ideal_dim);
    let _ = writeln!(out, "- kernel_dim: {}", sw.kernel_dim);
    let dims: Vec<String> = sw.simple_dims().iter().map(|m| m.to_string()).collect();
    let _ = writeln!(out, "- blocks: {}", dims.join(","));
    let matched = if !sw.matching_attempted {
        "skipped (no S-matrix or induction)".to_string()
    } else if sw.unmatched.is_empty() {
        "all blocks".to_string()
    } else {
        format!("{} unmatched", sw.unmatched.len())
    };
    let _ = writeln!(out, "- matching: {matched}");
    let _ = writeln!(out, "- seed: {:#x}", s.seed);
    let _ = writeln!(out, "\n| block | simple dim | x | fit residual | codegree | expected | off-block |");
    let _ = writeln!(out, "|---|---|---|---|---|---|---|");
    for (blk, e) in sw.blocks.iter().zip(&cg.entries) {
        let x = blk.x.map(|x| labels[x].clone()).unwrap_or_else(|| "-".into());
        let fit = blk.fit_residual.map(|r| format!("{r:.1e}")).unwrap_or_else(|| "-".into());
        let exp = e.expected.map(|v| format_complex(v.into(), s.digits, s.tol)).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "| {} | {} | {x} | {fit} | {} | {exp} | {:.1e} |",
            e.block,
            blk.simple_dim,
            format_complex(e.on_block, s.digits, s.tol),
            e.off_block
        );
    }
    checks_section(&mut out, "Schur-Weyl checks", &sw.checks);
    checks_section(&mut out, "Codegree checks", &cg.checks);
    (out, sw.checks.is_valid() && cg.checks.is_valid())
}

fn seeded(b: &CondensationBundle, s: &Settings) -> Result<SchurWeylReport> {
    schur_weyl_seeded(b, s.tol, s.seed)
}

fn bundle_gate(b: &CondensationBundle, s: &Settings, out: &mut dyn Write) -> Result<bool> {
    let rep = b.check(s.tol);
    if !rep.is_valid() {
        writeln!(out, "# Bundle check\n\n```\n{rep}```")?;
    }
    Ok(rep.is_valid())
}

/// Runs one verb and returns whether every check passed.
pub fn execute(command: &Command, s: &Settings, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Validate { file } => {
            let doc = parse_document(&read(file)?).map_err(load_error)?;
            let (kind, rep) = match &doc {
                Document::Ring(r) => ("ring.v1", r.validate()),
                Document::Mtc(md) => ("mtc.v1", md.validate(s.tol)),
                Document::Bundle(b) => ("bundle.v1", b.check(s.tol)),
            };
            write!(out, "{kind}: {rep}")?;
            Ok(rep.is_valid())
        }
        Command::Analyze { bundle } => {
            let b = load_bundle(bundle)?;
            if !bundle_gate(&b, s, out)? {
                return Ok(false);
            }
            let sw = seeded(&b, s)?;
            let (text, ok) = analysis_markdown(&b, &sw, s);
            write!(out, "{text}")?;
            Ok(ok)
        }
        Command::Galois { bundle, dot } => {
            let b = load_bundle(bundle)?;
            if !bundle_gate(&b, s, out)? {
                return Ok(false);
            }
            let sw = seeded(&b, s)?;
            let rep = verify_correspondence(&b, &sw, s.tol)?;
            writeln!(out, "# Subring lattice ({} elements)\n", rep.entries.len())?;
            write!(out, "{}", markdown(&b, &rep))?;
            let mut text = String::new();
            checks_section(&mut text, "Correspondence checks", &rep.checks);
            write!(out, "{text}")?;
            if let Some(path) = dot {
                write_file(path, &hasse_dot(&rep))?;
            }
            Ok(rep.is_valid())
        }
        Command::Example { name, n, emit, mtc } => {
            let md = match mtc {
                Some(p) => Some(mtc_from_json(&read(p)?).map_err(load_error)?),
                None => None,
            };
            let usage = |e: Error| match e {
                Error::Unsupported(m) => Error::Parse(m),
                other => other,
            };
            let b = build(&ExampleSpec::from_name(name, *n, md).map_err(usage)?).map_err(usage)?;
            let json = bundle_to_json(&b)?;
            match emit {
                Some(path) => write_file(path, &json)?,
                None => write!(out, "{json}")?,
            }
            Ok(b.check(s.tol).is_valid())
        }
        Command::Indicators { bundle, x } => {
            let b = load_bundle(bundle)?;
            let xi = b
                .ambient()
                .index_of(x)
                .ok_or_else(|| Error::Parse(format!("unknown ambient label {x:?}")))?;
            let sw = seeded(&b, s)?;
            let row = indicator_row(&sw, xi)?;
            writeln!(out, "| Y | chi_{x}(Y) |")?;
            writeln!(out, "|---|---|")?;
            for (y, v) in row.iter().enumerate() {
                writeln!(out, "| {} | {} |", b.module_ring().name(y), format_complex(*v, s.digits, s.tol))?;
            }
            Ok(sw.checks.is_valid())
        }
    }
}

/// Full run with explicit streams and seed variable; returns the exit status.
pub fn run(cli: &Cli, seed_var: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = Settings::resolve(cli, seed_var, err).and_then(|s| execute(&cli.command, &s, out));
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_status(&e)
        }
    }
}

/// Entry point of the binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let seed = std::env::var(SEED_VAR).ok();
    let code = run(&cli, seed.as_deref(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code)
}

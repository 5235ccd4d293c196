//! The Galois correspondence between fusion subrings `B ⊇ C_A^0` of `K(C_A)` and
//! condensable subalgebras `A^B ⊆ A`.
//!
//! `A^B` is the image of `rho(e_1^B)`; on the block of `x` its rank is the normalized block
//! trace of `e_1^B`, which gives the multiplicities `n'_x = [x, A^B]`.

use std::fmt::Write as _;

use crate::basering::Subring;
use crate::condensation::{CondensationBundle, SchurWeylReport};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::{max_abs, CVector};
use crate::report::{Check, ValidationReport};

/// Rounding tolerance for invariant multiplicities.
pub const MULT_ROUNDING: f64 = 1e-6;

/// The lattice `L(C_A)`: every subring of `K(C_A)` containing the local simples.
pub fn lattice(b: &CondensationBundle) -> Result<Vec<Subring>> {
    b.module_ring().enumerate_subrings(b.local())
}

/// `[x, A^B]`, per block and, when every block is matched, per ambient label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMultiplicities {
    pub per_block: Vec<u32>,
    pub per_label: Option<Vec<u32>>,
}

pub fn invariant_subalgebra(b: &CondensationBundle, sw: &SchurWeylReport, sub: &Subring) -> Result<InvariantMultiplicities> {
    let e = b.e_sub(sub);
    let mut per_block = Vec::with_capacity(sw.blocks.len());
    for (k, bl) in sw.blocks.iter().enumerate() {
        let v = sw.character(bl, &e);
        let n = v.re.round();
        if (v.re - n).abs() > MULT_ROUNDING || v.im.abs() > MULT_ROUNDING || n < 0.0 {
            return Err(Error::Numerical(format!("rank of e_B on block {k} is {v}, not an integer")));
        }
        if n as usize > bl.simple_dim {
            return Err(Error::TheoremViolation(format!(
                "invariant multiplicity {n} exceeds block size {} on block {k}",
                bl.simple_dim
            )));
        }
        per_block.push(n as u32);
    }
    let per_label = if sw.is_fully_matched() {
        let amb = b.ambient();
        let mut v = vec![0u32; amb.rank()];
        for (bl, &n) in sw.blocks.iter().zip(&per_block) {
            v[bl.x.expect("fully matched")] = n;
        }
        if let Some(x) = (0..v.len()).find(|&x| v[x] != v[amb.dual(x)]) {
            return Err(Error::TheoremViolation(format!(
                "invariant multiplicities are not self-dual at {}",
                amb.labels()[x]
            )));
        }
        if v[0] != 1 {
            return Err(Error::TheoremViolation(format!("[1, A^B] = {}", v[0])));
        }
        Some(v)
    } else {
        None
    };
    Ok(InvariantMultiplicities { per_block, per_label })
}

#[derive(Clone, Debug)]
pub struct LatticeEntry {
    pub sub: Subring,
    pub names: Vec<String>,
    /// `dim(B) = sum_{Y in B} d_A(Y)^2`.
    pub dim: f64,
    pub invariant: InvariantMultiplicities,
    /// `d(A^B) = sum n'_x d(x)`, when multiplicities are known per label.
    pub algebra_dim: Option<f64>,
    /// `|dim(B) - dim(C) / (d(A) d(A^B))|`.
    pub formula_residual: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct GaloisReport {
    pub entries: Vec<LatticeEntry>,
    /// Covering relations `(smaller, larger)` of the inclusion order.
    pub hasse: Vec<(usize, usize)>,
    /// Distinct subrings give distinct projections `rho(e_1^B)`.
    pub injective: bool,
    /// Distinct subrings give distinct multiplicity vectors (conjugate subalgebras share one).
    pub distinct_multiplicities: bool,
    pub order_reversing: bool,
    pub endpoints: bool,
    pub checks: ValidationReport,
}

impl GaloisReport {
    pub fn is_valid(&self) -> bool {
        self.checks.is_valid()
    }

    pub fn find(&self, members: &[usize]) -> Option<&LatticeEntry> {
        let target = Subring::new(members.to_vec());
        self.entries.iter().find(|e| e.sub == target)
    }
}

/// Every identity of the correspondence on every lattice element.
pub fn verify_correspondence(b: &CondensationBundle, sw: &SchurWeylReport, tol: f64) -> Result<GaloisReport> {
    let subs = lattice(b)?;
    let ring = b.module_ring();
    let dim_c = b.ambient().global_dim();
    let d_alg = b.algebra().dim();
    let dims = b.ambient().dims();
    let mut checks = ValidationReport::new();
    let mut entries = Vec::with_capacity(subs.len());
    for sub in &subs {
        let invariant = invariant_subalgebra(b, sw, sub)?;
        let dim = ring.subring_dim(b.d_a(), sub);
        let algebra_dim = invariant
            .per_label
            .as_ref()
            .map(|v| v.iter().zip(&dims).map(|(&n, d)| n as f64 * d).sum::<f64>());
        if let Some(d) = algebra_dim {
            if d <= 0.0 {
                return Err(Error::TheoremViolation(format!("d(A^B) = {d} for {sub}")));
            }
        }
        let formula_residual = algebra_dim.map(|d| (dim - dim_c / (d_alg * d)).abs());
        if let Some(res) = formula_residual {
            checks.record(Check::residual(format!("dimension-formula {}", sub), res, tol));
        }
        entries.push(LatticeEntry { names: sub.names(ring), sub: sub.clone(), dim, invariant, algebra_dim, formula_residual });
    }

    let n = entries.len();
    let below = |i: usize, j: usize| i != j && entries[i].sub.is_subset_of(&entries[j].sub);
    let hasse: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)))
        .collect();

    let mut order_reversing = true;
    for i in 0..n {
        for j in 0..n {
            if below(i, j) {
                let (small, large) = (&entries[i].invariant.per_block, &entries[j].invariant.per_block);
                if large.iter().zip(small).any(|(l, s)| l > s) || large == small {
                    order_reversing = false;
                    checks.violate("order-reversal", vec![i, j], format!("{} ⊂ {}", entries[i].sub, entries[j].sub));
                }
            }
        }
    }
    checks.record(Check::exact("order-reversal", order_reversing));

    let projections: Vec<CVector> = subs.iter().map(|s| sw.algebra().mul(sw.e1(), &b.e_sub(s))).collect();
    let injective = (0..n).all(|i| (i + 1..n).all(|j| max_abs(&(&projections[i] - &projections[j])) > tol));
    checks.record(Check::exact("injective", injective));
    let absorption = subs
        .iter()
        .zip(&projections)
        .map(|(s, p)| max_abs(&(p - b.e_sub(s))))
        .fold(0.0, f64::max);
    checks.record(Check::residual("absorption", absorption, tol));
    let distinct_multiplicities =
        (0..n).all(|i| (i + 1..n).all(|j| entries[i].invariant.per_block != entries[j].invariant.per_block));

    let full = Subring::full(ring.rank());
    let mut endpoints = true;
    for e in &entries {
        if e.sub == *b.local() {
            let expect: Vec<u32> = sw.blocks.iter().map(|bl| bl.simple_dim as u32).collect();
            endpoints &= e.invariant.per_block == expect;
        }
        if e.sub == full {
            endpoints &= e.invariant.per_block.iter().sum::<u32>() == 1;
            if let Some(v) = &e.invariant.per_label {
                endpoints &= v[0] == 1;
            }
        }
    }
    checks.record(Check::exact("endpoints", endpoints));
    Ok(GaloisReport { entries, hasse, injective, distinct_multiplicities, order_reversing, endpoints, checks })
}

/// Group structure of `e_1 K(C_A)` and the pointed part of `K(C_A)`.
#[derive(Clone, Debug)]
pub struct GroupQuotient {
    /// Classes of `K(C_A)` under multiplication by local simples.
    pub cosets: Vec<Vec<usize>>,
    /// `Some` when `e_1 Y / d_A(Y)`, one `Y` per coset, is a group basis of `e_1 K(C_A)`.
    pub group: Option<FiniteGroup>,
    /// Invertible simples of `K(C_A)`.
    pub pointed: FiniteGroup,
}

pub fn group_quotient(b: &CondensationBundle, sw: &SchurWeylReport, tol: f64) -> GroupQuotient {
    let ring = b.module_ring();
    let s = ring.rank();
    let mut class = vec![usize::MAX; s];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for y in 0..s {
        if class[y] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = b
            .local()
            .members
            .iter()
            .flat_map(|&l| ring.product(l, y).into_iter().map(|(k, _)| k))
            .collect();
        members.push(y);
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class[m] = cosets.len();
        }
        cosets.push(members);
    }
    let alg = sw.algebra();
    let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
    let elems: Vec<CVector> = reps
        .iter()
        .map(|&y| alg.mul(sw.e1(), &alg.basis(y)) / num_complex::Complex64::new(b.d_a().values[y], 0.0))
        .collect();
    let group = if reps.len() == sw.ideal_dim {
        let table: Option<Vec<Vec<usize>>> = (0..reps.len())
            .map(|i| {
                (0..reps.len())
                    .map(|j| {
                        let p = alg.mul(&elems[i], &elems[j]);
                        (0..reps.len()).find(|&k| max_abs(&(&p - &elems[k])) < tol)
                    })
                    .collect()
            })
            .collect();
        table.and_then(|t| FiniteGroup::from_table(reps.iter().map(|&y| ring.name(y).to_string()).collect(), t))
    } else {
        None
    };
    let inv = ring.invertibles();
    let table = inv
        .iter()
        .map(|&g| inv.iter().map(|&h| inv.iter().position(|&k| k == ring.product(g, h)[0].0).expect("closed")).collect())
        .collect();
    let pointed = FiniteGroup::from_table(inv.iter().map(|&g| ring.name(g).to_string()).collect(), table)
        .expect("invertible simples form a group");
    GroupQuotient { cosets, group, pointed }
}

fn subring_label(e: &LatticeEntry) -> String {
    format!("{{{}}}", e.names.join(","))
}

fn fmt_dim(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 {
        format!("{}", x.round())
    } else {
        format!("{x:.6}")
    }
}

/// Hasse diagram in DOT; nodes read `B (dim B) ↔ A^B (d(A^B))`.
pub fn hasse_dot(report: &GaloisReport) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, e) in report.entries.iter().enumerate() {
        let d = e.algebra_dim.map(fmt_dim).unwrap_or_else(|| "?".into());
        let label = format!("{} ({}) ↔ A^B ({})", subring_label(e), fmt_dim(e.dim), d);
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
    }
    for &(i, j) in &report.hasse {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

/// Markdown table of the correspondence.
pub fn markdown(b: &CondensationBundle, report: &GaloisReport) -> String {
    let labels = b.ambient().labels();
    let mut out = String::new();
    let _ = writeln!(out, "| B | dim B | A^B | d(A^B) | residual |");
    let _ = writeln!(out, "|---|---|---|---|---|");
    for e in &report.entries {
        let alg = match &e.invariant.per_label {
            Some(v) => v
                .iter()
                .enumerate()
                .filter(|&(_, &n)| n > 0)
                .map(|(x, &n)| if n == 1 { labels[x].clone() } else { format!("{n}·{}", labels[x]) })
                .collect::<Vec<_>>()
                .join(" + "),
            None => format!("blocks {:?}", e.invariant.per_block),
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            subring_label(e),
            fmt_dim(e.dim),
            alg,
            e.algebra_dim.map(fmt_dim).unwrap_or_else(|| "-".into()),
            e.formula_residual.map(|r| format!("{r:.1e}")).unwrap_or_else(|| "-".into())
        );
    }
    let _ = writeln!(
        out,
        "\ninjective: {}, distinct multiplicities: {}, order-reversing: {}, endpoints: {}",
        report.injective, report.distinct_multiplicities, report.order_reversing, report.endpoints
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{build, ExampleSpec};
    use crate::condensation::schur_weyl;

    #[test]
    fn toric_lattice_and_group() {
        let b = build(&ExampleSpec::ToricCode).unwrap();
        let sw = schur_weyl(&b, 1e-9).unwrap();
        let rep = verify_correspondence(&b, &sw, 1e-9).unwrap();
        assert_eq!(rep.entries.len(), 2);
        assert!(rep.is_valid(), "{}", rep.checks);
        let vec_entry = &rep.entries[0];
        assert_eq!(vec_entry.algebra_dim, Some(2.0));
        assert!(vec_entry.formula_residual.unwrap() < 1e-9);
        let q = group_quotient(&b, &sw, 1e-9);
        assert_eq!(q.group.unwrap().describe(), "Z2");
    }

    #[test]
    fn dot_has_one_edge_per_cover() {
        let b = build(&ExampleSpec::ToricCode).unwrap();
        let sw = schur_weyl(&b, 1e-9).unwrap();
        let rep = verify_correspondence(&b, &sw, 1e-9).unwrap();
        let dot = hasse_dot(&rep);
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("{1} (1) ↔ A^B (2)"));
        assert!(markdown(&b, &rep).contains("| {1,M} | 2 | 1 | 1 |"));
    }
}

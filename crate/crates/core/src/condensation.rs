//! Condensable algebras and the fusion action of `C_A` on `A`, at the level of characters.
//!
//! A [`CondensationBundle`] carries everything that is checkable from finite data: the
//! ambient category, the multiplicities `n_x = [x, A]`, the fusion ring `K(C_A)` with its
//! dimensions, the induction matrix `[alpha(x), Y]` and the local simples.
//! [`schur_weyl`] splits `e_1 K(C_A)` into simple blocks and, when the ambient S-matrix and
//! induction are known, attaches each block to the `x` whose multiplicity space it acts on.

use num_complex::Complex64;

use crate::basering::{BasedRing, DimVector, Subring};
use crate::error::{Error, Result};
use crate::linalg::{c, max_abs, CVector};
use crate::modulardata::ModularData;
use crate::report::{Check, ValidationReport};
use crate::scalar::Scalar;
use crate::semisimple::{AssocAlgebra, DEFAULT_SEED};

/// Block-to-label matching accepts a fit below this RMS residual...
pub const MATCH_ACCEPT: f64 = 1e-6;
/// ...provided the runner-up fit is above this one.
pub const MATCH_SEPARATION: f64 = 1e-3;

/// The ambient MTC, either with full modular data or with dimensions and twists only.
#[derive(Clone, Debug)]
pub enum Ambient {
    Modular { md: ModularData, ring: BasedRing },
    Weighted { labels: Vec<String>, dual: Vec<usize>, dims: Vec<f64>, twists: Vec<Scalar> },
}

impl Ambient {
    /// Full modular data; the fusion ring comes from the Verlinde formula.
    pub fn modular(md: ModularData) -> Result<Self> {
        let ring = md.verlinde()?;
        Ok(Ambient::Modular { md, ring })
    }

    pub fn weighted(labels: Vec<String>, dual: Vec<usize>, dims: Vec<f64>, twists: Vec<Scalar>) -> Result<Self> {
        let r = labels.len();
        if dual.len() != r || dims.len() != r || twists.len() != r {
            return Err(Error::Structural(format!("ambient of rank {r} has mismatched data")));
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= r) {
            return Err(Error::InvalidIndex { index: bad, rank: r });
        }
        Ok(Ambient::Weighted { labels, dual, dims, twists })
    }

    pub fn rank(&self) -> usize {
        self.labels().len()
    }

    pub fn labels(&self) -> &[String] {
        match self {
            Ambient::Modular { md, .. } => md.labels(),
            Ambient::Weighted { labels, .. } => labels,
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == name)
    }

    pub fn dual(&self, i: usize) -> usize {
        match self {
            Ambient::Modular { md, .. } => md.dual(i),
            Ambient::Weighted { dual, .. } => dual[i],
        }
    }

    pub fn dims(&self) -> Vec<f64> {
        match self {
            Ambient::Modular { md, .. } => md.dims(),
            Ambient::Weighted { dims, .. } => dims.clone(),
        }
    }

    pub fn twist(&self, i: usize) -> &Scalar {
        match self {
            Ambient::Modular { md, .. } => md.twist(i),
            Ambient::Weighted { twists, .. } => &twists[i],
        }
    }

    pub fn global_dim(&self) -> f64 {
        self.dims().iter().map(|d| d * d).sum()
    }

    pub fn modular_data(&self) -> Option<&ModularData> {
        match self {
            Ambient::Modular { md, .. } => Some(md),
            Ambient::Weighted { .. } => None,
        }
    }

    pub fn ring(&self) -> Option<&BasedRing> {
        match self {
            Ambient::Modular { ring, .. } => Some(ring),
            Ambient::Weighted { .. } => None,
        }
    }
}

/// `A = ⊕ W_x ⊗ x`, recorded by `n_x = dim W_x`.
#[derive(Clone, Debug)]
pub struct CondensableAlgebra {
    ambient: Ambient,
    mult: Vec<u32>,
}

impl CondensableAlgebra {
    pub fn new(ambient: Ambient, mult: Vec<u32>) -> Result<Self> {
        if mult.len() != ambient.rank() {
            return Err(Error::Structural(format!(
                "multiplicity vector has length {}, ambient rank is {}",
                mult.len(),
                ambient.rank()
            )));
        }
        Ok(CondensableAlgebra { ambient, mult })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// Labels with `n_x > 0`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&x| self.mult[x] > 0).collect()
    }

    /// `d(A) = sum n_x d(x)`.
    pub fn dim(&self) -> f64 {
        self.ambient.dims().iter().zip(&self.mult).map(|(d, &n)| d * n as f64).sum()
    }

    /// Necessary conditions for condensability.
    pub fn check(&self, tol: f64) -> ValidationReport {
        let mut rep = ValidationReport::new();
        if self.mult[0] != 1 {
            rep.violate("connected", vec![0], format!("[1, A] = {}", self.mult[0]));
        }
        for x in self.support() {
            if !self.ambient.twist(x).approx_eq(&Scalar::one(), tol) {
                rep.violate("trivial-twist", vec![x], format!("theta = {}", self.ambient.twist(x)));
            }
            let xd = self.ambient.dual(x);
            if self.mult[xd] != self.mult[x] {
                rep.violate("self-dual", vec![x, xd], format!("n = {} but n* = {}", self.mult[x], self.mult[xd]));
            }
        }
        if self.dim() <= 0.0 {
            rep.violate("positive-dimension", vec![], format!("d(A) = {}", self.dim()));
        }
        rep
    }
}

/// A condensable algebra together with the module category data `C_A`.
#[derive(Clone, Debug)]
pub struct CondensationBundle {
    algebra: CondensableAlgebra,
    module_ring: BasedRing,
    d_a: DimVector,
    induction: Option<Vec<Vec<u32>>>,
    local: Subring,
}

impl CondensationBundle {
    /// `d_a` defaults to the Frobenius-Perron dimensions of `module_ring`.
    pub fn new(
        algebra: CondensableAlgebra,
        module_ring: BasedRing,
        d_a: Option<DimVector>,
        induction: Option<Vec<Vec<u32>>>,
        local: Subring,
    ) -> Result<Self> {
        let s = module_ring.rank();
        let d_a = match d_a {
            Some(d) => d,
            None => module_ring.fp_dims()?,
        };
        if d_a.len() != s {
            return Err(Error::Structural(format!("d_A has length {}, module ring rank is {s}", d_a.len())));
        }
        if let Some(m) = &induction {
            let r = algebra.ambient.rank();
            if m.len() != r || m.iter().any(|row| row.len() != s) {
                return Err(Error::Structural(format!("induction must be {r} x {s}")));
            }
        }
        if let Some(&bad) = local.members.iter().find(|&&i| i >= s) {
            return Err(Error::InvalidIndex { index: bad, rank: s });
        }
        Ok(CondensationBundle { algebra, module_ring, d_a, induction, local })
    }

    pub fn algebra(&self) -> &CondensableAlgebra {
        &self.algebra
    }

    pub fn ambient(&self) -> &Ambient {
        &self.algebra.ambient
    }

    pub fn module_ring(&self) -> &BasedRing {
        &self.module_ring
    }

    pub fn d_a(&self) -> &DimVector {
        &self.d_a
    }

    pub fn induction(&self) -> Option<&[Vec<u32>]> {
        self.induction.as_deref()
    }

    pub fn local(&self) -> &Subring {
        &self.local
    }

    /// `dim(C_A) = sum_Y d_A(Y)^2`.
    pub fn module_dim(&self) -> f64 {
        self.d_a.values.iter().map(|d| d * d).sum()
    }

    /// Induced element `alpha(x)` in `K(C_A)`, when the induction matrix is known.
    pub fn induced(&self, x: usize) -> Option<CVector> {
        let m = self.induction.as_ref()?;
        Some(CVector::from_iterator(m[x].len(), m[x].iter().map(|&k| c(k as f64))))
    }

    /// Every invariant of the algebra and of the bundle; residuals are reported, never raised.
    pub fn check(&self, tol: f64) -> ValidationReport {
        let mut rep = ValidationReport::new();
        let amb = self.ambient();
        if let Some(md) = amb.modular_data() {
            rep.merge("ambient", md.validate(tol));
        }
        rep.merge("algebra", self.algebra.check(tol));
        rep.merge("module-ring", self.module_ring.validate());
        rep.merge("module-dims", self.d_a.validate(&self.module_ring, tol));

        let dim_c = amb.global_dim();
        let d_alg = self.algebra.dim();
        let scale = dim_c.max(1.0);
        rep.record(Check::residual("module-dim", (self.module_dim() - dim_c / d_alg).abs() / scale, tol));
        rep.record(Check::exact("local-subring", self.module_ring.is_subring(&self.local.members)));
        let local_dim = self.module_ring.subring_dim(&self.d_a, &self.local);
        rep.record(Check::residual("local-dim", (local_dim - dim_c / (d_alg * d_alg)).abs() / scale, tol));

        if let Some(m) = &self.induction {
            let dims = amb.dims();
            let mut worst = 0.0f64;
            for (x, row) in m.iter().enumerate() {
                let d: f64 = row.iter().zip(&self.d_a.values).map(|(&k, d)| k as f64 * d).sum();
                worst = worst.max((d - dims[x]).abs());
                if row[0] != self.algebra.mult[x] {
                    rep.violate("adjunction", vec![x], format!("[alpha(x), 1] = {} but n_x = {}", row[0], self.algebra.mult[x]));
                }
            }
            rep.record(Check::residual("induction-dims", worst, tol));
            if let Some(ring) = amb.ring() {
                rep.record(Check::exact("induction-homomorphism", self.induction_is_homomorphism(ring, m)));
            }
        }
        rep
    }

    fn induction_is_homomorphism(&self, ring: &BasedRing, m: &[Vec<u32>]) -> bool {
        let r = ring.rank();
        let s = self.module_ring.rank();
        let images: Vec<Vec<f64>> = m.iter().map(|row| row.iter().map(|&k| k as f64).collect()).collect();
        (0..r).all(|x| {
            (0..r).all(|y| {
                let lhs = self.module_ring.multiply(&images[x], &images[y]);
                let mut rhs = vec![0.0; s];
                for (z, k) in ring.product(x, y) {
                    for (t, v) in rhs.iter_mut().enumerate() {
                        *v += k as f64 * images[z][t];
                    }
                }
                lhs == rhs
            })
        })
    }

    /// `e_1^B = (1/dim B) sum_{Y in B} d_A(Y) Y`.
    pub fn e_sub(&self, sub: &Subring) -> CVector {
        let s = self.module_ring.rank();
        let dim = self.module_ring.subring_dim(&self.d_a, sub);
        let mut v = CVector::zeros(s);
        for &y in &sub.members {
            v[y] = c(self.d_a.values[y] / dim);
        }
        v
    }
}

/// One simple block of `e_1 K(C_A)`.
#[derive(Clone, Debug)]
pub struct MatchedBlock {
    /// Central idempotent in the coordinates of `K(C_A)`.
    pub idempotent: CVector,
    pub simple_dim: usize,
    /// The ambient label whose multiplicity space the block acts on.
    pub x: Option<usize>,
    pub fit_residual: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct SchurWeylReport {
    pub rank: usize,
    pub ideal_dim: usize,
    pub kernel_dim: usize,
    pub blocks: Vec<MatchedBlock>,
    /// Whether S-matrix matching was attempted.
    pub matching_attempted: bool,
    pub unmatched: Vec<usize>,
    pub checks: ValidationReport,
    algebra: AssocAlgebra,
    e1: CVector,
}

impl SchurWeylReport {
    pub fn algebra(&self) -> &AssocAlgebra {
        &self.algebra
    }

    /// `e_1^A`, the idempotent of the local subcategory.
    pub fn e1(&self) -> &CVector {
        &self.e1
    }

    pub fn block_of(&self, x: usize) -> Option<&MatchedBlock> {
        self.blocks.iter().find(|b| b.x == Some(x))
    }

    pub fn is_fully_matched(&self) -> bool {
        self.matching_attempted && self.unmatched.is_empty()
    }

    /// Character of the block's simple module: `Tr(e a) / m` in the regular representation.
    pub fn character(&self, block: &MatchedBlock, a: &CVector) -> Complex64 {
        self.algebra.trace(&self.algebra.mul(&block.idempotent, a)) / block.simple_dim as f64
    }

    /// Simple dimensions, sorted.
    pub fn simple_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks.iter().map(|b| b.simple_dim).collect();
        v.sort_unstable();
        v
    }
}

/// Theorem-level Schur-Weyl check with the default splitting seed.
pub fn schur_weyl(b: &CondensationBundle, tol: f64) -> Result<SchurWeylReport> {
    schur_weyl_seeded(b, tol, DEFAULT_SEED)
}

pub fn schur_weyl_seeded(b: &CondensationBundle, tol: f64, seed: u64) -> Result<SchurWeylReport> {
    let alg = AssocAlgebra::from_ring(&b.module_ring);
    let e1 = b.e_sub(&b.local);
    let (ideal, basis) = alg.ideal(&e1);
    let rank = b.module_ring.rank();
    let ideal_dim = basis.ncols();
    let mult = b.algebra.mult();
    let sum_sq: usize = mult.iter().map(|&n| (n * n) as usize).sum();
    if ideal_dim != sum_sq {
        return Err(Error::TheoremViolation(format!(
            "dim e_1 K(C_A) = {ideal_dim} but sum of n_x^2 = {sum_sq}"
        )));
    }
    let profile = ideal.central_idempotents(seed)?;
    let mut expected: Vec<usize> = mult.iter().filter(|&&n| n > 0).map(|&n| n as usize).collect();
    expected.sort_unstable();
    if profile.simple_dims() != expected {
        return Err(Error::TheoremViolation(format!(
            "block sizes {:?} differ from nonzero multiplicities {:?}",
            profile.simple_dims(),
            expected
        )));
    }
    let blocks: Vec<MatchedBlock> = profile
        .blocks
        .iter()
        .map(|blk| MatchedBlock {
            idempotent: &basis * &blk.idempotent,
            simple_dim: blk.simple_dim,
            x: None,
            fit_residual: None,
        })
        .collect();

    let mut rep = SchurWeylReport {
        rank,
        ideal_dim,
        kernel_dim: rank - ideal_dim,
        blocks,
        matching_attempted: false,
        unmatched: Vec::new(),
        checks: ValidationReport::new(),
        algebra: alg,
        e1,
    };
    rep.checks.record(Check::residual("block-orthogonality", profile.orthogonality_residual, tol));
    rep.checks.record(Check::residual("block-completeness", profile.completeness_residual, tol));
    rep.checks.record(Check::residual("block-centrality", profile.centrality_residual, tol));
    rep.checks.record(Check::exact("kernel-dimension", rep.kernel_dim + sum_sq == rank));
    rep.checks.record(Check::residual("trace-decomposition", trace_decomposition_residual(&rep), tol));

    if let (Some(md), Some(_)) = (b.ambient().modular_data(), b.induction()) {
        match_blocks(b, md, &mut rep);
        check_matched_identities(b, &mut rep, tol);
    } else {
        rep.unmatched = (0..rep.blocks.len()).collect();
    }
    Ok(rep)
}

/// `sum_B m_B chi_B(a) = Tr(e_1 a)` over basis elements `a`.
fn trace_decomposition_residual(rep: &SchurWeylReport) -> f64 {
    let alg = &rep.algebra;
    (0..alg.dim())
        .map(|i| {
            let a = alg.basis(i);
            let lhs: Complex64 = rep.blocks.iter().map(|bl| rep.character(bl, &a) * bl.simple_dim as f64).sum();
            (lhs - alg.trace(&alg.mul(&rep.e1, &a))).norm()
        })
        .fold(0.0, f64::max)
}

/// Expected character of `W_x` at `alpha(y)`: `n_x S[x*][y] / d(x)`.
fn indicator_pattern(b: &CondensationBundle, md: &ModularData, x: usize) -> Vec<Complex64> {
    let n = b.algebra.mult()[x] as f64;
    let xd = md.dual(x);
    let dx = md.s(0, x).to_c64();
    (0..md.rank()).map(|y| md.s(xd, y).to_c64() * n / dx).collect()
}

fn match_blocks(b: &CondensationBundle, md: &ModularData, rep: &mut SchurWeylReport) {
    rep.matching_attempted = true;
    let r = md.rank();
    let induced: Vec<CVector> = (0..r).map(|y| b.induced(y).expect("induction present")).collect();
    let observed: Vec<Vec<Complex64>> = rep
        .blocks
        .iter()
        .map(|bl| induced.iter().map(|a| rep.character(bl, a)).collect())
        .collect();
    let mult = b.algebra.mult();
    for x in b.algebra.support() {
        let pattern = indicator_pattern(b, md, x);
        let mut fits: Vec<(f64, usize)> = (0..rep.blocks.len())
            .filter(|&k| rep.blocks[k].simple_dim == mult[x] as usize)
            .map(|k| {
                let ss: f64 = observed[k].iter().zip(&pattern).map(|(o, p)| (o - p).norm_sqr()).sum();
                ((ss / r as f64).sqrt(), k)
            })
            .collect();
        fits.sort_by(|a, b| a.0.total_cmp(&b.0));
        let accepted = match fits.as_slice() {
            [] => None,
            [best] => (best.0 < MATCH_ACCEPT).then_some(*best),
            [best, second, ..] => (best.0 < MATCH_ACCEPT && second.0 > MATCH_SEPARATION).then_some(*best),
        };
        match accepted {
            Some((res, k)) if rep.blocks[k].x.is_none() => {
                rep.blocks[k].x = Some(x);
                rep.blocks[k].fit_residual = Some(res);
            }
            Some((_, k)) => rep.checks.violate(
                "matching-injective",
                vec![x, rep.blocks[k].x.unwrap_or(usize::MAX)],
                format!("block {k} fits two labels"),
            ),
            None => rep.checks.violate(
                "matching",
                vec![x],
                format!("no block fits the indicator pattern of {}", md.labels()[x]),
            ),
        }
    }
    rep.unmatched = (0..rep.blocks.len()).filter(|&k| rep.blocks[k].x.is_none()).collect();
    let complete = rep.unmatched.is_empty();
    rep.checks.record(Check::exact("matching-complete", complete));
}

fn check_matched_identities(b: &CondensationBundle, rep: &mut SchurWeylReport, tol: f64) {
    let mult = b.algebra.mult();
    let mut worst_local = 0.0f64;
    let mut worst_mult = 0.0f64;
    let s = b.module_ring.rank();
    for bl in rep.blocks.iter().filter(|bl| bl.x.is_some()) {
        let n = mult[bl.x.unwrap()] as f64;
        for &y in &b.local.members {
            let chi = rep.character(bl, &rep.algebra.basis(y));
            worst_local = worst_local.max((chi - n * b.d_a.values[y]).norm());
        }
        if bl.simple_dim == 1 {
            for i in 0..s {
                let ci = rep.character(bl, &rep.algebra.basis(i));
                for j in 0..s {
                    let cj = rep.character(bl, &rep.algebra.basis(j));
                    let cij = rep.character(bl, &rep.algebra.mul(&rep.algebra.basis(i), &rep.algebra.basis(j)));
                    worst_mult = worst_mult.max((ci * cj - cij).norm());
                }
            }
        }
    }
    rep.checks.record(Check::residual("local-acts-by-dimension", worst_local, tol));
    rep.checks.record(Check::residual("one-dimensional-multiplicative", worst_mult, tol));
}

/// Character of `W_x` at `a`.
pub fn indicator(sw: &SchurWeylReport, x: usize, a: &CVector) -> Result<Complex64> {
    let block = sw.block_of(x).ok_or_else(|| {
        Error::MissingData(format!("no block is matched to label {x}; ambient S and induction are required"))
    })?;
    Ok(sw.character(block, a))
}

/// Indicator values at every simple of `C_A`.
pub fn indicator_row(sw: &SchurWeylReport, x: usize) -> Result<Vec<Complex64>> {
    (0..sw.rank).map(|y| indicator(sw, x, &sw.algebra.basis(y))).collect()
}

/// Formal codegree of one block.
#[derive(Clone, Debug)]
pub struct CodegreeEntry {
    pub block: usize,
    pub x: Option<usize>,
    /// Trace of `phi_{W_x}` on `W_x`.
    pub on_block: Complex64,
    /// `n_x dim(C) / (d(x) d(A))`, when the block is matched.
    pub expected: Option<f64>,
    /// Largest trace of `phi_{W_x}` on any other block.
    pub off_block: f64,
}

#[derive(Clone, Debug)]
pub struct CodegreeReport {
    pub entries: Vec<CodegreeEntry>,
    pub checks: ValidationReport,
}

/// `phi_{W_x} = sum_Y chi_x(Y) Y*` acts on `W_x` by the formal codegree and kills other blocks.
pub fn codegree_check(b: &CondensationBundle, sw: &SchurWeylReport, tol: f64) -> CodegreeReport {
    let s = b.module_ring.rank();
    let alg = &sw.algebra;
    let dim_c = b.ambient().global_dim();
    let d_alg = b.algebra.dim();
    let dims = b.ambient().dims();
    let mut checks = ValidationReport::new();
    let mut entries = Vec::new();
    for (k, bl) in sw.blocks.iter().enumerate() {
        let mut phi = CVector::zeros(s);
        for y in 0..s {
            phi[b.module_ring.dual(y)] += sw.character(bl, &alg.basis(y));
        }
        let on_block = sw.character(bl, &phi);
        let off_block = sw
            .blocks
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, other)| sw.character(other, &phi).norm())
            .fold(0.0, f64::max);
        let expected = bl.x.map(|x| b.algebra.mult()[x] as f64 * dim_c / (dims[x] * d_alg));
        let scale = expected.unwrap_or(on_block.norm()).max(1.0);
        if let Some(e) = expected {
            checks.record(Check::residual(format!("codegree[{k}]"), (on_block - e).norm() / scale, tol));
        }
        let f = on_block / bl.simple_dim as f64;
        let proportional = max_abs(&(&phi - &bl.idempotent * f));
        checks.record(Check::residual(format!("phi-proportional[{k}]"), proportional / scale, tol));
        checks.record(Check::residual(format!("off-block[{k}]"), off_block / scale, tol));
        entries.push(CodegreeEntry { block: k, x: bl.x, on_block, expected, off_block });
    }
    CodegreeReport { entries, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{build, ExampleSpec};

    #[test]
    fn toric_bundle_checks() {
        let b = build(&ExampleSpec::ToricCode).unwrap();
        let rep = b.check(1e-9);
        assert!(rep.is_valid(), "{rep}");
        assert!((b.algebra().dim() - 2.0).abs() < 1e-12);
        assert!((b.module_dim() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn toric_schur_weyl_and_indicators() {
        let b = build(&ExampleSpec::ToricCode).unwrap();
        let sw = schur_weyl(&b, 1e-9).unwrap();
        assert_eq!(sw.kernel_dim, 0);
        assert_eq!(sw.simple_dims(), vec![1, 1]);
        assert!(sw.is_fully_matched());
        assert!(sw.checks.is_valid(), "{}", sw.checks);
        let e = b.ambient().index_of("e").unwrap();
        let m = b.module_ring().index_of("M").unwrap();
        let chi = indicator(&sw, e, &sw.algebra().basis(m)).unwrap();
        assert!((chi - c(-1.0)).norm() < 1e-12);
        let am = b.ambient().index_of("m").unwrap();
        let via_induction = indicator(&sw, e, &b.induced(am).unwrap()).unwrap();
        assert!((via_induction - c(-1.0)).norm() < 1e-12);
        assert!((indicator(&sw, e, sw.algebra().unit()).unwrap() - c(1.0)).norm() < 1e-12);
    }

    #[test]
    fn toric_codegree() {
        let b = build(&ExampleSpec::ToricCode).unwrap();
        let sw = schur_weyl(&b, 1e-9).unwrap();
        let cd = codegree_check(&b, &sw, 1e-9);
        assert!(cd.checks.is_valid(), "{}", cd.checks);
        let e = b.ambient().index_of("e").unwrap();
        let entry = cd.entries.iter().find(|en| en.x == Some(e)).unwrap();
        assert!((entry.on_block - c(2.0)).norm() < 1e-9);
    }

    #[test]
    fn unit_algebra_is_trivially_condensable() {
        let md = crate::builtin::ising();
        let ring = md.verlinde().unwrap();
        let r = ring.rank();
        let amb = Ambient::modular(md.clone()).unwrap();
        let mut mult = vec![0; r];
        mult[0] = 1;
        let alg = CondensableAlgebra::new(amb, mult).unwrap();
        let induction = (0..r).map(|x| (0..r).map(|y| u32::from(x == y)).collect()).collect();
        let b = CondensationBundle::new(alg, ring, Some(md.dim_vector()), Some(induction), Subring::full(r)).unwrap();
        assert!(b.check(1e-9).is_valid(), "{}", b.check(1e-9));
        let sw = schur_weyl(&b, 1e-9).unwrap();
        assert_eq!(sw.kernel_dim, r - 1);
        let cd = codegree_check(&b, &sw, 1e-9);
        assert!(cd.checks.is_valid());
        assert!((cd.entries[0].on_block - c(4.0)).norm() < 1e-9);
    }

    #[test]
    fn wrong_multiplicities_are_a_theorem_violation() {
        let good = build(&ExampleSpec::ToricCode).unwrap();
        let amb = good.ambient().clone();
        let alg = CondensableAlgebra::new(amb, vec![1, 0, 0, 0]).unwrap();
        let b = CondensationBundle::new(alg, good.module_ring().clone(), None, None, Subring::unit()).unwrap();
        assert!(matches!(schur_weyl(&b, 1e-9), Err(Error::TheoremViolation(_))));
    }

    #[test]
    fn e_sub_of_unit_is_unit() {
        let b = build(&ExampleSpec::ToricCode).unwrap();
        let e = b.e_sub(&Subring::unit());
        assert_eq!(e[0], c(1.0));
        assert_eq!(e[1], c(0.0));
    }
}

//! Wedderburn decomposition of finite-dimensional semisimple algebras over C.
//!
//! Primitive central idempotents are found by eigen-splitting: a pseudo-random central
//! element acts diagonalizably on the center, and its spectral projectors separate the
//! simple blocks. Pieces that stay clustered are split again with a fresh element.

use num_complex::Complex64;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basering::BasedRing;
use crate::error::{Error, Result};
use crate::linalg::{c, cluster, column_space, eigenvalues, max_abs, nullspace, CMatrix, CVector};

/// Seed of the pseudo-random central element; retries increment it.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;
/// Eigenvalues closer than this are treated as one cluster.
pub const EIGEN_GAP: f64 = 1e-7;
/// Tolerance for `sqrt(block_dim)` to be an integer.
pub const SIMPLE_DIM_ROUNDING: f64 = 1e-6;
const MAX_RETRIES: u64 = 8;
const RANK_TOL: f64 = 1e-9;

/// A unital associative algebra with complex structure constants `c[i][j][k]`.
#[derive(Clone, Debug)]
pub struct AssocAlgebra {
    dim: usize,
    structure: Vec<Complex64>,
    unit: CVector,
}

/// One simple block `e A e = M_m(C)`.
#[derive(Clone, Debug)]
pub struct Block {
    pub idempotent: CVector,
    pub block_dim: usize,
    pub simple_dim: usize,
}

#[derive(Clone, Debug)]
pub struct BlockProfile {
    pub blocks: Vec<Block>,
    /// max |e_i e_j - delta_ij e_i|
    pub orthogonality_residual: f64,
    /// max |sum e_i - 1|
    pub completeness_residual: f64,
    /// max |e_i b - b e_i| over basis elements b
    pub centrality_residual: f64,
}

impl BlockProfile {
    pub fn simple_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks.iter().map(|b| b.simple_dim).collect();
        v.sort_unstable();
        v
    }
}

impl AssocAlgebra {
    pub fn new(dim: usize, structure: Vec<Complex64>, unit: CVector) -> Result<Self> {
        if structure.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::Structural(format!("algebra of dimension {dim} has mismatched structure constants")));
        }
        Ok(AssocAlgebra { dim, structure, unit })
    }

    /// Complexification of a based ring.
    pub fn from_ring(ring: &BasedRing) -> Self {
        let n = ring.rank();
        let structure = ring.fusion().iter().map(|&m| c(m as f64)).collect();
        let mut unit = CVector::zeros(n);
        unit[0] = c(1.0);
        AssocAlgebra { dim: n, structure, unit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &CVector {
        &self.unit
    }

    #[inline]
    fn sc(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis(&self, i: usize) -> CVector {
        let mut v = CVector::zeros(self.dim);
        v[i] = c(1.0);
        v
    }

    pub fn mul(&self, a: &CVector, b: &CVector) -> CVector {
        let n = self.dim;
        let mut out = CVector::zeros(n);
        for i in (0..n).filter(|&i| a[i].norm() > 0.0) {
            for j in (0..n).filter(|&j| b[j].norm() > 0.0) {
                let w = a[i] * b[j];
                for k in 0..n {
                    let s = self.sc(i, j, k);
                    if s.norm() > 0.0 {
                        out[k] += w * s;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult(&self, a: &CVector) -> CMatrix {
        let n = self.dim;
        let mut m = CMatrix::zeros(n, n);
        for i in (0..n).filter(|&i| a[i].norm() > 0.0) {
            for j in 0..n {
                for k in 0..n {
                    m[(k, j)] += a[i] * self.sc(i, j, k);
                }
            }
        }
        m
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult(&self, a: &CVector) -> CMatrix {
        let n = self.dim;
        let mut m = CMatrix::zeros(n, n);
        for j in (0..n).filter(|&j| a[j].norm() > 0.0) {
            for i in 0..n {
                for k in 0..n {
                    m[(k, i)] += a[j] * self.sc(i, j, k);
                }
            }
        }
        m
    }

    /// Regular trace `Tr(left_mult(a))`.
    pub fn trace(&self, a: &CVector) -> Complex64 {
        let n = self.dim;
        (0..n).filter(|&i| a[i].norm() > 0.0).map(|i| a[i] * (0..n).map(|j| self.sc(i, j, j)).sum::<Complex64>()).sum()
    }

    /// Largest associativity and unit residual.
    pub fn axiom_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            let bi = self.basis(i);
            worst = worst.max(max_abs(&(self.mul(&self.unit, &bi) - &bi)));
            worst = worst.max(max_abs(&(self.mul(&bi, &self.unit) - &bi)));
            for j in 0..n {
                let bij = self.mul(&bi, &self.basis(j));
                for k in 0..n {
                    let bk = self.basis(k);
                    let lhs = self.mul(&bij, &bk);
                    let rhs = self.mul(&bi, &self.mul(&self.basis(j), &bk));
                    worst = worst.max(max_abs(&(lhs - rhs)));
                }
            }
        }
        worst
    }

    /// Orthonormal basis (columns) of the center.
    pub fn center(&self) -> CMatrix {
        let n = self.dim;
        let mut stacked = CMatrix::zeros(n * n, n);
        for i in 0..n {
            let b = self.basis(i);
            let comm = self.right_mult(&b) - self.left_mult(&b);
            stacked.view_mut((i * n, 0), (n, n)).copy_from(&comm);
        }
        nullspace(&stacked, RANK_TOL)
    }

    /// The two-sided ideal `e A` for a central idempotent `e`, as an algebra with unit `e`,
    /// together with its orthonormal basis expressed in the coordinates of `self`.
    pub fn ideal(&self, e: &CVector) -> (AssocAlgebra, CMatrix) {
        let basis = column_space(&self.left_mult(e), RANK_TOL);
        let k = basis.ncols();
        let cols: Vec<CVector> = (0..k).map(|p| basis.column(p).into_owned()).collect();
        let adj = basis.adjoint();
        let mut structure = vec![c(0.0); k * k * k];
        for p in 0..k {
            for q in 0..k {
                let coords = &adj * self.mul(&cols[p], &cols[q]);
                for r in 0..k {
                    structure[(p * k + q) * k + r] = coords[r];
                }
            }
        }
        let unit = &adj * e;
        (AssocAlgebra { dim: k, structure, unit }, basis)
    }

    /// Primitive central idempotents and block sizes.
    pub fn central_idempotents(&self, seed: u64) -> Result<BlockProfile> {
        let center = self.center();
        let mut todo: Vec<(CVector, CMatrix)> = vec![(self.unit.clone(), center)];
        let mut found: Vec<CVector> = Vec::new();
        let mut next_seed = seed;
        while let Some((e, basis)) = todo.pop() {
            if basis.ncols() <= 1 {
                found.push(e);
                continue;
            }
            let mut split = None;
            for _ in 0..MAX_RETRIES {
                let mut rng = ChaCha8Rng::seed_from_u64(next_seed);
                next_seed = next_seed.wrapping_add(1);
                let coeffs = CVector::from_iterator(
                    basis.ncols(),
                    (0..basis.ncols()).map(|_| c(rng.random_range(-1000i32..=1000) as f64 / 1000.0)),
                );
                let z = &basis * coeffs;
                let restricted = basis.adjoint() * self.left_mult(&z) * &basis;
                let ev = eigenvalues(&restricted)?;
                let groups = cluster(&ev, EIGEN_GAP);
                if groups.len() > 1 {
                    split = Some(self.spectral_pieces(&e, &basis, &restricted, &ev, &groups));
                    break;
                }
            }
            match split {
                Some(pieces) => todo.extend(pieces),
                None => {
                    return Err(Error::Degenerate(format!(
                        "could not separate a {}-dimensional piece of the center after {MAX_RETRIES} retries",
                        basis.ncols()
                    )))
                }
            }
        }
        self.profile(found)
    }

    fn spectral_pieces(
        &self,
        e: &CVector,
        basis: &CMatrix,
        restricted: &CMatrix,
        ev: &[Complex64],
        groups: &[Vec<usize>],
    ) -> Vec<(CVector, CMatrix)> {
        let p = basis.ncols();
        let centers: Vec<Complex64> =
            groups.iter().map(|g| g.iter().map(|&i| ev[i]).sum::<Complex64>() / g.len() as f64).collect();
        let e_coords = basis.adjoint() * e;
        let mut out = Vec::with_capacity(groups.len());
        for (gi, &mu) in centers.iter().enumerate() {
            let mut proj = CMatrix::identity(p, p);
            for (gj, &nu) in centers.iter().enumerate() {
                if gi != gj {
                    let factor = (restricted - CMatrix::identity(p, p) * nu) / (mu - nu);
                    proj = factor * proj;
                }
            }
            let mut idem = basis * (&proj * &e_coords);
            for _ in 0..8 {
                let sq = self.mul(&idem, &idem);
                let cube = self.mul(&sq, &idem);
                let next = sq * c(3.0) - cube * c(2.0);
                let step = max_abs(&(&next - &idem));
                idem = next;
                if step < 1e-15 {
                    break;
                }
            }
            // The long Lagrange product loses accuracy; the polished idempotent does not.
            let on_center = basis.adjoint() * self.left_mult(&idem) * basis;
            let sub = column_space(&(basis * on_center), 1e-6);
            out.push((idem, sub));
        }
        out
    }

    fn profile(&self, idempotents: Vec<CVector>) -> Result<BlockProfile> {
        let mut blocks = Vec::with_capacity(idempotents.len());
        for e in idempotents {
            let tr = self.trace(&e);
            let bd = tr.re.round();
            if (tr.re - bd).abs() > SIMPLE_DIM_ROUNDING || tr.im.abs() > SIMPLE_DIM_ROUNDING || bd < 1.0 {
                return Err(Error::NotSemisimple(format!("block trace {:.6e}{:+.6e}i is not a positive integer", tr.re, tr.im)));
            }
            let m = bd.sqrt();
            if (m - m.round()).abs() > SIMPLE_DIM_ROUNDING {
                return Err(Error::NotSemisimple(format!("block of dimension {bd} is not a full matrix algebra")));
            }
            blocks.push(Block { idempotent: e, block_dim: bd as usize, simple_dim: m.round() as usize });
        }
        let total: usize = blocks.iter().map(|b| b.block_dim).sum();
        if total != self.dim {
            return Err(Error::NotSemisimple(format!("block dimensions sum to {total}, algebra has dimension {}", self.dim)));
        }
        blocks.sort_by(|a, b| {
            a.simple_dim.cmp(&b.simple_dim).then_with(|| {
                let ka: Vec<f64> = a.idempotent.iter().map(|z| (z.re * 1e6).round()).collect();
                let kb: Vec<f64> = b.idempotent.iter().map(|z| (z.re * 1e6).round()).collect();
                kb.partial_cmp(&ka).unwrap_or(std::cmp::Ordering::Equal)
            })
        });
        let mut orth = 0.0f64;
        let mut sum = CVector::zeros(self.dim);
        let mut central = 0.0f64;
        for (i, a) in blocks.iter().enumerate() {
            sum += &a.idempotent;
            for (j, b) in blocks.iter().enumerate() {
                let prod = self.mul(&a.idempotent, &b.idempotent);
                let target = if i == j { a.idempotent.clone() } else { CVector::zeros(self.dim) };
                orth = orth.max(max_abs(&(prod - target)));
            }
            for k in 0..self.dim {
                let bk = self.basis(k);
                central = central.max(max_abs(&(self.mul(&a.idempotent, &bk) - self.mul(&bk, &a.idempotent))));
            }
        }
        let completeness = max_abs(&(sum - &self.unit));
        Ok(BlockProfile {
            blocks,
            orthogonality_residual: orth,
            completeness_residual: completeness,
            centrality_residual: central,
        })
    }

    /// Character of the block's simple module at `a`: `Tr(left_mult(e a)) / m`.
    pub fn normalized_block_trace(&self, block: &Block, a: &CVector) -> Complex64 {
        self.trace(&self.mul(&block.idempotent, a)) / block.simple_dim as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    #[test]
    fn unit_acts_as_identity() {
        let alg = AssocAlgebra::from_ring(&FiniteGroup::dihedral(3).group_ring());
        assert!((alg.left_mult(alg.unit()) - CMatrix::identity(6, 6)).norm() < 1e-15);
    }

    #[test]
    fn z2_generator_swaps_basis() {
        let alg = AssocAlgebra::from_ring(&FiniteGroup::cyclic(2).group_ring());
        let swap = CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
        assert!((alg.left_mult(&alg.basis(1)) - swap).norm() < 1e-15);
        let prof = alg.central_idempotents(DEFAULT_SEED).unwrap();
        assert_eq!(prof.simple_dims(), vec![1, 1]);
        for b in &prof.blocks {
            assert!((b.idempotent[0] - c(0.5)).norm() < 1e-12);
            assert!((b.idempotent[1].norm() - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn s3_blocks_and_traces() {
        let g = FiniteGroup::symmetric(3);
        let alg = AssocAlgebra::from_ring(&g.group_ring());
        assert_eq!(alg.center().ncols(), 3);
        let prof = alg.central_idempotents(DEFAULT_SEED).unwrap();
        assert_eq!(prof.simple_dims(), vec![1, 1, 2]);
        assert!(prof.orthogonality_residual < 1e-9);
        assert!(prof.completeness_residual < 1e-9);
        assert!(prof.centrality_residual < 1e-9);
        let two = prof.blocks.iter().find(|b| b.simple_dim == 2).unwrap();
        let transposition = (0..6).find(|&a| g.element_order(a) == 2).unwrap();
        let chi = alg.normalized_block_trace(two, &alg.basis(transposition));
        assert!(chi.norm() < 1e-9);
        assert!((alg.normalized_block_trace(two, alg.unit()) - c(2.0)).norm() < 1e-9);
    }

    #[test]
    fn commutative_center_is_everything() {
        let alg = AssocAlgebra::from_ring(&FiniteGroup::cyclic(5).group_ring());
        assert_eq!(alg.center().ncols(), 5);
    }

    #[test]
    fn nilpotent_algebra_is_rejected() {
        // C[x]/(x^2): not semisimple
        let mut sc = vec![c(0.0); 8];
        sc[0] = c(1.0); // 1*1 = 1
        sc[(1) * 2 + 1] = c(1.0); // 1*x = x
        sc[(2) * 2 + 1] = c(1.0); // x*1 = x
        let alg = AssocAlgebra::new(2, sc, CVector::from_vec(vec![c(1.0), c(0.0)])).unwrap();
        assert!(alg.axiom_residual() < 1e-15);
        assert!(alg.central_idempotents(DEFAULT_SEED).is_err());
    }

    #[test]
    fn many_close_eigenvalues_split_cleanly() {
        use crate::groups::FiniteGroup;
        let z3 = FiniteGroup::cyclic(3);
        for g in [FiniteGroup::dihedral(4).direct_product(&z3), FiniteGroup::quaternion().direct_product(&z3)] {
            let p = AssocAlgebra::from_ring(&g.group_ring()).central_idempotents(DEFAULT_SEED).unwrap();
            assert_eq!(p.simple_dims(), vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2]);
        }
    }
}

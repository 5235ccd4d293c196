//! Dense complex linear algebra helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn real_vector(v: &[f64]) -> CVector {
    CVector::from_iterator(v.len(), v.iter().map(|&x| c(x)))
}

fn padded_svd(m: &CMatrix) -> nalgebra::SVD<Complex64, nalgebra::Dyn, nalgebra::Dyn> {
    let (rows, cols) = m.shape();
    if rows >= cols {
        m.clone().svd(true, true)
    } else {
        let mut p = CMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (rows, cols)).copy_from(m);
        p.svd(true, true)
    }
}

/// Orthonormal basis (as columns) of the null space of `m`.
///
/// Singular values below `tol * max(1, sigma_max)` count as zero.
pub fn nullspace(m: &CMatrix, tol: f64) -> CMatrix {
    let cols = m.ncols();
    if m.nrows() == 0 {
        return CMatrix::identity(cols, cols);
    }
    let svd = padded_svd(m);
    let vt = svd.v_t.expect("v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max).max(1.0);
    let keep: Vec<usize> =
        (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] <= tol * smax).collect();
    let mut out = CMatrix::zeros(cols, keep.len());
    for (c_idx, &i) in keep.iter().enumerate() {
        for r in 0..cols {
            out[(r, c_idx)] = vt[(i, r)].conj();
        }
    }
    out
}

/// Orthonormal basis (as columns) of the column space of `m`.
pub fn column_space(m: &CMatrix, tol: f64) -> CMatrix {
    if m.ncols() == 0 {
        return CMatrix::zeros(m.nrows(), 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("u requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max).max(1.0);
    let keep: Vec<usize> =
        (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] > tol * smax).collect();
    CMatrix::from_fn(m.nrows(), keep.len(), |r, k| u[(r, keep[k])])
}

/// Eigenvalues of a square complex matrix via the Schur form.
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<Complex64>> {
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let schur = nalgebra::linalg::Schur::try_new(m.clone(), 1e-15, 100_000)
        .ok_or_else(|| Error::Numerical("Schur decomposition did not converge".into()))?;
    let ev = schur
        .eigenvalues()
        .ok_or_else(|| Error::Numerical("Schur form is not triangular".into()))?;
    Ok(ev.iter().cloned().collect())
}

/// Groups values whose pairwise gaps are below `gap` (single linkage).
pub fn cluster(values: &[Complex64], gap: f64) -> Vec<Vec<usize>> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() < gap {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_pos = std::collections::HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        let pos = *root_pos.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[pos].push(i);
    }
    groups
}

/// Max-abs entry.
pub fn max_abs(v: &CVector) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        let m = CMatrix::from_row_slice(2, 3, &[c(1.0), c(1.0), c(0.0), c(2.0), c(2.0), c(0.0)]);
        let ns = nullspace(&m, 1e-10);
        assert_eq!(ns.ncols(), 2);
        assert!((&m * &ns).norm() < 1e-12);
    }

    #[test]
    fn eigenvalues_of_rotation() {
        let m = CMatrix::from_row_slice(2, 2, &[c(0.0), c(-1.0), c(1.0), c(0.0)]);
        let mut ev = eigenvalues(&m).unwrap();
        ev.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((ev[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((ev[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn clustering_is_transitive() {
        let v = [c(0.0), c(0.5e-7), c(0.9e-7), c(1.0)];
        assert_eq!(cluster(&v, 1e-7), vec![vec![0, 1, 2], vec![3]]);
    }
}

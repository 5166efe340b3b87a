//! Dense symmetric eigensolvers shared by the disk and sphere modules.
//!
//! Everything here reduces to the generalized symmetric-definite pencil
//! `A v = t B v` with `B` positive definite, solved through a Cholesky
//! factorization `B = L Lᵀ` and a standard self-adjoint eigendecomposition
//! of `L⁻¹ A L⁻ᵀ`.

use faer::linalg::triangular_solve::solve_lower_triangular_in_place;
use faer::{Mat, Par, Side};

use crate::error::{Error, Result};

/// Column-major dense symmetric matrix builder used by the assembly code.
#[derive(Debug, Clone)]
pub struct SymMatrix {
    pub n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i + j * self.n]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i + j * self.n] = v;
        self.data[j + i * self.n] = v;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        self.data[i + j * self.n] += v;
        if i != j {
            self.data[j + i * self.n] += v;
        }
    }

    fn to_faer(&self) -> Mat<f64> {
        Mat::from_fn(self.n, self.n, |i, j| self.data[i + j * self.n])
    }
}

/// Eigenvalues and eigenvectors of `A v = t B v`, `t` ascending.
/// Eigenvector `k` is `vectors[k]`, expressed in the assembly basis and
/// `B`-orthonormal.
#[derive(Debug, Clone)]
pub struct PencilEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

fn cholesky(b: &SymMatrix) -> Result<Mat<f64>> {
    let bm = b.to_faer();
    let llt = bm.llt(Side::Lower).map_err(|_| Error::NotPositiveDefinite)?;
    Ok(llt.L().to_owned())
}

/// `C = L⁻¹ A L⁻ᵀ`, symmetrized against roundoff.
fn whiten(a: &SymMatrix, l: &Mat<f64>) -> Mat<f64> {
    let mut x = a.to_faer();
    solve_lower_triangular_in_place(l.as_ref(), x.as_mut(), Par::Seq);
    let mut c = x.transpose().to_owned();
    solve_lower_triangular_in_place(l.as_ref(), c.as_mut(), Par::Seq);
    let n = c.nrows();
    Mat::from_fn(n, n, |i, j| 0.5 * (c[(i, j)] + c[(j, i)]))
}

/// Ascending eigenvalues of the generalized pencil, no eigenvectors.
pub fn pencil_eigenvalues(a: &SymMatrix, b: &SymMatrix) -> Result<Vec<f64>> {
    assert_eq!(a.n, b.n);
    let l = cholesky(b)?;
    let c = whiten(a, &l);
    let mut vals = c
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|_| Error::NotPositiveDefinite)?;
    vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(vals)
}

/// Full generalized eigendecomposition; eigenvectors mapped back through
/// `v = L⁻ᵀ u` so they are `B`-orthonormal in the assembly basis.
pub fn pencil_eigen(a: &SymMatrix, b: &SymMatrix) -> Result<PencilEigen> {
    assert_eq!(a.n, b.n);
    let n = a.n;
    let l = cholesky(b)?;
    let c = whiten(a, &l);
    let evd = c
        .self_adjoint_eigen(Side::Lower)
        .map_err(|_| Error::NotPositiveDefinite)?;
    let s = evd.S();
    let u = evd.U();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[i].partial_cmp(&s[j]).unwrap());

    // Back-substitute Lᵀ v = u column by column.
    let mut vmat = Mat::from_fn(n, n, |i, j| u[(i, order[j])]);
    faer::linalg::triangular_solve::solve_upper_triangular_in_place(
        l.transpose(),
        vmat.as_mut(),
        Par::Seq,
    );

    let values: Vec<f64> = order.iter().map(|&i| s[i]).collect();
    let vectors: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| vmat[(i, j)]).collect())
        .collect();
    Ok(PencilEigen { values, vectors })
}

/// Ascending eigenvalues of a plain symmetric matrix.
pub fn sym_eigenvalues(a: &SymMatrix) -> Vec<f64> {
    let m = a.to_faer();
    let mut vals = m
        .self_adjoint_eigenvalues(Side::Lower)
        .expect("self-adjoint eigendecomposition failed");
    vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    vals
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_pencil_recovers_ratios() {
        let n = 5;
        let mut a = SymMatrix::zeros(n);
        let mut b = SymMatrix::zeros(n);
        for i in 0..n {
            a.set(i, i, (i * i) as f64);
            b.set(i, i, 2.0);
        }
        let vals = pencil_eigenvalues(&a, &b).unwrap();
        for (i, v) in vals.iter().enumerate() {
            assert!((v - (i * i) as f64 / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvectors_are_b_orthonormal() {
        let n = 8;
        let mut a = SymMatrix::zeros(n);
        let mut b = SymMatrix::zeros(n);
        for i in 0..n {
            a.set(i, i, i as f64 + 0.5);
            b.set(i, i, 1.5);
            if i + 1 < n {
                a.set(i, i + 1, 0.1);
                b.set(i, i + 1, 0.2);
            }
        }
        let eig = pencil_eigen(&a, &b).unwrap();
        for p in 0..n {
            for q in 0..n {
                let mut dot = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        dot += eig.vectors[p][i] * b.get(i, j) * eig.vectors[q][j];
                    }
                }
                let expect = if p == q { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-10, "B-orthonormality failed at ({p},{q}): {dot}");
            }
        }
        // residual check A v = t B v
        for p in 0..n {
            for i in 0..n {
                let mut av = 0.0;
                let mut bv = 0.0;
                for j in 0..n {
                    av += a.get(i, j) * eig.vectors[p][j];
                    bv += b.get(i, j) * eig.vectors[p][j];
                }
                assert!((av - eig.values[p] * bv).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn non_positive_definite_is_reported() {
        let mut a = SymMatrix::zeros(3);
        let mut b = SymMatrix::zeros(3);
        for i in 0..3 {
            a.set(i, i, 1.0);
            b.set(i, i, -1.0);
        }
        assert!(matches!(
            pencil_eigenvalues(&a, &b),
            Err(Error::NotPositiveDefinite)
        ));
    }
}

//! Dense symmetric eigensolver, SVD, orthonormalization and PSD square root.
//!
//! Both decompositions are Jacobi methods: cyclic two-sided rotations for the
//! symmetric eigenproblem and one-sided (Hestenes) rotations on columns for the
//! SVD. The one-sided variant computes small singular values to high relative
//! accuracy, which the principal-angle code depends on for tiny angles.

use crate::error::{Error, Result};
use crate::matrix::{dot, norm2, Matrix};
use crate::tol;

/// `values` nonincreasing; column `k` of `vectors` belongs to `values[k]`.
#[derive(Debug, Clone)]
pub struct EigDecomposition {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl EigDecomposition {
    /// `V · diag(f(λ)) · Vᵀ`, symmetrized.
    pub fn recompose(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let n = self.values.len();
        let fv: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let v = &self.vectors;
        let scaled = Matrix::from_fn(n, n, |i, k| v[(i, k)] * fv[k]);
        scaled.matmul(&v.transpose()).symmetrized()
    }
}

/// Thin SVD `A = U · diag(σ) · Vᵀ` with `σ` nonincreasing and nonnegative.
#[derive(Debug, Clone)]
pub struct SvdDecomposition {
    pub singular_values: Vec<f64>,
    pub u: Matrix,
    pub v: Matrix,
}

impl SvdDecomposition {
    pub fn reconstruct(&self) -> Matrix {
        let u = &self.u;
        let s = &self.singular_values;
        Matrix::from_fn(u.rows(), s.len(), |i, k| u[(i, k)] * s[k]).matmul(&self.v.transpose())
    }
}

fn sort_desc_indices(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    // stable: ties keep decomposition order
    idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    idx
}

fn off_diagonal_norm(m: &Matrix) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)] * m[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// The input is symmetrized as `(A + Aᵀ)/2` before iterating; it must already
/// be symmetric up to [`tol::sym_tol`].
pub fn sym_eig(a: &Matrix) -> Result<EigDecomposition> {
    if !a.is_square() {
        return Err(Error::NonSquare(a.rows(), a.cols()));
    }
    let defect = a.symmetry_defect();
    let sym_tol = tol::sym_tol(a);
    if defect > sym_tol {
        return Err(Error::AsymmetryExceedsTolerance { defect, tol: sym_tol });
    }

    let n = a.rows();
    let mut m = a.symmetrized();
    let mut v = Matrix::identity(n);
    let target = tol::JACOBI_REL * m.frobenius_norm();

    let mut converged = false;
    for _ in 0..tol::MAX_SWEEPS {
        if off_diagonal_norm(&m) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&m) > target {
        return Err(Error::NoConvergence {
            sweeps: tol::MAX_SWEEPS,
        });
    }

    let diag = m.diagonal();
    let order = sort_desc_indices(&diag);
    Ok(EigDecomposition {
        values: order.iter().map(|&k| diag[k]).collect(),
        vectors: v.select_columns(&order),
    })
}

fn jacobi_rotate(m: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let n = m.rows();
    let apq = m[(p, q)];
    if apq == 0.0 {
        return;
    }
    let app = m[(p, p)];
    let aqq = m[(q, q)];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let data = m.data_mut();
    for k in 0..n {
        let mkp = data[k * n + p];
        let mkq = data[k * n + q];
        data[k * n + p] = c * mkp - s * mkq;
        data[k * n + q] = s * mkp + c * mkq;
    }
    for k in 0..n {
        let mpk = data[p * n + k];
        let mqk = data[q * n + k];
        data[p * n + k] = c * mpk - s * mqk;
        data[q * n + k] = s * mpk + c * mqk;
    }
    data[p * n + p] = app - t * apq;
    data[q * n + q] = aqq + t * apq;
    data[p * n + q] = 0.0;
    data[q * n + p] = 0.0;

    let vd = v.data_mut();
    for k in 0..n {
        let vkp = vd[k * n + p];
        let vkq = vd[k * n + q];
        vd[k * n + p] = c * vkp - s * vkq;
        vd[k * n + q] = s * vkp + c * vkq;
    }
}

pub fn eigenvalues(a: &Matrix) -> Result<Vec<f64>> {
    Ok(sym_eig(a)?.values)
}

/// One-sided Jacobi SVD.
pub fn svd(a: &Matrix) -> Result<SvdDecomposition> {
    if a.rows() < a.cols() {
        let t = svd(&a.transpose())?;
        return Ok(SvdDecomposition {
            singular_values: t.singular_values,
            u: t.v,
            v: t.u,
        });
    }
    let m = a.rows();
    let n = a.cols();
    let mut cols: Vec<Vec<f64>> = (0..n).map(|j| a.column(j)).collect();
    let mut vcols: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let orth_tol = m as f64 * f64::EPSILON;
    let fro = a.frobenius_norm();
    let null_sq = (orth_tol * fro).powi(2);

    let mut converged = false;
    for _ in 0..tol::MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = dot(&cols[p], &cols[p]);
                let beta = dot(&cols[q], &cols[q]);
                let gamma = dot(&cols[p], &cols[q]);
                if gamma == 0.0 || alpha.min(beta) <= null_sq || gamma.abs() <= orth_tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = if zeta.abs() > 1e150 {
                    0.5 / zeta
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_pair(&mut cols, p, q, c, s);
                rotate_pair(&mut vcols, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: tol::MAX_SWEEPS,
        });
    }

    let sigma: Vec<f64> = cols.iter().map(|c| norm2(c)).collect();
    let order = sort_desc_indices(&sigma);
    let smax = sigma.iter().cloned().fold(0.0, f64::max);
    let null_tol = smax * orth_tol;

    let mut ucols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut missing = Vec::new();
    for (slot, &k) in order.iter().enumerate() {
        if sigma[k] > null_tol && sigma[k] > 0.0 {
            ucols.push(cols[k].iter().map(|x| x / sigma[k]).collect());
        } else {
            ucols.push(vec![0.0; m]);
            missing.push(slot);
        }
    }
    complete_orthonormal(&mut ucols, &missing);

    Ok(SvdDecomposition {
        singular_values: order.iter().map(|&k| sigma[k]).collect(),
        u: Matrix::from_columns(&ucols),
        v: Matrix::from_columns(&order.iter().map(|&k| vcols[k].clone()).collect::<Vec<_>>()),
    })
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(q);
    let (cp, cq) = (&mut head[p], &mut tail[0]);
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let (xp, xq) = (*x, *y);
        *x = c * xp - s * xq;
        *y = s * xp + c * xq;
    }
}

/// Fills the `missing` slots with unit vectors orthogonal to every other column.
fn complete_orthonormal(cols: &mut [Vec<f64>], missing: &[usize]) {
    if missing.is_empty() {
        return;
    }
    let m = cols[0].len();
    let mut candidate = 0;
    for &slot in missing {
        while candidate < m {
            let mut w = vec![0.0; m];
            w[candidate] = 1.0;
            candidate += 1;
            for _ in 0..2 {
                for (k, c) in cols.iter().enumerate() {
                    if k == slot || (missing.contains(&k) && norm2(c) == 0.0) {
                        continue;
                    }
                    let r = dot(c, &w);
                    w.iter_mut().zip(c).for_each(|(wi, ci)| *wi -= r * ci);
                }
            }
            let nrm = norm2(&w);
            if nrm > 0.5 {
                cols[slot] = w.into_iter().map(|x| x / nrm).collect();
                break;
            }
        }
    }
}

pub fn singular_values(a: &Matrix) -> Result<Vec<f64>> {
    Ok(svd(a)?.singular_values)
}

/// Orthonormal basis of the column span by two-pass classical Gram–Schmidt.
///
/// Columns whose residual after both passes is below
/// [`tol::rank_tol`] of the largest input column norm are dropped, so the
/// result has as many columns as the numerical rank.
pub fn orthonormalize(b: &Matrix) -> Result<Matrix> {
    let cols: Vec<Vec<f64>> = (0..b.cols()).map(|j| b.column(j)).collect();
    let largest = cols.iter().map(|c| norm2(c)).fold(0.0, f64::max);
    if largest == 0.0 {
        return Err(Error::ZeroRank);
    }
    let rank_tol = tol::rank_tol(largest);

    let mut q: Vec<Vec<f64>> = Vec::new();
    for mut w in cols {
        for _ in 0..2 {
            let coeffs: Vec<f64> = q.iter().map(|qi| dot(qi, &w)).collect();
            for (qi, r) in q.iter().zip(coeffs) {
                w.iter_mut().zip(qi).for_each(|(wi, qij)| *wi -= r * qij);
            }
        }
        let nrm = norm2(&w);
        if nrm > rank_tol {
            q.push(w.into_iter().map(|x| x / nrm).collect());
        }
    }
    if q.is_empty() {
        return Err(Error::ZeroRank);
    }
    Ok(Matrix::from_columns(&q))
}

/// Symmetric positive semidefinite square root.
///
/// Eigenvalues down to `-psd_tol` are treated as zero.
pub fn sqrt_psd(a: &Matrix) -> Result<Matrix> {
    let eig = sym_eig(a)?;
    let psd_tol = tol::psd_tol(a);
    if let Some(&min) = eig.values.last() {
        if min < -psd_tol {
            return Err(Error::NotPsd(min));
        }
    }
    Ok(eig.recompose(|l| l.max(0.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn assert_vec_close(a: &[f64], b: &[f64], eps: f64) {
        assert_eq!(a.len(), b.len(), "{a:?} vs {b:?}");
        for (x, y) in a.iter().zip(b) {
            assert_abs_diff_eq!(*x, *y, epsilon = eps);
        }
    }

    #[test]
    fn svd_of_rank_deficient_rounding_noise_converges() {
        let a = Matrix::from_rows(&[
            [0.0, 0.0, 0.0, 6.938893903907228e-18],
            [
                1.3877787807814457e-17,
                -1.1102230246251565e-16,
                1.1102230246251565e-16,
                1.1102230246251565e-16,
            ],
            [
                0.0,
                -4.163336342344337e-17,
                1.1102230246251565e-16,
                5.551115123125783e-17,
            ],
            [0.0, 0.0, 0.0, 0.0],
        ]);
        let sv = singular_values(&a).unwrap();
        assert!(sv[0] < 1e-15 && sv[3] < 1e-30);
        for scale in [1.0, 1e200, 1e-200] {
            let b = Matrix::from_fn(4, 4, |i, j| a[(i, j)] * scale);
            assert!(singular_values(&b).is_ok());
        }
    }

    #[test]
    fn eig_diagonal_is_sorted() {
        let e = sym_eig(&Matrix::from_diag(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn eig_swap_matrix() {
        let e = sym_eig(&Matrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]])).unwrap();
        assert_vec_close(&e.values, &[1.0, -1.0], 1e-15);
        let v0 = e.vectors.column(0);
        assert_abs_diff_eq!(v0[0].abs(), 0.5f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(v0[0], v0[1], epsilon = 1e-15);
    }

    #[test]
    fn eig_ties_keep_order() {
        let e = sym_eig(&Matrix::identity(3)).unwrap();
        assert_eq!(e.vectors, Matrix::identity(3));
    }

    #[test]
    fn eig_errors() {
        assert_eq!(sym_eig(&Matrix::zeros(2, 3)).unwrap_err(), Error::NonSquare(2, 3));
        let a = Matrix::from_rows(&[[1.0, 2.0], [0.0, 1.0]]);
        assert!(matches!(sym_eig(&a), Err(Error::AsymmetryExceedsTolerance { .. })));
        // defect below sym_tol is accepted and symmetrized
        let b = Matrix::from_rows(&[[1.0, 2.0], [2.0 + 1e-12, 1.0]]);
        assert_vec_close(&eigenvalues(&b).unwrap(), &[3.0, -1.0], 1e-11);
    }

    #[test]
    fn svd_small_cases() {
        assert_vec_close(&singular_values(&Matrix::identity(3)).unwrap(), &[1.0; 3], 1e-15);
        let a = Matrix::from_rows(&[[0.0, 2.0], [0.0, 0.0]]);
        let s = svd(&a).unwrap();
        assert_vec_close(&s.singular_values, &[2.0, 0.0], 1e-15);
        assert!(s.reconstruct().max_abs_diff(&a) < 1e-15);
        let utu = s.u.tr_matmul(&s.u);
        assert!(utu.max_abs_diff(&Matrix::identity(2)) < 1e-15);
    }

    #[test]
    fn svd_wide_matrix() {
        let a = Matrix::from_rows(&[[3.0, 0.0, 0.0], [0.0, 0.0, 4.0]]);
        let s = svd(&a).unwrap();
        assert_vec_close(&s.singular_values, &[4.0, 3.0], 1e-15);
        assert_eq!((s.u.rows(), s.v.rows()), (2, 3));
        assert!(s.reconstruct().max_abs_diff(&a) < 1e-14);
    }

    #[test]
    fn svd_tiny_singular_value_relative_accuracy() {
        // columns e1 and e1 + 1e-12 e2: smallest singular value ~ 1e-12/sqrt(2)
        let d = 1e-12;
        let a = Matrix::from_rows(&[[1.0, 1.0], [0.0, d]]);
        let s = singular_values(&a).unwrap();
        let det = d;
        let expected_small = det / s[0];
        assert!((s[1] - expected_small).abs() < 1e-10 * expected_small);
    }

    #[test]
    fn orthonormalize_examples() {
        let q = orthonormalize(&Matrix::from_rows(&[[1.0], [0.0]])).unwrap();
        assert_eq!(q, Matrix::from_rows(&[[1.0], [0.0]]));

        let q = orthonormalize(&Matrix::from_rows(&[[1.0, 2.0], [0.0, 0.0], [1.0, 2.0]])).unwrap();
        assert_eq!(q.cols(), 1);
        let h = 0.5f64.sqrt();
        assert_vec_close(&q.column(0), &[h, 0.0, h], 1e-15);

        assert_eq!(orthonormalize(&Matrix::zeros(3, 2)), Err(Error::ZeroRank));
    }

    #[test]
    fn sqrt_psd_examples() {
        assert!(
            sqrt_psd(&Matrix::identity(3))
                .unwrap()
                .max_abs_diff(&Matrix::identity(3))
                < 1e-15
        );
        let r = sqrt_psd(&Matrix::from_diag(&[4.0, 0.0])).unwrap();
        assert!(r.max_abs_diff(&Matrix::from_diag(&[2.0, 0.0])) < 1e-15);
        // eigenvalues {1, 0} with eigenvectors (1,1)/√2, (1,-1)/√2: A is a projector, so √A = A
        let a = Matrix::from_rows(&[[0.5, 0.5], [0.5, 0.5]]);
        let r = sqrt_psd(&a).unwrap();
        assert!(r.max_abs_diff(&a) < 1e-14);
        assert!(r.matmul(&r).max_abs_diff(&a) < 1e-14);
        assert!(matches!(
            sqrt_psd(&Matrix::from_diag(&[1.0, -0.1])),
            Err(Error::NotPsd(_))
        ));
    }
}

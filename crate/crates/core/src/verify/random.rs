use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::orthonormalize;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

pub type TrialRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of one trial, a pure function of `(master, stream, trial)`.
pub fn sub_seed(master: u64, stream: u64, trial: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(stream)) ^ trial)
}

pub fn gaussian_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

/// Haar-like orthogonal matrix from an orthonormalized Gaussian sample.
pub fn random_orthogonal<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        if let Ok(q) = orthonormalize(&gaussian_matrix(rng, n, n)) {
            if q.cols() == n {
                return q;
            }
        }
    }
}

/// `Q·diag(d)·Qᵀ` with `d` uniform in `[lo, hi]` and `Q` random orthogonal.
pub fn symmetric_with_spectrum<R: Rng>(rng: &mut R, n: usize, lo: f64, hi: f64) -> Matrix {
    let q = random_orthogonal(rng, n);
    let d: Vec<f64> = (0..n).map(|_| rng.random_range(lo..=hi)).collect();
    let qd = Matrix::from_fn(n, n, |i, k| q[(i, k)] * d[k]);
    qd.matmul(&q.transpose()).symmetrized()
}

/// `(G + Gᵀ)/2` for Gaussian `G`.
pub fn gaussian_symmetric<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    gaussian_matrix(rng, n, n).symmetrized()
}

pub fn random_subspace(n: usize, k: usize, seed: u64) -> Result<Subspace> {
    if k == 0 || k > n {
        return Err(Error::BadDims(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let mut rng = rng_from_seed(seed);
    loop {
        let s = Subspace::from_columns(&gaussian_matrix(&mut rng, n, k))?;
        if s.dim() == k {
            return Ok(s);
        }
    }
}

pub fn random_symmetric(n: usize, lo: f64, hi: f64, seed: u64) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::BadDims("n must be positive".into()));
    }
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(lo < hi) {
        return Err(Error::BadRange { lo, hi });
    }
    Ok(symmetric_with_spectrum(&mut rng_from_seed(seed), n, lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigenvalues;

    #[test]
    fn subspace_examples() {
        let s = random_subspace(3, 3, 11).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.projector().max_abs_diff(&Matrix::identity(3)) < 1e-14);

        assert_eq!(random_subspace(5, 2, 42).unwrap(), random_subspace(5, 2, 42).unwrap());
        assert_ne!(random_subspace(5, 2, 42).unwrap(), random_subspace(5, 2, 43).unwrap());

        let s = random_subspace(8, 3, 7).unwrap();
        let gram = s.basis().tr_matmul(s.basis());
        assert!(gram.max_abs_diff(&Matrix::identity(3)) < 1e-12);

        assert!(matches!(random_subspace(3, 4, 0), Err(Error::BadDims(_))));
        assert!(matches!(random_subspace(3, 0, 0), Err(Error::BadDims(_))));
    }

    #[test]
    fn symmetric_examples() {
        for seed in 0..20 {
            let a = random_symmetric(2, 0.0, 1.0, seed).unwrap();
            let ev = eigenvalues(&a).unwrap();
            assert!(ev[0] <= 1.0 + 1e-12 && ev[1] >= -1e-12, "{ev:?}");
        }
        assert!(matches!(random_symmetric(3, 1.0, 1.0, 0), Err(Error::BadRange { .. })));
        assert_eq!(
            random_symmetric(4, -1.0, 2.0, 9).unwrap(),
            random_symmetric(4, -1.0, 2.0, 9).unwrap()
        );
    }

    #[test]
    fn sub_seeds_differ() {
        let a: Vec<u64> = (0..100).map(|t| sub_seed(1, 2, t)).collect();
        let mut b = a.clone();
        b.sort_unstable();
        b.dedup();
        assert_eq!(a.len(), b.len());
        assert_ne!(sub_seed(1, 2, 0), sub_seed(1, 3, 0));
    }
}

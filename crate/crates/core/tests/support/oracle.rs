//! Reference eigenvalues by Householder tridiagonalization and Sturm-sequence
//! bisection. Shares no code with the Jacobi kernels it is used to check.

#![allow(dead_code)]

/// Symmetric tridiagonal `(diagonal, off-diagonal)` similar to the row-major `n×n` input.
pub fn tridiagonalize(a: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(a.len(), n * n);
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (a[i * n + j] + a[j * n + i])).collect())
        .collect();
    for k in 0..n.saturating_sub(2) {
        let alpha_sq: f64 = (k + 1..n).map(|i| m[i][k] * m[i][k]).sum();
        if alpha_sq == 0.0 {
            continue;
        }
        let alpha = if m[k + 1][k] > 0.0 {
            -alpha_sq.sqrt()
        } else {
            alpha_sq.sqrt()
        };
        let mut v = vec![0.0; n];
        v[k + 1] = m[k + 1][k] - alpha;
        for i in k + 2..n {
            v[i] = m[i][k];
        }
        let vv: f64 = v.iter().map(|x| x * x).sum();
        if vv == 0.0 {
            continue;
        }
        // M ← H M H with H = I − 2vvᵀ/vᵀv
        let p: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| m[i][j] * v[j]).sum::<f64>() * 2.0 / vv)
            .collect();
        let kappa: f64 = (0..n).map(|i| v[i] * p[i]).sum::<f64>() / vv;
        let q: Vec<f64> = (0..n).map(|i| p[i] - kappa * v[i]).collect();
        for i in 0..n {
            for j in 0..n {
                m[i][j] -= v[i] * q[j] + q[i] * v[j];
            }
        }
    }
    let d = (0..n).map(|i| m[i][i]).collect();
    let e = (1..n).map(|i| m[i][i - 1]).collect();
    (d, e)
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`.
pub fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..d.len() {
        let off = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] / q };
        q = d[i] - x - off;
        if q == 0.0 {
            q = -tiny;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of the symmetric row-major `n×n` matrix, nonincreasing.
pub fn eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
    let (d, e) = tridiagonalize(a, n);
    let radius = |i: usize| {
        let l = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let r = if i + 1 < n { e[i].abs() } else { 0.0 };
        l + r
    };
    let lo = (0..n).map(|i| d[i] - radius(i)).fold(f64::INFINITY, f64::min);
    let hi = (0..n).map(|i| d[i] + radius(i)).fold(f64::NEG_INFINITY, f64::max);
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);

    let mut out: Vec<f64> = (0..n)
        .map(|k| {
            // k-th smallest: smallest x with count(x) > k
            let (mut a, mut b) = (lo - 1e-12 * scale, hi + 1e-12 * scale);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b || b - a <= 4.0 * f64::EPSILON * scale {
                    break;
                }
                if sturm_count(&d, &e, mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect();
    out.reverse();
    out
}

/// Singular values of a row-major `rows×cols` matrix from the top half of
/// the spectrum of `[[0, A], [Aᵀ, 0]]`, nonincreasing, `min(rows, cols)` entries.
pub fn singular_values(a: &[f64], rows: usize, cols: usize) -> Vec<f64> {
    let n = rows + cols;
    let mut h = vec![0.0; n * n];
    for i in 0..rows {
        for j in 0..cols {
            h[i * n + rows + j] = a[i * cols + j];
            h[(rows + j) * n + i] = a[i * cols + j];
        }
    }
    eigenvalues(&h, n)
        .into_iter()
        .take(rows.min(cols))
        .map(|s| s.max(0.0))
        .collect()
}

//! Descending rearrangement and the weak-majorization predicate `x ≺w y`.
//!
//! `x ≺w y` holds when every prefix sum of `x` sorted in nonincreasing order
//! is bounded by the matching prefix sum of `y` sorted the same way. Vectors
//! of different lengths are compared after zero-padding the shorter one.

use crate::error::{Error, Result};
use crate::tol;

#[derive(Debug, Clone, PartialEq)]
pub struct OrderedVector {
    pub values: Vec<f64>,
    pub original_length: usize,
}

impl OrderedVector {
    /// Appends zeros up to `len` and re-sorts (negative entries move behind the zeros).
    pub fn padded(&self, len: usize) -> OrderedVector {
        let mut values = self.values.clone();
        values.resize(len.max(values.len()), 0.0);
        values.sort_by(|a, b| b.total_cmp(a));
        OrderedVector {
            values,
            original_length: self.original_length,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationReport {
    pub holds: bool,
    /// `margins[k] = Σ_{i≤k} y↓_i − Σ_{i≤k} x↓_i`.
    pub margins: Vec<f64>,
    /// Index of the first minimal margin; `None` for empty input.
    pub worst_k: Option<usize>,
    pub tolerance_used: f64,
}

impl MajorizationReport {
    pub fn worst_margin(&self) -> f64 {
        self.worst_k.map_or(f64::INFINITY, |k| self.margins[k])
    }
}

fn check_finite(x: &[f64]) -> Result<()> {
    match x.iter().position(|v| !v.is_finite()) {
        Some(i) => Err(Error::NonFiniteEntry(i)),
        None => Ok(()),
    }
}

/// Stable nonincreasing sort.
pub fn sort_desc(x: &[f64]) -> Result<OrderedVector> {
    check_finite(x)?;
    let mut values = x.to_vec();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(OrderedVector {
        values,
        original_length: x.len(),
    })
}

/// Tests `x ≺w y` with slack `tol`, reporting every prefix margin.
pub fn weak_majorizes(y: &[f64], x: &[f64], tol: f64) -> Result<MajorizationReport> {
    assert!(tol >= 0.0, "tolerance must be nonnegative");
    let n = x.len().max(y.len());
    let ys = sort_desc(y)?.padded(n);
    let xs = sort_desc(x)?.padded(n);

    let mut margins = Vec::with_capacity(n);
    let (mut sy, mut sx) = (0.0, 0.0);
    for (yi, xi) in ys.values.iter().zip(&xs.values) {
        sy += yi;
        sx += xi;
        margins.push(sy - sx);
    }
    let mut worst_k = None;
    for (k, m) in margins.iter().enumerate() {
        if worst_k.is_none_or(|w: usize| *m < margins[w]) {
            worst_k = Some(k);
        }
    }
    let min = worst_k.map_or(f64::INFINITY, |k| margins[k]);
    Ok(MajorizationReport {
        holds: min >= -tol,
        margins,
        worst_k,
        tolerance_used: tol,
    })
}

/// [`weak_majorizes`] with the default scale-aware slack
/// `factor · max(1, ||y||_∞) · n`.
pub fn weak_majorizes_scaled(y: &[f64], x: &[f64], factor: f64) -> Result<MajorizationReport> {
    let n = x.len().max(y.len());
    weak_majorizes(y, x, tol::majorization_tol(factor, y, n))
}

/// Elementwise `|x_i − y_i|`.
pub fn abs_diff(x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter().zip(y).map(|(a, b)| (a - b).abs()).collect())
}

/// Appends zeros up to `len`.
pub fn zero_pad(x: &[f64], len: usize) -> Vec<f64> {
    let mut v = x.to_vec();
    v.resize(len.max(x.len()), 0.0);
    v
}

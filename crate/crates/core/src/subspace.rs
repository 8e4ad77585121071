//! Subspaces of `R^n`, orthogonal projectors and principal angles.
//!
//! Principal angles are computed along two independent routes: cosines from
//! the singular values of `Xᵀ·Y` and sines from the singular values of the
//! component of the smaller basis orthogonal to the larger subspace. Each
//! angle keeps whichever of the pair is better conditioned (the sine below
//! `π/4`, the cosine above) and the other is recovered from it.

use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::linalg::{orthonormalize, singular_values, sym_eig};
use crate::majorization::zero_pad;
use crate::matrix::Matrix;
use crate::spectrum::{SpectrumReport, SpectrumSource};
use crate::tol;

const ORTHONORMAL_TOL: f64 = 1e-10;

/// A subspace held as an `n×k` matrix with orthonormal columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Span of the columns of `b`.
    pub fn from_columns(b: &Matrix) -> Result<Self> {
        Ok(Self {
            basis: orthonormalize(b)?,
        })
    }

    /// Wraps a basis that is already orthonormal within `1e-10`.
    pub fn from_orthonormal(basis: Matrix) -> Result<Self> {
        if basis.cols() > basis.rows() {
            return Err(Error::BadDims(format!(
                "{} columns exceed ambient dimension {}",
                basis.cols(),
                basis.rows()
            )));
        }
        let defect = basis.tr_matmul(&basis).max_abs_diff(&Matrix::identity(basis.cols()));
        if defect > ORTHONORMAL_TOL {
            return Err(Error::BadDims(format!("basis is not orthonormal (defect {defect:e})")));
        }
        Ok(Self { basis })
    }

    pub fn full(n: usize) -> Self {
        Self {
            basis: Matrix::identity(n),
        }
    }

    /// Span of the coordinate vectors `e_i`, `i ∈ indices` (0-based).
    pub fn coordinate(n: usize, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::ZeroRank);
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::BadDims(format!("coordinate index {bad} out of range for R^{n}")));
        }
        let basis = Matrix::from_fn(n, indices.len(), |i, j| if indices[j] == i { 1.0 } else { 0.0 });
        Self::from_orthonormal(basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// `P = B·Bᵀ`.
    pub fn projector(&self) -> Matrix {
        self.basis.matmul(&self.basis.transpose()).symmetrized()
    }

    /// Orthogonal complement, read off the `1`-cluster of `I − P`.
    pub fn complement(&self) -> Result<Subspace> {
        let n = self.ambient_dim();
        if self.dim() >= n {
            return Err(Error::FullSpace);
        }
        let eig = sym_eig(&Matrix::identity(n).sub(&self.projector()))?;
        let keep: Vec<usize> = (0..n).filter(|&k| eig.values[k] >= tol::PROJECTOR_SPLIT).collect();
        Ok(Subspace {
            basis: eig.vectors.select_columns(&keep),
        })
    }

    /// Image under `q` (expected orthogonal).
    pub fn transformed(&self, q: &Matrix) -> Result<Subspace> {
        Subspace::from_orthonormal(q.matmul(&self.basis))
    }

    /// Matrix of `P_X A|_X` in this basis: `Bᵀ·A·B`.
    pub fn restrict(&self, a: &Matrix) -> Matrix {
        self.basis.tr_matmul(&a.matmul(&self.basis))
    }

    /// `X + Y`, orthonormalized from the concatenated bases.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self, other)?;
        Subspace::from_columns(&self.basis.hcat(&other.basis))
    }
}

pub fn subspace_from_columns(b: &Matrix) -> Result<Subspace> {
    Subspace::from_columns(b)
}

pub fn projector(s: &Subspace) -> Matrix {
    s.projector()
}

pub fn complement(s: &Subspace) -> Result<Subspace> {
    s.complement()
}

fn check_ambient(x: &Subspace, y: &Subspace) -> Result<()> {
    if x.ambient_dim() != y.ambient_dim() {
        return Err(Error::AmbientMismatch(x.ambient_dim(), y.ambient_dim()));
    }
    Ok(())
}

/// Principal angles `Θ(X, Y)` with matching cosines and sines.
///
/// `angles` and `sines` are nondecreasing, `cosines` nonincreasing; all have
/// `min(dim X, dim Y)` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSet {
    pub angles: Vec<f64>,
    pub cosines: Vec<f64>,
    pub sines: Vec<f64>,
}

impl AngleSet {
    pub fn count(&self) -> usize {
        self.angles.len()
    }

    pub fn cos_squared(&self) -> Vec<f64> {
        self.cosines.iter().map(|c| c * c).collect()
    }

    /// Sine of the largest angle.
    pub fn gap(&self) -> f64 {
        self.sines.last().copied().unwrap_or(0.0)
    }
}

pub fn principal_angles(x: &Subspace, y: &Subspace) -> Result<AngleSet> {
    check_ambient(x, y)?;
    // fixed operand order so that Θ(X,Y) and Θ(Y,X) run identical arithmetic
    let (small, large) = match x.dim().cmp(&y.dim()) {
        Ordering::Less => (x, y),
        Ordering::Greater => (y, x),
        Ordering::Equal => {
            let ord = x
                .basis
                .as_slice()
                .iter()
                .zip(y.basis.as_slice())
                .map(|(a, b)| a.total_cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal);
            if ord == Ordering::Greater {
                (y, x)
            } else {
                (x, y)
            }
        }
    };
    let m = small.dim();
    let cross = small.basis.tr_matmul(&large.basis);

    let mut cos: Vec<f64> = singular_values(&cross)?
        .into_iter()
        .take(m)
        .map(|c| c.clamp(0.0, 1.0))
        .collect();
    let residual = small
        .basis
        .sub(&large.basis.matmul(&large.basis.tr_matmul(&small.basis)));
    let mut sin: Vec<f64> = singular_values(&residual)?
        .into_iter()
        .rev()
        .map(|s| s.clamp(0.0, 1.0))
        .collect();

    for (c, s) in cos.iter_mut().zip(sin.iter_mut()) {
        if *s <= *c {
            *c = ((1.0 - *s) * (1.0 + *s)).sqrt();
        } else {
            *s = ((1.0 - *c) * (1.0 + *c)).sqrt();
        }
    }
    for i in 1..m {
        cos[i] = cos[i].min(cos[i - 1]);
        sin[i] = sin[i].max(sin[i - 1]);
    }
    let mut angles: Vec<f64> = cos.iter().zip(&sin).map(|(c, s)| s.atan2(*c)).collect();
    for i in 1..m {
        angles[i] = angles[i].max(angles[i - 1]);
    }
    Ok(AngleSet {
        angles,
        cosines: cos,
        sines: sin,
    })
}

/// `S(P_X − P_Y)` alongside its prediction from `Θ(X, Y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectorDifference {
    pub spectrum: SpectrumReport,
    /// `[1,…,1, (sinΘ, sinΘ)↓, 0,…]` with `|dim X − dim Y|` leading ones.
    pub predicted: Vec<f64>,
    /// Largest entrywise gap between the two after zero-padding.
    pub max_deviation: f64,
}

pub fn projector_difference_singvals(x: &Subspace, y: &Subspace) -> Result<ProjectorDifference> {
    check_ambient(x, y)?;
    let n = x.ambient_dim();
    let sv = singular_values(&x.projector().sub(&y.projector()))?;
    let angles = principal_angles(x, y)?;

    let mut predicted = vec![1.0; x.dim().abs_diff(y.dim())];
    predicted.extend(angles.sines.iter().chain(&angles.sines));
    predicted.sort_by(|a, b| b.total_cmp(a));

    let len = n.max(predicted.len());
    let max_deviation = max_abs_diff(&zero_pad(&sv, len), &zero_pad(&predicted, len));
    Ok(ProjectorDifference {
        spectrum: SpectrumReport {
            values: sv,
            source: SpectrumSource::ProjectorDifference,
            n,
            m: angles.count(),
        },
        predicted,
        max_deviation,
    })
}

pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn desc(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// Complement of `s`, or `None` when `s` is the whole space.
fn complement_or_empty(s: &Subspace) -> Result<Option<Subspace>> {
    match s.complement() {
        Ok(c) => Ok(Some(c)),
        Err(Error::FullSpace) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Both sides of the complement relation
/// `[π/2,…,π/2, Θ(X,Y)↓] = [π/2 − Θ(X,Y⊥), 0,…,0]`
/// with `max(dim X − dim Y, 0)` leading right angles; each has `dim X` entries.
pub fn complement_angle_relation(x: &Subspace, y: &Subspace) -> Result<(Vec<f64>, Vec<f64>)> {
    check_ambient(x, y)?;
    let mut lhs = vec![FRAC_PI_2; x.dim().saturating_sub(y.dim())];
    lhs.extend(desc(&principal_angles(x, y)?.angles));

    let rhs: Vec<f64> = match complement_or_empty(y)? {
        Some(yc) => principal_angles(x, &yc)?.angles.iter().map(|t| FRAC_PI_2 - t).collect(),
        None => Vec::new(),
    };
    let len = lhs.len().max(rhs.len());
    Ok((zero_pad(&lhs, len), zero_pad(&rhs, len)))
}

/// Both sides of `[Θ(X,Y)↓, 0,…] = [Θ(X⊥,Y⊥)↓, 0,…]`, padded to equal length.
pub fn complement_pair_relation(x: &Subspace, y: &Subspace) -> Result<(Vec<f64>, Vec<f64>)> {
    check_ambient(x, y)?;
    let lhs = desc(&principal_angles(x, y)?.angles);
    let rhs = match (complement_or_empty(x)?, complement_or_empty(y)?) {
        (Some(xc), Some(yc)) => desc(&principal_angles(&xc, &yc)?.angles),
        _ => Vec::new(),
    };
    let len = lhs.len().max(rhs.len());
    Ok((zero_pad(&lhs, len), zero_pad(&rhs, len)))
}

/// `Λ((P_X P_Y)|_X)` next to `[cos²Θ(X,Y), 0,…,0]`; both have `dim X` entries.
pub fn restricted_product_spectrum(x: &Subspace, y: &Subspace) -> Result<(Vec<f64>, Vec<f64>)> {
    check_ambient(x, y)?;
    let eig = sym_eig(&x.restrict(&y.projector()).symmetrized())?.values;
    let predicted = zero_pad(&principal_angles(x, y)?.cos_squared(), x.dim());
    Ok((eig, predicted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_4;

    fn span(rows: &[&[f64]]) -> Subspace {
        Subspace::from_columns(&Matrix::from_rows(rows)).unwrap()
    }

    #[test]
    fn from_columns_collinear() {
        let s = span(&[&[1.0, 1.0], &[1.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(s.dim(), 1);
        let h = 0.5f64.sqrt();
        let b = s.basis().column(0);
        assert_abs_diff_eq!(b[0], h, epsilon = 1e-15);
        assert_abs_diff_eq!(b[1], h, epsilon = 1e-15);
        assert_eq!(b[2], 0.0);
        assert_eq!(Subspace::from_columns(&Matrix::zeros(3, 1)), Err(Error::ZeroRank));
    }

    #[test]
    fn projector_examples() {
        let e1 = span(&[&[1.0], &[0.0]]);
        assert_eq!(e1.projector(), Matrix::from_rows(&[[1.0, 0.0], [0.0, 0.0]]));
        assert_eq!(Subspace::full(3).projector(), Matrix::identity(3));
        let d = span(&[&[1.0], &[1.0]]);
        assert!(
            d.projector()
                .max_abs_diff(&Matrix::from_rows(&[[0.5, 0.5], [0.5, 0.5]]))
                < 1e-15
        );
    }

    #[test]
    fn complement_examples() {
        let e1 = Subspace::coordinate(3, &[0]).unwrap();
        let c = e1.complement().unwrap();
        assert_eq!(c.dim(), 2);
        let pc = c.projector();
        assert!(pc.max_abs_diff(&Matrix::from_diag(&[0.0, 1.0, 1.0])) < 1e-14);

        let d = span(&[&[1.0], &[1.0]]);
        let dc = d.complement().unwrap().basis().column(0);
        assert_abs_diff_eq!(dc[0], -dc[1], epsilon = 1e-15);
        assert_abs_diff_eq!(dc[0].abs(), 0.5f64.sqrt(), epsilon = 1e-15);

        assert_eq!(Subspace::full(2).complement(), Err(Error::FullSpace));
    }

    #[test]
    fn angles_examples() {
        let x = Subspace::coordinate(3, &[0, 1]).unwrap();
        let a = principal_angles(&x, &x).unwrap();
        assert!(a.angles.iter().all(|t| t.abs() < 1e-15));

        let h = 0.5f64.sqrt();
        let y = span(&[&[1.0, 0.0], &[0.0, h], &[0.0, h]]);
        let a = principal_angles(&x, &y).unwrap();
        assert_abs_diff_eq!(a.angles[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(a.angles[1], FRAC_PI_4, epsilon = 1e-15);

        let a = principal_angles(
            &Subspace::coordinate(2, &[0]).unwrap(),
            &Subspace::coordinate(2, &[1]).unwrap(),
        )
        .unwrap();
        assert_eq!(a.angles, vec![FRAC_PI_2]);
        assert_eq!(a.cosines, vec![0.0]);
        assert_eq!(a.sines, vec![1.0]);

        assert_eq!(
            principal_angles(&Subspace::full(2), &Subspace::full(3)),
            Err(Error::AmbientMismatch(2, 3))
        );
    }

    #[test]
    fn tiny_angle_is_resolved() {
        let eps = 1e-12;
        let x = span(&[&[1.0], &[0.0]]);
        let y = span(&[&[1.0], &[eps]]);
        let a = principal_angles(&x, &y).unwrap();
        assert!((a.angles[0] - eps).abs() < 1e-6 * eps);
        assert!((a.sines[0] - eps).abs() < 1e-6 * eps);
    }

    #[test]
    fn projector_difference_examples() {
        let x = Subspace::coordinate(3, &[0, 2]).unwrap();
        let pd = projector_difference_singvals(&x, &x).unwrap();
        assert!(pd.spectrum.values.iter().all(|s| *s < 1e-15));

        let pd = projector_difference_singvals(
            &Subspace::coordinate(2, &[0]).unwrap(),
            &Subspace::coordinate(2, &[1]).unwrap(),
        )
        .unwrap();
        assert_eq!(pd.predicted, vec![1.0, 1.0]);
        assert!(pd.max_deviation < 1e-15);

        let e1 = Subspace::coordinate(3, &[0]).unwrap();
        let d = span(&[&[1.0], &[1.0], &[0.0]]);
        let pd = projector_difference_singvals(&e1, &d).unwrap();
        let h = 0.5f64.sqrt();
        for (got, want) in pd.spectrum.values.iter().zip([h, h, 0.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        assert!(pd.max_deviation < 1e-14);
    }

    #[test]
    fn unequal_dims_get_leading_ones() {
        let x = Subspace::coordinate(4, &[0, 1, 2]).unwrap();
        let y = Subspace::coordinate(4, &[0]).unwrap();
        let pd = projector_difference_singvals(&x, &y).unwrap();
        assert_eq!(pd.predicted, vec![1.0, 1.0, 0.0, 0.0]);
        assert!(pd.max_deviation < 1e-14);
    }

    #[test]
    fn structural_relations_on_coordinate_spaces() {
        let x = Subspace::coordinate(4, &[0, 1, 2]).unwrap();
        let y = Subspace::coordinate(4, &[1, 3]).unwrap();
        let (l, r) = complement_angle_relation(&x, &y).unwrap();
        assert_eq!(l.len(), 3);
        assert!(max_abs_diff(&l, &r) < 1e-14, "{l:?} {r:?}");
        let (l, r) = complement_pair_relation(&x, &y).unwrap();
        assert!(max_abs_diff(&l, &r) < 1e-14, "{l:?} {r:?}");
        let (e, p) = restricted_product_spectrum(&x, &y).unwrap();
        assert!(max_abs_diff(&e, &p) < 1e-14, "{e:?} {p:?}");
        assert_eq!(p, vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn full_space_relations() {
        let x = Subspace::coordinate(3, &[0]).unwrap();
        let y = Subspace::full(3);
        let (l, r) = complement_angle_relation(&x, &y).unwrap();
        assert!(max_abs_diff(&l, &r) < 1e-14);
        let (l, r) = complement_pair_relation(&y, &x).unwrap();
        assert!(max_abs_diff(&l, &r) < 1e-14);
    }
}

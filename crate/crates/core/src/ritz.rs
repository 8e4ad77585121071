//! Rayleigh–Ritz values and their sensitivity to the trial subspace.
//!
//! A symmetric `A` with spectrum in `[0, 1]` is the upper-left block of the
//! orthogonal projector
//!
//! ```text
//!     Â = [ A            √A·√(I−A) ]
//!         [ √A·√(I−A)    I − A     ]
//! ```
//!
//! on `R^{2n}`. Ritz values of `A` on a trial subspace `X` equal those of `Â`
//! on `[X; 0]`, which turns Ritz values into squared cosines of principal
//! angles. [`ritz_perturbation_check`] evaluates the resulting bound
//! `|Λ(X) − Λ(Y)| ≺w (λmax − λmin)·sinΘ(X, Y)`.

use crate::error::{Error, Result};
use crate::linalg::{sqrt_psd, sym_eig};
use crate::majorization::{abs_diff, weak_majorizes, MajorizationReport};
use crate::matrix::Matrix;
use crate::subspace::{principal_angles, Subspace};
use crate::tol;

/// Ritz values, nonincreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct RitzSet {
    pub values: Vec<f64>,
    pub trial_dim: usize,
}

fn check_symmetric(a: &Matrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NonSquare(a.rows(), a.cols()));
    }
    let defect = a.symmetry_defect();
    let t = tol::sym_tol(a);
    if defect > t {
        return Err(Error::AsymmetryExceedsTolerance { defect, tol: t });
    }
    Ok(())
}

fn check_trial(a: &Matrix, x: &Subspace) -> Result<()> {
    if x.ambient_dim() != a.rows() {
        return Err(Error::AmbientMismatch(a.rows(), x.ambient_dim()));
    }
    Ok(())
}

pub fn ritz_values(a: &Matrix, x: &Subspace) -> Result<RitzSet> {
    check_symmetric(a)?;
    check_trial(a, x)?;
    let values = sym_eig(&x.restrict(&a.symmetrized()).symmetrized())?.values;
    Ok(RitzSet {
        values,
        trial_dim: x.dim(),
    })
}

fn extreme_eigenvalues(a: &Matrix) -> Result<(f64, f64)> {
    let v = sym_eig(a)?.values;
    Ok((v[v.len() - 1], v[0]))
}

/// `λmax − λmin`.
pub fn spread(a: &Matrix) -> Result<f64> {
    let (lo, hi) = extreme_eigenvalues(a)?;
    Ok((hi - lo).max(0.0))
}

/// Spread of the Rayleigh quotient of `A` over unit vectors of `X + Y`.
pub fn local_spread(a: &Matrix, x: &Subspace, y: &Subspace) -> Result<f64> {
    check_symmetric(a)?;
    check_trial(a, x)?;
    check_trial(a, y)?;
    let sum = x.sum(y)?;
    spread(&sum.restrict(&a.symmetrized()).symmetrized())
}

/// `scale·(A − shift·I)` with spectrum mapped onto `[0, 1]`.
#[derive(Debug, Clone)]
pub struct NormalizedOperator {
    pub matrix: Matrix,
    pub shift: f64,
    pub scale: f64,
}

pub fn normalize_spectrum(a: &Matrix) -> Result<NormalizedOperator> {
    let (lo, hi) = extreme_eigenvalues(a)?;
    let width = hi - lo;
    if width <= tol::eig_tol(a) {
        return Err(Error::ZeroSpread);
    }
    let scale = 1.0 / width;
    let matrix = a.symmetrized().shift_diagonal(-lo).scale(scale).symmetrized();
    Ok(NormalizedOperator {
        matrix,
        shift: lo,
        scale,
    })
}

/// Orthogonal projector on `R^{2n}` whose upper-left block is `scale·(A − shift)`.
#[derive(Debug, Clone)]
pub struct Dilation {
    pub original_dim: usize,
    pub projector_matrix: Matrix,
    pub shift: f64,
    pub scale: f64,
}

impl Dilation {
    pub fn upper_left(&self) -> Matrix {
        let n = self.original_dim;
        self.projector_matrix.submatrix(0, 0, n, n)
    }

    /// `||Â² − Â||_max`.
    pub fn idempotency_residual(&self) -> f64 {
        let p = &self.projector_matrix;
        p.matmul(p).max_abs_diff(p)
    }

    /// Range of `Â`: eigenvectors whose eigenvalue is at least 1/2.
    pub fn range(&self) -> Result<Subspace> {
        let eig = sym_eig(&self.projector_matrix)?;
        let keep: Vec<usize> = (0..eig.values.len())
            .filter(|&k| eig.values[k] >= tol::PROJECTOR_SPLIT)
            .collect();
        if keep.is_empty() {
            return Err(Error::ZeroRank);
        }
        Subspace::from_orthonormal(eig.vectors.select_columns(&keep))
    }
}

/// Dilates `A` (spectrum in `[0, 1]` up to `psd_tol`) to an orthogonal projector.
pub fn dilate_to_projector(a: &Matrix) -> Result<Dilation> {
    check_symmetric(a)?;
    let a = a.symmetrized();
    let n = a.rows();
    let (lo, hi) = extreme_eigenvalues(&a)?;
    let slack = tol::psd_tol(&a).max(tol::psd_tol(&Matrix::identity(n)));
    if lo < -slack || hi > 1.0 + slack {
        return Err(Error::SpectrumOutOfUnitInterval { min: lo, max: hi });
    }
    let complement = Matrix::identity(n).sub(&a);
    let cross = sqrt_psd(&a)?.matmul(&sqrt_psd(&complement)?).symmetrized();
    Ok(Dilation {
        original_dim: n,
        projector_matrix: Matrix::block2x2(&a, &cross, &cross, &complement),
        shift: 0.0,
        scale: 1.0,
    })
}

/// Normalizes an arbitrary symmetric `A` and dilates the result.
pub fn dilate_normalized(a: &Matrix) -> Result<Dilation> {
    let norm = normalize_spectrum(a)?;
    let mut d = dilate_to_projector(&norm.matrix)?;
    d.shift = norm.shift;
    d.scale = norm.scale;
    Ok(d)
}

/// `[X; 0] ⊂ R^{2n}`.
pub fn embed_trial(x: &Subspace) -> Subspace {
    let n = x.ambient_dim();
    let basis = x.basis().vcat(&Matrix::zeros(n, x.dim()));
    Subspace::from_orthonormal(basis).expect("embedding keeps orthonormal columns")
}

/// Which spectral width multiplies `sinΘ(X, Y)` on the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpreadKind {
    /// `λmax(A) − λmin(A)`.
    Global,
    /// Rayleigh-quotient spread over `X + Y`.
    Local,
}

#[derive(Debug, Clone)]
pub struct RitzPerturbationReport {
    pub ritz_x: Vec<f64>,
    pub ritz_y: Vec<f64>,
    /// `|Λ(X) − Λ(Y)|`, entrywise on the sorted Ritz vectors.
    pub lhs: Vec<f64>,
    /// `sinΘ(X, Y)`, nondecreasing.
    pub sines: Vec<f64>,
    pub spread_kind: SpreadKind,
    pub spread: f64,
    /// `spread · sinΘ(X, Y)`.
    pub rhs: Vec<f64>,
    pub majorization: MajorizationReport,
    /// `Σ lhs ≤ Σ rhs`.
    pub sum_holds: bool,
    /// `max lhs ≤ spread · gap(X, Y)`.
    pub max_holds: bool,
}

impl RitzPerturbationReport {
    pub fn holds(&self) -> bool {
        self.majorization.holds && self.sum_holds && self.max_holds
    }
}

/// Evaluates `|Λ(P_X A|_X) − Λ(P_Y A|_Y)| ≺w c·sinΘ(X, Y)` with slack
/// `tol_factor · max(1, ||rhs||_∞) · dim`.
pub fn ritz_perturbation_check(
    a: &Matrix,
    x: &Subspace,
    y: &Subspace,
    spread_kind: SpreadKind,
    tol_factor: f64,
) -> Result<RitzPerturbationReport> {
    check_symmetric(a)?;
    check_trial(a, x)?;
    check_trial(a, y)?;
    if x.dim() != y.dim() {
        return Err(Error::DimMismatch(x.dim(), y.dim()));
    }
    let ritz_x = ritz_values(a, x)?.values;
    let ritz_y = ritz_values(a, y)?.values;
    let lhs = abs_diff(&ritz_x, &ritz_y)?;
    let sines = principal_angles(x, y)?.sines;

    let spread = match normalize_spectrum(a) {
        Err(Error::ZeroSpread) => 0.0,
        Err(e) => return Err(e),
        Ok(_) => match spread_kind {
            SpreadKind::Global => spread(a)?,
            SpreadKind::Local => local_spread(a, x, y)?,
        },
    };
    let rhs: Vec<f64> = sines.iter().map(|s| spread * s).collect();

    let tol = tol::majorization_tol(tol_factor, &rhs, rhs.len());
    let majorization = if spread == 0.0 {
        // A = c·I: both Ritz vectors are constant c, the bound reads 0 ≤ 0
        MajorizationReport {
            holds: true,
            margins: vec![0.0; rhs.len()],
            worst_k: (!rhs.is_empty()).then_some(0),
            tolerance_used: tol,
        }
    } else {
        weak_majorizes(&rhs, &lhs, tol)?
    };
    let sum_holds = lhs.iter().sum::<f64>() <= rhs.iter().sum::<f64>() + tol;
    let lhs_max = lhs.iter().cloned().fold(0.0, f64::max);
    let gap = sines.last().copied().unwrap_or(0.0);
    let max_holds = lhs_max <= spread * gap + tol;

    Ok(RitzPerturbationReport {
        ritz_x,
        ritz_y,
        lhs,
        sines,
        spread_kind,
        spread,
        rhs,
        majorization,
        sum_holds,
        max_holds,
    })
}

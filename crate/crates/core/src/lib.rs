//! Weak-majorization bounds for principal angles, Ritz values and graph
//! Laplacian spectra.
//!
//! The crate is self-contained: dense symmetric eigensolves and SVDs are done
//! with Jacobi iterations in [`linalg`], subspaces and principal angles live in
//! [`subspace`], Rayleigh–Ritz and the projector dilation in [`ritz`], graph
//! Laplacians in [`graph`], and [`verify`] runs randomized checks of every
//! inequality.
//!
//! ```
//! use submaj::{principal_angles, Matrix, Subspace};
//!
//! let x = Subspace::coordinate(3, &[0]).unwrap();
//! let y = Subspace::from_columns(&Matrix::from_rows(&[[1.0], [1.0], [0.0]])).unwrap();
//! let theta = principal_angles(&x, &y).unwrap();
//! assert!((theta.angles[0] - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
//! ```

pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod majorization;
pub mod matrix;
pub mod ritz;
pub mod spectrum;
pub mod subspace;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{
    complete_graph, edge_laplacian, edge_selector, incidence_matrix, spectra_compare, vertex_laplacian,
    ComparisonReport, Graph,
};
pub use linalg::{eigenvalues, orthonormalize, singular_values, sqrt_psd, svd, sym_eig};
pub use majorization::{sort_desc, weak_majorizes, weak_majorizes_scaled, MajorizationReport, OrderedVector};
pub use matrix::Matrix;
pub use ritz::{
    dilate_normalized, dilate_to_projector, embed_trial, ritz_perturbation_check, ritz_values, spread, Dilation,
    RitzPerturbationReport, RitzSet, SpreadKind,
};
pub use spectrum::{SpectrumReport, SpectrumSource};
pub use subspace::{principal_angles, projector_difference_singvals, AngleSet, Subspace};
pub use verify::{CheckReport, TheoremId};

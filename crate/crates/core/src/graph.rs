//! Simple undirected graphs with 0/1 edge weights and their Laplacians.
//!
//! Vertices are numbered `1..=n`. An edge is stored as `(i, j)` with `i > j`,
//! and all edge lists follow the complete-graph order `(2,1), (3,1), (3,2),
//! (4,1), …`, so incidence columns and edge-selector coordinates line up.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::eigenvalues;
use crate::majorization::zero_pad;
use crate::matrix::Matrix;
use crate::ritz::ritz_values;
use crate::spectrum::{SpectrumReport, SpectrumSource};
use crate::subspace::Subspace;
use crate::tol;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 1-based vertex pairs in any order or orientation.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidEdge(a, b, n));
            }
            let e = (a.max(b), a.min(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edges `(i, j)`, `i > j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, e: (usize, usize)) -> bool {
        self.edges.binary_search(&(e.0.max(e.1), e.0.min(e.1))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(i, j) in &self.edges {
            d[i - 1] += 1;
            d[j - 1] += 1;
        }
        d
    }

    /// Graph on the same vertices with edges `E¹ ∪ E²`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::VertexCountMismatch(self.n, other.n));
        }
        let all: BTreeSet<_> = self.edges.iter().chain(&other.edges).copied().collect();
        Ok(Graph {
            n: self.n,
            edges: all.into_iter().collect(),
        })
    }

    /// Relabels vertex `v` as `perm[v - 1] + 1`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(i, j)| (perm[i - 1] + 1, perm[j - 1] + 1))
            .collect();
        Graph::new(self.n, &edges)
    }

    fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::NoEdges)
        } else {
            Ok(())
        }
    }
}

/// 0-based position of edge `(i, j)`, `i > j`, in the complete-graph order.
pub fn edge_index(i: usize, j: usize) -> usize {
    debug_assert!(i > j && j >= 1);
    (i - 1) * (i - 2) / 2 + (j - 1)
}

pub fn complete_edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let edges: Vec<_> = (2..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    Ok(Graph { n, edges })
}

/// Vertex-by-edge matrix: `+1` at the larger endpoint, `−1` at the smaller.
pub fn incidence_matrix(g: &Graph) -> Result<Matrix> {
    g.require_edges()?;
    Ok(Matrix::from_fn(g.n, g.edges.len(), |v, k| {
        let (i, j) = g.edges[k];
        if v + 1 == i {
            1.0
        } else if v + 1 == j {
            -1.0
        } else {
            0.0
        }
    }))
}

/// `L = Q·Qᵀ`.
pub fn vertex_laplacian(g: &Graph) -> Result<Matrix> {
    let q = incidence_matrix(g)?;
    Ok(q.matmul(&q.transpose()))
}

/// `K = Qᵀ·Q`.
pub fn edge_laplacian(g: &Graph) -> Result<Matrix> {
    let q = incidence_matrix(g)?;
    Ok(q.tr_matmul(&q))
}

/// `Q·diag(w)·Qᵀ` for nonnegative weights `w`, one per edge of `g`.
pub fn weighted_laplacian(g: &Graph, weights: &[f64]) -> Result<Matrix> {
    let q = incidence_matrix(g)?;
    if weights.len() != g.edge_count() {
        return Err(Error::LengthMismatch(weights.len(), g.edge_count()));
    }
    let qw = Matrix::from_fn(q.rows(), q.cols(), |i, k| q[(i, k)] * weights[k]);
    Ok(qw.matmul(&q.transpose()))
}

/// 0/1 weights of `g` over the complete-graph edge list: the diagonal of the selector projector.
pub fn edge_weights(g: &Graph) -> Vec<f64> {
    let mut w = vec![0.0; complete_edge_count(g.n)];
    for &(i, j) in &g.edges {
        w[edge_index(i, j)] = 1.0;
    }
    w
}

/// Coordinate subspace of the complete graph's edge space spanned by `g`'s edges.
pub fn edge_selector(g: &Graph) -> Result<Subspace> {
    g.require_edges()?;
    let idx: Vec<usize> = g.edges.iter().map(|&(i, j)| edge_index(i, j)).collect();
    Subspace::coordinate(complete_edge_count(g.n), &idx)
}

fn spectrum(m: &Matrix, source: SpectrumSource, g: &Graph) -> Result<SpectrumReport> {
    Ok(SpectrumReport {
        values: eigenvalues(m)?,
        source,
        n: g.n,
        m: g.edge_count(),
    })
}

pub fn vertex_spectrum(g: &Graph) -> Result<SpectrumReport> {
    spectrum(&vertex_laplacian(g)?, SpectrumSource::VertexLaplacian, g)
}

pub fn edge_spectrum(g: &Graph) -> Result<SpectrumReport> {
    spectrum(&edge_laplacian(g)?, SpectrumSource::EdgeLaplacian, g)
}

/// Edge-Laplacian Ritz values of `K_n` on the edge selector of `g`.
pub fn complete_graph_ritz_spectrum(g: &Graph) -> Result<SpectrumReport> {
    let kc = edge_laplacian(&complete_graph(g.n)?)?;
    let values = ritz_values(&kc, &edge_selector(g)?)?.values;
    Ok(SpectrumReport {
        values,
        source: SpectrumSource::CompleteGraph,
        n: g.n,
        m: g.edge_count(),
    })
}

/// Entries above `1e-8·n` (the structural-zero threshold for Laplacian spectra).
pub fn nonzero_part(values: &[f64], n: usize) -> Vec<f64> {
    let cut = 1e-8 * n as f64;
    values.iter().copied().filter(|v| *v > cut).collect()
}

#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub n: usize,
    /// Vertex-Laplacian spectra, nonincreasing, length `n`.
    pub lambda1: Vec<f64>,
    pub lambda2: Vec<f64>,
    /// `Σ_k |λ¹_k − λ²_k|`.
    pub lhs: f64,
    /// `|E¹ \ E²|`.
    pub differing_edges: usize,
    /// `n·l`.
    pub rhs: f64,
    pub holds: bool,
    /// Largest Laplacian eigenvalue of `(V, E¹ ∪ E²)`.
    pub union_lambda_max: f64,
    /// `λmax(union)·l`.
    pub sharpened_rhs: f64,
    pub sharpened_holds: bool,
    pub tolerance_used: f64,
}

/// Compares the Laplacian spectra of two graphs with equal vertex and edge counts.
pub fn spectra_compare(g1: &Graph, g2: &Graph, tol_factor: f64) -> Result<ComparisonReport> {
    if g1.n != g2.n {
        return Err(Error::VertexCountMismatch(g1.n, g2.n));
    }
    if g1.edge_count() != g2.edge_count() {
        return Err(Error::EdgeCountMismatch(g1.edge_count(), g2.edge_count()));
    }
    let n = g1.n;
    let laplacian_or_zero = |g: &Graph| -> Result<Vec<f64>> {
        match vertex_spectrum(g) {
            Ok(s) => Ok(s.values),
            Err(Error::NoEdges) => Ok(vec![0.0; n]),
            Err(e) => Err(e),
        }
    };
    let lambda1 = zero_pad(&laplacian_or_zero(g1)?, n);
    let lambda2 = zero_pad(&laplacian_or_zero(g2)?, n);
    let lhs: f64 = lambda1.iter().zip(&lambda2).map(|(a, b)| (a - b).abs()).sum();

    let l = g1.edges.iter().filter(|e| !g2.contains(**e)).count();
    let rhs = (n * l) as f64;
    let union_lambda_max = laplacian_or_zero(&g1.union(g2)?)?[0];
    let sharpened_rhs = union_lambda_max * l as f64;
    let tolerance_used = tol::majorization_tol(tol_factor, &[rhs], n);

    Ok(ComparisonReport {
        n,
        lambda1,
        lambda2,
        lhs,
        differing_edges: l,
        rhs,
        holds: lhs <= rhs + tolerance_used,
        union_lambda_max,
        sharpened_rhs,
        sharpened_holds: lhs <= sharpened_rhs + tolerance_used,
        tolerance_used,
    })
}

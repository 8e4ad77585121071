use std::fmt;

/// Which operator a [`SpectrumReport`] was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    VertexLaplacian,
    EdgeLaplacian,
    CompleteGraph,
    ProjectorDifference,
}

impl SpectrumSource {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumSource::VertexLaplacian => "vertex-laplacian",
            SpectrumSource::EdgeLaplacian => "edge-laplacian",
            SpectrumSource::CompleteGraph => "complete-graph",
            SpectrumSource::ProjectorDifference => "projector-difference",
        }
    }
}

impl fmt::Display for SpectrumSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Nonincreasing eigenvalue or singular value vector with its provenance.
///
/// For graph spectra `n` is the vertex count and `m` the edge count; for
/// projector differences `n` is the ambient dimension and `m` the number of
/// principal angles.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub values: Vec<f64>,
    pub source: SpectrumSource,
    pub n: usize,
    pub m: usize,
}

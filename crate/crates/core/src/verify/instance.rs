//! Checker inputs and their reproduction-file form.
//!
//! ```text
//! # any comment
//! theorem THM-4-1-RITZ
//! seed 1234
//! trial 17
//! matrix A
//! 3 3
//! ...
//! graph G1
//! 4 3
//! ...
//! ```
//!
//! Matrices and graphs use the regular matrix and edge-list formats, so the
//! blocks can be cut out and fed to the CLI directly.

use std::fmt::Write as _;
use std::path::Path;

use super::TheoremId;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{content_lines, parse_graph_lines, parse_matrix_lines, write_edge_list, write_matrix};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub theorem: TheoremId,
    /// Seed the instance was generated from; also drives any sampling done while evaluating it.
    pub seed: u64,
    pub trial: usize,
    pub matrices: Vec<(String, Matrix)>,
    pub graphs: Vec<(String, Graph)>,
}

impl Instance {
    pub fn new(theorem: TheoremId, seed: u64, trial: usize) -> Self {
        Self {
            theorem,
            seed,
            trial,
            matrices: Vec::new(),
            graphs: Vec::new(),
        }
    }

    pub fn with_matrix(mut self, name: &str, m: Matrix) -> Self {
        self.matrices.push((name.to_string(), m));
        self
    }

    pub fn with_graph(mut self, name: &str, g: Graph) -> Self {
        self.graphs.push((name.to_string(), g));
        self
    }

    pub fn matrix(&self, name: &str) -> Result<&Matrix> {
        self.matrices
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::BadDims(format!("instance has no matrix {name:?}")))
    }

    pub fn graph(&self, name: &str) -> Result<&Graph> {
        self.graphs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
            .ok_or_else(|| Error::BadDims(format!("instance has no graph {name:?}")))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# submaj reproduction file\n");
        let _ = writeln!(out, "theorem {}", self.theorem);
        let _ = writeln!(out, "seed {}", self.seed);
        let _ = writeln!(out, "trial {}", self.trial);
        for (name, m) in &self.matrices {
            let _ = writeln!(out, "matrix {name}");
            out.push_str(&write_matrix(m));
        }
        for (name, g) in &self.graphs {
            let _ = writeln!(out, "graph {name}");
            out.push_str(&write_edge_list(g));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let total = text.lines().count().max(1);
        let mut lines = content_lines(text).peekable();
        let mut theorem = None;
        let mut seed = None;
        let mut trial = None;
        let mut matrices = Vec::new();
        let mut graphs = Vec::new();

        while let Some((ln, line)) = lines.next() {
            let (key, value) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let value = value.trim();
            let bad = |what: &str| Error::Parse {
                line: ln,
                msg: format!("bad {what} {value:?}"),
            };
            match key {
                "theorem" => theorem = Some(value.parse::<TheoremId>().map_err(|_| bad("theorem"))?),
                "seed" => seed = Some(value.parse::<u64>().map_err(|_| bad("seed"))?),
                "trial" => trial = Some(value.parse::<usize>().map_err(|_| bad("trial"))?),
                "matrix" => matrices.push((value.to_string(), parse_matrix_lines(&mut lines, total)?)),
                "graph" => graphs.push((value.to_string(), parse_graph_lines(&mut lines, total)?)),
                _ => {
                    return Err(Error::Parse {
                        line: ln,
                        msg: format!("unexpected key {key:?}"),
                    });
                }
            }
        }
        let missing = |what: &str| Error::Parse {
            line: total,
            msg: format!("missing {what}"),
        };
        Ok(Self {
            theorem: theorem.ok_or_else(|| missing("theorem"))?,
            seed: seed.ok_or_else(|| missing("seed"))?,
            trial: trial.ok_or_else(|| missing("trial"))?,
            matrices,
            graphs,
        })
    }

    pub fn write_to(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read_from(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let inst = Instance::new(TheoremId::Thm52Graph, u64::MAX, 3)
            .with_matrix("A", Matrix::from_rows(&[[1.0 / 3.0, -2e-300], [7.5, 0.1]]))
            .with_graph("G1", Graph::new(4, &[(2, 1), (4, 3)]).unwrap());
        let back = Instance::parse(&inst.to_text()).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Instance::parse("theorem NOPE\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(Instance::parse("seed 1\ntrial 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Instance::parse("bogus 1\n"), Err(Error::Parse { .. })));
    }
}

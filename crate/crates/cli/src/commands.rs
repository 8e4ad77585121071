use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use submaj::graph::spectra_compare;
use submaj::io::{read_edge_list, read_matrix, write_matrix};
use submaj::ritz::{
    dilate_normalized, dilate_to_projector, embed_trial, ritz_perturbation_check, ritz_values, SpreadKind,
};
use submaj::subspace::{principal_angles, projector_difference_singvals, Subspace};
use submaj::verify::{run_suite, suite_passed, CheckConfig, Dims, SuiteConfig, TheoremId};
use submaj::{Error, Graph, Matrix};

use crate::output::{f17s, human, human_list, to_json, verdict, F17, SCHEMA};

const STRUCTURE_TOL: f64 = 1e-8;
const DILATION_TOL: f64 = 1e-9;
const UPPER_LEFT_TOL: f64 = 1e-10;

pub struct Outcome {
    pub text: String,
    pub holds: bool,
}

#[derive(Debug)]
pub struct Failure {
    pub error: Error,
    pub context: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Self { error, context: None }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.context {
            Some(c) => write!(f, "{c}: {}", self.error),
            None => write!(f, "{}", self.error),
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    schema: u32,
    command: &'a str,
    error: ErrorBody<'a>,
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self.error {
            Error::NoConvergence { .. } => 3,
            _ => 2,
        }
    }

    pub fn to_json(&self, command: &str) -> String {
        to_json(&ErrorReport {
            schema: SCHEMA,
            command,
            error: ErrorBody {
                kind: self.error.kind(),
                message: self.to_string(),
            },
        })
    }
}

fn with_path<T>(path: &Path, r: submaj::Result<T>) -> Result<T, Failure> {
    r.map_err(|error| Failure {
        error,
        context: Some(path.display().to_string()),
    })
}

fn load_matrix(path: &Path) -> Result<Matrix, Failure> {
    with_path(path, read_matrix(path))
}

fn load_subspace(path: &Path) -> Result<Subspace, Failure> {
    let m = load_matrix(path)?;
    with_path(path, Subspace::from_columns(&m))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    with_path(path, read_edge_list(path))
}

fn desc(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

// ---------------------------------------------------------------- angles

#[derive(Serialize)]
struct ProjectorDifferenceJson {
    singular_values: Vec<F17>,
    predicted: Vec<F17>,
    max_deviation: F17,
    consistent: bool,
}

#[derive(Serialize)]
struct AnglesJson {
    schema: u32,
    command: &'static str,
    ambient_dim: usize,
    dim_x: usize,
    dim_y: usize,
    angles: Vec<F17>,
    cosines: Vec<F17>,
    sines: Vec<F17>,
    projector_difference: ProjectorDifferenceJson,
}

pub fn angles(x_path: &Path, y_path: &Path, json: bool) -> Result<Outcome, Failure> {
    let x = load_subspace(x_path)?;
    let y = load_subspace(y_path)?;
    let theta = principal_angles(&x, &y)?;
    let pd = projector_difference_singvals(&x, &y)?;
    let consistent = pd.max_deviation <= STRUCTURE_TOL;

    let text = if json {
        to_json(&AnglesJson {
            schema: SCHEMA,
            command: "angles",
            ambient_dim: x.ambient_dim(),
            dim_x: x.dim(),
            dim_y: y.dim(),
            angles: f17s(&theta.angles),
            cosines: f17s(&theta.cosines),
            sines: f17s(&theta.sines),
            projector_difference: ProjectorDifferenceJson {
                singular_values: f17s(&pd.spectrum.values),
                predicted: f17s(&pd.predicted),
                max_deviation: F17(pd.max_deviation),
                consistent,
            },
        }) + "\n"
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "ambient n={} dim X={} dim Y={}", x.ambient_dim(), x.dim(), y.dim());
        let _ = writeln!(s, "angles  {}", human_list(&theta.angles));
        let _ = writeln!(s, "cosines {}", human_list(&theta.cosines));
        let _ = writeln!(s, "sines   {}", human_list(&theta.sines));
        let _ = writeln!(
            s,
            "projector difference: max deviation {} {}",
            human(pd.max_deviation),
            if consistent { "consistent" } else { "INCONSISTENT" }
        );
        s
    };
    Ok(Outcome {
        text,
        holds: consistent,
    })
}

// ---------------------------------------------------------------- ritz

#[derive(Serialize)]
struct RitzJson {
    schema: u32,
    command: &'static str,
    ritz_x: Vec<F17>,
    ritz_y: Vec<F17>,
    lhs: Vec<F17>,
    sines: Vec<F17>,
    spread_kind: &'static str,
    spread: F17,
    rhs: Vec<F17>,
    margins: Vec<F17>,
    worst_k: Option<usize>,
    tolerance: F17,
    majorization_holds: bool,
    sum_holds: bool,
    max_holds: bool,
    holds: bool,
}

pub fn ritz(
    a_path: &Path,
    x_path: &Path,
    y_path: &Path,
    local: bool,
    tol: f64,
    json: bool,
) -> Result<Outcome, Failure> {
    let a = load_matrix(a_path)?;
    let x = load_subspace(x_path)?;
    let y = load_subspace(y_path)?;
    let kind = if local { SpreadKind::Local } else { SpreadKind::Global };
    let r = ritz_perturbation_check(&a, &x, &y, kind, tol)?;
    let kind_name = if local { "local" } else { "global" };
    let holds = r.holds();

    let text = if json {
        to_json(&RitzJson {
            schema: SCHEMA,
            command: "ritz",
            ritz_x: f17s(&r.ritz_x),
            ritz_y: f17s(&r.ritz_y),
            lhs: f17s(&r.lhs),
            sines: f17s(&r.sines),
            spread_kind: kind_name,
            spread: F17(r.spread),
            rhs: f17s(&r.rhs),
            margins: f17s(&r.majorization.margins),
            worst_k: r.majorization.worst_k,
            tolerance: F17(r.majorization.tolerance_used),
            majorization_holds: r.majorization.holds,
            sum_holds: r.sum_holds,
            max_holds: r.max_holds,
            holds,
        }) + "\n"
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "ritz X   {}", human_list(&r.ritz_x));
        let _ = writeln!(s, "ritz Y   {}", human_list(&r.ritz_y));
        let _ = writeln!(s, "lhs desc {}", human_list(&desc(&r.lhs)));
        let _ = writeln!(s, "rhs desc {}", human_list(&desc(&r.rhs)));
        let _ = writeln!(s, "spread ({kind_name}) {}", human(r.spread));
        let _ = writeln!(s, "margins  {}", human_list(&r.majorization.margins));
        if let Some(k) = r.majorization.worst_k {
            let _ = writeln!(s, "worst k={} margin={}", k + 1, human(r.majorization.margins[k]));
        }
        let _ = writeln!(
            s,
            "majorization {} sum {} max {}",
            verdict(r.majorization.holds),
            verdict(r.sum_holds),
            verdict(r.max_holds)
        );
        let _ = writeln!(s, "{}", verdict(holds));
        s
    };
    Ok(Outcome { text, holds })
}

// ---------------------------------------------------------------- graph-compare

#[derive(Serialize)]
struct GraphJson {
    schema: u32,
    command: &'static str,
    n: usize,
    edges: usize,
    lambda1: Vec<F17>,
    lambda2: Vec<F17>,
    lhs: F17,
    differing_edges: usize,
    bound: usize,
    holds: bool,
    union_lambda_max: F17,
    sharpened_bound: F17,
    sharpened_holds: bool,
    tolerance: F17,
}

pub fn graph_compare(g1_path: &Path, g2_path: &Path, tol: f64, json: bool) -> Result<Outcome, Failure> {
    let g1 = load_graph(g1_path)?;
    let g2 = load_graph(g2_path)?;
    let r = spectra_compare(&g1, &g2, tol)?;
    let bound = r.n * r.differing_edges;
    let holds = r.holds && r.sharpened_holds;

    let text = if json {
        to_json(&GraphJson {
            schema: SCHEMA,
            command: "graph-compare",
            n: r.n,
            edges: g1.edge_count(),
            lambda1: f17s(&r.lambda1),
            lambda2: f17s(&r.lambda2),
            lhs: F17(r.lhs),
            differing_edges: r.differing_edges,
            bound,
            holds: r.holds,
            union_lambda_max: F17(r.union_lambda_max),
            sharpened_bound: F17(r.sharpened_rhs),
            sharpened_holds: r.sharpened_holds,
            tolerance: F17(r.tolerance_used),
        }) + "\n"
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "lambda1 {}", human_list(&r.lambda1));
        let _ = writeln!(s, "lambda2 {}", human_list(&r.lambda2));
        let _ = writeln!(
            s,
            "lhs={} l={} bound={} {}",
            human(r.lhs),
            r.differing_edges,
            bound,
            verdict(r.holds)
        );
        let _ = writeln!(
            s,
            "sharpened bound={} (union lambda_max={}) {}",
            human(r.sharpened_rhs),
            human(r.union_lambda_max),
            verdict(r.sharpened_holds)
        );
        s
    };
    Ok(Outcome { text, holds })
}

// ---------------------------------------------------------------- dilate

#[derive(Serialize)]
struct TrialJson {
    ritz_original: Vec<F17>,
    ritz_dilated: Vec<F17>,
    max_deviation: F17,
    preserved: bool,
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<F17>,
}

#[derive(Serialize)]
struct DilateJson {
    schema: u32,
    command: &'static str,
    n: usize,
    shift: F17,
    scale: F17,
    idempotency_residual: F17,
    upper_left_residual: F17,
    #[serde(skip_serializing_if = "Option::is_none")]
    trial: Option<TrialJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<MatrixJson>,
    holds: bool,
}

pub fn dilate(
    a_path: &Path,
    normalize: bool,
    trial: Option<&Path>,
    out: Option<&Path>,
    json: bool,
) -> Result<Outcome, Failure> {
    let a = load_matrix(a_path)?;
    let d = if normalize {
        dilate_normalized(&a)
    } else {
        dilate_to_projector(&a)
    };
    let d = with_path(a_path, d)?;
    let n = d.original_dim;
    let normalized = a.symmetrized().shift_diagonal(-d.shift).scale(d.scale).symmetrized();
    let idempotency = d.idempotency_residual();
    let upper_left = d.upper_left().max_abs_diff(&normalized);

    let trial = match trial {
        Some(path) => {
            let x = load_subspace(path)?;
            let original = with_path(path, ritz_values(&normalized, &x))?.values;
            let dilated = ritz_values(&d.projector_matrix, &embed_trial(&x))?.values;
            let dev = original
                .iter()
                .zip(&dilated)
                .fold(0.0f64, |m, (p, q)| m.max((p - q).abs()));
            Some((original, dilated, dev))
        }
        None => None,
    };
    let preserved = trial.as_ref().is_none_or(|t| t.2 <= DILATION_TOL);
    let holds = idempotency <= DILATION_TOL && upper_left <= UPPER_LEFT_TOL && preserved;

    let matrix_text = write_matrix(&d.projector_matrix);
    if let Some(path) = out {
        with_path(path, std::fs::write(path, &matrix_text).map_err(Error::from))?;
    }

    let text = if json {
        to_json(&DilateJson {
            schema: SCHEMA,
            command: "dilate",
            n,
            shift: F17(d.shift),
            scale: F17(d.scale),
            idempotency_residual: F17(idempotency),
            upper_left_residual: F17(upper_left),
            trial: trial.as_ref().map(|(o, l, dev)| TrialJson {
                ritz_original: f17s(o),
                ritz_dilated: f17s(l),
                max_deviation: F17(*dev),
                preserved,
            }),
            out: out.map(|p| p.display().to_string()),
            matrix: out.is_none().then(|| MatrixJson {
                rows: d.projector_matrix.rows(),
                cols: d.projector_matrix.cols(),
                data: f17s(d.projector_matrix.as_slice()),
            }),
            holds,
        }) + "\n"
    } else {
        // without --out the matrix goes to stdout and the report becomes comments
        let prefix = if out.is_none() { "# " } else { "" };
        let mut s = String::new();
        let _ = writeln!(s, "{prefix}dilation of {n}x{n} into {}x{}", 2 * n, 2 * n);
        let _ = writeln!(s, "{prefix}shift={} scale={}", human(d.shift), human(d.scale));
        let _ = writeln!(s, "{prefix}idempotency residual {}", human(idempotency));
        let _ = writeln!(s, "{prefix}upper-left residual {}", human(upper_left));
        if let Some((o, l, dev)) = &trial {
            let _ = writeln!(s, "{prefix}ritz original {}", human_list(o));
            let _ = writeln!(s, "{prefix}ritz dilated  {}", human_list(l));
            let _ = writeln!(
                s,
                "{prefix}max deviation {} {}",
                human(*dev),
                if preserved { "preserved" } else { "NOT PRESERVED" }
            );
        }
        let _ = writeln!(s, "{prefix}{}", verdict(holds));
        match out {
            Some(p) => {
                let _ = writeln!(s, "wrote {}", p.display());
            }
            None => s.push_str(&matrix_text),
        }
        s
    };
    Ok(Outcome { text, holds })
}

// ---------------------------------------------------------------- verify

pub struct VerifyOptions<'a> {
    pub theorems: &'a str,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub min_dim: usize,
    pub max_dim: usize,
    pub out: &'a PathBuf,
}

#[derive(Serialize)]
struct CheckJson {
    theorem: String,
    trials: usize,
    failures: usize,
    worst_margin: F17,
    repro_files: Vec<String>,
}

#[derive(Serialize)]
struct VerifyJson {
    schema: u32,
    command: &'static str,
    seed: u64,
    trials: usize,
    tol_factor: F17,
    min_dim: usize,
    max_dim: usize,
    passed: bool,
    reports: Vec<CheckJson>,
}

pub fn verify(opts: &VerifyOptions<'_>, json: bool) -> Result<Outcome, Failure> {
    let theorems = TheoremId::parse_list(opts.theorems)?;
    let config = SuiteConfig {
        theorems,
        check: CheckConfig {
            trials: opts.trials,
            dims: Dims {
                min_n: opts.min_dim,
                max_n: opts.max_dim,
            },
            seed: opts.seed,
            tol_factor: opts.tol,
            repro_dir: Some(opts.out.clone()),
        },
    };
    let start = Instant::now();
    let reports = run_suite(&config)?;
    let passed = suite_passed(&reports);
    eprintln!(
        "verify: {} theorem(s) in {:.2}s",
        reports.len(),
        start.elapsed().as_secs_f64()
    );

    let text = if json {
        to_json(&VerifyJson {
            schema: SCHEMA,
            command: "verify",
            seed: opts.seed,
            trials: opts.trials,
            tol_factor: F17(opts.tol),
            min_dim: opts.min_dim,
            max_dim: opts.max_dim,
            passed,
            reports: reports
                .iter()
                .map(|r| CheckJson {
                    theorem: r.theorem.to_string(),
                    trials: r.trials,
                    failures: r.failures,
                    worst_margin: F17(r.worst_margin),
                    repro_files: r.repro_files.iter().map(|p| p.display().to_string()).collect(),
                })
                .collect(),
        }) + "\n"
    } else {
        let mut s = String::new();
        for r in &reports {
            let _ = writeln!(
                s,
                "{:<16} trials={} failures={} worst_margin={} {}",
                r.theorem.as_str(),
                r.trials,
                r.failures,
                human(r.worst_margin),
                if r.passed() { "PASS" } else { "FAIL" }
            );
            for p in &r.repro_files {
                let _ = writeln!(s, "  repro {}", p.display());
            }
        }
        let _ = writeln!(
            s,
            "suite {} ({} theorems, seed {})",
            if passed { "PASS" } else { "FAIL" },
            reports.len(),
            opts.seed
        );
        s
    };
    Ok(Outcome { text, holds: passed })
}

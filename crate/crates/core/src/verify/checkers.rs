use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use super::instance::Instance;
use super::random::{gaussian_matrix, gaussian_symmetric, rng_from_seed, symmetric_with_spectrum, TrialRng};
use super::{Dims, TheoremId, TrialOutcome};
use crate::error::{Error, Result};
use crate::graph::{complete_graph, spectra_compare, Graph};
use crate::linalg::{eigenvalues, singular_values};
use crate::majorization::{abs_diff, weak_majorizes_scaled, zero_pad};
use crate::matrix::{dot, norm2, Matrix};
use crate::ritz::{dilate_normalized, embed_trial, ritz_perturbation_check, ritz_values, SpreadKind};
use crate::subspace::{
    complement_angle_relation, complement_pair_relation, max_abs_diff, principal_angles, projector_difference_singvals,
    restricted_product_spectrum, Subspace,
};

const IDENTITY_ALLOWED: f64 = 1e-8;
const RITZ_PRESERVED: f64 = 1e-9;
const UPPER_LEFT_ALLOWED: f64 = 1e-10;
const LIDSKII_EXHAUSTIVE_MAX: usize = 8;
const LIDSKII_SAMPLES: usize = 200;

/// Function of the principal angles whose change is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleQuantity {
    /// `|Θ(X,Z) − Θ(Y,Z)| ≺w Θ(X,Y)`.
    Angle,
    /// `|sinΘ(X,Z) − sinΘ(Y,Z)| ≺w sinΘ(X,Y)`.
    Sine,
    /// `|cosΘ(X,Z) − cosΘ(Y,Z)| ≺w sinΘ(X,Y)`.
    Cosine,
    /// `|cos²Θ(X,Z) − cos²Θ(Y,Z)| ≺w sinΘ(X,Y)`.
    CosineSquared,
}

impl AngleQuantity {
    fn of(self, angle: f64, cos: f64, sin: f64) -> f64 {
        match self {
            AngleQuantity::Angle => angle,
            AngleQuantity::Sine => sin,
            AngleQuantity::Cosine => cos,
            AngleQuantity::CosineSquared => cos * cos,
        }
    }

    fn bound(self, angle: f64, sin: f64) -> f64 {
        match self {
            AngleQuantity::Angle => angle,
            _ => sin,
        }
    }
}

/// `(lhs, rhs)` of the subspace form: lhs is the entrywise change of the
/// quantity over `Z`, rhs is `Θ(X,Y)` or `sinΘ(X,Y)`.
pub fn angle_change_sides(x: &Subspace, y: &Subspace, z: &Subspace, q: AngleQuantity) -> Result<(Vec<f64>, Vec<f64>)> {
    if x.dim() != y.dim() {
        return Err(Error::DimMismatch(x.dim(), y.dim()));
    }
    let xz = principal_angles(x, z)?;
    let yz = principal_angles(y, z)?;
    let xy = principal_angles(x, y)?;
    let lhs = (0..xz.count())
        .map(|i| {
            let a = q.of(xz.angles[i], xz.cosines[i], xz.sines[i]);
            let b = q.of(yz.angles[i], yz.cosines[i], yz.sines[i]);
            (a - b).abs()
        })
        .collect();
    let rhs = (0..xy.count()).map(|i| q.bound(xy.angles[i], xy.sines[i])).collect();
    Ok((lhs, rhs))
}

/// Angle between two nonzero vectors as `(θ, cos θ, sin θ)`.
fn vector_angle(u: &[f64], v: &[f64]) -> Result<(f64, f64, f64)> {
    let (nu, nv) = (norm2(u), norm2(v));
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::ZeroRank);
    }
    let u: Vec<f64> = u.iter().map(|a| a / nu).collect();
    let v: Vec<f64> = v.iter().map(|a| a / nv).collect();
    let c = dot(&u, &v);
    let r: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a - c * b).collect();
    let theta = norm2(&r).atan2(c.abs());
    Ok((theta, theta.cos(), theta.sin()))
}

/// `(lhs, rhs)` of the scalar inequality for three nonzero vectors.
pub fn one_dimensional_sides(x: &[f64], y: &[f64], z: &[f64], q: AngleQuantity) -> Result<(f64, f64)> {
    if x.len() != y.len() || x.len() != z.len() {
        return Err(Error::LengthMismatch(x.len(), y.len().max(z.len())));
    }
    let (txz, cxz, sxz) = vector_angle(x, z)?;
    let (tyz, cyz, syz) = vector_angle(y, z)?;
    let (txy, _, sxy) = vector_angle(x, y)?;
    Ok(((q.of(txz, cxz, sxz) - q.of(tyz, cyz, syz)).abs(), q.bound(txy, sxy)))
}

fn tighter(a: TrialOutcome, b: TrialOutcome) -> TrialOutcome {
    if b.margin + b.tolerance < a.margin + a.tolerance || b.margin.is_nan() {
        b
    } else {
        a
    }
}

fn combine(outcomes: impl IntoIterator<Item = TrialOutcome>) -> TrialOutcome {
    outcomes.into_iter().reduce(tighter).unwrap_or(TrialOutcome {
        margin: f64::INFINITY,
        tolerance: 0.0,
    })
}

fn majorization(y: &[f64], x: &[f64], tol_factor: f64) -> Result<TrialOutcome> {
    let r = weak_majorizes_scaled(y, x, tol_factor)?;
    Ok(TrialOutcome {
        margin: r.worst_margin(),
        tolerance: r.tolerance_used,
    })
}

fn identity(deviation: f64, allowed: f64) -> TrialOutcome {
    TrialOutcome {
        margin: allowed - deviation,
        tolerance: 0.0,
    }
}

// ---------------------------------------------------------------- generation

fn ambient<R: Rng>(rng: &mut R, dims: Dims) -> usize {
    rng.random_range(dims.min_n..=dims.max_n)
}

fn scaled(m: Matrix, rng: &mut TrialRng) -> Matrix {
    let s = 10f64.powf(rng.random_range(-1.0..=1.0));
    m.scale(s)
}

/// Generator for a subspace related to `base`: independent, equal, nearby, or overlapping.
fn related(rng: &mut TrialRng, base: &Matrix) -> Matrix {
    let (n, k) = (base.rows(), base.cols());
    match rng.random_range(0..6) {
        0 => base.clone(),
        1 => {
            let eps = 10f64.powf(rng.random_range(-8.0..=-1.0));
            base.add(&gaussian_matrix(rng, n, k).scale(eps))
        }
        2 if k > 1 => {
            let keep = rng.random_range(1..k);
            let mut cols: Vec<usize> = (0..k).collect();
            cols.shuffle(rng);
            base.select_columns(&cols[..keep])
                .hcat(&gaussian_matrix(rng, n, k - keep))
        }
        _ => gaussian_matrix(rng, n, k),
    }
}

fn generate_1d(inst: Instance, rng: &mut TrialRng, dims: Dims) -> Instance {
    let n = ambient(rng, dims);
    let x = gaussian_matrix(rng, n, 1);
    let y = related(rng, &x);
    let z = if rng.random_bool(0.2) {
        related(rng, &x)
    } else {
        gaussian_matrix(rng, n, 1)
    };
    inst.with_matrix("x", x).with_matrix("y", y).with_matrix("z", z)
}

fn generate_angles(inst: Instance, rng: &mut TrialRng, dims: Dims, equal_z: bool) -> Instance {
    let n = ambient(rng, dims);
    let k = rng.random_range(1..n);
    let kz = if equal_z { k } else { rng.random_range(1..n) };
    let x = gaussian_matrix(rng, n, k);
    let y = related(rng, &x);
    let z = if kz == k && rng.random_bool(0.2) {
        related(rng, &x)
    } else {
        gaussian_matrix(rng, n, kz)
    };
    inst.with_matrix("X", x).with_matrix("Y", y).with_matrix("Z", z)
}

/// Two subspace generators with independent dimensions in `[1, n]`.
fn generate_pair(inst: Instance, rng: &mut TrialRng, dims: Dims) -> Instance {
    let n = ambient(rng, dims);
    let kx = rng.random_range(1..=n);
    let x = gaussian_matrix(rng, n, kx);
    let y = if rng.random_bool(1.0 / 3.0) {
        related(rng, &x)
    } else {
        let ky = rng.random_range(1..=n);
        gaussian_matrix(rng, n, ky)
    };
    inst.with_matrix("X", x).with_matrix("Y", y)
}

fn random_hermitian(rng: &mut TrialRng, n: usize) -> Matrix {
    match rng.random_range(0..3) {
        0 => scaled(gaussian_symmetric(rng, n), rng),
        1 => {
            let lo = rng.random_range(-5.0..=5.0);
            let hi = lo + rng.random_range(0.1..=10.0);
            symmetric_with_spectrum(rng, n, lo, hi)
        }
        _ => {
            // clustered spectrum with repeated eigenvalues
            let q = super::random::random_orthogonal(rng, n);
            let levels = [rng.random_range(-2.0..=2.0), rng.random_range(-2.0..=2.0)];
            let d: Vec<f64> = (0..n).map(|_| *levels.choose(rng).unwrap()).collect();
            let qd = Matrix::from_fn(n, n, |i, k| q[(i, k)] * d[k]);
            qd.matmul(&q.transpose()).symmetrized()
        }
    }
}

fn generate_matrix_pair(inst: Instance, rng: &mut TrialRng, dims: Dims, hermitian: bool) -> Instance {
    let n = ambient(rng, dims);
    let (a, b) = if hermitian {
        (random_hermitian(rng, n), random_hermitian(rng, n))
    } else {
        (
            scaled(gaussian_matrix(rng, n, n), rng),
            scaled(gaussian_matrix(rng, n, n), rng),
        )
    };
    let b = if rng.random_bool(0.1) { a.clone() } else { b };
    inst.with_matrix("A", a).with_matrix("B", b)
}

fn generate_ritz(inst: Instance, rng: &mut TrialRng, dims: Dims) -> Instance {
    let n = ambient(rng, dims);
    let a = if rng.random_bool(0.05) {
        Matrix::identity(n).scale(rng.random_range(-3.0..=3.0))
    } else {
        random_hermitian(rng, n)
    };
    let k = rng.random_range(1..n);
    let x = gaussian_matrix(rng, n, k);
    let y = related(rng, &x);
    inst.with_matrix("A", a).with_matrix("X", x).with_matrix("Y", y)
}

fn generate_dilation(inst: Instance, rng: &mut TrialRng, dims: Dims) -> Instance {
    let n = ambient(rng, dims);
    let a = loop {
        let a = random_hermitian(rng, n);
        let ev = eigenvalues(&a).expect("finite symmetric input");
        if ev[0] - ev[n - 1] > 1e-6 * ev[0].abs().max(ev[n - 1].abs()).max(1.0) {
            break a;
        }
    };
    let k = rng.random_range(1..=n);
    inst.with_matrix("A", a).with_matrix("X", gaussian_matrix(rng, n, k))
}

fn random_edge_set(rng: &mut TrialRng, all: &[(usize, usize)], m: usize) -> Vec<(usize, usize)> {
    let mut pool = all.to_vec();
    pool.shuffle(rng);
    pool.truncate(m);
    pool
}

fn generate_graphs(inst: Instance, rng: &mut TrialRng, dims: Dims) -> Instance {
    let n = ambient(rng, dims);
    let all = complete_graph(n).expect("n >= 2").edges().to_vec();
    let m = rng.random_range(1..=all.len());
    let e1 = random_edge_set(rng, &all, m);
    let e2 = if rng.random_bool(0.5) {
        random_edge_set(rng, &all, m)
    } else {
        // swap a few edges for a nearby graph
        let mut e2 = e1.clone();
        let mut absent: Vec<(usize, usize)> = all.iter().copied().filter(|e| !e1.contains(e)).collect();
        absent.shuffle(rng);
        let swaps = rng.random_range(0..=absent.len().min(m).min(3));
        for (slot, e) in absent.into_iter().take(swaps).enumerate() {
            e2[slot] = e;
        }
        e2
    };
    let g1 = Graph::new(n, &e1).expect("distinct edges");
    let g2 = Graph::new(n, &e2).expect("distinct edges");
    inst.with_graph("G1", g1).with_graph("G2", g2)
}

/// Draws the instance of trial `trial` from `seed`.
pub fn generate(id: TheoremId, seed: u64, trial: usize, dims: Dims) -> Instance {
    use TheoremId::*;
    let mut rng = rng_from_seed(seed);
    let inst = Instance::new(id, seed, trial);
    match id {
        Ineq1dAngle | Ineq1dSin | Ineq1dCos | Ineq1dSq => generate_1d(inst, &mut rng, dims),
        Thm21 | Thm23Lidskii | Cor25 => generate_matrix_pair(inst, &mut rng, dims, true),
        Cor22 | Cor24 => generate_matrix_pair(inst, &mut rng, dims, false),
        Thm26Pinch => {
            let n = ambient(&mut rng, dims);
            let k = rng.random_range(1..=n);
            let x = gaussian_matrix(&mut rng, n, k);
            let a = scaled(gaussian_matrix(&mut rng, n, n), &mut rng);
            inst.with_matrix("X", x).with_matrix("A", a)
        }
        Thm27 | Lem28 | Thm29 => generate_pair(inst, &mut rng, dims),
        Thm31Angles => generate_angles(inst, &mut rng, dims, true),
        Thm32Sin | Thm32Cos | Thm33Sq => generate_angles(inst, &mut rng, dims, false),
        Thm41Ritz => generate_ritz(inst, &mut rng, dims),
        Cor4Dilation => generate_dilation(inst, &mut rng, dims),
        Thm52Graph => generate_graphs(inst, &mut rng, dims),
    }
}

// ---------------------------------------------------------------- evaluation

fn subspace(inst: &Instance, name: &str) -> Result<Subspace> {
    Subspace::from_columns(inst.matrix(name)?)
}

fn eval_1d(inst: &Instance, q: AngleQuantity, tol_factor: f64) -> Result<TrialOutcome> {
    let (x, y, z) = (inst.matrix("x")?, inst.matrix("y")?, inst.matrix("z")?);
    let (lhs, rhs) = one_dimensional_sides(&x.column(0), &y.column(0), &z.column(0), q)?;
    let scalar = majorization(&[rhs], &[lhs], tol_factor)?;
    let (xs, ys, zs) = (
        Subspace::from_columns(x)?,
        Subspace::from_columns(y)?,
        Subspace::from_columns(z)?,
    );
    let (lhs, rhs) = angle_change_sides(&xs, &ys, &zs, q)?;
    Ok(tighter(scalar, majorization(&rhs, &lhs, tol_factor)?))
}

fn eval_angles(inst: &Instance, q: AngleQuantity, tol_factor: f64) -> Result<TrialOutcome> {
    let (x, y, z) = (subspace(inst, "X")?, subspace(inst, "Y")?, subspace(inst, "Z")?);
    if q == AngleQuantity::Angle && z.dim() != x.dim() {
        return Err(Error::DimMismatch(x.dim(), z.dim()));
    }
    let (lhs, rhs) = angle_change_sides(&x, &y, &z, q)?;
    majorization(&rhs, &lhs, tol_factor)
}

fn eval_eig_sum(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let (a, b) = (inst.matrix("A")?, inst.matrix("B")?);
    let lhs = eigenvalues(&a.add(b))?;
    let (la, lb) = (eigenvalues(a)?, eigenvalues(b)?);
    let rhs: Vec<f64> = la.iter().zip(&lb).map(|(p, q)| p + q).collect();
    majorization(&rhs, &lhs, tol_factor)
}

fn eval_sv_sum(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let (a, b) = (inst.matrix("A")?, inst.matrix("B")?);
    let (sa, sb) = (singular_values(a)?, singular_values(b)?);
    let rhs: Vec<f64> = sa.iter().zip(&sb).map(|(p, q)| p + q).collect();
    let plus = majorization(&rhs, &singular_values(&a.add(b))?, tol_factor)?;
    let minus = majorization(&rhs, &singular_values(&a.sub(b))?, tol_factor)?;
    Ok(tighter(plus, minus))
}

fn lidskii_subsets(n: usize, seed: u64) -> Vec<Vec<usize>> {
    if n <= LIDSKII_EXHAUSTIVE_MAX {
        return (1u32..(1 << n))
            .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
    }
    let mut rng = rng_from_seed(seed ^ 0x4C49_4453_4B49_4921);
    (0..LIDSKII_SAMPLES)
        .map(|_| {
            let k = rng.random_range(1..=n);
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(&mut rng);
            idx.truncate(k);
            idx.sort_unstable();
            idx
        })
        .collect()
}

fn eval_lidskii(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let (a, b) = (inst.matrix("A")?, inst.matrix("B")?);
    let (lab, la, lb) = (eigenvalues(&a.add(b))?, eigenvalues(a)?, eigenvalues(b)?);
    let n = la.len();
    let scale = lab.iter().chain(&la).chain(&lb).fold(1.0f64, |m, v| m.max(v.abs()));
    let outcomes = lidskii_subsets(n, inst.seed).into_iter().map(|idx| {
        let k = idx.len();
        let lhs: f64 = idx.iter().map(|&i| lab[i]).sum();
        let rhs: f64 = idx.iter().map(|&i| la[i]).sum::<f64>() + lb[..k].iter().sum::<f64>();
        TrialOutcome {
            margin: rhs - lhs,
            tolerance: tol_factor * scale * k as f64,
        }
    });
    Ok(combine(outcomes))
}

fn eval_sv_diff(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let (a, b) = (inst.matrix("A")?, inst.matrix("B")?);
    let lhs = abs_diff(&singular_values(a)?, &singular_values(b)?)?;
    majorization(&singular_values(&a.sub(b))?, &lhs, tol_factor)
}

fn eval_eig_diff(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let (a, b) = (inst.matrix("A")?, inst.matrix("B")?);
    let lhs = abs_diff(&eigenvalues(a)?, &eigenvalues(b)?)?;
    majorization(&singular_values(&a.sub(b))?, &lhs, tol_factor)
}

fn eval_pinch(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let a = inst.matrix("A")?;
    let p = subspace(inst, "X")?.projector();
    let q = Matrix::identity(p.rows()).sub(&p);
    let inner = p.matmul(a).matmul(&p);
    let outer = q.matmul(a).matmul(&q);
    let bound = singular_values(a)?;
    let plus = majorization(&bound, &singular_values(&inner.add(&outer))?, tol_factor)?;
    let minus = majorization(&bound, &singular_values(&inner.sub(&outer))?, tol_factor)?;
    Ok(tighter(plus, minus))
}

fn eval_complements(inst: &Instance) -> Result<TrialOutcome> {
    let (x, y) = (subspace(inst, "X")?, subspace(inst, "Y")?);
    let mut dev = 0.0f64;
    for (p, q) in [(&x, &y), (&y, &x)] {
        let (l, r) = complement_angle_relation(p, q)?;
        dev = dev.max(max_abs_diff(&l, &r));
    }
    let (l, r) = complement_pair_relation(&x, &y)?;
    dev = dev.max(max_abs_diff(&l, &r));
    Ok(identity(dev, IDENTITY_ALLOWED))
}

fn eval_restricted_product(inst: &Instance) -> Result<TrialOutcome> {
    let (x, y) = (subspace(inst, "X")?, subspace(inst, "Y")?);
    let mut dev = 0.0f64;
    for (p, q) in [(&x, &y), (&y, &x)] {
        let (eig, predicted) = restricted_product_spectrum(p, q)?;
        dev = dev.max(max_abs_diff(&eig, &predicted));
    }
    Ok(identity(dev, IDENTITY_ALLOWED))
}

fn eval_projector_difference(inst: &Instance) -> Result<TrialOutcome> {
    let (x, y) = (subspace(inst, "X")?, subspace(inst, "Y")?);
    Ok(identity(
        projector_difference_singvals(&x, &y)?.max_deviation,
        IDENTITY_ALLOWED,
    ))
}

fn eval_ritz(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let a = inst.matrix("A")?;
    let (x, y) = (subspace(inst, "X")?, subspace(inst, "Y")?);
    let mut outcomes = Vec::new();
    for kind in [SpreadKind::Global, SpreadKind::Local] {
        let r = ritz_perturbation_check(a, &x, &y, kind, tol_factor)?;
        let tolerance = r.majorization.tolerance_used;
        let sum_margin = r.rhs.iter().sum::<f64>() - r.lhs.iter().sum::<f64>();
        let lhs_max = r.lhs.iter().cloned().fold(0.0, f64::max);
        let gap = r.sines.last().copied().unwrap_or(0.0);
        outcomes.push(TrialOutcome {
            margin: r.majorization.worst_margin(),
            tolerance,
        });
        outcomes.push(TrialOutcome {
            margin: sum_margin,
            tolerance,
        });
        outcomes.push(TrialOutcome {
            margin: r.spread * gap - lhs_max,
            tolerance,
        });
    }
    Ok(combine(outcomes))
}

fn eval_dilation(inst: &Instance) -> Result<TrialOutcome> {
    let a = inst.matrix("A")?;
    let x = subspace(inst, "X")?;
    let d = dilate_normalized(a)?;
    let normalized = a.symmetrized().shift_diagonal(-d.shift).scale(d.scale).symmetrized();

    let original = ritz_values(&normalized, &x)?.values;
    let lifted = ritz_values(&d.projector_matrix, &embed_trial(&x))?.values;
    let preserved = identity(max_abs_diff(&original, &lifted), RITZ_PRESERVED);
    let idempotent = identity(d.idempotency_residual(), RITZ_PRESERVED);
    let corner = identity(d.upper_left().max_abs_diff(&normalized), UPPER_LEFT_ALLOWED);

    // spectrum realized as squared cosines between the range and the upper block
    let n = a.rows();
    let range = d.range()?;
    let upper = embed_trial(&Subspace::full(n));
    let cos2 = zero_pad(&principal_angles(&upper, &range)?.cos_squared(), n);
    let realized = identity(max_abs_diff(&eigenvalues(&normalized)?, &cos2), IDENTITY_ALLOWED);
    let trial_cos2 = zero_pad(&principal_angles(&embed_trial(&x), &range)?.cos_squared(), x.dim());
    let trial_realized = identity(max_abs_diff(&original, &trial_cos2), IDENTITY_ALLOWED);

    Ok(combine([preserved, idempotent, corner, realized, trial_realized]))
}

fn eval_graphs(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    let r = spectra_compare(inst.graph("G1")?, inst.graph("G2")?, tol_factor)?;
    let margin = (r.rhs - r.lhs).min(r.sharpened_rhs - r.lhs);
    Ok(TrialOutcome {
        margin,
        tolerance: r.tolerance_used,
    })
}

/// Evaluates a stored instance; the result depends on nothing but `inst` and `tol_factor`.
pub fn evaluate(inst: &Instance, tol_factor: f64) -> Result<TrialOutcome> {
    use TheoremId::*;
    match inst.theorem {
        Ineq1dAngle => eval_1d(inst, AngleQuantity::Angle, tol_factor),
        Ineq1dSin => eval_1d(inst, AngleQuantity::Sine, tol_factor),
        Ineq1dCos => eval_1d(inst, AngleQuantity::Cosine, tol_factor),
        Ineq1dSq => eval_1d(inst, AngleQuantity::CosineSquared, tol_factor),
        Thm21 => eval_eig_sum(inst, tol_factor),
        Cor22 => eval_sv_sum(inst, tol_factor),
        Thm23Lidskii => eval_lidskii(inst, tol_factor),
        Cor24 => eval_sv_diff(inst, tol_factor),
        Cor25 => eval_eig_diff(inst, tol_factor),
        Thm26Pinch => eval_pinch(inst, tol_factor),
        Thm27 => eval_complements(inst),
        Lem28 => eval_restricted_product(inst),
        Thm29 => eval_projector_difference(inst),
        Thm31Angles => eval_angles(inst, AngleQuantity::Angle, tol_factor),
        Thm32Sin => eval_angles(inst, AngleQuantity::Sine, tol_factor),
        Thm32Cos => eval_angles(inst, AngleQuantity::Cosine, tol_factor),
        Thm33Sq => eval_angles(inst, AngleQuantity::CosineSquared, tol_factor),
        Thm41Ritz => eval_ritz(inst, tol_factor),
        Cor4Dilation => eval_dilation(inst),
        Thm52Graph => eval_graphs(inst, tol_factor),
    }
}

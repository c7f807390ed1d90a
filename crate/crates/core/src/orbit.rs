//! Floating-point exploration of a Tits representation: Cayley-ball
//! enumeration, proximal limit points, cone sampling for the negativity of
//! `P ∩ P*`, and disjointness of translates of the fundamental polytope.
//!
//! Everything here is sampling evidence in double precision, not a proof.

use crate::classify::{check_h0, irreducible_type, matrix_components, ClassifyError, ComponentType};
use crate::exactla::Matrix;
use crate::scalar::{Field, Real};
use crate::tits::{GroupWord, TitsRepresentation};
use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrbitError {
    #[error("ball radius {0} exceeds the limit {MAX_LENGTH}")]
    RadiusTooLarge(usize),
    #[error("ball exceeded {0} elements")]
    Capacity(usize),
    #[error("the Cartan matrix has no component of negative type")]
    NoNegativeComponent,
    #[error("the ball is empty")]
    EmptyBall,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

pub const MAX_LENGTH: usize = 12;
pub const BALL_CAPACITY: usize = 400_000;
pub const DEDUP_TOL: f64 = 1e-9;
/// Relative gap required between the two largest eigenvalue moduli.
pub const PROXIMAL_GAP: f64 = 1e-6;
/// Points closer than this (as unit vectors up to sign) count as collinear.
pub const COLLINEAR_TOL: f64 = 1e-6;
pub const NEGATIVITY_TOL: f64 = 1e-6;
pub const TILING_TOL: f64 = 1e-9;
const EVIDENCE: &str = "numerical evidence";

/// The representation in double precision, with the roots and the linear
/// forms `α_s = B(b_s, ·)` in the working basis.
#[derive(Debug, Clone)]
pub struct FloatRep {
    pub generators: Vec<DMatrix<f64>>,
    pub gram: DMatrix<f64>,
    /// Column `s` holds `b_s`.
    pub roots: DMatrix<f64>,
    /// Row `s` holds `α_s`.
    pub forms: DMatrix<f64>,
    /// The Cartan matrix `A_st = B(b_s, b_t)`.
    pub cartan: DMatrix<f64>,
    /// Connected components of negative type, decided exactly.
    pub negative_components: Vec<Vec<usize>>,
    /// A connected zero-type subset, when (H₀) fails.
    pub zero_type_subset: Option<Vec<usize>>,
}

fn to_dmatrix<T: Real>(m: &Matrix<T>) -> DMatrix<f64> {
    let rows = m.to_f64_rows();
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| rows[i][j])
}

impl FloatRep {
    pub fn from_rep<T: Field + Real>(rep: &TitsRepresentation<T>) -> Result<Self, OrbitError> {
        let cartan_exact = rep.coords.transpose().mul(&rep.gram).mul(&rep.coords);
        let negative_components = matrix_components(&cartan_exact)
            .into_iter()
            .map(|c| c.iter().collect::<Vec<_>>())
            .filter(|idx| irreducible_type(&cartan_exact.submatrix(idx, idx)) == ComponentType::Negative)
            .collect();
        let h0 = check_h0(&cartan_exact, &rep.diagram)?;
        let gram = to_dmatrix(&rep.gram);
        let roots = to_dmatrix(&rep.coords);
        let forms = roots.transpose() * &gram;
        Ok(FloatRep {
            generators: rep.generators.iter().map(to_dmatrix).collect(),
            cartan: to_dmatrix(&cartan_exact),
            gram,
            roots,
            forms,
            negative_components,
            zero_type_subset: h0.witness.map(|w| w.iter().collect()),
        })
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn inner(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        (x.transpose() * &self.gram * y)[(0, 0)]
    }

    /// The vector `Σ c_s b_s`.
    pub fn combine(&self, c: &DVector<f64>) -> DVector<f64> {
        &self.roots * c
    }

    /// Positive vector `y` supported on the first negative-type component with
    /// `(A y)_s < 0` there and `≤ 0` elsewhere.
    pub fn perron_coefficients(&self) -> Result<DVector<f64>, OrbitError> {
        let comp = self.negative_components.first().ok_or(OrbitError::NoNegativeComponent)?;
        let k = comp.len();
        let sub = DMatrix::from_fn(k, k, |i, j| self.cartan[(comp[i], comp[j])]);
        let eig = SymmetricEigen::new(sub);
        let (imin, _) =
            eig.eigenvalues
                .iter()
                .enumerate()
                .fold((0, f64::INFINITY), |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc });
        let mut v = eig.eigenvectors.column(imin).into_owned();
        if v.sum() < 0.0 {
            v = -v;
        }
        let mut y = DVector::zeros(self.rank());
        for (i, &s) in comp.iter().enumerate() {
            y[s] = v[i].abs();
        }
        Ok(y)
    }

    /// `Σ y_s b_s` for the Perron coefficients, scaled to unit length.
    pub fn reference_point(&self) -> Result<DVector<f64>, OrbitError> {
        let x = self.combine(&self.perron_coefficients()?);
        Ok(x.normalize())
    }
}

#[derive(Debug, Clone)]
pub struct BallElement {
    pub word: GroupWord,
    pub matrix: DMatrix<f64>,
}

/// Elements of word length at most `max_length`, in BFS order.
#[derive(Debug, Clone)]
pub struct OrbitBall {
    pub max_length: usize,
    pub tol: f64,
    pub elements: Vec<BallElement>,
    /// `sizes[l]` is the number of elements of length at most `l`.
    pub sizes: Vec<usize>,
}

impl OrbitBall {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether each sphere of the ball is nonempty.
    pub fn strictly_growing(&self) -> bool {
        self.sizes.windows(2).all(|w| w[1] > w[0])
    }
}

/// Bucketed lookup of matrices up to `tol` in max-norm.
struct MatrixIndex {
    weights: Vec<f64>,
    scale: f64,
    buckets: HashMap<i64, Vec<usize>>,
}

impl MatrixIndex {
    fn new(len: usize, tol: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let weights: Vec<f64> = (0..len).map(|_| rng.gen_range(0.5..1.0)).collect();
        // two matrices within tol project to within tol·Σw, below one bucket width
        let scale = 4.0 * tol * weights.iter().sum::<f64>();
        MatrixIndex { weights, scale, buckets: HashMap::new() }
    }

    fn key(&self, m: &DMatrix<f64>) -> f64 {
        m.iter().zip(&self.weights).map(|(a, w)| a * w).sum::<f64>() / self.scale
    }

    fn find(&self, m: &DMatrix<f64>, all: &[BallElement], tol: f64) -> bool {
        let k = self.key(m).floor() as i64;
        (k - 1..=k + 1)
            .any(|b| self.buckets.get(&b).is_some_and(|v| v.iter().any(|&i| max_dist(&all[i].matrix, m) <= tol)))
    }

    fn insert(&mut self, m: &DMatrix<f64>, idx: usize) {
        let k = self.key(m).floor() as i64;
        self.buckets.entry(k).or_default().push(idx);
    }
}

fn max_dist(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.iter().zip(b.iter()).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// BFS over right multiplication by generators; an element is new when its
/// matrix is farther than `tol` from every accepted one.
///
/// Matrices are compared linearly, not up to sign, so `−Id` stays distinct
/// from `Id`.
pub fn enumerate_ball(rep: &FloatRep, max_length: usize, tol: f64) -> Result<OrbitBall, OrbitError> {
    if max_length > MAX_LENGTH {
        return Err(OrbitError::RadiusTooLarge(max_length));
    }
    let n = rep.dim();
    let id = DMatrix::<f64>::identity(n, n);
    let mut index = MatrixIndex::new(n * n, tol);
    let mut elements = vec![BallElement { word: Vec::new(), matrix: id.clone() }];
    index.insert(&id, 0);
    let mut sizes = vec![1];
    let mut frontier = 0..1;
    for _ in 0..max_length {
        let start = elements.len();
        for i in frontier.clone() {
            for (s, g) in rep.generators.iter().enumerate() {
                if elements[i].word.last() == Some(&s) {
                    continue;
                }
                let m = &elements[i].matrix * g;
                if index.find(&m, &elements, tol) {
                    continue;
                }
                if elements.len() >= BALL_CAPACITY {
                    return Err(OrbitError::Capacity(BALL_CAPACITY));
                }
                let mut word = elements[i].word.clone();
                word.push(s);
                index.insert(&m, elements.len());
                elements.push(BallElement { word, matrix: m });
            }
        }
        sizes.push(elements.len());
        frontier = start..elements.len();
    }
    Ok(OrbitBall { max_length, tol, elements, sizes })
}

#[derive(Debug, Clone)]
pub struct LimitSample {
    /// Unit vectors, signed so that `B(x, x₀) < 0` for the reference point `x₀`.
    pub points: Vec<DVector<f64>>,
    pub words: Vec<GroupWord>,
    /// Proximal elements found, before merging equal points.
    pub n_proximal: usize,
    /// Elements whose eigenvalues could not be computed.
    pub undecided: usize,
}

impl LimitSample {
    /// Smallest and largest `B(xᵢ, xⱼ)` over distinct pairs.
    pub fn pairwise_inner_range(&self, rep: &FloatRep) -> Option<(f64, f64)> {
        let mut range: Option<(f64, f64)> = None;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let b = rep.inner(&self.points[i], &self.points[j]);
                range = Some(range.map_or((b, b), |(lo, hi)| (lo.min(b), hi.max(b))));
            }
        }
        range
    }

    /// Largest `|B(x, x)|` over the sample.
    pub fn max_isotropy(&self, rep: &FloatRep) -> f64 {
        self.points.iter().fold(0.0, |m, x| m.max(rep.inner(x, x).abs()))
    }

    /// CSV dump of the points, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let dim = self.points.first().map_or(0, |p| p.len());
        let mut header = vec!["word".to_string()];
        header.extend((0..dim).map(|i| format!("x{i}")));
        w.write_record(&header).expect("in-memory write");
        for (p, word) in self.points.iter().zip(&self.words) {
            let mut rec = vec![word.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(" ")];
            rec.extend(p.iter().map(|x| format!("{x:.16e}")));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

/// Iteration cap for the real Schur decomposition.
const SCHUR_MAX_ITER: usize = 10_000;

/// Eigenvalue data of one matrix for the proximality test.
#[derive(Debug, Clone)]
pub enum Proximality {
    /// Unit eigenvector of the simple, real, strictly dominant eigenvalue.
    Proximal(DVector<f64>),
    NotProximal,
    /// The Schur iteration did not converge.
    Undecided,
}

/// The eigenvector of a simple, real, strictly dominant eigenvalue.
pub fn attracting_vector(m: &DMatrix<f64>) -> Proximality {
    let Some(schur) = nalgebra::Schur::try_new(m.clone(), f64::EPSILON, SCHUR_MAX_ITER) else {
        return Proximality::Undecided;
    };
    match dominant_eigenvector(m, &schur.complex_eigenvalues()) {
        Some(v) => Proximality::Proximal(v),
        None => Proximality::NotProximal,
    }
}

fn dominant_eigenvector(m: &DMatrix<f64>, eig: &DVector<nalgebra::Complex<f64>>) -> Option<DVector<f64>> {
    let mut moduli: Vec<(f64, usize)> = eig.iter().enumerate().map(|(i, z)| (z.norm(), i)).collect();
    moduli.sort_by(|a, b| b.0.total_cmp(&a.0));
    if moduli.len() < 2 || moduli[0].0 <= (1.0 + PROXIMAL_GAP) * moduli[1].0 {
        return None;
    }
    let top = eig[moduli[0].1];
    if top.im.abs() > PROXIMAL_GAP * top.norm() {
        return None;
    }
    let n = m.nrows();
    let shifted = m - DMatrix::identity(n, n) * top.re;
    let svd = shifted.svd(false, true);
    let v_t = svd.v_t?;
    let (imin, _) =
        svd.singular_values
            .iter()
            .enumerate()
            .fold((0, f64::INFINITY), |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc });
    let v = v_t.row(imin).transpose().normalize();
    Some(v)
}

/// Attracting fixed points of the proximal elements of the ball, with
/// collinear duplicates merged.
pub fn sample_limit_set(rep: &FloatRep, ball: &OrbitBall) -> Result<LimitSample, OrbitError> {
    if ball.is_empty() {
        return Err(OrbitError::EmptyBall);
    }
    let x0 = rep.reference_point().unwrap_or_else(|_| DVector::from_element(rep.dim(), 1.0).normalize());
    let mut points: Vec<DVector<f64>> = Vec::new();
    let mut words = Vec::new();
    let mut n_proximal = 0;
    let mut undecided = 0;
    for e in &ball.elements {
        let mut v = match attracting_vector(&e.matrix) {
            Proximality::Proximal(v) => v,
            Proximality::NotProximal => continue,
            Proximality::Undecided => {
                undecided += 1;
                continue;
            }
        };
        n_proximal += 1;
        if rep.inner(&v, &x0) > 0.0 {
            v = -v;
        }
        if points.iter().any(|p| (p - &v).amax() <= COLLINEAR_TOL || (p + &v).amax() <= COLLINEAR_TOL) {
            continue;
        }
        points.push(v);
        words.push(e.word.clone());
    }
    Ok(LimitSample { points, words, n_proximal, undecided })
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaLightReport {
    pub evidence: &'static str,
    pub seed: u64,
    pub requested: usize,
    /// Cone samples `c ≥ 0`, `A c ≤ 0` that were accepted.
    pub accepted: usize,
    /// Largest `B(x, x)` over accepted samples, `x` of unit length.
    pub max_quadratic: f64,
    /// Samples with `B(x, x) ≥ −tol`.
    pub violations: usize,
    /// Coefficients of a nonnegative sample in the cone with `B(x, x) ≥ −tol`.
    pub witness: Option<Vec<f64>>,
    pub tol: f64,
}

/// Samples `x = Σ c_s b_s` with `c ≥ 0` and `A c ≤ 0` around the Perron
/// vector and checks `B(x, x) < 0`.
///
/// When (H₀) fails, the kernel vector of the zero-type subset gives a cone
/// point with `B(x, x) = 0`, which is reported as the witness.
pub fn check_lemma_light(
    rep: &FloatRep,
    n_samples: usize,
    seed: u64,
    tol: f64,
) -> Result<LemmaLightReport, OrbitError> {
    let n = rep.rank();
    let quadratic = |c: &DVector<f64>| {
        let x = rep.combine(c);
        let norm = x.norm();
        if norm == 0.0 {
            0.0
        } else {
            (c.transpose() * &rep.cartan * c)[(0, 0)] / (norm * norm)
        }
    };
    if let Some(u) = &rep.zero_type_subset {
        let k = u.len();
        let sub = DMatrix::from_fn(k, k, |i, j| rep.cartan[(u[i], u[j])]);
        let eig = SymmetricEigen::new(sub);
        let (imin, _) = eig.eigenvalues.iter().enumerate().fold((0, f64::INFINITY), |acc, (i, &v)| {
            if v.abs() < acc.1 {
                (i, v.abs())
            } else {
                acc
            }
        });
        let mut c = DVector::zeros(n);
        for (i, &s) in u.iter().enumerate() {
            c[s] = eig.eigenvectors[(i, imin)].abs();
        }
        let q = quadratic(&c);
        return Ok(LemmaLightReport {
            evidence: EVIDENCE,
            seed,
            requested: n_samples,
            accepted: 1,
            max_quadratic: q,
            violations: usize::from(q >= -tol),
            witness: Some(c.iter().copied().collect()),
            tol,
        });
    }
    let y = rep.perron_coefficients()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = 0;
    let mut violations = 0;
    let mut max_quadratic = f64::NEG_INFINITY;
    let mut witness = None;
    let mut attempts = 0;
    while accepted < n_samples && attempts < 200 * n_samples.max(1) {
        attempts += 1;
        let spread: f64 = rng.gen_range(0.0..1.0);
        let c = DVector::from_fn(n, |s, _| {
            let base = y[s] * (1.0 + spread * rng.gen_range(-1.0..1.0));
            (base + spread * rng.gen_range(0.0..0.5)).max(0.0)
        });
        if c.iter().all(|&v| v == 0.0) || (&rep.cartan * &c).iter().any(|&v| v > 0.0) {
            continue;
        }
        accepted += 1;
        let q = quadratic(&c);
        max_quadratic = max_quadratic.max(q);
        if q >= -tol {
            violations += 1;
            witness.get_or_insert_with(|| c.iter().copied().collect());
        }
    }
    Ok(LemmaLightReport {
        evidence: EVIDENCE,
        seed,
        requested: n_samples,
        accepted,
        max_quadratic,
        violations,
        witness,
        tol,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TilingReport {
    pub evidence: &'static str,
    pub seed: u64,
    pub samples: usize,
    /// Non-identity elements each sample was mapped by.
    pub translates: usize,
    /// Pairs `(sample, γ)` with `γx` still inside the open cone.
    pub violations: usize,
    /// Largest `min_s(−α_s(γx))` over all pairs; negative when every image
    /// leaves the cone.
    pub worst_depth: f64,
    pub tol: f64,
}

/// Depth of `x` inside the open cone `{α_s < 0}` (positive inside).
fn depth(rep: &FloatRep, x: &DVector<f64>) -> f64 {
    -(&rep.forms * x).max()
}

/// Samples interior points of the cone `{α_s ≤ 0}` and checks that every
/// non-identity element of the ball moves them out of its interior.
pub fn check_tiling_disjoint(
    rep: &FloatRep,
    ball: &OrbitBall,
    n_samples: usize,
    seed: u64,
    tol: f64,
) -> Result<TilingReport, OrbitError> {
    if ball.is_empty() {
        return Err(OrbitError::EmptyBall);
    }
    let x0 = rep.reference_point()?;
    let margin = 0.5 * depth(rep, &x0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n_samples);
    let mut attempts = 0;
    while points.len() < n_samples && attempts < 1000 * n_samples.max(1) {
        attempts += 1;
        let scale: f64 = rng.gen_range(0.0..2.0);
        let x = (&x0 + DVector::from_fn(rep.dim(), |_, _| scale * rng.gen_range(-1.0..1.0))).normalize();
        if depth(rep, &x) > margin * 0.1 {
            points.push(x);
        }
    }
    let mut violations = 0;
    let mut worst = f64::NEG_INFINITY;
    let translates = ball.elements.iter().filter(|e| !e.word.is_empty()).count();
    for x in &points {
        for e in ball.elements.iter().filter(|e| !e.word.is_empty()) {
            let y = (&e.matrix * x).normalize();
            let d = depth(rep, &y);
            worst = worst.max(d);
            if d > tol {
                violations += 1;
            }
        }
    }
    Ok(TilingReport {
        evidence: EVIDENCE,
        seed,
        samples: points.len(),
        translates,
        violations,
        worst_depth: worst,
        tol,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Tolerances {
    pub dedup: f64,
    pub proximal_gap: f64,
    pub collinear: f64,
    pub negativity: f64,
    pub tiling: f64,
}

/// Combined orbit report.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub evidence: &'static str,
    pub ball_length: usize,
    pub ball_size: usize,
    pub ball_sizes: Vec<usize>,
    pub ball_growing: bool,
    pub n_proximal: usize,
    pub n_undecided: usize,
    pub n_limit_points: usize,
    pub min_pairwise_inner: Option<f64>,
    /// Must stay below `−negativity` for the limit set to be negative.
    pub max_pairwise_inner: Option<f64>,
    pub max_isotropy: f64,
    pub lemma_light: LemmaLightReport,
    pub tiling: TilingReport,
    /// Negativity, lemma-light and tiling violations together.
    pub violations: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl OrbitReport {
    pub fn passes(&self) -> bool {
        self.violations == 0 && self.ball_growing
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OrbitConfig {
    pub length: usize,
    pub lemma_samples: usize,
    pub tiling_samples: usize,
    pub tiling_length: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig { length: 6, lemma_samples: 1000, tiling_samples: 200, tiling_length: 5, seed: 0, tol: TILING_TOL }
    }
}

/// Runs every orbit check; returns the report and the limit sample.
pub fn orbit_report(rep: &FloatRep, cfg: &OrbitConfig) -> Result<(OrbitReport, LimitSample), OrbitError> {
    let ball = enumerate_ball(rep, cfg.length, DEDUP_TOL)?;
    let limit = sample_limit_set(rep, &ball)?;
    let inner = limit.pairwise_inner_range(rep);
    let lemma = check_lemma_light(rep, cfg.lemma_samples, cfg.seed, cfg.tol)?;
    let tiling_ball = if cfg.tiling_length < cfg.length {
        OrbitBall {
            max_length: cfg.tiling_length,
            tol: ball.tol,
            elements: ball.elements[..ball.sizes[cfg.tiling_length]].to_vec(),
            sizes: ball.sizes[..=cfg.tiling_length].to_vec(),
        }
    } else {
        ball.clone()
    };
    let tiling = check_tiling_disjoint(rep, &tiling_ball, cfg.tiling_samples, cfg.seed, cfg.tol)?;
    let negativity = usize::from(inner.is_some_and(|(_, hi)| hi >= -NEGATIVITY_TOL));
    let report = OrbitReport {
        evidence: EVIDENCE,
        ball_length: cfg.length,
        ball_size: ball.len(),
        ball_growing: ball.strictly_growing(),
        ball_sizes: ball.sizes.clone(),
        n_proximal: limit.n_proximal,
        n_undecided: limit.undecided,
        n_limit_points: limit.points.len(),
        min_pairwise_inner: inner.map(|r| r.0),
        max_pairwise_inner: inner.map(|r| r.1),
        max_isotropy: limit.max_isotropy(rep),
        violations: negativity + lemma.violations + tiling.violations,
        lemma_light: lemma,
        tiling,
        seed: cfg.seed,
        tolerances: Tolerances {
            dedup: DEDUP_TOL,
            proximal_gap: PROXIMAL_GAP,
            collinear: COLLINEAR_TOL,
            negativity: NEGATIVITY_TOL,
            tiling: cfg.tol,
        },
    };
    Ok((report, limit))
}

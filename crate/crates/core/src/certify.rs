//! Certification pipelines: hypothesis checks for convex cocompact Tits
//! representations, Vinberg's determinant identities, parameter sweeps, the
//! λ-quadratic of a one-`∞` diagram and the disconnectedness conditions.

use crate::catalog::{find_entry, format_values, CatalogEntry, Constraint};
use crate::classify::{check_h0, check_hminus, moussong, ClassifyError};
use crate::diagram::{CoxeterDiagram, DiagramError, DiagramTemplate, Label, LabelSpec, NodeSet};
use crate::exactla::{determinant, inertia, principal_det, LinAlgError, Matrix, Signature};
use crate::nerve::{complexes_isomorphic, join_sphere_certificate, nerve};
use crate::scalar::{AlgScalar, MPoly, QuadExt, Real, Ring, ScalarError};
use crate::tits;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertifyError {
    #[error("nodes {0} and {1} are not joined by an edge")]
    NotAnEdge(usize, usize),
    #[error("edge {0}-{1} has label ∞")]
    InfiniteLabel(usize, usize),
    #[error("removing the edge(s) does not split the diagram as required: {0}")]
    BadSplit(String),
    #[error("the block determinant det C(S₁) is zero")]
    DegenerateBlock,
    #[error("expected exactly one ∞ edge, found {0}")]
    InfinityCount(usize),
    #[error("parameter `{0}` is not declared by the family")]
    UnknownParam(String),
    #[error("parameter values {0} are outside the family's range")]
    OutOfRange(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    #[serde(rename = "GHC")]
    Ghc,
    QuasiFuchsian,
    Disconnected,
}

/// One verified hypothesis with the data needed to replay it.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub evidence: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Conclusion {
    pub theorem: String,
    pub statement: String,
}

/// Evidence-carrying verdict; `conclusion` is present only when every check passes.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub diagram: String,
    pub kind: CertificateKind,
    pub checks: Vec<Check>,
    pub conclusion: Option<Conclusion>,
}

impl Certificate {
    fn new(d: &CoxeterDiagram, kind: CertificateKind) -> Self {
        Certificate { diagram: d.serialize(), kind, checks: Vec::new(), conclusion: None }
    }

    /// Replaces the diagram text by a catalog id.
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.diagram = id.into();
        self
    }

    pub fn passes(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Names of the failing checks.
    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }

    fn push(&mut self, name: &str, pass: bool, evidence: Value) {
        self.checks.push(Check { name: name.to_string(), pass, evidence });
    }

    fn conclude(&mut self, theorem: &str, statement: String) {
        if self.passes() {
            self.conclusion = Some(Conclusion { theorem: theorem.to_string(), statement });
        }
    }
}

fn scalar_json(x: &AlgScalar) -> Value {
    json!({ "exact": x.exact_string(), "decimal": x.to_float(12) })
}

fn quad_json(x: &QuadExt) -> Value {
    json!({ "exact": x.to_string(), "decimal": x.to_float(12) })
}

fn signature_json(s: &Signature) -> Value {
    json!([s.pos, s.neg, s.null])
}

/// Relation search cap for `∞` labels in the Tits check.
const INFINITE_ORDER_CAP: u32 = 12;

/// The shared rank `d+2` pipeline with a target signature.
fn certify_pipeline(d: &CoxeterDiagram, kind: CertificateKind, target: Signature) -> Certificate {
    let mut cert = Certificate::new(d, kind);
    let n = d.rank();
    let dim = n.saturating_sub(2);

    let inf = d.infinite_edges();
    let inf_json: Vec<Value> = inf.iter().map(|&(s, t)| json!([s + 1, t + 1])).collect();
    cert.push("no_infinite_label", inf.is_empty(), json!({ "infinite_edges": inf_json }));

    match moussong(d) {
        Ok(v) => cert.push("moussong", v.hyperbolic, json!({ "hyperbolic": v.hyperbolic, "witness": v.witness })),
        Err(e) => cert.push("moussong", false, json!({ "error": e.to_string() })),
    }

    match join_sphere_certificate(d) {
        Ok(Some(j)) => {
            let pass = j.d == dim;
            cert.push("join_sphere", pass, json!({ "s1": j.s1, "s2": j.s2, "d": j.d, "sphere_dimension": j.d - 1 }));
        }
        Ok(None) => cert.push("join_sphere", false, json!({ "found": false })),
        Err(e) => cert.push("join_sphere", false, json!({ "error": e.to_string() })),
    }

    let c = d.cosine_matrix();
    match inertia(&c) {
        Ok(sig) => {
            let det = determinant(&c);
            cert.push(
                "signature",
                sig == target,
                json!({ "signature": signature_json(&sig), "target": signature_json(&target), "det": scalar_json(&det) }),
            );
        }
        Err(e) => cert.push("signature", false, json!({ "error": e.to_string() })),
    }

    match check_h0(&c, d) {
        Ok(h) => cert.push("H0", h.holds, json!({ "zero_type_subset": h.witness })),
        Err(e) => cert.push("H0", false, json!({ "error": e.to_string() })),
    }
    match check_hminus(&c, d) {
        Ok(h) => cert.push("Hminus", h.holds, json!({ "orthogonal_negative_pair": h.witness })),
        Err(e) => cert.push("Hminus", false, json!({ "error": e.to_string() })),
    }

    match tits::build(&c, d) {
        Ok(rep) => {
            let invariant = rep.verify_invariance();
            let rel = rep.verify_relations(INFINITE_ORDER_CAP);
            cert.push(
                "tits",
                invariant && rel.pass,
                json!({
                    "mode": rep.mode,
                    "dimension": rep.dim(),
                    "form_preserved": invariant,
                    "involutions": rel.involutions.iter().all(|&b| b),
                    "relations": rel.pass,
                    "pairs_checked": rel.pairs.len(),
                }),
            );
        }
        Err(e) => cert.push("tits", false, json!({ "error": e.to_string() })),
    }
    cert
}

/// Hypotheses for a strictly GHC-regular Tits representation into `O(d,2)`,
/// `d = rank − 2`.
pub fn certify_ghc(d: &CoxeterDiagram) -> Certificate {
    let dim = d.rank().saturating_sub(2);
    let mut cert = certify_pipeline(d, CertificateKind::Ghc, Signature::new(dim, 2, 0));
    cert.conclude(
        "convex cocompactness in anti-de Sitter space",
        format!(
            "the Tits representation W → O(B_C) ≅ O({dim},2) is strictly GHC-regular, \
             and W is an abstract geometric reflection group of dimension {dim}"
        ),
    );
    cert
}

/// Hypotheses for a quasi-Fuchsian Tits representation into `O(d+1,1)`.
pub fn certify_quasi_fuchsian(d: &CoxeterDiagram) -> Certificate {
    let n = d.rank();
    let dim = n.saturating_sub(2);
    let mut cert = certify_pipeline(d, CertificateKind::QuasiFuchsian, Signature::new(n.saturating_sub(1), 1, 0));
    cert.conclude(
        "convex cocompactness in hyperbolic space",
        format!(
            "the Tits representation W → O(B_C) ≅ O({},1) is quasi-Fuchsian, \
             and W is an abstract geometric reflection group of dimension {dim}",
            dim + 1
        ),
    );
    cert
}

/// Both sides of a determinant identity, computed independently.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub lhs: AlgScalar,
    pub rhs: AlgScalar,
    pub s1: NodeSet,
    pub s2: NodeSet,
    /// `det C(S₁ ∪ {t}) / det C(S₁)` for the two-edge identity.
    pub ratio: Option<AlgScalar>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lhs": scalar_json(&self.lhs),
            "rhs": scalar_json(&self.rhs),
            "s1": self.s1,
            "s2": self.s2,
            "ratio": self.ratio.as_ref().map(scalar_json),
            "holds": self.holds(),
        })
    }
}

/// Nodes reachable from `start` when the listed edges are ignored.
fn side_of(d: &CoxeterDiagram, start: usize, removed: &[(usize, usize)]) -> NodeSet {
    let cut = |a: usize, b: usize| removed.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
    let mut seen = NodeSet::single(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in d.neighbors(v).iter() {
            if !seen.contains(w) && !cut(v, w) {
                seen = seen.with(w);
                stack.push(w);
            }
        }
    }
    seen
}

fn crossing_edges(d: &CoxeterDiagram, a: NodeSet, b: NodeSet) -> Vec<(usize, usize)> {
    d.edges()
        .filter(|&(i, j, _)| (a.contains(i) && b.contains(j)) || (a.contains(j) && b.contains(i)))
        .map(|(i, j, _)| (i, j))
        .collect()
}

fn finite_edge(d: &CoxeterDiagram, s: usize, t: usize) -> Result<u32, CertifyError> {
    if s >= d.rank() || t >= d.rank() || s == t {
        return Err(CertifyError::NotAnEdge(s, t));
    }
    match d.label(s, t) {
        Label::Infinity => Err(CertifyError::InfiniteLabel(s, t)),
        Label::Finite(m) if m >= 3 => Ok(m),
        Label::Finite(_) => Err(CertifyError::NotAnEdge(s, t)),
    }
}

/// `det C(S) = det C(S₁)·det C(S₂) − 4cos²(π/m)·det C(S₁∖s)·det C(S₂∖t)` when
/// the edge `st` is the only edge between `S₁ ∋ s` and `S₂ ∋ t`.
pub fn vinberg_single_edge_identity(d: &CoxeterDiagram, s: usize, t: usize) -> Result<IdentityCheck, CertifyError> {
    let m = finite_edge(d, s, t)?;
    let s1 = side_of(d, s, &[(s, t)]);
    if s1.contains(t) {
        return Err(CertifyError::BadSplit(format!("edge {}-{} lies on a cycle", s + 1, t + 1)));
    }
    let s2 = d.nodes().difference(s1);
    let c = d.cosine_matrix();
    let lhs = determinant(&c);
    let two_cos = AlgScalar::two_cos_pi_over(m)?;
    let rhs = principal_det(&c, s1)
        .mul(&principal_det(&c, s2))
        .sub(&two_cos.square().mul(&principal_det(&c, s1.without(s))).mul(&principal_det(&c, s2.without(t))));
    Ok(IdentityCheck { lhs, rhs, s1, s2, ratio: None })
}

/// `det C(S) = det C(S₁)·det C(S₂) + det C(S₁)·det C(S₂∖t)·(ρ − 2)` with
/// `ρ = det C(S₁∪t)/det C(S₁)`, when `rt` and `st` are the only edges between
/// `S₁ ∋ r,s` and `S₂ ∋ t`.
pub fn vinberg_two_edge_identity(
    d: &CoxeterDiagram,
    r: usize,
    s: usize,
    t: usize,
) -> Result<IdentityCheck, CertifyError> {
    finite_edge(d, r, t)?;
    finite_edge(d, s, t)?;
    if r == s {
        return Err(CertifyError::BadSplit("r and s coincide".into()));
    }
    let s2 = side_of(d, t, &[(r, t), (s, t)]);
    if s2.contains(r) || s2.contains(s) {
        return Err(CertifyError::BadSplit("t stays connected to r or s".into()));
    }
    let s1 = d.nodes().difference(s2);
    let mut crossing = crossing_edges(d, s1, s2);
    crossing.sort_unstable();
    let mut want = vec![(r.min(t), r.max(t)), (s.min(t), s.max(t))];
    want.sort_unstable();
    if crossing != want {
        return Err(CertifyError::BadSplit(format!("{} edges join S₁ and S₂", crossing.len())));
    }
    let c = d.cosine_matrix();
    let lhs = determinant(&c);
    let d1 = principal_det(&c, s1);
    let ratio = gluing_ratio_with(&c, s1, t)?;
    let rhs = d1
        .mul(&principal_det(&c, s2))
        .add(&d1.mul(&principal_det(&c, s2.without(t))).mul(&ratio.sub(&AlgScalar::from_i64(2))));
    Ok(IdentityCheck { lhs, rhs, s1, s2, ratio: Some(ratio) })
}

fn gluing_ratio_with(c: &Matrix<AlgScalar>, s1: NodeSet, t: usize) -> Result<AlgScalar, CertifyError> {
    let d1 = principal_det(c, s1);
    if d1.is_zero() {
        return Err(CertifyError::DegenerateBlock);
    }
    Ok(principal_det(c, s1.with(t)).div(&d1)?)
}

/// `det C(S₁ ∪ {t}) / det C(S₁)` for the Cosine matrix of `d`.
pub fn gluing_ratio(d: &CoxeterDiagram, s1: NodeSet, t: usize) -> Result<AlgScalar, CertifyError> {
    gluing_ratio_with(&d.cosine_matrix(), s1, t)
}

/// A parametric diagram with its admissible parameter region.
#[derive(Debug, Clone)]
pub struct FamilyTemplate {
    pub id: String,
    pub template: DiagramTemplate,
    pub constraint: Constraint,
}

impl FamilyTemplate {
    pub fn new(id: impl Into<String>, template: DiagramTemplate) -> Self {
        FamilyTemplate { id: id.into(), template, constraint: Constraint::Any }
    }

    pub fn from_entry(e: &CatalogEntry) -> Self {
        FamilyTemplate { id: e.id(), template: e.template.clone(), constraint: e.constraint }
    }

    /// Family from a catalog `table:item` pair.
    pub fn from_catalog(table: &str, item: &str) -> Result<Self, crate::catalog::CatalogError> {
        Ok(Self::from_entry(find_entry(table, item)?))
    }

    /// Same family with a different declared range for one parameter.
    pub fn with_range(mut self, name: &str, min: u32, max: Option<u32>) -> Result<Self, CertifyError> {
        let p = self
            .template
            .params
            .iter_mut()
            .find(|p| p.name == name)
            .ok_or_else(|| CertifyError::UnknownParam(name.into()))?;
        p.min = min;
        p.max = max;
        self.constraint = Constraint::Any;
        Ok(self)
    }

    /// Sorted parameter names; variable `i` of the symbolic determinant is `names[i]`.
    pub fn param_names(&self) -> Vec<String> {
        let mut n = self.template.param_names();
        n.sort();
        n
    }

    fn check_values(&self, v: &BTreeMap<String, u32>) -> Result<(), CertifyError> {
        let names = self.param_names();
        for k in v.keys() {
            if !names.contains(k) {
                return Err(CertifyError::UnknownParam(k.clone()));
            }
        }
        let tuple: Vec<u32> = names.iter().map(|n| v.get(n).copied().unwrap_or(0)).collect();
        let in_range = self
            .template
            .params
            .iter()
            .all(|p| v.get(&p.name).is_some_and(|&x| x >= p.min && p.max.is_none_or(|m| x <= m)));
        if !in_range || !self.constraint.admits(&tuple) {
            return Err(CertifyError::OutOfRange(format_values(v)));
        }
        Ok(())
    }

    /// Cosine matrix with `−u_i` in place of each parameterized label, where
    /// `u_i` stands for `2cos(π/p_i)`; `∞` entries become `−2(1+λ)`.
    pub fn symbolic_matrix(&self, lambda: i64) -> Matrix<MPoly> {
        let names = self.param_names();
        let n = self.template.rank;
        let mut m = Matrix::from_fn(n, n, |i, j| if i == j { MPoly::from_i64(2) } else { MPoly::zero() });
        for (&(i, j), spec) in &self.template.edges {
            let e = match spec {
                LabelSpec::Fixed(Label::Infinity) => MPoly::from_i64(-2 * (1 + lambda)),
                LabelSpec::Fixed(l) => MPoly::constant(l.cosine_entry()),
                LabelSpec::Param(name) => {
                    let k = names.iter().position(|x| x == name).expect("declared parameter");
                    MPoly::var(k).negate()
                }
            };
            m.set(i, j, e.clone());
            m.set(j, i, e);
        }
        m
    }

    /// Values `2cos(π/p_i)` in variable order.
    pub fn point(&self, v: &BTreeMap<String, u32>) -> Result<Vec<AlgScalar>, CertifyError> {
        self.param_names()
            .iter()
            .map(|n| {
                let p = *v.get(n).ok_or_else(|| CertifyError::UnknownParam(n.clone()))?;
                Ok(AlgScalar::two_cos_pi_over(p)?)
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub params: BTreeMap<String, u32>,
    pub det: AlgScalar,
    pub signature: Signature,
    pub hyperbolic: bool,
    /// `GHC`, `QuasiFuchsian` or `Degenerate` when the signature and
    /// hyperbolicity match that regime, `None` otherwise.
    pub regime: &'static str,
    /// Whether the symbolic route agreed with the direct determinant.
    pub routes_agree: bool,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub family: String,
    pub param_names: Vec<String>,
    pub rows: Vec<SweepRow>,
    /// Strictly increasing along every unit step of one parameter inside the range.
    pub increasing: bool,
    /// Determinant with every parameterized label replaced by the limit entry `−2`.
    pub limit: AlgScalar,
    pub det_polynomial: MPoly,
}

fn regime(sig: Signature, n: usize, hyperbolic: bool) -> &'static str {
    if !hyperbolic {
        return "None";
    }
    if sig == Signature::new(n.saturating_sub(2), 2, 0) {
        "GHC"
    } else if sig == Signature::new(n.saturating_sub(1), 1, 0) {
        "QuasiFuchsian"
    } else if sig.null > 0 {
        "Degenerate"
    } else {
        "None"
    }
}

/// Evaluates the family at each point, in the given order.
///
/// Determinants come from one symbolic determinant evaluated at each point,
/// and each value is compared with the determinant of the instantiated matrix.
pub fn sweep_family(f: &FamilyTemplate, points: &[BTreeMap<String, u32>]) -> Result<SweepResult, CertifyError> {
    for v in points {
        f.check_values(v)?;
    }
    let poly = determinant(&f.symbolic_matrix(0));
    let names = f.param_names();
    let mut rows = Vec::with_capacity(points.len());
    for v in points {
        let d = f.template.instantiate_unchecked(v)?;
        let c = d.cosine_matrix();
        let det = poly.eval(&f.point(v)?);
        let direct = determinant(&c);
        let signature = inertia(&c)?;
        let hyperbolic = moussong(&d)?.hyperbolic;
        rows.push(SweepRow {
            params: v.clone(),
            routes_agree: det == direct,
            regime: regime(signature, d.rank(), hyperbolic),
            det,
            signature,
            hyperbolic,
        });
    }
    let mut increasing = true;
    for (i, row) in rows.iter().enumerate() {
        for name in &names {
            let mut next = row.params.clone();
            *next.get_mut(name).expect("declared") += 1;
            if let Some(other) = rows.iter().skip(i + 1).find(|r| r.params == next) {
                if other.det.sub(&row.det).sign() <= 0 {
                    increasing = false;
                }
            }
        }
    }
    let limit = poly.eval(&vec![AlgScalar::from_i64(2); names.len()]);
    Ok(SweepResult { family: f.id.clone(), param_names: names, rows, increasing, limit, det_polynomial: poly })
}

/// Points `lo..=hi` of a one-parameter family.
pub fn range_points(name: &str, lo: u32, hi: u32) -> Vec<BTreeMap<String, u32>> {
    (lo..=hi).map(|v| BTreeMap::from([(name.to_string(), v)])).collect()
}

/// `f(λ) = det C^λ = a₂λ² + a₁λ + a₀` for a diagram with one `∞` edge.
#[derive(Debug, Clone)]
pub struct LambdaQuadratic {
    pub a0: AlgScalar,
    pub a1: AlgScalar,
    pub a2: AlgScalar,
    pub delta: AlgScalar,
    /// `λ₁ < λ₂` when `a₂ ≠ 0` and `δ > 0`.
    pub roots: Option<(QuadExt, QuadExt)>,
}

impl LambdaQuadratic {
    /// Coefficients from values at `λ = 0, 1, 2`.
    pub fn from_values(f0: AlgScalar, f1: AlgScalar, f2: AlgScalar) -> Result<Self, CertifyError> {
        let two = AlgScalar::from_i64(2);
        let a0 = f0;
        let a2 = f2.sub(&f1.mul(&two)).add(&a0).div(&two)?;
        let a1 = f1.sub(&a0).sub(&a2);
        let delta = a1.square().sub(&AlgScalar::from_i64(4).mul(&a0).mul(&a2));
        let roots = if !a2.is_zero() && delta.sign() > 0 {
            let inv = a2.mul(&two).inv()?;
            let centre = a1.neg().mul(&inv);
            let plus = QuadExt::new(centre.clone(), inv.clone(), delta.clone())?;
            let minus = QuadExt::new(centre, inv.neg(), delta.clone())?;
            if plus.sub(&minus).sign() > 0 {
                Some((minus, plus))
            } else {
                Some((plus, minus))
            }
        } else {
            None
        };
        Ok(LambdaQuadratic { a0, a1, a2, delta, roots })
    }

    pub fn eval(&self, x: &QuadExt) -> QuadExt {
        let q = |a: &AlgScalar| QuadExt::from_base(a.clone());
        q(&self.a2).mul(x).add(&q(&self.a1)).mul(x).add(&q(&self.a0))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a0": scalar_json(&self.a0),
            "a1": scalar_json(&self.a1),
            "a2": scalar_json(&self.a2),
            "delta": scalar_json(&self.delta),
            "roots": self.roots.as_ref().map(|(l1, l2)| json!([quad_json(l1), quad_json(l2)])),
        })
    }
}

fn single_infinite_edge(d: &CoxeterDiagram) -> Result<(usize, usize), CertifyError> {
    let inf = d.infinite_edges();
    if inf.len() != 1 {
        return Err(CertifyError::InfinityCount(inf.len()));
    }
    Ok(inf[0])
}

pub fn lambda_polynomial(d: &CoxeterDiagram) -> Result<LambdaQuadratic, CertifyError> {
    single_infinite_edge(d)?;
    let f = |l: i64| -> Result<AlgScalar, CertifyError> {
        Ok(determinant(&d.lambda_cosine_matrix(&AlgScalar::from_i64(l))?))
    };
    LambdaQuadratic::from_values(f(0)?, f(1)?, f(2)?)
}

/// `S₁ = S ∖ {b}` and `S₂ = S ∖ {a}` for the `∞` edge `a < b`.
pub fn infinity_split(d: &CoxeterDiagram) -> Result<(NodeSet, NodeSet), CertifyError> {
    let (a, b) = single_infinite_edge(d)?;
    let all = d.nodes();
    Ok((all.without(b), all.without(a)))
}

/// `a₁² − 4a₀a₂ = 16·det C(S₁)·det C(S₂)`; both sides exact.
pub fn discriminant_identity(d: &CoxeterDiagram) -> Result<IdentityCheck, CertifyError> {
    let q = lambda_polynomial(d)?;
    let (s1, s2) = infinity_split(d)?;
    let c = d.cosine_matrix();
    let rhs = AlgScalar::from_i64(16).mul(&principal_det(&c, s1)).mul(&principal_det(&c, s2));
    Ok(IdentityCheck { lhs: q.delta, rhs, s1, s2, ratio: None })
}

/// `C^λ` over the quadratic extension containing `λ`.
pub fn lambda_matrix_quad(d: &CoxeterDiagram, lambda: &QuadExt) -> Matrix<QuadExt> {
    let inf = QuadExt::from_i64(-2).mul(&QuadExt::one().add(lambda));
    d.matrix_with(
        |l| if l.is_infinite() { inf.clone() } else { QuadExt::from_base(l.cosine_entry()) },
        QuadExt::from_i64(2),
    )
}

/// First node whose deletion leaves a nonzero principal minor, trying the
/// given nodes first.
fn nonzero_corank_one_minor<T: Real>(a: &Matrix<T>, first: &[usize]) -> Option<usize> {
    let n = a.dim();
    let all = NodeSet::full(n);
    first
        .iter()
        .copied()
        .chain((0..n).filter(|i| !first.contains(i)))
        .find(|&i| !principal_det(a, all.without(i)).is_zero())
}

/// The three sign conditions and the resulting two representations for a
/// diagram with one `∞` edge.
///
/// `reference` is the compact polytope group whose nerve must match.
pub fn disconnected_check(d: &CoxeterDiagram, reference: Option<&CoxeterDiagram>) -> Result<Certificate, CertifyError> {
    let (a, b) = single_infinite_edge(d)?;
    let mut cert = Certificate::new(d, CertificateKind::Disconnected);
    let q = lambda_polynomial(d)?;
    let (s1, s2) = infinity_split(d)?;
    let c = d.cosine_matrix();
    let det1 = principal_det(&c, s1);
    let det2 = principal_det(&c, s2);
    let sign_ok = det1.sign() * det2.sign() > 0 && q.a1.sign() * q.a2.sign() < 0 && q.a0.sign() * q.a2.sign() > 0;
    cert.push(
        "sign_conditions",
        sign_ok,
        json!({
            "s1": s1,
            "s2": s2,
            "det_s1": scalar_json(&det1),
            "det_s2": scalar_json(&det2),
            "quadratic": q.to_json(),
        }),
    );
    if !sign_ok {
        return Ok(cert);
    }

    let Some((l1, l2)) = q.roots.clone() else {
        cert.push("roots", false, json!({ "reason": "no two real roots" }));
        return Ok(cert);
    };
    let mats = [lambda_matrix_quad(d, &l1), lambda_matrix_quad(d, &l2)];
    let poly_zero = q.eval(&l1).is_zero() && q.eval(&l2).is_zero();
    let det_zero = mats.iter().all(|m| determinant(m).is_zero());
    let positive = l1.sign() > 0 && l2.sign() > 0 && l1 != l2;
    cert.push(
        "roots",
        poly_zero && det_zero && positive,
        json!({
            "lambda1": quad_json(&l1),
            "lambda2": quad_json(&l2),
            "f_vanishes": poly_zero,
            "det_vanishes": det_zero,
            "distinct_positive": positive,
        }),
    );

    let sig1 = inertia(&c.submatrix(&s1.iter().collect::<Vec<_>>(), &s1.iter().collect::<Vec<_>>()))?;
    let sig2 = inertia(&c.submatrix(&s2.iter().collect::<Vec<_>>(), &s2.iter().collect::<Vec<_>>()))?;
    cert.push(
        "block_signature",
        sig1 == sig2 && sig1.null == 0,
        json!({ "s1": signature_json(&sig1), "s2": signature_json(&sig2) }),
    );

    let target = Signature::new(sig1.pos, sig1.neg, 1);
    let mut sigs = Vec::new();
    let mut minors = Vec::new();
    for m in &mats {
        sigs.push(inertia(m)?);
        minors.push(nonzero_corank_one_minor(m, &[a, b]));
    }
    cert.push(
        "lambda_signature",
        sigs.iter().all(|s| *s == target),
        json!({ "signatures": sigs.iter().map(signature_json).collect::<Vec<_>>(), "target": signature_json(&target) }),
    );
    cert.push(
        "nullity_one",
        minors.iter().all(Option::is_some),
        json!({ "deleted_node": minors.iter().map(|m| m.map(|i| i + 1)).collect::<Vec<_>>() }),
    );

    let v = moussong(d)?;
    cert.push("moussong", v.hyperbolic, json!({ "hyperbolic": v.hyperbolic, "witness": v.witness }));

    if let Some(r) = reference {
        let iso = complexes_isomorphic(&nerve(d)?, &nerve(r)?);
        cert.push(
            "nerve_reference",
            iso.is_some(),
            json!({ "reference": r.serialize(), "vertex_map": iso.map(|m| m.iter().map(|i| i + 1).collect::<Vec<_>>()) }),
        );
    }

    let regime = if sig1.neg == 2 { format!("O({},2)", sig1.pos) } else { format!("O({},1)", sig1.pos) };
    cert.conclude(
        "two isolated convex cocompact representations",
        format!(
            "the Tits representations for C^λ₁ and C^λ₂ into P{regime} are distinct points of the character \
             variety; their isolation follows from the single ∞ label and is cited, not recomputed"
        ),
    );
    Ok(cert)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    #[serde(rename = "R_D")]
    Dark,
    #[serde(rename = "R_L")]
    Light,
    Neither,
}

impl Region {
    pub fn label(self) -> &'static str {
        match self {
            Region::Dark => "R_D",
            Region::Light => "R_L",
            Region::Neither => "Neither",
        }
    }

    /// Membership from `(det S₁, det S₂, a₀, a₁, a₂)` signs.
    pub fn from_signs(s: [i32; 5]) -> Region {
        let [d1, d2, a0, a1, a2] = s;
        let holds = d1 * d2 > 0 && a1 * a2 < 0 && a0 * a2 > 0;
        match (holds, d1) {
            (true, 1) => Region::Dark,
            (true, -1) => Region::Light,
            _ => Region::Neither,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegionVerdict {
    pub p: u32,
    pub q: u32,
    pub membership: Region,
    /// Signs of `det C(S₁)`, `det C(S₂)`, `a₀`, `a₁`, `a₂`.
    pub signs: [i32; 5],
    /// Some sign vanishes, so the point lies on a boundary curve.
    pub boundary: bool,
}

/// The one-`∞` family whose `(p,q)`-plane carries the two regions.
pub fn region_family() -> FamilyTemplate {
    let e = find_entry("not_poincare_dim4", "T1").expect("built-in family");
    FamilyTemplate::new(e.id(), e.template.clone())
}

/// Region membership for `7 ≤ p ≤ q` with `p ≤ pmax`, `q ≤ qmax`; the family
/// is symmetric in `p` and `q`, so only `p ≤ q` is scanned.
pub fn region_scan(pmax: u32, qmax: u32) -> Result<BTreeMap<(u32, u32), RegionVerdict>, CertifyError> {
    let fam = region_family();
    let (s1, s2) = {
        let d = fam.template.instantiate_unchecked(&BTreeMap::from([("p".to_string(), 7), ("q".to_string(), 7)]))?;
        infinity_split(&d)?
    };
    let m0 = fam.symbolic_matrix(0);
    let f0 = determinant(&m0);
    let f1 = determinant(&fam.symbolic_matrix(1));
    let f2 = determinant(&fam.symbolic_matrix(2));
    let d1 = principal_det(&m0, s1);
    let d2 = principal_det(&m0, s2);
    let cells: Vec<(u32, u32)> = (7..=pmax).flat_map(|p| (p..=qmax).map(move |q| (p, q))).collect();
    let verdicts = cells
        .iter()
        .map(|&(p, q)| {
            let v = BTreeMap::from([("p".to_string(), p), ("q".to_string(), q)]);
            let pt = fam.point(&v)?;
            let lq = LambdaQuadratic::from_values(f0.eval(&pt), f1.eval(&pt), f2.eval(&pt))?;
            let signs = [d1.eval(&pt).sign(), d2.eval(&pt).sign(), lq.a0.sign(), lq.a1.sign(), lq.a2.sign()];
            Ok((
                (p, q),
                RegionVerdict { p, q, membership: Region::from_signs(signs), signs, boundary: signs.contains(&0) },
            ))
        })
        .collect::<Result<Vec<_>, CertifyError>>()?;
    let out: BTreeMap<_, _> = verdicts.into_iter().collect();
    Ok(out)
}

/// CSV of sweep rows: parameters, exact and decimal determinant, signature, regime.
pub fn sweep_csv(r: &SweepResult, digits: u32) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = r.param_names.clone();
    header.extend(["det_exact", "det_float", "sig_p", "sig_q", "sig_r", "verdict"].map(String::from));
    w.write_record(&header).expect("in-memory write");
    for row in &r.rows {
        let mut rec: Vec<String> = r.param_names.iter().map(|n| row.params[n].to_string()).collect();
        rec.push(row.det.exact_string());
        rec.push(row.det.to_float(digits));
        rec.extend([row.signature.pos, row.signature.neg, row.signature.null].map(|x| x.to_string()));
        rec.push(row.regime.to_string());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// CSV of region verdicts in `(p,q)` order.
pub fn region_csv(scan: &BTreeMap<(u32, u32), RegionVerdict>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["p", "q", "sign_det_s1", "sign_det_s2", "sign_a0", "sign_a1", "sign_a2", "boundary", "verdict"])
        .expect("in-memory write");
    for v in scan.values() {
        let mut rec = vec![v.p.to_string(), v.q.to_string()];
        rec.extend(v.signs.iter().map(|s| s.to_string()));
        rec.push(v.boundary.to_string());
        rec.push(v.membership.label().to_string());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

//! Tits–Vinberg representations of Coxeter groups from symmetric Cartan matrices.
//!
//! In the basis `(b_s)` the generator `σ_s` acts by `σ_s(b_t) = b_t − A_st b_s`
//! and preserves the form with Gram matrix `A`. When `A` is singular the
//! kernel is fixed pointwise; the representation is taken on the quotient,
//! with basis the first maximal independent set of columns `B`, and every
//! `b_t` is written as `Σ_{s∈B} K_st b_s` with `K = A_B⁻¹ A_{B,·}`.

use crate::classify::{irreducible_type, matrix_components, ComponentType};
use crate::diagram::{CoxeterDiagram, Label};
use crate::exactla::{determinant, rank_general, Matrix};
use crate::scalar::{AlgScalar, Field, QuadExt, Real};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TitsError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix and diagram sizes differ")]
    SizeMismatch,
    #[error("entry ({0},{1}) is incompatible with the diagram label")]
    Incompatible(usize, usize),
    #[error("a component of the Cartan matrix has zero type")]
    ZeroTypeComponent,
    #[error("node index {0} out of range")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisMode {
    Full,
    Reduced,
}

#[derive(Debug, Clone)]
pub struct TitsRepresentation<T> {
    pub mode: BasisMode,
    /// Nodes whose vectors `b_s` form the working basis.
    pub basis: Vec<usize>,
    /// Gram matrix of the invariant form in the working basis.
    pub gram: Matrix<T>,
    pub generators: Vec<Matrix<T>>,
    /// Coordinates of every `b_t` (column `t`) in the working basis.
    pub coords: Matrix<T>,
    pub diagram: CoxeterDiagram,
}

/// Group element as a word in the generators (0-based).
pub type GroupWord = Vec<usize>;

fn check_compatible<T: Real + FromBase>(a: &Matrix<T>, d: &CoxeterDiagram) -> Result<(), TitsError> {
    let n = d.rank();
    if a.dim() != n || !a.is_square() {
        return Err(TitsError::SizeMismatch);
    }
    if !a.is_symmetric() {
        return Err(TitsError::NotSymmetric);
    }
    let four = T::from_i64(4);
    for s in 0..n {
        if *a.get(s, s) != T::from_i64(2) {
            return Err(TitsError::Incompatible(s, s));
        }
        for t in s + 1..n {
            let e = a.get(s, t);
            if e.sign() > 0 {
                return Err(TitsError::Incompatible(s, t));
            }
            let sq = e.times(e);
            let ok = match d.label(s, t) {
                Label::Finite(m) => {
                    let c = AlgScalar::two_cos_pi_over(m).expect("valid label");
                    sq == T::from_base(&c.square())
                }
                Label::Infinity => sq.minus(&four).sign() >= 0,
            };
            if !ok {
                return Err(TitsError::Incompatible(s, t));
            }
        }
    }
    Ok(())
}

/// Embedding of base-field constants into the entry ring.
pub trait FromBase {
    fn from_base(c: &AlgScalar) -> Self;
}

impl FromBase for AlgScalar {
    fn from_base(c: &AlgScalar) -> Self {
        c.clone()
    }
}

impl FromBase for QuadExt {
    fn from_base(c: &AlgScalar) -> Self {
        QuadExt::from_base(c.clone())
    }
}

/// Builds the representation; full mode when `A` is nonsingular.
pub fn build<T: Field + Real + FromBase>(
    a: &Matrix<T>,
    d: &CoxeterDiagram,
) -> Result<TitsRepresentation<T>, TitsError> {
    check_compatible(a, d)?;
    for comp in matrix_components(a) {
        let idx: Vec<usize> = comp.iter().collect();
        if irreducible_type(&a.submatrix(&idx, &idx)) == ComponentType::Zero {
            return Err(TitsError::ZeroTypeComponent);
        }
    }
    let n = a.dim();
    let basis = first_independent_columns(a);
    if basis.len() == n {
        let generators = (0..n)
            .map(|s| {
                Matrix::from_fn(n, n, |i, t| {
                    let delta = if i == t { T::one() } else { T::zero() };
                    if i == s {
                        delta.minus(a.get(s, t))
                    } else {
                        delta
                    }
                })
            })
            .collect();
        return Ok(TitsRepresentation {
            mode: BasisMode::Full,
            basis,
            gram: a.clone(),
            generators,
            coords: Matrix::identity(n),
            diagram: d.clone(),
        });
    }
    let r = basis.len();
    let all: Vec<usize> = (0..n).collect();
    let ab = a.submatrix(&basis, &basis);
    let abx = a.submatrix(&basis, &all);
    let det = determinant(&ab);
    // K = adj(A_B)·A_{B,·} / det(A_B), column by column via Cramer's rule
    let mut coords = Matrix::zeros(r, n);
    for t in 0..n {
        for i in 0..r {
            let m = Matrix::from_fn(
                r,
                r,
                |row, col| if col == i { abx.get(row, t).clone() } else { ab.get(row, col).clone() },
            );
            let v = determinant(&m).try_div(&det).expect("nonsingular block");
            coords.set(i, t, v);
        }
    }
    let generators = (0..n)
        .map(|s| {
            Matrix::from_fn(r, r, |i, u| {
                let delta = if i == u { T::one() } else { T::zero() };
                delta.minus(&a.get(s, basis[u]).times(coords.get(i, s)))
            })
        })
        .collect();
    Ok(TitsRepresentation { mode: BasisMode::Reduced, basis, gram: ab, generators, coords, diagram: d.clone() })
}

/// Lexicographically first maximal set of linearly independent columns.
pub fn first_independent_columns<T: Field + Real>(a: &Matrix<T>) -> Vec<usize> {
    let n = a.dim();
    let mut chosen: Vec<usize> = Vec::new();
    let rows: Vec<usize> = (0..a.rows()).collect();
    for j in 0..n {
        let mut cand = chosen.clone();
        cand.push(j);
        if rank_general(&a.submatrix(&rows, &cand)) == cand.len() {
            chosen = cand;
        }
    }
    chosen
}

impl<T: Field + Real> TitsRepresentation<T> {
    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn generator(&self, s: usize) -> &Matrix<T> {
        &self.generators[s]
    }

    /// Product `ρ(w₁)·ρ(w₂)·…`.
    pub fn word_to_matrix(&self, w: &[usize]) -> Result<Matrix<T>, TitsError> {
        let mut m = Matrix::identity(self.dim());
        for &s in w {
            let g = self.generators.get(s).ok_or(TitsError::OutOfRange(s))?;
            m = m.mul(g);
        }
        Ok(m)
    }

    /// `ρ(s)ᵀ·G·ρ(s) = G` for every generator.
    pub fn verify_invariance(&self) -> bool {
        self.generators.iter().all(|g| preserves(g, &self.gram))
    }

    /// Coxeter relations: involutions, orders of products for finite labels,
    /// and no identity power up to `cap` for ∞ labels.
    pub fn verify_relations(&self, cap: u32) -> RelationReport {
        let n = self.generators.len();
        let id = Matrix::identity(self.dim());
        let involutions: Vec<bool> = self.generators.iter().map(|g| g.mul(g) == id).collect();
        let mut pairs = Vec::new();
        for s in 0..n {
            for t in s + 1..n {
                let label = self.diagram.label(s, t);
                let prod = self.generators[s].mul(&self.generators[t]);
                let limit = match label {
                    Label::Finite(m) => m,
                    Label::Infinity => cap,
                };
                let mut pw = prod.clone();
                let mut order = None;
                for k in 1..=limit {
                    if pw == id {
                        order = Some(k);
                        break;
                    }
                    pw = pw.mul(&prod);
                }
                let pass = match label {
                    Label::Finite(m) => order == Some(m),
                    Label::Infinity => order.is_none(),
                };
                pairs.push(PairRelation { s, t, label, order_found: order, pass });
            }
        }
        let pass = involutions.iter().all(|&b| b) && pairs.iter().all(|p| p.pass);
        RelationReport { cap, involutions, pairs, pass }
    }

    /// `K·c = 0` for each vector `c` of the kernel of `A`.
    pub fn kernel_consistent(&self, kernel: &[Vec<T>]) -> bool {
        kernel.iter().all(|c| self.coords.mul_vec(c).iter().all(|x| x.is_zero()))
    }

    pub fn generators_exact(&self) -> Vec<Vec<Vec<String>>> {
        self.generators.iter().map(|g| g.exact_grid()).collect()
    }

    pub fn generators_decimal(&self, digits: u32) -> Vec<Vec<Vec<String>>> {
        self.generators.iter().map(|g| g.decimal_grid(digits)).collect()
    }

    pub fn generators_f64(&self) -> Vec<Vec<Vec<f64>>> {
        self.generators.iter().map(|g| g.to_f64_rows()).collect()
    }
}

/// `Mᵀ·G·M = G`.
pub fn preserves<T: Field + Real>(m: &Matrix<T>, gram: &Matrix<T>) -> bool {
    m.transpose().mul(gram).mul(m) == *gram
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRelation {
    pub s: usize,
    pub t: usize,
    pub label: Label,
    /// Smallest `k` with `(ρ(s)ρ(t))^k = Id` within the searched range.
    pub order_found: Option<u32>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub cap: u32,
    pub involutions: Vec<bool>,
    pub pairs: Vec<PairRelation>,
    pub pass: bool,
}


#[cfg(test)]
mod proptests {
    use super::*;
    use crate::diagram::CoxeterDiagram;
    use crate::scalar::AlgScalar;
    use proptest::prelude::*;

    fn diagram() -> impl Strategy<Value = CoxeterDiagram> {
        (2usize..6).prop_flat_map(|n| {
            proptest::collection::vec(
                prop_oneof![4 => Just(2u32), 3 => Just(3u32), 2 => 4u32..8, 1 => Just(0u32)],
                n * (n - 1) / 2,
            )
            .prop_map(move |ls| {
                let mut d = CoxeterDiagram::new(n).unwrap();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let l = if ls[k] == 0 { Label::Infinity } else { Label::Finite(ls[k]) };
                        d.set_label(i, j, l).unwrap();
                        k += 1;
                    }
                }
                d
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn reflections_and_invariance(d in diagram(), words in proptest::collection::vec(proptest::collection::vec(0usize..6, 0..=8), 8)) {
            let a = d.lambda_cosine_matrix(&AlgScalar::one()).unwrap();
            let Ok(rep) = build(&a, &d) else { return Ok(()) };
            prop_assert!(rep.verify_invariance());
            let id = Matrix::<AlgScalar>::identity(rep.dim());
            for g in &rep.generators {
                prop_assert_eq!(determinant(g), AlgScalar::from_i64(-1));
                prop_assert_eq!(rank_general(&g.sub(&id)), 1);
            }
            for w in words {
                let w: Vec<usize> = w.into_iter().map(|s| s % d.rank()).collect();
                prop_assert!(preserves(&rep.word_to_matrix(&w).unwrap(), &rep.gram));
            }
            let (_, kernel) = crate::exactla::rank_and_kernel(&a).unwrap();
            prop_assert!(rep.kernel_consistent(&kernel));
        }
    }
}

//! Exact linear algebra over any [`Ring`]: determinants, inertia, rank and kernels.
//!
//! The primary routes are division-free, so they run unchanged over cyclotomic
//! reals, quadratic extensions and symbolic polynomial rings:
//!
//! * determinants expand row by row over sets of used columns, skipping zero
//!   entries, which is cheap for the sparse matrices of Coxeter diagrams;
//! * inertia follows a chain of nested nonsingular principal minors, the same
//!   pivot sequence as congruence diagonalization, with `[[0,e],[e,0]]` blocks
//!   contributing `(1,1,0)` when every single extension is singular;
//! * kernels come from Cramer's rule on a maximal nonsingular principal block.
//!
//! A fraction-free Bareiss elimination over fields is kept as an independent
//! second route for cross-checking.

use crate::diagram::NodeSet;
use crate::scalar::{Field, Real, Ring};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("empty index set")]
    EmptySubset,
    #[error("index {0} out of range for dimension {1}")]
    OutOfRange(usize, usize),
    #[error("dimension mismatch")]
    DimensionMismatch,
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Symmetric matrices share the dense representation; symmetry is checked
/// where an algorithm relies on it.
pub type SymMatrix<T> = Matrix<T>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// Product skipping zero entries and multiplications by one.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let a_one = a.is_one();
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = if a_one { b.clone() } else { a.times(b) };
                    let cur = out.get(i, j).plus(&prod);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.plus(&a.times(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Submatrix on the given (sorted) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let n = self.rows + o.rows;
        let m = self.cols + o.cols;
        Self::from_fn(n, m, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                o.get(i - self.rows, j - self.cols).clone()
            } else {
                T::zero()
            }
        })
    }

    /// Simultaneous row and column permutation: entry `(i,j)` becomes `(perm[i], perm[j])`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.rows;
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Self::from_fn(n, n, |i, j| self.get(inv[i], inv[j]).clone())
    }
}

impl<T: Real> Matrix<T> {
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).approx()).collect()).collect()
    }

    pub fn exact_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).exact()).collect()).collect()
    }

    pub fn decimal_grid(&self, digits: u32) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).decimal(digits)).collect()).collect()
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Inertia triple: counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl Signature {
    pub fn new(pos: usize, neg: usize, null: usize) -> Self {
        Signature { pos, neg, null }
    }

    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.null
    }

    pub fn add(&self, o: &Signature) -> Signature {
        Signature::new(self.pos + o.pos, self.neg + o.neg, self.null + o.null)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.pos, self.neg, self.null)
    }
}

fn check_square<T: Ring>(a: &Matrix<T>) -> Result<(), LinAlgError> {
    if a.is_square() {
        Ok(())
    } else {
        Err(LinAlgError::NotSquare(a.rows, a.cols))
    }
}

/// Determinant by row expansion over subsets of used columns.
///
/// The recursion `D_{r+1}(C ∪ {c}) += ±a_{rc} D_r(C)` touches only nonzero
/// entries, so sparse matrices cost far less than the `n·2^(n-1)` worst case.
pub fn determinant<T: Ring>(a: &Matrix<T>) -> T {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows;
    assert!(n <= 63, "dimension too large for the subset expansion");
    if n == 0 {
        return T::one();
    }
    let mut layer: HashMap<u64, T> = HashMap::new();
    layer.insert(0, T::one());
    for r in 0..n {
        let mut next: HashMap<u64, T> = HashMap::with_capacity(layer.len() * 2);
        for (mask, val) in &layer {
            for c in 0..n {
                if mask >> c & 1 == 1 {
                    continue;
                }
                let e = a.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let mut term = if e.is_one() { val.clone() } else { val.times(e) };
                if above % 2 == 1 {
                    term = term.negate();
                }
                let key = mask | (1u64 << c);
                match next.get_mut(&key) {
                    Some(v) => *v = v.plus(&term),
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.is_empty() {
            return T::zero();
        }
        layer = next;
    }
    layer.remove(&((1u64 << n) - 1)).unwrap_or_else(T::zero)
}

/// Determinant by Bareiss fraction-free elimination with exact field division.
pub fn determinant_bareiss<T: Field>(a: &Matrix<T>) -> T {
    assert!(a.is_square());
    let n = a.rows;
    if n == 0 {
        return T::one();
    }
    let mut m: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j).clone()).collect()).collect();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign_flip = !sign_flip;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = num.try_div(&prev).expect("Bareiss pivots are nonzero");
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.negate()
    } else {
        d
    }
}

/// Principal submatrix on the node set `t`.
pub fn principal_minor<T: Ring>(a: &Matrix<T>, t: NodeSet) -> Result<Matrix<T>, LinAlgError> {
    check_square(a)?;
    if t.is_empty() {
        return Err(LinAlgError::EmptySubset);
    }
    if let Some(bad) = t.iter().find(|&i| i >= a.rows) {
        return Err(LinAlgError::OutOfRange(bad, a.rows));
    }
    let idx: Vec<usize> = t.iter().collect();
    Ok(a.submatrix(&idx, &idx))
}

/// Determinant of the principal submatrix on `t` (1 for the empty set).
pub fn principal_det<T: Ring>(a: &Matrix<T>, t: NodeSet) -> T {
    if t.is_empty() {
        return T::one();
    }
    let idx: Vec<usize> = t.iter().collect();
    determinant(&a.submatrix(&idx, &idx))
}

/// One step of the nested-minor chain used for inertia and rank.
#[derive(Debug, Clone)]
pub struct PivotChain<T> {
    /// Maximal index set with nonsingular principal submatrix reached by the chain.
    pub support: NodeSet,
    /// Determinant of the principal submatrix on `support`.
    pub det: T,
    pub signature: Signature,
}

/// Walks the nested principal-minor chain of a symmetric matrix.
pub fn pivot_chain<T: Real>(a: &Matrix<T>) -> Result<PivotChain<T>, LinAlgError> {
    check_square(a)?;
    if !a.is_symmetric() {
        return Err(LinAlgError::NotSymmetric);
    }
    let n = a.rows;
    let mut t = NodeSet::empty();
    let mut d = T::one();
    let mut d_sign = 1;
    let (mut pos, mut neg) = (0, 0);
    'outer: loop {
        for i in 0..n {
            if t.contains(i) {
                continue;
            }
            let cand = principal_det(a, t.with(i));
            let s = cand.sign();
            if s != 0 {
                if s * d_sign > 0 {
                    pos += 1;
                } else {
                    neg += 1;
                }
                t = t.with(i);
                d = cand;
                d_sign = s;
                continue 'outer;
            }
        }
        for i in 0..n {
            if t.contains(i) {
                continue;
            }
            for j in i + 1..n {
                if t.contains(j) {
                    continue;
                }
                let cand = principal_det(a, t.with(i).with(j));
                let s = cand.sign();
                if s != 0 {
                    pos += 1;
                    neg += 1;
                    t = t.with(i).with(j);
                    d = cand;
                    d_sign = s;
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(PivotChain { support: t, det: d, signature: Signature::new(pos, neg, n - t.len()) })
}

/// Exact inertia `(p, q, r)` of a symmetric matrix.
pub fn inertia<T: Real>(a: &Matrix<T>) -> Result<Signature, LinAlgError> {
    Ok(pivot_chain(a)?.signature)
}

/// Rank and an exact kernel basis of a symmetric matrix.
///
/// Each kernel vector `v_j` (one per index `j` outside the nonsingular block
/// `T`) has `v_j[j] = det(A_T)` and `v_j[T] = −adj(A_T)·A_{T,j}`, computed by
/// Cramer's rule without division.
pub fn rank_and_kernel<T: Real>(a: &Matrix<T>) -> Result<(usize, Vec<Vec<T>>), LinAlgError> {
    let chain = pivot_chain(a)?;
    let n = a.rows;
    let support: Vec<usize> = chain.support.iter().collect();
    let mut kernel = Vec::new();
    for j in 0..n {
        if chain.support.contains(j) {
            continue;
        }
        let mut v = vec![T::zero(); n];
        v[j] = chain.det.clone();
        let b: Vec<T> = support.iter().map(|&r| a.get(r, j).clone()).collect();
        for (col, &idx) in support.iter().enumerate() {
            // Cramer: replace column `col` of A_T by b
            let m = Matrix::from_fn(support.len(), support.len(), |r, c| {
                if c == col {
                    b[r].clone()
                } else {
                    a.get(support[r], support[c]).clone()
                }
            });
            v[idx] = determinant(&m).negate();
        }
        kernel.push(v);
    }
    Ok((support.len(), kernel))
}

/// Rank of an arbitrary matrix by fraction-free (cross-multiplying) elimination.
pub fn rank_general<T: Ring>(a: &Matrix<T>) -> usize {
    let mut m: Vec<Vec<T>> = (0..a.rows).map(|i| (0..a.cols).map(|j| a.get(i, j).clone()).collect()).collect();
    let mut rank = 0;
    for col in 0..a.cols {
        let Some(p) = (rank..a.rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for (c, x) in row.iter_mut().enumerate().skip(col) {
                *x = x.times(&pivot_row[col]).minus(&f.times(&pivot_row[c]));
            }
        }
        rank += 1;
        if rank == a.rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{AlgScalar, QuadExt};

    fn m(rows: &[&[i64]]) -> Matrix<AlgScalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| AlgScalar::from_i64(v)).collect()).collect())
    }

    fn c(k: u32) -> AlgScalar {
        AlgScalar::two_cos_pi_over(k).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&m(&[&[2, -1], &[-1, 2]])), AlgScalar::from_i64(3));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), AlgScalar::from_i64(-1));
        let a3 = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(determinant(&a3), AlgScalar::from_i64(4));
        assert_eq!(determinant_bareiss(&a3), AlgScalar::from_i64(4));
    }

    #[test]
    fn pentagonal_dihedral_determinant() {
        let phi = c(5);
        let a =
            Matrix::from_rows(vec![vec![AlgScalar::from_i64(2), phi.neg()], vec![phi.neg(), AlgScalar::from_i64(2)]]);
        // (5 - √5)/2 with √5 = 2φ - 1
        let sqrt5 = phi.add(&phi).sub(&AlgScalar::one());
        let want = AlgScalar::from_i64(5).sub(&sqrt5).div(&AlgScalar::from_i64(2)).unwrap();
        assert_eq!(determinant(&a), want);
    }

    #[test]
    fn inertia_examples() {
        assert_eq!(inertia(&m(&[&[2, 0], &[0, 2]])).unwrap(), Signature::new(2, 0, 0));
        assert_eq!(inertia(&m(&[&[2, -2], &[-2, 2]])).unwrap(), Signature::new(1, 0, 1));
        assert_eq!(inertia(&m(&[&[0, 3], &[3, 0]])).unwrap(), Signature::new(1, 1, 0));
        assert_eq!(inertia(&m(&[&[0, 0], &[0, 0]])).unwrap(), Signature::new(0, 0, 2));
        let hidden = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -5]]);
        assert_eq!(inertia(&hidden).unwrap(), Signature::new(1, 2, 0));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a1 = m(&[&[2, -2], &[-2, 2]]);
        let (r, k) = rank_and_kernel(&a1).unwrap();
        assert_eq!(r, 1);
        assert_eq!(k.len(), 1);
        assert!(a1.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
        assert_eq!(k[0][0], k[0][1]);
        let a2 = m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        let (r, k) = rank_and_kernel(&a2).unwrap();
        assert_eq!(r, 2);
        assert_eq!(k[0][0], k[0][1]);
        assert_eq!(k[0][1], k[0][2]);
    }

    #[test]
    fn general_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank_general(&a), 2);
        assert_eq!(rank_general(&Matrix::<AlgScalar>::identity(4)), 4);
    }

    #[test]
    fn quadratic_extension_entries() {
        let r = QuadExt::sqrt_of(AlgScalar::from_i64(2)).unwrap();
        let two = QuadExt::from_i64(2);
        let a = Matrix::from_rows(vec![vec![two.clone(), r.neg()], vec![r.neg(), two]]);
        assert_eq!(determinant(&a), QuadExt::from_i64(2));
        assert_eq!(inertia(&a).unwrap(), Signature::new(2, 0, 0));
    }

    #[test]
    fn principal_minor_of_full_set_is_identity_map() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(principal_minor(&a, NodeSet::full(2)).unwrap(), a);
        assert_eq!(principal_minor(&a, NodeSet::single(0)).unwrap(), m(&[&[2]]));
        assert!(principal_minor(&a, NodeSet::empty()).is_err());
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::scalar::AlgScalar;
    use proptest::prelude::*;

    fn entry() -> impl Strategy<Value = AlgScalar> {
        prop_oneof![
            3 => Just(AlgScalar::zero()),
            2 => (-3i64..4).prop_map(AlgScalar::from_i64),
            2 => (2u32..9, prop::bool::ANY).prop_map(|(k, s)| {
                let v = AlgScalar::two_cos_pi_over(k).unwrap();
                if s { v } else { v.neg() }
            }),
        ]
    }

    fn sym(max: usize) -> impl Strategy<Value = Matrix<AlgScalar>> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(entry(), n * (n + 1) / 2).prop_map(move |v| {
                let mut mat = Matrix::zeros(n, n);
                let mut k = 0;
                for i in 0..n {
                    for j in i..n {
                        mat.set(i, j, v[k].clone());
                        mat.set(j, i, v[k].clone());
                        k += 1;
                    }
                }
                mat
            })
        })
    }

    fn jacobi_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
        let n = a.len();
        let mut m = a.to_vec();
        for _ in 0..100 {
            let mut off = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        off += m[i][j] * m[i][j];
                    }
                }
            }
            if off < 1e-30 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if m[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let cth = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * cth;
                    for k in 0..n {
                        let mkp = m[k][p];
                        let mkq = m[k][q];
                        m[k][p] = cth * mkp - s * mkq;
                        m[k][q] = s * mkp + cth * mkq;
                    }
                    for k in 0..n {
                        let mpk = m[p][k];
                        let mqk = m[q][k];
                        m[p][k] = cth * mpk - s * mqk;
                        m[q][k] = s * mpk + cth * mqk;
                    }
                }
            }
        }
        (0..n).map(|i| m[i][i]).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn determinant_routes_agree(a in sym(5)) {
            prop_assert_eq!(determinant(&a), determinant_bareiss(&a));
        }

        #[test]
        fn det_sign_matches_inertia(a in sym(6)) {
            let s = inertia(&a).unwrap();
            let d = determinant(&a).sign();
            if s.null > 0 {
                prop_assert_eq!(d, 0);
            } else {
                prop_assert_eq!(d, if s.neg % 2 == 0 { 1 } else { -1 });
            }
        }

        #[test]
        fn inertia_is_permutation_invariant(a in sym(6), seed in any::<u64>()) {
            let n = a.dim();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut x = seed;
            for i in (1..n).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (x >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(inertia(&a).unwrap(), inertia(&a.permuted(&perm)).unwrap());
        }

        #[test]
        fn block_additivity(a in sym(4), b in sym(4)) {
            let s = a.direct_sum(&b);
            prop_assert_eq!(inertia(&s).unwrap(), inertia(&a).unwrap().add(&inertia(&b).unwrap()));
            prop_assert_eq!(determinant(&s), determinant(&a).mul(&determinant(&b)));
        }

        #[test]
        fn kernel_is_exact(a in sym(6)) {
            let (r, k) = rank_and_kernel(&a).unwrap();
            prop_assert_eq!(r + k.len(), a.dim());
            prop_assert_eq!(r, rank_general(&a));
            for v in &k {
                prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn inertia_matches_float_eigenvalues(a in sym(7)) {
            let s = inertia(&a).unwrap();
            let ev = jacobi_eigenvalues(&a.to_f64_rows());
            let mut sorted: Vec<f64> = ev.clone();
            sorted.sort_by(|x, y| x.abs().partial_cmp(&y.abs()).unwrap());
            // the exact nullity decides which eigenvalues are zero
            let nonzero = &sorted[s.null..];
            let pos = nonzero.iter().filter(|&&x| x > 0.0).count();
            let neg = nonzero.iter().filter(|&&x| x < 0.0).count();
            prop_assert_eq!((pos, neg), (s.pos, s.neg));
            if s.null > 0 {
                prop_assert!(sorted[s.null - 1].abs() < 1e-8);
            }
        }
    }
}

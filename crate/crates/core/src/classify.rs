//! Spherical, affine and Lannér recognition, Cartan types, the subset
//! conditions (H₀) and (H₋), and Moussong's hyperbolicity criterion.
//!
//! Every subset query runs on a table of connected subsets. The type of a
//! connected subset `T` with respect to a symmetric Cartan matrix `A` is
//! decided bottom up: a single node is positive; if some `A_{T∖s}` is not
//! positive definite then `A_T` is negative; otherwise the sign of
//! `det A_T` separates positive, zero and negative type.

use crate::catalog::appendix;
use crate::diagram::{CoxeterDiagram, NodeSet};
use crate::exactla::{determinant, inertia, Matrix, Signature};
use crate::scalar::{AlgScalar, Real};
use serde::Serialize;
use thiserror::Error;

/// Largest rank accepted by the exhaustive subset scans.
pub const SCAN_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("diagram is not connected")]
    Disconnected,
    #[error("empty node set")]
    EmptySet,
    #[error("rank {0} exceeds the subset-scan limit of {SCAN_LIMIT}")]
    Capacity(usize),
    #[error("not a Cartan matrix: entry ({0},{1}) is positive")]
    NotCartan(usize, usize),
    #[error("matrix and diagram sizes differ")]
    SizeMismatch,
    #[error("node index out of range")]
    OutOfRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IrreducibleKind {
    Spherical,
    Affine,
    Lanner,
    OtherLarge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleClass {
    pub kind: IrreducibleKind,
    pub catalog_name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ComponentType {
    Positive,
    Zero,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanType {
    pub components: Vec<(NodeSet, ComponentType)>,
}

impl CartanType {
    pub fn all(&self, t: ComponentType) -> bool {
        self.components.iter().all(|c| c.1 == t)
    }

    pub fn any(&self, t: ComponentType) -> bool {
        self.components.iter().any(|c| c.1 == t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubsetClass {
    pub spherical: bool,
    pub affine: bool,
    pub lanner: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H0Result {
    pub holds: bool,
    /// A connected subset of zero type.
    pub witness: Option<NodeSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HminusResult {
    pub holds: bool,
    /// Two orthogonal connected subsets of negative type.
    pub witness: Option<(NodeSet, NodeSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum HyperbolicityWitness {
    /// Irreducible affine subset of rank at least 3.
    AffineSubset { nodes: NodeSet },
    /// Two orthogonal irreducible non-spherical subsets.
    OrthogonalPair { first: NodeSet, second: NodeSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperbolicityVerdict {
    pub hyperbolic: bool,
    pub witness: Option<HyperbolicityWitness>,
}

const UNSET: u8 = 0;
const POS: u8 = 1;
const ZERO: u8 = 2;
const NEG: u8 = 3;

/// Types of every connected subset of a symmetric Cartan matrix, and
/// positive-definiteness of every subset.
pub struct SubsetTypes {
    n: usize,
    nbr: Vec<u64>,
    /// Type code for connected masks, `UNSET` otherwise.
    kind: Vec<u8>,
    /// Whether `A_T` is positive definite.
    pd: Vec<bool>,
}

impl SubsetTypes {
    pub fn new<T: Real>(a: &Matrix<T>) -> Result<Self, ClassifyError> {
        let n = a.dim();
        if n > SCAN_LIMIT {
            return Err(ClassifyError::Capacity(n));
        }
        check_cartan(a)?;
        let nbr: Vec<u64> = (0..n)
            .map(|i| (0..n).filter(|&j| j != i && !a.get(i, j).is_zero()).fold(0u64, |m, j| m | 1 << j))
            .collect();
        let size = 1usize << n;
        let mut kind = vec![UNSET; size];
        let mut pd = vec![false; size];
        pd[0] = true;
        for mask in 1..size as u64 {
            let comp = component_of(&nbr, mask, mask.trailing_zeros() as usize);
            if comp != mask {
                pd[mask as usize] = pd[comp as usize] && pd[(mask & !comp) as usize];
                continue;
            }
            let t = if mask.count_ones() == 1 {
                POS
            } else if NodeSet(mask).iter().any(|s| !pd[(mask & !(1u64 << s)) as usize]) {
                NEG
            } else {
                let idx: Vec<usize> = NodeSet(mask).iter().collect();
                match determinant(&a.submatrix(&idx, &idx)).sign() {
                    1 => POS,
                    0 => ZERO,
                    _ => NEG,
                }
            };
            kind[mask as usize] = t;
            pd[mask as usize] = t == POS;
        }
        Ok(SubsetTypes { n, nbr, kind, pd })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_positive_definite(&self, t: NodeSet) -> bool {
        self.pd[t.0 as usize]
    }

    /// Type of a connected subset, `None` if `t` is not connected.
    pub fn connected_type(&self, t: NodeSet) -> Option<ComponentType> {
        match self.kind[t.0 as usize] {
            POS => Some(ComponentType::Positive),
            ZERO => Some(ComponentType::Zero),
            NEG => Some(ComponentType::Negative),
            _ => None,
        }
    }

    pub fn components(&self, t: NodeSet) -> Vec<NodeSet> {
        let mut rest = t.0;
        let mut out = Vec::new();
        while rest != 0 {
            let c = component_of(&self.nbr, rest, rest.trailing_zeros() as usize);
            out.push(NodeSet(c));
            rest &= !c;
        }
        out
    }

    pub fn cartan_type(&self, t: NodeSet) -> CartanType {
        CartanType {
            components: self
                .components(t)
                .into_iter()
                .map(|c| (c, self.connected_type(c).expect("components are connected")))
                .collect(),
        }
    }

    /// Connected subsets of the given type, ordered by size then mask.
    pub fn connected_of_type(&self, t: ComponentType) -> Vec<NodeSet> {
        let code = match t {
            ComponentType::Positive => POS,
            ComponentType::Zero => ZERO,
            ComponentType::Negative => NEG,
        };
        let mut v: Vec<NodeSet> =
            (1..self.kind.len()).filter(|&m| self.kind[m] == code).map(|m| NodeSet(m as u64)).collect();
        v.sort_by_key(|s| (s.len(), s.0));
        v
    }

    /// Nodes outside `t` not adjacent to any node of `t`.
    pub fn orthogonal_complement(&self, t: NodeSet) -> NodeSet {
        let adj = t.iter().fold(t.0, |m, i| m | self.nbr[i]);
        NodeSet(!adj & NodeSet::full(self.n).0)
    }

    /// First orthogonal pair `(T, U)` of connected subsets from `members`
    /// (sorted by size then mask), or `None`.
    fn orthogonal_pair(&self, members: &[NodeSet]) -> Option<(NodeSet, NodeSet)> {
        let size = 1usize << self.n;
        let mut contains = vec![false; size];
        for m in members {
            contains[m.0 as usize] = true;
        }
        // contains[m] becomes "some member lies inside m"
        for bit in 0..self.n {
            for m in 0..size {
                if m >> bit & 1 == 1 && contains[m & !(1 << bit)] {
                    contains[m] = true;
                }
            }
        }
        for &t in members {
            let o = self.orthogonal_complement(t);
            if contains[o.0 as usize] {
                let u = *members.iter().find(|u| u.is_subset(o)).expect("a member lies inside");
                return Some((t, u));
            }
        }
        None
    }
}

fn component_of(nbr: &[u64], within: u64, start: usize) -> u64 {
    let mut comp = 1u64 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = nbr[v] & within & !comp;
        comp |= new;
        frontier |= new;
    }
    comp
}

fn check_cartan<T: Real>(a: &Matrix<T>) -> Result<(), ClassifyError> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            if i != j && a.get(i, j).sign() > 0 {
                return Err(ClassifyError::NotCartan(i, j));
            }
        }
    }
    Ok(())
}

fn check_scan(n: usize) -> Result<(), ClassifyError> {
    if n > SCAN_LIMIT {
        Err(ClassifyError::Capacity(n))
    } else {
        Ok(())
    }
}

/// Type of an irreducible symmetric Cartan matrix, decided from its inertia.
pub fn irreducible_type<T: Real>(a: &Matrix<T>) -> ComponentType {
    let s = inertia(a).expect("symmetric");
    let n = a.dim();
    if s == Signature::new(n, 0, 0) {
        ComponentType::Positive
    } else if s == Signature::new(n - 1, 0, 1) {
        ComponentType::Zero
    } else {
        ComponentType::Negative
    }
}

/// Cartan type per component of the given partition.
pub fn cartan_type<T: Real>(a: &Matrix<T>, partition: &[NodeSet]) -> Result<CartanType, ClassifyError> {
    check_cartan(a)?;
    let mut components = Vec::new();
    for &c in partition {
        if c.is_empty() {
            return Err(ClassifyError::EmptySet);
        }
        if c.iter().any(|i| i >= a.dim()) {
            return Err(ClassifyError::OutOfRange);
        }
        let idx: Vec<usize> = c.iter().collect();
        components.push((c, irreducible_type(&a.submatrix(&idx, &idx))));
    }
    Ok(CartanType { components })
}

/// Components of a matrix from its nonzero off-diagonal pattern.
pub fn matrix_components<T: Real>(a: &Matrix<T>) -> Vec<NodeSet> {
    let n = a.dim();
    let nbr: Vec<u64> =
        (0..n).map(|i| (0..n).filter(|&j| j != i && !a.get(i, j).is_zero()).fold(0u64, |m, j| m | 1 << j)).collect();
    let mut rest = NodeSet::full(n).0;
    let mut out = Vec::new();
    while rest != 0 {
        let c = component_of(&nbr, rest, rest.trailing_zeros() as usize);
        out.push(NodeSet(c));
        rest &= !c;
    }
    out
}

/// Kind of a connected diagram from the determinant and its maximal proper minors.
pub fn irreducible_kind(d: &CoxeterDiagram) -> Result<IrreducibleKind, ClassifyError> {
    if !d.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    let c = d.cosine_matrix();
    let n = d.rank();
    let proper_spherical = (0..n).all(|s| {
        let rest = d.nodes().without(s);
        rest.is_empty() || irreducible_or_split_positive(&c, d, rest)
    });
    if !proper_spherical {
        return Ok(IrreducibleKind::OtherLarge);
    }
    Ok(match determinant(&c).sign() {
        1 => IrreducibleKind::Spherical,
        0 => IrreducibleKind::Affine,
        _ => IrreducibleKind::Lanner,
    })
}

fn irreducible_or_split_positive(c: &Matrix<AlgScalar>, d: &CoxeterDiagram, t: NodeSet) -> bool {
    d.components_of(t).into_iter().all(|comp| {
        let idx: Vec<usize> = comp.iter().collect();
        irreducible_type(&c.submatrix(&idx, &idx)) == ComponentType::Positive
    })
}

/// Spherical, affine, Lannér or other, with the catalog name when recognized.
pub fn classify_irreducible(d: &CoxeterDiagram) -> Result<IrreducibleClass, ClassifyError> {
    let kind = irreducible_kind(d)?;
    let catalog_name = match kind {
        IrreducibleKind::Spherical => appendix::spherical_name(d),
        IrreducibleKind::Affine => appendix::affine_name(d),
        IrreducibleKind::Lanner => appendix::lanner_name(d),
        IrreducibleKind::OtherLarge => None,
    };
    Ok(IrreducibleClass { kind, catalog_name })
}

/// Componentwise spherical/affine status of a special subgroup; Lannér only
/// for connected subsets.
pub fn subset_class(d: &CoxeterDiagram, t: NodeSet) -> Result<SubsetClass, ClassifyError> {
    if t.is_empty() {
        return Err(ClassifyError::EmptySet);
    }
    let r = d.restrict(t).map_err(|_| ClassifyError::OutOfRange)?;
    let comps = r.components();
    let mut spherical = true;
    let mut affine = true;
    for c in &comps {
        let k = irreducible_kind(&r.restrict(*c).expect("valid component"))?;
        spherical &= k == IrreducibleKind::Spherical;
        affine &= k == IrreducibleKind::Affine;
    }
    let lanner = comps.len() == 1 && irreducible_kind(&r)? == IrreducibleKind::Lanner;
    Ok(SubsetClass { spherical, affine, lanner })
}

fn check_compatible<T: Real>(a: &Matrix<T>, d: &CoxeterDiagram) -> Result<(), ClassifyError> {
    if a.dim() != d.rank() {
        return Err(ClassifyError::SizeMismatch);
    }
    check_scan(d.rank())
}

/// (H₀): no principal submatrix has a component of zero type.
pub fn check_h0<T: Real>(a: &Matrix<T>, d: &CoxeterDiagram) -> Result<H0Result, ClassifyError> {
    check_compatible(a, d)?;
    Ok(h0_from(&SubsetTypes::new(a)?))
}

pub fn h0_from(table: &SubsetTypes) -> H0Result {
    let witness = table.connected_of_type(ComponentType::Zero).into_iter().next();
    H0Result { holds: witness.is_none(), witness }
}

/// (H₋): no two orthogonal subsets both of negative type.
pub fn check_hminus<T: Real>(a: &Matrix<T>, d: &CoxeterDiagram) -> Result<HminusResult, ClassifyError> {
    check_compatible(a, d)?;
    Ok(hminus_from(&SubsetTypes::new(a)?))
}

pub fn hminus_from(table: &SubsetTypes) -> HminusResult {
    let neg = table.connected_of_type(ComponentType::Negative);
    let witness = table.orthogonal_pair(&neg);
    HminusResult { holds: witness.is_none(), witness }
}

/// Moussong's criterion: no irreducible affine subset of rank at least 3 and
/// no two orthogonal non-spherical subsets.
pub fn moussong(d: &CoxeterDiagram) -> Result<HyperbolicityVerdict, ClassifyError> {
    check_scan(d.rank())?;
    let table = SubsetTypes::new(&d.cosine_matrix())?;
    if let Some(t) = table.connected_of_type(ComponentType::Zero).into_iter().find(|t| t.len() >= 3) {
        return Ok(HyperbolicityVerdict {
            hyperbolic: false,
            witness: Some(HyperbolicityWitness::AffineSubset { nodes: t }),
        });
    }
    let mut non_spherical = table.connected_of_type(ComponentType::Zero);
    non_spherical.extend(table.connected_of_type(ComponentType::Negative));
    non_spherical.sort_by_key(|s| (s.len(), s.0));
    if let Some((first, second)) = table.orthogonal_pair(&non_spherical) {
        return Ok(HyperbolicityVerdict {
            hyperbolic: false,
            witness: Some(HyperbolicityWitness::OrthogonalPair { first, second }),
        });
    }
    Ok(HyperbolicityVerdict { hyperbolic: true, witness: None })
}


#[cfg(test)]
mod proptests {
    use super::*;
    use crate::diagram::{CoxeterDiagram, Label};
    use proptest::prelude::*;

    fn diagram(max_rank: usize, max_inf: usize) -> impl Strategy<Value = CoxeterDiagram> {
        (1..=max_rank).prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(
                prop_oneof![6 => Just(2u32), 4 => Just(3u32), 2 => 4u32..7, 1 => Just(0u32)],
                pairs,
            )
            .prop_map(move |labels| {
                let mut d = CoxeterDiagram::new(n).unwrap();
                let mut k = 0;
                let mut infs = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let l = match labels[k] {
                            0 if infs < max_inf => {
                                infs += 1;
                                Label::Infinity
                            }
                            0 => Label::Finite(2),
                            m => Label::Finite(m),
                        };
                        d.set_label(i, j, l).unwrap();
                        k += 1;
                    }
                }
                d
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn positive_type_iff_spherical(d in diagram(6, 2)) {
            let c = d.cosine_matrix();
            let ty = cartan_type(&c, &d.components()).unwrap();
            for (comp, t) in &ty.components {
                let k = irreducible_kind(&d.restrict(*comp).unwrap()).unwrap();
                prop_assert_eq!(*t == ComponentType::Positive, k == IrreducibleKind::Spherical);
                if k == IrreducibleKind::Affine {
                    prop_assert_eq!(*t, ComponentType::Zero);
                }
            }
        }

        #[test]
        fn table_agrees_with_inertia(d in diagram(6, 2)) {
            let c = d.cosine_matrix();
            let table = SubsetTypes::new(&c).unwrap();
            for m in 1..(1u64 << d.rank()) {
                let t = NodeSet(m);
                if let Some(ty) = table.connected_type(t) {
                    let idx: Vec<usize> = t.iter().collect();
                    prop_assert_eq!(ty, irreducible_type(&c.submatrix(&idx, &idx)));
                }
            }
        }

        #[test]
        fn lambda_equivalence_with_moussong(d in diagram(6, 2), which in 0usize..3) {
            let lam = [AlgScalar::from_ratio(1, 2).unwrap(), AlgScalar::one(), AlgScalar::from_i64(3)][which].clone();
            let a = d.lambda_cosine_matrix(&lam).unwrap();
            let h0 = check_h0(&a, &d).unwrap();
            let hm = check_hminus(&a, &d).unwrap();
            prop_assert_eq!(h0.holds && hm.holds, moussong(&d).unwrap().hyperbolic);
        }

        #[test]
        fn witnesses_recheck(d in diagram(6, 2)) {
            let a = d.lambda_cosine_matrix(&AlgScalar::one()).unwrap();
            if let Some(t) = check_h0(&a, &d).unwrap().witness {
                let idx: Vec<usize> = t.iter().collect();
                prop_assert_eq!(irreducible_type(&a.submatrix(&idx, &idx)), ComponentType::Zero);
            }
            if let Some((t, u)) = check_hminus(&a, &d).unwrap().witness {
                prop_assert!(d.orthogonal(t, u).unwrap() && t.is_disjoint(u));
                for s in [t, u] {
                    let idx: Vec<usize> = s.iter().collect();
                    prop_assert_eq!(irreducible_type(&a.submatrix(&idx, &idx)), ComponentType::Negative);
                }
            }
            match moussong(&d).unwrap().witness {
                Some(HyperbolicityWitness::AffineSubset { nodes }) => {
                    let r = d.restrict(nodes).unwrap();
                    prop_assert!(nodes.len() >= 3);
                    prop_assert_eq!(irreducible_kind(&r).unwrap(), IrreducibleKind::Affine);
                }
                Some(HyperbolicityWitness::OrthogonalPair { first, second }) => {
                    prop_assert!(d.orthogonal(first, second).unwrap());
                    prop_assert!(!subset_class(&d, first).unwrap().spherical);
                    prop_assert!(!subset_class(&d, second).unwrap().spherical);
                }
                None => {}
            }
        }
    }
}

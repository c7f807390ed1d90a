//! Nerves of Coxeter groups and the Lannér-join sphere criterion.
//!
//! The nerve has one simplex for every nonempty spherical subset. When the
//! node set splits as `S₁ ⊔ S₂` with both parts Lannér and a subset is
//! spherical exactly when it contains neither part, the nerve is the join of
//! two simplex boundaries and hence a sphere of dimension `|S₁|+|S₂|−3`.

use crate::classify::{irreducible_kind, ClassifyError, IrreducibleKind, SubsetTypes, SCAN_LIMIT};
use crate::diagram::{CoxeterDiagram, NodeSet};
use serde::Serialize;
use std::collections::{BTreeSet, HashSet};

/// Abstract simplicial complex stored by its maximal faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    /// Vertices `0..n`.
    #[serde(serialize_with = "one_based_vertices")]
    pub vertices: usize,
    pub facets: Vec<NodeSet>,
}

fn one_based_vertices<S: serde::Serializer>(n: &usize, s: S) -> Result<S::Ok, S::Error> {
    (1..=*n).collect::<Vec<_>>().serialize(s)
}

impl SimplicialComplex {
    /// Builds a complex from any generating faces, keeping only maximal ones.
    pub fn from_faces(vertices: usize, faces: impl IntoIterator<Item = NodeSet>) -> Self {
        let mut all: Vec<NodeSet> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        all.sort_by_key(|f| (std::cmp::Reverse(f.len()), f.0));
        all.dedup();
        let mut facets: Vec<NodeSet> = Vec::new();
        for f in all {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort_by_key(|f| f.0);
        SimplicialComplex { vertices, facets }
    }

    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// All nonempty faces.
    pub fn faces(&self) -> BTreeSet<NodeSet> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                if !s.is_empty() {
                    out.insert(s);
                }
            }
        }
        out
    }

    pub fn contains_face(&self, t: NodeSet) -> bool {
        self.facets.iter().any(|f| t.is_subset(*f))
    }

    /// Number of faces per dimension, starting with vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let faces = self.faces();
        let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut out = vec![0; top];
        for f in faces {
            out[f.len() - 1] += 1;
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// Edges of the 1-skeleton.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces()
            .into_iter()
            .filter(|f| f.len() == 2)
            .map(|f| {
                let v: Vec<usize> = f.iter().collect();
                (v[0], v[1])
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// Graphviz rendering of the 1-skeleton.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph nerve {\n");
        for v in 0..self.vertices {
            out.push_str(&format!("  v{};\n", v + 1));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  v{} -- v{};\n", a + 1, b + 1));
        }
        out.push_str("}\n");
        out
    }

    /// Join `∂Δ(S₁) * ∂Δ(S₂)` on the vertex set `S₁ ⊔ S₂`.
    pub fn join_of_boundaries(vertices: usize, s1: NodeSet, s2: NodeSet) -> Self {
        let mut facets = Vec::new();
        for a in s1.iter() {
            for b in s2.iter() {
                facets.push(s1.without(a).union(s2.without(b)));
            }
        }
        Self::from_faces(vertices, facets)
    }
}

/// Nerve of the Coxeter group: facets are the maximal spherical subsets.
pub fn nerve(d: &CoxeterDiagram) -> Result<SimplicialComplex, ClassifyError> {
    let table = spherical_table(d)?;
    Ok(nerve_from(d.rank(), &table))
}

fn spherical_table(d: &CoxeterDiagram) -> Result<SubsetTypes, ClassifyError> {
    if d.rank() > SCAN_LIMIT {
        return Err(ClassifyError::Capacity(d.rank()));
    }
    SubsetTypes::new(&d.cosine_matrix())
}

fn nerve_from(n: usize, table: &SubsetTypes) -> SimplicialComplex {
    let full = NodeSet::full(n);
    let facets = full.subsets().filter(|&t| {
        !t.is_empty()
            && table.is_positive_definite(t)
            && full.difference(t).iter().all(|i| !table.is_positive_definite(t.with(i)))
    });
    SimplicialComplex::from_faces(n, facets)
}

/// A Lannér bipartition proving that the nerve is a sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinCertificate {
    pub s1: NodeSet,
    pub s2: NodeSet,
    /// `|S₁| + |S₂| − 2`; the nerve is a sphere of dimension `d − 1`.
    pub d: usize,
    /// Whether another bipartition also satisfies the criterion.
    pub another_exists: bool,
}

/// Searches bipartitions with `S₁` containing the first node, by increasing
/// `|S₁|` and then by bit mask; the first match is returned.
pub fn join_sphere_certificate(d: &CoxeterDiagram) -> Result<Option<JoinCertificate>, ClassifyError> {
    let table = spherical_table(d)?;
    let n = d.rank();
    if n < 2 {
        return Ok(None);
    }
    let full = NodeSet::full(n);
    let mut candidates: Vec<NodeSet> = full.without(0).subsets().map(|t| t.with(0)).filter(|&t| t != full).collect();
    candidates.sort_by_key(|t| (t.len(), t.0));
    let mut found: Vec<(NodeSet, NodeSet)> = Vec::new();
    for s1 in candidates {
        let s2 = full.difference(s1);
        if !is_minimal_nonspherical(&table, s1) || !is_minimal_nonspherical(&table, s2) {
            continue;
        }
        if !is_lanner(d, s1)? || !is_lanner(d, s2)? {
            continue;
        }
        let criterion = full
            .subsets()
            .all(|t| t.is_empty() || table.is_positive_definite(t) == (!s1.is_subset(t) && !s2.is_subset(t)));
        if criterion {
            found.push((s1, s2));
            if found.len() == 2 {
                break;
            }
        }
    }
    Ok(found.first().map(|&(s1, s2)| JoinCertificate {
        s1,
        s2,
        d: s1.len() + s2.len() - 2,
        another_exists: found.len() > 1,
    }))
}

fn is_minimal_nonspherical(table: &SubsetTypes, t: NodeSet) -> bool {
    !table.is_positive_definite(t) && t.iter().all(|s| table.is_positive_definite(t.without(s)))
}

fn is_lanner(d: &CoxeterDiagram, t: NodeSet) -> Result<bool, ClassifyError> {
    let r = d.restrict(t).map_err(|_| ClassifyError::OutOfRange)?;
    if !r.is_connected() {
        return Ok(false);
    }
    Ok(irreducible_kind(&r)? == IrreducibleKind::Lanner)
}

/// Lexicographically least vertex bijection carrying facets onto facets.
pub fn complexes_isomorphic(c1: &SimplicialComplex, c2: &SimplicialComplex) -> Option<Vec<usize>> {
    let n = c1.vertices;
    if n != c2.vertices || c1.facets.len() != c2.facets.len() {
        return None;
    }
    let profile = |c: &SimplicialComplex, v: usize| -> Vec<usize> {
        let mut p: Vec<usize> = c.facets.iter().filter(|f| f.contains(v)).map(|f| f.len()).collect();
        p.sort();
        p
    };
    let p1: Vec<Vec<usize>> = (0..n).map(|v| profile(c1, v)).collect();
    let p2: Vec<Vec<usize>> = (0..n).map(|v| profile(c2, v)).collect();
    let mut a = p1.clone();
    let mut b = p2.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let target: HashSet<u64> = c2.facets.iter().map(|f| f.0).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;

    fn traces(facets: &[NodeSet], mask: u64, image: impl Fn(NodeSet) -> u64) -> Vec<u64> {
        let mut v: Vec<u64> = facets.iter().map(|f| image(NodeSet(f.0 & mask))).collect();
        v.sort();
        v
    }

    fn rec(
        i: usize,
        c1: &SimplicialComplex,
        c2: &SimplicialComplex,
        p1: &[Vec<usize>],
        p2: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: &mut u64,
        target: &HashSet<u64>,
    ) -> bool {
        let n = c1.vertices;
        if i == n {
            return c1.facets.iter().all(|f| {
                let img = f.iter().fold(0u64, |m, v| m | 1 << map[v]);
                target.contains(&img)
            });
        }
        for c in 0..n {
            if *used >> c & 1 == 1 || p1[i] != p2[c] {
                continue;
            }
            map[i] = c;
            *used |= 1 << c;
            let dom = (1u64 << (i + 1)) - 1;
            let mapped = |s: NodeSet| s.iter().fold(0u64, |m, v| m | 1 << map[v]);
            let t1 = traces(&c1.facets, dom, mapped);
            let t2 = traces(&c2.facets, *used, |s| s.0);
            if t1 == t2 && rec(i + 1, c1, c2, p1, p2, map, used, target) {
                return true;
            }
            *used &= !(1 << c);
        }
        false
    }
    rec(0, c1, c2, &p1, &p2, &mut map, &mut used, &target).then_some(map)
}

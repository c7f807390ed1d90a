//! Coxeter diagrams: data model, text format, and structural queries.
//!
//! The text format is line oriented with `#` comments:
//!
//! ```text
//! rank 7
//! param p 7
//! edge 1 2 4
//! edge 6 7 $p
//! ```
//!
//! Node indices are 1-based in text and 0-based in the API. Pairs that are
//! not listed carry label 2.

use crate::exactla::Matrix;
use crate::scalar::{AlgScalar, Ring};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Largest supported rank; node sets are 64-bit masks.
pub const MAX_RANK: usize = 64;

/// A Coxeter matrix entry off the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn is_edge(self) -> bool {
        self != Label::Finite(2)
    }

    pub fn is_infinite(self) -> bool {
        self == Label::Infinity
    }

    /// Entry of the cosine matrix, `−2cos(π/m)`, with `−2` for ∞.
    pub fn cosine_entry(self) -> AlgScalar {
        match self {
            Label::Finite(m) => AlgScalar::two_cos_pi_over(m).expect("labels are at least 2").neg(),
            Label::Infinity => AlgScalar::from_i64(-2),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => s.serialize_u32(*m),
            Label::Infinity => s.serialize_str("inf"),
        }
    }
}

/// A subset of the nodes `{0, …, n−1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(pub u64);

impl NodeSet {
    pub fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        NodeSet(1u64 << i)
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        NodeSet(it.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    /// Builds a set from 1-based indices.
    pub fn from_one_based(it: impl IntoIterator<Item = usize>) -> Self {
        Self::from_indices(it.into_iter().map(|i| i - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        NodeSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, o: Self) -> Self {
        NodeSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        NodeSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        NodeSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `self`, in increasing order of their bit masks.
    pub fn subsets(self) -> impl Iterator<Item = NodeSet> {
        let full = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = NodeSet(cur);
            if cur == full {
                done = true;
            } else {
                cur = (cur.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: label {label} is smaller than 2")]
    LabelTooSmall { line: usize, label: i64 },
    #[error("line {line}: edge {i}-{j} already has a different label")]
    ConflictingEdge { line: usize, i: usize, j: usize },
    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank {0} is not supported (1 to {MAX_RANK})")]
    BadRank(usize),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("parameter `{name}` has no value")]
    MissingParam { name: String },
    #[error("parameter `{name}` = {value} outside its declared range")]
    ParamOutOfRange { name: String, value: u32 },
    #[error("diagram has unresolved parameters; supply values for them")]
    HasParams,
    #[error("λ must be nonnegative")]
    NegativeLambda,
}

/// A Coxeter diagram of rank `n` with a symmetric label table.
#[derive(Clone)]
pub struct CoxeterDiagram {
    rank: usize,
    labels: Vec<Label>,
    names: Option<Vec<String>>,
}

impl PartialEq for CoxeterDiagram {
    fn eq(&self, o: &Self) -> bool {
        self.rank == o.rank && self.labels == o.labels
    }
}

impl Eq for CoxeterDiagram {}

impl fmt::Debug for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(i, j, l)| format!("{}-{}:{}", i + 1, j + 1, l)).collect();
        write!(f, "CoxeterDiagram(rank {}; {})", self.rank, edges.join(" "))
    }
}

impl CoxeterDiagram {
    /// Rank-`n` diagram with every label equal to 2.
    pub fn new(rank: usize) -> Result<Self, DiagramError> {
        if rank == 0 || rank > MAX_RANK {
            return Err(DiagramError::BadRank(rank));
        }
        Ok(CoxeterDiagram { rank, labels: vec![Label::Finite(2); rank * rank], names: None })
    }

    /// Builds a diagram from 0-based edges.
    pub fn from_edges(
        rank: usize,
        edges: impl IntoIterator<Item = (usize, usize, Label)>,
    ) -> Result<Self, DiagramError> {
        let mut d = Self::new(rank)?;
        for (i, j, l) in edges {
            d.set_label(i, j, l)?;
        }
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.rank)
    }

    /// Label of the pair `{s, t}` with `s ≠ t`.
    pub fn label(&self, s: usize, t: usize) -> Label {
        debug_assert!(s != t, "diagonal labels are not stored");
        self.labels[s * self.rank + t]
    }

    pub fn set_label(&mut self, s: usize, t: usize, l: Label) -> Result<(), DiagramError> {
        for idx in [s, t] {
            if idx >= self.rank {
                return Err(DiagramError::IndexOutOfRange { index: idx + 1, rank: self.rank });
            }
        }
        if s == t {
            return Err(DiagramError::Syntax { line: 0, col: 0, msg: "self-loop".into() });
        }
        if let Label::Finite(m) = l {
            if m < 2 {
                return Err(DiagramError::LabelTooSmall { line: 0, label: m as i64 });
            }
        }
        self.labels[s * self.rank + t] = l;
        self.labels[t * self.rank + s] = l;
        Ok(())
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.rank);
        self.names = Some(names);
        self
    }

    pub fn node_name(&self, i: usize) -> String {
        match &self.names {
            Some(n) => n[i].clone(),
            None => (i + 1).to_string(),
        }
    }

    /// Pairs `(i, j, label)` with `i < j` and label ≠ 2, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        (0..self.rank).flat_map(move |i| {
            (i + 1..self.rank).filter_map(move |j| {
                let l = self.label(i, j);
                l.is_edge().then_some((i, j, l))
            })
        })
    }

    pub fn has_infinity(&self) -> bool {
        self.edges().any(|(_, _, l)| l.is_infinite())
    }

    pub fn infinite_edges(&self) -> Vec<(usize, usize)> {
        self.edges().filter(|e| e.2.is_infinite()).map(|(i, j, _)| (i, j)).collect()
    }

    pub fn neighbors(&self, s: usize) -> NodeSet {
        NodeSet::from_indices((0..self.rank).filter(|&t| t != s && self.label(s, t).is_edge()))
    }

    fn check_set(&self, t: NodeSet) -> Result<(), DiagramError> {
        if let Some(bad) = t.iter().find(|&i| i >= self.rank) {
            return Err(DiagramError::IndexOutOfRange { index: bad + 1, rank: self.rank });
        }
        Ok(())
    }

    /// Diagram of the special subgroup on `t`, nodes renumbered in increasing order.
    pub fn restrict(&self, t: NodeSet) -> Result<CoxeterDiagram, DiagramError> {
        self.check_set(t)?;
        let idx: Vec<usize> = t.iter().collect();
        let mut d = CoxeterDiagram::new(idx.len())?;
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                d.set_label(a, b, self.label(i, j))?;
            }
        }
        if let Some(names) = &self.names {
            d.names = Some(idx.iter().map(|&i| names[i].clone()).collect());
        }
        Ok(d)
    }

    /// Connected components of the diagram graph restricted to `t`.
    pub fn components_of(&self, t: NodeSet) -> Vec<NodeSet> {
        let mut rest = t;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = NodeSet::single(start);
            let mut frontier = comp;
            while let Some(v) = frontier.first() {
                frontier = frontier.without(v);
                let new = self.neighbors(v).intersection(t).difference(comp);
                comp = comp.union(new);
                frontier = frontier.union(new);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<NodeSet> {
        self.components_of(self.nodes())
    }

    pub fn is_connected_set(&self, t: NodeSet) -> bool {
        !t.is_empty() && self.components_of(t).len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.nodes())
    }

    /// True iff every label between `t` and `u` is 2.
    pub fn orthogonal(&self, t: NodeSet, u: NodeSet) -> Result<bool, DiagramError> {
        self.check_set(t)?;
        self.check_set(u)?;
        Ok(t.iter().all(|i| u.iter().all(|j| i != j && !self.label(i, j).is_edge())))
    }

    /// Cosine matrix with diagonal 2 and entries `−2cos(π/m)`; ∞ gives −2.
    pub fn cosine_matrix(&self) -> Matrix<AlgScalar> {
        self.matrix_with(|l| l.cosine_entry(), AlgScalar::from_i64(2))
    }

    /// Cosine matrix with ∞ entries replaced by `−2(1+λ)`.
    pub fn lambda_cosine_matrix(&self, lambda: &AlgScalar) -> Result<Matrix<AlgScalar>, DiagramError> {
        if lambda.sign() < 0 {
            return Err(DiagramError::NegativeLambda);
        }
        let inf = AlgScalar::from_i64(-2).mul(&AlgScalar::one().add(lambda));
        Ok(self.matrix_with(|l| if l.is_infinite() { inf.clone() } else { l.cosine_entry() }, AlgScalar::from_i64(2)))
    }

    /// Symmetric matrix with the given diagonal and off-diagonal entries `entry(label)`.
    pub fn matrix_with<T: Ring>(&self, entry: impl Fn(Label) -> T, diag: T) -> Matrix<T> {
        let n = self.rank;
        let mut cache: BTreeMap<Label, T> = BTreeMap::new();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                diag.clone()
            } else {
                let l = self.label(i, j);
                cache.entry(l).or_insert_with(|| entry(l)).clone()
            }
        })
    }

    /// Text form: `rank` line followed by edges in lexicographic order.
    pub fn serialize(&self) -> String {
        let mut out = format!("rank {}\n", self.rank);
        for (i, j, l) in self.edges() {
            out.push_str(&format!("edge {} {} {}\n", i + 1, j + 1, l));
        }
        out
    }

    /// Graphviz rendering; label 3 edges are drawn without a label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph coxeter {\n  node [shape=circle];\n");
        for i in 0..self.rank {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i + 1, self.node_name(i)));
        }
        for (i, j, l) in self.edges() {
            match l {
                Label::Finite(3) => out.push_str(&format!("  n{} -- n{};\n", i + 1, j + 1)),
                _ => out.push_str(&format!("  n{} -- n{} [label=\"{}\"];\n", i + 1, j + 1, dot_label(l))),
            }
        }
        out.push_str("}\n");
        out
    }
}

fn dot_label(l: Label) -> String {
    match l {
        Label::Infinity => "∞".to_string(),
        Label::Finite(m) => m.to_string(),
    }
}

/// Label-preserving isomorphism: the lexicographically least `f` with
/// `label2(f(i), f(j)) = label1(i, j)`.
pub fn is_isomorphic(d1: &CoxeterDiagram, d2: &CoxeterDiagram) -> Option<Vec<usize>> {
    is_isomorphic_with(d1, d2, exact_class)
}

/// Identity label classes.
pub fn exact_class(l: Label) -> u64 {
    match l {
        Label::Finite(m) => m as u64,
        Label::Infinity => u64::MAX,
    }
}

/// Label classes that merge every label `≥ k` (including ∞) into one bucket.
pub fn bucket_at_least(k: u32) -> impl Fn(Label) -> u64 {
    move |l| match l {
        Label::Finite(m) if m < k => m as u64,
        _ => u64::MAX,
    }
}

/// Isomorphism search where labels are compared through `class`.
pub fn is_isomorphic_with<K: Ord + Copy>(
    d1: &CoxeterDiagram,
    d2: &CoxeterDiagram,
    class: impl Fn(Label) -> K,
) -> Option<Vec<usize>> {
    let n = d1.rank();
    if n != d2.rank() {
        return None;
    }
    let sig = |d: &CoxeterDiagram, i: usize| -> Vec<K> {
        let mut v: Vec<K> = (0..n).filter(|&j| j != i).map(|j| class(d.label(i, j))).collect();
        v.sort();
        v
    };
    let s1: Vec<Vec<K>> = (0..n).map(|i| sig(d1, i)).collect();
    let s2: Vec<Vec<K>> = (0..n).map(|i| sig(d2, i)).collect();
    let mut a = s1.clone();
    let mut b = s2.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec<K: Ord + Copy>(
        i: usize,
        d1: &CoxeterDiagram,
        d2: &CoxeterDiagram,
        class: &dyn Fn(Label) -> K,
        s1: &[Vec<K>],
        s2: &[Vec<K>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = d1.rank();
        if i == n {
            return true;
        }
        for c in 0..n {
            if used[c] || s1[i] != s2[c] {
                continue;
            }
            if (0..i).any(|k| class(d1.label(k, i)) != class(d2.label(map[k], c))) {
                continue;
            }
            map[i] = c;
            used[c] = true;
            if rec(i + 1, d1, d2, class, s1, s2, map, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    rec(0, d1, d2, &class, &s1, &s2, &mut map, &mut used).then_some(map)
}

/// How an edge label is given in a template.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum LabelSpec {
    Fixed(Label),
    Param(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamDecl {
    pub name: String,
    pub min: u32,
    pub max: Option<u32>,
}

/// A diagram whose labels may reference named integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramTemplate {
    pub rank: usize,
    /// 0-based pairs `(i, j)` with `i < j`.
    pub edges: BTreeMap<(usize, usize), LabelSpec>,
    pub params: Vec<ParamDecl>,
}

impl DiagramTemplate {
    pub fn from_diagram(d: &CoxeterDiagram) -> Self {
        DiagramTemplate {
            rank: d.rank(),
            edges: d.edges().map(|(i, j, l)| ((i, j), LabelSpec::Fixed(l))).collect(),
            params: Vec::new(),
        }
    }

    pub fn param(&self, name: &str) -> Option<&ParamDecl> {
        self.params.iter().find(|p| p.name == name)
    }

    pub fn param_names(&self) -> Vec<String> {
        self.params.iter().map(|p| p.name.clone()).collect()
    }

    pub fn is_concrete(&self) -> bool {
        self.params.is_empty()
    }

    /// Default values: each parameter at its minimum.
    pub fn minimal_values(&self) -> BTreeMap<String, u32> {
        self.params.iter().map(|p| (p.name.clone(), p.min)).collect()
    }

    /// Concrete diagram for the given parameter values.
    pub fn instantiate(&self, values: &BTreeMap<String, u32>) -> Result<CoxeterDiagram, DiagramError> {
        for p in &self.params {
            let v = *values.get(&p.name).ok_or_else(|| DiagramError::MissingParam { name: p.name.clone() })?;
            if v < p.min || p.max.is_some_and(|m| v > m) {
                return Err(DiagramError::ParamOutOfRange { name: p.name.clone(), value: v });
            }
        }
        self.instantiate_unchecked(values)
    }

    /// Like [`instantiate`](Self::instantiate) but ignores declared ranges
    /// (labels must still be at least 2).
    pub fn instantiate_unchecked(&self, values: &BTreeMap<String, u32>) -> Result<CoxeterDiagram, DiagramError> {
        let mut d = CoxeterDiagram::new(self.rank)?;
        for (&(i, j), spec) in &self.edges {
            let l = match spec {
                LabelSpec::Fixed(l) => *l,
                LabelSpec::Param(name) => {
                    let v = *values.get(name).ok_or_else(|| DiagramError::MissingParam { name: name.clone() })?;
                    if v < 2 {
                        return Err(DiagramError::LabelTooSmall { line: 0, label: v as i64 });
                    }
                    Label::Finite(v)
                }
            };
            d.set_label(i, j, l)?;
        }
        Ok(d)
    }

    /// Canonical text form: `rank`, then `param` lines by name, then edges.
    pub fn serialize(&self) -> String {
        let mut out = format!("rank {}\n", self.rank);
        let mut params = self.params.clone();
        params.sort_by(|a, b| a.name.cmp(&b.name));
        for p in &params {
            match p.max {
                Some(m) => out.push_str(&format!("param {} {} {}\n", p.name, p.min, m)),
                None => out.push_str(&format!("param {} {}\n", p.name, p.min)),
            }
        }
        for (&(i, j), spec) in &self.edges {
            match spec {
                LabelSpec::Fixed(l) if !l.is_edge() => {}
                LabelSpec::Fixed(l) => out.push_str(&format!("edge {} {} {}\n", i + 1, j + 1, l)),
                LabelSpec::Param(name) => out.push_str(&format!("edge {} {} ${}\n", i + 1, j + 1, name)),
            }
        }
        out
    }
}

/// Parses a concrete diagram; parameter directives are rejected.
pub fn parse(text: &str) -> Result<CoxeterDiagram, DiagramError> {
    let t = parse_template(text)?;
    if !t.is_concrete() {
        return Err(DiagramError::HasParams);
    }
    t.instantiate(&BTreeMap::new())
}

/// Parses a diagram text that may declare parameters.
pub fn parse_template(text: &str) -> Result<DiagramTemplate, DiagramError> {
    let mut rank: Option<usize> = None;
    let mut edges: BTreeMap<(usize, usize), LabelSpec> = BTreeMap::new();
    let mut params: Vec<ParamDecl> = Vec::new();
    let mut uses: Vec<(usize, usize, String)> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        let Some(&(col0, head)) = tokens.first() else {
            continue;
        };
        let syntax = |col: usize, msg: String| DiagramError::Syntax { line: line_no, col, msg };
        let int_at = |k: usize, what: &str| -> Result<i64, DiagramError> {
            let (col, tok) = *tokens.get(k).ok_or_else(|| syntax(raw.len() + 1, format!("expected {what}")))?;
            tok.parse::<i64>().map_err(|_| syntax(col, format!("expected {what}, found `{tok}`")))
        };
        match head {
            "rank" => {
                if rank.is_some() {
                    return Err(syntax(col0, "duplicate `rank` directive".into()));
                }
                if tokens.len() != 2 {
                    return Err(syntax(col0, "expected `rank <n>`".into()));
                }
                let n = int_at(1, "a rank")?;
                if n < 1 || n as usize > MAX_RANK {
                    return Err(DiagramError::BadRank(n.max(0) as usize));
                }
                rank = Some(n as usize);
            }
            "edge" | "param" if rank.is_none() => {
                return Err(syntax(col0, "`rank` must be the first directive".into()));
            }
            "edge" => {
                let n = rank.unwrap();
                if tokens.len() != 4 {
                    return Err(syntax(col0, "expected `edge <i> <j> <m>`".into()));
                }
                let i = int_at(1, "a node index")?;
                let j = int_at(2, "a node index")?;
                for idx in [i, j] {
                    if idx < 1 || idx as usize > n {
                        return Err(DiagramError::IndexOutOfRange { index: idx.max(0) as usize, rank: n });
                    }
                }
                if i == j {
                    return Err(syntax(tokens[2].0, "an edge needs two distinct nodes".into()));
                }
                let (col, tok) = tokens[3];
                let spec = if tok == "inf" || tok == "∞" {
                    LabelSpec::Fixed(Label::Infinity)
                } else if let Some(name) = tok.strip_prefix('$') {
                    if !valid_name(name) {
                        return Err(syntax(col, format!("invalid parameter name `{name}`")));
                    }
                    uses.push((line_no, col, name.to_string()));
                    LabelSpec::Param(name.to_string())
                } else {
                    let m: i64 = tok.parse().map_err(|_| syntax(col, format!("expected a label, found `{tok}`")))?;
                    if m < 2 {
                        return Err(DiagramError::LabelTooSmall { line: line_no, label: m });
                    }
                    let m = u32::try_from(m).map_err(|_| syntax(col, "label too large".into()))?;
                    LabelSpec::Fixed(Label::Finite(m))
                };
                let (a, b) = if i < j { (i - 1, j - 1) } else { (j - 1, i - 1) };
                let (a, b) = (a as usize, b as usize);
                let current = edges.get(&(a, b)).cloned().unwrap_or(LabelSpec::Fixed(Label::Finite(2)));
                let explicit = edges.contains_key(&(a, b));
                if explicit && current != spec {
                    return Err(DiagramError::ConflictingEdge { line: line_no, i: a + 1, j: b + 1 });
                }
                edges.insert((a, b), spec);
            }
            "param" => {
                if !(3..=4).contains(&tokens.len()) {
                    return Err(syntax(col0, "expected `param <name> <min> [<max>]`".into()));
                }
                let (ncol, name) = tokens[1];
                if !valid_name(name) {
                    return Err(syntax(ncol, format!("invalid parameter name `{name}`")));
                }
                if params.iter().any(|p| p.name == name) {
                    return Err(syntax(ncol, format!("parameter `{name}` declared twice")));
                }
                let min = int_at(2, "a minimum value")?;
                if min < 2 {
                    return Err(DiagramError::LabelTooSmall { line: line_no, label: min });
                }
                let max = if tokens.len() == 4 {
                    let m = int_at(3, "a maximum value")?;
                    if m < min {
                        return Err(syntax(tokens[3].0, "maximum below minimum".into()));
                    }
                    Some(m as u32)
                } else {
                    None
                };
                params.push(ParamDecl { name: name.to_string(), min: min as u32, max });
            }
            other => return Err(syntax(col0, format!("unknown directive `{other}`"))),
        }
    }
    let Some(rank) = rank else {
        return Err(DiagramError::Syntax { line: 1, col: 1, msg: "missing `rank` directive".into() });
    };
    for (_, _, name) in &uses {
        if !params.iter().any(|p| &p.name == name) {
            return Err(DiagramError::UnknownParam(name.clone()));
        }
    }
    edges.retain(|_, s| *s != LabelSpec::Fixed(Label::Finite(2)));
    Ok(DiagramTemplate { rank, edges, params })
}

fn valid_name(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, c)) in line.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some((bs, cs)) = start.take() {
                out.push((cs + 1, &line[bs..byte]));
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((bs, cs)) = start {
        out.push((cs + 1, &line[bs..]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1A: &str =
        "rank 7\nparam p 7\nedge 1 2 4\nedge 1 3 3\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 $p\n";

    fn fig1a(p: u32) -> CoxeterDiagram {
        let t = parse_template(FIG1A).unwrap();
        t.instantiate(&[("p".to_string(), p)].into_iter().collect()).unwrap()
    }

    #[test]
    fn parse_affine_a1() {
        let d = parse("rank 2\nedge 1 2 inf").unwrap();
        assert_eq!(d.rank(), 2);
        assert_eq!(d.label(0, 1), Label::Infinity);
        let m = d.cosine_matrix();
        assert_eq!(*m.get(0, 1), AlgScalar::from_i64(-2));
        assert_eq!(*m.get(1, 1), AlgScalar::from_i64(2));
    }

    #[test]
    fn parse_triangle() {
        let d = parse("rank 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").unwrap();
        assert_eq!(d.edges().count(), 3);
        assert!(d.is_connected());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("edge 1 2 3"), Err(DiagramError::Syntax { line: 1, col: 1, .. })));
        assert!(matches!(parse("rank 2\nedge 1 2 1"), Err(DiagramError::LabelTooSmall { line: 2, label: 1 })));
        assert!(matches!(
            parse("rank 3\nedge 1 2 3\nedge 2 1 4"),
            Err(DiagramError::ConflictingEdge { line: 3, i: 1, j: 2 })
        ));
        assert!(parse("rank 3\nedge 1 2 3\nedge 2 1 3").is_ok());
        assert!(matches!(parse("rank 3\nedge 1 4 3"), Err(DiagramError::IndexOutOfRange { index: 4, rank: 3 })));
        assert!(matches!(parse("rank 3\n  edge 1 2 x"), Err(DiagramError::Syntax { line: 2, col: 12, .. })));
        assert!(matches!(parse("rank 2\nedge 1 2 $q"), Err(DiagramError::UnknownParam(_))));
        assert!(matches!(parse("rank 2\nparam p 3\nedge 1 2 $p"), Err(DiagramError::HasParams)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let d = parse("# header\n\nrank 2 # two nodes\nedge 1 2 5 # pentagon\n").unwrap();
        assert_eq!(d.label(0, 1), Label::Finite(5));
    }

    #[test]
    fn figure_one_restriction() {
        let d = fig1a(7);
        let t = NodeSet::full(7).without(3).without(4);
        let r = d.restrict(t).unwrap();
        // B3 on {1,2,3} (path 3-1-2 with labels 3,4) and I2(p) on {6,7}
        let b3 = parse("rank 3\nedge 1 2 4\nedge 1 3 3").unwrap();
        let i2 = parse("rank 2\nedge 1 2 7").unwrap();
        let comps = r.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(r.restrict(comps[0]).unwrap(), b3);
        assert_eq!(r.restrict(comps[1]).unwrap(), i2);
        let minor = crate::exactla::principal_minor(&d.cosine_matrix(), t).unwrap();
        assert_eq!(minor, r.cosine_matrix());
    }

    #[test]
    fn lambda_matrix() {
        let d = parse("rank 2\nedge 1 2 inf").unwrap();
        let m = d.lambda_cosine_matrix(&AlgScalar::one()).unwrap();
        assert_eq!(*m.get(0, 1), AlgScalar::from_i64(-4));
        assert_eq!(d.lambda_cosine_matrix(&AlgScalar::zero()).unwrap(), d.cosine_matrix());
        assert!(d.lambda_cosine_matrix(&AlgScalar::from_i64(-1)).is_err());
    }

    #[test]
    fn components_and_orthogonality() {
        let d = CoxeterDiagram::new(2).unwrap();
        assert_eq!(d.components(), vec![NodeSet::single(0), NodeSet::single(1)]);
        let d = parse("rank 4\nedge 1 2 inf\nedge 3 4 inf").unwrap();
        let ab = NodeSet::from_indices([0, 1]);
        let cd = NodeSet::from_indices([2, 3]);
        assert!(d.orthogonal(ab, cd).unwrap());
        assert!(!d.orthogonal(ab, NodeSet::from_indices([1, 2])).unwrap());
        assert!(d.orthogonal(ab, NodeSet::single(9)).is_err());
    }

    #[test]
    fn isomorphisms() {
        let a3 = parse("rank 3\nedge 1 2 3\nedge 2 3 3").unwrap();
        let a3b = parse("rank 3\nedge 1 3 3\nedge 3 2 3").unwrap();
        let b3 = parse("rank 3\nedge 1 2 4\nedge 2 3 3").unwrap();
        assert_eq!(is_isomorphic(&a3, &a3b), Some(vec![0, 2, 1]));
        assert_eq!(is_isomorphic(&a3, &a3), Some(vec![0, 1, 2]));
        assert_eq!(is_isomorphic(&a3, &b3), None);
        let (d11, d13) = (fig1a(11), fig1a(13));
        assert_eq!(is_isomorphic(&d11, &d13), None);
        assert_eq!(is_isomorphic_with(&d11, &d13, bucket_at_least(7)), Some((0..7).collect()));
    }

    #[test]
    fn dot_omits_label_three() {
        let dot = parse("rank 3\nedge 1 2 3\nedge 2 3 inf").unwrap().to_dot();
        assert!(dot.contains("n1 -- n2;"));
        assert!(dot.contains("n2 -- n3 [label=\"∞\"];"));
    }

    #[test]
    fn template_roundtrip() {
        let t = parse_template(FIG1A).unwrap();
        assert_eq!(parse_template(&t.serialize()).unwrap(), t);
        assert!(t.instantiate(&[("p".to_string(), 6)].into_iter().collect()).is_err());
        assert!(t.instantiate_unchecked(&[("p".to_string(), 6)].into_iter().collect()).is_ok());
    }

    #[test]
    fn subsets_enumeration() {
        let s = NodeSet::from_indices([1, 3, 4]);
        let all: Vec<NodeSet> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(NodeSet::empty().subsets().count(), 1);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    pub fn diagram(max_rank: usize) -> impl Strategy<Value = CoxeterDiagram> {
        (1..=max_rank).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(
                prop_oneof![6 => Just(2u32), 3 => Just(3u32), 2 => 4u32..8, 1 => Just(0u32)],
                pairs,
            )
            .prop_map(move |labels| {
                let mut d = CoxeterDiagram::new(n).unwrap();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        let l = if labels[k] == 0 { Label::Infinity } else { Label::Finite(labels[k]) };
                        d.set_label(i, j, l).unwrap();
                        k += 1;
                    }
                }
                d
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn serialize_then_parse_is_identity(d in diagram(8)) {
            prop_assert_eq!(parse(&d.serialize()).unwrap(), d);
        }

        #[test]
        fn cosine_matrix_shape(d in diagram(7)) {
            let m = d.cosine_matrix();
            prop_assert!(m.is_symmetric());
            prop_assert!((0..d.rank()).all(|i| *m.get(i, i) == AlgScalar::from_i64(2)));
        }

        #[test]
        fn restriction_laws(d in diagram(8), t in any::<u64>(), u in any::<u64>()) {
            let full = d.nodes();
            prop_assert_eq!(d.restrict(full).unwrap(), d.clone());
            let t = NodeSet(t).intersection(full);
            let u = NodeSet(u).intersection(t);
            prop_assume!(!u.is_empty());
            let rt = d.restrict(t).unwrap();
            // positions of U inside T
            let idx: Vec<usize> = t.iter().collect();
            let u_in_t = NodeSet::from_indices(u.iter().map(|x| idx.iter().position(|&y| y == x).unwrap()));
            prop_assert_eq!(rt.restrict(u_in_t).unwrap(), d.restrict(u).unwrap());
        }

        #[test]
        fn components_partition(d in diagram(9), t in any::<u64>(), u in any::<u64>()) {
            let comps = d.components();
            let mut acc = NodeSet::empty();
            for c in &comps {
                prop_assert!(acc.is_disjoint(*c));
                acc = acc.union(*c);
            }
            prop_assert_eq!(acc, d.nodes());
            let t = NodeSet(t).intersection(d.nodes());
            let u = NodeSet(u).intersection(d.nodes()).difference(t);
            prop_assert_eq!(d.orthogonal(t, u).unwrap(), d.orthogonal(u, t).unwrap());
        }

        #[test]
        fn isomorphic_to_any_relabeling(d in diagram(7), seed in any::<u64>()) {
            let n = d.rank();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut x = seed;
            for i in (1..n).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (x >> 33) as usize % (i + 1));
            }
            let mut e = CoxeterDiagram::new(n).unwrap();
            for (i, j, l) in d.edges() {
                e.set_label(perm[i], perm[j], l).unwrap();
            }
            let f = is_isomorphic(&d, &e).unwrap();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        prop_assert_eq!(d.label(i, j), e.label(f[i], f[j]));
                    }
                }
            }
        }
    }
}

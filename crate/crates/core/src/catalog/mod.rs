//! Built-in diagram catalogs: the appendix families and the classification
//! tables, addressable by table key and item.

pub mod appendix;
mod tables;

use crate::diagram::{parse_template, CoxeterDiagram, DiagramError, DiagramTemplate, NodeSet};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown table `{0}`")]
    UnknownTable(String),
    #[error("table `{table}` has no item `{item}`")]
    UnknownItem { table: String, item: String },
    #[error("parameter values {values} are not admissible for {entry} ({rule})")]
    Inadmissible { entry: String, values: String, rule: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Side condition on parameter tuples, listed in sorted parameter-name order.
#[derive(Clone, Copy)]
pub enum Constraint {
    Any,
    /// Only the listed tuples; `unordered` tuples match in either order.
    Only {
        unordered: bool,
        tuples: &'static [&'static [u32]],
    },
    /// Every tuple except the listed ones.
    Except {
        unordered: bool,
        tuples: &'static [&'static [u32]],
    },
    /// An arbitrary rule with a printable description.
    Rule {
        text: &'static str,
        test: fn(&[u32]) -> bool,
    },
}

fn tuple_matches(unordered: bool, t: &[u32], vals: &[u32]) -> bool {
    if t == vals {
        return true;
    }
    if unordered && t.len() == vals.len() {
        let mut a = t.to_vec();
        let mut b = vals.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        return a == b;
    }
    false
}

fn tuples_text(open: char, close: char, tuples: &[&[u32]]) -> String {
    tuples
        .iter()
        .map(|t| {
            let inner: Vec<String> = t.iter().map(|v| v.to_string()).collect();
            format!("{open}{}{close}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl Constraint {
    pub fn admits(&self, vals: &[u32]) -> bool {
        match self {
            Constraint::Any => true,
            Constraint::Only { unordered, tuples } => tuples.iter().any(|t| tuple_matches(*unordered, t, vals)),
            Constraint::Except { unordered, tuples } => !tuples.iter().any(|t| tuple_matches(*unordered, t, vals)),
            Constraint::Rule { test, .. } => test(vals),
        }
    }

    pub fn describe(&self) -> String {
        let brackets = |u: bool| if u { ('{', '}') } else { ('(', ')') };
        match self {
            Constraint::Any => "any".into(),
            Constraint::Only { unordered, tuples } => {
                let (o, c) = brackets(*unordered);
                format!("only {}", tuples_text(o, c, tuples))
            }
            Constraint::Except { unordered, tuples } => {
                let (o, c) = brackets(*unordered);
                format!("except {}", tuples_text(o, c, tuples))
            }
            Constraint::Rule { text, .. } => (*text).to_string(),
        }
    }
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Constraint({})", self.describe())
    }
}

/// What a table's diagrams are claimed to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableKind {
    /// Rank `d+2`, Cosine matrix of signature `(d,2,0)`.
    Ghc,
    /// Rank `d+2`, Cosine matrix of signature `(d+1,1,0)`.
    QuasiFuchsian,
    /// Compact hyperbolic polytope groups (Cosine matrix degenerate).
    Lattice,
    /// One `∞` edge; families whose λ-quadratic is studied.
    OneInfinity,
    /// One `∞` edge; two isolated AdS representations.
    DisconnectedAds,
    /// One `∞` edge; two isolated quasi-Fuchsian representations.
    DisconnectedQf,
    Spherical,
    Affine,
    Lanner,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableInfo {
    pub key: &'static str,
    /// Appendix table number where one is assigned.
    pub number: Option<u32>,
    pub dimension: Option<usize>,
    pub kind: TableKind,
    pub title: &'static str,
}

const TABLES: &[TableInfo] = &[
    TableInfo {
        key: "examples_Esselmann",
        number: Some(1),
        dimension: Some(4),
        kind: TableKind::Lattice,
        title: "Esselmann examples, d=4, rank d+2",
    },
    TableInfo {
        key: "Hexamples_dim4",
        number: Some(2),
        dimension: Some(4),
        kind: TableKind::QuasiFuchsian,
        title: "quasi-Fuchsian examples, d=4, rank d+2",
    },
    TableInfo {
        key: "examples_dim4",
        number: Some(4),
        dimension: Some(4),
        kind: TableKind::Ghc,
        title: "AdS examples, d=4, rank d+2",
    },
    TableInfo {
        key: "examples_dim5",
        number: Some(5),
        dimension: Some(5),
        kind: TableKind::Ghc,
        title: "AdS examples, d=5, rank d+2",
    },
    TableInfo {
        key: "examples_dim6",
        number: Some(6),
        dimension: Some(6),
        kind: TableKind::Ghc,
        title: "AdS examples, d=6, rank d+2",
    },
    TableInfo {
        key: "examples_dim7",
        number: Some(7),
        dimension: Some(7),
        kind: TableKind::Ghc,
        title: "AdS example, d=7, rank d+2",
    },
    TableInfo {
        key: "examples_dim8",
        number: Some(8),
        dimension: Some(8),
        kind: TableKind::Ghc,
        title: "AdS examples, d=8, rank d+2",
    },
    TableInfo {
        key: "not_poincare_dim4",
        number: Some(9),
        dimension: Some(4),
        kind: TableKind::DisconnectedAds,
        title: "isolated AdS pairs, d=4, rank d+3",
    },
    TableInfo {
        key: "not_poincare_dim6",
        number: Some(10),
        dimension: Some(6),
        kind: TableKind::DisconnectedAds,
        title: "isolated AdS pairs, d=6, rank d+3",
    },
    TableInfo {
        key: "quasi_fuchsian_dim4",
        number: Some(11),
        dimension: Some(4),
        kind: TableKind::DisconnectedQf,
        title: "isolated quasi-Fuchsian pairs, d=4, rank d+3",
    },
    TableInfo {
        key: "quasi_fuchsian_dim6",
        number: Some(12),
        dimension: Some(6),
        kind: TableKind::DisconnectedQf,
        title: "isolated quasi-Fuchsian pairs, d=6, rank d+3",
    },
    TableInfo {
        key: "spherical",
        number: Some(13),
        dimension: None,
        kind: TableKind::Spherical,
        title: "irreducible spherical diagrams",
    },
    TableInfo {
        key: "affine",
        number: Some(14),
        dimension: None,
        kind: TableKind::Affine,
        title: "irreducible affine diagrams",
    },
    TableInfo { key: "lanner", number: Some(15), dimension: None, kind: TableKind::Lanner, title: "Lannér diagrams" },
    TableInfo {
        key: "barbot2_dim4",
        number: None,
        dimension: Some(4),
        kind: TableKind::OneInfinity,
        title: "one-∞ families, d=4, with lattice parameters",
    },
    TableInfo {
        key: "barbot2_dim6",
        number: None,
        dimension: Some(6),
        kind: TableKind::OneInfinity,
        title: "one-∞ family, d=6, with lattice parameter",
    },
    TableInfo {
        key: "Tumarkin_dim4",
        number: None,
        dimension: Some(4),
        kind: TableKind::Lattice,
        title: "Tumarkin polytope groups, d=4, rank d+3",
    },
    TableInfo {
        key: "Tumarkin_dim6",
        number: None,
        dimension: Some(6),
        kind: TableKind::Lattice,
        title: "Tumarkin polytope group, d=6, rank d+3",
    },
];

/// Largest parameter value explored when enumerating open-ended ranges.
pub const ENUMERATION_CAP: u32 = 40;

/// One item of a table: a possibly parametric diagram with its side condition.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub table: &'static str,
    /// 1-based position in its table.
    pub index: usize,
    /// Item label such as `E1`, `Q7` or `T3`, or a catalog name like `B_3`.
    pub tag: Option<String>,
    pub template: DiagramTemplate,
    pub constraint: Constraint,
    /// 0-based `(dark, light)` nodes: both ends of the `∞` edge.
    pub shading: Option<(usize, usize)>,
    /// Parameter values at which the family meets a compact polytope group.
    pub reference: BTreeMap<String, u32>,
    /// Filled nodes of the figure (the parametric block of rank `d+2` items).
    pub black: NodeSet,
}

impl CatalogEntry {
    /// Display id `table:item`.
    pub fn id(&self) -> String {
        match &self.tag {
            Some(t) => format!("{}:{}", self.table, t),
            None => format!("{}:{}", self.table, self.index),
        }
    }

    pub fn param_names(&self) -> Vec<String> {
        let mut names = self.template.param_names();
        names.sort();
        names
    }

    fn values_vec(&self, values: &BTreeMap<String, u32>) -> Vec<u32> {
        self.param_names().iter().map(|n| values.get(n).copied().unwrap_or(0)).collect()
    }

    /// Whether the values are in range and satisfy the side condition.
    pub fn admits(&self, values: &BTreeMap<String, u32>) -> bool {
        let in_range = self
            .template
            .params
            .iter()
            .all(|p| values.get(&p.name).is_some_and(|&v| v >= p.min && p.max.is_none_or(|m| v <= m)));
        in_range && self.constraint.admits(&self.values_vec(values))
    }

    /// The diagram at admissible parameter values.
    pub fn instantiate(&self, values: &BTreeMap<String, u32>) -> Result<CoxeterDiagram, CatalogError> {
        let d = self.template.instantiate(values)?;
        if !self.constraint.admits(&self.values_vec(values)) {
            return Err(CatalogError::Inadmissible {
                entry: self.id(),
                values: format_values(values),
                rule: self.constraint.describe(),
            });
        }
        Ok(d)
    }

    /// Admissible parameter tuples ordered by sum, then lexicographically,
    /// with open ranges cut at `cap`.
    pub fn admissible_values(&self, cap: u32) -> Vec<BTreeMap<String, u32>> {
        let names = self.param_names();
        let ranges: Vec<(u32, u32)> = names
            .iter()
            .map(|n| {
                let p = self.template.param(n).expect("declared");
                (p.min, p.max.unwrap_or(cap).min(cap.max(p.min)))
            })
            .collect();
        let mut tuples: Vec<Vec<u32>> = vec![Vec::new()];
        for &(lo, hi) in &ranges {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (lo..=hi).map(move |v| {
                        let mut t = t.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        tuples.retain(|t| self.constraint.admits(t));
        tuples.sort_by_key(|t| (t.iter().sum::<u32>(), t.clone()));
        tuples.into_iter().map(|t| names.iter().cloned().zip(t).collect()).collect()
    }

    /// The first admissible tuple in [`admissible_values`](Self::admissible_values) order.
    pub fn minimal_values(&self) -> Option<BTreeMap<String, u32>> {
        self.admissible_values(ENUMERATION_CAP).into_iter().next()
    }

    /// `S₁ = S ∖ {light}` and `S₂ = S ∖ {dark}` for one-`∞` families.
    pub fn split(&self) -> Option<(NodeSet, NodeSet)> {
        let (dark, light) = self.shading?;
        let all = NodeSet::full(self.template.rank);
        Some((all.without(light), all.without(dark)))
    }

    /// The compact polytope group this family is compared against: the
    /// Tumarkin item with the same tag, or the family at its reference values.
    pub fn reference_diagram(&self) -> Option<CoxeterDiagram> {
        if !self.reference.is_empty() {
            return self.template.instantiate_unchecked(&self.reference).ok();
        }
        let dim = self.table.rsplit('_').next()?;
        if !(self.table.starts_with("not_poincare") || self.table.starts_with("quasi_fuchsian")) {
            return None;
        }
        let tag = self.tag.as_deref()?;
        let tum = find_entry(&format!("Tumarkin_{dim}"), tag).ok()?;
        tum.template.instantiate(&BTreeMap::new()).ok()
    }
}

/// `p=7,q=8` style rendering.
pub fn format_values(values: &BTreeMap<String, u32>) -> String {
    values.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

fn concrete(table: &'static str, index: usize, name: String, d: &CoxeterDiagram) -> CatalogEntry {
    CatalogEntry {
        table,
        index,
        tag: Some(name),
        template: DiagramTemplate::from_diagram(d),
        constraint: Constraint::Any,
        shading: None,
        reference: BTreeMap::new(),
        black: NodeSet::empty(),
    }
}

fn templated(table: &'static str, index: usize, name: &str, dsl: &str, constraint: Constraint) -> CatalogEntry {
    CatalogEntry {
        table,
        index,
        tag: Some(name.to_string()),
        template: parse_template(dsl).expect("built-in template"),
        constraint,
        shading: None,
        reference: BTreeMap::new(),
        black: NodeSet::empty(),
    }
}

fn hyperbolic_cycle(v: &[u32]) -> bool {
    let (p, q, r) = (v[0] as u64, v[1] as u64, v[2] as u64);
    q * r + p * r + p * q < p * q * r
}

fn hyperbolic_path(v: &[u32]) -> bool {
    let (p, q) = (v[0] as u64, v[1] as u64);
    2 * (p + q) < p * q
}

/// Largest rank listed in the spherical and affine tables.
pub const CLASSIFICATION_MAX_RANK: usize = 8;

fn classification_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut idx = 0;
    for n in 1..=CLASSIFICATION_MAX_RANK {
        for fam in ["A", "B", "D", "E", "F", "H"] {
            if let Some(d) = appendix::spherical(fam, n) {
                idx += 1;
                out.push(concrete("spherical", idx, format!("{fam}_{n}"), &d));
            }
        }
    }
    idx += 1;
    out.push(templated("spherical", idx, "I_2(p)", "rank 2\nparam p 5\nedge 1 2 $p\n", Constraint::Any));

    let mut idx = 0;
    for n in 1..CLASSIFICATION_MAX_RANK {
        for fam in ["A", "B", "C", "D", "E", "F", "G"] {
            if let Some(d) = appendix::affine(fam, n) {
                idx += 1;
                let name = appendix::affine_name(&d).unwrap_or_else(|| format!("{fam}~_{n}"));
                out.push(concrete("affine", idx, name, &d));
            }
        }
    }

    let mut idx = 1;
    out.push(templated(
        "lanner",
        idx,
        "Lanner-3-cycle(p,q,r)",
        "rank 3\nparam p 3\nparam q 3\nparam r 3\nedge 1 2 $r\nedge 2 3 $q\nedge 1 3 $p\n",
        Constraint::Rule { text: "1/p+1/q+1/r<1", test: hyperbolic_cycle },
    ));
    idx += 1;
    out.push(templated(
        "lanner",
        idx,
        "Lanner-3-path(p,q)",
        "rank 3\nparam p 3\nparam q 3\nedge 1 2 $p\nedge 2 3 $q\n",
        Constraint::Rule { text: "1/p+1/q<1/2", test: hyperbolic_path },
    ));
    for (name, d) in appendix::lanner_sporadic() {
        idx += 1;
        out.push(concrete("lanner", idx, name, &d));
    }
    out
}

fn build_registry() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut counters: BTreeMap<&str, usize> = BTreeMap::new();
    for raw in tables::RAW {
        let idx = counters.entry(raw.table).or_insert(0);
        *idx += 1;
        out.push(CatalogEntry {
            table: raw.table,
            index: *idx,
            tag: raw.tag.map(str::to_string),
            template: parse_template(raw.dsl).expect("built-in table entry"),
            constraint: raw.constraint,
            shading: raw.shading.map(|(d, l)| (d - 1, l - 1)),
            reference: raw.reference.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            black: NodeSet::from_one_based(raw.black.iter().copied()),
        });
    }
    out.extend(classification_entries());
    out
}

/// Every registered item, in table order.
pub fn catalog_list() -> &'static [CatalogEntry] {
    static REGISTRY: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

/// Registered tables.
pub fn tables() -> &'static [TableInfo] {
    TABLES
}

/// Table by key or number.
pub fn table_info(name: &str) -> Result<&'static TableInfo, CatalogError> {
    let key = name.trim().trim_start_matches("table").trim_start_matches(['-', '_', ' ']);
    TABLES
        .iter()
        .find(|t| t.key.eq_ignore_ascii_case(name) || t.number.is_some_and(|n| n.to_string() == key))
        .ok_or_else(|| CatalogError::UnknownTable(name.to_string()))
}

/// Items of one table.
pub fn table_entries(name: &str) -> Result<Vec<&'static CatalogEntry>, CatalogError> {
    let info = table_info(name)?;
    Ok(catalog_list().iter().filter(|e| e.table == info.key).collect())
}

/// Item by tag (`E1`, `Q7`, `T3`, catalog names) or 1-based index.
pub fn find_entry(table: &str, item: &str) -> Result<&'static CatalogEntry, CatalogError> {
    let entries = table_entries(table)?;
    let item_norm = item.trim();
    let by_tag = entries.iter().find(|e| e.tag.as_deref().is_some_and(|t| t.eq_ignore_ascii_case(item_norm)));
    if let Some(e) = by_tag {
        return Ok(e);
    }
    if let Ok(i) = item_norm.trim_start_matches('#').parse::<usize>() {
        if let Some(e) = entries.iter().find(|e| e.index == i) {
            return Ok(e);
        }
    }
    Err(CatalogError::UnknownItem { table: table.to_string(), item: item.to_string() })
}

/// Instantiated diagram of a table item at the given parameter values.
pub fn catalog_get(table: &str, item: &str, params: &BTreeMap<String, u32>) -> Result<CoxeterDiagram, CatalogError> {
    find_entry(table, item)?.instantiate(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_irreducible, IrreducibleKind};

    fn vals(kv: &[(&str, u32)]) -> BTreeMap<String, u32> {
        kv.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    #[test]
    fn table_sizes() {
        let count = |t: &str| table_entries(t).unwrap().len();
        assert_eq!(count("examples_Esselmann"), 7);
        assert_eq!(count("Hexamples_dim4"), 17);
        assert_eq!(count("examples_dim4"), 28);
        assert_eq!(count("examples_dim5"), 2);
        assert_eq!(count("examples_dim6"), 4);
        assert_eq!(count("examples_dim7"), 1);
        assert_eq!(count("examples_dim8"), 2);
        assert_eq!(count("Tumarkin_dim4"), 6);
        assert_eq!(count("not_poincare_dim4"), 6);
        assert_eq!(count("quasi_fuchsian_dim6"), 1);
        assert_eq!(count("8"), 2);
    }

    #[test]
    fn figure_one_encoding() {
        let d = catalog_get("examples_dim5", "1", &vals(&[("p", 7)])).unwrap();
        let want = crate::diagram::parse(
            "rank 7\nedge 1 2 4\nedge 1 3 3\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 7\n",
        )
        .unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn tags_and_constraints() {
        let q7 = catalog_get("Hexamples_dim4", "Q7", &vals(&[("p", 7), ("q", 8)])).unwrap();
        assert_eq!(q7.rank(), 6);
        assert_eq!(q7.edges().count(), 5);
        assert!(catalog_get("Hexamples_dim4", "Q7", &vals(&[("p", 8), ("q", 8)])).is_err());
        assert!(catalog_get("examples_dim4", "Q3", &vals(&[("p", 7), ("q", 4)])).is_err());
        assert!(catalog_get("examples_dim4", "E1", &vals(&[("p", 10)])).is_err());
        let e = find_entry("examples_dim4", "Q3").unwrap();
        assert_eq!(e.minimal_values().unwrap(), vals(&[("p", 7), ("q", 5)]));
        assert!(matches!(find_entry("examples_dim4", "Z9"), Err(CatalogError::UnknownItem { .. })));
        assert!(matches!(table_info("nope"), Err(CatalogError::UnknownTable(_))));
    }

    #[test]
    fn region_exclusions_expand() {
        let t1 = find_entry("not_poincare_dim4", "T1").unwrap();
        assert!(!t1.admits(&vals(&[("p", 15), ("q", 9)])));
        assert!(t1.admits(&vals(&[("p", 19), ("q", 9)])));
        assert!(!t1.admits(&vals(&[("p", 10), ("q", 10)])));
        assert!(t1.admits(&vals(&[("p", 10), ("q", 11)])));
        let (s1, s2) = t1.split().unwrap();
        assert_eq!(s1.to_one_based(), vec![1, 2, 3, 4, 6, 7]);
        assert_eq!(s2.to_one_based(), vec![1, 2, 3, 5, 6, 7]);
    }

    #[test]
    fn references_resolve() {
        let t3 = find_entry("quasi_fuchsian_dim4", "T3").unwrap();
        let r = t3.reference_diagram().unwrap();
        let want = find_entry("barbot2_dim4", "3").unwrap().template.instantiate(&vals(&[("p", 8), ("q", 8)])).unwrap();
        assert_eq!(r, want);
        assert!(find_entry("examples_dim4", "E1").unwrap().reference_diagram().is_none());
    }

    #[test]
    fn lanner_items_classify() {
        for e in table_entries("lanner").unwrap() {
            for v in e.admissible_values(9).into_iter().take(6) {
                let d = e.instantiate(&v).unwrap();
                let c = classify_irreducible(&d).unwrap();
                assert_eq!(c.kind, IrreducibleKind::Lanner, "{} {:?}", e.id(), v);
            }
        }
    }
}

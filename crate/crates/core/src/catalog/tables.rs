//! Diagram families of the appendix tables, transcribed from their figures.
//!
//! Node numbering follows the figures. The `shading` pair is `(dark, light)`
//! (1-based) for tables whose diagrams carry one `∞` edge; `black` lists the
//! filled nodes of the rank `d+2` tables.

use super::Constraint;

pub(super) struct RawEntry {
    pub table: &'static str,
    pub tag: Option<&'static str>,
    pub dsl: &'static str,
    pub constraint: Constraint,
    pub shading: Option<(usize, usize)>,
    pub reference: &'static [(&'static str, u32)],
    pub black: &'static [usize],
}

pub(super) const RAW: &[RawEntry] = &[
    RawEntry {
        table: "barbot2_dim4",
        tag: None,
        dsl: "rank 7\nparam p 7\nparam q 7\nedge 1 2 3\nedge 1 5 3\nedge 1 6 $q\nedge 2 3 3\nedge 3 4 3\nedge 3 7 $p\nedge 4 5 inf\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[("p", 10), ("q", 10)],
        black: &[],
    },
    RawEntry {
        table: "barbot2_dim4",
        tag: None,
        dsl: "rank 7\nparam p 7\nedge 1 2 3\nedge 1 5 3\nedge 1 6 $p\nedge 2 3 3\nedge 2 7 3\nedge 3 4 3\nedge 3 7 5\nedge 4 5 inf\nedge 4 7 3\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[("p", 10)],
        black: &[],
    },
    RawEntry {
        table: "barbot2_dim4",
        tag: None,
        dsl: "rank 7\nparam p 7\nparam q 7\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 $p\nedge 3 4 4\nedge 4 5 3\nedge 5 6 3\nedge 5 7 $q\n",
        constraint: Constraint::Any,
        shading: Some((1, 6)),
        reference: &[("p", 8), ("q", 8)],
        black: &[],
    },
    RawEntry {
        table: "barbot2_dim4",
        tag: None,
        dsl: "rank 7\nparam p 7\nparam q 7\nedge 1 2 3\nedge 1 5 4\nedge 1 6 $q\nedge 2 3 3\nedge 3 4 4\nedge 3 7 $p\nedge 4 5 inf\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[("p", 8), ("q", 8)],
        black: &[],
    },
    RawEntry {
        table: "barbot2_dim4",
        tag: None,
        dsl: "rank 7\nparam p 7\nedge 1 2 3\nedge 1 5 4\nedge 1 6 $p\nedge 2 3 3\nedge 2 7 3\nedge 3 4 4\nedge 3 7 4\nedge 4 5 inf\nedge 4 7 4\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[("p", 8)],
        black: &[],
    },
    RawEntry {
        table: "barbot2_dim4",
        tag: None,
        dsl: "rank 7\nparam p 7\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 $p\nedge 3 4 4\nedge 4 5 3\nedge 4 7 3\nedge 5 6 3\nedge 5 7 4\nedge 6 7 3\n",
        constraint: Constraint::Any,
        shading: Some((1, 6)),
        reference: &[("p", 8)],
        black: &[],
    },
    RawEntry {
        table: "barbot2_dim6",
        tag: None,
        dsl: "rank 9\nparam p 7\nedge 1 2 3\nedge 1 5 3\nedge 1 6 3\nedge 2 3 3\nedge 3 4 3\nedge 3 9 $p\nedge 4 5 inf\nedge 6 7 3\nedge 7 8 5\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[("p", 10)],
        black: &[],
    },
    RawEntry {
        table: "examples_Esselmann",
        tag: Some("E1"),
        dsl: "rank 6\nedge 1 3 5\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 10\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_Esselmann",
        tag: Some("E2"),
        dsl: "rank 6\nedge 1 3 5\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 5\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_Esselmann",
        tag: Some("E3"),
        dsl: "rank 6\nedge 1 2 4\nedge 1 3 3\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 5 6 8\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_Esselmann",
        tag: Some("E4"),
        dsl: "rank 6\nedge 1 2 4\nedge 1 3 3\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 4 6 3\nedge 5 6 4\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_Esselmann",
        tag: Some("E5"),
        dsl: "rank 6\nedge 1 2 8\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 5 6 8\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_Esselmann",
        tag: Some("E6"),
        dsl: "rank 6\nedge 1 2 5\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 10\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_Esselmann",
        tag: Some("E7"),
        dsl: "rank 6\nedge 1 2 5\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 5\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("E1"),
        dsl: "rank 6\nparam p 7 9\nedge 1 3 5\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[7], &[8], &[9]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q1"),
        dsl: "rank 6\nparam p 7 8\nedge 1 3 5\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[7], &[8]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("E2"),
        dsl: "rank 6\nedge 1 3 5\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 4\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q2"),
        dsl: "rank 6\nedge 1 3 5\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 4\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q3"),
        dsl: "rank 6\nedge 1 2 4\nedge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 7\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q4"),
        dsl: "rank 6\nedge 1 2 3\nedge 1 3 3\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 7\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q5"),
        dsl: "rank 6\nedge 1 2 3\nedge 1 3 3\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 7\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("E3"),
        dsl: "rank 6\nedge 1 2 4\nedge 1 3 3\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 5 6 7\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q6"),
        dsl: "rank 6\nedge 1 2 4\nedge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 5\nedge 5 6 4\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q7"),
        dsl: "rank 6\nparam p 7 8\nparam q 7 8\nedge 1 2 $p\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $q\n",
        constraint: Constraint::Only { unordered: true, tuples: &[&[7, 7], &[7, 8]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q8"),
        dsl: "rank 6\nedge 1 2 5\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 7\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q9"),
        dsl: "rank 6\nparam p 4 4\nparam q 7 8\nedge 1 2 $p\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $q\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[4, 7], &[4, 8]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("E5"),
        dsl: "rank 6\nparam p 7 9\nparam q 7 9\nedge 1 2 $p\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 5 6 $q\n",
        constraint: Constraint::Only { unordered: true, tuples: &[&[7, 7], &[7, 8], &[7, 9]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q10"),
        dsl: "rank 6\nparam p 7 12\nedge 1 2 4\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[7], &[8], &[9], &[10], &[11], &[12]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("E6"),
        dsl: "rank 6\nparam p 7 9\nedge 1 2 5\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[7], &[8], &[9]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("Q11"),
        dsl: "rank 6\nparam p 4 6\nedge 1 2 4\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[4], &[5], &[6]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "Hexamples_dim4",
        tag: Some("E7"),
        dsl: "rank 6\nedge 1 2 5\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 4\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("E1"),
        dsl: "rank 6\nparam p 11\nedge 1 3 5\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q1"),
        dsl: "rank 6\nparam p 9\nedge 1 3 5\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("E2"),
        dsl: "rank 6\nparam p 6\nedge 1 3 5\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q2"),
        dsl: "rank 6\nparam p 5\nedge 1 3 5\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q3"),
        dsl: "rank 6\nparam p 7\nparam q 4\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[7, 4]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q4"),
        dsl: "rank 6\nparam p 7\nparam q 3\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[7, 3]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 7\nparam q 3\nedge 1 2 $q\nedge 1 3 4\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q5"),
        dsl: "rank 6\nparam p 7\nparam q 3\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[7, 3]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 7\nparam q 3\nedge 1 2 $q\nedge 1 3 4\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 7\nparam q 3\nedge 1 2 $q\nedge 1 3 5\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("E3"),
        dsl: "rank 6\nparam p 7\nparam q 4\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[7, 4], &[8, 4]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 5\nparam q 4\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 4\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q6"),
        dsl: "rank 6\nparam p 4\nparam q 4\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 5\nedge 5 6 $p\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[4, 4]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("E4"),
        dsl: "rank 6\nparam p 4\nparam q 4\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[4, 4]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 4\nparam q 4\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 4\nparam q 3\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 4\nparam q 3\nedge 1 2 $q\nedge 1 3 3\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 4\nparam q 3\nedge 1 2 $q\nedge 1 3 4\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 4\nparam q 3\nedge 1 2 $q\nedge 1 3 4\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: None,
        dsl: "rank 6\nparam p 4\nparam q 3\nedge 1 2 $q\nedge 1 3 5\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q7"),
        dsl: "rank 6\nparam p 7\nparam q 7\nedge 1 2 $p\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $q\n",
        constraint: Constraint::Except { unordered: true, tuples: &[&[7, 7], &[7, 8]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q8"),
        dsl: "rank 6\nparam p 5\nparam q 7\nedge 1 2 $p\nedge 2 3 4\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $q\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[5, 7]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q9"),
        dsl: "rank 6\nparam p 4\nparam q 7\nedge 1 2 $p\nedge 2 3 5\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $q\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[4, 7], &[4, 8]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("E5"),
        dsl: "rank 6\nparam p 7\nparam q 7\nedge 1 2 $p\nedge 2 3 3\nedge 3 4 4\nedge 4 5 3\nedge 5 6 $q\n",
        constraint: Constraint::Except { unordered: true, tuples: &[&[7, 7], &[7, 8], &[7, 9], &[8, 8]] },
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q10"),
        dsl: "rank 6\nparam p 13\nedge 1 2 4\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("E6"),
        dsl: "rank 6\nparam p 11\nedge 1 2 5\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("Q11"),
        dsl: "rank 6\nparam p 7\nedge 1 2 4\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim4",
        tag: Some("E7"),
        dsl: "rank 6\nparam p 6\nedge 1 2 5\nedge 1 3 5\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim5",
        tag: None,
        dsl: "rank 7\nparam p 7\nedge 1 2 4\nedge 1 3 3\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[5, 6, 7],
    },
    RawEntry {
        table: "examples_dim5",
        tag: None,
        dsl: "rank 7\nparam p 4\nedge 1 2 4\nedge 1 3 3\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 5 7 3\nedge 6 7 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[5, 6, 7],
    },
    RawEntry {
        table: "examples_dim6",
        tag: None,
        dsl: "rank 8\nparam p 4\nedge 1 3 3\nedge 1 7 3\nedge 2 3 3\nedge 2 8 3\nedge 3 4 3\nedge 4 5 3\nedge 4 6 3\nedge 5 6 $p\nedge 7 8 4\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6],
    },
    RawEntry {
        table: "examples_dim6",
        tag: None,
        dsl: "rank 8\nparam p 4\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 3\nedge 6 8 3\nedge 7 8 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[6, 7, 8],
    },
    RawEntry {
        table: "examples_dim6",
        tag: None,
        dsl: "rank 8\nparam p 7\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 8 3\nedge 7 8 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[6, 7, 8],
    },
    RawEntry {
        table: "examples_dim6",
        tag: None,
        dsl: "rank 8\nparam p 5\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 4\nedge 6 8 3\nedge 7 8 $p\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[6, 7, 8],
    },
    RawEntry {
        table: "examples_dim7",
        tag: None,
        dsl: "rank 9\nedge 1 2 4\nedge 1 3 3\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 3\nedge 7 8 3\nedge 8 9 5\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[5, 6, 7, 8, 9],
    },
    RawEntry {
        table: "examples_dim8",
        tag: None,
        dsl: "rank 10\nedge 1 3 3\nedge 1 9 3\nedge 2 3 3\nedge 2 10 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 3\nedge 7 8 5\nedge 9 10 4\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[4, 5, 6, 7, 8],
    },
    RawEntry {
        table: "examples_dim8",
        tag: None,
        dsl: "rank 10\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 3\nedge 7 8 3\nedge 8 9 3\nedge 9 10 5\n",
        constraint: Constraint::Any,
        shading: None,
        reference: &[],
        black: &[6, 7, 8, 9, 10],
    },
    RawEntry {
        table: "Tumarkin_dim4",
        tag: Some("T1"),
        dsl: "rank 7\nedge 1 2 3\nedge 1 5 3\nedge 1 6 10\nedge 2 3 3\nedge 3 4 3\nedge 3 7 10\nedge 4 5 inf\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "Tumarkin_dim4",
        tag: Some("T2"),
        dsl: "rank 7\nedge 1 2 3\nedge 1 5 3\nedge 1 6 10\nedge 2 3 3\nedge 2 7 3\nedge 3 4 3\nedge 3 7 5\nedge 4 5 inf\nedge 4 7 3\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "Tumarkin_dim4",
        tag: Some("T3"),
        dsl: "rank 7\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 8\nedge 3 4 4\nedge 4 5 3\nedge 5 6 3\nedge 5 7 8\n",
        constraint: Constraint::Any,
        shading: Some((1, 6)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "Tumarkin_dim4",
        tag: Some("T4"),
        dsl: "rank 7\nedge 1 2 3\nedge 1 5 4\nedge 1 6 8\nedge 2 3 3\nedge 3 4 4\nedge 3 7 8\nedge 4 5 inf\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "Tumarkin_dim4",
        tag: Some("T5"),
        dsl: "rank 7\nedge 1 2 3\nedge 1 5 4\nedge 1 6 8\nedge 2 3 3\nedge 2 7 3\nedge 3 4 4\nedge 3 7 4\nedge 4 5 inf\nedge 4 7 4\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "Tumarkin_dim4",
        tag: Some("T6"),
        dsl: "rank 7\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 8\nedge 3 4 4\nedge 4 5 3\nedge 4 7 3\nedge 5 6 3\nedge 5 7 4\nedge 6 7 3\n",
        constraint: Constraint::Any,
        shading: Some((1, 6)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "Tumarkin_dim6",
        tag: Some("T7"),
        dsl: "rank 9\nedge 1 2 3\nedge 1 5 3\nedge 1 6 3\nedge 2 3 3\nedge 3 4 3\nedge 3 9 10\nedge 4 5 inf\nedge 6 7 3\nedge 7 8 5\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "not_poincare_dim4",
        tag: Some("T1"),
        dsl: "rank 7\nparam p 9\nparam q 9\nedge 1 2 3\nedge 1 5 3\nedge 1 6 $q\nedge 2 3 3\nedge 3 4 3\nedge 3 7 $p\nedge 4 5 inf\n",
        constraint: Constraint::Except { unordered: true, tuples: &[&[9, 9], &[9, 10], &[9, 11], &[9, 12], &[9, 13], &[9, 14], &[9, 15], &[9, 16], &[9, 17], &[9, 18], &[10, 10]] },
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "not_poincare_dim4",
        tag: Some("T2"),
        dsl: "rank 7\nparam p 11\nedge 1 2 3\nedge 1 5 3\nedge 1 6 $p\nedge 2 3 3\nedge 2 7 3\nedge 3 4 3\nedge 3 7 5\nedge 4 5 inf\nedge 4 7 3\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "not_poincare_dim4",
        tag: Some("T3"),
        dsl: "rank 7\nparam p 7\nparam q 8\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 $p\nedge 3 4 4\nedge 4 5 3\nedge 5 6 3\nedge 5 7 $q\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[7, 8], &[7, 9], &[8, 8]] },
        shading: Some((1, 6)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "not_poincare_dim4",
        tag: Some("T4"),
        dsl: "rank 7\nparam p 8\nparam q 8\nedge 1 2 3\nedge 1 5 4\nedge 1 6 $q\nedge 2 3 3\nedge 3 4 4\nedge 3 7 $p\nedge 4 5 inf\n",
        constraint: Constraint::Except { unordered: false, tuples: &[&[8, 8]] },
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "not_poincare_dim4",
        tag: Some("T5"),
        dsl: "rank 7\nparam p 9\nedge 1 2 3\nedge 1 5 4\nedge 1 6 $p\nedge 2 3 3\nedge 2 7 3\nedge 3 4 4\nedge 3 7 4\nedge 4 5 inf\nedge 4 7 4\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "not_poincare_dim4",
        tag: Some("T6"),
        dsl: "rank 7\nparam p 9\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 $p\nedge 3 4 4\nedge 4 5 3\nedge 4 7 3\nedge 5 6 3\nedge 5 7 4\nedge 6 7 3\n",
        constraint: Constraint::Any,
        shading: Some((1, 6)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "not_poincare_dim6",
        tag: Some("T7"),
        dsl: "rank 9\nparam p 11\nedge 1 2 3\nedge 1 5 3\nedge 1 6 3\nedge 2 3 3\nedge 3 4 3\nedge 3 9 $p\nedge 4 5 inf\nedge 6 7 3\nedge 7 8 5\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "quasi_fuchsian_dim4",
        tag: Some("T1"),
        dsl: "rank 7\nparam p 7 13\nparam q 7 13\nedge 1 2 3\nedge 1 5 3\nedge 1 6 $q\nedge 2 3 3\nedge 3 4 3\nedge 3 7 $p\nedge 4 5 inf\n",
        constraint: Constraint::Only { unordered: true, tuples: &[&[7, 13], &[8, 10], &[8, 11], &[9, 9], &[9, 10]] },
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "quasi_fuchsian_dim4",
        tag: Some("T2"),
        dsl: "rank 7\nparam p 8 9\nedge 1 2 3\nedge 1 5 3\nedge 1 6 $p\nedge 2 3 3\nedge 2 7 3\nedge 3 4 3\nedge 3 7 5\nedge 4 5 inf\nedge 4 7 3\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[8], &[9]] },
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "quasi_fuchsian_dim4",
        tag: Some("T3"),
        dsl: "rank 7\nparam p 7 9\nparam q 7 8\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 $p\nedge 3 4 4\nedge 4 5 3\nedge 5 6 3\nedge 5 7 $q\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[7, 8], &[9, 7]] },
        shading: Some((1, 6)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "quasi_fuchsian_dim4",
        tag: Some("T4"),
        dsl: "rank 7\nparam p 7 8\nparam q 7 8\nedge 1 2 3\nedge 1 5 4\nedge 1 6 $q\nedge 2 3 3\nedge 3 4 4\nedge 3 7 $p\nedge 4 5 inf\n",
        constraint: Constraint::Only { unordered: true, tuples: &[&[7, 7], &[7, 8]] },
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "quasi_fuchsian_dim4",
        tag: Some("T5"),
        dsl: "rank 7\nedge 1 2 3\nedge 1 5 4\nedge 1 6 7\nedge 2 3 3\nedge 2 7 3\nedge 3 4 4\nedge 3 7 4\nedge 4 5 inf\nedge 4 7 4\n",
        constraint: Constraint::Any,
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "quasi_fuchsian_dim4",
        tag: Some("T6"),
        dsl: "rank 7\nedge 1 2 4\nedge 1 6 inf\nedge 2 3 7\nedge 3 4 4\nedge 4 5 3\nedge 4 7 3\nedge 5 6 3\nedge 5 7 4\nedge 6 7 3\n",
        constraint: Constraint::Any,
        shading: Some((1, 6)),
        reference: &[],
        black: &[],
    },
    RawEntry {
        table: "quasi_fuchsian_dim6",
        tag: Some("T7"),
        dsl: "rank 9\nparam p 8 9\nedge 1 2 3\nedge 1 5 3\nedge 1 6 3\nedge 2 3 3\nedge 3 4 3\nedge 3 9 $p\nedge 4 5 inf\nedge 6 7 3\nedge 7 8 5\n",
        constraint: Constraint::Only { unordered: false, tuples: &[&[8], &[9]] },
        shading: Some((4, 5)),
        reference: &[],
        black: &[],
    },
];

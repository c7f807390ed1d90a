//! Irreducible spherical, affine and Lannér diagrams.

use crate::diagram::{is_isomorphic, CoxeterDiagram, Label};

fn f(m: u32) -> Label {
    Label::Finite(m)
}

/// Path on `labels.len() + 1` nodes with the given consecutive labels.
pub fn path(labels: &[Label]) -> CoxeterDiagram {
    CoxeterDiagram::from_edges(labels.len() + 1, labels.iter().enumerate().map(|(i, &l)| (i, i + 1, l)))
        .expect("valid path")
}

/// Cycle on `labels.len()` nodes; label `k` joins nodes `k` and `k+1 mod n`.
pub fn cycle(labels: &[Label]) -> CoxeterDiagram {
    let n = labels.len();
    CoxeterDiagram::from_edges(n, labels.iter().enumerate().map(|(i, &l)| (i, (i + 1) % n, l))).expect("valid cycle")
}

/// Star-shaped tree: node 0 is the center, followed by each arm as a path of 3-edges.
pub fn star(arms: &[usize]) -> CoxeterDiagram {
    let n = 1 + arms.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next, f(3)));
            prev = next;
            next += 1;
        }
    }
    CoxeterDiagram::from_edges(n, edges).expect("valid star")
}

fn threes(k: usize) -> Vec<Label> {
    vec![f(3); k]
}

/// Spherical diagram by name and rank, e.g. `("A", 3)`, `("H", 4)`.
pub fn spherical(family: &str, n: usize) -> Option<CoxeterDiagram> {
    match (family, n) {
        ("A", n) if n >= 1 => Some(if n == 1 { CoxeterDiagram::new(1).unwrap() } else { path(&threes(n - 1)) }),
        ("B", n) if n >= 2 => {
            let mut l = threes(n - 1);
            l[n - 2] = f(4);
            Some(path(&l))
        }
        ("D", n) if n >= 4 => Some(star(&[n - 3, 1, 1])),
        ("E", 6) => Some(star(&[2, 2, 1])),
        ("E", 7) => Some(star(&[3, 2, 1])),
        ("E", 8) => Some(star(&[4, 2, 1])),
        ("F", 4) => Some(path(&[f(3), f(4), f(3)])),
        ("H", 3) => Some(path(&[f(5), f(3)])),
        ("H", 4) => Some(path(&[f(5), f(3), f(3)])),
        _ => None,
    }
}

/// Dihedral diagram `I_2(m)`.
pub fn dihedral(m: Label) -> CoxeterDiagram {
    path(&[m])
}

fn dihedral_name(m: Label) -> String {
    match m {
        Label::Finite(3) => "A_2".into(),
        Label::Finite(4) => "B_2".into(),
        Label::Finite(m) => format!("I_2({m})"),
        Label::Infinity => "Ã_1".into(),
    }
}

/// Affine diagram by family letter and index; it has `n + 1` nodes.
pub fn affine(family: &str, n: usize) -> Option<CoxeterDiagram> {
    match (family, n) {
        ("A", 1) => Some(path(&[Label::Infinity])),
        ("A", n) if n >= 2 => Some(cycle(&threes(n + 1))),
        ("B", n) if n >= 3 => {
            // two leaves on node 2, then a path ending in a 4-edge
            let mut edges = vec![(0, 2, f(3)), (1, 2, f(3))];
            for k in 2..n {
                edges.push((k, k + 1, if k + 1 == n { f(4) } else { f(3) }));
            }
            Some(CoxeterDiagram::from_edges(n + 1, edges).unwrap())
        }
        ("C", n) if n >= 2 => {
            let mut l = threes(n);
            l[0] = f(4);
            l[n - 1] = f(4);
            Some(path(&l))
        }
        ("D", n) if n >= 4 => {
            // path of n-3 edges between two forks
            let mut edges = vec![(0, 1, f(3)), (0, 2, f(3))];
            let mut prev = 0;
            for k in 0..n - 4 {
                edges.push((prev, 3 + k, f(3)));
                prev = 3 + k;
            }
            let last = prev;
            edges.push((last, n - 1, f(3)));
            edges.push((last, n, f(3)));
            Some(CoxeterDiagram::from_edges(n + 1, edges).unwrap())
        }
        ("E", 6) => Some(star(&[2, 2, 2])),
        ("E", 7) => Some(star(&[3, 3, 1])),
        ("E", 8) => Some(star(&[5, 2, 1])),
        ("F", 4) => Some(path(&[f(3), f(3), f(4), f(3)])),
        ("G", 2) => Some(path(&[f(6), f(3)])),
        _ => None,
    }
}

fn tilde(family: &str) -> &'static str {
    match family {
        "A" => "Ã",
        "B" => "B̃",
        "C" => "C̃",
        "D" => "D̃",
        "E" => "Ẽ",
        "F" => "F̃",
        "G" => "G̃",
        _ => "?",
    }
}

/// Lannér diagrams of rank 4 and 5 with their names.
pub fn lanner_sporadic() -> Vec<(String, CoxeterDiagram)> {
    let mut out = Vec::new();
    for labels in [[3, 5, 3], [5, 3, 4], [5, 3, 5]] {
        let l: Vec<Label> = labels.iter().map(|&m| f(m)).collect();
        out.push((format!("Lanner-4-path({})", join(&labels)), path(&l)));
    }
    let mut y4 = star(&[1, 1, 1]);
    y4.set_label(0, 1, f(5)).unwrap();
    out.push(("Lanner-4-branch(5)".to_string(), y4));
    for labels in [[4, 3, 3, 3], [5, 3, 3, 3], [4, 3, 4, 3], [5, 3, 4, 3], [5, 3, 5, 3]] {
        let l: Vec<Label> = labels.iter().map(|&m| f(m)).collect();
        out.push((format!("Lanner-4-cycle({})", join(&labels)), cycle(&l)));
    }
    out.push(("Lanner-5-cycle(4,3,3,3,3)".to_string(), cycle(&[f(4), f(3), f(3), f(3), f(3)])));
    // branched rank 5: 5-edge leading into a D4-style fork
    let y5 = CoxeterDiagram::from_edges(5, [(0, 1, f(5)), (1, 2, f(3)), (2, 3, f(3)), (2, 4, f(3))]).unwrap();
    out.push(("Lanner-5-branch(5)".to_string(), y5));
    for labels in [[5, 3, 3, 3], [5, 3, 3, 5], [5, 3, 3, 4]] {
        let l: Vec<Label> = labels.iter().map(|&m| f(m)).collect();
        out.push((format!("Lanner-5-path({})", join(&labels)), path(&l)));
    }
    out
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn label_key(l: Label) -> u64 {
    match l {
        Label::Finite(m) => m as u64,
        Label::Infinity => u64::MAX,
    }
}

fn label_str(l: Label) -> String {
    l.to_string()
}

/// Name of a connected rank-3 diagram as a path or triangle, in the
/// lexicographically least orientation.
fn rank3_shape(d: &CoxeterDiagram) -> (String, Vec<Label>) {
    let ls = [d.label(0, 1), d.label(1, 2), d.label(0, 2)];
    let edges = ls.iter().filter(|l| l.is_edge()).count();
    if edges == 3 {
        let mut best: Option<Vec<Label>> = None;
        for rot in 0..3 {
            for rev in [false, true] {
                let mut c: Vec<Label> = (0..3).map(|k| ls[(k + rot) % 3]).collect();
                if rev {
                    c.reverse();
                }
                let key: Vec<u64> = c.iter().map(|&l| label_key(l)).collect();
                if best.as_ref().is_none_or(|b| key < b.iter().map(|&l| label_key(l)).collect::<Vec<_>>()) {
                    best = Some(c);
                }
            }
        }
        ("cycle".into(), best.unwrap())
    } else {
        let mid = (0..3).find(|&v| d.neighbors(v).len() == 2).expect("connected rank 3");
        let others: Vec<usize> = (0..3).filter(|&v| v != mid).collect();
        let mut a = vec![d.label(others[0], mid), d.label(mid, others[1])];
        if label_key(a[1]) < label_key(a[0]) {
            a.reverse();
        }
        ("path".into(), a)
    }
}

/// Catalog name of a connected spherical diagram.
pub fn spherical_name(d: &CoxeterDiagram) -> Option<String> {
    let n = d.rank();
    if n == 1 {
        return Some("A_1".into());
    }
    if n == 2 {
        return Some(dihedral_name(d.label(0, 1)));
    }
    for fam in ["A", "B", "D", "E", "F", "H"] {
        if let Some(c) = spherical(fam, n) {
            if is_isomorphic(d, &c).is_some() {
                return Some(format!("{fam}_{n}"));
            }
        }
    }
    None
}

/// Catalog name of a connected affine diagram.
pub fn affine_name(d: &CoxeterDiagram) -> Option<String> {
    let n = d.rank().checked_sub(1)?;
    for fam in ["A", "B", "C", "D", "E", "F", "G"] {
        if let Some(c) = affine(fam, n) {
            if is_isomorphic(d, &c).is_some() {
                return Some(format!("{}_{n}", tilde(fam)));
            }
        }
    }
    None
}

/// Catalog name of a Lannér diagram.
pub fn lanner_name(d: &CoxeterDiagram) -> Option<String> {
    match d.rank() {
        3 => {
            let (shape, labels) = rank3_shape(d);
            let parts: Vec<String> = labels.iter().map(|&l| label_str(l)).collect();
            Some(format!("Lanner-3-{shape}({})", parts.join(",")))
        }
        4 | 5 => lanner_sporadic().into_iter().find(|(_, c)| is_isomorphic(d, c).is_some()).map(|(name, _)| name),
        _ => None,
    }
}

/// Every named spherical and affine diagram up to the given rank, plus the
/// sporadic Lannér diagrams.
pub fn appendix_diagrams(max_rank: usize) -> Vec<(String, CoxeterDiagram)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for fam in ["A", "B", "D", "E", "F", "H"] {
            if let Some(d) = spherical(fam, n) {
                out.push((format!("{fam}_{n}"), d));
            }
        }
    }
    for m in [5u32, 6, 7, 8, 12] {
        out.push((format!("I_2({m})"), dihedral(Label::Finite(m))));
    }
    for n in 1..max_rank {
        for fam in ["A", "B", "C", "D", "E", "F", "G"] {
            if let Some(d) = affine(fam, n) {
                out.push((format!("{}_{n}", tilde(fam)), d));
            }
        }
    }
    out.extend(lanner_sporadic());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(spherical("D", 5).unwrap().rank(), 5);
        assert_eq!(spherical("E", 8).unwrap().rank(), 8);
        for (fam, n) in [
            ("A", 4),
            ("B", 3),
            ("B", 5),
            ("C", 3),
            ("D", 4),
            ("D", 6),
            ("E", 6),
            ("E", 7),
            ("E", 8),
            ("F", 4),
            ("G", 2),
        ] {
            let d = affine(fam, n).unwrap();
            assert_eq!(d.rank(), n + 1, "{fam}{n}");
            assert!(d.is_connected(), "{fam}{n}");
            assert_eq!(d.edges().count(), if fam == "A" { n + 1 } else { n }, "{fam}{n}");
        }
        assert_eq!(lanner_sporadic().len(), 14);
    }

    #[test]
    fn affine_b_has_fork_and_four() {
        for n in 3..7 {
            let d = affine("B", n).unwrap();
            let fours = d.edges().filter(|e| e.2 == Label::Finite(4)).count();
            assert_eq!(fours, 1, "B̃_{n}");
            let deg3 = (0..d.rank()).filter(|&v| d.neighbors(v).len() == 3).count();
            assert_eq!(deg3, 1);
        }
    }

    #[test]
    fn rank_three_names() {
        let t = cycle(&[f(4), f(3), f(3)]);
        assert_eq!(lanner_name(&t).unwrap(), "Lanner-3-cycle(3,3,4)");
        let p = path(&[f(7), f(3)]);
        assert_eq!(lanner_name(&p).unwrap(), "Lanner-3-path(3,7)");
    }
}

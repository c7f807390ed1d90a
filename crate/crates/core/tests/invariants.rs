//! Property tests across modules: gluing identities, the λ-discriminant,
//! determinant routes, and orbit invariants.

use coxlab::catalog::find_entry;
use coxlab::certify::{
    discriminant_identity, lambda_polynomial, vinberg_single_edge_identity, vinberg_two_edge_identity,
};
use coxlab::diagram::{CoxeterDiagram, Label, NodeSet};
use coxlab::exactla::{determinant, determinant_bareiss, principal_det};
use coxlab::orbit::{check_tiling_disjoint, enumerate_ball, FloatRep};
use coxlab::scalar::AlgScalar;
use coxlab::tits;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn label() -> impl Strategy<Value = Label> {
    prop_oneof![
        4 => prop::sample::select(vec![2u32, 3, 3, 4, 5, 6, 8]).prop_map(Label::Finite),
        1 => Just(Label::Infinity),
    ]
}

fn finite_label() -> impl Strategy<Value = Label> {
    prop::sample::select(vec![3u32, 4, 5, 6, 7]).prop_map(Label::Finite)
}

/// A diagram on `n` nodes from an upper-triangular label list.
fn diagram(n: usize, labels: &[Label]) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::new(n).unwrap();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            d.set_label(i, j, labels[k]).unwrap();
            k += 1;
        }
    }
    d
}

/// Two blocks on `a` and `b` nodes with no edges between them.
fn blocks() -> impl Strategy<Value = (usize, CoxeterDiagram)> {
    (2usize..=4, 1usize..=3).prop_flat_map(|(a, b)| {
        let n = a + b;
        prop::collection::vec(label(), n * (n - 1) / 2).prop_map(move |labels| {
            let mut d = diagram(n, &labels);
            for i in 0..a {
                for j in a..n {
                    d.set_label(i, j, Label::Finite(2)).unwrap();
                }
            }
            (a, d)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn single_edge_gluing((a, mut d) in blocks(), l in finite_label(), s in 0usize..4, t in 0usize..3) {
        let (s, t) = (s % a, a + t % (d.rank() - a));
        d.set_label(s, t, l).unwrap();
        prop_assert!(vinberg_single_edge_identity(&d, s, t).unwrap().holds());
    }

    #[test]
    fn two_edge_gluing((a, mut d) in blocks(), l1 in finite_label(), l2 in finite_label(), r in 0usize..4, t in 0usize..3) {
        let r = r % a;
        let s = (r + 1) % a;
        let t = a + t % (d.rank() - a);
        d.set_label(r, t, l1).unwrap();
        d.set_label(s, t, l2).unwrap();
        prop_assume!(!principal_det(&d.cosine_matrix(), NodeSet::full(a)).is_zero());
        prop_assert!(vinberg_two_edge_identity(&d, r, s, t).unwrap().holds());
    }

    #[test]
    fn determinant_routes_agree(n in 1usize..=5, labels in prop::collection::vec(label(), 10)) {
        let d = diagram(n, &labels);
        let c = d.cosine_matrix();
        prop_assert_eq!(determinant(&c), determinant_bareiss(&c));
    }

    #[test]
    fn lambda_coefficients_interpolate(p in 7u32..30, q in 7u32..30, k in 0i64..6) {
        let e = find_entry("not_poincare_dim4", "T1").unwrap();
        let v: BTreeMap<String, u32> = [("p".to_string(), p), ("q".to_string(), q)].into();
        let d = e.template.instantiate_unchecked(&v).unwrap();
        let quad = lambda_polynomial(&d).unwrap();
        let lambda = AlgScalar::from_i64(k);
        let direct = determinant(&d.lambda_cosine_matrix(&lambda).unwrap());
        let poly = quad.a0.add(&quad.a1.mul(&lambda)).add(&quad.a2.mul(&lambda).mul(&lambda));
        prop_assert_eq!(direct, poly);
        prop_assert!(discriminant_identity(&d).unwrap().holds());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Every element of a ball preserves the form, and the translates of the
    /// cone sample stay disjoint.
    #[test]
    fn orbit_elements_preserve_form(p in 11u32..16, seed in 0u64..1000) {
        let e = find_entry("examples_dim4", "E1").unwrap();
        let d = e.instantiate(&[("p".to_string(), p)].into()).unwrap();
        let rep = FloatRep::from_rep(&tits::build(&d.cosine_matrix(), &d).unwrap()).unwrap();
        let ball = enumerate_ball(&rep, 3, 1e-9).unwrap();
        prop_assert!(ball.strictly_growing());
        for el in &ball.elements {
            let g = &el.matrix;
            let drift = (g.transpose() * &rep.gram * g - &rep.gram).abs().max();
            prop_assert!(drift < 1e-8, "form drift {drift}");
        }
        let tiling = check_tiling_disjoint(&rep, &ball, 20, seed, 1e-9).unwrap();
        prop_assert_eq!(tiling.violations, 0);
    }
}

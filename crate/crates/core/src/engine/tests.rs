use std::collections::BTreeMap;

use super::*;
use crate::cyclo::Rational;
use crate::datasets::{psl_2_17, psl_2_8};

fn names(g: &GroupData, cs: &[usize]) -> Vec<String> {
    cs.iter().map(|&c| g.class(c).name.clone()).collect()
}

fn assignment(g: &GroupData, k: u64, powers: &[(u64, &str)]) -> PowerAssignment {
    let choices: BTreeMap<u64, PaVector> = powers
        .iter()
        .map(|&(m, name)| {
            let c = g.class_index(name).unwrap();
            (m, PaVector::indicator(m, admissible_classes(g, m), c).unwrap())
        })
        .collect();
    PowerAssignment::new(k, choices)
}

fn entries(sols: &[PaVector]) -> Vec<Vec<i64>> {
    sols.iter().map(|v| v.entries().to_vec()).collect()
}

#[test]
fn candidate_and_admissible() {
    let g = psl_2_8();
    assert_eq!(candidate_orders(&g), vec![2, 3, 6, 7, 9, 14, 18, 21, 42, 63, 126]);
    assert_eq!(names(&g, &admissible_classes(&g, 6)), ["2a", "3a"]);
    assert_eq!(names(&g, &admissible_classes(&g, 2)), ["2a"]);
    let h = psl_2_17();
    assert_eq!(names(&h, &admissible_classes(&h, 8)), ["2a", "4a", "8a", "8b"]);
    let chars = |g: &GroupData, k| -> Vec<u64> {
        applicable_tables(g, k).iter().map(|t| t.characteristic()).collect()
    };
    assert_eq!(chars(&g, 9), [0, 2, 7]);
    assert_eq!(chars(&g, 6), [0, 7]);
    assert_eq!(chars(&h, 8), [0, 17]);
}

#[test]
fn power_assignment_counts() {
    let g = psl_2_8();
    let opts = CheckOptions::default();
    let prior = check_orders(&g, &[2, 3, 7], &opts).unwrap();
    let a14 = power_assignments(&g, 14, &prior).unwrap();
    assert_eq!(a14.len(), 3);
    let a6 = power_assignments(&g, 6, &prior).unwrap();
    assert_eq!(a6.len(), 1);
    assert_eq!(a6[0].display(&g), "u^3 ~ 2a, u^2 ~ 3a");
}

#[test]
fn order_six_mu3_form() {
    let g = psl_2_8();
    let a = assignment(&g, 6, &[(2, "2a"), (3, "3a")]);
    let f = mu_form(&g, g.ordinary_table(), 1, 6, 3, &a).unwrap();
    let i = |q: i64| Rational::from_integer(q.into());
    assert_eq!(f.coeffs(), &[i(2), i(4)]);
    assert_eq!(f.constant(), &i(4));
    assert_eq!(f.scale(), 6);
    let v = |x: i64, y: i64| PaVector::new(6, admissible_classes(&g, 6), vec![x, y]);
    assert_eq!(evaluate(&f, &v(4, -3)), (i(0), true));
    assert_eq!(evaluate(&f, &v(1, 0)), (i(1), true));
}

#[test]
fn solve_examples() {
    let g = psl_2_8();
    let opts = SolveOptions::default();
    let a = assignment(&g, 9, &[(3, "3a")]);
    let s = solve(&g, 9, &a, &opts).unwrap();
    assert_eq!(entries(&s), [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]]);
    for c in ["7a", "7b", "7c"] {
        let a = assignment(&g, 14, &[(2, "2a"), (7, c)]);
        assert!(solve(&g, 14, &a, &opts).unwrap().is_empty());
    }
    let h = psl_2_17();
    let a = assignment(&h, 8, &[(2, "2a"), (4, "4a")]);
    let s = solve(&h, 8, &a, &opts).unwrap();
    assert_eq!(entries(&s), [[0, 0, 0, 1], [0, 0, 1, 0]]);
}

#[test]
fn certificate_excludes_box() {
    let g = psl_2_8();
    let a = assignment(&g, 6, &[(2, "2a"), (3, "3a")]);
    let out = solve_detailed(&g, 6, &a, &SolveOptions::default()).unwrap();
    assert!(out.solutions.is_empty());
    let cert = certificate(&out).unwrap().unwrap();
    assert!(!cert.is_empty() && cert.len() < out.forms.len());
}

#[test]
fn classify_examples() {
    let g = psl_2_8();
    let a = assignment(&g, 9, &[(3, "3a")]);
    let cs = admissible_classes(&g, 9);
    let v = PaVector::new(9, cs.clone(), vec![0, 1, 0, 0]);
    assert_eq!(classify(&a, &v), Classification::Trivial(g.class_index("9a").unwrap()));
    let w = PaVector::new(9, cs, vec![2, -1, 0, 0]);
    assert_eq!(classify(&a, &w), Classification::Exceptional);
    let e = PowerAssignment::new(2, BTreeMap::new());
    let v = PaVector::new(2, admissible_classes(&g, 2), vec![1]);
    assert_eq!(classify(&e, &v), Classification::Trivial(1));
}

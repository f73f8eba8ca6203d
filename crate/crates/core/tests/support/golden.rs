//! The μ-forms displayed for the hand-worked cases, as exact coefficient
//! vectors and constants.

use std::collections::BTreeMap;

use help_core::cyclo::Rational;
use help_core::engine::{admissible_classes, mu_form, AffineForm, PaVector, PowerAssignment};
use help_core::tables::GroupData;

pub fn assignment(g: &GroupData, k: u64, powers: &[(u64, &str)]) -> PowerAssignment {
    let choices: BTreeMap<u64, PaVector> = powers
        .iter()
        .map(|&(m, name)| {
            let c = g.class_index(name).unwrap();
            (m, PaVector::indicator(m, admissible_classes(g, m), c).unwrap())
        })
        .collect();
    PowerAssignment::new(k, choices)
}

/// `factor·γ + constant` as coefficient vector and constant.
pub struct Expected {
    pub table: u64,
    pub chi: usize,
    pub l: u64,
    pub factor: i64,
    pub gamma: [i64; 4],
    pub constant: i64,
}

pub const fn e(table: u64, chi: usize, l: u64, factor: i64, gamma: [i64; 4], constant: i64) -> Expected {
    Expected {
        table,
        chi,
        l,
        factor,
        gamma,
        constant,
    }
}

pub struct Case {
    pub group: &'static str,
    pub name: &'static str,
    pub order: u64,
    pub powers: Vec<(u64, &'static str)>,
    pub forms: Vec<Expected>,
}

pub fn form(g: &GroupData, k: u64, a: &PowerAssignment, x: &Expected) -> AffineForm {
    let t = g.table(x.table).unwrap();
    mu_form(g, t, x.chi - 1, k, x.l, a).unwrap()
}

/// One line per form that differs from its expectation.
pub fn check_case(g: &GroupData, k: u64, a: &PowerAssignment, cases: &[Expected]) -> Vec<String> {
    let n = admissible_classes(g, k).len();
    let mut failures = Vec::new();
    for x in cases {
        let f = form(g, k, a, x);
        let want: Vec<Rational> = x.gamma[..n]
            .iter()
            .map(|&c| Rational::from_integer((x.factor * c).into()))
            .collect();
        let want_const = Rational::from_integer(x.constant.into());
        if f.scale() != k || f.coeffs() != want.as_slice() || f.constant() != &want_const {
            failures.push(format!(
                "{}: got {} want coeffs {:?} constant {}",
                f.label,
                f.render(g),
                want.iter().map(ToString::to_string).collect::<Vec<_>>(),
                want_const
            ));
        }
    }
    failures
}

const G9_1: [i64; 4] = [2, -1, -1, -1];
const G9_2: [i64; 4] = [0, 2, -1, -1];
const G9_3: [i64; 4] = [0, 1, -2, 1];
const G9_4: [i64; 4] = [0, 1, 1, -2];

pub fn cases() -> Vec<Case> {
    let mut out = vec![
        Case {
            group: "psl_2_8",
            name: "PSL(2,8) order 6",
            order: 6,
            powers: vec![(2, "2a"), (3, "3a")],
            forms: vec![
                e(0, 2, 3, 2, [1, 2, 0, 0], 4),
                e(0, 2, 0, -2, [1, 2, 0, 0], 2),
                e(0, 2, 1, -1, [1, 2, 0, 0], 10),
                e(0, 3, 0, -2, [1, -1, 0, 0], 8),
            ],
        },
        Case {
            group: "psl_2_8",
            name: "PSL(2,8) order 9",
            order: 9,
            powers: vec![(3, "3a")],
            forms: vec![
                e(7, 2, 3, 3, G9_1, 3),
                e(7, 2, 0, -6, G9_1, 3),
                e(2, 2, 1, 3, G9_2, 3),
                e(0, 3, 1, -3, G9_2, 6),
                e(0, 3, 2, 3, G9_3, 6),
                e(2, 2, 2, -3, G9_3, 3),
                e(2, 2, 4, -3, G9_4, 3),
            ],
        },
    ];
    for c in ["7a", "7b", "7c"] {
        let nu = [1, 0, 0, 0];
        out.push(Case {
            group: "psl_2_8",
            name: "PSL(2,8) order 14",
            order: 14,
            powers: vec![(2, "2a"), (7, c)],
            forms: vec![e(0, 2, 7, 6, nu, 8), e(0, 2, 0, -6, nu, 6), e(0, 2, 1, -1, nu, 8)],
        });
    }
    let g1 = [1, -1, 0, 0];
    out.push(Case {
        group: "psl_2_17",
        name: "PSL(2,17) order 4",
        order: 4,
        powers: vec![(2, "2a")],
        forms: vec![e(17, 2, 2, 2, g1, 2), e(17, 2, 0, -2, g1, 2)],
    });
    let (g1, g2, g3, g4, g5) = ([1, 1, -1, -1], [1, -1, 0, 0], [0, 0, 1, -1], [1, -1, -1, -1], [-1, 1, -1, -1]);
    out.push(Case {
        group: "psl_2_17",
        name: "PSL(2,17) order 8",
        order: 8,
        powers: vec![(2, "2a"), (4, "4a")],
        forms: vec![
            e(17, 4, 4, 4, g1, 4),
            e(17, 4, 0, -4, g1, 4),
            e(0, 9, 0, 8, g2, 16),
            e(0, 9, 4, -8, g2, 16),
            e(17, 2, 1, 4, g3, 4),
            e(17, 2, 3, -4, g3, 4),
            e(17, 2, 4, 4, g4, 4),
            e(17, 3, 4, 4, g5, 4),
        ],
    });
    out.push(Case {
        group: "psl_2_17",
        name: "PSL(2,17) order 9",
        order: 9,
        powers: vec![(3, "3a")],
        forms: vec![
            e(0, 4, 3, 3, G9_1, 12),
            e(0, 4, 0, -6, G9_1, 12),
            e(17, 2, 2, 3, G9_2, 3),
            e(17, 3, 1, -3, G9_2, 6),
            e(17, 3, 2, 3, G9_3, 6),
            e(17, 2, 4, -3, G9_3, 3),
            e(17, 2, 1, -3, G9_4, 3),
        ],
    });
    out
}

/// Every mismatch over all cases, and the number of forms compared.
pub fn all_failures() -> (Vec<String>, usize) {
    let mut failures = Vec::new();
    let mut count = 0;
    for c in cases() {
        let g = help_core::datasets::builtin(c.group).unwrap();
        let a = assignment(&g, c.order, &c.powers);
        count += c.forms.len();
        for f in check_case(&g, c.order, &a, &c.forms) {
            failures.push(format!("{}: {f}", c.name));
        }
    }
    (failures, count)
}

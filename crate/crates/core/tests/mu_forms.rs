//! The μ-forms displayed for the hand-worked cases, compared coefficient by
//! coefficient (exact rationals).

mod support;

use help_core::cyclo::Rational;
use help_core::datasets::{psl_2_17, psl_2_8};
use support::golden::{assignment, cases, check_case, e, form};

fn run(name: &str) {
    let mut seen = 0;
    for c in cases().into_iter().filter(|c| c.name == name) {
        let g = help_core::datasets::builtin(c.group).unwrap();
        let a = assignment(&g, c.order, &c.powers);
        let failures = check_case(&g, c.order, &a, &c.forms);
        assert!(failures.is_empty(), "{}", failures.join("\n"));
        seen += 1;
    }
    assert!(seen > 0, "no case named {name}");
}

#[test]
fn psl_2_8_order_6() {
    run("PSL(2,8) order 6");
    let g = psl_2_8();
    let a = assignment(&g, 6, &[(2, "2a"), (3, "3a")]);
    let f = form(&g, 6, &a, &e(0, 2, 1, -1, [1, 2, 0, 0], 10));
    assert_eq!(f.render(&g), "(-ν_2a - 2ν_3a + 10)/6");
}

#[test]
fn psl_2_8_order_9() {
    run("PSL(2,8) order 9");
}

#[test]
fn psl_2_8_order_9_mu2_has_no_3a_term() {
    // Tr(ζ_9^{-2}) = c_9(2) = 0, so ν_3a cannot occur in μ_2 for k = 9
    let g = psl_2_8();
    let a = assignment(&g, 9, &[(3, "3a")]);
    let f = form(&g, 9, &a, &e(7, 2, 2, 0, [0; 4], 0));
    assert_eq!(f.coeff(g.class_index("3a").unwrap()), Rational::from_integer(0.into()));
    assert_eq!(f.render(&g), "(9)/9");
}

#[test]
fn psl_2_8_order_14() {
    run("PSL(2,8) order 14");
}

#[test]
fn psl_2_17_order_4() {
    run("PSL(2,17) order 4");
}

#[test]
fn psl_2_17_order_8() {
    run("PSL(2,17) order 8");
}

#[test]
fn psl_2_17_order_9() {
    run("PSL(2,17) order 9");
    let g = psl_2_17();
    let a = assignment(&g, 9, &[(3, "3a")]);
    let f = form(&g, 9, &a, &e(17, 2, 2, 3, [0, 2, -1, -1], 3));
    assert_eq!(f.render(&g), "(6ν_9a - 3ν_9b - 3ν_9c + 3)/9");
}

use std::collections::BTreeMap;

use help_core::datasets::{psl_2_17, psl_2_8};
use help_core::engine::{check_group, CaseResult, CheckOptions, Verdict};
use help_core::rules::{all_decisions, Decision, RuleId, RuleSet};
use help_core::tables::GroupData;

fn run(g: &GroupData, rules: RuleSet) -> BTreeMap<u64, CaseResult> {
    let opts = CheckOptions {
        rules,
        certificates: false,
        ..CheckOptions::default()
    };
    check_group(g, &opts)
        .unwrap()
        .into_iter()
        .map(|r| (r.unit_order, r))
        .collect()
}

fn same_verdict(a: &Verdict, b: &Verdict) -> bool {
    matches!(
        (a, b),
        (Verdict::AllTrivial, Verdict::AllTrivial) | (Verdict::Nonexistent, Verdict::Nonexistent)
    )
}

/// Every subset of the rules leads to the verdicts HeLP alone reaches.
#[test]
fn rules_never_contradict_help() {
    for g in [psl_2_8(), psl_2_17()] {
        let plain = run(&g, RuleSet::none());
        for mask in 0u32..(1 << RuleId::ALL.len()) {
            let subset = RuleSet::only(
                RuleId::ALL
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, id)| id),
            );
            let with = run(&g, subset);
            assert_eq!(with.keys().collect::<Vec<_>>(), plain.keys().collect::<Vec<_>>());
            for (k, r) in &with {
                assert!(
                    same_verdict(&r.verdict, &plain[k].verdict),
                    "{} k={k} mask={mask:#b}: {:?} vs {:?}",
                    g.name(),
                    r.verdict,
                    plain[k].verdict
                );
            }
        }
    }
}

/// All rules that decide an order reach the same decision, so the fixed
/// application order does not matter.
#[test]
fn deciding_rules_agree() {
    for g in [psl_2_8(), psl_2_17()] {
        let prior = run(&g, RuleSet::all());
        for &k in prior.keys() {
            let below: BTreeMap<u64, CaseResult> =
                prior.range(..k).map(|(m, r)| (*m, r.clone())).collect();
            let ds = all_decisions(&g, k, &below, &RuleSet::all());
            assert!(
                ds.windows(2).all(|w| w[0].decision == w[1].decision),
                "{} k={k}: {ds:?}",
                g.name()
            );
        }
    }
}

/// A Nonexistent decision from the group-theoretic rules means G has no
/// element of that order; a Trivial one means it has.
#[test]
fn rule_decisions_match_element_orders() {
    for g in [psl_2_8(), psl_2_17()] {
        let prior = run(&g, RuleSet::all());
        for &k in prior.keys() {
            let has = g.classes().iter().any(|c| c.element_order == k);
            for d in all_decisions(&g, k, &BTreeMap::new(), &RuleSet::all()) {
                match d.decision {
                    Decision::Nonexistent => assert!(!has, "{} k={k} {}", g.name(), d.rule),
                    Decision::Trivial => assert!(has, "{} k={k} {}", g.name(), d.rule),
                }
            }
        }
    }
}

#[test]
fn rule_names_round_trip() {
    for id in RuleId::ALL {
        assert_eq!(id.name().parse::<RuleId>().unwrap(), id);
        assert_eq!(id.alias().parse::<RuleId>().unwrap(), id);
    }
    assert!("6.2".parse::<RuleId>().is_err());
    let s = RuleSet::parse("6.1,psl-p-regular").unwrap();
    assert!(s.contains(RuleId::PslOrderP) && s.contains(RuleId::PslPRegular));
    assert!(!s.contains(RuleId::PowerClosure));
}

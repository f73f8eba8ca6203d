//! Theorem filters for `G = PSL(2, p^f)`, applied before HeLP solving.
//!
//! The propositions are taken as trusted axioms (M. Hertweck, *Partial
//! augmentations and Brauer character values of torsion units in group
//! rings*, Props. 6.1–6.7) and only fire on groups carrying `psl` metadata.
//! The power-closure rule is a plain consequence of `u^{k/m}` having order
//! `m` and applies to any group.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cyclo::{divisors, is_prime};
use crate::engine::CaseResult;
use crate::tables::GroupData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// Prop. 6.1: units of order `p` are rationally conjugate (p odd, f ≤ 2).
    PslOrderP,
    /// Prop. 6.3: for `f = 1`, a unit of order divisible by `p` has order `p`.
    PslPDivides,
    /// Prop. 6.4: units of prime order `r ≠ p` are rationally conjugate.
    PslPrimeOrder,
    /// Prop. 6.6: units of order 6 are rationally conjugate (p ∉ {2, 3}).
    PslOrderSix,
    /// Prop. 6.7: a `p`-regular unit has the order of some group element.
    PslPRegular,
    PowerClosure,
}

impl RuleId {
    /// Application order.
    pub const ALL: [RuleId; 6] = [
        RuleId::PslOrderP,
        RuleId::PslPDivides,
        RuleId::PslPrimeOrder,
        RuleId::PslOrderSix,
        RuleId::PslPRegular,
        RuleId::PowerClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::PslOrderP => "psl-order-p",
            RuleId::PslPDivides => "psl-p-divides",
            RuleId::PslPrimeOrder => "psl-prime-order",
            RuleId::PslOrderSix => "psl-order-six",
            RuleId::PslPRegular => "psl-p-regular",
            RuleId::PowerClosure => "power-closure",
        }
    }

    /// Short alias accepted on the command line.
    pub fn alias(self) -> &'static str {
        match self {
            RuleId::PslOrderP => "6.1",
            RuleId::PslPDivides => "6.3",
            RuleId::PslPrimeOrder => "6.4",
            RuleId::PslOrderSix => "6.6",
            RuleId::PslPRegular => "6.7",
            RuleId::PowerClosure => "closure",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown rule '{0}' (expected one of: psl-order-p, psl-p-divides, psl-prime-order, psl-order-six, psl-p-regular, power-closure, or 6.1, 6.3, 6.4, 6.6, 6.7, closure)")]
pub struct UnknownRule(pub String);

impl FromStr for RuleId {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s || r.alias() == s)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

/// The enabled rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    enabled: BTreeSet<RuleId>,
}

impl RuleSet {
    pub fn all() -> Self {
        RuleSet {
            enabled: RuleId::ALL.into_iter().collect(),
        }
    }

    pub fn none() -> Self {
        RuleSet {
            enabled: BTreeSet::new(),
        }
    }

    pub fn only(ids: impl IntoIterator<Item = RuleId>) -> Self {
        RuleSet {
            enabled: ids.into_iter().collect(),
        }
    }

    /// Comma-separated rule names or aliases.
    pub fn parse(list: &str) -> Result<Self, UnknownRule> {
        let ids = list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(RuleId::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RuleSet::only(ids))
    }

    pub fn contains(&self, id: RuleId) -> bool {
        self.enabled.contains(&id)
    }

    pub fn iter(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.enabled.iter().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Trivial,
    Nonexistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub rule: RuleId,
    pub decision: Decision,
    pub justification: String,
}

fn outcome(rule: RuleId, decision: Decision, justification: String) -> Option<RuleOutcome> {
    Some(RuleOutcome {
        rule,
        decision,
        justification,
    })
}

fn has_order(g: &GroupData, k: u64) -> bool {
    g.classes().iter().any(|c| c.element_order == k)
}

pub fn rule_61(g: &GroupData, k: u64) -> Option<RuleOutcome> {
    let psl = g.psl_params()?;
    if k != psl.p || psl.p == 2 || psl.f > 2 {
        return None;
    }
    outcome(
        RuleId::PslOrderP,
        Decision::Trivial,
        format!(
            "[Hertweck, Prop. 6.1] units of order p = {k} are rationally conjugate to group elements (p odd, f = {})",
            psl.f
        ),
    )
}

pub fn rule_63(g: &GroupData, k: u64) -> Option<RuleOutcome> {
    let psl = g.psl_params()?;
    if psl.f != 1 || psl.p == 2 || k % psl.p != 0 || k == psl.p {
        return None;
    }
    outcome(
        RuleId::PslPDivides,
        Decision::Nonexistent,
        format!(
            "[Hertweck, Prop. 6.3] a torsion unit of order divisible by p = {} has order p, so none has order {k}",
            psl.p
        ),
    )
}

pub fn rule_64(g: &GroupData, k: u64) -> Option<RuleOutcome> {
    let psl = g.psl_params()?;
    if !is_prime(k) || k == psl.p {
        return None;
    }
    if has_order(g, k) {
        return outcome(
            RuleId::PslPrimeOrder,
            Decision::Trivial,
            format!("[Hertweck, Prop. 6.4] units of prime order {k} ≠ p are rationally conjugate to group elements"),
        );
    }
    let via = rule_67(g, k)?;
    outcome(
        RuleId::PslPrimeOrder,
        Decision::Nonexistent,
        format!("[Hertweck, Prop. 6.4] no element of prime order {k}; existence settled by Prop. 6.7: {}", via.justification),
    )
}

pub fn rule_66(g: &GroupData, k: u64) -> Option<RuleOutcome> {
    let psl = g.psl_params()?;
    if k != 6 || psl.p == 2 || psl.p == 3 {
        return None;
    }
    if has_order(g, 6) {
        outcome(
            RuleId::PslOrderSix,
            Decision::Trivial,
            "[Hertweck, Prop. 6.6] units of order 6 are rationally conjugate to group elements".into(),
        )
    } else {
        outcome(
            RuleId::PslOrderSix,
            Decision::Nonexistent,
            "[Hertweck, Prop. 6.6] units of order 6 are rationally conjugate to group elements, and G has no element of order 6".into(),
        )
    }
}

pub fn rule_67(g: &GroupData, k: u64) -> Option<RuleOutcome> {
    let psl = g.psl_params()?;
    if k % psl.p == 0 || has_order(g, k) {
        return None;
    }
    outcome(
        RuleId::PslPRegular,
        Decision::Nonexistent,
        format!(
            "[Hertweck, Prop. 6.7] a {}-regular torsion unit has the order of some element of G, and G has no element of order {k}",
            psl.p
        ),
    )
}

/// Nonexistent when `u^{k/m}` would be a unit of an order `m` already shown
/// not to occur.
pub fn rule_power_closure(k: u64, prior: &BTreeMap<u64, CaseResult>) -> Option<RuleOutcome> {
    let m = divisors(k)
        .into_iter()
        .filter(|&m| m > 1 && m < k)
        .find(|m| prior.get(m).is_some_and(CaseResult::is_nonexistent))?;
    outcome(
        RuleId::PowerClosure,
        Decision::Nonexistent,
        format!("u^{} would be a torsion unit of order {m}, which does not occur", k / m),
    )
}

fn run(id: RuleId, g: &GroupData, k: u64, prior: &BTreeMap<u64, CaseResult>) -> Option<RuleOutcome> {
    match id {
        RuleId::PslOrderP => rule_61(g, k),
        RuleId::PslPDivides => rule_63(g, k),
        RuleId::PslPrimeOrder => rule_64(g, k),
        RuleId::PslOrderSix => rule_66(g, k),
        RuleId::PslPRegular => rule_67(g, k),
        RuleId::PowerClosure => rule_power_closure(k, prior),
    }
}

/// First enabled rule, in [`RuleId::ALL`] order, that decides `k`.
pub fn apply_rules(
    g: &GroupData,
    k: u64,
    prior: &BTreeMap<u64, CaseResult>,
    rules: &RuleSet,
) -> Option<RuleOutcome> {
    RuleId::ALL
        .into_iter()
        .filter(|&id| rules.contains(id))
        .find_map(|id| run(id, g, k, prior))
}

/// Every enabled rule's decision for `k`, in application order.
pub fn all_decisions(
    g: &GroupData,
    k: u64,
    prior: &BTreeMap<u64, CaseResult>,
    rules: &RuleSet,
) -> Vec<RuleOutcome> {
    RuleId::ALL
        .into_iter()
        .filter(|&id| rules.contains(id))
        .filter_map(|id| run(id, g, k, prior))
        .collect()
}

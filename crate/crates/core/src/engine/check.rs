use std::collections::BTreeMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{
    admissible_classes, candidate_orders, certificate, classify, power_assignments, solve_detailed,
    AffineForm, BoundMethod, Classification, EngineError, PaVector, Parallelism, PowerAssignment,
    SolveOptions,
};
use crate::rules::{apply_rules, Decision, RuleOutcome, RuleSet};
use crate::tables::GroupData;

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub rules: RuleSet,
    pub solve: SolveOptions,
    /// Attach a small certifying subset of forms to every HeLP branch.
    pub certificates: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            rules: RuleSet::all(),
            solve: SolveOptions::default(),
            certificates: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    Rule(RuleOutcome),
    Help,
    /// No class has order dividing `k`, so `Σ ν = 1` has no solution.
    EmptyAdmissible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    AllTrivial,
    Nonexistent,
    /// Solutions that are not rationally conjugate by the criterion.
    Exceptional(Vec<PaVector>),
}

/// One power assignment and what HeLP leaves for it.
#[derive(Debug, Clone)]
pub struct HelpBranch {
    pub assignment: PowerAssignment,
    pub solutions: Vec<PaVector>,
    pub classifications: Vec<Classification>,
    pub bound_method: BoundMethod,
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
    pub num_forms: usize,
    pub certificate: Option<Vec<AffineForm>>,
}

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub unit_order: u64,
    pub classes: Vec<usize>,
    pub method: Method,
    pub branches: Vec<HelpBranch>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
    solutions: Vec<PaVector>,
}

impl CaseResult {
    /// Every admissible vector for this order, across all branches, sorted
    /// and without repetition.
    pub fn solutions(&self) -> &[PaVector] {
        &self.solutions
    }

    pub fn is_nonexistent(&self) -> bool {
        self.verdict == Verdict::Nonexistent
    }

    fn from_rule(g: &GroupData, k: u64, outcome: RuleOutcome) -> Self {
        let classes = admissible_classes(g, k);
        let (verdict, solutions) = match outcome.decision {
            Decision::Nonexistent => (Verdict::Nonexistent, Vec::new()),
            Decision::Trivial => {
                let mut sols: Vec<PaVector> = classes
                    .iter()
                    .filter(|&&c| g.class(c).element_order == k)
                    .filter_map(|&c| PaVector::indicator(k, classes.clone(), c))
                    .collect();
                sols.sort();
                (Verdict::AllTrivial, sols)
            }
        };
        CaseResult {
            unit_order: k,
            classes,
            method: Method::Rule(outcome),
            branches: Vec::new(),
            verdict,
            notes: Vec::new(),
            solutions,
        }
    }
}

fn run_branch(
    g: &GroupData,
    k: u64,
    a: PowerAssignment,
    opts: &CheckOptions,
) -> Result<HelpBranch, EngineError> {
    let out = solve_detailed(g, k, &a, &opts.solve)?;
    let cert = if opts.certificates {
        certificate(&out)?
    } else {
        None
    };
    let classifications = out.solutions.iter().map(|v| classify(&a, v)).collect();
    Ok(HelpBranch {
        assignment: a,
        classifications,
        bound_method: out.bound_method,
        num_forms: out.forms.len(),
        certificate: cert,
        solutions: out.solutions,
        lower: out.lower,
        upper: out.upper,
    })
}

/// Runs HeLP for order `k` over every power assignment compatible with
/// `prior`, ignoring the rules.
pub fn solve_order(
    g: &GroupData,
    k: u64,
    prior: &BTreeMap<u64, CaseResult>,
    opts: &CheckOptions,
) -> Result<CaseResult, EngineError> {
    let classes = admissible_classes(g, k);
    let mut result = CaseResult {
        unit_order: k,
        classes: classes.clone(),
        method: Method::Help,
        branches: Vec::new(),
        verdict: Verdict::Nonexistent,
        notes: Vec::new(),
        solutions: Vec::new(),
    };
    if classes.is_empty() {
        result.method = Method::EmptyAdmissible;
        return Ok(result);
    }
    let assignments = power_assignments(g, k, prior)?;
    if assignments.is_empty() {
        result
            .notes
            .push("no compatible power assignments: some power of u has no admissible partial augmentations".into());
        return Ok(result);
    }
    if assignments.iter().any(PowerAssignment::over_approximated) {
        result
            .notes
            .push("over-approximated: a non-trivial intermediate power choice was kept unchecked".into());
    }
    result.branches = match opts.solve.parallelism {
        Parallelism::Sequential => assignments
            .into_iter()
            .map(|a| run_branch(g, k, a, opts))
            .collect::<Result<_, _>>()?,
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => assignments
            .into_par_iter()
            .map(|a| run_branch(g, k, a, opts))
            .collect::<Result<_, _>>()?,
    };
    let mut all: Vec<PaVector> = result
        .branches
        .iter()
        .flat_map(|b| b.solutions.iter().cloned())
        .collect();
    all.sort();
    all.dedup();
    let exceptional: Vec<PaVector> = result
        .branches
        .iter()
        .flat_map(|b| b.solutions.iter().zip(&b.classifications))
        .filter(|(_, c)| **c == Classification::Exceptional)
        .map(|(v, _)| v.clone())
        .collect();
    result.verdict = if all.is_empty() {
        Verdict::Nonexistent
    } else if exceptional.is_empty() {
        Verdict::AllTrivial
    } else {
        let mut e = exceptional;
        e.sort();
        e.dedup();
        Verdict::Exceptional(e)
    };
    result.solutions = all;
    Ok(result)
}

/// Decides `orders` in the given sequence, each with the rules first and
/// HeLP otherwise. Every proper divisor of an order must precede it.
pub fn check_orders(
    g: &GroupData,
    orders: &[u64],
    opts: &CheckOptions,
) -> Result<BTreeMap<u64, CaseResult>, EngineError> {
    let mut prior = BTreeMap::new();
    for &k in orders {
        let r = match apply_rules(g, k, &prior, &opts.rules) {
            Some(outcome) => CaseResult::from_rule(g, k, outcome),
            None => solve_order(g, k, &prior, opts)?,
        };
        prior.insert(k, r);
    }
    Ok(prior)
}

/// Every candidate order, ascending.
pub fn check_group(g: &GroupData, opts: &CheckOptions) -> Result<Vec<CaseResult>, EngineError> {
    let orders = candidate_orders(g);
    let mut done = check_orders(g, &orders, opts)?;
    Ok(orders.iter().map(|k| done.remove(k).unwrap()).collect())
}

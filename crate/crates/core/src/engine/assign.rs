use std::collections::BTreeMap;

use super::{CaseResult, EngineError, PaVector, PowerAssignment};
use crate::cyclo::divisors;
use crate::tables::GroupData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Every power has a single nonzero partial augmentation; the unit is
    /// rationally conjugate to an element of this class.
    Trivial(usize),
    Exceptional,
}

/// Combinations of earlier solutions for the proper powers of a unit of
/// order `k`, filtered for consistency along the divisor lattice.
///
/// Returns no assignments when some intermediate order is missing from
/// `prior` or has no solutions. Combinations with a non-trivial intermediate
/// choice are kept unchecked and flagged as over-approximated.
pub fn power_assignments(
    g: &GroupData,
    k: u64,
    prior: &BTreeMap<u64, CaseResult>,
) -> Result<Vec<PowerAssignment>, EngineError> {
    let orders: Vec<u64> = divisors(k)
        .into_iter()
        .filter(|&m| m > 1 && m < k)
        .collect();
    let mut options: Vec<&[PaVector]> = Vec::with_capacity(orders.len());
    for m in &orders {
        match prior.get(m) {
            Some(r) if !r.solutions().is_empty() => options.push(r.solutions()),
            _ => return Ok(Vec::new()),
        }
    }

    let mut out = Vec::new();
    let mut pick = vec![0usize; orders.len()];
    loop {
        let choices: BTreeMap<u64, PaVector> = orders
            .iter()
            .zip(&pick)
            .zip(&options)
            .map(|((&m, &i), opts)| (m, opts[i].clone()))
            .collect();
        if let Some(over) = compatible(g, &choices)? {
            let mut a = PowerAssignment::new(k, choices);
            a.over_approximated = over;
            out.push(a);
        }
        // odometer over the Cartesian product, last order fastest
        let mut i = orders.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < options[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// `None` if the choices contradict the power maps; otherwise whether a
/// non-trivial choice was left unchecked.
fn compatible(
    g: &GroupData,
    choices: &BTreeMap<u64, PaVector>,
) -> Result<Option<bool>, EngineError> {
    let mut over = false;
    for (&m, v) in choices {
        let Some(c) = v.single_class() else {
            over = true;
            continue;
        };
        for (&m2, w) in choices.range(..m) {
            if m % m2 != 0 {
                continue;
            }
            let img = g.class_of_power(c, m / m2)?;
            if w.single_class() != Some(img) {
                return Ok(None);
            }
        }
    }
    Ok(Some(over))
}

/// Rational conjugacy criterion: trivial iff `v` and every chosen power have
/// exactly one nonzero partial augmentation.
pub fn classify(a: &PowerAssignment, v: &PaVector) -> Classification {
    match v.single_class() {
        Some(c) if a.is_trivial() => Classification::Trivial(c),
        _ => Classification::Exceptional,
    }
}

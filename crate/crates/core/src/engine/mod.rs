//! The HeLP method: admissible classes, μ-forms, exact solving of the
//! partial augmentation constraints and classification of the solutions.
//!
//! For a hypothetical torsion unit `u` of order `k` with partial augmentations
//! `ν_c` and a character `χ`, every multiplicity
//!
//! ```text
//! μ_l(u, χ, p) = 1/k · Σ_{d | k} Tr_{Q(ζ_k^d)/Q}( χ(u^d) · ζ_k^{-dl} )
//! ```
//!
//! must be a non-negative integer. With the partial augmentations of the
//! proper powers `u^d` fixed by a [`PowerAssignment`], `k·μ_l` is an affine
//! function of `ν` ([`AffineForm`]); [`solve`] finds every integral `ν` with
//! `Σ ν_c = 1` satisfying all of them.

mod assign;
mod check;
mod enumerate;
mod fm;
mod forms;
mod solve;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::cyclo::{divisors, CycloError};
use crate::tables::{CharacterTable, GroupData, TableError};

pub use assign::{classify, power_assignments, Classification};
pub use check::{check_group, check_orders, solve_order, CaseResult, CheckOptions, HelpBranch, Method, Verdict};
pub use enumerate::Parallelism;
pub use fm::{fm_bounds, Bound, FmError, LinearRow};
pub use forms::{evaluate, form_family, mu_form, AffineForm, FormLabel};
pub use solve::{certificate, solve, solve_detailed, solve_system, BoundMethod, SolveOptions, SolveOutcome};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("the HeLP relaxation is unbounded in the partial augmentation of class {class}")]
    Unbounded { class: String },
    #[error("the characteristic {characteristic} table cannot be used for units of order {order}: {characteristic} divides {order}")]
    TableNotApplicable { characteristic: u64, order: u64 },
    #[error("power assignment for a unit of order {order} has no choice for u^{power} (order {missing})")]
    IncompleteAssignment { order: u64, power: u64, missing: u64 },
    #[error("integer constraint coefficients exceed 128 bits")]
    Overflow,
}

/// A candidate vector of partial augmentations for a unit of a given order,
/// indexed by that order's admissible classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaVector {
    order: u64,
    classes: Vec<usize>,
    entries: Vec<i64>,
}

impl PaVector {
    pub fn new(order: u64, classes: Vec<usize>, entries: Vec<i64>) -> Self {
        assert_eq!(classes.len(), entries.len());
        PaVector {
            order,
            classes,
            entries,
        }
    }

    /// The partial augmentations of a group element of class `class`.
    pub fn indicator(order: u64, classes: Vec<usize>, class: usize) -> Option<Self> {
        let pos = classes.iter().position(|&c| c == class)?;
        let mut entries = vec![0; classes.len()];
        entries[pos] = 1;
        Some(PaVector::new(order, classes, entries))
    }

    pub fn unit_order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entry(&self, class: usize) -> i64 {
        self.classes
            .iter()
            .position(|&c| c == class)
            .map_or(0, |i| self.entries[i])
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// The class carrying the only nonzero entry, if there is exactly one.
    pub fn single_class(&self) -> Option<usize> {
        let mut nz = self.entries.iter().zip(&self.classes).filter(|(e, _)| **e != 0);
        match (nz.next(), nz.next()) {
            (Some((_, &c)), None) => Some(c),
            _ => None,
        }
    }

    pub fn display(&self, g: &GroupData) -> String {
        let names: Vec<&str> = self.classes.iter().map(|&c| g.class(c).name.as_str()).collect();
        let vals: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        format!("({}) = ({})", names.join(", "), vals.join(", "))
    }
}

/// Partial augmentations chosen for the proper powers of a unit of order
/// `order`: for each order `m` with `1 < m < order` and `m | order`, the
/// vector of `u^{order/m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerAssignment {
    order: u64,
    choices: BTreeMap<u64, PaVector>,
    over_approximated: bool,
}

impl PowerAssignment {
    pub fn new(order: u64, choices: BTreeMap<u64, PaVector>) -> Self {
        PowerAssignment {
            order,
            choices,
            over_approximated: false,
        }
    }

    /// Builds the assignment induced by a group element of class `class` and
    /// order `order`, using the power maps.
    pub fn induced_by(g: &GroupData, order: u64, class: usize) -> Result<Self, TableError> {
        let mut choices = BTreeMap::new();
        for m in divisors(order) {
            if m == 1 || m == order {
                continue;
            }
            let img = g.class_of_power(class, order / m)?;
            let v = PaVector::indicator(m, admissible_classes(g, m), img)
                .expect("the power of an element of order k has order dividing k");
            choices.insert(m, v);
        }
        Ok(PowerAssignment::new(order, choices))
    }

    pub fn unit_order(&self) -> u64 {
        self.order
    }

    pub fn choices(&self) -> &BTreeMap<u64, PaVector> {
        &self.choices
    }

    pub fn choice(&self, m: u64) -> Option<&PaVector> {
        self.choices.get(&m)
    }

    /// Set when a non-trivial intermediate choice was kept without a
    /// cross-order consistency check.
    pub fn over_approximated(&self) -> bool {
        self.over_approximated
    }

    pub fn is_trivial(&self) -> bool {
        self.choices.values().all(|v| v.single_class().is_some())
    }

    pub fn display(&self, g: &GroupData) -> String {
        if self.choices.is_empty() {
            return "(no proper powers)".to_string();
        }
        self.choices
            .iter()
            .map(|(&m, v)| {
                let d = self.order / m;
                match v.single_class() {
                    Some(c) => format!("u^{d} ~ {}", g.class(c).name),
                    None => format!("u^{d}: {}", v.display(g)),
                }
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for FormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.characteristic == 0 {
            "*".to_string()
        } else {
            self.characteristic.to_string()
        };
        write!(f, "mu_{}(u, chi_{}, {p})", self.l, self.row + 1)
    }
}

/// Divisors of the exponent greater than one, ascending.
pub fn candidate_orders(g: &GroupData) -> Vec<u64> {
    divisors(g.exponent()).into_iter().filter(|&d| d > 1).collect()
}

/// Non-identity classes whose element order divides `k`, in dataset order.
pub fn admissible_classes(g: &GroupData, k: u64) -> Vec<usize> {
    g.classes()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| k % c.element_order == 0)
        .map(|(i, _)| i)
        .collect()
}

/// The ordinary table, and every Brauer table whose characteristic does not
/// divide `k`.
pub fn applicable_tables(g: &GroupData, k: u64) -> Vec<&CharacterTable> {
    g.tables()
        .iter()
        .filter(|t| t.is_ordinary() || k % t.characteristic() != 0)
        .collect()
}

#[cfg(test)]
mod tests;

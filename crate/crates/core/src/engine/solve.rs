use std::collections::HashSet;

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::enumerate::{substitute, Compiled};
use super::fm::{fm_bounds, FmError, LinearRow};
use super::{admissible_classes, form_family, AffineForm, EngineError, PaVector, Parallelism, PowerAssignment};
use crate::cyclo::{CycloError, Rational};
use crate::tables::GroupData;

/// Largest box the certificate search will scan.
const CERTIFICATE_POINT_CAP: u64 = 250_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// `z = ζ_k^root_exponent`; must be a unit modulo `k`.
    pub root_exponent: u64,
    /// Maximum number of rows per Fourier–Motzkin step.
    pub fm_budget: usize,
    /// Box half-width used when elimination exceeds the budget; defaults to
    /// the largest ordinary character degree.
    pub fallback_box: Option<i64>,
    pub parallelism: Parallelism,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            root_exponent: 1,
            fm_budget: 20_000,
            fallback_box: None,
            parallelism: Parallelism::default(),
        }
    }
}

/// Where the search box for the free variables came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMethod {
    FourierMotzkin,
    FallbackBox(i64),
    /// The rational relaxation is already empty.
    Infeasible,
    /// A single admissible class: `Σ ν = 1` fixes the vector.
    Fixed,
    NoAdmissibleClasses,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub classes: Vec<usize>,
    /// Sorted lexicographically by entries.
    pub solutions: Vec<PaVector>,
    /// Bounds on every class but the last, whose value is `1 - Σ others`.
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
    pub bound_method: BoundMethod,
    /// The distinct constraints, first occurrence kept.
    pub forms: Vec<AffineForm>,
}

/// Every integral partial augmentation vector of a unit of order `k` with
/// the given powers that passes all μ-constraints.
pub fn solve(
    g: &GroupData,
    k: u64,
    a: &PowerAssignment,
    opts: &SolveOptions,
) -> Result<Vec<PaVector>, EngineError> {
    Ok(solve_detailed(g, k, a, opts)?.solutions)
}

fn dedupe(forms: Vec<AffineForm>) -> Vec<AffineForm> {
    let mut seen = HashSet::new();
    forms
        .into_iter()
        .filter(|f| seen.insert((f.coeffs().to_vec(), f.constant().clone())))
        .collect()
}

fn floor_i64(q: &Rational) -> Result<i64, EngineError> {
    q.floor().to_integer().to_i64().ok_or(EngineError::Overflow)
}

fn ceil_i64(q: &Rational) -> Result<i64, EngineError> {
    q.ceil().to_integer().to_i64().ok_or(EngineError::Overflow)
}

pub fn solve_detailed(
    g: &GroupData,
    k: u64,
    a: &PowerAssignment,
    opts: &SolveOptions,
) -> Result<SolveOutcome, EngineError> {
    if opts.root_exponent.gcd(&k) != 1 {
        return Err(CycloError::NotAUnit {
            a: opts.root_exponent as i64,
            order: k,
        }
        .into());
    }
    let classes = admissible_classes(g, k);
    if classes.is_empty() {
        return solve_system(g, k, &classes, Vec::new(), opts);
    }
    let forms = form_family(g, k, a, opts.root_exponent)?;
    solve_system(g, k, &classes, forms, opts)
}

/// Solves an explicit family of forms over `classes` (which must be the
/// forms' class list) together with `Σ ν = 1`.
pub fn solve_system(
    g: &GroupData,
    k: u64,
    classes: &[usize],
    forms: Vec<AffineForm>,
    opts: &SolveOptions,
) -> Result<SolveOutcome, EngineError> {
    let mut out = SolveOutcome {
        classes: classes.to_vec(),
        solutions: Vec::new(),
        lower: Vec::new(),
        upper: Vec::new(),
        bound_method: BoundMethod::NoAdmissibleClasses,
        forms: Vec::new(),
    };
    if classes.is_empty() {
        return Ok(out);
    }
    assert!(forms.iter().all(|f| f.classes() == classes));
    out.forms = dedupe(forms);
    let nfree = classes.len() - 1;

    if nfree == 0 {
        out.bound_method = BoundMethod::Fixed;
    } else {
        let rows: Vec<LinearRow> = out
            .forms
            .iter()
            .map(|f| {
                let (coeffs, constant) = substitute(f);
                LinearRow { coeffs, constant }
            })
            .collect();
        match fm_bounds(&rows, nfree, opts.fm_budget) {
            Ok(bounds) => {
                out.bound_method = BoundMethod::FourierMotzkin;
                for b in &bounds {
                    out.lower.push(ceil_i64(&b.lower)?);
                    out.upper.push(floor_i64(&b.upper)?);
                }
            }
            Err(FmError::Infeasible) => {
                out.bound_method = BoundMethod::Infeasible;
                return Ok(out);
            }
            Err(FmError::Unbounded { var }) => {
                return Err(EngineError::Unbounded {
                    class: g.class(classes[var]).name.clone(),
                });
            }
            Err(FmError::Budget(_)) => {
                let b = opts.fallback_box.unwrap_or_else(|| g.max_ordinary_degree());
                out.bound_method = BoundMethod::FallbackBox(b);
                out.lower = vec![-b; nfree];
                out.upper = vec![b; nfree];
            }
        }
    }

    let sys = Compiled::new(&out.forms, classes.len())?;
    let mut sols: Vec<PaVector> = sys
        .enumerate(&out.lower, &out.upper, opts.parallelism)?
        .into_iter()
        .map(|v| PaVector::new(k, classes.to_vec(), v))
        .collect();
    sols.sort();
    out.solutions = sols;
    Ok(out)
}

/// A small set of forms that, inside the search box of `outcome`, admits no
/// integer point besides the solutions: greedy set cover followed by removal
/// of redundant members. `None` when the box is too large to scan.
pub fn certificate(outcome: &SolveOutcome) -> Result<Option<Vec<AffineForm>>, EngineError> {
    let n = outcome.classes.len();
    if n == 0 || outcome.bound_method == BoundMethod::Infeasible {
        return Ok(Some(Vec::new()));
    }
    let mut count: u64 = 1;
    for (l, h) in outcome.lower.iter().zip(&outcome.upper) {
        if h < l {
            return Ok(Some(Vec::new()));
        }
        count = count.saturating_mul((h - l + 1) as u64);
    }
    if count > CERTIFICATE_POINT_CAP {
        return Ok(None);
    }
    let sys = Compiled::new(&outcome.forms, n)?;
    let solutions: HashSet<&[i64]> = outcome
        .solutions
        .iter()
        .map(|v| &v.entries()[..n - 1])
        .collect();

    // rejected[f]: bitset over the non-solution points that form f excludes
    let nforms = outcome.forms.len();
    let mut rejected: Vec<Vec<u64>> = vec![Vec::new(); nforms];
    let mut npoints = 0usize;
    let mut x = outcome.lower.clone();
    loop {
        if !solutions.contains(x.as_slice()) {
            let word = npoints / 64;
            for (f, ok) in sys.satisfied(&x).into_iter().enumerate() {
                if rejected[f].len() <= word {
                    rejected[f].resize(word + 1, 0);
                }
                if !ok {
                    rejected[f][word] |= 1 << (npoints % 64);
                }
            }
            npoints += 1;
        }
        // odometer, last coordinate fastest
        let mut i = x.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if x[i] < outcome.upper[i] {
                x[i] += 1;
                break;
            }
            x[i] = outcome.lower[i];
        }
        if i == 0 && x == outcome.lower {
            break;
        }
    }
    let words = npoints.div_ceil(64);
    for r in &mut rejected {
        r.resize(words, 0);
    }

    let mut uncovered = vec![u64::MAX; words];
    if npoints % 64 != 0 {
        uncovered[words - 1] = (1u64 << (npoints % 64)) - 1;
    }
    let gain = |f: usize, unc: &[u64]| -> u32 {
        rejected[f]
            .iter()
            .zip(unc)
            .map(|(r, u)| (r & u).count_ones())
            .sum()
    };
    let mut chosen = Vec::new();
    while uncovered.iter().any(|&w| w != 0) {
        let best = (0..nforms)
            .map(|f| (gain(f, &uncovered), f))
            .max_by_key(|&(gn, f)| (gn, std::cmp::Reverse(f)));
        match best {
            Some((gn, f)) if gn > 0 => {
                for (u, r) in uncovered.iter_mut().zip(&rejected[f]) {
                    *u &= !r;
                }
                chosen.push(f);
            }
            // some point passes every form yet is not a solution
            _ => return Ok(None),
        }
    }

    // drop members made redundant by later picks
    let full = {
        let mut v = vec![u64::MAX; words];
        if npoints % 64 != 0 {
            v[words - 1] = (1u64 << (npoints % 64)) - 1;
        }
        v
    };
    let covers = |set: &[usize]| {
        let mut acc = vec![0u64; words];
        for &f in set {
            for (a, r) in acc.iter_mut().zip(&rejected[f]) {
                *a |= r;
            }
        }
        acc == full
    };
    let mut i = chosen.len();
    while i > 0 {
        i -= 1;
        let mut trial = chosen.clone();
        trial.remove(i);
        if covers(&trial) {
            chosen = trial;
        }
    }
    chosen.sort_unstable();
    Ok(Some(
        chosen.into_iter().map(|f| outcome.forms[f].clone()).collect(),
    ))
}

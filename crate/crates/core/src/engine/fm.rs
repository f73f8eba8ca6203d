//! Exact Fourier–Motzkin elimination over the rationals, used to derive a
//! bounding box for the integer search.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cyclo::Rational;

/// `Σ coeffs[i]·x_i + constant ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRow {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub lower: Rational,
    pub upper: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FmError {
    #[error("the system has no real solution")]
    Infeasible,
    #[error("variable {var} is unbounded")]
    Unbounded { var: usize },
    #[error("elimination exceeded the budget of {0} rows")]
    Budget(usize),
}

/// Internal row: primitive integer coefficients and a rational constant.
type Row = (Vec<BigInt>, Rational);

fn normalize(coeffs: Vec<Rational>, constant: Rational) -> Option<Row> {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|q| q.numer() * (&den / q.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let scale = Rational::new(den, g.clone());
    Some((ints.into_iter().map(|x| x / &g).collect(), constant * scale))
}

/// Merges rows with identical linear parts, keeping the tightest constant.
/// Errors if a constant-only row is violated.
struct RowSet {
    rows: HashMap<Vec<BigInt>, Rational>,
}

impl RowSet {
    fn new() -> Self {
        RowSet {
            rows: HashMap::new(),
        }
    }

    fn insert(&mut self, coeffs: Vec<Rational>, constant: Rational) -> Result<(), FmError> {
        match normalize(coeffs, constant.clone()) {
            None if constant.is_negative() => Err(FmError::Infeasible),
            None => Ok(()),
            Some((key, c)) => {
                self.rows
                    .entry(key)
                    .and_modify(|old| {
                        if c < *old {
                            *old = c.clone();
                        }
                    })
                    .or_insert(c);
                Ok(())
            }
        }
    }

    fn into_rows(self) -> Vec<Row> {
        let mut v: Vec<Row> = self.rows.into_iter().collect();
        v.sort();
        v
    }
}

fn to_rational(x: &BigInt) -> Rational {
    Rational::from_integer(x.clone())
}

fn eliminate(rows: &[Row], var: usize, budget: usize) -> Result<Vec<Row>, FmError> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), RowSet::new());
    for r in rows {
        if r.0[var].is_positive() {
            pos.push(r);
        } else if r.0[var].is_negative() {
            neg.push(r);
        } else {
            out.insert(r.0.iter().map(to_rational).collect(), r.1.clone())?;
        }
    }
    if pos.len() * neg.len() + out.rows.len() > budget {
        return Err(FmError::Budget(budget));
    }
    for p in &pos {
        for q in &neg {
            let fp = -&q.0[var];
            let fq = p.0[var].clone();
            let coeffs = p
                .0
                .iter()
                .zip(&q.0)
                .map(|(a, b)| to_rational(&(a * &fp + b * &fq)))
                .collect();
            let constant = &p.1 * to_rational(&fp) + &q.1 * to_rational(&fq);
            out.insert(coeffs, constant)?;
        }
    }
    Ok(out.into_rows())
}

fn bound_one(rows: &[Row], nvars: usize, target: usize, budget: usize) -> Result<Bound, FmError> {
    let mut rows = rows.to_vec();
    let mut remaining: Vec<usize> = (0..nvars).filter(|&v| v != target).collect();
    while !remaining.is_empty() {
        // eliminate the variable producing the fewest combinations first
        let (idx, _) = remaining
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let p = rows.iter().filter(|r| r.0[v].is_positive()).count();
                let n = rows.iter().filter(|r| r.0[v].is_negative()).count();
                (i, p * n)
            })
            .min_by_key(|&(_, cost)| cost)
            .unwrap();
        let v = remaining.remove(idx);
        rows = eliminate(&rows, v, budget)?;
    }
    let mut lower: Option<Rational> = None;
    let mut upper: Option<Rational> = None;
    for (c, b) in &rows {
        let a = to_rational(&c[target]);
        if a.is_positive() {
            let lo = -b / &a;
            if lower.as_ref().is_none_or(|x| lo > *x) {
                lower = Some(lo);
            }
        } else if a.is_negative() {
            let hi = b / -&a;
            if upper.as_ref().is_none_or(|x| hi < *x) {
                upper = Some(hi);
            }
        }
    }
    match (lower, upper) {
        (Some(lower), Some(upper)) if lower > upper => Err(FmError::Infeasible),
        (Some(lower), Some(upper)) => Ok(Bound { lower, upper }),
        _ => Err(FmError::Unbounded { var: target }),
    }
}

/// Tightest rational interval for every variable of the polyhedron
/// `{x : row(x) ≥ 0 for all rows}`, each obtained by eliminating all other
/// variables.
pub fn fm_bounds(rows: &[LinearRow], nvars: usize, budget: usize) -> Result<Vec<Bound>, FmError> {
    let mut set = RowSet::new();
    for r in rows {
        assert_eq!(r.coeffs.len(), nvars);
        set.insert(r.coeffs.clone(), r.constant.clone())?;
    }
    let base = set.into_rows();
    (0..nvars)
        .map(|v| bound_one(&base, nvars, v, budget))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(c: &[i64], b: i64) -> LinearRow {
        LinearRow {
            coeffs: c.iter().map(|&x| Rational::from_integer(x.into())).collect(),
            constant: Rational::from_integer(b.into()),
        }
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn triangle() {
        // x >= 0, y >= 0, x + 2y <= 4
        let rows = [row(&[1, 0], 0), row(&[0, 1], 0), row(&[-1, -2], 4)];
        let b = fm_bounds(&rows, 2, 1000).unwrap();
        assert_eq!(b[0], Bound { lower: q(0, 1), upper: q(4, 1) });
        assert_eq!(b[1], Bound { lower: q(0, 1), upper: q(2, 1) });
    }

    #[test]
    fn rational_bounds() {
        // 3x - 1 >= 0, -2x + 5 >= 0
        let rows = [row(&[3], -1), row(&[-2], 5)];
        let b = fm_bounds(&rows, 1, 10).unwrap();
        assert_eq!(b[0], Bound { lower: q(1, 3), upper: q(5, 2) });
    }

    #[test]
    fn infeasible_and_unbounded() {
        let rows = [row(&[1, 1], -5), row(&[-1, 0], 1), row(&[0, -1], 1)];
        assert_eq!(fm_bounds(&rows, 2, 100), Err(FmError::Infeasible));
        let rows = [row(&[1, 0], 0), row(&[0, 1], 0), row(&[0, -1], 3)];
        assert_eq!(fm_bounds(&rows, 2, 100), Err(FmError::Unbounded { var: 0 }));
        assert_eq!(fm_bounds(&[row(&[0], -1)], 1, 100), Err(FmError::Infeasible));
    }

    #[test]
    fn budget_is_enforced() {
        let mut rows = Vec::new();
        for i in 1..=6 {
            rows.push(row(&[1, i], 10));
            rows.push(row(&[-1, i], 10));
            rows.push(row(&[i, -1], 10));
            rows.push(row(&[-i, -1], 10));
        }
        assert_eq!(fm_bounds(&rows, 2, 20), Err(FmError::Budget(20)));
        assert!(fm_bounds(&rows, 2, 10_000).is_ok());
    }
}

//! Integer point enumeration for the μ-form system, after eliminating the last
//! partial augmentation through `Σ ν = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{AffineForm, EngineError};
use crate::cyclo::Rational;

/// How the integer search is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parallelism {
    Sequential,
    /// Splits the search on the first free variable across the rayon pool.
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Parallelism::Rayon
        }
        #[cfg(not(feature = "parallel"))]
        {
            Parallelism::Sequential
        }
    }
}

/// `Σ a_i·x_i + b ≥ 0` and `≡ 0 (mod modulus)` over the free variables.
#[derive(Debug, Clone)]
struct Row {
    a: Vec<i128>,
    b: i128,
    modulus: i128,
}

/// The forms rewritten over the free variables `ν_0 … ν_{n-2}`, with
/// `ν_{n-1} = 1 - Σ ν_i` substituted, as exact integer constraints.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    rows: Vec<Row>,
    nfree: usize,
}

fn to_i128(x: &BigInt) -> Result<i128, EngineError> {
    x.to_i128().ok_or(EngineError::Overflow)
}

/// Substituted rational linear part and constant of one form.
pub(crate) fn substitute(f: &AffineForm) -> (Vec<Rational>, Rational) {
    let c = f.coeffs();
    let n = c.len();
    let last = &c[n - 1];
    let a = c[..n - 1].iter().map(|x| x - last).collect();
    (a, f.constant() + last)
}

impl Compiled {
    pub(crate) fn new(forms: &[AffineForm], nvars: usize) -> Result<Self, EngineError> {
        assert!(nvars >= 1);
        let mut rows = Vec::with_capacity(forms.len());
        for f in forms {
            let (a, b) = substitute(f);
            let den = a
                .iter()
                .chain(std::iter::once(&b))
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let scale = |q: &Rational| to_i128(&(q.numer() * (&den / q.denom())));
            rows.push(Row {
                a: a.iter().map(scale).collect::<Result<_, _>>()?,
                b: scale(&b)?,
                modulus: to_i128(&(&den * BigInt::from(f.scale())))?,
            });
        }
        Ok(Compiled {
            rows,
            nfree: nvars - 1,
        })
    }

    fn row_holds(r: &Row, x: &[i64]) -> bool {
        let s = r.b + r.a.iter().zip(x).map(|(a, &v)| a * v as i128).sum::<i128>();
        s >= 0 && s % r.modulus == 0
    }

    /// Which rows hold at the free-variable point `x`.
    pub(crate) fn satisfied(&self, x: &[i64]) -> Vec<bool> {
        self.rows.iter().map(|r| Self::row_holds(r, x)).collect()
    }

    /// Every integer point in the box `lo ≤ x ≤ hi` satisfying all rows,
    /// returned as full vectors (last coordinate appended), in lexicographic
    /// order of the free coordinates.
    pub(crate) fn enumerate(
        &self,
        lo: &[i64],
        hi: &[i64],
        par: Parallelism,
    ) -> Result<Vec<Vec<i64>>, EngineError> {
        assert_eq!(lo.len(), self.nfree);
        assert_eq!(hi.len(), self.nfree);
        if lo.iter().zip(hi).any(|(l, h)| l > h) {
            return Ok(Vec::new());
        }
        let search = Search::new(self, lo, hi)?;
        if self.nfree == 0 {
            let mut out = Vec::new();
            if self.rows.iter().all(|r| Self::row_holds(r, &[])) {
                out.push(vec![1]);
            }
            return Ok(out);
        }
        let branch = |v0: i64| {
            let mut out = Vec::new();
            let mut x = vec![0; self.nfree];
            let mut partial: Vec<i128> = self.rows.iter().map(|r| r.b).collect();
            search.descend(0, v0, &mut x, &mut partial, &mut out);
            out
        };
        let parts: Vec<Vec<Vec<i64>>> = match par {
            Parallelism::Sequential => (lo[0]..=hi[0]).map(branch).collect(),
            #[cfg(feature = "parallel")]
            Parallelism::Rayon => (lo[0]..=hi[0]).into_par_iter().map(branch).collect(),
        };
        Ok(parts.into_iter().flatten().collect())
    }
}

struct Search<'a> {
    sys: &'a Compiled,
    lo: &'a [i64],
    hi: &'a [i64],
    /// `slack[i][j]`: the largest value the variables `i..` can add to row `j`.
    slack: Vec<Vec<i128>>,
}

impl<'a> Search<'a> {
    fn new(sys: &'a Compiled, lo: &'a [i64], hi: &'a [i64]) -> Result<Self, EngineError> {
        let n = sys.nfree;
        let mut slack = vec![vec![0i128; sys.rows.len()]; n + 1];
        for (j, r) in sys.rows.iter().enumerate() {
            // worst-case magnitude of any partial sum, to rule out overflow
            let mut mag = r.b.checked_abs().ok_or(EngineError::Overflow)?;
            for i in (0..n).rev() {
                let m = r.a[i]
                    .checked_abs()
                    .and_then(|a| a.checked_mul(lo[i].unsigned_abs().max(hi[i].unsigned_abs()) as i128))
                    .ok_or(EngineError::Overflow)?;
                mag = mag.checked_add(m).ok_or(EngineError::Overflow)?;
                let (x, y) = (r.a[i] * lo[i] as i128, r.a[i] * hi[i] as i128);
                slack[i][j] = slack[i + 1][j] + x.max(y);
            }
            if mag > i128::MAX / 4 {
                return Err(EngineError::Overflow);
            }
        }
        Ok(Search { sys, lo, hi, slack })
    }

    fn descend(
        &self,
        depth: usize,
        value: i64,
        x: &mut [i64],
        partial: &mut [i128],
        out: &mut Vec<Vec<i64>>,
    ) {
        x[depth] = value;
        let rows = &self.sys.rows;
        for (p, r) in partial.iter_mut().zip(rows) {
            *p += r.a[depth] * value as i128;
        }
        let next = depth + 1;
        let feasible = partial
            .iter()
            .zip(&self.slack[next])
            .all(|(p, s)| p + s >= 0);
        if feasible {
            if next == self.sys.nfree {
                if partial.iter().zip(rows).all(|(p, r)| p % r.modulus == 0) {
                    let mut v = x.to_vec();
                    v.push(1 - x.iter().sum::<i64>());
                    out.push(v);
                }
            } else {
                for v in self.lo[next]..=self.hi[next] {
                    self.descend(next, v, x, partial, out);
                }
            }
        }
        for (p, r) in partial.iter_mut().zip(rows) {
            *p -= r.a[depth] * value as i128;
        }
    }
}

//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A [`Cyclotomic`] is a sparse rational combination of powers of
//! `ζ_n = e^{2πi/n}`. Operands of different orders are lifted to the least
//! common multiple of their orders before combining. Equality is decided on
//! the representative reduced modulo the `n`-th cyclotomic polynomial, so two
//! values are equal exactly when they are the same field element.

mod arith;
mod literal;
mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use arith::{divisors, factorize, is_prime, moebius, phi, prime_divisors, ramanujan};
pub use literal::{format_rational, LiteralError};
pub use poly::cyclotomic_polynomial;

use arith::reduce_exponent;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("galois exponent {a} is not a unit modulo {order}")]
    NotAUnit { a: i64, order: u64 },
    #[error("value of order {order} does not lie in Q(zeta_{m})")]
    NotInSubfield { order: u64, m: u64 },
    #[error("subfield order {m} does not divide representation order {order}")]
    OrderMismatch { m: u64, order: u64 },
    #[error("root order must be positive")]
    ZeroOrder,
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    terms: BTreeMap<u64, Rational>,
}

impl Cyclotomic {
    /// Builds `Σ coeff·ζ_order^exponent`, reducing exponents and merging
    /// like terms. Zero coefficients are dropped.
    pub fn new<I>(order: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut map: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(reduce_exponent(e, order))
                .or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Cyclotomic { order, terms: map }
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(order: u64, terms: &[(i64, i64)]) -> Self {
        Self::new(
            order,
            terms
                .iter()
                .map(|&(e, c)| (e, Rational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(1, [(0, q)])
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `ζ_order^exponent`.
    pub fn root(order: u64, exponent: i64) -> Self {
        Self::new(order, [(exponent, Rational::one())])
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Stored `(exponent, coefficient)` pairs, exponents ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Re-expresses the value over `ζ_n`; `n` must be a multiple of the
    /// current order.
    pub fn lift(&self, n: u64) -> Self {
        assert!(
            n % self.order == 0,
            "cannot lift order {} to {}",
            self.order,
            n
        );
        if n == self.order {
            return self.clone();
        }
        let f = n / self.order;
        Cyclotomic {
            order: n,
            terms: self.terms.iter().map(|(&e, c)| (e * f, c.clone())).collect(),
        }
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        let n = self.order.lcm(&other.order);
        (self.lift(n), other.lift(n))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Cyclotomic {
                order: self.order,
                terms: BTreeMap::new(),
            };
        }
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|(&e, c)| (e, c * q)).collect(),
        }
    }

    /// Applies the automorphism `ζ_n ↦ ζ_n^a`.
    pub fn galois(&self, a: i64) -> Result<Self, CycloError> {
        if (a.unsigned_abs()).gcd(&self.order) != 1 && self.order > 1 {
            return Err(CycloError::NotAUnit {
                a,
                order: self.order,
            });
        }
        let n = self.order;
        Ok(Self::new(
            n,
            self.terms
                .iter()
                .map(|(&e, c)| (reduce_exponent(e as i64, n) as i64 * a.rem_euclid(n as i64), c.clone())),
        ))
    }

    /// The representative reduced modulo `Φ_n`, at the same order `n`.
    pub fn canonical(&self) -> Self {
        let n = self.order;
        if self.terms.keys().all(|&e| e < phi(n)) {
            return self.clone();
        }
        let top = *self.terms.keys().next_back().unwrap() as usize;
        let mut dense = vec![Rational::zero(); top + 1];
        for (&e, c) in &self.terms {
            dense[e as usize] = c.clone();
        }
        poly::reduce_mod_cyclotomic(&mut dense, n);
        Self::new(
            n,
            dense
                .into_iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().terms.is_empty()
    }

    /// The rational value, if this element is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        let c = self.canonical();
        match c.terms.len() {
            0 => Some(Rational::zero()),
            1 => c.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Whether the element lies in `Q(ζ_m)`.
    pub fn lies_in(&self, m: u64) -> bool {
        if m == 0 {
            return false;
        }
        if m % self.order == 0 {
            return true;
        }
        let n = self.order.lcm(&m);
        let x = self.lift(n).canonical();
        (1..n)
            .step_by(m as usize)
            .filter(|a| a.gcd(&n) == 1 && *a != 1)
            .all(|a| x.galois(a as i64).map(|y| y.canonical().terms == x.terms).unwrap_or(false))
    }

    /// Trace from `Q(ζ_m)` down to `Q`.
    ///
    /// The element is lifted to `N = lcm(order, m)`; membership in `Q(ζ_m)` is
    /// verified against the Galois group of `Q(ζ_N)/Q(ζ_m)`, and the result
    /// is `φ(m)/φ(N) · Σ coeff·c_N(exponent)`.
    pub fn trace_over(&self, m: u64) -> Result<Rational, CycloError> {
        if m == 0 {
            return Err(CycloError::ZeroOrder);
        }
        if !self.lies_in(m) {
            return Err(CycloError::NotInSubfield {
                order: self.order,
                m,
            });
        }
        let n = self.order.lcm(&m);
        Ok(self.lift(n).full_trace() * Rational::new(BigInt::from(phi(m)), BigInt::from(phi(n))))
    }

    /// Trace from `Q(ζ_order)` to `Q` of the stored representative.
    pub fn full_trace(&self) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&e, c)| {
            acc + c * Rational::from_integer(BigInt::from(ramanujan(self.order, e as i64)))
        })
    }

    /// Complex value, for test oracles and diagnostics only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.order as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (&e, c)| {
            let t = std::f64::consts::TAU * e as f64 / n;
            let c = c.to_f64().unwrap_or(f64::NAN);
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.lifted_pair(other);
        a.canonical().terms == b.canonical().terms
    }
}

impl Eq for Cyclotomic {}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.lifted_pair(rhs);
        Cyclotomic::new(
            a.order,
            a.terms
                .into_iter()
                .chain(b.terms)
                .map(|(e, c)| (e as i64, c)),
        )
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.lifted_pair(rhs);
        let n = a.order;
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (&ea, ca) in &a.terms {
            for (&eb, cb) in &b.terms {
                terms.push((((ea + eb) % n) as i64, ca * cb));
            }
        }
        Cyclotomic::new(n, terms)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl fmt::Display for Cyclotomic {
    /// Renders as a signed sum such as `-z9^4 - z9^5`; exponent 0 is the
    /// constant term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{}", format_rational(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            write!(f, "z{}", self.order)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn make_merges_and_reduces() {
        let d = Cyclotomic::from_int_terms(9, &[(4, -1), (5, -1)]);
        assert_eq!(d.terms().count(), 2);
        assert!(Cyclotomic::from_int_terms(9, &[(2, 1), (2, -1)]).is_zero());
        assert_eq!(
            Cyclotomic::from_int_terms(7, &[(10, 1)]),
            Cyclotomic::from_int_terms(7, &[(3, 1)])
        );
        assert_eq!(
            Cyclotomic::from_int_terms(7, &[(-4, 1)]).terms().next().unwrap().0,
            3
        );
    }

    #[test]
    fn ring_operations() {
        let prod = &Cyclotomic::root(9, 2) * &Cyclotomic::root(9, 7);
        assert_eq!(prod, Cyclotomic::one());
        let a = Cyclotomic::from_int_terms(7, &[(3, 1), (4, 1)]);
        let b = Cyclotomic::from_int_terms(7, &[(2, 1), (5, 1)]);
        let c = Cyclotomic::from_int_terms(7, &[(1, 1), (6, 1)]);
        assert_eq!(&(&a + &b) + &c, Cyclotomic::from_integer(-1));
        let d = Cyclotomic::from_int_terms(9, &[(4, -1), (5, -1)]);
        assert_eq!(d.scale(&q(-1)), Cyclotomic::from_int_terms(9, &[(4, 1), (5, 1)]));
    }

    #[test]
    fn mixed_orders_lift_to_lcm() {
        let s = &Cyclotomic::root(4, 1) + &Cyclotomic::root(6, 1);
        assert_eq!(s.order(), 12);
        // i * i = -1
        let sq = &Cyclotomic::root(4, 1) * &Cyclotomic::root(4, 1);
        assert_eq!(sq.to_rational(), Some(q(-1)));
        // ζ_8^2 is i
        assert_eq!(Cyclotomic::root(8, 2), Cyclotomic::root(4, 1));
    }

    #[test]
    fn galois_action() {
        let x = Cyclotomic::from_int_terms(9, &[(2, 1), (7, 1)]);
        assert_eq!(
            x.galois(2).unwrap(),
            Cyclotomic::from_int_terms(9, &[(4, 1), (5, 1)])
        );
        assert_eq!(x.galois(1).unwrap(), x);
        assert_eq!(Cyclotomic::root(7, 1).galois(6).unwrap(), Cyclotomic::root(7, 6));
        assert_eq!(
            x.galois(3),
            Err(CycloError::NotAUnit { a: 3, order: 9 })
        );
        assert!(Cyclotomic::from_integer(4).galois(2).is_ok());
    }

    #[test]
    fn canonical_forms() {
        let all: Vec<(i64, i64)> = (0..7).map(|e| (e, 1)).collect();
        assert!(Cyclotomic::from_int_terms(7, &all).canonical().terms().next().is_none());
        let d = Cyclotomic::from_int_terms(9, &[(4, -1), (5, -1)]);
        let e = Cyclotomic::from_int_terms(9, &[(2, -1), (7, -1)]);
        let f = Cyclotomic::from_int_terms(9, &[(2, 1), (4, 1), (5, 1), (7, 1)]);
        assert_eq!(f.canonical().terms, (-(&d + &e)).canonical().terms);
        let five = Cyclotomic::from_integer(5).lift(12).canonical();
        assert_eq!(five.terms().collect::<Vec<_>>(), vec![(0, &q(5))]);
    }

    #[test]
    fn traces() {
        let x = Cyclotomic::from_int_terms(7, &[(3, 1), (4, 1)]);
        assert_eq!(x.trace_over(7).unwrap(), q(-2));
        assert_eq!(Cyclotomic::one().trace_over(9).unwrap(), q(6));
        let d = Cyclotomic::from_int_terms(9, &[(4, -1), (5, -1)]);
        assert_eq!(d.trace_over(9).unwrap(), q(0));
        // ζ_9 + ζ_9^8 lies in Q(ζ_9) but not in Q(ζ_3)
        let r = Cyclotomic::from_int_terms(9, &[(1, 1), (8, 1)]);
        assert!(matches!(
            r.trace_over(3),
            Err(CycloError::NotInSubfield { .. })
        ));
        // i = ζ_8^2 lies in Q(ζ_4)
        assert_eq!(Cyclotomic::root(8, 2).trace_over(4).unwrap(), q(0));
        assert_eq!(Cyclotomic::root(6, 3).trace_over(2).unwrap(), q(-1));
    }

    #[test]
    fn display() {
        let d = Cyclotomic::from_int_terms(9, &[(4, -1), (5, -1)]);
        assert_eq!(d.to_string(), "-z9^4 - z9^5");
        assert_eq!(Cyclotomic::from_integer(-3).to_string(), "-3");
        let x = Cyclotomic::new(8, [(0, q(1)), (1, Rational::new(1.into(), 2.into()))]);
        assert_eq!(x.to_string(), "1 + 1/2*z8");
    }
}

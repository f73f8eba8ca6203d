//! Cyclotomic polynomials and reduction of dense rational polynomials
//! modulo them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::arith::divisors;

type PolyCache = RwLock<HashMap<u64, Arc<Vec<BigInt>>>>;

fn cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Φ_d`; every division is by a
/// monic integer polynomial, so the quotient stays integral.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1);
    if let Some(p) = cache().read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        num = exact_monic_division(&num, &div);
    }
    let poly = Arc::new(num);
    cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&poly));
    poly
}

fn exact_monic_division(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    let dn = div.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in div.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Reduces `coeffs` (lowest degree first) modulo `Φ_n` in place and truncates
/// the result to degree below `φ(n)`.
pub fn reduce_mod_cyclotomic(coeffs: &mut Vec<BigRational>, n: u64) {
    let phi_n = cyclotomic_polynomial(n);
    let deg = phi_n.len() - 1;
    for top in (deg..coeffs.len()).rev() {
        let c = std::mem::replace(&mut coeffs[top], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        let shift = top - deg;
        for (j, pj) in phi_n.iter().enumerate().take(deg) {
            if !pj.is_zero() {
                coeffs[shift + j] -= &c * BigRational::from_integer(pj.clone());
            }
        }
    }
    coeffs.truncate(deg);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(7)), vec![1; 7]);
        assert_eq!(ints(&cyclotomic_polynomial(9)), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_polynomial(105);
        assert_eq!(p.len() - 1, 48);
        assert!(p.iter().any(|c| *c == BigInt::from(-2)));
    }
}

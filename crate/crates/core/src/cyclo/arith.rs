//! Elementary number theory on machine integers: factorization, divisors,
//! Euler's totient, the Möbius function and Ramanujan sums.

use num_integer::Integer;

/// Prime factorization of `n` as `(prime, exponent)` pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// All positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    assert!(n >= 1, "phi is defined for n >= 1");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ramanujan sum `c_m(j)`: the sum of `ζ_m^{aj}` over `a` coprime to `m`,
/// i.e. the trace of `ζ_m^j` from `Q(ζ_m)` down to `Q`.
pub fn ramanujan(m: u64, j: i64) -> i64 {
    assert!(m >= 1, "ramanujan sums are defined for m >= 1");
    let r = j.rem_euclid(m as i64) as u64;
    let g = r.gcd(&m);
    let q = m / g;
    i64::from(moebius(q)) * (phi(m) / phi(q)) as i64
}

/// Reduces `e` modulo `n` into `0..n`.
pub(crate) fn reduce_exponent(e: i64, n: u64) -> u64 {
    e.rem_euclid(n as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_values() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(9), 6);
        assert_eq!(phi(17), 16);
        assert_eq!(phi(1224), 384);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(9), 0);
        assert_eq!(moebius(7), -1);
        assert_eq!(moebius(6), 1);
    }

    #[test]
    fn divisors_of_exponents() {
        assert_eq!(
            divisors(126),
            vec![1, 2, 3, 6, 7, 9, 14, 18, 21, 42, 63, 126]
        );
        assert_eq!(divisors(1224).len(), 24);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn ramanujan_closed_form() {
        assert_eq!(ramanujan(9, 1), 0);
        assert_eq!(ramanujan(9, 0), 6);
        assert_eq!(ramanujan(7, 3), -1);
        assert_eq!(ramanujan(1, 5), 1);
        assert_eq!(ramanujan(6, -3), -2);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1224), vec![(2, 3), (3, 2), (17, 1)]);
        assert!(factorize(1).is_empty());
        assert!(is_prime(17));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
    }
}

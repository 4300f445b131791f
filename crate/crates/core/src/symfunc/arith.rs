//! Number-theoretic helpers: Möbius function, divisors, Bernoulli numbers,
//! binomial coefficients with integer (possibly negative) upper argument.

use std::sync::{OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{usage, Result};
use crate::series::{Q, Z};

/// Möbius function; `moebius(0)` is a usage error.
pub fn moebius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(usage!("the Möbius function is defined for n ≥ 1"));
    }
    Ok(mu(n))
}

/// Möbius function for `n ≥ 1`.
pub fn mu(n: u64) -> i8 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `binom(e, j)` for integer `e` of either sign, via the falling factorial.
pub fn binomial(e: i64, j: u64) -> Z {
    let mut num = Z::one();
    let mut den = Z::one();
    for i in 0..j {
        num *= Z::from(e) - Z::from(i);
        den *= Z::from(i + 1);
    }
    num / den
}

/// `n!`.
pub fn factorial(n: u64) -> Z {
    (1..=n).fold(Z::one(), |acc, k| acc * Z::from(k))
}

fn bernoulli_cache() -> &'static RwLock<Vec<Q>> {
    static CACHE: OnceLock<RwLock<Vec<Q>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Q::one()]))
}

/// Bernoulli numbers `B_0 … B_n` with `B_1 = -1/2`, from the recurrence
/// `Σ_{k≤m} binom(m+1, k) B_k = 0`. Results are cached process-wide.
pub fn bernoulli_table(n: usize) -> Vec<Q> {
    {
        let cache = bernoulli_cache().read().expect("bernoulli cache poisoned");
        if cache.len() > n {
            return cache[..=n].to_vec();
        }
    }
    let mut cache = bernoulli_cache().write().expect("bernoulli cache poisoned");
    while cache.len() <= n {
        let m = cache.len();
        // B_m = -1/(m+1) Σ_{k<m} binom(m+1, k) B_k
        let mut s = Q::zero();
        let mut b = Z::one(); // binom(m+1, k), starting at k = 0
        for (k, bk) in cache.iter().enumerate() {
            if !bk.is_zero() {
                s += Q::from_integer(b.clone()) * bk;
            }
            b = b * Z::from(m + 1 - k) / Z::from(k + 1);
        }
        let next = -s / Q::from_integer(Z::from(m + 1));
        cache.push(next);
    }
    cache[..=n].to_vec()
}

/// The Bernoulli number `B_j` (`B_1 = -1/2`).
pub fn bernoulli(j: usize) -> Q {
    bernoulli_table(j).pop().expect("nonempty table")
}

/// Least common multiple of `1..=n` style helper: `lcm(a, b)`.
pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Largest proper divisor `d` of `ℓ` with `μ(ℓ/d) ≠ 0`; `None` for `ℓ = 1`.
///
/// `ℓ - largest_mobius_divisor(ℓ)` is the exact `ħ`-valuation of the
/// off-diagonal part of `ℓħ^ℓ Z_ℓ`.
pub fn largest_moebius_divisor(l: u64) -> Option<u64> {
    divisors(l)
        .into_iter()
        .rev()
        .find(|&d| d != l && mu(l / d) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q, qr};

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(4).unwrap(), 0);
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(30).unwrap(), -1);
        assert!(moebius(0).is_err());
    }

    #[test]
    fn moebius_divisor_sums() {
        for n in 1..=200u64 {
            let s: i64 = divisors(n).into_iter().map(|d| mu(d) as i64).sum();
            assert_eq!(s, (n == 1) as i64, "n = {n}");
        }
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_table(12);
        assert_eq!(b[0], q(1));
        assert_eq!(b[1], qr(-1, 2));
        assert_eq!(b[2], qr(1, 6));
        assert_eq!(b[3], q(0));
        assert_eq!(b[4], qr(-1, 30));
        assert_eq!(b[12], qr(-691, 2730));
        assert_eq!(bernoulli(3), q(0));
    }

    #[test]
    fn binomials_with_negative_top() {
        assert_eq!(binomial(-1, 3), Z::from(-1));
        assert_eq!(binomial(-2, 2), Z::from(3));
        assert_eq!(binomial(5, 2), Z::from(10));
        assert_eq!(binomial(2, 5), Z::from(0));
        assert_eq!(binomial(7, 0), Z::from(1));
    }

    #[test]
    fn valuation_divisor() {
        assert_eq!(largest_moebius_divisor(1), None);
        assert_eq!(largest_moebius_divisor(4), Some(2));
        assert_eq!(largest_moebius_divisor(12), Some(6));
        assert_eq!(largest_moebius_divisor(9), Some(3));
        assert_eq!(largest_moebius_divisor(7), Some(1));
    }
}

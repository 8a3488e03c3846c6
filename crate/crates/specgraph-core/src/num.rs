//! Small integer helpers used throughout the crate.
//!
//! Everything here operates on `u64` and is written for the value ranges
//! that finite modules produce (orders and exponents far below `2^32`),
//! so plain trial division is more than fast enough.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization as `(prime, multiplicity)` pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn distinct_primes(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Product of the distinct primes of `n`; `radical(0) = 0`, `radical(1) = 1`.
pub fn radical(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    distinct_primes(n).into_iter().product::<u64>().max(1)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == alloc::vec![(n, 1)]
}

/// All divisors of `n > 0`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    debug_assert!(n > 0);
    let mut out = alloc::vec![1u64];
    for (p, k) in factorize(n) {
        let prev = out.clone();
        let mut pw = 1u64;
        for _ in 0..k {
            pw *= p;
            out.extend(prev.iter().map(|d| d * pw));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(12, 30), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(0, 6), 0);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), alloc::vec![]);
        assert_eq!(factorize(12), alloc::vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), alloc::vec![(97, 1)]);
        assert_eq!(radical(12), 6);
        assert_eq!(radical(30), 30);
        assert_eq!(radical(1), 1);
        assert_eq!(radical(0), 0);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), alloc::vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), alloc::vec![1]);
        assert_eq!(divisors(30).len(), 8);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (2..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, alloc::vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }
}

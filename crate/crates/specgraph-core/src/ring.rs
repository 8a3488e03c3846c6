//! The coefficient rings: `Z` and `Z/N`.
//!
//! Both are principal ideal rings, so an ideal is stored as a single
//! normalized generator. Over `Z` the generator is any `d >= 0` (0 is the
//! zero ideal). Over `Z/N` generators are reduced to divisors of `N` via
//! gcd, which maps the zero ideal to `N` and the whole ring to `1`.

use crate::num;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ring {
    modulus: u64,
}

impl Ring {
    /// `modulus = 0` gives `Z`; `modulus >= 2` gives `Z/modulus`.
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 1 {
            return Err(Error::ModulusOne);
        }
        Ok(Ring { modulus })
    }

    pub fn integers() -> Self {
        Ring { modulus: 0 }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_z(&self) -> bool {
        self.modulus == 0
    }

    /// Reduce an arbitrary generator to the canonical one.
    pub fn normalize_gen(&self, d: u64) -> u64 {
        if self.modulus == 0 {
            d
        } else {
            num::gcd(d, self.modulus)
        }
    }

    /// Does `aR` contain `bR`? Equivalent to `a | b` after normalization
    /// (with the usual convention that everything divides 0).
    pub fn ideal_contains(&self, a: u64, b: u64) -> bool {
        let a = self.normalize_gen(a);
        let b = self.normalize_gen(b);
        if a == 0 {
            b == 0
        } else {
            b.is_multiple_of(a)
        }
    }

    pub fn ideal_sum(&self, a: u64, b: u64) -> u64 {
        self.normalize_gen(num::gcd(self.normalize_gen(a), self.normalize_gen(b)))
    }

    pub fn ideal_intersection(&self, a: u64, b: u64) -> u64 {
        self.normalize_gen(num::lcm(self.normalize_gen(a), self.normalize_gen(b)))
    }

    pub fn ideal_product(&self, a: u64, b: u64) -> u64 {
        let a = self.normalize_gen(a);
        let b = self.normalize_gen(b);
        if self.modulus == 0 {
            a.saturating_mul(b)
        } else {
            self.normalize_gen(a.wrapping_mul(b) % self.modulus)
        }
    }

    /// Generator of the nilradical (= Jacobson radical for `Z/N`).
    pub fn nil_radical_gen(&self) -> u64 {
        if self.modulus == 0 {
            0
        } else {
            num::radical(self.modulus)
        }
    }

    pub fn krull_dim(&self) -> u32 {
        if self.modulus == 0 {
            1
        } else {
            0
        }
    }

    /// Modulus of the quotient ring `R/dR`: `Z/d` in both cases
    /// (with `d = 0` meaning `Z` itself).
    pub fn quotient_modulus(&self, d: u64) -> u64 {
        self.normalize_gen(d)
    }

    /// Generators of the maximal ideals: the prime divisors of the
    /// characteristic data. For `Z` that is every prime up to a caller
    /// bound, so we expose only the `Z/N` case plus a filtered variant.
    pub fn maximal_ideal_gens_dividing(&self, n: u64) -> Vec<u64> {
        // Maximal ideals pR that contain nR, i.e. p | n (over Z/N also p | N).
        let pool = if self.modulus == 0 { n } else { num::gcd(n, self.modulus) };
        if pool == 0 {
            return Vec::new();
        }
        num::distinct_primes(pool)
    }
}

/// Does `Z/m` contain an idempotent other than 0 and 1?
/// True exactly when `m` has at least two distinct prime factors.
/// `m = 0` is `Z` (none) and `m = 1` is the zero ring (none).
pub fn has_nontrivial_idempotents(m: u64) -> bool {
    m >= 2 && num::distinct_primes(m).len() >= 2
}

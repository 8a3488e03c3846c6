//! Finite modules in invariant factor form.
//!
//! A module is `Z/d1 x Z/d2 x ... x Z/dk` with `2 <= d1 | d2 | ... | dk`,
//! viewed over `Z` or over `Z/N` (which requires `dk | N`). The empty list
//! is the zero module. Elements are addressed by a single index laid out
//! in mixed radix with the first coordinate most significant, so index
//! order coincides with lexicographic order on coordinate tuples.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::num;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinModule {
    ring: Ring,
    factors: Vec<u64>,
    order: u64,
}

impl FinModule {
    pub fn new(ring: Ring, factors: &[u64]) -> Result<Self> {
        let mut order: u64 = 1;
        for (i, &d) in factors.iter().enumerate() {
            if d < 2 {
                return Err(Error::FactorTooSmall { factor: d });
            }
            if i > 0 && d % factors[i - 1] != 0 {
                return Err(Error::ChainBroken { left: factors[i - 1], right: d });
            }
            if !ring.is_z() && !ring.modulus().is_multiple_of(d) {
                return Err(Error::FactorNotDividingModulus { factor: d, modulus: ring.modulus() });
            }
            order = order.saturating_mul(d);
        }
        Ok(FinModule { ring, factors: factors.to_vec(), order })
    }

    /// The cyclic module `Z/n` (or the zero module for `n = 1`).
    pub fn cyclic(ring: Ring, n: u64) -> Result<Self> {
        if n == 1 {
            FinModule::new(ring, &[])
        } else {
            FinModule::new(ring, &[n])
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    /// Smallest `e >= 1` with `e * M = 0`; this is the last invariant factor.
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// Canonical generator of the annihilator ideal `Ann(M) = exponent * R`.
    pub fn annihilator_gen(&self) -> u64 {
        self.ring.normalize_gen(self.exponent())
    }

    /// Faithful means `Ann(M) = 0`; over `Z/N` that is `exponent = N`.
    pub fn is_faithful(&self) -> bool {
        self.annihilator_gen() == self.ring.normalize_gen(0)
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Semisimple finite modules are exactly those of squarefree exponent.
    pub fn is_semisimple(&self) -> bool {
        let e = self.exponent();
        num::radical(e) == e
    }

    pub fn decode(&self, idx: u32) -> Vec<u64> {
        debug_assert!((idx as u64) < self.order);
        let mut coords = alloc::vec![0u64; self.factors.len()];
        let mut rest = idx as u64;
        for i in (0..self.factors.len()).rev() {
            coords[i] = rest % self.factors[i];
            rest /= self.factors[i];
        }
        coords
    }

    pub fn encode(&self, coords: &[u64]) -> u32 {
        debug_assert_eq!(coords.len(), self.factors.len());
        let mut idx: u64 = 0;
        for (i, &c) in coords.iter().enumerate() {
            debug_assert!(c < self.factors[i]);
            idx = idx * self.factors[i] + c;
        }
        idx as u32
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        let a = self.decode(x);
        let b = self.decode(y);
        let sum: Vec<u64> = a
            .iter()
            .zip(b.iter())
            .zip(self.factors.iter())
            .map(|((&u, &v), &d)| (u + v) % d)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, x: u32) -> u32 {
        let a = self.decode(x);
        let n: Vec<u64> = a
            .iter()
            .zip(self.factors.iter())
            .map(|(&u, &d)| (d - u) % d)
            .collect();
        self.encode(&n)
    }

    /// Scalar action; the scalar is a plain integer, which matches the
    /// `Z/N` action because every factor divides `N`.
    pub fn smul(&self, r: u64, x: u32) -> u32 {
        let a = self.decode(x);
        let s: Vec<u64> = a
            .iter()
            .zip(self.factors.iter())
            .map(|(&u, &d)| (u % d) * (r % d) % d)
            .collect();
        self.encode(&s)
    }

    /// Additive order of an element.
    pub fn element_order(&self, x: u32) -> u64 {
        let a = self.decode(x);
        let mut ord = 1;
        for (&u, &d) in a.iter().zip(self.factors.iter()) {
            ord = num::lcm(ord, d / num::gcd(u, d));
        }
        ord
    }
}

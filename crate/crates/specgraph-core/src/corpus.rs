//! Deterministic generation of the verification corpus: every finite
//! abelian group up to a given order and rank, each acted on by a few
//! rings (the integers, the integers modulo the exponent, and modulo
//! twice the exponent for a non-faithful action).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Result;
use crate::module::FinModule;
use crate::num;
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusParams {
    pub max_order: u64,
    pub max_rank: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams { max_order: 200, max_rank: 3 }
    }
}

/// A module description that can be rebuilt independently of any run:
/// ring modulus (0 for the integers) plus invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModuleDesc {
    pub ring_modulus: u64,
    pub factors: Vec<u64>,
}

impl ModuleDesc {
    pub fn build(&self) -> Result<FinModule> {
        let ring = if self.ring_modulus == 0 {
            Ring::integers()
        } else {
            Ring::new(self.ring_modulus)?
        };
        FinModule::new(ring, &self.factors)
    }

    /// Stable instance key, e.g. `r0:2.6` for Z/2 + Z/6 over Z.
    pub fn key(&self) -> String {
        let fs: Vec<String> = self.factors.iter().map(|d| d.to_string()).collect();
        format!("r{}:{}", self.ring_modulus, fs.join("."))
    }
}

/// Ascending divisibility chains d1 | d2 | ... with product `n`, every
/// factor at least 2, at most `max_rank` factors, in lexicographic
/// order.
fn chains(n: u64, max_rank: usize) -> Vec<Vec<u64>> {
    fn rec(rest: u64, min: u64, slots: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 1 {
            if !acc.is_empty() {
                out.push(acc.clone());
            }
            return;
        }
        if slots == 0 {
            return;
        }
        for d in num::divisors(rest) {
            if d >= 2 && d >= min && d % min == 0 {
                acc.push(d);
                rec(rest / d, d, slots - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 1, max_rank, &mut Vec::new(), &mut out);
    out
}

/// The full corpus in its canonical order: group order ascending,
/// chains lexicographic, then the three ring actions.
pub fn corpus_modules(params: &CorpusParams) -> Vec<ModuleDesc> {
    let mut out = Vec::new();
    for n in 2..=params.max_order {
        for chain in chains(n, params.max_rank) {
            let e = *chain.last().unwrap();
            for modulus in [0, e, 2 * e] {
                out.push(ModuleDesc { ring_modulus: modulus, factors: chain.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_of_small_orders() {
        assert_eq!(chains(12, 3), alloc::vec![alloc::vec![2, 6], alloc::vec![12]]);
        assert_eq!(
            chains(8, 3),
            alloc::vec![alloc::vec![2, 2, 2], alloc::vec![2, 4], alloc::vec![8]]
        );
        assert_eq!(chains(7, 3), alloc::vec![alloc::vec![7]]);
        // Rank cap drops the longest chain.
        assert_eq!(chains(8, 2), alloc::vec![alloc::vec![2, 4], alloc::vec![8]]);
    }

    #[test]
    fn chain_products_and_divisibility() {
        for n in 2..=60 {
            for c in chains(n, 3) {
                assert_eq!(c.iter().product::<u64>(), n);
                assert!(c.windows(2).all(|w| w[1] % w[0] == 0));
                assert!(c.iter().all(|&d| d >= 2));
            }
        }
    }

    #[test]
    fn corpus_is_deterministic_and_buildable() {
        let params = CorpusParams { max_order: 24, max_rank: 3 };
        let a = corpus_modules(&params);
        let b = corpus_modules(&params);
        assert_eq!(a, b);
        for d in &a {
            let m = d.build().unwrap();
            assert!(m.order() <= 24);
        }
        // Keys are unique.
        let mut keys: Vec<String> = a.iter().map(|d| d.key()).collect();
        keys.sort();
        let before = keys.len();
        keys.dedup();
        assert_eq!(keys.len(), before);
    }

    #[test]
    fn ring_choices_cover_faithful_and_not() {
        let params = CorpusParams { max_order: 6, max_rank: 1 };
        let mods = corpus_modules(&params);
        // For each chain: Z, Z/e, Z/2e in that order.
        assert_eq!(mods[0], ModuleDesc { ring_modulus: 0, factors: alloc::vec![2] });
        assert_eq!(mods[1], ModuleDesc { ring_modulus: 2, factors: alloc::vec![2] });
        assert_eq!(mods[2], ModuleDesc { ring_modulus: 4, factors: alloc::vec![2] });
        assert!(mods[1].build().unwrap().is_faithful());
        assert!(!mods[2].build().unwrap().is_faithful());
    }
}

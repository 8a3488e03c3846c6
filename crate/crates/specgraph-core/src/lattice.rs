//! Full submodule lattice of a finite module.
//!
//! Every subgroup is a join of cyclic subgroups, so a breadth-first
//! closure starting at 0 and extending by one generator at a time finds
//! them all. Results are kept in the canonical order (cardinality, then
//! element list), and a submodule's position in that order is the stable
//! id used by graphs, reports and the CLI.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::submodule::Submodule;

/// Enumeration refuses modules larger than this unless the caller raises
/// the limit explicitly.
pub const DEFAULT_MAX_ORDER: u64 = 4096;

#[derive(Debug, Clone)]
pub struct Lattice {
    module: FinModule,
    subs: Vec<Submodule>,
    colon: Vec<u64>,
    maximal: Vec<u32>,
    prime: Vec<u32>,
}

impl Lattice {
    pub fn enumerate(module: &FinModule, max_order: u64) -> Result<Self> {
        if module.order() > max_order {
            return Err(Error::BoundExceeded { order: module.order(), max: max_order });
        }
        let order = module.order() as u32;
        // Breadth-first closure over subgroups held as bitmasks; the
        // addition table turns the inner coset loop into array lookups.
        // For oversized modules (possible when the caller raises the
        // bound) fall back to computing sums on the fly.
        let words = (order as usize).div_ceil(64);
        let add_table: Option<Vec<u32>> = (order <= 512).then(|| {
            let mut t = alloc::vec![0u32; order as usize * order as usize];
            for x in 0..order {
                for y in x..order {
                    let s = module.add(x, y);
                    t[(x * order + y) as usize] = s;
                    t[(y * order + x) as usize] = s;
                }
            }
            t
        });
        let add = |x: u32, y: u32| match &add_table {
            Some(t) => t[(x * order + y) as usize],
            None => module.add(x, y),
        };
        let has = |mask: &[u64], x: u32| mask[x as usize / 64] >> (x % 64) & 1 == 1;
        let mut zero_mask = alloc::vec![0u64; words];
        zero_mask[0] = 1;
        let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
        found.insert(zero_mask.clone());
        let mut queue = alloc::vec![zero_mask];
        while let Some(h) = queue.pop() {
            let h_elems: Vec<u32> = (0..order).filter(|&x| has(&h, x)).collect();
            for g in 1..order {
                if has(&h, g) {
                    continue;
                }
                let mut bigger = h.clone();
                // Union of cosets H + j*g until a multiple lands in H.
                let mut cur = g;
                while !has(&h, cur) {
                    for &x in &h_elems {
                        let s = add(x, cur);
                        bigger[s as usize / 64] |= 1 << (s % 64);
                    }
                    cur = add(cur, g);
                }
                if found.insert(bigger.clone()) {
                    queue.push(bigger);
                }
            }
        }
        let mut subs: Vec<Submodule> = found
            .into_iter()
            .map(|mask| {
                let elements: Vec<u32> = (0..order).filter(|&x| has(&mask, x)).collect();
                Submodule::from_sorted_elements(elements)
            })
            .collect();
        subs.sort();
        let colon: Vec<u64> = subs
            .iter()
            .map(|s| Submodule::colon_divisor(module, s))
            .collect();
        let maximal = subs
            .iter()
            .enumerate()
            .filter(|(_, s)| {
                let index = module.order() / s.order();
                crate::num::is_prime(index)
            })
            .map(|(i, _)| i as u32)
            .collect();
        let prime = subs
            .iter()
            .enumerate()
            .filter(|(i, _)| crate::num::is_prime(colon[*i]))
            .map(|(i, _)| i as u32)
            .collect();
        Ok(Lattice { module: module.clone(), subs, colon, maximal, prime })
    }

    pub fn module(&self) -> &FinModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn get(&self, idx: u32) -> &Submodule {
        &self.subs[idx as usize]
    }

    pub fn all(&self) -> &[Submodule] {
        &self.subs
    }

    pub fn index_of(&self, s: &Submodule) -> Option<u32> {
        self.subs.binary_search(s).ok().map(|i| i as u32)
    }

    /// Index of the zero submodule (always 0 by the ordering).
    pub fn zero_idx(&self) -> u32 {
        0
    }

    /// Index of the whole module (always last by the ordering).
    pub fn full_idx(&self) -> u32 {
        (self.subs.len() - 1) as u32
    }

    /// Exponent of `M / subs[idx]`, i.e. the integer colon divisor.
    pub fn colon_divisor(&self, idx: u32) -> u64 {
        self.colon[idx as usize]
    }

    /// Canonical generator of `(subs[idx] : M)` in the coefficient ring.
    pub fn colon_gen(&self, idx: u32) -> u64 {
        self.module.ring().normalize_gen(self.colon[idx as usize])
    }

    /// Submodules of prime index, in canonical order.
    pub fn maximal_indices(&self) -> &[u32] {
        &self.maximal
    }

    /// Prime submodules: `P != M` with `pM <= P` for some prime `p`,
    /// which happens exactly when the colon divisor is prime.
    pub fn prime_indices(&self) -> &[u32] {
        &self.prime
    }

    pub fn proper_nonzero_indices(&self) -> Vec<u32> {
        (1..self.full_idx()).collect()
    }

    pub fn leq(&self, a: u32, b: u32) -> bool {
        self.get(a).is_subset_of(self.get(b))
    }

    pub fn sum_idx(&self, a: u32, b: u32) -> u32 {
        let s = Submodule::sum(&self.module, self.get(a), self.get(b));
        self.index_of(&s).expect("sum of submodules is a submodule")
    }

    pub fn intersect_idx(&self, a: u32, b: u32) -> u32 {
        let s = Submodule::intersect(self.get(a), self.get(b));
        self.index_of(&s).expect("intersection of submodules is a submodule")
    }

    pub fn product_idx(&self, a: u32, b: u32) -> u32 {
        let s = Submodule::product(&self.module, self.get(a), self.get(b));
        self.index_of(&s).expect("product of submodules is a submodule")
    }

    /// Index of `d * M`.
    pub fn scale_full_idx(&self, d: u64) -> u32 {
        let s = Submodule::scale(&self.module, d, &Submodule::full(&self.module));
        self.index_of(&s).expect("dM is a submodule")
    }
}

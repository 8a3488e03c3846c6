//! Submodules as explicit element sets.
//!
//! A submodule is stored as the sorted list of its element indices. That
//! list is the canonical key: two submodules are equal iff the vectors are
//! equal, and the derived `Ord` (length-lex below) gives the enumeration
//! order used everywhere else.
//!
//! Over both `Z` and `Z/N` the scalars act through integers, so the
//! submodules are exactly the subgroups of the underlying abelian group.

use alloc::vec::Vec;

use crate::module::FinModule;
use crate::num;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    elements: Vec<u32>,
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        // Smaller submodules first, ties broken lexicographically.
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl Submodule {
    pub fn zero() -> Self {
        Submodule { elements: alloc::vec![0] }
    }

    pub fn full(m: &FinModule) -> Self {
        Submodule { elements: (0..m.order() as u32).collect() }
    }

    /// Wrap an element list that is already known to be a subgroup.
    pub fn from_sorted_elements(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&0));
        Submodule { elements }
    }

    /// Closure of a generating set. Subgroup generation suffices because
    /// the scalar action factors through repeated addition.
    pub fn span(m: &FinModule, gens: &[u32]) -> Self {
        let order = m.order() as usize;
        let mut seen = alloc::vec![false; order];
        seen[0] = true;
        let mut frontier = alloc::vec![0u32];
        let mut count = 1usize;
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = m.add(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    frontier.push(y);
                }
            }
        }
        let mut elements = Vec::with_capacity(count);
        for (i, &s) in seen.iter().enumerate() {
            if s {
                elements.push(i as u32);
            }
        }
        Submodule { elements }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_full(&self, m: &FinModule) -> bool {
        self.order() == m.order()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Submodule) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `A + B = { a + b }`; no closure pass needed since both are subgroups.
    pub fn sum(m: &FinModule, a: &Submodule, b: &Submodule) -> Self {
        let order = m.order() as usize;
        let mut seen = alloc::vec![false; order];
        for &x in &a.elements {
            for &y in &b.elements {
                seen[m.add(x, y) as usize] = true;
            }
        }
        let elements = seen
            .iter()
            .enumerate()
            .filter_map(|(i, &s)| s.then_some(i as u32))
            .collect();
        Submodule { elements }
    }

    pub fn intersect(a: &Submodule, b: &Submodule) -> Self {
        let elements = a
            .elements
            .iter()
            .copied()
            .filter(|&x| b.contains(x))
            .collect();
        Submodule { elements }
    }

    /// The image `d * N`.
    pub fn scale(m: &FinModule, d: u64, n: &Submodule) -> Self {
        let mut elements: Vec<u32> = n.elements.iter().map(|&x| m.smul(d, x)).collect();
        elements.sort_unstable();
        elements.dedup();
        Submodule { elements }
    }

    /// Exponent of `M/N`: the least `d >= 1` with `d * M <= N`. This also
    /// generates the colon ideal `(N : M) = { r : r * M <= N }`, because
    /// that set is an ideal of `Z` containing the module exponent.
    pub fn colon_divisor(m: &FinModule, n: &Submodule) -> u64 {
        let mut d = 1u64;
        for (i, &f) in m.invariant_factors().iter().enumerate() {
            // Basis generator e_i has index f_{i+1} * ... * f_k.
            let step: u64 = m.invariant_factors()[i + 1..].iter().product();
            let gen = step as u32;
            // Least c | f with c * e_i in N.
            let mut c = f;
            for div in num::divisors(f) {
                if n.contains(m.smul(div, gen)) {
                    c = div;
                    break;
                }
            }
            d = num::lcm(d, c);
        }
        d
    }

    /// Canonical generator of `(N : M)` in the coefficient ring.
    pub fn colon_gen(m: &FinModule, n: &Submodule) -> u64 {
        m.ring().normalize_gen(Self::colon_divisor(m, n))
    }

    /// The product `N * L := (N : M)(L : M) M`.
    pub fn product(m: &FinModule, n: &Submodule, l: &Submodule) -> Self {
        let d = Self::colon_divisor(m, n) * Self::colon_divisor(m, l);
        Self::scale(m, d, &Submodule::full(m))
    }

    /// Socle: the largest semisimple submodule, i.e. the kernel of
    /// multiplication by the radical of the exponent.
    pub fn socle(m: &FinModule) -> Self {
        let r = num::radical(m.exponent());
        let elements = (0..m.order() as u32)
            .filter(|&x| m.smul(r, x) == 0)
            .collect();
        Submodule { elements }
    }

    /// A small deterministic generating set, for display purposes.
    /// Greedily picks the lowest-index element of maximal order outside
    /// the span so far.
    pub fn generators(&self, m: &FinModule) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut span = Submodule::zero();
        while span.order() < self.order() {
            let pick = self
                .elements
                .iter()
                .copied()
                .filter(|&x| !span.contains(x))
                .max_by(|&a, &b| {
                    m.element_order(a)
                        .cmp(&m.element_order(b))
                        .then(b.cmp(&a))
                })
                .expect("span is strictly below the target");
            gens.push(pick);
            span = Submodule::span(m, &gens);
        }
        gens.sort_unstable();
        gens
    }
}

//! Prime and maximal spectra, the closed sets `V` / `Vm`, radicals, the
//! natural map to `Max(R/Ann(M))`, and semi-maximal submodules.
//!
//! For a finite module everything reduces to colon divisors: a submodule
//! `P` is prime iff its colon divisor is a prime `p` (then `pM <= P < M`),
//! and membership `Q in Vm(N)` is the divisibility `p_Q | d_N`.

use alloc::vec::Vec;

use crate::lattice::Lattice;
use crate::num;
use crate::ring::Ring;

/// Witness prime of a prime submodule: its colon divisor.
pub fn witness_prime(lat: &Lattice, p: u32) -> u64 {
    debug_assert!(num::is_prime(lat.colon_divisor(p)));
    lat.colon_divisor(p)
}

/// `Vm(N) = { Q in Max(M) : (Q:M) >= (N:M) }`, by `p_Q | d_N`.
pub fn vm_set(lat: &Lattice, n: u32) -> Vec<u32> {
    let d = lat.colon_divisor(n);
    lat.maximal_indices()
        .iter()
        .copied()
        .filter(|&q| d.is_multiple_of(lat.colon_divisor(q)))
        .collect()
}

/// `V(N) = { P in Spec(M) : (P:M) >= (N:M) }`.
pub fn v_set(lat: &Lattice, n: u32) -> Vec<u32> {
    let d = lat.colon_divisor(n);
    lat.prime_indices()
        .iter()
        .copied()
        .filter(|&p| d.is_multiple_of(lat.colon_divisor(p)))
        .collect()
}

/// Intersection of a family of submodules given by indices; the empty
/// family intersects to `M`.
pub fn intersection_of(lat: &Lattice, family: &[u32]) -> u32 {
    let mut acc = lat.full_idx();
    for &q in family {
        acc = lat.intersect_idx(acc, q);
    }
    acc
}

/// The J-radical of a submodule: intersection of `Vm(N)`, or `M` when
/// `Vm(N)` is empty.
pub fn jm_radical_idx(lat: &Lattice, n: u32) -> u32 {
    intersection_of(lat, &vm_set(lat, n))
}

/// Prime radical: intersection of the primes containing `N` (`M` if none).
pub fn prime_radical_idx(lat: &Lattice, n: u32) -> u32 {
    let above: Vec<u32> = lat
        .prime_indices()
        .iter()
        .copied()
        .filter(|&p| lat.leq(n, p))
        .collect();
    intersection_of(lat, &above)
}

/// J-radical of an ideal `dR`: intersection of the maximal ideals
/// containing it, which is generated by the radical of `d`.
pub fn jm_radical_ideal(ring: Ring, d: u64) -> u64 {
    ring.normalize_gen(num::radical(ring.normalize_gen(d)))
}

/// All intersections of non-empty subsets of the maximal submodules that
/// contain `above` (pass the zero submodule to get every semi-maximal
/// submodule). Computed as a closure under pairwise intersection, which
/// stays polynomial in the lattice size.
pub fn semi_maximal_above(lat: &Lattice, above: u32) -> Vec<u32> {
    let maxes: Vec<u32> = lat
        .maximal_indices()
        .iter()
        .copied()
        .filter(|&q| lat.leq(above, q))
        .collect();
    let mut out: Vec<u32> = maxes.clone();
    out.sort_unstable();
    let mut frontier = out.clone();
    while let Some(x) = frontier.pop() {
        for &q in &maxes {
            let y = lat.intersect_idx(x, q);
            if let Err(pos) = out.binary_search(&y) {
                out.insert(pos, y);
                frontier.push(y);
            }
        }
    }
    out
}

pub fn semi_maximal_indices(lat: &Lattice) -> Vec<u32> {
    semi_maximal_above(lat, lat.zero_idx())
}

pub fn is_semi_maximal(lat: &Lattice, n: u32) -> bool {
    let maxes_above: Vec<u32> = lat
        .maximal_indices()
        .iter()
        .copied()
        .filter(|&q| lat.leq(n, q))
        .collect();
    !maxes_above.is_empty() && intersection_of(lat, &maxes_above) == n
}

/// `Spec(M) = Max(M)` as sets.
pub fn spec_equals_max(lat: &Lattice) -> bool {
    lat.prime_indices() == lat.maximal_indices()
}

/// The natural map `Max(M) -> Max(R/Ann(M))` lands in the maximal ideals
/// of `Z/exponent`, identified with the primes dividing the exponent.
pub fn natural_map(lat: &Lattice) -> Vec<(u32, u64)> {
    lat.maximal_indices()
        .iter()
        .map(|&q| (q, witness_prime(lat, q)))
        .collect()
}

pub fn is_max_surjective(lat: &Lattice) -> bool {
    let targets = num::distinct_primes(lat.module().exponent());
    let mut hit: Vec<u64> = natural_map(lat).into_iter().map(|(_, p)| p).collect();
    hit.sort_unstable();
    hit.dedup();
    hit == targets
}

/// Is the natural map a homeomorphism onto `Max(Z/exponent)`? Checked
/// exhaustively: the map must be bijective and must match the closed-set
/// collections of both finite topologies.
pub fn is_natural_map_homeomorphism(lat: &Lattice) -> bool {
    let e = lat.module().exponent();
    let ring_maxes = num::distinct_primes(e);
    let map = natural_map(lat);
    if map.len() != ring_maxes.len() {
        return false;
    }
    let mut hit: Vec<u64> = map.iter().map(|&(_, p)| p).collect();
    hit.sort_unstable();
    hit.dedup();
    if hit != ring_maxes {
        return false;
    }
    // Closed sets of Max(M), pushed through the map.
    let mut image_closed: Vec<Vec<u64>> = Vec::new();
    for n in 0..lat.len() as u32 {
        let mut c: Vec<u64> = vm_set(lat, n)
            .into_iter()
            .map(|q| witness_prime(lat, q))
            .collect();
        c.sort_unstable();
        c.dedup();
        if !image_closed.contains(&c) {
            image_closed.push(c);
        }
    }
    // Closed sets of Max(Z/e): V(dR) = primes dividing d, for d | e.
    let mut ring_closed: Vec<Vec<u64>> = Vec::new();
    for d in num::divisors(e) {
        let c: Vec<u64> = ring_maxes.iter().copied().filter(|&p| d % p == 0).collect();
        if !ring_closed.contains(&c) {
            ring_closed.push(c);
        }
    }
    image_closed.sort();
    ring_closed.sort();
    image_closed == ring_closed
}

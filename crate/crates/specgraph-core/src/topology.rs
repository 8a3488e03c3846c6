//! The Zariski topology on `Max(M)` and its subspaces.
//!
//! A subset `T` is closed iff it equals `Vm(im(T))`, and the relative
//! closed sets of the subspace `T` are the intersections `T and Vm(N)`.
//! Irreducibility and connectedness are decided by exhaustive search
//! over decompositions into relative closed sets.

use alloc::vec::Vec;

use crate::lattice::Lattice;
use crate::spectrum;

/// `Vm(im(T))`, the closure of `T` in `Max(M)`.
pub fn closure(lat: &Lattice, t: &[u32]) -> Vec<u32> {
    spectrum::vm_set(lat, spectrum::intersection_of(lat, t))
}

pub fn is_closed(lat: &Lattice, t: &[u32]) -> bool {
    closure(lat, t) == t
}

/// The distinct relative closed sets `T and Vm(N)`, `N` over the lattice.
pub fn relative_closed_sets(lat: &Lattice, t: &[u32]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    for n in 0..lat.len() as u32 {
        let vm = spectrum::vm_set(lat, n);
        let cut: Vec<u32> = t.iter().copied().filter(|q| vm.contains(q)).collect();
        if !out.contains(&cut) {
            out.push(cut);
        }
    }
    out.sort();
    out
}

/// Irreducible: non-empty, and not a union of two proper relative
/// closed subsets.
pub fn is_irreducible(lat: &Lattice, t: &[u32]) -> bool {
    if t.is_empty() {
        return false;
    }
    let closed = relative_closed_sets(lat, t);
    for c1 in &closed {
        if c1.len() == t.len() {
            continue;
        }
        for c2 in &closed {
            if c2.len() == t.len() {
                continue;
            }
            if covers(t, c1, c2) {
                return false;
            }
        }
    }
    true
}

/// Connected: no partition into two disjoint non-empty relative closed
/// sets. The empty subspace counts as connected.
pub fn is_connected_subspace(lat: &Lattice, t: &[u32]) -> bool {
    let closed = relative_closed_sets(lat, t);
    for c1 in &closed {
        if c1.is_empty() {
            continue;
        }
        for c2 in &closed {
            if c2.is_empty() || c1.len() + c2.len() != t.len() {
                continue;
            }
            if c1.iter().all(|q| !c2.contains(q)) && covers(t, c1, c2) {
                return false;
            }
        }
    }
    true
}

fn covers(t: &[u32], c1: &[u32], c2: &[u32]) -> bool {
    t.iter().all(|q| c1.contains(q) || c2.contains(q))
}

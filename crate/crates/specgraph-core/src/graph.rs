//! The four graphs: `G(tau^m_T)`, `G(tau_T)`, the disjointness subgraph
//! `G_d(tau^m_T)`, and the annihilating-submodule graph `AG(M)`.
//!
//! Everything is decided by colon divisors. `Vm(N)` is a union of
//! complete witness-prime families of maximals, so the cover condition
//! `Vm(N) u Vm(L) = T` only depends on the prime support of the two
//! colon divisors; the same holds for `V` over the prime spectrum.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::num;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphKind {
    ZariskiMax,
    ZariskiSpec,
    ZariskiMaxDisjoint,
    Annihilating,
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::ZariskiMax => "zmax",
            GraphKind::ZariskiSpec => "zspec",
            GraphKind::ZariskiMaxDisjoint => "zmax-disjoint",
            GraphKind::Annihilating => "ag",
        }
    }
}

/// A finite labelled graph; vertices are submodule indices into the
/// parent lattice, edges are sorted pairs with the smaller index first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecGraph {
    pub kind: GraphKind,
    /// The subset of the spectrum the graph was built over (submodule
    /// indices); empty for the annihilating graph.
    pub t: Vec<u32>,
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

impl SpecGraph {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_vertex(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Positions (into `vertices`) of the neighbours of each vertex.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = alloc::vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            let i = self.vertices.binary_search(&a).unwrap() as u32;
            let j = self.vertices.binary_search(&b).unwrap() as u32;
            adj[i as usize].push(j);
            adj[j as usize].push(i);
        }
        adj
    }
}

/// Bitmask of the distinct primes of `d` relative to a fixed prime list.
fn prime_mask(primes: &[u64], d: u64) -> u32 {
    let mut mask = 0u32;
    for (i, &p) in primes.iter().enumerate() {
        if d.is_multiple_of(p) {
            mask |= 1 << i;
        }
    }
    mask
}

struct ZariskiSetup {
    /// Mask of witness primes present in `T`.
    smask: u32,
    /// `T` is a union of complete witness-prime families (i.e. closed).
    closed: bool,
    /// Prime support mask of each submodule's colon divisor.
    pmask: Vec<u32>,
}

fn zariski_setup(lat: &Lattice, t: &[u32], family: &[u32]) -> ZariskiSetup {
    let primes = num::distinct_primes(lat.module().exponent());
    let mut smask = 0u32;
    for &q in t {
        smask |= prime_mask(&primes, lat.colon_divisor(q));
    }
    // Closed means every family member whose prime appears in T is in T.
    let closed = family
        .iter()
        .all(|&q| t.binary_search(&q).is_ok() || prime_mask(&primes, lat.colon_divisor(q)) & smask == 0);
    let pmask = (0..lat.len() as u32)
        .map(|n| prime_mask(&primes, lat.colon_divisor(n)))
        .collect();
    ZariskiSetup { smask, closed, pmask }
}

fn build_zariski(
    lat: &Lattice,
    t: &[u32],
    family: &[u32],
    kind: GraphKind,
    disjoint: bool,
    partner_nonzero: bool,
) -> Result<SpecGraph> {
    if t.is_empty() {
        return Err(Error::EmptySubset);
    }
    debug_assert!(t.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(t.iter().all(|q| family.binary_search(q).is_ok()));
    let setup = zariski_setup(lat, t, family);
    if !setup.closed {
        // A union of two Vm-sets is a union of complete families, so a
        // non-closed T admits no vertices at all.
        return Ok(SpecGraph { kind, t: t.to_vec(), vertices: Vec::new(), edges: Vec::new() });
    }
    let smask = setup.smask;
    let full = lat.full_idx();
    let proper = |n: u32| n != full;
    let qualifies = |m: u32| m & !smask == 0 && m != smask;
    let pair_ok = |a: u32, b: u32| a | b == smask && (!disjoint || a & b == 0);
    let mut vertices: Vec<u32> = Vec::new();
    for n in 0..lat.len() as u32 {
        if !proper(n) || !qualifies(setup.pmask[n as usize]) {
            continue;
        }
        let has_partner = (0..lat.len() as u32).any(|l| {
            l != n
                && proper(l)
                && (!partner_nonzero || l != lat.zero_idx())
                && qualifies(setup.pmask[l as usize])
                && pair_ok(setup.pmask[n as usize], setup.pmask[l as usize])
        });
        if has_partner {
            vertices.push(n);
        }
    }
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if pair_ok(setup.pmask[a as usize], setup.pmask[b as usize]) {
                edges.push((a, b));
            }
        }
    }
    Ok(SpecGraph { kind, t: t.to_vec(), vertices, edges })
}

/// `G(tau^m_T)` over a non-empty `T` of maximal submodule indices.
pub fn build_zariski_max(lat: &Lattice, t: &[u32]) -> Result<SpecGraph> {
    build_zariski(lat, t, lat.maximal_indices(), GraphKind::ZariskiMax, false, false)
}

/// Variant with the partner required to be non-zero (the introduction's
/// phrasing); provably identical to `build_zariski_max`.
pub fn build_zariski_max_strict_partner(lat: &Lattice, t: &[u32]) -> Result<SpecGraph> {
    build_zariski(lat, t, lat.maximal_indices(), GraphKind::ZariskiMax, false, true)
}

/// `G(tau_T)` over a non-empty subset of the prime spectrum.
pub fn build_zariski_spec(lat: &Lattice, t: &[u32]) -> Result<SpecGraph> {
    build_zariski(lat, t, lat.prime_indices(), GraphKind::ZariskiSpec, false, false)
}

/// `G_d(tau^m_T)`: the subgraph of `G(tau^m_T)` where the two `Vm`-sets
/// must also be disjoint.
pub fn build_zariski_max_disjoint(lat: &Lattice, t: &[u32]) -> Result<SpecGraph> {
    build_zariski(lat, t, lat.maximal_indices(), GraphKind::ZariskiMaxDisjoint, true, false)
}

/// `AG(M)`: non-zero submodules (including `M`) with a non-zero proper
/// partner of product zero; distinct vertices are adjacent iff their
/// product is zero. The partner may be the submodule itself.
pub fn build_annihilating(lat: &Lattice) -> SpecGraph {
    let e = lat.module().exponent();
    let full = lat.full_idx();
    let annihilates = |a: u32, b: u32| (lat.colon_divisor(a) * lat.colon_divisor(b)).is_multiple_of(e);
    let mut vertices: Vec<u32> = Vec::new();
    if lat.module().is_zero() {
        return SpecGraph {
            kind: GraphKind::Annihilating,
            t: Vec::new(),
            vertices,
            edges: Vec::new(),
        };
    }
    for n in 1..lat.len() as u32 {
        let has_partner =
            (1..full).any(|l| annihilates(n, l));
        if has_partner {
            vertices.push(n);
        }
    }
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if annihilates(a, b) {
                edges.push((a, b));
            }
        }
    }
    SpecGraph { kind: GraphKind::Annihilating, t: Vec::new(), vertices, edges }
}

//! Subgraph embeddings and graph isomorphisms.
//!
//! Verification of a supplied vertex map works at any size; the
//! backtracking searches refuse graphs above `SEARCH_MAX_VERTICES`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::SpecGraph;

pub const SEARCH_MAX_VERTICES: usize = 24;

fn position(g: &SpecGraph, v: u32) -> Option<usize> {
    g.vertices.binary_search(&v).ok()
}

/// `map` lists `(vertex of g, vertex of h)` pairs. An embedding must be
/// total on `V(g)`, injective, land in `V(h)`, and carry edges to edges.
pub fn verify_embedding(g: &SpecGraph, h: &SpecGraph, map: &[(u32, u32)]) -> bool {
    if map.len() != g.vertices.len() {
        return false;
    }
    let mut image: Vec<u32> = Vec::with_capacity(map.len());
    let mut lookup = alloc::collections::BTreeMap::new();
    for &(src, dst) in map {
        if position(g, src).is_none() || position(h, dst).is_none() {
            return false;
        }
        if lookup.insert(src, dst).is_some() {
            return false;
        }
        image.push(dst);
    }
    image.sort_unstable();
    if image.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    g.edges.iter().all(|&(a, b)| h.has_edge(lookup[&a], lookup[&b]))
}

/// An isomorphism is a bijective embedding whose inverse also carries
/// edges to edges.
pub fn verify_isomorphism(g: &SpecGraph, h: &SpecGraph, map: &[(u32, u32)]) -> bool {
    if g.vertices.len() != h.vertices.len() || g.edges.len() != h.edges.len() {
        return false;
    }
    if !verify_embedding(g, h, map) {
        return false;
    }
    let lookup: alloc::collections::BTreeMap<u32, u32> = map.iter().copied().collect();
    for (i, &a) in g.vertices.iter().enumerate() {
        for &b in &g.vertices[i + 1..] {
            if !g.has_edge(a, b) && h.has_edge(lookup[&a], lookup[&b]) {
                return false;
            }
        }
    }
    true
}

fn adjacency_masks(g: &SpecGraph) -> Vec<u64> {
    let mut masks = alloc::vec![0u64; g.vertices.len()];
    for &(a, b) in &g.edges {
        let i = position(g, a).unwrap();
        let j = position(g, b).unwrap();
        masks[i] |= 1 << j;
        masks[j] |= 1 << i;
    }
    masks
}

fn check_bound(g: &SpecGraph, h: &SpecGraph) -> Result<()> {
    let most = g.vertices.len().max(h.vertices.len());
    if most > SEARCH_MAX_VERTICES {
        return Err(Error::SearchBoundExceeded { vertices: most, max: SEARCH_MAX_VERTICES });
    }
    Ok(())
}

fn backtrack(
    order: &[usize],
    gm: &[u64],
    hm: &[u64],
    hn: usize,
    exact: bool,
    assigned: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    let step = assigned.len();
    if step == order.len() {
        return true;
    }
    let gi = order[step];
    for hv in 0..hn {
        if *used & (1 << hv) != 0 {
            continue;
        }
        let mut ok = true;
        for (prev_step, &hu) in assigned.iter().enumerate() {
            let gj = order[prev_step];
            let g_adj = gm[gi] & (1 << gj) != 0;
            let h_adj = hm[hv] & (1 << hu) != 0;
            if (g_adj && !h_adj) || (exact && !g_adj && h_adj) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        assigned.push(hv);
        *used |= 1 << hv;
        if backtrack(order, gm, hm, hn, exact, assigned, used) {
            return true;
        }
        assigned.pop();
        *used &= !(1 << hv);
    }
    false
}

fn search(g: &SpecGraph, h: &SpecGraph, exact: bool) -> Result<Option<Vec<(u32, u32)>>> {
    check_bound(g, h)?;
    if g.vertices.len() > h.vertices.len() {
        return Ok(None);
    }
    if exact && (g.vertices.len() != h.vertices.len() || g.edges.len() != h.edges.len()) {
        return Ok(None);
    }
    let gm = adjacency_masks(g);
    let hm = adjacency_masks(h);
    // Assign high-degree vertices first; they constrain the search most.
    let mut order: Vec<usize> = (0..g.vertices.len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(gm[i].count_ones()));
    let mut assigned = Vec::new();
    let mut used = 0u64;
    if backtrack(&order, &gm, &hm, h.vertices.len(), exact, &mut assigned, &mut used) {
        let mut map: Vec<(u32, u32)> = order
            .iter()
            .zip(&assigned)
            .map(|(&gi, &hv)| (g.vertices[gi], h.vertices[hv]))
            .collect();
        map.sort_unstable();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Injective map carrying edges to edges (non-edges unconstrained).
pub fn find_embedding(g: &SpecGraph, h: &SpecGraph) -> Result<Option<Vec<(u32, u32)>>> {
    search(g, h, false)
}

/// Bijective map with matching adjacency both ways.
pub fn find_isomorphism(g: &SpecGraph, h: &SpecGraph) -> Result<Option<Vec<(u32, u32)>>> {
    if g.vertices.len() == h.vertices.len() {
        let mut gd: Vec<u32> = {
            let m = adjacency_masks(g);
            m.iter().map(|x| x.count_ones()).collect()
        };
        let mut hd: Vec<u32> = {
            let m = adjacency_masks(h);
            m.iter().map(|x| x.count_ones()).collect()
        };
        gd.sort_unstable();
        hd.sort_unstable();
        if gd != hd {
            return Ok(None);
        }
    }
    search(g, h, true)
}

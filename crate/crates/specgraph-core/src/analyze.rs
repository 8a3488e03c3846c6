//! Structural reports for the graphs: connectivity, diameter, girth,
//! bipartiteness, and the complete-bipartite test.

use alloc::vec::Vec;

use crate::graph::SpecGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub component_count: usize,
    /// `None` means infinite (the graph is disconnected with at least
    /// two vertices); an empty or single-vertex graph has diameter 0.
    pub diameter: Option<u32>,
    /// Largest distance over reachable pairs; 0 if there are none.
    pub finite_diameter: u32,
    /// Length of a shortest cycle; `None` if the graph is acyclic.
    pub girth: Option<u32>,
    pub bipartite: bool,
    /// Canonical two-coloring (vertex ids): BFS from the smallest id of
    /// each component, colors 0 and 1. Present iff bipartite.
    pub bipartition: Option<(Vec<u32>, Vec<u32>)>,
    pub complete_bipartite: bool,
    /// `(vertex id, degree)` sorted by id.
    pub degrees: Vec<(u32, u32)>,
}

/// Distances (in edges) from `src` over an adjacency list; `None` for
/// unreachable vertices.
pub fn bfs_distances(adj: &[Vec<u32>], src: usize) -> Vec<Option<u32>> {
    let mut dist = alloc::vec![None; adj.len()];
    dist[src] = Some(0);
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w as usize].is_none() {
                dist[w as usize] = Some(du + 1);
                queue.push_back(w as usize);
            }
        }
    }
    dist
}

/// Shortest path from `src` to `dst` with one edge removed; used for
/// the girth computation.
fn bfs_avoiding_edge(adj: &[Vec<u32>], src: usize, dst: usize, skip: (u32, u32)) -> Option<u32> {
    let mut dist = alloc::vec![None; adj.len()];
    dist[src] = Some(0u32);
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in &adj[u] {
            let pair = (u as u32, w);
            if pair == skip || (pair.1, pair.0) == skip {
                continue;
            }
            if dist[w as usize].is_none() {
                if w as usize == dst {
                    return Some(du + 1);
                }
                dist[w as usize] = Some(du + 1);
                queue.push_back(w as usize);
            }
        }
    }
    None
}

pub fn analyze(g: &SpecGraph) -> GraphReport {
    let n = g.vertices.len();
    let adj = g.adjacency();
    let degrees: Vec<(u32, u32)> =
        g.vertices.iter().enumerate().map(|(i, &v)| (v, adj[i].len() as u32)).collect();

    // Components via BFS from the smallest unvisited id; vertices are
    // sorted, so scanning in order is canonical.
    let mut comp = alloc::vec![usize::MAX; n];
    let mut component_count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let d = bfs_distances(&adj, start);
        for (i, di) in d.iter().enumerate() {
            if di.is_some() {
                comp[i] = component_count;
            }
        }
        component_count += 1;
    }
    let connected = component_count <= 1;

    let mut finite_diameter = 0u32;
    for i in 0..n {
        for d in bfs_distances(&adj, i).into_iter().flatten() {
            finite_diameter = finite_diameter.max(d);
        }
    }
    let diameter = if connected { Some(finite_diameter) } else { None };

    // Girth. Triangles and 4-cycles are found with bitset adjacency
    // (the graphs here are often dense, where per-edge BFS is ruinous);
    // only the girth >= 5 case falls back to BFS per edge, and such
    // graphs are sparse.
    let words = n.div_ceil(64);
    let mut masks = alloc::vec![0u64; n * words];
    for &(a, b) in &g.edges {
        let i = g.vertices.binary_search(&a).unwrap();
        let j = g.vertices.binary_search(&b).unwrap();
        masks[i * words + j / 64] |= 1 << (j % 64);
        masks[j * words + i / 64] |= 1 << (i % 64);
    }
    let common = |i: usize, j: usize| -> u32 {
        (0..words)
            .map(|w| (masks[i * words + w] & masks[j * words + w]).count_ones())
            .sum()
    };
    let mut girth: Option<u32> = None;
    'triangle: for &(a, b) in &g.edges {
        let i = g.vertices.binary_search(&a).unwrap();
        let j = g.vertices.binary_search(&b).unwrap();
        if common(i, j) > 0 {
            girth = Some(3);
            break 'triangle;
        }
    }
    if girth.is_none() {
        'square: for i in 0..n {
            for j in i + 1..n {
                if common(i, j) >= 2 {
                    girth = Some(4);
                    break 'square;
                }
            }
        }
    }
    if girth.is_none() {
        for &(a, b) in &g.edges {
            let i = g.vertices.binary_search(&a).unwrap();
            let j = g.vertices.binary_search(&b).unwrap();
            if let Some(d) = bfs_avoiding_edge(&adj, i, j, (i as u32, j as u32)) {
                let cycle = d + 1;
                girth = Some(girth.map_or(cycle, |c| c.min(cycle)));
            }
        }
    }

    // Two-coloring by BFS, component by component.
    let mut color = alloc::vec![u8::MAX; n];
    let mut bipartite = true;
    'outer: for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                let w = w as usize;
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    bipartite = false;
                    break 'outer;
                }
            }
        }
    }
    let bipartition = bipartite.then(|| {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &v) in g.vertices.iter().enumerate() {
            if color[i] == 0 {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        (left, right)
    });

    // Complete bipartite: both parts non-empty and every cross pair an
    // edge; the edge count gives an independent route to the same
    // answer, and the two must agree.
    let complete_bipartite = match &bipartition {
        Some((left, right)) if !left.is_empty() && !right.is_empty() => {
            let all_cross = left
                .iter()
                .all(|&a| right.iter().all(|&b| g.has_edge(a, b)));
            let count_match = g.edges.len() == left.len() * right.len();
            assert_eq!(all_cross, count_match);
            all_cross
        }
        _ => false,
    };

    GraphReport {
        vertex_count: n,
        edge_count: g.edges.len(),
        connected,
        component_count,
        diameter,
        finite_diameter,
        girth,
        bipartite,
        bipartition,
        complete_bipartite,
        degrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, GraphKind};
    use crate::lattice::{Lattice, DEFAULT_MAX_ORDER};
    use crate::module::FinModule;
    use crate::ring::Ring;

    fn lattice(factors: &[u64]) -> Lattice {
        let m = FinModule::new(Ring::integers(), factors).unwrap();
        Lattice::enumerate(&m, DEFAULT_MAX_ORDER).unwrap()
    }

    fn raw(vertices: Vec<u32>, edges: Vec<(u32, u32)>) -> SpecGraph {
        SpecGraph { kind: GraphKind::Annihilating, t: alloc::vec![], vertices, edges }
    }

    #[test]
    fn z12_star_report() {
        let lat = lattice(&[12]);
        let t = lat.maximal_indices().to_vec();
        let g = graph::build_zariski_max(&lat, &t).unwrap();
        let r = analyze(&g);
        assert!(r.connected);
        assert_eq!(r.diameter, Some(2));
        assert_eq!(r.girth, None);
        assert!(r.bipartite);
        assert!(r.complete_bipartite);
        // BFS starts at the smallest-index vertex, a leaf of the star.
        let (left, right) = r.bipartition.unwrap();
        assert_eq!((left.len(), right.len()), (2, 1));
    }

    #[test]
    fn z30_zariski_report() {
        let lat = lattice(&[30]);
        let t = lat.maximal_indices().to_vec();
        let g = graph::build_zariski_max(&lat, &t).unwrap();
        let r = analyze(&g);
        assert!(r.connected);
        assert_eq!(r.diameter, Some(3));
        assert_eq!(r.girth, Some(3));
        assert!(!r.bipartite);
        assert!(!r.complete_bipartite);
    }

    #[test]
    fn z30_disjoint_report() {
        let lat = lattice(&[30]);
        let t = lat.maximal_indices().to_vec();
        let g = graph::build_zariski_max_disjoint(&lat, &t).unwrap();
        let r = analyze(&g);
        assert!(!r.connected);
        assert_eq!(r.component_count, 3);
        assert_eq!(r.diameter, None);
        assert_eq!(r.finite_diameter, 1);
        assert_eq!(r.girth, None);
        assert!(r.bipartite);
        assert!(!r.complete_bipartite);
    }

    #[test]
    fn empty_and_singleton_conventions() {
        let r = analyze(&raw(alloc::vec![], alloc::vec![]));
        assert!(r.connected);
        assert_eq!(r.component_count, 0);
        assert_eq!(r.diameter, Some(0));
        assert!(r.bipartite);
        assert!(!r.complete_bipartite);
        let r = analyze(&raw(alloc::vec![7], alloc::vec![]));
        assert!(r.connected);
        assert_eq!(r.diameter, Some(0));
        assert!(!r.complete_bipartite);
    }

    #[test]
    fn girth_on_small_shapes() {
        // Triangle.
        let r = analyze(&raw(alloc::vec![0, 1, 2], alloc::vec![(0, 1), (0, 2), (1, 2)]));
        assert_eq!(r.girth, Some(3));
        assert_eq!(r.diameter, Some(1));
        // Four-cycle.
        let r = analyze(&raw(alloc::vec![0, 1, 2, 3], alloc::vec![(0, 1), (0, 3), (1, 2), (2, 3)]));
        assert_eq!(r.girth, Some(4));
        assert!(r.complete_bipartite);
        // Path on four vertices.
        let r = analyze(&raw(alloc::vec![0, 1, 2, 3], alloc::vec![(0, 1), (1, 2), (2, 3)]));
        assert_eq!(r.girth, None);
        assert_eq!(r.diameter, Some(3));
        assert!(!r.complete_bipartite);
        // Five- and six-cycles take the long way around.
        let r = analyze(&raw(
            alloc::vec![0, 1, 2, 3, 4],
            alloc::vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)],
        ));
        assert_eq!(r.girth, Some(5));
        let r = analyze(&raw(
            alloc::vec![0, 1, 2, 3, 4, 5],
            alloc::vec![(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)],
        ));
        assert_eq!(r.girth, Some(6));
        // A six-cycle with one chord has girth 4 on the short side.
        let r = analyze(&raw(
            alloc::vec![0, 1, 2, 3, 4, 5],
            alloc::vec![(0, 1), (0, 3), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)],
        ));
        assert_eq!(r.girth, Some(4));
    }

    #[test]
    fn complete_bipartite_needs_all_cross_edges() {
        // K_{2,2} minus one edge.
        let r = analyze(&raw(alloc::vec![0, 1, 2, 3], alloc::vec![(0, 1), (0, 3), (1, 2)]));
        assert!(r.bipartite);
        assert!(!r.complete_bipartite);
    }
}

//! Definitional oracles for the graph builders and the analyzer.
//!
//! The builders are re-derived from raw predicates: colon sets kept as
//! explicit residue sets, Vm-sets as explicit index sets, annihilation
//! tested element by element. The analyzer is checked against textbook
//! algorithms: Floyd-Warshall distances, union-find components, girth
//! by BFS from every vertex, bipartiteness on a parity-doubled vertex
//! set, and exhaustive two-colorings on small graphs.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use specgraph_core::analyze::analyze;
use specgraph_core::corpus::{corpus_modules, CorpusParams};
use specgraph_core::graph::{self, SpecGraph};
use specgraph_core::lattice::Lattice;
use specgraph_core::module::FinModule;
use specgraph_core::DEFAULT_MAX_ORDER;

const ORACLE_MAX_ORDER: u64 = 48;
const BRUTE_COLOR_MAX: usize = 10;

fn oracle_lattices() -> Vec<(String, Lattice)> {
    let params = CorpusParams { max_order: ORACLE_MAX_ORDER, max_rank: 3 };
    corpus_modules(&params)
        .iter()
        .map(|desc| {
            let m = desc.build().expect("corpus module is well-formed");
            let lat = Lattice::enumerate(&m, DEFAULT_MAX_ORDER).expect("corpus order is bounded");
            (desc.key(), lat)
        })
        .collect()
}

/// Least d >= 1 killing every element, found by scanning.
fn exponent_raw(m: &FinModule) -> u64 {
    (1..).find(|&d| (0..m.order() as u32).all(|x| m.smul(d, x) == 0)).unwrap()
}

/// `{r in 0..e : rM <= subs[idx]}` as a sorted residue set.
fn colon_set(lat: &Lattice, e: u64, idx: u32) -> Vec<u64> {
    let m = lat.module();
    let sub = lat.get(idx);
    (0..e).filter(|&r| (0..m.order() as u32).all(|x| sub.contains(m.smul(r, x)))).collect()
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

struct RawData {
    e: u64,
    colon_sets: Vec<Vec<u64>>,
}

impl RawData {
    fn new(lat: &Lattice) -> Self {
        let e = exponent_raw(lat.module());
        let colon_sets = (0..lat.len() as u32).map(|n| colon_set(lat, e, n)).collect();
        RawData { e, colon_sets }
    }

    /// `{q in family : (subs[n] : M) <= (subs[q] : M)}` by set inclusion.
    fn v_of(&self, family: &[u32], n: u32) -> BTreeSet<u32> {
        family
            .iter()
            .copied()
            .filter(|&q| is_subset(&self.colon_sets[n as usize], &self.colon_sets[q as usize]))
            .collect()
    }
}

/// Vertex and edge sets of the Zariski graph over `t`, rebuilt from
/// explicit Vm-sets: distinct proper submodules are adjacent when both
/// Vm-sets differ from `t` and their union is exactly `t` (and, for the
/// disjointness subgraph, the two sets are disjoint); the vertices are
/// the endpoints of such pairs.
fn raw_zariski(
    lat: &Lattice,
    raw: &RawData,
    family: &[u32],
    t: &[u32],
    disjoint: bool,
) -> (Vec<u32>, Vec<(u32, u32)>) {
    let vsets: Vec<BTreeSet<u32>> =
        (0..lat.len() as u32).map(|n| raw.v_of(family, n)).collect();
    let tset: BTreeSet<u32> = t.iter().copied().collect();
    let full = lat.full_idx();
    let mut vertices: BTreeSet<u32> = BTreeSet::new();
    let mut pairs = Vec::new();
    for a in 0..full {
        for b in a + 1..full {
            let (va, vb) = (&vsets[a as usize], &vsets[b as usize]);
            if *va == tset || *vb == tset {
                continue;
            }
            if va.union(vb).copied().collect::<BTreeSet<u32>>() != tset {
                continue;
            }
            if disjoint && va.intersection(vb).next().is_some() {
                continue;
            }
            vertices.insert(a);
            vertices.insert(b);
            pairs.push((a, b));
        }
    }
    (vertices.into_iter().collect(), pairs)
}

/// `AG(M)` rebuilt element by element: two non-zero submodules
/// annihilate each other when every product of colon residues kills
/// the whole module; vertices additionally need a proper non-zero
/// partner (possibly themselves).
fn raw_ag(lat: &Lattice, raw: &RawData) -> (Vec<u32>, Vec<(u32, u32)>) {
    let m = lat.module();
    if m.is_zero() {
        return (Vec::new(), Vec::new());
    }
    let kills: Vec<bool> =
        (0..raw.e).map(|d| (0..m.order() as u32).all(|x| m.smul(d, x) == 0)).collect();
    let ann = |a: u32, b: u32| {
        raw.colon_sets[a as usize]
            .iter()
            .all(|&r| raw.colon_sets[b as usize].iter().all(|&s| kills[((r * s) % raw.e) as usize]))
    };
    let full = lat.full_idx();
    let vertices: Vec<u32> =
        (1..lat.len() as u32).filter(|&n| (1..full).any(|l| ann(n, l))).collect();
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if ann(a, b) {
                edges.push((a, b));
            }
        }
    }
    (vertices, edges)
}

/// All non-empty subsets when the family is small, otherwise just the
/// family itself.
fn family_subsets(family: &[u32], cap: usize) -> Vec<Vec<u32>> {
    if family.is_empty() {
        return Vec::new();
    }
    if family.len() > cap {
        return vec![family.to_vec()];
    }
    (1u32..1 << family.len())
        .map(|mask| {
            family
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &q)| q)
                .collect()
        })
        .collect()
}

fn assert_same_graph(g: &SpecGraph, raw: (Vec<u32>, Vec<(u32, u32)>), label: &str) {
    assert_eq!(g.vertices, raw.0, "{label}: vertex sets differ");
    assert_eq!(g.edges, raw.1, "{label}: edge sets differ");
}

#[test]
fn builders_match_raw_set_arithmetic() {
    let mut graphs = 0usize;
    for (key, lat) in oracle_lattices() {
        let raw = RawData::new(&lat);
        let maxes = lat.maximal_indices().to_vec();
        for t in family_subsets(&maxes, 4) {
            let g = graph::build_zariski_max(&lat, &t).unwrap();
            assert_same_graph(&g, raw_zariski(&lat, &raw, &maxes, &t, false), &format!("zmax {key} T={t:?}"));
            let strict = graph::build_zariski_max_strict_partner(&lat, &t).unwrap();
            assert_eq!(strict.vertices, g.vertices, "strict partner changes vertices on {key}");
            assert_eq!(strict.edges, g.edges, "strict partner changes edges on {key}");
            let gd = graph::build_zariski_max_disjoint(&lat, &t).unwrap();
            assert_same_graph(&gd, raw_zariski(&lat, &raw, &maxes, &t, true), &format!("gd {key} T={t:?}"));
            graphs += 2;
        }
        let primes = lat.prime_indices().to_vec();
        for t in family_subsets(&primes, 4) {
            let g = graph::build_zariski_spec(&lat, &t).unwrap();
            assert_same_graph(&g, raw_zariski(&lat, &raw, &primes, &t, false), &format!("zspec {key} T={t:?}"));
            graphs += 1;
        }
        let ag = graph::build_annihilating(&lat);
        assert_same_graph(&ag, raw_ag(&lat, &raw), &format!("ag {key}"));
        graphs += 1;
    }
    assert!(graphs > 500, "oracle corpus too thin: {graphs} graphs");
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    parent[ra] = rb;
}

fn check_report(g: &SpecGraph, label: &str) {
    let r = analyze(g);
    let n = g.vertices.len();
    let pos = |v: u32| g.vertices.binary_search(&v).expect("edge endpoint is a vertex");

    assert!(g.vertices.windows(2).all(|w| w[0] < w[1]), "{label}: vertices unsorted");
    assert!(g.edges.iter().all(|&(a, b)| a < b), "{label}: edge pair out of order");
    assert_eq!(r.vertex_count, n, "{label}: vertex count");
    assert_eq!(r.edge_count, g.edges.len(), "{label}: edge count");

    // Distances by Floyd-Warshall.
    const INF: u32 = u32::MAX / 2;
    let mut dist = vec![vec![INF; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(a, b) in &g.edges {
        let (i, j) = (pos(a), pos(b));
        dist[i][j] = 1;
        dist[j][i] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k].saturating_add(dist[k][j]);
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    let finite = dist.iter().flatten().copied().filter(|&d| d < INF).max().unwrap_or(0);
    assert_eq!(r.finite_diameter, finite, "{label}: finite diameter");

    // Components by union-find.
    let mut parent: Vec<usize> = (0..n).collect();
    for &(a, b) in &g.edges {
        union(&mut parent, pos(a), pos(b));
    }
    let components = (0..n).filter(|&i| find(&mut parent, i) == i).count();
    assert_eq!(r.component_count, components, "{label}: components");
    assert_eq!(r.connected, components <= 1, "{label}: connected");
    let diameter = if components <= 1 { Some(finite) } else { None };
    assert_eq!(r.diameter, diameter, "{label}: diameter");

    // Degrees recounted from the edge list.
    let mut deg = vec![0u32; n];
    for &(a, b) in &g.edges {
        deg[pos(a)] += 1;
        deg[pos(b)] += 1;
    }
    let degrees: Vec<(u32, u32)> =
        g.vertices.iter().enumerate().map(|(i, &v)| (v, deg[i])).collect();
    assert_eq!(r.degrees, degrees, "{label}: degrees");

    // Girth: BFS from every vertex; each non-tree edge with both ends
    // reachable closes a walk of length d(u) + d(w) + 1 that contains
    // a cycle, and a shortest cycle is recovered from any of its own
    // vertices.
    let adj = g.adjacency();
    let mut girth: Option<u32> = None;
    for s in 0..n {
        let mut d = vec![None; n];
        let mut par = vec![usize::MAX; n];
        d[s] = Some(0u32);
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                let w = w as usize;
                if d[w].is_none() {
                    d[w] = Some(d[u].unwrap() + 1);
                    par[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for &(a, b) in &g.edges {
            let (i, j) = (pos(a), pos(b));
            if par[i] == j || par[j] == i {
                continue;
            }
            if let (Some(di), Some(dj)) = (d[i], d[j]) {
                let cycle = di + dj + 1;
                girth = Some(girth.map_or(cycle, |c| c.min(cycle)));
            }
        }
    }
    assert_eq!(r.girth, girth, "{label}: girth");

    // Bipartite iff no vertex reaches itself through an odd walk:
    // union-find on (vertex, parity) pairs.
    let mut par2: Vec<usize> = (0..2 * n).collect();
    for &(a, b) in &g.edges {
        let (i, j) = (pos(a), pos(b));
        union(&mut par2, 2 * i, 2 * j + 1);
        union(&mut par2, 2 * i + 1, 2 * j);
    }
    let bipartite = (0..n).all(|i| find(&mut par2, 2 * i) != find(&mut par2, 2 * i + 1));
    assert_eq!(r.bipartite, bipartite, "{label}: bipartite");

    // The reported bipartition must be a genuine two-coloring.
    assert_eq!(r.bipartition.is_some(), r.bipartite, "{label}: bipartition presence");
    if let Some((left, right)) = &r.bipartition {
        let ls: BTreeSet<u32> = left.iter().copied().collect();
        let rs: BTreeSet<u32> = right.iter().copied().collect();
        assert_eq!(ls.len() + rs.len(), n, "{label}: bipartition covers");
        assert!(ls.is_disjoint(&rs), "{label}: bipartition overlaps");
        assert!(
            g.edges.iter().all(|&(a, b)| ls.contains(&a) != ls.contains(&b)),
            "{label}: bipartition misses an edge"
        );
        // Complete bipartite: connected, both parts non-empty, every
        // cross pair an edge; a connected graph has one two-coloring
        // up to swapping sides, so this certificate decides it.
        let cb = components == 1
            && !left.is_empty()
            && !right.is_empty()
            && left.iter().all(|&a| right.iter().all(|&b| g.has_edge(a, b)));
        assert_eq!(r.complete_bipartite, cb, "{label}: complete bipartite");
    } else {
        assert!(!r.complete_bipartite, "{label}: complete bipartite without coloring");
    }

    // Second opinion on small graphs: every two-coloring, exhaustively.
    if n <= BRUTE_COLOR_MAX {
        let mut any_coloring = false;
        let mut any_complete = false;
        for mask in 0u32..1 << n {
            let crosses =
                g.edges.iter().all(|&(a, b)| (mask >> pos(a)) & 1 != (mask >> pos(b)) & 1);
            if !crosses {
                continue;
            }
            any_coloring = true;
            let left: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
            let right: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if !left.is_empty()
                && !right.is_empty()
                && left.iter().all(|&i| right.iter().all(|&j| dist[i][j] == 1))
            {
                any_complete = true;
            }
        }
        assert_eq!(r.bipartite, any_coloring, "{label}: exhaustive bipartite");
        assert_eq!(r.complete_bipartite, any_complete, "{label}: exhaustive complete bipartite");
    }
}

#[test]
fn analyzer_matches_textbook_algorithms() {
    let mut graphs = 0usize;
    for (key, lat) in oracle_lattices() {
        let maxes = lat.maximal_indices().to_vec();
        for t in family_subsets(&maxes, 4) {
            check_report(&graph::build_zariski_max(&lat, &t).unwrap(), &format!("zmax {key} T={t:?}"));
            check_report(&graph::build_zariski_max_disjoint(&lat, &t).unwrap(), &format!("gd {key} T={t:?}"));
            graphs += 2;
        }
        let primes = lat.prime_indices().to_vec();
        for t in family_subsets(&primes, 4) {
            check_report(&graph::build_zariski_spec(&lat, &t).unwrap(), &format!("zspec {key} T={t:?}"));
            graphs += 1;
        }
        check_report(&graph::build_annihilating(&lat), &format!("ag {key}"));
        graphs += 1;
    }
    assert!(graphs > 500, "oracle corpus too thin: {graphs} graphs");
}

//! Output documents: the JSON schema for graphs and module
//! inspections, plus the DOT rendering. Everything here is a pure
//! function of its inputs, so repeated runs emit identical bytes.

use std::fmt::Write as _;

use serde::Serialize;
use specgraph_core::{analyze, spectrum, FinModule, Lattice, SpecGraph, Submodule};

use crate::spec::{module_key, ModuleBody, ModuleSpecFile, RingSpec};

pub const SCHEMA_VERSION: u32 = 1;

/// Generator coordinate tuples for a submodule, one tuple per generator.
fn generator_tuples(lat: &Lattice, idx: u32) -> Vec<Vec<u64>> {
    let m = lat.module();
    lat.get(idx).generators(m).iter().map(|&g| m.decode(g)).collect()
}

/// Human label `#3 <[2]>` used in text output and DOT node labels.
pub fn sub_label(lat: &Lattice, idx: u32) -> String {
    let gens: Vec<String> =
        generator_tuples(lat, idx).iter().map(|c| format!("{c:?}")).collect();
    format!("#{} <{}>", idx, gens.join(", "))
}

#[derive(Serialize)]
struct ModuleRef {
    ring: RingSpec,
    invariant_factors: Vec<u64>,
    order: u64,
    key: String,
}

impl ModuleRef {
    fn new(m: &FinModule) -> Self {
        ModuleRef {
            ring: RingSpec { modulus: m.ring().modulus() },
            invariant_factors: m.invariant_factors().to_vec(),
            order: m.order(),
            key: module_key(m),
        }
    }
}

#[derive(Serialize)]
struct VertexDoc {
    id: u32,
    generators: Vec<Vec<u64>>,
    vm_set: Vec<u32>,
}

#[derive(Serialize)]
struct ReportDoc {
    vertex_count: usize,
    edge_count: usize,
    connected: bool,
    component_count: usize,
    diameter: Option<u32>,
    girth: Option<u32>,
    bipartite: bool,
    complete_bipartite: bool,
}

#[derive(Serialize)]
struct GraphDoc {
    schema_version: u32,
    kind: &'static str,
    module: ModuleRef,
    #[serde(rename = "T")]
    t: Vec<u32>,
    vertices: Vec<VertexDoc>,
    edges: Vec<(u32, u32)>,
    analysis: ReportDoc,
}

/// The canonical JSON form of a graph.
pub fn graph_json(lat: &Lattice, g: &SpecGraph) -> String {
    let report = analyze::analyze(g);
    let doc = GraphDoc {
        schema_version: SCHEMA_VERSION,
        kind: g.kind.name(),
        module: ModuleRef::new(lat.module()),
        t: g.t.clone(),
        vertices: g
            .vertices
            .iter()
            .map(|&v| VertexDoc {
                id: v,
                generators: generator_tuples(lat, v),
                vm_set: spectrum::vm_set(lat, v),
            })
            .collect(),
        edges: g.edges.clone(),
        analysis: ReportDoc {
            vertex_count: report.vertex_count,
            edge_count: report.edge_count,
            connected: report.connected,
            component_count: report.component_count,
            diameter: report.diameter,
            girth: report.girth,
            bipartite: report.bipartite,
            complete_bipartite: report.complete_bipartite,
        },
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph doc serializes");
    s.push('\n');
    s
}

/// DOT rendering: nodes in submodule-index order, labelled by their
/// generator tuples; edges as stored (smaller index first).
pub fn graph_dot(lat: &Lattice, g: &SpecGraph) -> String {
    let mut out = String::new();
    let t: Vec<String> = g.t.iter().map(|q| format!("#{q}")).collect();
    out.push_str("graph specgraph {\n");
    let _ = writeln!(
        out,
        "  label=\"{} on {}{}\";",
        g.kind.name(),
        module_key(lat.module()),
        if t.is_empty() { String::new() } else { format!(", T={{{}}}", t.join(",")) }
    );
    out.push_str("  node [shape=ellipse];\n");
    for &v in &g.vertices {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", v, sub_label(lat, v));
    }
    for &(a, b) in &g.edges {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct SubDoc {
    id: u32,
    order: u64,
    generators: Vec<Vec<u64>>,
    colon_divisor: u64,
    maximal: bool,
    prime: bool,
}

#[derive(Serialize)]
struct InspectDoc {
    schema_version: u32,
    ring: RingSpec,
    module: ModuleBody,
    key: String,
    order: u64,
    exponent: u64,
    rank: usize,
    cyclic: bool,
    semisimple: bool,
    faithful: bool,
    annihilator: u64,
    socle: u32,
    submodule_count: usize,
    submodules: Vec<SubDoc>,
    maximal: Vec<u32>,
    prime: Vec<u32>,
    semi_maximal: Vec<u32>,
}

fn inspect_doc(lat: &Lattice) -> InspectDoc {
    let m = lat.module();
    let file = ModuleSpecFile::for_module(m);
    let socle = Submodule::socle(m);
    let maximal = lat.maximal_indices().to_vec();
    let prime = lat.prime_indices().to_vec();
    InspectDoc {
        schema_version: SCHEMA_VERSION,
        ring: file.ring,
        module: file.module,
        key: module_key(m),
        order: m.order(),
        exponent: m.exponent(),
        rank: m.rank(),
        cyclic: m.is_cyclic(),
        semisimple: m.is_semisimple(),
        faithful: m.is_faithful(),
        annihilator: m.annihilator_gen(),
        socle: lat.index_of(&socle).expect("socle is in the lattice"),
        submodule_count: lat.len(),
        submodules: (0..lat.len() as u32)
            .map(|i| SubDoc {
                id: i,
                order: lat.get(i).order(),
                generators: generator_tuples(lat, i),
                colon_divisor: lat.colon_divisor(i),
                maximal: maximal.contains(&i),
                prime: prime.contains(&i),
            })
            .collect(),
        maximal,
        prime,
        semi_maximal: spectrum::semi_maximal_indices(lat),
    }
}

/// JSON inspection; the top level repeats the spec-file keys so the
/// output can be fed back in as a module spec.
pub fn inspect_json(lat: &Lattice) -> String {
    let mut s = serde_json::to_string_pretty(&inspect_doc(lat)).expect("inspect doc serializes");
    s.push('\n');
    s
}

pub fn inspect_text(lat: &Lattice) -> String {
    let d = inspect_doc(lat);
    let mut out = String::new();
    let ring = if d.ring.modulus == 0 {
        "Z".to_string()
    } else {
        format!("Z/{}", d.ring.modulus)
    };
    let _ = writeln!(out, "module {} over {}", d.key, ring);
    let _ = writeln!(
        out,
        "  invariant factors {:?}, order {}, exponent {}, rank {}",
        d.module.invariant_factors, d.order, d.exponent, d.rank
    );
    let mut flags = Vec::new();
    for (on, name) in
        [(d.cyclic, "cyclic"), (d.semisimple, "semisimple"), (d.faithful, "faithful")]
    {
        if on {
            flags.push(name);
        }
    }
    let _ = writeln!(
        out,
        "  annihilator ({}), socle {}{}",
        d.annihilator,
        sub_label(lat, d.socle),
        if flags.is_empty() { String::new() } else { format!(", {}", flags.join(", ")) }
    );
    let _ = writeln!(out, "submodules ({}):", d.submodule_count);
    for s in &d.submodules {
        let mut marks = String::new();
        if s.maximal {
            marks.push_str(" maximal");
        } else if s.prime {
            marks.push_str(" prime");
        }
        let _ = writeln!(
            out,
            "  {} order {}, colon divisor {}{}",
            sub_label(lat, s.id),
            s.order,
            s.colon_divisor,
            marks
        );
    }
    let names = |ids: &[u32]| -> String {
        if ids.is_empty() {
            "none".to_string()
        } else {
            ids.iter().map(|&i| sub_label(lat, i)).collect::<Vec<_>>().join(", ")
        }
    };
    let _ = writeln!(out, "maximal submodules ({}): {}", d.maximal.len(), names(&d.maximal));
    let _ = writeln!(out, "prime submodules ({}): {}", d.prime.len(), names(&d.prime));
    let _ = writeln!(
        out,
        "semi-maximal submodules ({}): {}",
        d.semi_maximal.len(),
        names(&d.semi_maximal)
    );
    out
}

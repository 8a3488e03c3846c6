//! The claim catalog: checkable statements about the graphs, each
//! verified on concrete instances. Module-scope claims look at one
//! module; subset-scope claims look at a (module, T) pair with T a
//! non-empty subset of the maximal spectrum.
//!
//! A checker never errors: failures are data (with a replayable
//! witness), and unmet hypotheses are reported as such rather than
//! silently passed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;

use crate::analyze::{self, GraphReport};
use crate::error::Result;
use crate::graph::{self, SpecGraph};
use crate::lattice::Lattice;
use crate::module::FinModule;
use crate::num;
use crate::quotient::QuotientMap;
use crate::ring::{self, Ring};
use crate::spectrum;
use crate::submodule::Submodule;
use crate::topology;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Scope {
    Module,
    Subset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClaimStatus {
    Pass,
    Fail,
    HypothesisNotMet,
    Skipped,
}

impl ClaimStatus {
    pub fn name(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::HypothesisNotMet => "hypothesis-not-met",
            ClaimStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub status: ClaimStatus,
    pub detail: Vec<(&'static str, String)>,
}

pub struct ClaimInfo {
    pub id: &'static str,
    pub scope: Scope,
    pub statement: &'static str,
}

pub const REGISTRY: &[ClaimInfo] = &[
    ClaimInfo {
        id: "rem-3.1",
        scope: Scope::Module,
        statement: "M is an AG vertex iff every non-zero submodule is one iff some non-zero proper N has (N:M) = Ann(M)",
    },
    ClaimInfo {
        id: "prop-A",
        scope: Scope::Module,
        statement: "Ann(N) != Ann(M) or (0 : (N:M)) != 0 makes a non-zero proper N an AG vertex; for cyclic M the kernel condition is equivalent to vertexhood",
    },
    ClaimInfo {
        id: "thm-B",
        scope: Scope::Module,
        statement: "when M is not an AG vertex: AG(M) is empty iff M is prime, and a non-zero N is a vertex iff (0 : (N:M)) != 0",
    },
    ClaimInfo {
        id: "thm-C",
        scope: Scope::Module,
        statement: "AG(M) is connected with diameter at most 3, and any cycle forces girth at most 4",
    },
    ClaimInfo {
        id: "prop-D",
        scope: Scope::Module,
        statement: "over an Artinian ring every non-zero proper submodule is an AG vertex",
    },
    ClaimInfo {
        id: "thm-E",
        scope: Scope::Module,
        statement: "for a non-prime module, ascending and descending chain conditions on AG vertices match the module being Noetherian and Artinian (all four hold here)",
    },
    ClaimInfo {
        id: "thm-F",
        scope: Scope::Module,
        statement: "reduced ring, faithful non-prime M: the proper AG vertices are exactly the non-zero proper submodules",
    },
    ClaimInfo {
        id: "prop-G",
        scope: Scope::Module,
        statement: "for non-empty AG(M): either every non-zero submodule is a vertex, or (some mM is a vertex iff Soc(M) != 0)",
    },
    ClaimInfo {
        id: "thm-4.4",
        scope: Scope::Module,
        statement: "for every N and prime p dividing the colon generator of N there is a prime submodule K containing N with (K:M) = pR",
    },
    ClaimInfo {
        id: "lemma-4.6",
        scope: Scope::Module,
        statement: "at ring dimension 0, every submodule equals its prime radical iff Nil(R)M = 0",
    },
    ClaimInfo {
        id: "lemma-3.2",
        scope: Scope::Subset,
        statement: "the zariski graph is non-empty iff T is closed and not irreducible",
    },
    ClaimInfo {
        id: "remark-3.3",
        scope: Scope::Subset,
        statement: "T is closed iff T = Vm of its intersection; non-emptiness restated through that equality",
    },
    ClaimInfo {
        id: "remark-3.4",
        scope: Scope::Subset,
        statement: "when Spec = Max and the graph is non-empty, T = Vm of its intersection and the intersection is not prime",
    },
    ClaimInfo {
        id: "thm-3.6",
        scope: Scope::Subset,
        statement: "a non-empty zariski graph is connected with diameter at most 3 and girth 3, 4, or infinite",
    },
    ClaimInfo {
        id: "prop-3.7",
        scope: Scope::Subset,
        statement: "when the natural map is a homeomorphism, adjacency transfers to the ring-side graph over the witness ideals and back",
    },
    ClaimInfo {
        id: "lemma-3.8a",
        scope: Scope::Subset,
        statement: "P in T is a vertex whenever some T' containing P has Vm of its intersection equal to T but dropping P breaks the equality",
    },
    ClaimInfo {
        id: "lemma-3.8b",
        scope: Scope::Subset,
        statement: "P in T is a vertex whenever some vertex N has N + P outside the vertex set",
    },
    ClaimInfo {
        id: "def-3.10-deg",
        scope: Scope::Subset,
        statement: "in the disjointness subgraph the degree of N counts the proper submodules whose Vm-set is the complement of Vm(N) in T",
    },
    ClaimInfo {
        id: "lemma-3.11a",
        scope: Scope::Subset,
        statement: "the disjointness subgraph is non-empty iff T = Vm of its intersection and T is disconnected",
    },
    ClaimInfo {
        id: "lemma-3.11b",
        scope: Scope::Subset,
        statement: "with Spec = Max, Max-surjectivity, and closed T: the disjointness subgraph is empty iff R modulo the colon of the intersection has no nontrivial idempotents",
    },
    ClaimInfo {
        id: "thm-3.12",
        scope: Scope::Subset,
        statement: "the disjointness subgraph is bipartite",
    },
    ClaimInfo {
        id: "cor-3.13",
        scope: Scope::Subset,
        statement: "a cycle in the disjointness subgraph forces girth exactly 4",
    },
    ClaimInfo {
        id: "prop-3.17a",
        scope: Scope::Subset,
        statement: "a non-empty disjointness subgraph is complete bipartite iff vertices in the same part share one Vm-set",
    },
    ClaimInfo {
        id: "prop-3.17b",
        scope: Scope::Subset,
        statement: "a non-empty disjointness subgraph is connected iff it is complete bipartite",
    },
    ClaimInfo {
        id: "prop-3.17d",
        scope: Scope::Subset,
        statement: "two disjointness-subgraph vertices are at distance 2 iff their Vm-sets are equal",
    },
    ClaimInfo {
        id: "zmax-partner",
        scope: Scope::Subset,
        statement: "requiring the qualifying partner to be non-zero does not change the zariski graph",
    },
    ClaimInfo {
        id: "thm-4.1",
        scope: Scope::Subset,
        statement: "for Max-surjective M, each edge maps to an edge of the annihilating graph of the quotient via the Jm-radical of the colon multiple",
    },
    ClaimInfo {
        id: "cor-4.2",
        scope: Scope::Subset,
        statement: "for Max-surjective M, each edge maps to an edge of the annihilating graph of the quotient via the Jm-radical itself",
    },
    ClaimInfo {
        id: "prop-4.3a",
        scope: Scope::Subset,
        statement: "when the quotient is not an AG vertex, its annihilating graph embeds into the zariski graph by taking preimages",
    },
    ClaimInfo {
        id: "prop-4.3b",
        scope: Scope::Subset,
        statement: "when the quotient is not an AG vertex (plus Max-surjectivity or Spec = Max), the two graphs are empty together",
    },
    ClaimInfo {
        id: "prop-4.3c",
        scope: Scope::Subset,
        statement: "Artinian ring, quotient not an AG vertex: every non-zero proper quotient submodule is an AG vertex and its preimage a zariski vertex",
    },
    ClaimInfo {
        id: "thm-4.5a",
        scope: Scope::Subset,
        statement: "quotient not an AG vertex: adjacency downstairs lifts to adjacency upstairs",
    },
    ClaimInfo {
        id: "thm-4.5a2-vm",
        scope: Scope::Subset,
        statement: "no semi-maximal S other than the intersection has Vm(S) = T: adjacency downstairs lifts upstairs",
    },
    ClaimInfo {
        id: "thm-4.5a2-v",
        scope: Scope::Subset,
        statement: "V-reading variant: matches the Vm reading where both hypotheses hold; instances admitted only by the V reading are recorded with their lift outcomes",
    },
    ClaimInfo {
        id: "thm-4.5b-vm",
        scope: Scope::Subset,
        statement: "edges whose endpoints have Max-surjective quotients and no bad semi-maximal above them (Vm reading) lift upstairs",
    },
    ClaimInfo {
        id: "thm-4.5b-v",
        scope: Scope::Subset,
        statement: "V-reading variant of the per-edge hypotheses: matches the Vm reading on edges both readings admit; V-only edges are recorded with their lift outcomes",
    },
    ClaimInfo {
        id: "prop-4.7",
        scope: Scope::Subset,
        statement: "ring dimension 0, Nil(R)M = 0, quotient not an AG vertex: the zariski graph and the quotient annihilating graph are isomorphic",
    },
    ClaimInfo {
        id: "lemma-4.8",
        scope: Scope::Subset,
        statement: "quotient not an AG vertex and every vertex in T adjacent to a semi-maximal: maximal vertices exist upstairs iff they exist downstairs",
    },
    ClaimInfo {
        id: "prop-4.9",
        scope: Scope::Subset,
        statement: "either some non-zero K other than the intersection has Vm(K) = T, or (some mM lies in T and the vertex set iff Soc of the quotient is non-zero)",
    },
    ClaimInfo {
        id: "thm-4.10",
        scope: Scope::Subset,
        statement: "faithful quotient that is not an AG vertex: the zariski vertex count equals the number of non-zero proper quotient submodules",
    },
];

pub fn claim_info(id: &str) -> Option<&'static ClaimInfo> {
    REGISTRY.iter().find(|c| c.id == id)
}

fn pass(id: &'static str) -> ClaimResult {
    ClaimResult { id, status: ClaimStatus::Pass, detail: Vec::new() }
}

fn pass_with(id: &'static str, detail: Vec<(&'static str, String)>) -> ClaimResult {
    ClaimResult { id, status: ClaimStatus::Pass, detail }
}

fn fail(id: &'static str, detail: Vec<(&'static str, String)>) -> ClaimResult {
    ClaimResult { id, status: ClaimStatus::Fail, detail }
}

fn hyp_not_met(id: &'static str, why: &str) -> ClaimResult {
    ClaimResult {
        id,
        status: ClaimStatus::HypothesisNotMet,
        detail: alloc::vec![("unmet", String::from(why))],
    }
}

fn skipped(id: &'static str, why: &str) -> ClaimResult {
    ClaimResult {
        id,
        status: ClaimStatus::Skipped,
        detail: alloc::vec![("skipped", String::from(why))],
    }
}

/// Everything a module-scope checker needs, built once per module.
/// The subset-independent facts the subset checkers keep asking for
/// (semi-maximal list, surjectivity of the natural map and friends)
/// are cached here rather than recomputed per T.
pub struct ModuleArtifacts {
    pub lat: Lattice,
    pub max_order: u64,
    pub ag: SpecGraph,
    pub ag_report: GraphReport,
    pub semi_max: Vec<u32>,
    pub spec_eq_max: bool,
    pub max_surjective: bool,
    pub natural_homeo: bool,
    /// Lattice of R/Ann(M) as a module over itself, for transferring
    /// adjacency to the ring side; present when the natural map is a
    /// homeomorphism and the quotient ring is non-trivial.
    pub ring_side: Option<Lattice>,
}

impl ModuleArtifacts {
    pub fn new(module: &FinModule, max_order: u64) -> Result<Self> {
        let lat = Lattice::enumerate(module, max_order)?;
        let ag = graph::build_annihilating(&lat);
        let ag_report = analyze::analyze(&ag);
        let semi_max = spectrum::semi_maximal_indices(&lat);
        let spec_eq_max = spectrum::spec_equals_max(&lat);
        let max_surjective = spectrum::is_max_surjective(&lat);
        let natural_homeo = spectrum::is_natural_map_homeomorphism(&lat);
        let ring_side = if natural_homeo {
            let e = module.exponent();
            Ring::new(e)
                .and_then(|r| FinModule::new(r, &[e]))
                .and_then(|m| Lattice::enumerate(&m, max_order))
                .ok()
        } else {
            None
        };
        Ok(ModuleArtifacts {
            lat,
            max_order,
            ag,
            ag_report,
            semi_max,
            spec_eq_max,
            max_surjective,
            natural_homeo,
            ring_side,
        })
    }

    pub fn module(&self) -> &FinModule {
        self.lat.module()
    }

    pub fn m_is_ag_vertex(&self) -> bool {
        self.ag.has_vertex(self.lat.full_idx())
    }

    /// Semi-maximal submodules containing the one at index `n`.
    pub fn semi_max_above(&self, n: u32) -> impl Iterator<Item = u32> + '_ {
        self.semi_max.iter().copied().filter(move |&s| self.lat.leq(n, s))
    }
}

/// Artifacts for one quotient M/N, shared between the subsets whose
/// intersection is the same N.
pub struct QuotientArtifacts {
    pub by: u32,
    pub map: QuotientMap,
    pub lat: Lattice,
    pub ag: SpecGraph,
    pub ag_report: GraphReport,
}

impl QuotientArtifacts {
    pub fn new(ma: &ModuleArtifacts, by: u32) -> Result<Self> {
        let map = QuotientMap::new(ma.module(), ma.lat.get(by));
        let lat = Lattice::enumerate(map.target(), ma.max_order)?;
        let ag = graph::build_annihilating(&lat);
        let ag_report = analyze::analyze(&ag);
        Ok(QuotientArtifacts { by, map, lat, ag, ag_report })
    }

    pub fn mbar_is_ag_vertex(&self) -> bool {
        self.ag.has_vertex(self.lat.full_idx())
    }

    /// Index (in the quotient lattice) of the image of submodule `n`.
    pub fn bar_index(&self, source: &Lattice, n: u32) -> u32 {
        let image = self.map.project_submodule(source.get(n));
        self.lat.index_of(&image).unwrap()
    }

    /// Index (in the source lattice) of the preimage of `sbar`.
    pub fn preimage_index(&self, source: &Lattice, sbar: u32) -> u32 {
        let pre = self.map.preimage(self.lat.get(sbar));
        source.index_of(&pre).unwrap()
    }
}

pub type QuotientCache = BTreeMap<u32, Rc<QuotientArtifacts>>;

/// Everything a subset-scope checker needs for one (module, T) pair.
pub struct SubsetArtifacts<'a> {
    pub ma: &'a ModuleArtifacts,
    pub t: Vec<u32>,
    pub g: SpecGraph,
    pub g_report: GraphReport,
    pub gd: SpecGraph,
    pub gd_report: GraphReport,
    pub closed: bool,
    pub irreducible: bool,
    pub connected_t: bool,
    pub im_t: u32,
    pub quo: Rc<QuotientArtifacts>,
}

impl<'a> SubsetArtifacts<'a> {
    pub fn new(ma: &'a ModuleArtifacts, t: &[u32], cache: &mut QuotientCache) -> Result<Self> {
        let lat = &ma.lat;
        let g = graph::build_zariski_max(lat, t)?;
        let g_report = analyze::analyze(&g);
        let gd = graph::build_zariski_max_disjoint(lat, t)?;
        let gd_report = analyze::analyze(&gd);
        let im_t = spectrum::intersection_of(lat, t);
        let quo = match cache.get(&im_t) {
            Some(q) => Rc::clone(q),
            None => {
                let q = Rc::new(QuotientArtifacts::new(ma, im_t)?);
                cache.insert(im_t, Rc::clone(&q));
                q
            }
        };
        Ok(SubsetArtifacts {
            ma,
            t: t.to_vec(),
            g,
            g_report,
            gd,
            gd_report,
            closed: topology::is_closed(lat, t),
            irreducible: topology::is_irreducible(lat, t),
            connected_t: topology::is_connected_subspace(lat, t),
            im_t,
            quo,
        })
    }

    fn lat(&self) -> &Lattice {
        &self.ma.lat
    }

    fn vm(&self, n: u32) -> Vec<u32> {
        spectrum::vm_set(self.lat(), n)
    }
}

fn sub_name(lat: &Lattice, n: u32) -> String {
    let m = lat.module();
    let gens: Vec<String> = lat
        .get(n)
        .generators(m)
        .iter()
        .map(|&g| format!("{:?}", m.decode(g)))
        .collect();
    format!("#{} <{}>", n, gens.join(", "))
}

/// Generator of Ann(N) for the subgroup at index `n`: the exponent of
/// the subgroup, normalized in the ring.
fn sub_ann_gen(lat: &Lattice, n: u32) -> u64 {
    let m = lat.module();
    let e = lat
        .get(n)
        .elements()
        .iter()
        .fold(1u64, |acc, &x| num::lcm(acc, m.element_order(x)));
    m.ring().normalize_gen(e)
}

/// Whether (0 :_M dR) is non-zero, i.e. multiplication by `d` has a
/// non-trivial kernel.
fn mult_kernel_nonzero(m: &FinModule, d: u64) -> bool {
    (1..m.order() as u32).any(|x| m.smul(d, x) == 0)
}

pub fn check_module_claim(id: &str, ma: &ModuleArtifacts) -> Option<ClaimResult> {
    let r = match id {
        "rem-3.1" => rem_3_1(ma),
        "prop-A" => prop_a(ma),
        "thm-B" => thm_b(ma),
        "thm-C" => thm_c(ma),
        "prop-D" => prop_d(ma),
        "thm-E" => thm_e(ma),
        "thm-F" => thm_f(ma),
        "prop-G" => prop_g(ma),
        "thm-4.4" => thm_4_4(ma),
        "lemma-4.6" => lemma_4_6(ma),
        _ => return None,
    };
    Some(r)
}

pub fn check_subset_claim(id: &str, sa: &SubsetArtifacts) -> Option<ClaimResult> {
    let r = match id {
        "lemma-3.2" => lemma_3_2(sa),
        "remark-3.3" => remark_3_3(sa),
        "remark-3.4" => remark_3_4(sa),
        "thm-3.6" => thm_3_6(sa),
        "prop-3.7" => prop_3_7(sa),
        "lemma-3.8a" => lemma_3_8a(sa),
        "lemma-3.8b" => lemma_3_8b(sa),
        "def-3.10-deg" => def_3_10_deg(sa),
        "lemma-3.11a" => lemma_3_11a(sa),
        "lemma-3.11b" => lemma_3_11b(sa),
        "thm-3.12" => thm_3_12(sa),
        "cor-3.13" => cor_3_13(sa),
        "prop-3.17a" => prop_3_17a(sa),
        "prop-3.17b" => prop_3_17b(sa),
        "prop-3.17d" => prop_3_17d(sa),
        "zmax-partner" => zmax_partner(sa),
        "thm-4.1" => thm_4_1(sa, true),
        "cor-4.2" => thm_4_1(sa, false),
        "prop-4.3a" => prop_4_3a(sa),
        "prop-4.3b" => prop_4_3b(sa),
        "prop-4.3c" => prop_4_3c(sa),
        "thm-4.5a" => thm_4_5a(sa),
        "thm-4.5a2-vm" => thm_4_5a2(sa, true),
        "thm-4.5a2-v" => thm_4_5a2(sa, false),
        "thm-4.5b-vm" => thm_4_5b(sa, true),
        "thm-4.5b-v" => thm_4_5b(sa, false),
        "prop-4.7" => prop_4_7(sa),
        "lemma-4.8" => lemma_4_8(sa),
        "prop-4.9" => prop_4_9(sa),
        "thm-4.10" => thm_4_10(sa),
        _ => return None,
    };
    Some(r)
}

/// Always fails with a replayable witness. Not in the registry; it
/// exists so tests can exercise the failure and replay plumbing.
pub fn demo_fail_claim(ma: &ModuleArtifacts) -> ClaimResult {
    fail(
        "demo-always-fail",
        alloc::vec![("module_order", format!("{}", ma.module().order()))],
    )
}

fn rem_3_1(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "rem-3.1";
    let lat = &ma.lat;
    if ma.module().is_zero() {
        return skipped(ID, "zero module");
    }
    let a = ma.m_is_ag_vertex();
    let b = ma.ag.vertices.len() == lat.len() - 1;
    let ann = ma.module().annihilator_gen();
    let c = (1..lat.full_idx()).any(|n| lat.colon_gen(n) == ann);
    if a == b && b == c {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("m_vertex", format!("{a}")),
                ("all_nonzero_vertices", format!("{b}")),
                ("witness_exists", format!("{c}")),
            ],
        )
    }
}

fn prop_a(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "prop-A";
    let lat = &ma.lat;
    let m = ma.module();
    let ann_m = m.annihilator_gen();
    let cyclic = m.is_cyclic();
    for n in 1..lat.full_idx() {
        let premise = sub_ann_gen(lat, n) != ann_m
            || mult_kernel_nonzero(m, lat.colon_divisor(n));
        let vertex = ma.ag.has_vertex(n);
        if premise && !vertex {
            return fail(ID, alloc::vec![("n", sub_name(lat, n)), ("direction", String::from("sufficient"))]);
        }
        if cyclic {
            let kernel = mult_kernel_nonzero(m, lat.colon_divisor(n));
            if vertex != kernel {
                return fail(
                    ID,
                    alloc::vec![("n", sub_name(lat, n)), ("direction", String::from("cyclic iff"))],
                );
            }
        }
    }
    pass_with(ID, alloc::vec![("cyclic", format!("{cyclic}"))])
}

fn thm_b(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "thm-B";
    let lat = &ma.lat;
    if ma.module().is_zero() {
        return skipped(ID, "zero module");
    }
    if ma.m_is_ag_vertex() {
        return hyp_not_met(ID, "M is an AG vertex");
    }
    let prime = lat.prime_indices().binary_search(&lat.zero_idx()).is_ok();
    if ma.ag.is_empty() != prime {
        return fail(
            ID,
            alloc::vec![("ag_empty", format!("{}", ma.ag.is_empty())), ("m_prime", format!("{prime}"))],
        );
    }
    for n in 1..lat.len() as u32 {
        let kernel = mult_kernel_nonzero(ma.module(), lat.colon_divisor(n));
        if ma.ag.has_vertex(n) != kernel {
            return fail(
                ID,
                alloc::vec![("n", sub_name(lat, n)), ("kernel_nonzero", format!("{kernel}"))],
            );
        }
    }
    pass(ID)
}

fn thm_c(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "thm-C";
    if ma.ag.is_empty() {
        return pass_with(ID, alloc::vec![("note", String::from("empty graph"))]);
    }
    let r = &ma.ag_report;
    let ok = r.connected
        && r.diameter.is_some_and(|d| d <= 3)
        && r.girth.is_none_or(|g| g <= 4);
    if ok {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("connected", format!("{}", r.connected)),
                ("diameter", format!("{:?}", r.diameter)),
                ("girth", format!("{:?}", r.girth)),
            ],
        )
    }
}

fn prop_d(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "prop-D";
    let lat = &ma.lat;
    if lat.module().ring().is_z() {
        return hyp_not_met(ID, "ring is not Artinian");
    }
    for n in 1..lat.full_idx() {
        if !ma.ag.has_vertex(n) {
            return fail(ID, alloc::vec![("n", sub_name(lat, n))]);
        }
    }
    pass_with(ID, alloc::vec![("proper_nonzero", format!("{}", lat.len().saturating_sub(2)))])
}

fn thm_e(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "thm-E";
    let lat = &ma.lat;
    if ma.module().is_zero() {
        return skipped(ID, "zero module");
    }
    if lat.prime_indices().binary_search(&lat.zero_idx()).is_ok() {
        return hyp_not_met(ID, "M is a prime module");
    }
    // Finite vertex set: acc and dcc hold, and the module is both
    // Noetherian and Artinian, so the equivalence is consistent.
    pass_with(ID, alloc::vec![("vertices", format!("{}", ma.ag.vertices.len()))])
}

fn thm_f(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "thm-F";
    let lat = &ma.lat;
    let m = ma.module();
    if m.is_zero() {
        return skipped(ID, "zero module");
    }
    let ring = m.ring();
    let reduced = ring.nil_radical_gen() == ring.normalize_gen(0);
    let prime = lat.prime_indices().binary_search(&lat.zero_idx()).is_ok();
    if !(reduced && m.is_faithful() && !prime) {
        return hyp_not_met(ID, "needs a reduced ring and a faithful non-prime module");
    }
    let proper_vertices =
        ma.ag.vertices.iter().filter(|&&v| v != lat.full_idx()).count();
    let nonzero_proper = lat.len() - 2;
    if proper_vertices == nonzero_proper {
        pass_with(ID, alloc::vec![("m_vertex", format!("{}", ma.m_is_ag_vertex()))])
    } else {
        fail(
            ID,
            alloc::vec![
                ("proper_vertices", format!("{proper_vertices}")),
                ("nonzero_proper", format!("{nonzero_proper}")),
            ],
        )
    }
}

fn prop_g(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "prop-G";
    let lat = &ma.lat;
    let m = ma.module();
    if ma.ag.is_empty() {
        return hyp_not_met(ID, "AG(M) is empty");
    }
    if ma.ag.vertices.len() == lat.len() - 1 {
        return pass_with(ID, alloc::vec![("branch", String::from("a"))]);
    }
    // Candidates mM over maximal ideals: p dividing the exponent gives
    // a proper multiple, any other maximal ideal gives M itself (over Z
    // such a prime always exists; over Z/N one must divide N).
    let e = m.exponent();
    let mut lhs = num::distinct_primes(e)
        .iter()
        .any(|&p| ma.ag.has_vertex(lat.scale_full_idx(p)));
    let ring = m.ring();
    let coprime_maximal_exists = if ring.is_z() {
        true
    } else {
        num::distinct_primes(ring.modulus()).iter().any(|p| !e.is_multiple_of(*p))
    };
    if coprime_maximal_exists && ma.m_is_ag_vertex() {
        lhs = true;
    }
    let rhs = !Submodule::socle(m).is_zero();
    if lhs == rhs {
        pass_with(ID, alloc::vec![("branch", String::from("b"))])
    } else {
        fail(
            ID,
            alloc::vec![("mm_vertex_exists", format!("{lhs}")), ("socle_nonzero", format!("{rhs}"))],
        )
    }
}

fn thm_4_4(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "thm-4.4";
    let lat = &ma.lat;
    if ma.module().is_zero() {
        return skipped(ID, "zero module");
    }
    for n in 0..lat.len() as u32 {
        for p in num::distinct_primes(lat.colon_gen(n)) {
            let found = lat
                .prime_indices()
                .iter()
                .any(|&k| lat.leq(n, k) && lat.colon_divisor(k) == p);
            if !found {
                return fail(ID, alloc::vec![("n", sub_name(lat, n)), ("p", format!("{p}"))]);
            }
        }
    }
    pass(ID)
}

fn lemma_4_6(ma: &ModuleArtifacts) -> ClaimResult {
    const ID: &str = "lemma-4.6";
    let lat = &ma.lat;
    let ring = ma.module().ring();
    if ring.krull_dim() != 0 {
        return hyp_not_met(ID, "ring dimension is not 0");
    }
    let fixed = (0..lat.len() as u32)
        .filter(|&n| spectrum::prime_radical_idx(lat, n) == n)
        .count();
    let all_fixed = fixed == lat.len();
    let nil_m_zero = lat.scale_full_idx(ring.nil_radical_gen()) == lat.zero_idx();
    if all_fixed == nil_m_zero {
        pass_with(ID, alloc::vec![("radical_fixed", format!("{fixed}/{}", lat.len()))])
    } else {
        fail(
            ID,
            alloc::vec![
                ("radical_fixed", format!("{fixed}/{}", lat.len())),
                ("nil_m_zero", format!("{nil_m_zero}")),
            ],
        )
    }
}

fn lemma_3_2(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "lemma-3.2";
    let lhs = !sa.g.is_empty();
    let rhs = sa.closed && !sa.irreducible;
    if lhs == rhs {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("non_empty", format!("{lhs}")),
                ("closed", format!("{}", sa.closed)),
                ("irreducible", format!("{}", sa.irreducible)),
            ],
        )
    }
}

fn remark_3_3(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "remark-3.3";
    let lat = sa.lat();
    let vm_fixed = sa.vm(sa.im_t) == sa.t;
    let some_vm = (0..lat.len() as u32).any(|n| sa.vm(n) == sa.t);
    if vm_fixed != some_vm {
        return fail(
            ID,
            alloc::vec![("vm_of_intersection", format!("{vm_fixed}")), ("some_vm", format!("{some_vm}"))],
        );
    }
    if vm_fixed != sa.closed {
        return fail(
            ID,
            alloc::vec![("vm_of_intersection", format!("{vm_fixed}")), ("closed", format!("{}", sa.closed))],
        );
    }
    let lhs = !sa.g.is_empty();
    let rhs = vm_fixed && !sa.irreducible;
    if lhs == rhs {
        pass(ID)
    } else {
        fail(ID, alloc::vec![("non_empty", format!("{lhs}")), ("rhs", format!("{rhs}"))])
    }
}

fn remark_3_4(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "remark-3.4";
    let lat = sa.lat();
    if !sa.ma.spec_eq_max {
        return hyp_not_met(ID, "Spec != Max");
    }
    if sa.g.is_empty() {
        return hyp_not_met(ID, "empty graph");
    }
    let vm_fixed = sa.vm(sa.im_t) == sa.t;
    let im_prime = lat.prime_indices().binary_search(&sa.im_t).is_ok();
    if vm_fixed && !im_prime {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("vm_of_intersection", format!("{vm_fixed}")),
                ("intersection_prime", format!("{im_prime}")),
            ],
        )
    }
}

fn thm_3_6(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "thm-3.6";
    if sa.g.is_empty() {
        return hyp_not_met(ID, "empty graph");
    }
    let r = &sa.g_report;
    let ok = r.connected
        && r.diameter.is_some_and(|d| d <= 3)
        && r.girth.is_none_or(|g| g <= 4);
    if ok {
        pass_with(ID, alloc::vec![("diameter", format!("{:?}", r.diameter.unwrap()))])
    } else {
        fail(
            ID,
            alloc::vec![
                ("connected", format!("{}", r.connected)),
                ("diameter", format!("{:?}", r.diameter)),
                ("girth", format!("{:?}", r.girth)),
            ],
        )
    }
}

fn prop_3_7(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-3.7";
    let lat = sa.lat();
    if !sa.ma.natural_homeo {
        return hyp_not_met(ID, "natural map is not a homeomorphism");
    }
    // Ring side: R/Ann(M) as a module over itself, T' the images of
    // the witness ideals of T.
    let ring_lat = match &sa.ma.ring_side {
        Some(l) => l,
        None => return skipped(ID, "trivial quotient ring"),
    };
    let mut t2: Vec<u32> = sa
        .t
        .iter()
        .map(|&q| ring_lat.scale_full_idx(spectrum::witness_prime(lat, q)))
        .collect();
    t2.sort_unstable();
    t2.dedup();
    let g2 = graph::build_zariski_max(ring_lat, &t2).unwrap();
    for &(n, l) in &sa.g.edges {
        let x = ring_lat.scale_full_idx(lat.colon_divisor(n));
        let y = ring_lat.scale_full_idx(lat.colon_divisor(l));
        if !g2.has_edge(x, y) {
            return fail(
                ID,
                alloc::vec![
                    ("edge", format!("{} -- {}", sub_name(lat, n), sub_name(lat, l))),
                    ("direction", String::from("forward")),
                ],
            );
        }
    }
    for &(i, j) in &g2.edges {
        let im = lat.scale_full_idx(ring_lat.colon_divisor(i));
        let jm = lat.scale_full_idx(ring_lat.colon_divisor(j));
        if !sa.g.has_edge(im, jm) {
            return fail(
                ID,
                alloc::vec![
                    ("ideal_edge", format!("{}R -- {}R", ring_lat.colon_divisor(i), ring_lat.colon_divisor(j))),
                    ("direction", String::from("converse")),
                ],
            );
        }
    }
    pass_with(ID, alloc::vec![("edges", format!("{}+{}", sa.g.edges.len(), g2.edges.len()))])
}

fn lemma_3_8a(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "lemma-3.8a";
    if sa.g.is_empty() {
        return hyp_not_met(ID, "empty graph");
    }
    let lat = sa.lat();
    let k = sa.t.len();
    // Intersections and their Vm-sets for every subset of T.
    let mut hits_t = alloc::vec![false; 1 << k];
    for mask in 0..(1u32 << k) {
        let chosen: Vec<u32> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| sa.t[i]).collect();
        hits_t[mask as usize] = sa.vm(spectrum::intersection_of(lat, &chosen)) == sa.t;
    }
    for (pi, &p) in sa.t.iter().enumerate() {
        let premise = (0..(1u32 << k)).any(|mask| {
            mask >> pi & 1 == 1 && hits_t[mask as usize] && !hits_t[(mask & !(1 << pi)) as usize]
        });
        if premise && !sa.g.has_vertex(p) {
            return fail(ID, alloc::vec![("p", sub_name(lat, p))]);
        }
    }
    pass(ID)
}

fn lemma_3_8b(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "lemma-3.8b";
    if sa.g.is_empty() {
        return hyp_not_met(ID, "empty graph");
    }
    let lat = sa.lat();
    for &p in &sa.t {
        if sa.g.has_vertex(p) {
            continue;
        }
        for &n in &sa.g.vertices {
            if !sa.g.has_vertex(lat.sum_idx(n, p)) {
                return fail(ID, alloc::vec![("p", sub_name(lat, p)), ("n", sub_name(lat, n))]);
            }
        }
    }
    pass(ID)
}

fn def_3_10_deg(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "def-3.10-deg";
    let lat = sa.lat();
    for &v in &sa.gd.vertices {
        let vm_v = sa.vm(v);
        let complement: Vec<u32> =
            sa.t.iter().copied().filter(|q| vm_v.binary_search(q).is_err()).collect();
        let count = (0..lat.full_idx()).filter(|&k| sa.vm(k) == complement).count();
        if sa.gd.degree(v) != count {
            return fail(
                ID,
                alloc::vec![
                    ("n", sub_name(lat, v)),
                    ("degree", format!("{}", sa.gd.degree(v))),
                    ("complement_count", format!("{count}")),
                ],
            );
        }
    }
    pass(ID)
}

fn lemma_3_11a(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "lemma-3.11a";
    let lhs = !sa.gd.is_empty();
    let rhs = sa.vm(sa.im_t) == sa.t && !sa.connected_t;
    if lhs == rhs {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("non_empty", format!("{lhs}")),
                ("vm_of_intersection", format!("{}", sa.vm(sa.im_t) == sa.t)),
                ("t_connected", format!("{}", sa.connected_t)),
            ],
        )
    }
}

fn lemma_3_11b(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "lemma-3.11b";
    let lat = sa.lat();
    if !sa.ma.spec_eq_max {
        return hyp_not_met(ID, "Spec != Max");
    }
    if !sa.ma.max_surjective {
        return hyp_not_met(ID, "not Max-surjective");
    }
    if !sa.closed {
        return hyp_not_met(ID, "T not closed");
    }
    let ring = lat.module().ring();
    let modulus = ring.quotient_modulus(lat.colon_divisor(sa.im_t));
    let lhs = sa.gd.is_empty();
    let rhs = !ring::has_nontrivial_idempotents(modulus);
    if lhs == rhs {
        pass_with(ID, alloc::vec![("quotient_ring_modulus", format!("{modulus}"))])
    } else {
        fail(
            ID,
            alloc::vec![
                ("gd_empty", format!("{lhs}")),
                ("quotient_ring_modulus", format!("{modulus}")),
            ],
        )
    }
}

fn thm_3_12(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "thm-3.12";
    if sa.gd_report.bipartite {
        pass(ID)
    } else {
        fail(ID, alloc::vec![("bipartite", String::from("false"))])
    }
}

fn cor_3_13(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "cor-3.13";
    match sa.gd_report.girth {
        None => pass_with(ID, alloc::vec![("note", String::from("acyclic"))]),
        Some(4) => pass(ID),
        Some(g) => fail(ID, alloc::vec![("girth", format!("{g}"))]),
    }
}

fn prop_3_17a(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-3.17a";
    if sa.gd.is_empty() {
        return hyp_not_met(ID, "empty graph");
    }
    let lhs = sa.gd_report.complete_bipartite;
    let rhs = match &sa.gd_report.bipartition {
        Some((left, right)) => {
            let constant =
                |part: &[u32]| part.windows(2).all(|w| sa.vm(w[0]) == sa.vm(w[1]));
            constant(left) && constant(right)
        }
        None => false,
    };
    if lhs == rhs {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![("complete_bipartite", format!("{lhs}")), ("parts_share_vm", format!("{rhs}"))],
        )
    }
}

fn prop_3_17b(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-3.17b";
    if sa.gd.is_empty() {
        return hyp_not_met(ID, "empty graph");
    }
    if sa.gd_report.connected == sa.gd_report.complete_bipartite {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("connected", format!("{}", sa.gd_report.connected)),
                ("complete_bipartite", format!("{}", sa.gd_report.complete_bipartite)),
            ],
        )
    }
}

fn prop_3_17d(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-3.17d";
    let lat = sa.lat();
    let adj = sa.gd.adjacency();
    let vms: Vec<Vec<u32>> = sa.gd.vertices.iter().map(|&v| sa.vm(v)).collect();
    for i in 0..sa.gd.vertices.len() {
        let dist = analyze::bfs_distances(&adj, i);
        for j in i + 1..sa.gd.vertices.len() {
            let two = dist[j] == Some(2);
            let same = vms[i] == vms[j];
            if two != same {
                return fail(
                    ID,
                    alloc::vec![
                        ("pair", format!(
                            "{} / {}",
                            sub_name(lat, sa.gd.vertices[i]),
                            sub_name(lat, sa.gd.vertices[j])
                        )),
                        ("distance", format!("{:?}", dist[j])),
                        ("same_vm", format!("{same}")),
                    ],
                );
            }
        }
    }
    pass(ID)
}

fn zmax_partner(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "zmax-partner";
    let strict = graph::build_zariski_max_strict_partner(sa.lat(), &sa.t).unwrap();
    if strict.vertices == sa.g.vertices && strict.edges == sa.g.edges {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("vertices", format!("{} vs {}", sa.g.vertices.len(), strict.vertices.len())),
                ("edges", format!("{} vs {}", sa.g.edges.len(), strict.edges.len())),
            ],
        )
    }
}

fn closed_gate(sa: &SubsetArtifacts, id: &'static str) -> Option<ClaimResult> {
    if !sa.closed {
        Some(hyp_not_met(id, "T not closed"))
    } else {
        None
    }
}

fn thm_4_1(sa: &SubsetArtifacts, through_colon_multiple: bool) -> ClaimResult {
    let id = if through_colon_multiple { "thm-4.1" } else { "cor-4.2" };
    if let Some(r) = closed_gate(sa, id) {
        return r;
    }
    let lat = sa.lat();
    if !sa.ma.max_surjective {
        return hyp_not_met(id, "not Max-surjective");
    }
    for &(n, l) in &sa.g.edges {
        let source = |v: u32| {
            if through_colon_multiple {
                lat.scale_full_idx(lat.colon_divisor(v))
            } else {
                v
            }
        };
        let x = spectrum::jm_radical_idx(lat, source(n));
        let y = spectrum::jm_radical_idx(lat, source(l));
        if !lat.leq(sa.im_t, x) || !lat.leq(sa.im_t, y) {
            return fail(
                id,
                alloc::vec![
                    ("edge", format!("{} -- {}", sub_name(lat, n), sub_name(lat, l))),
                    ("reason", String::from("radical does not contain the intersection")),
                ],
            );
        }
        let xb = sa.quo.bar_index(lat, x);
        let yb = sa.quo.bar_index(lat, y);
        if !sa.quo.ag.has_edge(xb, yb) {
            return fail(
                id,
                alloc::vec![
                    ("edge", format!("{} -- {}", sub_name(lat, n), sub_name(lat, l))),
                    ("images", format!("{xb} / {yb}")),
                ],
            );
        }
    }
    pass_with(id, alloc::vec![("edges", format!("{}", sa.g.edges.len()))])
}

fn prop_4_3a(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-4.3a";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    if sa.quo.mbar_is_ag_vertex() {
        return hyp_not_met(ID, "quotient is an AG vertex");
    }
    let lat = sa.lat();
    let map: Vec<(u32, u32)> = sa
        .quo
        .ag
        .vertices
        .iter()
        .map(|&sbar| (sbar, sa.quo.preimage_index(lat, sbar)))
        .collect();
    if crate::iso::verify_embedding(&sa.quo.ag, &sa.g, &map) {
        return pass_with(ID, alloc::vec![("map", String::from("preimage"))]);
    }
    match crate::iso::find_embedding(&sa.quo.ag, &sa.g) {
        Ok(Some(_)) => pass_with(ID, alloc::vec![("map", String::from("search"))]),
        Ok(None) => fail(ID, alloc::vec![("reason", String::from("no embedding exists"))]),
        Err(e) => fail(
            ID,
            alloc::vec![
                ("reason", String::from("preimage map is not an embedding")),
                ("search", format!("{e}")),
            ],
        ),
    }
}

fn prop_4_3b(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-4.3b";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    if !(sa.ma.max_surjective || sa.ma.spec_eq_max) {
        return hyp_not_met(ID, "needs Max-surjectivity or Spec = Max");
    }
    if sa.quo.mbar_is_ag_vertex() {
        return hyp_not_met(ID, "quotient is an AG vertex");
    }
    if sa.quo.ag.is_empty() == sa.g.is_empty() {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("ag_quotient_empty", format!("{}", sa.quo.ag.is_empty())),
                ("g_empty", format!("{}", sa.g.is_empty())),
            ],
        )
    }
}

fn prop_4_3c(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-4.3c";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    if sa.lat().module().ring().is_z() {
        return hyp_not_met(ID, "ring is not Artinian");
    }
    if sa.quo.mbar_is_ag_vertex() {
        return hyp_not_met(ID, "quotient is an AG vertex");
    }
    let lat = sa.lat();
    for sbar in 1..sa.quo.lat.full_idx() {
        if !sa.quo.ag.has_vertex(sbar) {
            return fail(ID, alloc::vec![("sbar", sub_name(&sa.quo.lat, sbar)), ("side", String::from("quotient"))]);
        }
        let s = sa.quo.preimage_index(lat, sbar);
        if !sa.g.has_vertex(s) {
            return fail(ID, alloc::vec![("s", sub_name(lat, s)), ("side", String::from("zariski"))]);
        }
    }
    pass(ID)
}

/// Shared conclusion of the adjacency-lifting statements: every edge of
/// the quotient annihilating graph lifts to an edge upstairs.
fn lift_all_edges(sa: &SubsetArtifacts, id: &'static str) -> ClaimResult {
    let lat = sa.lat();
    for &(nbar, lbar) in &sa.quo.ag.edges {
        let n = sa.quo.preimage_index(lat, nbar);
        let l = sa.quo.preimage_index(lat, lbar);
        if !sa.g.has_edge(n, l) {
            return fail(
                id,
                alloc::vec![("edge", format!("{} -- {}", sub_name(lat, n), sub_name(lat, l)))],
            );
        }
    }
    pass_with(id, alloc::vec![("edges", format!("{}", sa.quo.ag.edges.len()))])
}

fn thm_4_5a(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "thm-4.5a";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    if sa.quo.mbar_is_ag_vertex() {
        return hyp_not_met(ID, "quotient is an AG vertex");
    }
    lift_all_edges(sa, ID)
}

fn bad_semi_maximal(sa: &SubsetArtifacts, candidates: &[u32], vm_reading: bool) -> Option<u32> {
    let lat = sa.lat();
    candidates.iter().copied().find(|&s| {
        s != sa.im_t
            && if vm_reading {
                spectrum::vm_set(lat, s) == sa.t
            } else {
                spectrum::v_set(lat, s) == sa.t
            }
    })
}

fn thm_4_5a2(sa: &SubsetArtifacts, vm_reading: bool) -> ClaimResult {
    let id = if vm_reading { "thm-4.5a2-vm" } else { "thm-4.5a2-v" };
    if let Some(r) = closed_gate(sa, id) {
        return r;
    }
    let semi = &sa.ma.semi_max;
    // V(S) = T with T inside Max forces Vm(S) = T, so the Vm
    // hypothesis is the stronger one; it decides the genuine check.
    if let Some(s) = bad_semi_maximal(sa, semi, false) {
        let mut r = hyp_not_met(id, "a semi-maximal submodule covers T (both readings)");
        r.detail.push(("s", sub_name(sa.lat(), s)));
        return r;
    }
    match bad_semi_maximal(sa, semi, true) {
        None => lift_all_edges(sa, id),
        Some(s) if vm_reading => {
            let mut r = hyp_not_met(id, "a semi-maximal submodule covers T");
            r.detail.push(("s", sub_name(sa.lat(), s)));
            r
        }
        Some(s) => {
            // Divergent instance: only the V reading admits it. Record
            // what the lift would do instead of asserting it.
            let lat = sa.lat();
            let unlifted = sa
                .quo
                .ag
                .edges
                .iter()
                .filter(|&&(nbar, lbar)| {
                    !sa.g.has_edge(
                        sa.quo.preimage_index(lat, nbar),
                        sa.quo.preimage_index(lat, lbar),
                    )
                })
                .count();
            pass_with(
                id,
                alloc::vec![
                    ("divergence", String::from("V hypothesis holds, Vm hypothesis does not")),
                    ("vm_blocker", sub_name(lat, s)),
                    ("edges", format!("{}", sa.quo.ag.edges.len())),
                    ("unlifted", format!("{unlifted}")),
                ],
            )
        }
    }
}

fn max_surjective_quotient(lat: &Lattice, n: u32) -> bool {
    // The exponent of M/N is the colon divisor of N; the maximal
    // submodules of M/N are the maximal submodules above N.
    num::distinct_primes(lat.colon_divisor(n)).iter().all(|&p| {
        lat.maximal_indices()
            .iter()
            .any(|&q| lat.leq(n, q) && lat.colon_divisor(q) == p)
    })
}

fn thm_4_5b(sa: &SubsetArtifacts, vm_reading: bool) -> ClaimResult {
    let id = if vm_reading { "thm-4.5b-vm" } else { "thm-4.5b-v" };
    if let Some(r) = closed_gate(sa, id) {
        return r;
    }
    let lat = sa.lat();
    if sa.quo.ag.edges.is_empty() {
        return pass_with(id, alloc::vec![("edges_checked", String::from("0"))]);
    }
    // Vm-admitted edges are a subset of V-admitted ones (V(S) = T
    // inside Max forces Vm(S) = T); only those carry the assertion.
    // The V variant additionally records the V-only edges.
    let side_ok = |x: u32, vm: bool| {
        max_surjective_quotient(lat, x)
            && bad_semi_maximal(sa, &sa.ma.semi_max_above(x).collect::<Vec<u32>>(), vm).is_none()
    };
    let mut checked = 0usize;
    let mut divergent = 0usize;
    let mut divergent_unlifted = 0usize;
    for &(nbar, lbar) in &sa.quo.ag.edges {
        let n = sa.quo.preimage_index(lat, nbar);
        let l = sa.quo.preimage_index(lat, lbar);
        if side_ok(n, true) && side_ok(l, true) {
            checked += 1;
            if !sa.g.has_edge(n, l) {
                return fail(
                    id,
                    alloc::vec![("edge", format!("{} -- {}", sub_name(lat, n), sub_name(lat, l)))],
                );
            }
        } else if !vm_reading && side_ok(n, false) && side_ok(l, false) {
            divergent += 1;
            if !sa.g.has_edge(n, l) {
                divergent_unlifted += 1;
            }
        }
    }
    if checked == 0 && divergent == 0 {
        return hyp_not_met(id, "no edge satisfies the per-edge hypotheses");
    }
    let mut detail = alloc::vec![("edges_checked", format!("{checked}"))];
    if divergent > 0 {
        detail.push(("divergent_edges", format!("{divergent}")));
        detail.push(("divergent_unlifted", format!("{divergent_unlifted}")));
    }
    pass_with(id, detail)
}

fn prop_4_7(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-4.7";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    let lat = sa.lat();
    let ring = lat.module().ring();
    if ring.krull_dim() != 0 {
        return hyp_not_met(ID, "ring dimension is not 0");
    }
    if lat.scale_full_idx(ring.nil_radical_gen()) != lat.zero_idx() {
        return hyp_not_met(ID, "Nil(R)M != 0");
    }
    if sa.quo.mbar_is_ag_vertex() {
        return hyp_not_met(ID, "quotient is an AG vertex");
    }
    let map: Vec<(u32, u32)> = sa
        .g
        .vertices
        .iter()
        .map(|&n| (n, sa.quo.bar_index(lat, n)))
        .collect();
    if crate::iso::verify_isomorphism(&sa.g, &sa.quo.ag, &map) {
        return pass_with(ID, alloc::vec![("map", String::from("projection"))]);
    }
    match crate::iso::find_isomorphism(&sa.g, &sa.quo.ag) {
        Ok(Some(_)) => pass_with(ID, alloc::vec![("map", String::from("search"))]),
        Ok(None) => fail(ID, alloc::vec![("reason", String::from("graphs are not isomorphic"))]),
        Err(e) => fail(
            ID,
            alloc::vec![
                ("reason", String::from("projection map is not an isomorphism")),
                ("search", format!("{e}")),
            ],
        ),
    }
}

fn lemma_4_8(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "lemma-4.8";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    if sa.quo.mbar_is_ag_vertex() {
        return hyp_not_met(ID, "quotient is an AG vertex");
    }
    let lat = sa.lat();
    let semi = &sa.ma.semi_max;
    let adjacency_hyp = sa
        .t
        .iter()
        .filter(|&&q| sa.g.has_vertex(q))
        .all(|&q| semi.iter().any(|&s| sa.g.has_edge(q, s)));
    if !adjacency_hyp {
        return hyp_not_met(ID, "a vertex in T has no semi-maximal neighbour");
    }
    let lhs = lat.maximal_indices().iter().any(|&q| sa.g.has_vertex(q));
    let rhs = sa.quo.lat.maximal_indices().iter().any(|&q| sa.quo.ag.has_vertex(q));
    if lhs == rhs {
        pass(ID)
    } else {
        fail(
            ID,
            alloc::vec![
                ("max_vertex_upstairs", format!("{lhs}")),
                ("max_vertex_downstairs", format!("{rhs}")),
            ],
        )
    }
}

fn prop_4_9(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "prop-4.9";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    if sa.g.is_empty() {
        return hyp_not_met(ID, "empty graph");
    }
    let lat = sa.lat();
    let e = lat.module().exponent();
    let mm_in_t_and_vertex: Vec<u32> = num::distinct_primes(e)
        .iter()
        .map(|&p| lat.scale_full_idx(p))
        .filter(|&mm| sa.t.binary_search(&mm).is_ok() && sa.g.has_vertex(mm))
        .collect();
    let semi = &sa.ma.semi_max;
    let adjacency_hyp = mm_in_t_and_vertex
        .iter()
        .all(|&mm| semi.iter().any(|&s| sa.g.has_edge(mm, s)));
    if !adjacency_hyp {
        return hyp_not_met(ID, "an mM vertex in T has no semi-maximal neighbour");
    }
    let branch_a = (1..lat.len() as u32)
        .any(|k| k != sa.im_t && sa.vm(k) == sa.t);
    if branch_a {
        return pass_with(ID, alloc::vec![("branch", String::from("a"))]);
    }
    let lhs = !mm_in_t_and_vertex.is_empty();
    let rhs = !Submodule::socle(sa.quo.map.target()).is_zero();
    if lhs == rhs {
        pass_with(ID, alloc::vec![("branch", String::from("b"))])
    } else {
        fail(
            ID,
            alloc::vec![
                ("mm_vertex_in_t", format!("{lhs}")),
                ("socle_nonzero", format!("{rhs}")),
            ],
        )
    }
}

fn thm_4_10(sa: &SubsetArtifacts) -> ClaimResult {
    const ID: &str = "thm-4.10";
    if let Some(r) = closed_gate(sa, ID) {
        return r;
    }
    if !sa.quo.map.target().is_faithful() {
        return hyp_not_met(ID, "quotient is not faithful");
    }
    if sa.quo.mbar_is_ag_vertex() {
        return hyp_not_met(ID, "quotient is an AG vertex");
    }
    let vertices = sa.g.vertices.len();
    let nonzero_proper = sa.quo.lat.len() - 2;
    if vertices == nonzero_proper {
        pass_with(ID, alloc::vec![("count", format!("{vertices}"))])
    } else {
        fail(
            ID,
            alloc::vec![
                ("g_vertices", format!("{vertices}")),
                ("quotient_nonzero_proper", format!("{nonzero_proper}")),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DEFAULT_MAX_ORDER;

    fn artifacts(modulus: u64, factors: &[u64]) -> ModuleArtifacts {
        let ring = if modulus == 0 { Ring::integers() } else { Ring::new(modulus).unwrap() };
        let m = FinModule::new(ring, factors).unwrap();
        ModuleArtifacts::new(&m, DEFAULT_MAX_ORDER).unwrap()
    }

    fn subset<'a>(ma: &'a ModuleArtifacts, t: &[u32]) -> SubsetArtifacts<'a> {
        let mut cache = QuotientCache::new();
        SubsetArtifacts::new(ma, t, &mut cache).unwrap()
    }

    fn check_m(id: &str, ma: &ModuleArtifacts) -> ClaimStatus {
        check_module_claim(id, ma).unwrap().status
    }

    fn check_s(id: &str, sa: &SubsetArtifacts) -> ClaimStatus {
        check_subset_claim(id, sa).unwrap().status
    }

    #[test]
    fn registry_ids_unique_and_resolvable() {
        for (i, c) in REGISTRY.iter().enumerate() {
            assert!(REGISTRY[i + 1..].iter().all(|d| d.id != c.id), "{}", c.id);
            assert!(claim_info(c.id).is_some());
        }
        assert_eq!(REGISTRY.len(), 40);
    }

    #[test]
    fn module_claims_on_small_cyclics() {
        for n in [4u64, 6, 12, 30] {
            let ma = artifacts(0, &[n]);
            for c in REGISTRY.iter().filter(|c| c.scope == Scope::Module) {
                let r = check_module_claim(c.id, &ma).unwrap();
                assert_ne!(r.status, ClaimStatus::Fail, "{} on Z/{}: {:?}", c.id, n, r.detail);
            }
        }
    }

    #[test]
    fn module_claims_over_artinian_rings() {
        for (modulus, factors) in [(12u64, &[12u64][..]), (12, &[6]), (4, &[2, 4]), (30, &[30])] {
            let ma = artifacts(modulus, factors);
            for c in REGISTRY.iter().filter(|c| c.scope == Scope::Module) {
                let r = check_module_claim(c.id, &ma).unwrap();
                assert_ne!(
                    r.status,
                    ClaimStatus::Fail,
                    "{} on {:?} mod {}: {:?}",
                    c.id,
                    factors,
                    modulus,
                    r.detail
                );
            }
        }
    }

    #[test]
    fn rem_3_1_branches() {
        // (Z/2)^2: M is a vertex, so all three legs are true.
        let ma = artifacts(0, &[2, 2]);
        assert_eq!(check_m("rem-3.1", &ma), ClaimStatus::Pass);
        assert!(ma.m_is_ag_vertex());
        // Z/12: M is not a vertex and no proper N has colon 12.
        let ma = artifacts(0, &[12]);
        assert!(!ma.m_is_ag_vertex());
        assert_eq!(check_m("rem-3.1", &ma), ClaimStatus::Pass);
    }

    #[test]
    fn thm_b_gates_on_m_not_vertex() {
        let ma = artifacts(0, &[2, 2]);
        assert_eq!(check_m("thm-B", &ma), ClaimStatus::HypothesisNotMet);
        let ma = artifacts(0, &[4]);
        assert_eq!(check_m("thm-B", &ma), ClaimStatus::Pass);
    }

    #[test]
    fn prop_d_needs_artinian_ring() {
        let ma = artifacts(0, &[12]);
        assert_eq!(check_m("prop-D", &ma), ClaimStatus::HypothesisNotMet);
        let ma = artifacts(12, &[12]);
        assert_eq!(check_m("prop-D", &ma), ClaimStatus::Pass);
    }

    #[test]
    fn thm_f_covers_faithful_reduced_instances() {
        let ma = artifacts(30, &[30]);
        assert_eq!(check_m("thm-F", &ma), ClaimStatus::Pass);
        // Faithful but M itself is also a vertex: still counts proper ones.
        let ma = artifacts(6, &[6, 6]);
        assert!(ma.m_is_ag_vertex());
        assert_eq!(check_m("thm-F", &ma), ClaimStatus::Pass);
        // Not faithful.
        let ma = artifacts(12, &[6]);
        assert_eq!(check_m("thm-F", &ma), ClaimStatus::HypothesisNotMet);
    }

    #[test]
    fn prop_g_dichotomy() {
        // Branch a on (Z/2)^2.
        let ma = artifacts(0, &[2, 2]);
        let r = check_module_claim("prop-G", &ma).unwrap();
        assert_eq!(r.status, ClaimStatus::Pass);
        assert_eq!(r.detail[0].1, "a");
        // Branch b on Z/12.
        let ma = artifacts(0, &[12]);
        let r = check_module_claim("prop-G", &ma).unwrap();
        assert_eq!(r.status, ClaimStatus::Pass);
        assert_eq!(r.detail[0].1, "b");
        // Empty graph gates out.
        let ma = artifacts(0, &[5]);
        assert_eq!(check_m("prop-G", &ma), ClaimStatus::HypothesisNotMet);
    }

    #[test]
    fn lemma_4_6_both_directions() {
        // Nil(R)M = 0 over a squarefree modulus.
        let ma = artifacts(30, &[30]);
        assert_eq!(check_m("lemma-4.6", &ma), ClaimStatus::Pass);
        // Nil(R)M != 0: radicals must move some submodule.
        let ma = artifacts(12, &[12]);
        assert_eq!(check_m("lemma-4.6", &ma), ClaimStatus::Pass);
        // Z has dimension 1.
        let ma = artifacts(0, &[12]);
        assert_eq!(check_m("lemma-4.6", &ma), ClaimStatus::HypothesisNotMet);
    }

    #[test]
    fn subset_claims_on_z12_max() {
        let ma = artifacts(0, &[12]);
        let t = ma.lat.maximal_indices().to_vec();
        let sa = subset(&ma, &t);
        for c in REGISTRY.iter().filter(|c| c.scope == Scope::Subset) {
            let r = check_subset_claim(c.id, &sa).unwrap();
            assert_ne!(r.status, ClaimStatus::Fail, "{}: {:?}", c.id, r.detail);
        }
        assert_eq!(check_s("thm-3.6", &sa), ClaimStatus::Pass);
        assert_eq!(check_s("lemma-3.11b", &sa), ClaimStatus::Pass);
    }

    #[test]
    fn subset_claims_on_z30_max_over_z30() {
        let ma = artifacts(30, &[30]);
        let t = ma.lat.maximal_indices().to_vec();
        let sa = subset(&ma, &t);
        for c in REGISTRY.iter().filter(|c| c.scope == Scope::Subset) {
            let r = check_subset_claim(c.id, &sa).unwrap();
            assert_ne!(r.status, ClaimStatus::Fail, "{}: {:?}", c.id, r.detail);
        }
        // The showcase instance: G is isomorphic to AG(Z/30).
        let r = check_subset_claim("prop-4.7", &sa).unwrap();
        assert_eq!(r.status, ClaimStatus::Pass);
        assert_eq!(r.detail[0].1, "projection");
        let r = check_subset_claim("thm-4.10", &sa).unwrap();
        assert_eq!(r.status, ClaimStatus::Pass);
        assert_eq!(r.detail[0].1, "6");
    }

    #[test]
    fn subset_claims_on_singleton_t() {
        let ma = artifacts(0, &[12]);
        let t = alloc::vec![ma.lat.maximal_indices()[0]];
        let sa = subset(&ma, &t);
        assert!(sa.g.is_empty());
        assert_eq!(check_s("lemma-3.2", &sa), ClaimStatus::Pass);
        assert_eq!(check_s("thm-3.6", &sa), ClaimStatus::HypothesisNotMet);
        assert_eq!(check_s("prop-4.3b", &sa), ClaimStatus::Pass);
    }

    #[test]
    fn section_4_gates_on_non_closed_t() {
        let ma = artifacts(0, &[2, 6]);
        // One maximal from the three-element prime-2 family plus the
        // prime-3 maximal: not closed.
        let two = *ma
            .lat
            .maximal_indices()
            .iter()
            .find(|&&q| ma.lat.colon_divisor(q) == 2)
            .unwrap();
        let three = *ma
            .lat
            .maximal_indices()
            .iter()
            .find(|&&q| ma.lat.colon_divisor(q) == 3)
            .unwrap();
        let mut t = alloc::vec![two, three];
        t.sort_unstable();
        let sa = subset(&ma, &t);
        assert!(!sa.closed);
        assert!(sa.g.is_empty());
        // AG of the quotient is non-empty: without the closedness gate
        // prop-4.3b would be falsified.
        assert!(!sa.quo.ag.is_empty());
        assert_eq!(check_s("prop-4.3b", &sa), ClaimStatus::HypothesisNotMet);
        assert_eq!(check_s("lemma-3.2", &sa), ClaimStatus::Pass);
    }

    #[test]
    fn all_subset_claims_over_all_t_on_small_modules() {
        for (modulus, factors) in
            [(0u64, &[12u64][..]), (0, &[30]), (12, &[12]), (0, &[2, 6]), (4, &[2, 4]), (0, &[2, 2])]
        {
            let ma = artifacts(modulus, factors);
            let maxes = ma.lat.maximal_indices();
            let mut cache = QuotientCache::new();
            for mask in 1u32..(1 << maxes.len()) {
                let t: Vec<u32> = (0..maxes.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| maxes[i])
                    .collect();
                let sa = SubsetArtifacts::new(&ma, &t, &mut cache).unwrap();
                for c in REGISTRY.iter().filter(|c| c.scope == Scope::Subset) {
                    let r = check_subset_claim(c.id, &sa).unwrap();
                    assert_ne!(
                        r.status,
                        ClaimStatus::Fail,
                        "{} on {:?}/{} t={:?}: {:?}",
                        c.id,
                        factors,
                        modulus,
                        t,
                        r.detail
                    );
                }
            }
        }
    }

    #[test]
    fn thm_4_5_readings_diverge_on_a_complete_family() {
        // M = Z/2 + Z/6 over Z, T = the three maximals with witness 2.
        // T is closed, the quotient is (Z/2)^2 with a non-empty AG, and
        // the preimages of its lines are not zariski vertices (their
        // Vm-set is all of T). The Vm hypothesis notices (each such
        // preimage is a blocking semi-maximal); the V hypothesis does
        // not, because V of a witness-2 maximal also contains the
        // non-maximal prime 2M.
        let ma = artifacts(0, &[2, 6]);
        let t: Vec<u32> = ma
            .lat
            .maximal_indices()
            .iter()
            .copied()
            .filter(|&q| ma.lat.colon_divisor(q) == 2)
            .collect();
        assert_eq!(t.len(), 3);
        let sa = subset(&ma, &t);
        assert!(sa.closed);
        let r = check_subset_claim("thm-4.5a2-vm", &sa).unwrap();
        assert_eq!(r.status, ClaimStatus::HypothesisNotMet);
        let r = check_subset_claim("thm-4.5a2-v", &sa).unwrap();
        assert_eq!(r.status, ClaimStatus::Pass);
        assert_eq!(r.detail[0].0, "divergence");
        let unlifted: usize = r
            .detail
            .iter()
            .find(|(k, _)| *k == "unlifted")
            .unwrap()
            .1
            .parse()
            .unwrap();
        assert!(unlifted > 0);
    }

    #[test]
    fn demo_claim_fails_and_replays() {
        let ma = artifacts(0, &[12]);
        let first = demo_fail_claim(&ma);
        assert_eq!(first.status, ClaimStatus::Fail);
        let replay = demo_fail_claim(&ma);
        assert_eq!(first, replay);
    }
}

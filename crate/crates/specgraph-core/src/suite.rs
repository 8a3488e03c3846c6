//! Running the claim catalog over a corpus and folding the outcomes
//! into an order-stable report, plus the open-question explorer that
//! records whether T meets the vertex set of its own graph.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::claims::{
    self, ClaimResult, ClaimStatus, ModuleArtifacts, QuotientCache, Scope, SubsetArtifacts,
    REGISTRY,
};
use crate::corpus::{corpus_modules, CorpusParams, ModuleDesc};
use crate::error::Result;

/// Subset-scope claims run only when the maximal spectrum is this
/// small; beyond it the subset count explodes and the module still
/// contributes module-scope instances.
pub const MAX_SUBSET_MAXIMALS: usize = 6;

#[derive(Debug, Clone, Default)]
pub struct ClaimFilter {
    ids: Vec<String>,
    nothing: bool,
}

impl ClaimFilter {
    /// Empty selection means every registered claim.
    pub fn new(ids: &[String]) -> Self {
        ClaimFilter { ids: ids.to_vec(), nothing: false }
    }

    pub fn all() -> Self {
        ClaimFilter::default()
    }

    /// Selects no claim at all; the suite still walks every (M, T)
    /// instance, which is what the explorer wants.
    pub fn none() -> Self {
        ClaimFilter { ids: Vec::new(), nothing: true }
    }

    pub fn selects(&self, id: &str) -> bool {
        !self.nothing && (self.ids.is_empty() || self.ids.iter().any(|x| x == id))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailWitness {
    pub instance: String,
    pub detail: Vec<(&'static str, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimSummary {
    pub id: &'static str,
    pub statement: &'static str,
    pub pass: u64,
    pub fail: u64,
    pub hypothesis_not_met: u64,
    pub skipped: u64,
    pub failures: Vec<FailWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub max_order: u64,
    pub max_rank: usize,
    pub modules: u64,
    pub subset_instances: u64,
    pub claims: Vec<ClaimSummary>,
}

impl SuiteReport {
    pub fn any_fail(&self) -> bool {
        self.claims.iter().any(|c| c.fail > 0)
    }

    pub fn total_fail(&self) -> u64 {
        self.claims.iter().map(|c| c.fail).sum()
    }
}

/// One row of the explorer: a (module, T) instance with a non-empty
/// graph, and how much of T ended up in the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q412Row {
    pub instance: String,
    pub t_size: u32,
    pub t_vertices: u32,
}

impl Q412Row {
    pub fn nonempty(&self) -> bool {
        self.t_vertices > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExploreReport {
    pub max_order: u64,
    pub max_rank: usize,
    pub instances: Vec<Q412Row>,
    pub negatives: Vec<Q412Row>,
}

/// Everything produced by one corpus module, in deterministic order.
pub struct ModuleOutcome {
    pub module_key: String,
    pub results: Vec<(String, ClaimResult)>,
    pub q412: Vec<Q412Row>,
    pub subset_instances: u64,
}

/// Run every selected claim on one module and all its admissible T.
pub fn run_module(
    desc: &ModuleDesc,
    max_lattice_order: u64,
    filter: &ClaimFilter,
) -> Result<ModuleOutcome> {
    let module = desc.build()?;
    let ma = ModuleArtifacts::new(&module, max_lattice_order)?;
    let module_key = desc.key();
    let mut results = Vec::new();
    for info in REGISTRY.iter().filter(|c| c.scope == Scope::Module) {
        if filter.selects(info.id) {
            let r = claims::check_module_claim(info.id, &ma).unwrap();
            results.push((module_key.clone(), r));
        }
    }
    let mut q412 = Vec::new();
    let mut subset_instances = 0u64;
    let maxes = ma.lat.maximal_indices().to_vec();
    let run_subsets = !maxes.is_empty() && maxes.len() <= MAX_SUBSET_MAXIMALS;
    let any_subset_claim =
        REGISTRY.iter().any(|c| c.scope == Scope::Subset && filter.selects(c.id));
    if run_subsets {
        let mut cache = QuotientCache::new();
        for mask in 1u32..(1 << maxes.len()) {
            let t: Vec<u32> = (0..maxes.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| maxes[i])
                .collect();
            let sa = SubsetArtifacts::new(&ma, &t, &mut cache)?;
            subset_instances += 1;
            let tkey = {
                let ts: Vec<String> = t.iter().map(|q| q.to_string()).collect();
                format!("{};t={}", module_key, ts.join(","))
            };
            if any_subset_claim {
                for info in REGISTRY.iter().filter(|c| c.scope == Scope::Subset) {
                    if filter.selects(info.id) {
                        let r = claims::check_subset_claim(info.id, &sa).unwrap();
                        results.push((tkey.clone(), r));
                    }
                }
            }
            if !sa.g.is_empty() {
                let t_vertices =
                    t.iter().filter(|&&q| sa.g.has_vertex(q)).count() as u32;
                q412.push(Q412Row {
                    instance: tkey,
                    t_size: t.len() as u32,
                    t_vertices,
                });
            }
        }
    }
    Ok(ModuleOutcome { module_key, results, q412, subset_instances })
}

/// Folds module outcomes into the final report. Feeding outcomes in
/// corpus order from any number of workers reproduces the serial
/// report byte for byte.
pub struct SuiteAccumulator {
    by_id: BTreeMap<&'static str, ClaimSummary>,
    modules: u64,
    subset_instances: u64,
    q412: Vec<Q412Row>,
}

impl SuiteAccumulator {
    pub fn new(filter: &ClaimFilter) -> Self {
        let mut by_id = BTreeMap::new();
        for info in REGISTRY.iter().filter(|c| filter.selects(c.id)) {
            by_id.insert(
                info.id,
                ClaimSummary {
                    id: info.id,
                    statement: info.statement,
                    pass: 0,
                    fail: 0,
                    hypothesis_not_met: 0,
                    skipped: 0,
                    failures: Vec::new(),
                },
            );
        }
        SuiteAccumulator { by_id, modules: 0, subset_instances: 0, q412: Vec::new() }
    }

    pub fn add(&mut self, outcome: ModuleOutcome) {
        self.modules += 1;
        self.subset_instances += outcome.subset_instances;
        for (instance, r) in outcome.results {
            let s = self.by_id.get_mut(r.id).expect("result for unselected claim");
            match r.status {
                ClaimStatus::Pass => s.pass += 1,
                ClaimStatus::Fail => {
                    s.fail += 1;
                    s.failures.push(FailWitness { instance, detail: r.detail });
                }
                ClaimStatus::HypothesisNotMet => s.hypothesis_not_met += 1,
                ClaimStatus::Skipped => s.skipped += 1,
            }
        }
        self.q412.extend(outcome.q412);
    }

    pub fn finish(self, params: &CorpusParams) -> (SuiteReport, ExploreReport) {
        let mut claims: Vec<ClaimSummary> = self.by_id.into_values().collect();
        for c in &mut claims {
            c.failures.sort_by(|a, b| a.instance.cmp(&b.instance));
        }
        let negatives: Vec<Q412Row> =
            self.q412.iter().filter(|r| !r.nonempty()).cloned().collect();
        (
            SuiteReport {
                max_order: params.max_order,
                max_rank: params.max_rank,
                modules: self.modules,
                subset_instances: self.subset_instances,
                claims,
            },
            ExploreReport {
                max_order: params.max_order,
                max_rank: params.max_rank,
                instances: self.q412,
                negatives,
            },
        )
    }
}

/// Serial reference runner over the whole corpus.
pub fn run_suite(
    params: &CorpusParams,
    max_lattice_order: u64,
    filter: &ClaimFilter,
) -> Result<(SuiteReport, ExploreReport)> {
    let mut acc = SuiteAccumulator::new(filter);
    for desc in corpus_modules(params) {
        acc.add(run_module(&desc, max_lattice_order, filter)?);
    }
    Ok(acc.finish(params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DEFAULT_MAX_ORDER;

    fn tiny() -> CorpusParams {
        CorpusParams { max_order: 16, max_rank: 2 }
    }

    #[test]
    fn tiny_corpus_has_no_failures() {
        let (suite, explore) =
            run_suite(&tiny(), DEFAULT_MAX_ORDER, &ClaimFilter::all()).unwrap();
        assert!(!suite.any_fail(), "{:?}", suite.claims.iter().find(|c| c.fail > 0));
        assert_eq!(suite.claims.len(), REGISTRY.len());
        assert!(suite.modules > 0);
        assert!(suite.subset_instances > 0);
        // Claim ids come out sorted.
        assert!(suite.claims.windows(2).all(|w| w[0].id < w[1].id));
        // Every explorer instance found a vertex of G inside T.
        assert!(!explore.instances.is_empty());
        assert!(explore.negatives.is_empty());
    }

    #[test]
    fn filter_restricts_rows() {
        let filter = ClaimFilter::new(&[String::from("thm-3.6")]);
        let (suite, _) = run_suite(&tiny(), DEFAULT_MAX_ORDER, &filter).unwrap();
        assert_eq!(suite.claims.len(), 1);
        assert_eq!(suite.claims[0].id, "thm-3.6");
        assert!(suite.claims[0].pass > 0);
    }

    #[test]
    fn serial_rerun_is_identical() {
        let (a, ea) = run_suite(&tiny(), DEFAULT_MAX_ORDER, &ClaimFilter::all()).unwrap();
        let (b, eb) = run_suite(&tiny(), DEFAULT_MAX_ORDER, &ClaimFilter::all()).unwrap();
        assert_eq!(a, b);
        assert_eq!(ea, eb);
    }

    #[test]
    fn out_of_order_module_fold_matches_counts() {
        // Workers may finish out of order; the accumulator is fed in
        // corpus order, so feeding it the same outcomes must reproduce
        // the serial counts.
        let params = tiny();
        let filter = ClaimFilter::all();
        let descs = corpus_modules(&params);
        let mut outcomes: Vec<ModuleOutcome> = descs
            .iter()
            .map(|d| run_module(d, DEFAULT_MAX_ORDER, &filter).unwrap())
            .collect();
        let mut acc = SuiteAccumulator::new(&filter);
        for o in outcomes.drain(..) {
            acc.add(o);
        }
        let (merged, _) = acc.finish(&params);
        let (serial, _) = run_suite(&params, DEFAULT_MAX_ORDER, &filter).unwrap();
        assert_eq!(merged, serial);
    }

    #[test]
    fn q412_rows_only_for_nonempty_graphs() {
        let params = CorpusParams { max_order: 30, max_rank: 1 };
        let (_, explore) =
            run_suite(&params, DEFAULT_MAX_ORDER, &ClaimFilter::all()).unwrap();
        assert!(explore.instances.iter().all(|r| r.t_size >= 2));
        let z30_rows: Vec<&Q412Row> = explore
            .instances
            .iter()
            .filter(|r| r.instance.starts_with("r0:30;"))
            .collect();
        // Z/30 over Z: four reducible closed subsets of a 3-point Max.
        assert_eq!(z30_rows.len(), 4);
        assert!(z30_rows.iter().all(|r| r.nonempty()));
    }
}

//! Corpus runs and their reports. The suite itself lives in the core
//! crate; this module fans modules out over worker threads, folds the
//! outcomes back in corpus order (so the report does not depend on the
//! number of workers), and renders the JSON and text forms.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;
use specgraph_core::corpus::{corpus_modules, CorpusParams};
use specgraph_core::suite::{
    run_module, ClaimFilter, ExploreReport, ModuleOutcome, SuiteAccumulator, SuiteReport,
};
use specgraph_core::Result as CoreResult;

use crate::doc::SCHEMA_VERSION;

/// Run every selected claim over the whole corpus with `jobs` workers.
/// Outcomes are folded in corpus order, so the pair of reports is
/// identical for every worker count.
pub fn run_suite_jobs(
    params: &CorpusParams,
    bound: u64,
    filter: &ClaimFilter,
    jobs: usize,
    verbose: bool,
) -> CoreResult<(SuiteReport, ExploreReport)> {
    let descs = corpus_modules(params);
    let mut acc = SuiteAccumulator::new(filter);
    if jobs <= 1 {
        for d in &descs {
            if verbose {
                eprintln!("specgraph: {}", d.key());
            }
            acc.add(run_module(d, bound, filter)?);
        }
    } else {
        let slots: Vec<Mutex<Option<CoreResult<ModuleOutcome>>>> =
            descs.iter().map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..jobs.min(descs.len()) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= descs.len() {
                        break;
                    }
                    let out = run_module(&descs[i], bound, filter);
                    *slots[i].lock().unwrap() = Some(out);
                });
            }
        });
        for slot in slots {
            let out = slot.into_inner().unwrap().expect("every slot was filled");
            acc.add(out?);
        }
    }
    Ok(acc.finish(params))
}

#[derive(Serialize)]
struct CorpusDoc {
    max_order: u64,
    max_rank: usize,
}

#[derive(Serialize)]
struct FailDoc {
    instance: String,
    detail: Vec<(String, String)>,
}

#[derive(Serialize)]
struct ClaimDoc {
    id: String,
    statement: String,
    pass: u64,
    fail: u64,
    hypothesis_not_met: u64,
    skipped: u64,
    failures: Vec<FailDoc>,
}

#[derive(Serialize)]
struct VerifyDoc {
    schema_version: u32,
    corpus: CorpusDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    stamp_unix_ms: Option<u64>,
    modules: u64,
    subset_instances: u64,
    total_fail: u64,
    outcome: &'static str,
    claims: Vec<ClaimDoc>,
}

pub fn stamp_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

pub fn verify_json(report: &SuiteReport, stamp: Option<u64>) -> String {
    let doc = VerifyDoc {
        schema_version: SCHEMA_VERSION,
        corpus: CorpusDoc { max_order: report.max_order, max_rank: report.max_rank },
        stamp_unix_ms: stamp,
        modules: report.modules,
        subset_instances: report.subset_instances,
        total_fail: report.total_fail(),
        outcome: if report.any_fail() { "fail" } else { "pass" },
        claims: report
            .claims
            .iter()
            .map(|c| ClaimDoc {
                id: c.id.to_string(),
                statement: c.statement.to_string(),
                pass: c.pass,
                fail: c.fail,
                hypothesis_not_met: c.hypothesis_not_met,
                skipped: c.skipped,
                failures: c
                    .failures
                    .iter()
                    .map(|f| FailDoc {
                        instance: f.instance.clone(),
                        detail: f
                            .detail
                            .iter()
                            .map(|(k, v)| (k.to_string(), v.clone()))
                            .collect(),
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("verify doc serializes");
    s.push('\n');
    s
}

pub fn verify_text(report: &SuiteReport, stamp: Option<u64>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "corpus: group order <= {}, rank <= {}; {} modules, {} subset instances",
        report.max_order, report.max_rank, report.modules, report.subset_instances
    );
    if let Some(ms) = stamp {
        let _ = writeln!(out, "generated at unix ms {ms}");
    }
    let _ = writeln!(out, "{:<15} {:>8} {:>6} {:>8} {:>8}", "claim", "pass", "fail", "hyp-not-met", "skipped");
    for c in &report.claims {
        let _ = writeln!(
            out,
            "{:<15} {:>8} {:>6} {:>8} {:>8}",
            c.id, c.pass, c.fail, c.hypothesis_not_met, c.skipped
        );
        for f in &c.failures {
            let _ = writeln!(out, "    FAIL {}", f.instance);
            for (k, v) in &f.detail {
                let _ = writeln!(out, "         {k}: {v}");
            }
        }
    }
    let _ = writeln!(
        out,
        "result: {}",
        if report.any_fail() {
            format!("FAIL ({} failing instances)", report.total_fail())
        } else {
            "PASS (no failing instances)".to_string()
        }
    );
    out
}

#[derive(Serialize)]
struct RowDoc {
    instance: String,
    t_size: u32,
    t_vertices: u32,
    t_meets_vertices: bool,
}

#[derive(Serialize)]
struct ExploreDoc {
    schema_version: u32,
    corpus: CorpusDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    stamp_unix_ms: Option<u64>,
    instances: u64,
    t_meets_vertices: u64,
    negatives: Vec<RowDoc>,
    rows: Vec<RowDoc>,
}

fn row_doc(r: &specgraph_core::suite::Q412Row) -> RowDoc {
    RowDoc {
        instance: r.instance.clone(),
        t_size: r.t_size,
        t_vertices: r.t_vertices,
        t_meets_vertices: r.nonempty(),
    }
}

pub fn explore_json(report: &ExploreReport, stamp: Option<u64>) -> String {
    let doc = ExploreDoc {
        schema_version: SCHEMA_VERSION,
        corpus: CorpusDoc { max_order: report.max_order, max_rank: report.max_rank },
        stamp_unix_ms: stamp,
        instances: report.instances.len() as u64,
        t_meets_vertices: report.instances.iter().filter(|r| r.nonempty()).count() as u64,
        negatives: report.negatives.iter().map(row_doc).collect(),
        rows: report.instances.iter().map(row_doc).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("explore doc serializes");
    s.push('\n');
    s
}

pub fn explore_text(report: &ExploreReport, stamp: Option<u64>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "corpus: group order <= {}, rank <= {}",
        report.max_order, report.max_rank
    );
    if let Some(ms) = stamp {
        let _ = writeln!(out, "generated at unix ms {ms}");
    }
    let positives = report.instances.iter().filter(|r| r.nonempty()).count();
    let _ = writeln!(
        out,
        "non-empty Zariski graphs: {}; T meets the vertex set in {} of them",
        report.instances.len(),
        positives
    );
    if report.negatives.is_empty() {
        let _ = writeln!(out, "no instance where T misses the vertex set");
    } else {
        for r in &report.negatives {
            let _ = writeln!(
                out,
                "NEGATIVE WITNESS: {} (|T| = {}, none of T is a vertex)",
                r.instance, r.t_size
            );
        }
    }
    out
}

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::invariants::{circumference, independence_number, is_one_tough, nc2, sigma3};

use super::bound::{verdict, BoundInputs, HypothesisResult, Verdict, VerdictStatus};
use super::oracles::{run_lemma_oracles, OracleBudget, OracleEntry, OracleStatus, Scope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub offsets: Vec<usize>,
    pub oracles: bool,
    pub budget: OracleBudget,
    /// Fill `elapsed_ms`. Off by default so reports are byte-reproducible.
    pub timing: bool,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            offsets: super::bound::OFFSETS.to_vec(),
            oracles: false,
            budget: OracleBudget::default(),
            timing: false,
            jobs: None,
        }
    }
}

/// One output line. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub graph: String,
    pub n: usize,
    pub alpha: usize,
    pub sigma3: usize,
    pub nc2: Option<usize>,
    pub circumference: Option<usize>,
    pub one_tough: bool,
    pub hypothesis: bool,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracles: Option<Vec<OracleEntry>>,
    pub elapsed_ms: Option<u64>,
    #[serde(skip)]
    pub connected: bool,
    #[serde(skip)]
    pub fast_path_mismatch: bool,
}

impl ReportRecord {
    pub fn is_hamiltonian(&self) -> bool {
        self.circumference == Some(self.n)
    }

    pub fn has_counterexample(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.status == VerdictStatus::Counterexample)
    }

    pub fn has_oracle_failure(&self) -> bool {
        self.oracles.as_ref().is_some_and(|es| {
            es.iter()
                .any(|e| e.status == OracleStatus::Fails && e.scope != Scope::Relaxed)
        })
    }
}

/// Computes every invariant, the verdict at each offset and, if asked, the
/// oracle suite for one graph.
pub fn analyze(g: &Graph, config: &ScanConfig) -> ReportRecord {
    let start = Instant::now();
    let n = g.n();
    let s3 = sigma3(g).value;
    let one_tough = is_one_tough(g).is_one_tough();
    let hypothesis = HypothesisResult::from_parts(one_tough, s3, n);
    let inputs = BoundInputs {
        n,
        hypothesis,
        nc2: nc2(g).value(),
        circumference: circumference(g),
    };
    let mut fast_path_mismatch = false;
    let verdicts = config
        .offsets
        .iter()
        .map(|&offset| {
            let v = verdict(g, &inputs, offset);
            let fast_says_counter =
                hypothesis.passes && v.rhs.is_some_and(|r| inputs.circumference.unwrap_or(0) < r);
            if fast_says_counter && v.status != VerdictStatus::Counterexample {
                fast_path_mismatch = true;
            }
            v
        })
        .collect();
    let oracles = config
        .oracles
        .then(|| run_lemma_oracles(g, &config.budget).entries);
    ReportRecord {
        graph: g.to_string(),
        n,
        alpha: independence_number(g).size,
        sigma3: s3,
        nc2: inputs.nc2,
        circumference: inputs.circumference,
        one_tough,
        hypothesis: hypothesis.passes,
        verdicts,
        oracles,
        elapsed_ms: config.timing.then(|| start.elapsed().as_millis() as u64),
        connected: g.is_connected(),
        fast_path_mismatch,
    }
}

/// Per-oracle, per-scope totals across a scan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleCounts {
    pub holds: u64,
    pub fails: u64,
    pub vacuous: u64,
    pub skipped: u64,
    pub instances: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: u64,
    pub connected: u64,
    pub hypothesis_passing: u64,
    pub hamiltonian_under_hypothesis: u64,
    pub non_hamiltonian_under_hypothesis: u64,
    /// Offset, then status, then count.
    pub verdicts: BTreeMap<usize, BTreeMap<VerdictStatus, u64>>,
    pub counterexamples: BTreeMap<usize, u64>,
    /// Keyed `ORC-xx/scope`.
    pub oracles: BTreeMap<String, OracleCounts>,
    pub warnings: u64,
    pub fast_path_mismatches: u64,
    pub notes: Vec<String>,
}

impl Summary {
    pub fn from_records(records: &[ReportRecord], offsets: &[usize]) -> Summary {
        let mut s = Summary::default();
        for &offset in offsets {
            s.verdicts.entry(offset).or_default();
            s.counterexamples.insert(offset, 0);
        }
        let mut oracles_ran = false;
        for r in records {
            s.total += 1;
            s.connected += r.connected as u64;
            if r.hypothesis {
                s.hypothesis_passing += 1;
                if r.is_hamiltonian() {
                    s.hamiltonian_under_hypothesis += 1;
                } else {
                    s.non_hamiltonian_under_hypothesis += 1;
                }
            }
            s.fast_path_mismatches += r.fast_path_mismatch as u64;
            for v in &r.verdicts {
                *s.verdicts
                    .entry(v.offset)
                    .or_default()
                    .entry(v.status)
                    .or_default() += 1;
                if v.status == VerdictStatus::Counterexample {
                    *s.counterexamples.entry(v.offset).or_default() += 1;
                }
            }
            for e in r.oracles.iter().flatten() {
                oracles_ran = true;
                let key = format!("{}/{}", e.oracle_id.as_str(), e.scope.as_str());
                let c = s.oracles.entry(key).or_default();
                c.instances += e.instances_checked;
                match e.status {
                    OracleStatus::Holds => c.holds += 1,
                    OracleStatus::Fails => c.fails += 1,
                    OracleStatus::Vacuous => c.vacuous += 1,
                    OracleStatus::Skipped => c.skipped += 1,
                }
            }
        }
        if oracles_ran && s.non_hamiltonian_under_hypothesis == 0 {
            s.notes.push(
                "no non-hamiltonian graph meets the hypothesis; every strict setup oracle is vacuous"
                    .into(),
            );
        }
        s
    }

    pub fn total_counterexamples(&self) -> u64 {
        self.counterexamples.values().sum()
    }

    pub fn oracle_failures(&self) -> u64 {
        self.oracles
            .iter()
            .filter(|(k, _)| !k.ends_with("/relaxed"))
            .map(|(_, c)| c.fails)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub records: Vec<ReportRecord>,
    pub summary: Summary,
}

/// Analyzes every graph in parallel. Records come out sorted by graph6 string
/// whatever the worker count.
pub fn scan_corpus(graphs: &[Graph], config: &ScanConfig) -> CorpusReport {
    let work = || -> Vec<ReportRecord> { graphs.par_iter().map(|g| analyze(g, config)).collect() };
    let mut records = match config.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    };
    records.sort_by(|a, b| a.graph.cmp(&b.graph));
    let summary = Summary::from_records(&records, &config.offsets);
    CorpusReport { records, summary }
}

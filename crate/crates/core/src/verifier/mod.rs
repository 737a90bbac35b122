//! The hypothesis gate, the bound at each offset, the lemma oracles and
//! corpus scans.

mod bound;
mod oracles;
mod scan;

pub use bound::{
    check_bound, check_hypothesis, in_relaxed_domain, rhs, verdict, BoundInputs, HypothesisResult,
    Verdict, VerdictStatus, OFFSETS,
};
pub use oracles::{
    run_lemma_oracles, run_oracles, OracleBudget, OracleEntry, OracleId, OracleReport,
    OracleStatus, OracleWitness, Scope,
};
pub use scan::{
    analyze, scan_corpus, CorpusReport, OracleCounts, ReportRecord, ScanConfig, Summary,
};

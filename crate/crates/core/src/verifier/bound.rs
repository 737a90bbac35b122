use serde::Serialize;

use crate::graph::Graph;
use crate::invariants::{circumference, is_one_tough, nc2, sigma3};
use crate::naive;

/// The conjecture's hypothesis: 1-tough with `sigma_3 >= n >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisResult {
    pub one_tough: bool,
    pub sigma3_ok: bool,
    pub n_ok: bool,
    pub passes: bool,
}

impl HypothesisResult {
    pub fn from_parts(one_tough: bool, sigma3: usize, n: usize) -> Self {
        let (sigma3_ok, n_ok) = (sigma3 >= n, n >= 3);
        HypothesisResult {
            one_tough,
            sigma3_ok,
            n_ok,
            passes: one_tough && sigma3_ok && n_ok,
        }
    }
}

pub fn check_hypothesis(g: &Graph) -> HypothesisResult {
    HypothesisResult::from_parts(is_one_tough(g).is_one_tough(), sigma3(g).value, g.n())
}

/// True for graphs kept by the hypothesis with one of its two conditions
/// dropped: `n >= 3` and either 1-tough or `sigma_3 >= n`.
pub fn in_relaxed_domain(h: &HypothesisResult) -> bool {
    h.n_ok && (h.one_tough || h.sigma3_ok)
}

/// Offsets for which the bound `c(G) >= min{n, 2 NC2 + offset}` is checked.
pub const OFFSETS: [usize; 3] = [0, 2, 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Holds,
    Counterexample,
    HypothesisNotMet,
    Nc2Undefined,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Holds => "holds",
            VerdictStatus::Counterexample => "counterexample",
            VerdictStatus::HypothesisNotMet => "hypothesis-not-met",
            VerdictStatus::Nc2Undefined => "nc2-undefined",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub offset: usize,
    /// `min{n, 2 NC2 + offset}`; `None` when `NC2` is undefined.
    pub rhs: Option<usize>,
    pub status: VerdictStatus,
}

/// The facts a verdict depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundInputs {
    pub n: usize,
    pub hypothesis: HypothesisResult,
    pub nc2: Option<usize>,
    pub circumference: Option<usize>,
}

pub fn rhs(n: usize, nc2: usize, offset: usize) -> usize {
    n.min(2 * nc2 + offset)
}

/// Verdict from precomputed facts. A would-be counterexample is recomputed
/// from scratch by the brute-force oracles and only reported if they agree.
pub fn verdict(g: &Graph, inputs: &BoundInputs, offset: usize) -> Verdict {
    let Some(nc2) = inputs.nc2 else {
        return Verdict {
            offset,
            rhs: None,
            status: VerdictStatus::Nc2Undefined,
        };
    };
    let r = rhs(inputs.n, nc2, offset);
    if !inputs.hypothesis.passes {
        return Verdict {
            offset,
            rhs: Some(r),
            status: VerdictStatus::HypothesisNotMet,
        };
    }
    let c = inputs.circumference.unwrap_or(0);
    if c >= r {
        return Verdict {
            offset,
            rhs: Some(r),
            status: VerdictStatus::Holds,
        };
    }
    match naive_verdict(g, offset) {
        Some(confirmed) => confirmed,
        None => Verdict {
            offset,
            rhs: Some(r),
            status: VerdictStatus::Counterexample,
        },
    }
}

/// The verdict recomputed from brute-force invariants alone. Returns `None`
/// when it confirms a counterexample, otherwise the corrected verdict (and logs
/// the disagreement).
fn naive_verdict(g: &Graph, offset: usize) -> Option<Verdict> {
    let n = g.n();
    let hyp = HypothesisResult::from_parts(naive::one_tough(g).is_ok(), naive::sigma3(g), n);
    let nc2 = naive::nc2(g);
    let c = naive::circumference(g).unwrap_or(0);
    let confirmed = match nc2 {
        Some(k) if hyp.passes => c < rhs(n, k, offset),
        _ => false,
    };
    if confirmed {
        return None;
    }
    log::error!("fast path reported a counterexample that brute force rejects for {g}");
    let status = match nc2 {
        None => VerdictStatus::Nc2Undefined,
        Some(_) if !hyp.passes => VerdictStatus::HypothesisNotMet,
        Some(_) => VerdictStatus::Holds,
    };
    Some(Verdict {
        offset,
        rhs: nc2.map(|k| rhs(n, k, offset)),
        status,
    })
}

/// Checks one offset, filtering by the cheap conditions before computing the
/// circumference.
pub fn check_bound(g: &Graph, offset: usize) -> Verdict {
    let n = g.n();
    let nc2 = nc2(g).value();
    let s3 = sigma3(g).value;
    // Toughness is only decided when the cheaper conditions leave it relevant;
    // the flag is internal to this verdict.
    let one_tough = n >= 3 && s3 >= n && is_one_tough(g).is_one_tough();
    let hypothesis = HypothesisResult::from_parts(one_tough, s3, n);
    let circumference = if hypothesis.passes {
        circumference(g)
    } else {
        None
    };
    verdict(
        g,
        &BoundInputs {
            n,
            hypothesis,
            nc2,
            circumference,
        },
        offset,
    )
}

//! The hopping construction around an off-cycle vertex.

use serde::Serialize;
use thiserror::Error;

use crate::cycle::OrientedCycle;
use crate::graph::{Graph, VertexSet};
use crate::invariants::CycleCensus;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum HoppingError {
    #[error("u = {0} lies on the cycle")]
    UOnCycle(usize),
    #[error("u = {0} has a neighbor off the cycle")]
    UNotIsolated(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoppingSets {
    pub x: VertexSet,
    pub y: VertexSet,
    /// `(X_i, Y_i)` for `i = 1, 2, ..` up to and including the first repeat.
    pub trace: Vec<(VertexSet, VertexSet)>,
    pub iterations: usize,
}

/// Iterates `X_i = N(Y_{i-1} ∪ {u})`, `Y_i = (X_i ∩ V(C))^+ ∩ (X_i ∩ V(C))^-`
/// from `Y_0 = ∅` until `X` repeats.
pub fn hopping_fixpoint(
    g: &Graph,
    c: &OrientedCycle,
    u: usize,
) -> Result<HoppingSets, HoppingError> {
    if c.contains(u) {
        return Err(HoppingError::UOnCycle(u));
    }
    if !g.neighbors(u).is_subset(c.vertex_set()) {
        return Err(HoppingError::UNotIsolated(u));
    }
    Ok(iterate(g, c, u, VertexSet::EMPTY))
}

fn iterate(g: &Graph, c: &OrientedCycle, u: usize, y0: VertexSet) -> HoppingSets {
    let mut trace: Vec<(VertexSet, VertexSet)> = Vec::new();
    let mut y = y0;
    loop {
        let x = g.neighbors_of_set(y.with(u));
        let on = x & c.vertex_set();
        let next_y = c.shift_forward(on) & c.shift_backward(on);
        let repeated = trace.last().is_some_and(|&(px, _)| px == x);
        trace.push((x, next_y));
        if repeated {
            break;
        }
        y = next_y;
    }
    let &(x, y) = trace.last().expect("at least one iteration");
    HoppingSets {
        x,
        y,
        iterations: trace.len(),
        trace,
    }
}

/// Whether `(G, C, u)` meets the hypotheses of the hopping construction, with
/// the first one that fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HoppingGate {
    Met,
    LongerCycle,
    FewerComponents,
    UOnCycle,
    UNotIsolated,
}

pub fn hopping_gate(g: &Graph, c: &OrientedCycle, u: usize, census: &CycleCensus) -> HoppingGate {
    if c.contains(u) {
        return HoppingGate::UOnCycle;
    }
    if !g.neighbors(u).is_subset(c.vertex_set()) {
        return HoppingGate::UNotIsolated;
    }
    if census.has_cycle_of_length(c.len() + 1) {
        return HoppingGate::LongerCycle;
    }
    let omega = g.components_after_removal(c.vertex_set());
    if census.min_components(c.len()).is_some_and(|m| m < omega) {
        return HoppingGate::FewerComponents;
    }
    HoppingGate::Met
}

/// Outcome of each of the four conclusions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HoppingVerdicts {
    /// `X ⊆ V(C)`.
    pub a: bool,
    /// No `x ∈ X` with `x^+ ∈ X`.
    pub b: bool,
    /// `X ∩ Y = ∅`.
    pub c: bool,
    /// `Y` independent.
    pub d: bool,
}

impl HoppingVerdicts {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum HoppingCheck {
    Checked(HoppingVerdicts),
    Skipped { gate: HoppingGate },
}

/// Evaluates the conclusions when the hypotheses hold; otherwise reports which
/// hypothesis failed.
pub fn check_hopping_conclusions(
    g: &Graph,
    c: &OrientedCycle,
    u: usize,
    h: &HoppingSets,
    census: &CycleCensus,
) -> HoppingCheck {
    let gate = hopping_gate(g, c, u, census);
    if gate != HoppingGate::Met {
        return HoppingCheck::Skipped { gate };
    }
    HoppingCheck::Checked(evaluate(g, c, h))
}

/// The four conclusions, evaluated without looking at the hypotheses.
pub fn evaluate(g: &Graph, c: &OrientedCycle, h: &HoppingSets) -> HoppingVerdicts {
    let on = h.x & c.vertex_set();
    HoppingVerdicts {
        a: h.x.is_subset(c.vertex_set()),
        b: (c.shift_forward(on) & h.x).is_empty(),
        c: h.x.is_disjoint(h.y),
        d: g.is_independent(h.y),
    }
}

/// Re-running the recurrence from the fixpoint changes nothing.
pub fn is_fixpoint(g: &Graph, c: &OrientedCycle, u: usize, h: &HoppingSets) -> bool {
    let again = iterate(g, c, u, h.y);
    again.x == h.x && again.y == h.y
}

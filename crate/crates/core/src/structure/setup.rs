use serde::Serialize;
use thiserror::Error;

use crate::cycle::{CycleError, OrientedCycle};
use crate::graph::{Graph, VertexSet};
use crate::invariants::enumerate_longest_cycles;

use super::intervals::{interval_decomposition, IntervalDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetupError {
    #[error("u = {0} lies on the cycle")]
    UOnCycle(usize),
    #[error("v = {0} is not on the cycle")]
    VOffCycle(usize),
    #[error("v^+ and v^- of v = {v} are not both neighbors of u = {u}")]
    NotAPivot { u: usize, v: usize },
    #[error("vertex {0} of N(u) ∪ N(v) is off the cycle")]
    BOffCycle(usize),
    #[error(transparent)]
    Cycle(#[from] CycleError),
}

/// A triple `(u, v, C)`: `u` off the oriented cycle `C`, `v` on it, and both
/// cycle neighbors of `v` adjacent to `u`.
///
/// `B = N(u) ∪ N(v)` is kept in cycle order from `b_1 = v^+` to `b_m = v^-`.
/// The cycle is stored rotated to start at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Setup {
    graph: Graph,
    cycle: OrientedCycle,
    u: usize,
    v: usize,
    b: Vec<usize>,
    b_set: VertexSet,
    b_plus: VertexSet,
    b_minus: VertexSet,
}

impl Setup {
    pub fn new(g: &Graph, cycle: &OrientedCycle, u: usize, v: usize) -> Result<Setup, SetupError> {
        if cycle.contains(u) {
            return Err(SetupError::UOnCycle(u));
        }
        if !cycle.contains(v) {
            return Err(SetupError::VOffCycle(v));
        }
        let (vp, vm) = (cycle.succ(v), cycle.pred(v));
        if !g.has_edge(u, vp) || !g.has_edge(u, vm) {
            return Err(SetupError::NotAPivot { u, v });
        }
        let b_set = g.neighbors(u) | g.neighbors(v);
        if let Some(off) = (b_set - cycle.vertex_set()).first() {
            return Err(SetupError::BOffCycle(off));
        }
        let cycle = cycle.rotated_to(v)?;
        let b: Vec<usize> = cycle.vertices()[1..]
            .iter()
            .copied()
            .filter(|&x| b_set.contains(x))
            .collect();
        Ok(Setup {
            graph: g.clone(),
            b_plus: cycle.shift_forward(b_set),
            b_minus: cycle.shift_backward(b_set),
            cycle,
            u,
            v,
            b,
            b_set,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cycle(&self) -> &OrientedCycle {
        &self.cycle
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// `(b_1, .., b_m)`; index `k` of the slice holds `b_{k+1}`.
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn b_set(&self) -> VertexSet {
        self.b_set
    }

    pub fn b_plus(&self) -> VertexSet {
        self.b_plus
    }

    pub fn b_minus(&self) -> VertexSet {
        self.b_minus
    }

    pub fn n_u(&self) -> VertexSet {
        self.graph.neighbors(self.u)
    }

    pub fn n_v(&self) -> VertexSet {
        self.graph.neighbors(self.v)
    }

    /// `V(G) - V(C)`.
    pub fn off_cycle(&self) -> VertexSet {
        self.graph.vertices() - self.cycle.vertex_set()
    }

    /// Zero-based position of `x` in `B`.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.b.iter().position(|&b| b == x)
    }

    pub fn intervals(&self) -> IntervalDecomposition {
        interval_decomposition(self)
    }

    /// Condition (S3): at least four good 2-intervals.
    pub fn s3_satisfied(&self) -> bool {
        self.intervals().good_count() >= 4
    }

    /// The same triple on the reversed cycle; `B^+` and `B^-` trade places.
    pub fn reverse_orientation(&self) -> Setup {
        Setup::new(&self.graph, &self.cycle.reversed(), self.u, self.v)
            .expect("reversal preserves a valid setup")
    }

    /// The triple `(v, u, C~)` with `C~ = u v^+ ->C v^- u`.
    pub fn swap_roles(&self) -> Result<Setup, SetupError> {
        let mut verts = Vec::with_capacity(self.cycle.len());
        verts.push(self.u);
        verts.extend_from_slice(&self.cycle.vertices()[1..]);
        let swapped = OrientedCycle::new(&self.graph, verts)?;
        Setup::new(&self.graph, &swapped, self.v, self.u)
    }

    pub fn describe(&self) -> SetupDescription {
        SetupDescription {
            cycle: self.cycle.vertices().to_vec(),
            u: self.u,
            v: self.v,
            b: self.b.clone(),
        }
    }
}

/// Plain-data form of a setup for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetupDescription {
    pub cycle: Vec<usize>,
    pub u: usize,
    pub v: usize,
    pub b: Vec<usize>,
}

/// Why a graph has no setups at all.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoSetups {
    #[error("the graph is acyclic")]
    Acyclic,
    #[error("the graph is hamiltonian")]
    Hamiltonian,
}

/// Every `(C, u, v)` with `C` a longest cycle in either orientation, `u` off
/// `C` and `v^+, v^- ∈ N(u)`, whether or not `B` stays on the cycle.
pub fn pivot_triples(g: &Graph) -> Result<Vec<(OrientedCycle, usize, usize)>, NoSetups> {
    let cycles = enumerate_longest_cycles(g);
    let Some(first) = cycles.first() else {
        return Err(NoSetups::Acyclic);
    };
    if first.len() == g.n() {
        return Err(NoSetups::Hamiltonian);
    }
    let mut out = Vec::new();
    for c in cycles {
        for oriented in [c.clone(), c.reversed()] {
            let off = g.vertices() - oriented.vertex_set();
            for u in off.iter() {
                let nu = g.neighbors(u);
                for &v in oriented.vertices() {
                    if nu.contains(oriented.succ(v)) && nu.contains(oriented.pred(v)) {
                        out.push((oriented.clone(), u, v));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All setups over longest cycles, optionally restricted to those meeting
/// (S3). Triples whose `B` leaves the cycle are not setups and are dropped.
pub fn find_setups(g: &Graph, require_s3: bool) -> Result<Vec<Setup>, NoSetups> {
    Ok(pivot_triples(g)?
        .into_iter()
        .filter_map(|(c, u, v)| Setup::new(g, &c, u, v).ok())
        .filter(|s| !require_s3 || s.s3_satisfied())
        .collect())
}

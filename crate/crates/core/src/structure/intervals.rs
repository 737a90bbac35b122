use serde::Serialize;

use crate::cycle::OrientedCycle;
use crate::graph::{Graph, VertexSet};

use super::setup::Setup;

/// The C-path between two successive anchors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
    /// Number of edges.
    pub length: usize,
    pub inner: Vec<usize>,
    /// A 2-interval whose ends both lie in `N(u)` or both in `N(v)`.
    pub good: bool,
}

impl Interval {
    pub fn inner_set(&self) -> VertexSet {
        self.inner.iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalDecomposition {
    pub intervals: Vec<Interval>,
}

impl IntervalDecomposition {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn total_length(&self) -> usize {
        self.intervals.iter().map(|i| i.length).sum()
    }

    pub fn count_of_length(&self, k: usize) -> usize {
        self.intervals.iter().filter(|i| i.length == k).count()
    }

    pub fn good_count(&self) -> usize {
        self.intervals.iter().filter(|i| i.good).count()
    }

    /// Inner vertices of all 2-intervals.
    pub fn two_interval_inner(&self) -> VertexSet {
        self.intervals
            .iter()
            .filter(|i| i.length == 2)
            .flat_map(|i| i.inner.iter().copied())
            .collect()
    }
}

/// Cuts `cycle` at the on-cycle members of `anchors`, starting from `first`.
/// `good` decides the flag of each 2-interval from its ends.
pub fn decompose_by<F>(
    cycle: &OrientedCycle,
    anchors: VertexSet,
    first: usize,
    good: F,
) -> IntervalDecomposition
where
    F: Fn(usize, usize) -> bool,
{
    let anchors = anchors & cycle.vertex_set();
    if anchors.is_empty() {
        return IntervalDecomposition {
            intervals: Vec::new(),
        };
    }
    let rotated = cycle
        .rotated_to(first)
        .expect("first anchor lies on the cycle");
    let order: Vec<usize> = rotated
        .vertices()
        .iter()
        .copied()
        .filter(|&x| anchors.contains(x))
        .collect();
    let intervals = (0..order.len())
        .map(|k| {
            let (start, end) = (order[k], order[(k + 1) % order.len()]);
            let mut path = cycle.forward_path(start, end);
            if start == end {
                // A single anchor: the whole cycle is one interval.
                path = rotated.vertices().to_vec();
                path.push(start);
            }
            let length = path.len() - 1;
            Interval {
                start,
                end,
                length,
                inner: path[1..length].to_vec(),
                good: length == 2 && good(start, end),
            }
        })
        .collect();
    IntervalDecomposition { intervals }
}

/// Intervals `b_i ->C b_{i+1}` for `i = 1..m`, the last one wrapping from
/// `b_m = v^-` through `v` back to `b_1`.
pub fn interval_decomposition(s: &Setup) -> IntervalDecomposition {
    let (nu, nv) = (s.n_u(), s.n_v());
    let both_in = |a: usize, b: usize| {
        (nu.contains(a) && nu.contains(b)) || (nv.contains(a) && nv.contains(b))
    };
    decompose_by(s.cycle(), s.b_set(), s.b()[0], both_in)
}

/// Intervals between successive members of `N(u)` along `cycle`; the 2-intervals
/// among them are the ones counted by the lower bound on `s`.
pub fn neighborhood_decomposition(
    g: &Graph,
    cycle: &OrientedCycle,
    u: usize,
) -> IntervalDecomposition {
    let nu = g.neighbors(u) & cycle.vertex_set();
    match nu.first() {
        Some(first) => decompose_by(cycle, nu, first, |_, _| true),
        None => IntervalDecomposition {
            intervals: Vec::new(),
        },
    }
}

/// True iff some inner vertex of `p` is adjacent to some inner vertex of `q`.
pub fn inner_connected(g: &Graph, p: &Interval, q: &Interval) -> bool {
    let q_inner = q.inner_set();
    p.inner
        .iter()
        .any(|&x| !(g.neighbors(x) & q_inner).is_empty())
}

//! Bad paths and the rewirings that turn one into a longer cycle.

use serde::Serialize;
use thiserror::Error;

use crate::cycle::{CycleError, OrientedCycle};
use crate::graph::{Graph, VertexSet};

use super::setup::Setup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BadPathForm {
    /// Covers `v^+ ->C b_i^-`, ends `v^+` and `b_j` with `j < i`.
    #[serde(rename = "i")]
    Forward,
    /// Covers `b_i^+ ->C v^-`, ends `v^-` and `b_j` with `j > i`.
    #[serde(rename = "ii")]
    Backward,
}

/// A bad path. `i` and `j` are 1-based indices into `B`; `path` runs from
/// `v^+` (form i) or `v^-` (form ii) to `b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadPathWitness {
    pub form: BadPathForm,
    pub i: usize,
    pub j: usize,
    pub path: Vec<usize>,
    /// First of the rewiring cases 1..=4 whose edge condition holds.
    pub case: Option<u8>,
    /// The single-vertex path `(v^+)` with `j = 1` (or its mirror).
    pub degenerate: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtendError {
    #[error("index i = {i}, j = {j} is outside the range allowed for its form (m = {m})")]
    BadIndices { i: usize, j: usize, m: usize },
    #[error("the path does not cover the prescribed segment with the prescribed ends")]
    NotABadPath,
    #[error("no rewiring case applies")]
    NoCase,
    #[error("the edge condition of case {0} does not hold")]
    CaseFails(u8),
    #[error("rewired sequence is not a cycle: {0}")]
    Invalid(#[from] CycleError),
}

/// The first rewiring case whose edge condition holds for `b_i`, `b_j`.
pub fn rewiring_case(g: &Graph, u: usize, v: usize, bi: usize, bj: usize) -> Option<u8> {
    (1..=4).find(|&k| case_holds(g, u, v, bi, bj, k))
}

fn case_holds(g: &Graph, u: usize, v: usize, bi: usize, bj: usize, case: u8) -> bool {
    let (iu, iv, ju, jv) = (
        g.has_edge(bi, u),
        g.has_edge(bi, v),
        g.has_edge(bj, u),
        g.has_edge(bj, v),
    );
    match case {
        1 => iu && ju,
        2 => iv && jv,
        3 => jv && iu,
        4 => ju && iv,
        _ => false,
    }
}

/// One bad path for every `(form, i, j)` that admits one.
pub fn find_bad_paths(s: &Setup) -> Vec<BadPathWitness> {
    let mut out = Vec::new();
    let m = s.m();
    if m < 3 {
        return out;
    }
    let c = s.cycle();
    let (vp, vm) = (c.succ(s.v()), c.pred(s.v()));
    for i in 2..m {
        let bi = s.b()[i - 1];
        let seg = c.forward_segment(vp, c.pred(bi));
        for j in 1..i {
            let bj = s.b()[j - 1];
            if let Some(path) = hamiltonian_path(s.graph(), seg, vp, bj) {
                out.push(witness(s, BadPathForm::Forward, i, j, path));
            }
        }
    }
    for i in 2..m {
        let bi = s.b()[i - 1];
        let seg = c.forward_segment(c.succ(bi), vm);
        for j in i + 1..=m {
            let bj = s.b()[j - 1];
            if let Some(path) = hamiltonian_path(s.graph(), seg, vm, bj) {
                out.push(witness(s, BadPathForm::Backward, i, j, path));
            }
        }
    }
    out
}

fn witness(s: &Setup, form: BadPathForm, i: usize, j: usize, path: Vec<usize>) -> BadPathWitness {
    let (bi, bj) = (s.b()[i - 1], s.b()[j - 1]);
    BadPathWitness {
        form,
        i,
        j,
        case: rewiring_case(s.graph(), s.u(), s.v(), bi, bj),
        degenerate: path.len() == 1,
        path,
    }
}

/// A path through every vertex of `within`, from `from` to `to`.
pub fn hamiltonian_path(
    g: &Graph,
    within: VertexSet,
    from: usize,
    to: usize,
) -> Option<Vec<usize>> {
    if !within.contains(from) || !within.contains(to) {
        return None;
    }
    if from == to {
        return (within.len() == 1).then(|| vec![from]);
    }
    let mut path = vec![from];
    extend_path(g, within, VertexSet::singleton(from), to, &mut path).then_some(path)
}

fn extend_path(
    g: &Graph,
    within: VertexSet,
    used: VertexSet,
    to: usize,
    path: &mut Vec<usize>,
) -> bool {
    let end = *path.last().expect("path is nonempty");
    if used == within {
        return end == to;
    }
    let free = within - used;
    // The rest must stay connected to the current end, and `to` must be last.
    if !free.contains(to) || g.reachable_within(end, free.with(end)) != free.with(end) {
        return false;
    }
    for next in (g.neighbors(end) & free).iter() {
        if next == to && free.len() > 1 {
            continue;
        }
        path.push(next);
        if extend_path(g, within, used.with(next), to, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// The cycle on `V(C) ∪ {u}` built from a bad path by the rewiring its case
/// names. Form (ii) is rewired as form (i) on the reversed cycle.
pub fn extend_cycle(s: &Setup, w: &BadPathWitness) -> Result<OrientedCycle, ExtendError> {
    let m = s.m();
    match w.form {
        BadPathForm::Forward => {
            if !(1 < w.i && w.i < m && 1 <= w.j && w.j < w.i) {
                return Err(ExtendError::BadIndices { i: w.i, j: w.j, m });
            }
            extend_forward(s, w.i, w.j, &w.path, w.case)
        }
        BadPathForm::Backward => {
            if !(1 < w.i && w.i < m && w.i < w.j && w.j <= m) {
                return Err(ExtendError::BadIndices { i: w.i, j: w.j, m });
            }
            let r = s.reverse_orientation();
            extend_forward(&r, m + 1 - w.i, m + 1 - w.j, &w.path, w.case)
        }
    }
}

fn extend_forward(
    s: &Setup,
    i: usize,
    j: usize,
    path: &[usize],
    case: Option<u8>,
) -> Result<OrientedCycle, ExtendError> {
    let g = s.graph();
    let c = s.cycle();
    let (u, v) = (s.u(), s.v());
    let (vp, vm) = (c.succ(v), c.pred(v));
    let (bi, bj) = (s.b()[i - 1], s.b()[j - 1]);
    let seg = c.forward_segment(vp, c.pred(bi));
    let covers = path.iter().collect::<VertexSet>() == seg && path.len() == seg.len();
    let ends = path.first() == Some(&vp) && path.last() == Some(&bj);
    let walks = path.windows(2).all(|e| g.has_edge(e[0], e[1]));
    if !(covers && ends && walks) {
        return Err(ExtendError::NotABadPath);
    }
    let case = case.ok_or(ExtendError::NoCase)?;
    if !case_holds(g, u, v, bi, bj, case) {
        return Err(ExtendError::CaseFails(case));
    }
    // Every rewiring starts with P traversed from b_j back to v^+.
    let mut seq: Vec<usize> = path.iter().rev().copied().collect();
    match case {
        1 => {
            seq.push(v);
            seq.extend(c.backward_path(vm, bi));
            seq.push(u);
        }
        2 => {
            seq.push(u);
            seq.extend(c.backward_path(vm, bi));
            seq.push(v);
        }
        3 => {
            seq.push(u);
            seq.extend(c.forward_path(bi, vm));
            seq.push(v);
        }
        _ => {
            seq.push(v);
            seq.extend(c.forward_path(bi, vm));
            seq.push(u);
        }
    }
    Ok(OrientedCycle::new(g, seq)?)
}

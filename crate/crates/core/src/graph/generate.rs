//! Exhaustive generation of isomorphism classes by vertex augmentation.
//!
//! Every graph on `n` vertices arises from some graph on `n - 1` vertices by
//! adding a vertex, so extending one representative per smaller class by
//! every neighborhood subset and deduplicating canonical forms yields exactly
//! one representative per class.

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use thiserror::Error;

use super::canon::{canon_raw, CanonicalForm, MAX_CANON_VERTICES};
use super::Graph;

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_GENERATED_VERTICES: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("internal generation supports 1..={MAX_GENERATED_VERTICES} vertices, got {0}; supply larger corpora as graph6 files")]
    OutOfRange(usize),
}

/// Published class counts: all graphs, connected graphs (OEIS A000088, A001349).
const KNOWN_COUNTS: [(u64, u64); 11] = [
    (1, 1),
    (1, 1),
    (2, 1),
    (4, 2),
    (11, 6),
    (34, 21),
    (156, 112),
    (1044, 853),
    (12346, 11117),
    (274668, 261080),
    (12005168, 11716571),
];

/// Number of isomorphism classes on `n` vertices, as published, for `n <= 10`.
pub fn graph_count(n: usize, connected_only: bool) -> Option<u64> {
    KNOWN_COUNTS
        .get(n)
        .map(|&(all, conn)| if connected_only { conn } else { all })
}

/// One canonically labeled representative per isomorphism class on `n`
/// vertices, ordered by canonical code.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, GenerateError> {
    if n == 0 || n > MAX_GENERATED_VERTICES {
        return Err(GenerateError::OutOfRange(n));
    }
    let mut level: Vec<u64> = vec![0];
    for k in 2..=n {
        level = extend_level(&level, k - 1);
    }
    let graphs = level
        .into_iter()
        .map(|code| CanonicalForm::from_parts(n, code).to_graph())
        .filter(|g| !connected_only || g.is_connected())
        .collect();
    Ok(graphs)
}

/// Canonical codes of all classes on `parent_n + 1` vertices, sorted.
fn extend_level(parents: &[u64], parent_n: usize) -> Vec<u64> {
    debug_assert!(parent_n < MAX_CANON_VERTICES);
    let child_n = parent_n + 1;
    let set = parents
        .par_iter()
        .fold(FxHashSet::default, |mut seen, &code| {
            let parent = CanonicalForm::from_parts(parent_n, code).to_graph();
            let mut adj = [0u64; MAX_CANON_VERTICES];
            for (v, nb) in parent.adjacency().iter().enumerate() {
                adj[v] = nb.bits();
            }
            for nbrs in 0u64..(1 << parent_n) {
                let mut child = adj;
                for (v, row) in child.iter_mut().enumerate().take(parent_n) {
                    *row |= ((nbrs >> v) & 1) << parent_n;
                }
                child[parent_n] = nbrs;
                let (c, _) = canon_raw(&child[..child_n]);
                seen.insert(c);
            }
            seen
        })
        .reduce(FxHashSet::default, |mut a, b| {
            if a.len() < b.len() {
                return union_into(b, a);
            }
            a.extend(b);
            a
        });
    let mut codes: Vec<u64> = set.into_iter().collect();
    codes.sort_unstable();
    codes
}

fn union_into(mut big: FxHashSet<u64>, small: FxHashSet<u64>) -> FxHashSet<u64> {
    big.extend(small);
    big
}

//! Longest cycles, cycle enumeration and the quantities defined on them.

use rustc_hash::FxHashMap;

use crate::cycle::OrientedCycle;
use crate::graph::{Graph, VertexSet};

/// A longest cycle of `g`, or `None` for a forest.
///
/// Branch and bound over paths that start at the smallest vertex of the cycle
/// they would close; a branch is cut when the path plus everything still
/// reachable from its end cannot beat the incumbent.
pub fn longest_cycle(g: &Graph) -> Option<OrientedCycle> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    for start in 0..n {
        if n - start <= best.len() {
            break;
        }
        let allowed = g.vertices() - VertexSet::full(start);
        let mut path = vec![start];
        grow_longest(
            g,
            allowed,
            VertexSet::singleton(start),
            &mut path,
            &mut best,
        );
        if best.len() == n {
            break;
        }
    }
    (!best.is_empty()).then(|| OrientedCycle::unchecked(best).expect("search yields a cycle"))
}

/// `c(G)`; `None` when `g` is acyclic.
pub fn circumference(g: &Graph) -> Option<usize> {
    longest_cycle(g).map(|c| c.len())
}

fn grow_longest(
    g: &Graph,
    allowed: VertexSet,
    used: VertexSet,
    path: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    let start = path[0];
    let end = *path.last().expect("path is nonempty");
    if path.len() >= 3 && path.len() > best.len() && g.has_edge(end, start) {
        best.clone_from(path);
    }
    let free = allowed - used;
    let reach = g.reachable_within(end, free.with(end)).without(end);
    if path.len() + reach.len() <= best.len() || best.len() == allowed.len() {
        return;
    }
    if (g.neighbors(start) & reach).is_empty() {
        return;
    }
    for next in (g.neighbors(end) & free).iter() {
        path.push(next);
        grow_longest(g, allowed, used.with(next), path, best);
        path.pop();
    }
}

/// Calls `visit` once per cycle of `g` with `min_len..=max_len` vertices, in the
/// orientation that starts at its smallest vertex and whose second vertex is
/// smaller than its last.
pub fn for_each_cycle<F>(g: &Graph, min_len: usize, max_len: usize, mut visit: F)
where
    F: FnMut(&[usize]),
{
    let min_len = min_len.max(3);
    for start in 0..g.n() {
        if g.n() - start < min_len {
            break;
        }
        let allowed = g.vertices() - VertexSet::full(start);
        let mut path = vec![start];
        walk(
            g,
            allowed,
            VertexSet::singleton(start),
            &mut path,
            (min_len, max_len),
            &mut visit,
        );
    }
}

fn walk<F: FnMut(&[usize])>(
    g: &Graph,
    allowed: VertexSet,
    used: VertexSet,
    path: &mut Vec<usize>,
    (min_len, max_len): (usize, usize),
    visit: &mut F,
) {
    let start = path[0];
    let end = *path.last().expect("path is nonempty");
    let len = path.len();
    if len >= min_len && g.has_edge(end, start) && path[1] < end {
        visit(path);
    }
    if len == max_len {
        return;
    }
    let free = allowed - used;
    if len + 1 < min_len {
        let reach = g.reachable_within(end, free.with(end)).without(end);
        if len + reach.len() < min_len || (g.neighbors(start) & reach).is_empty() {
            return;
        }
    }
    for next in (g.neighbors(end) & free).iter() {
        path.push(next);
        walk(g, allowed, used.with(next), path, (min_len, max_len), visit);
        path.pop();
    }
}

/// All cycles of length exactly `len`, one orientation each, sorted by
/// canonical key.
pub fn enumerate_cycles_of_length(g: &Graph, len: usize) -> Vec<OrientedCycle> {
    let mut out = Vec::new();
    for_each_cycle(g, len, len, |p| {
        out.push(OrientedCycle::unchecked(p.to_vec()).expect("enumerated cycle is valid"));
    });
    out.sort_by_cached_key(|c| c.canonical_key());
    out
}

/// Every longest cycle of `g`, each once up to rotation and reflection.
pub fn enumerate_longest_cycles(g: &Graph) -> Vec<OrientedCycle> {
    match circumference(g) {
        Some(c) => enumerate_cycles_of_length(g, c),
        None => Vec::new(),
    }
}

/// True iff the off-cycle vertices form an independent set.
pub fn is_dominating_cycle(g: &Graph, c: &OrientedCycle) -> bool {
    g.is_independent(g.vertices() - c.vertex_set())
}

/// `mu(C)`: the largest degree of a vertex off `C`; `None` when `C` is
/// hamiltonian.
pub fn mu_cycle(g: &Graph, c: &OrientedCycle) -> Option<usize> {
    (g.vertices() - c.vertex_set())
        .iter()
        .map(|v| g.degree(v))
        .max()
}

/// `mu(G)`: the largest `mu(C)` over longest cycles `C`, with a cycle attaining
/// it; `None` for hamiltonian or acyclic graphs.
pub fn mu_graph(g: &Graph) -> Option<(usize, OrientedCycle)> {
    let mut best: Option<(usize, OrientedCycle)> = None;
    for c in enumerate_longest_cycles(g) {
        let Some(mu) = mu_cycle(g, &c) else {
            return None;
        };
        if best.as_ref().is_none_or(|(b, _)| mu > *b) {
            best = Some((mu, c));
        }
    }
    best
}

/// Which vertex sets carry a cycle, summarized per length.
///
/// Used to test the hypotheses of the hopping construction: whether a longer
/// cycle exists and whether some equally long cycle leaves fewer components.
#[derive(Clone, Debug, Default)]
pub struct CycleCensus {
    /// Smallest component count of `G - V(C)` over cycles `C` of each length.
    min_components: FxHashMap<usize, usize>,
}

impl CycleCensus {
    pub fn new(g: &Graph) -> Self {
        let mut seen = rustc_hash::FxHashSet::default();
        let mut min_components: FxHashMap<usize, usize> = FxHashMap::default();
        for_each_cycle(g, 3, g.n(), |p| {
            let set: VertexSet = p.iter().collect();
            if seen.insert(set.bits()) {
                let omega = g.components_after_removal(set);
                min_components
                    .entry(p.len())
                    .and_modify(|m| *m = (*m).min(omega))
                    .or_insert(omega);
            }
        });
        CycleCensus { min_components }
    }

    pub fn has_cycle_of_length(&self, len: usize) -> bool {
        self.min_components.contains_key(&len)
    }

    /// Smallest `omega(G - V(C'))` over cycles `C'` of length `len`.
    pub fn min_components(&self, len: usize) -> Option<usize> {
        self.min_components.get(&len).copied()
    }

    /// Lengths carried by at least one cycle, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.min_components.keys().copied().collect();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn circumference_examples() {
        for n in 3..9 {
            assert_eq!(circumference(&cycle(n)), Some(n));
        }
        assert_eq!(circumference(&complete_bipartite(2, 3)), Some(4));
        assert_eq!(circumference(&petersen()), Some(9));
        assert_eq!(circumference(&path(5)), None);
        assert_eq!(circumference(&star(4)), None);
    }

    #[test]
    fn witness_is_a_valid_cycle() {
        let g = petersen();
        let c = longest_cycle(&g).unwrap();
        assert!(OrientedCycle::new(&g, c.vertices().to_vec()).is_ok());
    }

    #[test]
    fn longest_cycle_counts() {
        assert_eq!(enumerate_longest_cycles(&cycle(5)).len(), 1);
        assert_eq!(enumerate_longest_cycles(&complete(4)).len(), 3);
        assert_eq!(enumerate_longest_cycles(&complete(5)).len(), 12);
        assert_eq!(enumerate_longest_cycles(&complete_bipartite(2, 3)).len(), 3);
    }

    #[test]
    fn dominating_examples() {
        let g = complete_bipartite(2, 3);
        for c in enumerate_longest_cycles(&g) {
            assert!(is_dominating_cycle(&g, &c));
        }
        let barbell =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let tri = OrientedCycle::new(&barbell, vec![0, 1, 2]).unwrap();
        assert!(!is_dominating_cycle(&barbell, &tri));
    }

    #[test]
    fn mu_examples() {
        let k23 = complete_bipartite(2, 3);
        for c in enumerate_longest_cycles(&k23) {
            assert_eq!(mu_cycle(&k23, &c), Some(2));
        }
        assert_eq!(mu_graph(&k23).map(|m| m.0), Some(2));
        let p = petersen();
        for c in enumerate_longest_cycles(&p) {
            assert_eq!(mu_cycle(&p, &c), Some(3));
        }
        assert_eq!(mu_graph(&p).map(|m| m.0), Some(3));
        assert_eq!(mu_graph(&cycle(6)), None);
    }

    #[test]
    fn census_of_k4() {
        let census = CycleCensus::new(&complete(4));
        assert_eq!(census.lengths(), vec![3, 4]);
        assert_eq!(census.min_components(3), Some(1));
        assert_eq!(census.min_components(4), Some(0));
    }
}

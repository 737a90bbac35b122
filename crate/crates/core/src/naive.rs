//! Brute-force reference implementations.
//!
//! These share nothing with the fast paths beyond the edge list: they work on
//! a boolean adjacency matrix and enumerate subsets, triples, or vertex orders
//! directly. They cross-check the fast invariants and re-verify every
//! counterexample before it is reported.

use std::collections::{BTreeSet, HashSet};

use crate::graph::Graph;

/// Adjacency matrix with plain indexing.
#[derive(Clone, Debug)]
pub struct Matrix {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in g.edges() {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Matrix { n, adj }
    }

    fn members(&self, mask: u64) -> Vec<usize> {
        (0..self.n).filter(|&v| mask >> v & 1 == 1).collect()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&e| e).count()
    }

    fn components_avoiding(&self, removed: &[bool]) -> usize {
        let mut seen = removed.to_vec();
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(a) = stack.pop() {
                for b in 0..self.n {
                    if self.adj[a][b] && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        count
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for b in 0..self.n {
                if self.adj[a][b] && dist[b].is_none() {
                    dist[b] = dist[a].map(|d| d + 1);
                    queue.push_back(b);
                }
            }
        }
        dist
    }
}

/// `alpha(G)` by checking every subset.
pub fn alpha(g: &Graph) -> usize {
    let m = Matrix::new(g);
    let mut best = 0;
    for mask in 0u64..(1u64 << m.n) {
        let vs = m.members(mask);
        if vs.len() <= best {
            continue;
        }
        let independent = vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !m.adj[a][b]));
        if independent {
            best = vs.len();
        }
    }
    best
}

/// `sigma_3(G)` by checking every triple.
pub fn sigma3(g: &Graph) -> usize {
    let m = Matrix::new(g);
    let mut best: Option<usize> = None;
    for a in 0..m.n {
        for b in a + 1..m.n {
            for c in b + 1..m.n {
                if m.adj[a][b] || m.adj[a][c] || m.adj[b][c] {
                    continue;
                }
                let s = m.degree(a) + m.degree(b) + m.degree(c);
                best = Some(best.map_or(s, |x| x.min(s)));
            }
        }
    }
    best.unwrap_or(3 * m.n.saturating_sub(1))
}

/// `NC2(G)` from BFS distances and hash-set unions; `None` when undefined.
pub fn nc2(g: &Graph) -> Option<usize> {
    let m = Matrix::new(g);
    let complete = (0..m.n).all(|a| (0..m.n).all(|b| a == b || m.adj[a][b]));
    if complete {
        return Some(m.n.saturating_sub(1));
    }
    let mut best: Option<usize> = None;
    for x in 0..m.n {
        let dist = m.bfs(x);
        for y in x + 1..m.n {
            if dist[y] != Some(2) {
                continue;
            }
            let union: HashSet<usize> = (0..m.n).filter(|&z| m.adj[x][z] || m.adj[y][z]).collect();
            best = Some(best.map_or(union.len(), |b| b.min(union.len())));
        }
    }
    best
}

/// 1-toughness over all `2^n - 2` nonempty proper subsets; returns the size
/// of a smallest violating set when the graph is not 1-tough.
pub fn one_tough(g: &Graph) -> Result<(), usize> {
    let m = Matrix::new(g);
    let mut smallest: Option<usize> = None;
    let full = if m.n == 64 {
        u64::MAX
    } else {
        (1u64 << m.n) - 1
    };
    for mask in 1..full {
        let removed: Vec<bool> = (0..m.n).map(|v| mask >> v & 1 == 1).collect();
        let size = mask.count_ones() as usize;
        if m.components_avoiding(&removed) > size {
            smallest = Some(smallest.map_or(size, |s| s.min(size)));
        }
    }
    match smallest {
        None => Ok(()),
        Some(s) => Err(s),
    }
}

/// `c(G)` by dynamic programming over (vertex subset, path end) pairs.
pub fn circumference(g: &Graph) -> Option<usize> {
    let m = Matrix::new(g);
    let n = m.n;
    assert!(n <= 20, "subset DP is limited to 20 vertices");
    let mut best = None;
    for s in 0..n {
        // reach[mask] has bit e set when some s-path covering exactly `mask`
        // (all members >= s) ends at e.
        let mut reach = vec![0u32; 1 << n];
        reach[1 << s] = 1 << s;
        for mask in 0usize..(1 << n) {
            if reach[mask] == 0 || mask & ((1 << s) - 1) != 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            for e in 0..n {
                if reach[mask] >> e & 1 == 0 {
                    continue;
                }
                if size >= 3 && m.adj[e][s] {
                    best = Some(best.map_or(size, |b: usize| b.max(size)));
                }
                for f in s + 1..n {
                    if mask >> f & 1 == 0 && m.adj[e][f] {
                        reach[mask | 1 << f] |= 1 << f;
                    }
                }
            }
        }
    }
    best
}

/// All cycles with `len` vertices, found by extending vertex orders along edges; each is
/// returned once as its lexicographically least rotation/reflection.
pub fn cycles_of_length(g: &Graph, len: usize) -> BTreeSet<Vec<usize>> {
    let m = Matrix::new(g);
    let mut out = BTreeSet::new();
    let mut order = Vec::with_capacity(len);
    let mut used = vec![false; m.n];
    orders(&m, len, &mut order, &mut used, &mut out);
    out
}

fn orders(
    m: &Matrix,
    len: usize,
    order: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut BTreeSet<Vec<usize>>,
) {
    if order.len() == len {
        let closes = (0..len).all(|i| m.adj[order[i]][order[(i + 1) % len]]);
        if len >= 3 && closes {
            out.insert(least_rotation(order));
        }
        return;
    }
    for v in 0..m.n {
        let extends = order.last().is_none_or(|&last| m.adj[last][v]);
        if !used[v] && extends {
            used[v] = true;
            order.push(v);
            orders(m, len, order, used, out);
            order.pop();
            used[v] = false;
        }
    }
}

fn least_rotation(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for r in 0..k {
        let fwd: Vec<usize> = (0..k).map(|t| cycle[(r + t) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|t| cycle[(r + k - t) % k]).collect();
        for cand in [fwd, bwd] {
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// True iff no two off-cycle vertices are adjacent.
pub fn is_dominating(g: &Graph, cycle: &[usize]) -> bool {
    let m = Matrix::new(g);
    let off: Vec<usize> = (0..m.n).filter(|v| !cycle.contains(v)).collect();
    off.iter()
        .all(|&a| off.iter().all(|&b| a == b || !m.adj[a][b]))
}

/// `mu(G)` from the vertex-order enumeration of longest cycles.
pub fn mu_graph(g: &Graph) -> Option<usize> {
    let c = circumference(g)?;
    if c == g.n() {
        return None;
    }
    let m = Matrix::new(g);
    cycles_of_length(g, c)
        .iter()
        .filter_map(|cyc| {
            (0..m.n)
                .filter(|v| !cyc.contains(v))
                .map(|v| m.degree(v))
                .max()
        })
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn reference_values() {
        assert_eq!(alpha(&cycle(5)), 2);
        assert_eq!(alpha(&petersen()), 4);
        assert_eq!(sigma3(&cycle(6)), 6);
        assert_eq!(sigma3(&star(3)), 3);
        assert_eq!(nc2(&path(3)), Some(1));
        assert_eq!(nc2(&cycle(6)), Some(3));
        assert_eq!(one_tough(&cycle(5)), Ok(()));
        assert_eq!(one_tough(&complete_bipartite(2, 3)), Err(2));
        assert_eq!(circumference(&complete_bipartite(2, 3)), Some(4));
        assert_eq!(circumference(&petersen()), Some(9));
        assert_eq!(circumference(&path(4)), None);
        assert_eq!(cycles_of_length(&complete(4), 4).len(), 3);
        assert_eq!(cycles_of_length(&complete_bipartite(2, 3), 4).len(), 3);
        assert_eq!(mu_graph(&complete_bipartite(2, 3)), Some(2));
    }
}

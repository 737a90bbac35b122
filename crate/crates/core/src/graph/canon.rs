//! Canonical labeling by individualization and refinement.
//!
//! The search starts from the unit partition, refines it to an equitable
//! ordered partition (cells split by neighbor counts into earlier cells), and
//! branches by individualizing each vertex of the first non-singleton cell.
//! Every discrete leaf yields an adjacency code in graph6 bit order; the
//! canonical form is the largest code found. Branches that individualize a
//! twin of an already-tried vertex are skipped: the transposition of two
//! twins is an automorphism fixing everything individualized so far, so both
//! subtrees produce the same codes.

use super::{Graph, VertexSet};

/// Largest vertex count whose adjacency code fits in one `u64`.
pub const MAX_CANON_VERTICES: usize = 11;

/// Isomorphism-class key: vertex count plus the canonical adjacency code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    pub(crate) fn from_parts(n: usize, code: u64) -> Self {
        CanonicalForm { n: n as u8, code }
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut bit = total;
        for j in 1..n {
            for i in 0..j {
                bit -= 1;
                if (self.code >> bit) & 1 == 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph::from_adjacency(adj).expect("canonical code decodes to a simple graph")
    }
}

/// Canonical form of `g`.
///
/// # Panics
/// If `g` has more than [`MAX_CANON_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let adj: Vec<u64> = g.adjacency().iter().map(|s| s.bits()).collect();
    let (code, _) = canon_raw(&adj);
    CanonicalForm::from_parts(g.n(), code)
}

/// A permutation `perm` with `g.relabel(&perm) == canonical_form(g).to_graph()`.
///
/// # Panics
/// If `g` has more than [`MAX_CANON_VERTICES`] vertices.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let adj: Vec<u64> = g.adjacency().iter().map(|s| s.bits()).collect();
    let (_, lab) = canon_raw(&adj);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in lab.iter().enumerate().take(g.n()) {
        perm[v as usize] = pos;
    }
    perm
}

/// Canonical code and the leaf labeling (`lab[position] = vertex`) for a raw
/// adjacency array.
pub(crate) fn canon_raw(adj: &[u64]) -> (u64, [u8; MAX_CANON_VERTICES]) {
    let n = adj.len();
    assert!(
        n <= MAX_CANON_VERTICES,
        "canonical form supports at most {MAX_CANON_VERTICES} vertices, got {n}"
    );
    let mut twins = [0u64; MAX_CANON_VERTICES];
    for a in 0..n {
        for b in a + 1..n {
            if adj[a] & !(1 << b) == adj[b] & !(1 << a) {
                twins[a] |= 1 << b;
                twins[b] |= 1 << a;
            }
        }
    }
    let mut search = Search {
        adj,
        twins,
        best: None,
    };
    let root = if n == 0 {
        Vec::new()
    } else {
        vec![(1u64 << n) - 1]
    };
    search.descend(root);
    search.best.unwrap_or((0, [0; MAX_CANON_VERTICES]))
}

struct Search<'a> {
    adj: &'a [u64],
    twins: [u64; MAX_CANON_VERTICES],
    best: Option<(u64, [u8; MAX_CANON_VERTICES])>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u64>) {
        let n = self.adj.len();
        refine(self.adj, &mut cells);
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let idx = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[idx];
        let mut tried = 0u64;
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..idx]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[idx + 1..]);
            self.descend(child);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = cells.len();
        let mut lab = [0u8; MAX_CANON_VERTICES];
        for (pos, c) in cells.iter().enumerate() {
            lab[pos] = c.trailing_zeros() as u8;
        }
        let mut code = 0u64;
        for j in 1..n {
            let row = self.adj[lab[j] as usize];
            for &vi in &lab[..j] {
                code = (code << 1) | ((row >> vi) & 1);
            }
        }
        if self.best.is_none_or(|(b, _)| code > b) {
            self.best = Some((code, lab));
        }
    }
}

/// Refines an ordered partition until it is equitable. Each pass uses every
/// current cell, in order, as a splitter; split pieces are ordered by their
/// neighbor count into the splitter, so the result is label-invariant.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let n = adj.len();
    loop {
        let before = cells.len();
        let mut s = 0;
        while s < cells.len() && cells.len() < n {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(n);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets = [0u64; MAX_CANON_VERTICES + 1];
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    buckets[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                next.extend(buckets.iter().copied().filter(|&b| b != 0));
            }
            *cells = next;
            s += 1;
        }
        if cells.len() == before || cells.len() == n {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    /// Largest graph6-order code over every permutation; the brute-force
    /// isomorphism key.
    fn brute_code(g: &Graph) -> u64 {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = 0u64;
        permute(&mut perm, 0, &mut |lab| {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = (code << 1) | g.has_edge(lab[i], lab[j]) as u64;
                }
            }
            best = best.max(code);
        });
        best
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
        (0u64..(1 << pairs.len())).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| (mask >> k) & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    }

    #[test]
    fn agrees_with_brute_force_classes() {
        use std::collections::HashMap;
        for n in 1..=5 {
            let mut pairing: HashMap<u64, CanonicalForm> = HashMap::new();
            let mut reverse: HashMap<CanonicalForm, u64> = HashMap::new();
            for g in labeled_graphs(n) {
                let b = brute_code(&g);
                let c = canonical_form(&g);
                assert_eq!(*pairing.entry(b).or_insert(c), c, "{g:?}");
                assert_eq!(*reverse.entry(c).or_insert(b), b, "{g:?}");
            }
            let expected = [1, 2, 4, 11, 34][n - 1];
            assert_eq!(pairing.len(), expected, "classes on {n} vertices");
        }
    }

    #[test]
    fn labeling_reproduces_canonical_graph() {
        for g in [
            petersen(),
            cycle(9),
            complete_bipartite(3, 4),
            path(6),
            complete(7),
        ] {
            let perm = canonical_labeling(&g);
            assert_eq!(g.relabel(&perm), canonical_form(&g).to_graph());
        }
    }

    #[test]
    fn invariant_under_relabeling_of_symmetric_graphs() {
        let g = petersen();
        let c = canonical_form(&g);
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&g.relabel(&perm)), c);
        let three_triangles = Graph::from_edges(
            9,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (6, 7),
                (7, 8),
                (6, 8),
            ],
        )
        .unwrap();
        let shuffled = three_triangles.relabel(&[8, 0, 4, 1, 5, 2, 6, 3, 7]);
        assert_eq!(canonical_form(&three_triangles), canonical_form(&shuffled));
    }
}

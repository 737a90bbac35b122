use serde::Serialize;

use crate::graph::Graph;

/// `sigma_3(G)`: least degree sum over independent triples, or `3(n-1)` when
/// `alpha(G) <= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sigma3 {
    pub value: usize,
    /// The minimizing triple; `None` on the `alpha <= 2` branch.
    pub triple: Option<[usize; 3]>,
}

pub fn sigma3(g: &Graph) -> Sigma3 {
    let n = g.n();
    let mut best: Option<(usize, [usize; 3])> = None;
    for a in 0..n {
        let after_a = g.vertices() - crate::graph::VertexSet::full(a + 1) - g.neighbors(a);
        for b in after_a.iter() {
            let ab = g.degree(a) + g.degree(b);
            if best.is_some_and(|(s, _)| ab >= s) {
                continue;
            }
            let after_b = after_a - crate::graph::VertexSet::full(b + 1) - g.neighbors(b);
            if let Some(c) = after_b.iter().min_by_key(|&c| g.degree(c)) {
                let s = ab + g.degree(c);
                if best.is_none_or(|(bs, _)| s < bs) {
                    best = Some((s, [a, b, c]));
                }
            }
        }
    }
    match best {
        Some((value, triple)) => Sigma3 {
            value,
            triple: Some(triple),
        },
        None => Sigma3 {
            value: 3 * n.saturating_sub(1),
            triple: None,
        },
    }
}

/// `NC2(G)`: least `|N(x) ∪ N(y)|` over pairs at distance exactly two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Nc2 {
    /// `G` is complete; the value is `n - 1`.
    Complete { value: usize },
    /// Attained by the pair `(x, y)`.
    Attained { value: usize, x: usize, y: usize },
    /// Not complete and no pair at distance two (a disjoint union of cliques).
    Undefined,
}

impl Nc2 {
    pub fn value(&self) -> Option<usize> {
        match *self {
            Nc2::Complete { value } | Nc2::Attained { value, .. } => Some(value),
            Nc2::Undefined => None,
        }
    }
}

pub fn nc2(g: &Graph) -> Nc2 {
    if g.is_complete() {
        return Nc2::Complete {
            value: g.n().saturating_sub(1),
        };
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for x in 0..g.n() {
        for y in g.second_neighborhood(x).iter().filter(|&y| y > x) {
            let size = (g.neighbors(x) | g.neighbors(y)).len();
            if best.is_none_or(|(b, _, _)| size < b) {
                best = Some((size, x, y));
            }
        }
    }
    match best {
        Some((value, x, y)) => Nc2::Attained { value, x, y },
        None => Nc2::Undefined,
    }
}

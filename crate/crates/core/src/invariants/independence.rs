use crate::graph::{Graph, VertexSet};

/// A maximum independent set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    pub witness: VertexSet,
}

/// `alpha(G)` with a witness, by branch and bound over bitset candidate sets.
pub fn independence_number(g: &Graph) -> IndependentSet {
    let mut best = VertexSet::EMPTY;
    grow(g, VertexSet::EMPTY, g.vertices(), &mut best);
    IndependentSet {
        size: best.len(),
        witness: best,
    }
}

fn grow(g: &Graph, chosen: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
    let mut chosen = chosen;
    // Vertices with at most one candidate neighbor can always be taken.
    loop {
        let forced = cand.iter().find(|&v| (g.neighbors(v) & cand).len() <= 1);
        match forced {
            Some(v) => {
                chosen.insert(v);
                cand = cand - g.neighbors(v) - VertexSet::singleton(v);
            }
            None => break,
        }
    }
    if chosen.len() + cand.len() <= best.len() {
        return;
    }
    let Some(pivot) = cand.iter().max_by_key(|&v| (g.neighbors(v) & cand).len()) else {
        *best = chosen;
        return;
    };
    grow(
        g,
        chosen.with(pivot),
        cand - g.neighbors(pivot) - VertexSet::singleton(pivot),
        best,
    );
    grow(g, chosen, cand.without(pivot), best);
}

use serde::Serialize;

use super::setup::Setup;

/// Vertices at distance two whose neighborhoods cover at most `|B| - 1`
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SmallPair {
    pub x: usize,
    pub y: usize,
    pub union_size: usize,
}

pub fn find_small_pairs(s: &Setup) -> Vec<SmallPair> {
    let g = s.graph();
    let limit = s.m().saturating_sub(1);
    let mut out = Vec::new();
    for x in 0..g.n() {
        for y in g.second_neighborhood(x).iter().filter(|&y| y > x) {
            let union_size = (g.neighbors(x) | g.neighbors(y)).len();
            if union_size <= limit {
                out.push(SmallPair { x, y, union_size });
            }
        }
    }
    out
}

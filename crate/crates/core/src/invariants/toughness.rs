use crate::graph::{Graph, VertexSet};

/// Outcome of the 1-toughness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toughness {
    OneTough,
    /// A minimum-size nonempty `S` with more than `|S|` components in `G - S`.
    Violated {
        cut: VertexSet,
        components: usize,
    },
}

impl Toughness {
    pub fn is_one_tough(&self) -> bool {
        matches!(self, Toughness::OneTough)
    }

    pub fn cut(&self) -> Option<VertexSet> {
        match *self {
            Toughness::OneTough => None,
            Toughness::Violated { cut, .. } => Some(cut),
        }
    }
}

/// Decides 1-toughness by scanning cuts in order of size.
///
/// `G - S` has at most `n - |S|` components, so only `|S| < n/2` can violate;
/// the first violation found is therefore of minimum size.
pub fn is_one_tough(g: &Graph) -> Toughness {
    let n = g.n();
    for k in 1..=n.saturating_sub(1) / 2 {
        let mut bits: u128 = (1 << k) - 1;
        let limit: u128 = 1 << n;
        while bits < limit {
            let cut = VertexSet::from_bits(bits as u64);
            let components = g.components_after_removal(cut);
            if components > k {
                return Toughness::Violated { cut, components };
            }
            bits = next_same_popcount(bits);
        }
    }
    Toughness::OneTough
}

/// Gosper's hack: the next integer with the same number of set bits.
fn next_same_popcount(x: u128) -> u128 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

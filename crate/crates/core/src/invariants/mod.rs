//! Exact graph invariants: independence number, `sigma_3`, `NC2`,
//! 1-toughness, circumference and `mu`.

mod cycles;
mod degree_sums;
mod independence;
mod toughness;

pub use cycles::{
    circumference, enumerate_cycles_of_length, enumerate_longest_cycles, for_each_cycle,
    is_dominating_cycle, longest_cycle, mu_cycle, mu_graph, CycleCensus,
};
pub use degree_sums::{nc2, sigma3, Nc2, Sigma3};
pub use independence::{independence_number, IndependentSet};
pub use toughness::{is_one_tough, Toughness};

use serde::Serialize;

use crate::graph::Graph;

/// Every invariant of one graph, computed by the fast algorithms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub alpha: usize,
    pub sigma3: usize,
    pub nc2: Nc2,
    /// `None` for forests.
    pub circumference: Option<usize>,
    pub is_one_tough: bool,
    pub is_hamiltonian: bool,
    /// Present only for non-hamiltonian graphs with a cycle.
    pub mu_graph: Option<usize>,
}

impl InvariantBundle {
    pub fn compute(g: &Graph) -> Self {
        let circumference = circumference(g);
        let is_hamiltonian = circumference == Some(g.n());
        let mu_graph = if is_hamiltonian || circumference.is_none() {
            None
        } else {
            mu_graph(g).map(|(mu, _)| mu)
        };
        InvariantBundle {
            n: g.n(),
            alpha: independence_number(g).size,
            sigma3: sigma3(g).value,
            nc2: nc2(g),
            circumference,
            is_one_tough: is_one_tough(g).is_one_tough(),
            is_hamiltonian,
            mu_graph,
        }
    }
}

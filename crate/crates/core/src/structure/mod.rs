//! Setups on an oriented longest cycle and the structure derived from them.

mod bad_path;
mod hopping;
mod intervals;
mod relocate;
mod setup;
mod small_pairs;

pub use bad_path::{
    extend_cycle, find_bad_paths, hamiltonian_path, rewiring_case, BadPathForm, BadPathWitness,
    ExtendError,
};
pub use hopping::{
    check_hopping_conclusions, evaluate as evaluate_hopping, hopping_fixpoint, hopping_gate,
    is_fixpoint, HoppingCheck, HoppingError, HoppingGate, HoppingSets, HoppingVerdicts,
};
pub use intervals::{
    decompose_by, inner_connected, interval_decomposition, neighborhood_decomposition, Interval,
    IntervalDecomposition,
};
pub use relocate::{relocate_v, RelocateError};
pub use setup::{find_setups, pivot_triples, NoSetups, Setup, SetupDescription, SetupError};
pub use small_pairs::{find_small_pairs, SmallPair};

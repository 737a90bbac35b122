pub mod cli;
pub mod cycle;
pub mod graph;
pub mod invariants;
pub mod naive;
pub mod structure;
pub mod verifier;

use thiserror::Error;

use super::setup::{Setup, SetupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelocateError {
    #[error("the new pivot must differ from v")]
    SamePivot,
    #[error("an interval of length {0} is present; only lengths 2 and 3 are allowed")]
    IntervalLength(usize),
    #[error("neither N(u) nor N(v) contains both cycle neighbors of {0}")]
    NotAPivot(usize),
    #[error("relocated setup is invalid: {0}")]
    Setup(#[from] SetupError),
    #[error("B changed under relocation: new members {added:?}, lost members {lost:?}")]
    BChanged { added: Vec<usize>, lost: Vec<usize> },
}

/// Moves the pivot from `v` to `v0`.
///
/// With `v0^+, v0^- ∈ N(u)` the result is `(u, v0, C)`; with both in `N(v)` the
/// roles of `u` and `v` are swapped first and the result is `(v, v0, C~)`.
/// Either way `B` must come out unchanged.
pub fn relocate_v(s: &Setup, v0: usize) -> Result<Setup, RelocateError> {
    if v0 == s.v() {
        return Err(RelocateError::SamePivot);
    }
    if let Some(bad) = s
        .intervals()
        .intervals
        .iter()
        .map(|i| i.length)
        .find(|&k| k != 2 && k != 3)
    {
        return Err(RelocateError::IntervalLength(bad));
    }
    let c = s.cycle();
    if !c.contains(v0) {
        return Err(SetupError::VOffCycle(v0).into());
    }
    let ends = [c.succ(v0), c.pred(v0)];
    let relocated = if ends.iter().all(|&x| s.n_u().contains(x)) {
        Setup::new(s.graph(), c, s.u(), v0)?
    } else if ends.iter().all(|&x| s.n_v().contains(x)) {
        let swapped = s.swap_roles()?;
        Setup::new(s.graph(), swapped.cycle(), s.v(), v0)?
    } else {
        return Err(RelocateError::NotAPivot(v0));
    };
    if relocated.b_set() != s.b_set() {
        return Err(RelocateError::BChanged {
            added: (relocated.b_set() - s.b_set()).to_vec(),
            lost: (s.b_set() - relocated.b_set()).to_vec(),
        });
    }
    Ok(relocated)
}

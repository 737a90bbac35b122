//! Oriented cycles with successor/predecessor arithmetic.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const OFF: u8 = u8::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} appears more than once")]
    Repeated(usize),
    #[error("vertex {0} is not a vertex of the graph")]
    OutOfRange(usize),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    MissingEdge(usize, usize),
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
}

/// A cycle `(v_0, .., v_{k-1})` with the orientation `v_i -> v_{i+1 mod k}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedCycle {
    vertices: Vec<usize>,
    set: VertexSet,
    position: [u8; MAX_VERTICES],
}

impl OrientedCycle {
    /// Validates that `vertices` is a cycle of `g`, closing edge included.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, CycleError> {
        let c = Self::unchecked(vertices)?;
        for v in c.vertices.iter().copied() {
            if v >= g.n() {
                return Err(CycleError::OutOfRange(v));
            }
        }
        let k = c.vertices.len();
        for i in 0..k {
            let (a, b) = (c.vertices[i], c.vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(CycleError::MissingEdge(a, b));
            }
        }
        Ok(c)
    }

    /// Builds the sequence without checking edges; distinctness and length are
    /// still enforced.
    pub(crate) fn unchecked(vertices: Vec<usize>) -> Result<Self, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        let mut position = [OFF; MAX_VERTICES];
        let mut set = VertexSet::EMPTY;
        for (i, &v) in vertices.iter().enumerate() {
            if v >= MAX_VERTICES {
                return Err(CycleError::OutOfRange(v));
            }
            if set.contains(v) {
                return Err(CycleError::Repeated(v));
            }
            set.insert(v);
            position[v] = i as u8;
        }
        Ok(OrientedCycle {
            vertices,
            set,
            position,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; kept for API symmetry with `len`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        self.set
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.set.contains(v)
    }

    #[inline]
    pub fn position(&self, v: usize) -> Option<usize> {
        if self.contains(v) {
            Some(self.position[v] as usize)
        } else {
            None
        }
    }

    /// `x^{+offset}` (or `x^{-|offset|}` for negative offsets).
    pub fn step(&self, x: usize, offset: isize) -> Result<usize, CycleError> {
        let i = self.position(x).ok_or(CycleError::NotOnCycle(x))?;
        let k = self.len() as isize;
        let j = (i as isize + offset).rem_euclid(k);
        Ok(self.vertices[j as usize])
    }

    /// `x^+`. Panics if `x` is off the cycle.
    #[inline]
    pub fn succ(&self, x: usize) -> usize {
        let i = self.position(x).expect("succ of an off-cycle vertex");
        self.vertices[(i + 1) % self.len()]
    }

    /// `x^-`. Panics if `x` is off the cycle.
    #[inline]
    pub fn pred(&self, x: usize) -> usize {
        let i = self.position(x).expect("pred of an off-cycle vertex");
        self.vertices[(i + self.len() - 1) % self.len()]
    }

    /// `A^+ = {x : x^- in A}` for the on-cycle part of `a`.
    pub fn shift_forward(&self, a: VertexSet) -> VertexSet {
        (a & self.set).iter().map(|x| self.succ(x)).collect()
    }

    /// `A^- = {x : x^+ in A}` for the on-cycle part of `a`.
    pub fn shift_backward(&self, a: VertexSet) -> VertexSet {
        (a & self.set).iter().map(|x| self.pred(x)).collect()
    }

    /// Number of forward steps from `a` to `b`.
    pub fn forward_distance(&self, a: usize, b: usize) -> usize {
        let (i, j) = (self.position[a] as usize, self.position[b] as usize);
        (j + self.len() - i) % self.len()
    }

    /// The C-path `a ->C b`, both ends included.
    pub fn forward_path(&self, a: usize, b: usize) -> Vec<usize> {
        let i = self
            .position(a)
            .expect("forward_path from an off-cycle vertex");
        let d = self.forward_distance(a, b);
        (0..=d)
            .map(|t| self.vertices[(i + t) % self.len()])
            .collect()
    }

    /// The C-path `a <-C b`: from `a` against the orientation down to `b`.
    pub fn backward_path(&self, a: usize, b: usize) -> Vec<usize> {
        let mut p = self.forward_path(b, a);
        p.reverse();
        p
    }

    /// Vertex set of `a ->C b`.
    pub fn forward_segment(&self, a: usize, b: usize) -> VertexSet {
        self.forward_path(a, b).into_iter().collect()
    }

    /// True if `x` lies on `a ->C b` (ends included).
    pub fn on_forward_segment(&self, x: usize, a: usize, b: usize) -> bool {
        self.contains(x) && self.forward_distance(a, x) <= self.forward_distance(a, b)
    }

    /// The same cycle traversed in the opposite direction, starting at the same
    /// first vertex.
    pub fn reversed(&self) -> OrientedCycle {
        let mut v = Vec::with_capacity(self.len());
        v.push(self.vertices[0]);
        v.extend(self.vertices[1..].iter().rev());
        Self::unchecked(v).expect("reversal keeps a valid cycle")
    }

    /// Rotation starting at `start`, same orientation.
    pub fn rotated_to(&self, start: usize) -> Result<OrientedCycle, CycleError> {
        let i = self.position(start).ok_or(CycleError::NotOnCycle(start))?;
        let mut v = self.vertices[i..].to_vec();
        v.extend_from_slice(&self.vertices[..i]);
        Ok(Self::unchecked(v).expect("rotation keeps a valid cycle"))
    }

    /// Orientation- and rotation-free identity: the lexicographically smallest
    /// vertex sequence among all rotations of both orientations.
    pub fn canonical_key(&self) -> Vec<usize> {
        let start = self.set.first().expect("cycle is nonempty");
        let fwd = self.rotated_to(start).expect("start on cycle").vertices;
        let bwd = self
            .reversed()
            .rotated_to(start)
            .expect("start on cycle")
            .vertices;
        fwd.min(bwd)
    }

    /// True if the two cycles agree up to rotation and reflection.
    pub fn same_cycle(&self, other: &OrientedCycle) -> bool {
        self.set == other.set && self.canonical_key() == other.canonical_key()
    }
}

impl fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.vertices)
    }
}

impl Serialize for OrientedCycle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

//! π-rotation involutions of grid diagrams.
//!
//! A rotation is fixed by two constants: lattice point (a, b) goes to
//! ((c1 − a) mod n, (c2 − b) mod n), so cell (i, j) goes to
//! ((c1 − i) mod n + 1, (c2 − j) mod n + 1).

use crate::grid::{Cell, GridComplex, GridDiagram, GridState};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Behavior {
    /// O ↔ X: the involution reverses the knot (knot diagrams).
    SwapsOX,
    /// O → O, X → X, XX → XX (singular diagrams and their resolutions).
    PreservesOX,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvolutionSpec {
    pub n: usize,
    pub c1: usize,
    pub c2: usize,
    pub behavior: Behavior,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("no π-rotation maps the markings to themselves")]
    NotSymmetric,
    #[error("involution is not equivariant: {0}")]
    NotEquivariant(String),
}

impl InvolutionSpec {
    pub fn cell(&self, (i, j): Cell) -> Cell {
        let n = self.n;
        ((self.c1 + n - i % n) % n + 1, (self.c2 + n - j % n) % n + 1)
    }

    pub fn point(&self, a: usize, b: usize) -> (usize, usize) {
        let n = self.n;
        ((self.c1 + n - a) % n, (self.c2 + n - b) % n)
    }

    pub fn act(&self, x: &GridState) -> GridState {
        let mut perm = vec![0; self.n];
        for (a, b) in x.points() {
            let (a2, b2) = self.point(a, b);
            perm[a2] = b2;
        }
        GridState::from_perm(&perm)
    }

    fn maps(&self, from: &[Cell], to: &[Cell]) -> bool {
        let img: BTreeSet<Cell> = from.iter().map(|&c| self.cell(c)).collect();
        img == to.iter().copied().collect()
    }
}

/// All rotations that map the diagram to itself, preferred first: equal
/// constants before unequal ones, then lexicographic.
pub fn detect(g: &GridDiagram) -> Result<Vec<InvolutionSpec>, SymmetryError> {
    let n = g.n();
    let mut out = Vec::new();
    for c1 in 0..n {
        for c2 in 0..n {
            for behavior in [Behavior::SwapsOX, Behavior::PreservesOX] {
                let s = InvolutionSpec { n, c1, c2, behavior };
                let ok = match behavior {
                    Behavior::SwapsOX => g.xx().is_none() && s.maps(g.o(), g.x()) && s.maps(g.x(), g.o()),
                    Behavior::PreservesOX => {
                        s.maps(g.o(), g.o()) && s.maps(g.x(), g.x()) && g.xx().map_or(true, |c| s.cell(c) == c)
                    }
                };
                if ok {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by_key(|s| (s.c1 != s.c2, s.c1, s.c2, s.behavior));
    if out.is_empty() {
        Err(SymmetryError::NotSymmetric)
    } else {
        Ok(out)
    }
}

/// The preferred rotation with a given behavior.
pub fn detect_with(g: &GridDiagram, behavior: Behavior) -> Result<InvolutionSpec, SymmetryError> {
    detect(g)?.into_iter().find(|s| s.behavior == behavior).ok_or(SymmetryError::NotSymmetric)
}

/// τ as a permutation of generator indices.
pub fn tau_permutation(gc: &GridComplex, spec: &InvolutionSpec) -> Vec<u32> {
    gc.states.iter().map(|s| spec.act(s).rank() as u32).collect()
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct EquivarianceReport {
    pub involution: bool,
    pub chain_map: bool,
    pub grading_law: bool,
    pub fixed_states: usize,
    pub counterexamples: Vec<String>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.involution && self.chain_map && self.grading_law
    }
}

/// Doubled symmetrized Alexander grading: A + (n − ℓ)/2 removes the
/// asymmetry of the extra V-factors.
pub fn symmetric_a2(gc: &GridComplex, i: usize) -> i32 {
    gc.gradings[i].a2 + (gc.grid.n() - gc.grid.components()) as i32
}

/// Check τ² = id, ∂τ = τ∂ and the grading law of the behavior:
/// for SwapsOX, A_s(τx) = −A_s(x) and M(τx) = M(x) − 2A_s(x);
/// for PreservesOX, τ preserves (M, A).
pub fn verify_equivariance(gc: &GridComplex, spec: &InvolutionSpec) -> EquivarianceReport {
    const MAX_EXAMPLES: usize = 8;
    let tau = tau_permutation(gc, spec);
    let mut r = EquivarianceReport { involution: true, chain_map: true, grading_law: true, ..Default::default() };
    let note = |r: &mut EquivarianceReport, s: String| {
        if r.counterexamples.len() < MAX_EXAMPLES {
            r.counterexamples.push(s);
        }
    };
    for i in 0..gc.states.len() {
        let t = tau[i] as usize;
        if t == i {
            r.fixed_states += 1;
        }
        if tau[t] as usize != i {
            r.involution = false;
            note(&mut r, format!("τ² moves {}", gc.states[i]));
        }
        let mut lhs: Vec<u32> = gc.complex.boundary_of(i).iter().map(|&j| tau[j as usize]).collect();
        lhs.sort_unstable();
        if lhs != gc.complex.boundary_of(t) {
            r.chain_map = false;
            note(&mut r, format!("∂τ ≠ τ∂ at {}", gc.states[i]));
        }
        let (g, h) = (gc.gradings[i], gc.gradings[t]);
        let ok = match spec.behavior {
            Behavior::SwapsOX => {
                let (s, st) = (symmetric_a2(gc, i), symmetric_a2(gc, t));
                st == -s && h.m == g.m - s
            }
            Behavior::PreservesOX => h.m == g.m && h.a2 == g.a2,
        };
        if !ok {
            r.grading_law = false;
            note(&mut r, format!("grading law fails at {}: {:?} → {:?}", gc.states[i], g, h));
        }
    }
    r
}

//! The tilde grid chain complex: all grid states, differential counting
//! empty rectangles that avoid every marking.

use super::diagram::GridDiagram;
use super::grading::{Grader, Gradings};
use super::rect::rects_for_swap;
use super::state::{all_states, GridState};
use super::GridError;
use crate::f2::{Backend, BigradedComplex, Homology};
use rayon::prelude::*;

/// Resource limits for state enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 10 }
    }
}

impl Limits {
    pub fn check(&self, n: usize) -> Result<(), GridError> {
        if n > self.max_n {
            Err(GridError::GridTooLarge { n, cap: self.max_n })
        } else {
            Ok(())
        }
    }
}

/// States y such that an odd number of empty rectangles run from x to y.
pub fn boundary(g: &GridDiagram, x: &GridState) -> Vec<GridState> {
    let n = g.n();
    let mut out = Vec::new();
    for a1 in 0..n {
        for a2 in a1 + 1..n {
            let empty = rects_for_swap(x, a1, a2).iter().filter(|r| r.is_empty_for(g, x)).count();
            if empty % 2 == 1 {
                out.push(x.swapped(a1, a2));
            }
        }
    }
    out
}

/// A grid diagram with its full tilde complex. Generator i is the state of
/// lexicographic rank i.
#[derive(Clone, Debug)]
pub struct GridComplex {
    pub grid: GridDiagram,
    pub states: Vec<GridState>,
    pub gradings: Vec<Gradings>,
    pub complex: BigradedComplex,
}

impl GridComplex {
    pub fn build(g: &GridDiagram, limits: &Limits) -> Result<Self, GridError> {
        limits.check(g.n())?;
        let states = all_states(g.n());
        let grader = Grader::new(g)?;
        let gradings: Vec<Gradings> = states.par_iter().map(|s| grader.grade(s)).collect();
        let cols: Vec<Vec<u32>> =
            states.par_iter().map(|s| boundary(g, s).iter().map(|y| y.rank() as u32).collect()).collect();
        let complex = BigradedComplex::new(gradings.iter().map(|gr| gr.bigrading()).collect(), cols);
        Ok(GridComplex { grid: g.clone(), states, gradings, complex })
    }

    pub fn index_of(&self, s: &GridState) -> usize {
        s.rank()
    }

    pub fn homology(&self) -> Homology {
        self.complex.homology(Backend::Auto)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::Bigrading;

    #[test]
    fn unknot_boundary_is_empty() {
        let g = GridDiagram::new(2, vec![(1, 2), (2, 1)], vec![(1, 1), (2, 2)], None).unwrap();
        let c = GridComplex::build(&g, &Limits::default()).unwrap();
        assert!(c.states.iter().all(|s| boundary(&g, s).is_empty()));
        let h = c.homology();
        assert_eq!(h.ranks.len(), 2);
        assert_eq!(h.ranks[&Bigrading::int(0, 0)], 1);
        assert_eq!(h.ranks[&Bigrading::int(-1, -1)], 1);
    }

    #[test]
    fn cap_is_enforced() {
        let n = 3;
        let g = GridDiagram::new(n, vec![(1, 3), (2, 1), (3, 2)], vec![(1, 2), (2, 3), (3, 1)], None).unwrap();
        let r = GridComplex::build(&g, &Limits { max_n: 2 });
        assert!(matches!(r, Err(GridError::GridTooLarge { n: 3, cap: 2 })));
    }
}

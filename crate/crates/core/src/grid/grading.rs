//! Absolute Maslov and Alexander gradings.
//!
//! For a permutation marking set P the Maslov grading is the closed form
//! I(x,x) − I(x,P) − I(P,x) + const, where I counts pairs strictly south-west
//! of one another in the planar fundamental domain; the constant is fixed by
//! M_P(x^NW) = 0. Propagation along transpositions gives the same numbers
//! and is kept as an independent path for cross-checks.

use super::diagram::{Cell, GridDiagram, MarkSet};
use super::rect::{rel_along, transposition_path, RectChoice};
use super::state::GridState;
use super::GridError;
use crate::f2::Bigrading;
use serde::{Deserialize, Serialize};

/// All gradings of one state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gradings {
    pub m_o: i32,
    pub m_x: i32,
    pub m: i32,
    /// Doubled Alexander grading.
    pub a2: i32,
}

impl Gradings {
    pub fn bigrading(&self) -> Bigrading {
        Bigrading::new(self.m, self.a2)
    }
}

/// Closed-form Maslov grading for a permutation marking set.
#[derive(Clone, Debug)]
pub struct MaslovForm {
    /// Marks in doubled coordinates (cell centres sit at odd values).
    marks: Vec<(i32, i32)>,
    offset: i32,
}

fn south_west(p: &[(i32, i32)], q: &[(i32, i32)]) -> i32 {
    let mut c = 0;
    for a in p {
        for b in q {
            if a.0 < b.0 && a.1 < b.1 {
                c += 1;
            }
        }
    }
    c
}

fn doubled_points(x: &GridState) -> Vec<(i32, i32)> {
    x.points().map(|(a, b)| (2 * a as i32, 2 * b as i32)).collect()
}

impl MaslovForm {
    /// `None` when the marks do not form a permutation.
    pub fn new(g: &GridDiagram, marks: &[Cell]) -> Option<Self> {
        let nw = g.nw_state_of(marks)?;
        let marks = marks.iter().map(|&(i, j)| (2 * i as i32 - 1, 2 * j as i32 - 1)).collect();
        let mut f = MaslovForm { marks, offset: 0 };
        f.offset = -f.raw(&nw);
        Some(f)
    }

    fn raw(&self, x: &GridState) -> i32 {
        let p = doubled_points(x);
        south_west(&p, &p) - south_west(&p, &self.marks) - south_west(&self.marks, &p)
    }

    pub fn eval(&self, x: &GridState) -> i32 {
        self.raw(x) + self.offset
    }
}

/// Maslov grading by summing relative gradings from the normalizing state.
pub fn maslov_by_propagation(g: &GridDiagram, marks: &[Cell], x: &GridState, choice: RectChoice) -> Option<i32> {
    let nw = g.nw_state_of(marks)?;
    // M(x) = M(nw) − (M(nw) − M(x))
    Some(-rel_along(marks, &transposition_path(&nw, x), choice))
}

/// Grading evaluator for one diagram.
#[derive(Clone, Debug)]
pub enum Grader {
    Plain {
        n: usize,
        ell: usize,
        o: MaslovForm,
        x: MaslovForm,
    },
    /// Singular diagrams are graded through the 0-resolution: a state x maps
    /// to x ∪ c there, Maslov is unchanged (j = 0) and the Alexander grading
    /// is raised by one half.
    Singular {
        x: MaslovForm,
        zero: Box<Grader>,
        k: usize,
    },
}

impl Grader {
    /// Fails for singular grids whose double point is not central.
    pub fn new(g: &GridDiagram) -> Result<Self, GridError> {
        Ok(match g.xx() {
            None => Grader::Plain {
                n: g.n(),
                ell: g.components(),
                o: MaslovForm::new(g, g.o()).expect("O is a permutation"),
                x: MaslovForm::new(g, &g.x_type()).expect("X is a permutation"),
            },
            Some(_) => {
                let (g0, _) = crate::skein::resolve(g).map_err(|e| GridError::MalformedGrid(e.to_string()))?;
                Grader::Singular {
                    x: MaslovForm::new(g, &g.x_type()).expect("X-type is a permutation"),
                    zero: Box::new(Grader::new(&g0)?),
                    k: g.n().div_ceil(2),
                }
            }
        })
    }

    pub fn grade(&self, s: &GridState) -> Gradings {
        match self {
            Grader::Plain { n, ell, o, x } => {
                let (m_o, m_x) = (o.eval(s), x.eval(s));
                Gradings { m_o, m_x, m: m_o, a2: m_o - m_x - (*n as i32 - *ell as i32) }
            }
            Grader::Singular { x, zero, k } => {
                let up = zero.grade(&insert_center(s, *k));
                Gradings { m_o: up.m_o, m_x: x.eval(s), m: up.m, a2: up.a2 + 1 }
            }
        }
    }
}

/// F(x) = x ∪ c: lines at index ≥ k shift up by one and the new line k is
/// paired with itself.
pub fn insert_center(x: &GridState, k: usize) -> GridState {
    let n = x.n();
    let lift = |b: usize| if b < k { b } else { b + 1 };
    let mut perm = Vec::with_capacity(n + 1);
    for a in 0..n {
        if a == k {
            perm.push(k);
        }
        perm.push(lift(x.get(a)));
    }
    if k == n {
        perm.push(k);
    }
    GridState::from_perm(&perm)
}

/// Inverse of `insert_center` on states through c.
pub fn remove_center(y: &GridState, k: usize) -> Option<GridState> {
    if y.get(k) != k {
        return None;
    }
    let drop = |b: usize| if b < k { b } else { b - 1 };
    let perm: Vec<usize> = (0..y.n()).filter(|&a| a != k).map(|a| drop(y.get(a))).collect();
    Some(GridState::from_perm(&perm))
}

/// Gradings of a single state.
pub fn grading(g: &GridDiagram, x: &GridState) -> Result<Gradings, GridError> {
    if x.n() != g.n() {
        return Err(GridError::SizeMismatch { grid: g.n(), state: x.n() });
    }
    Ok(Grader::new(g)?.grade(x))
}

/// Maslov grading for a marking set, when that set is a permutation.
pub fn maslov(g: &GridDiagram, set: MarkSet, x: &GridState) -> Option<i32> {
    MaslovForm::new(g, &g.marks(set)).map(|f| f.eval(x))
}

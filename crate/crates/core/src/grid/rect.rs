//! Rectangles on the grid torus and the relative Maslov grading.

use super::diagram::{Cell, GridDiagram, MarkSet};
use super::state::GridState;
use super::GridError;

/// A rectangle with lower-left lattice corner `(a0, b0)`, width `w` and
/// height `h`, all taken mod n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rect {
    pub a0: usize,
    pub b0: usize,
    pub w: usize,
    pub h: usize,
    pub n: usize,
}

/// Which of the two rectangles joining a pair of states to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RectChoice {
    First,
    Second,
}

impl Rect {
    /// Cell `(i, j)` has lower-left lattice point `(i-1, j-1)`.
    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        let n = self.n;
        (i - 1 + n - self.a0) % n < self.w && (j - 1 + n - self.b0) % n < self.h
    }

    pub fn interior_point(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        let da = (a + n - self.a0) % n;
        let db = (b + n - self.b0) % n;
        da > 0 && da < self.w && db > 0 && db < self.h
    }

    pub fn count_cells(&self, cells: &[Cell]) -> usize {
        cells.iter().filter(|&&c| self.contains_cell(c)).count()
    }

    pub fn interior_count(&self, x: &GridState) -> usize {
        x.points().filter(|&(a, b)| self.interior_point(a, b)).count()
    }

    /// Row mask of the cells covered, as used with `GridDiagram::marked_rows`.
    fn row_mask(&self) -> u32 {
        let full = (1u64 << self.h) - 1;
        let rot = (full << self.b0) | (full >> (self.n - self.b0).min(63));
        (rot & ((1u64 << self.n) - 1)) as u32
    }

    /// True when the rectangle contains no marking and no interior point of `x`.
    pub fn is_empty_for(&self, g: &GridDiagram, x: &GridState) -> bool {
        let mask = self.row_mask();
        for s in 0..self.w {
            if g.marked_rows((self.a0 + s) % self.n) & mask != 0 {
                return false;
            }
        }
        for s in 1..self.w {
            let a = (self.a0 + s) % self.n;
            let db = (x.get(a) + self.n - self.b0) % self.n;
            if db > 0 && db < self.h {
                return false;
            }
        }
        true
    }
}

/// The two rectangles from `x` to the state obtained by swapping the rows
/// at vertical lines `a1 < a2`. The corners of `x` are lower-left and
/// upper-right.
pub fn rects_for_swap(x: &GridState, a1: usize, a2: usize) -> [Rect; 2] {
    let n = x.n();
    let (b1, b2) = (x.get(a1), x.get(a2));
    [
        Rect { a0: a1, b0: b1, w: a2 - a1, h: (b2 + n - b1) % n, n },
        Rect { a0: a2, b0: b2, w: n - (a2 - a1), h: (b1 + n - b2) % n, n },
    ]
}

/// Rectangles from `x` to `y`, or `None` unless they differ in exactly two lines.
pub fn rects_between(x: &GridState, y: &GridState) -> Option<[Rect; 2]> {
    match x.diff(y)[..] {
        [a1, a2] => Some(rects_for_swap(x, a1, a2)),
        _ => None,
    }
}

/// M(x) − M(y) for states differing by one transposition:
/// 1 − 2|r ∩ marks| + 2|x ∩ Int r|.
pub fn rel_step(marks: &[Cell], x: &GridState, y: &GridState, choice: RectChoice) -> Option<i32> {
    let rs = rects_between(x, y)?;
    let r = match choice {
        RectChoice::First => rs[0],
        RectChoice::Second => rs[1],
    };
    Some(1 - 2 * r.count_cells(marks) as i32 + 2 * r.interior_count(x) as i32)
}

/// A sequence of states from `x` to `y`, consecutive ones differing by a
/// transposition: line by line, move the required row into place.
pub fn transposition_path(x: &GridState, y: &GridState) -> Vec<GridState> {
    let mut s = *x;
    let mut path = vec![s];
    for a in 0..x.n() {
        if s.get(a) != y.get(a) {
            let b = (a + 1..x.n()).find(|&b| s.get(b) == y.get(a)).unwrap();
            s = s.swapped(a, b);
            path.push(s);
        }
    }
    path
}

/// Sum of relative gradings along an explicit path.
pub fn rel_along(marks: &[Cell], path: &[GridState], choice: RectChoice) -> i32 {
    path.windows(2).map(|w| rel_step(marks, &w[0], &w[1], choice).expect("path steps are transpositions")).sum()
}

/// M_marks(x) − M_marks(y).
pub fn rel_grading(g: &GridDiagram, x: &GridState, y: &GridState, set: MarkSet) -> Result<i32, GridError> {
    if x.n() != g.n() || y.n() != g.n() {
        return Err(GridError::SizeMismatch { grid: g.n(), state: if x.n() != g.n() { x.n() } else { y.n() } });
    }
    Ok(rel_along(&g.marks(set), &transposition_path(x, y), RectChoice::First))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unknot2() -> GridDiagram {
        GridDiagram::new(2, vec![(1, 2), (2, 1)], vec![(1, 1), (2, 2)], None).unwrap()
    }

    #[test]
    fn two_by_two_relative_grading() {
        let g = unknot2();
        let (nwo, _) = g.nw_states();
        let nwo = nwo.unwrap();
        let other = nwo.swapped(0, 1);
        assert_eq!(rel_grading(&g, &nwo, &nwo, MarkSet::O).unwrap(), 0);
        assert_eq!(rel_grading(&g, &nwo, &other, MarkSet::O).unwrap().abs(), 1);
        for c in [RectChoice::First, RectChoice::Second] {
            assert_eq!(rel_step(g.o(), &nwo, &other, c), Some(1));
        }
    }

    #[test]
    fn rectangles_are_complementary_in_width() {
        let x = GridState::from_perm(&[2, 0, 3, 1]);
        let [r1, r2] = rects_for_swap(&x, 0, 2);
        assert_eq!(r1.w + r2.w, 4);
        assert_eq!((r1.h + r2.h) % 4, 0);
        assert!(r1.contains_cell((1, 3)) && !r1.contains_cell((3, 3)));
    }

    #[test]
    fn size_mismatch() {
        let g = unknot2();
        let x = GridState::identity(3);
        assert!(matches!(rel_grading(&g, &x, &x, MarkSet::O), Err(GridError::SizeMismatch { .. })));
    }
}

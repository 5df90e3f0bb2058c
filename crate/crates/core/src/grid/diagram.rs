//! Grid diagrams for knots, links and singular knots with one double point.

use super::state::{GridState, MAX_PACKED};
use super::GridError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A cell `(col, row)`, 1-based, row 1 at the bottom.
pub type Cell = (usize, usize);

/// Which marking set a Maslov grading refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MarkSet {
    O,
    /// The X markings together with the doubled marking, if any.
    X,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridDiagram {
    n: usize,
    o: Vec<Cell>,
    x: Vec<Cell>,
    xx: Option<Cell>,
    components: usize,
    /// Per cell column (0-based), bit mask of cell rows carrying any marking.
    marked: Vec<u32>,
}

impl GridDiagram {
    /// Validate raw marking lists.
    pub fn new(n: usize, o: Vec<Cell>, x: Vec<Cell>, xx: Option<Cell>) -> Result<Self, GridError> {
        if n == 0 {
            return Err(GridError::MalformedGrid("grid size must be positive".into()));
        }
        if n > MAX_PACKED {
            return Err(GridError::GridTooLarge { n, cap: MAX_PACKED });
        }
        let all = o.iter().chain(&x).chain(xx.iter());
        for &(i, j) in all.clone() {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(GridError::MalformedGrid(format!("cell ({i},{j}) lies outside the {n}×{n} grid")));
            }
        }
        let mut seen = BTreeSet::new();
        for c in all {
            if !seen.insert(*c) {
                return Err(GridError::OverlappingMarkings(format!("cell ({},{}) is marked twice", c.0, c.1)));
            }
        }
        let count = |cells: &[Cell], extra: Option<Cell>, axis: fn(&Cell) -> usize, k: usize| {
            cells.iter().chain(extra.iter()).filter(|c| axis(c) == k).count()
        };
        let col = |c: &Cell| c.0;
        let row = |c: &Cell| c.1;
        for k in 1..=n {
            for (axis, name) in [(col as fn(&Cell) -> usize, "column"), (row, "row")] {
                let nx = count(&x, xx, axis, k);
                if nx != 1 {
                    return Err(GridError::MalformedGrid(format!("{name} {k} has {nx} X-type markings")));
                }
                let want = match xx {
                    Some(d) if axis(&d) == k => 2,
                    _ => 1,
                };
                let no = count(&o, None, axis, k);
                if no != want {
                    return Err(GridError::MalformedGrid(format!("{name} {k} has {no} O markings, expected {want}")));
                }
            }
        }
        let mut marked = vec![0u32; n];
        for &(i, j) in o.iter().chain(&x).chain(xx.iter()) {
            marked[i - 1] |= 1 << (j - 1);
        }
        let mut g = GridDiagram { n, o, x, xx, components: 0, marked };
        g.components = g.trace_components().len();
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn o(&self) -> &[Cell] {
        &self.o
    }

    pub fn x(&self) -> &[Cell] {
        &self.x
    }

    pub fn xx(&self) -> Option<Cell> {
        self.xx
    }

    pub fn is_singular(&self) -> bool {
        self.xx.is_some()
    }

    /// Number of link components ℓ.
    pub fn components(&self) -> usize {
        self.components
    }

    /// X-type markings: X together with XX.
    pub fn x_type(&self) -> Vec<Cell> {
        self.x.iter().copied().chain(self.xx).collect()
    }

    pub fn marks(&self, set: MarkSet) -> Vec<Cell> {
        match set {
            MarkSet::O => self.o.clone(),
            MarkSet::X => self.x_type(),
        }
    }

    /// Bit mask of marked cell rows in cell column `col` (0-based).
    #[inline]
    pub fn marked_rows(&self, col: usize) -> u32 {
        self.marked[col]
    }

    pub fn is_marked(&self, cell: Cell) -> bool {
        self.marked[cell.0 - 1] >> (cell.1 - 1) & 1 == 1
    }

    /// The state through the NW corners of a permutation marking set.
    pub fn nw_state_of(&self, cells: &[Cell]) -> Option<GridState> {
        if cells.len() != self.n {
            return None;
        }
        let mut perm = vec![usize::MAX; self.n];
        for &(i, j) in cells {
            perm[i - 1] = j % self.n;
        }
        GridState::try_from_perm(&perm)
    }

    /// `(x^NWO, x^NWX)`; the first is absent for singular grids.
    pub fn nw_states(&self) -> (Option<GridState>, Option<GridState>) {
        (self.nw_state_of(&self.o), self.nw_state_of(&self.x_type()))
    }

    /// Connected components of the marking graph, each listed as the cells
    /// it visits. Strands run X→O inside columns and O→X inside rows.
    pub fn trace_components(&self) -> Vec<Vec<Cell>> {
        let xs = self.x_type();
        let mut cells: Vec<Cell> = xs.clone();
        cells.extend(&self.o);
        let idx = |c: &Cell| cells.iter().position(|d| d == c).unwrap();
        let mut parent: Vec<usize> = (0..cells.len()).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        for x in &xs {
            for o in &self.o {
                if o.0 == x.0 || o.1 == x.1 {
                    let (a, b) = (find(&mut parent, idx(x)), find(&mut parent, idx(o)));
                    parent[a] = b;
                }
            }
        }
        let mut comps: Vec<Vec<Cell>> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for (i, c) in cells.iter().enumerate() {
            let r = find(&mut parent, i);
            match roots.iter().position(|&q| q == r) {
                Some(k) => comps[k].push(*c),
                None => {
                    roots.push(r);
                    comps.push(vec![*c]);
                }
            }
        }
        comps
    }

    /// The O in a given column (for non-singular columns).
    pub fn o_in_col(&self, col: usize) -> Vec<Cell> {
        self.o.iter().copied().filter(|c| c.0 == col).collect()
    }

    pub fn o_in_row(&self, row: usize) -> Vec<Cell> {
        self.o.iter().copied().filter(|c| c.1 == row).collect()
    }

    pub fn x_in_col(&self, col: usize) -> Option<Cell> {
        self.x_type().into_iter().find(|c| c.0 == col)
    }

    pub fn x_in_row(&self, row: usize) -> Option<Cell> {
        self.x_type().into_iter().find(|c| c.1 == row)
    }

    /// The diagram reflected left to right, which mirrors the link.
    pub fn reflected(&self) -> GridDiagram {
        let f = |(i, j): Cell| (self.n + 1 - i, j);
        GridDiagram::new(
            self.n,
            self.o.iter().map(|&c| f(c)).collect(),
            self.x.iter().map(|&c| f(c)).collect(),
            self.xx.map(f),
        )
        .expect("reflection preserves validity")
    }

    /// Linking number of a two-component link. Vertical strands cross over
    /// horizontal ones; vertical strands run X→O and horizontal ones O→X.
    pub fn linking_number(&self) -> Result<i32, GridError> {
        if self.is_singular() || self.components != 2 {
            return Err(GridError::NotTwoComponents(self.components));
        }
        let comps = self.trace_components();
        let comp_of = |c: Cell| comps.iter().position(|k| k.contains(&c)).unwrap();
        let mut twice = 0i32;
        for &xv in &self.x {
            let ov = self.o_in_col(xv.0)[0];
            let (ylo, yhi) = (xv.1.min(ov.1), xv.1.max(ov.1));
            let dy: i32 = if ov.1 > xv.1 { 1 } else { -1 };
            for &oh in &self.o {
                let xh = self.x_in_row(oh.1).unwrap();
                let (xlo, xhi) = (oh.0.min(xh.0), oh.0.max(xh.0));
                let dx: i32 = if xh.0 > oh.0 { 1 } else { -1 };
                let crosses = xlo < xv.0 && xv.0 < xhi && ylo < oh.1 && oh.1 < yhi;
                if crosses && comp_of(xv) != comp_of(oh) {
                    // z-component of over × under, over = (0, dy), under = (dx, 0)
                    twice += -dy * dx;
                }
            }
        }
        Ok(twice / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn unknot2() -> GridDiagram {
        GridDiagram::new(2, vec![(1, 2), (2, 1)], vec![(1, 1), (2, 2)], None).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(unknot2().components(), 1);
        let t = GridDiagram::new(
            5,
            vec![(1, 5), (2, 1), (3, 2), (4, 3), (5, 4)],
            vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
            None,
        )
        .unwrap();
        assert_eq!(t.components(), 1);
        let s = GridDiagram::new(
            5,
            vec![(1, 5), (2, 3), (3, 2), (3, 4), (4, 3), (5, 1)],
            vec![(1, 2), (2, 1), (4, 5), (5, 4)],
            Some((3, 3)),
        )
        .unwrap();
        assert!(s.is_singular());
        assert_eq!(s.components(), 1);
        let bad = GridDiagram::new(3, vec![(1, 1), (1, 2), (2, 3)], vec![(1, 3), (2, 1), (3, 2)], None);
        assert!(matches!(bad, Err(GridError::MalformedGrid(_))));
    }

    #[test]
    fn overlap_is_reported() {
        let r = GridDiagram::new(2, vec![(1, 2), (2, 1)], vec![(1, 2), (2, 1)], None);
        assert!(matches!(r, Err(GridError::OverlappingMarkings(_))));
    }

    #[test]
    fn nw_states() {
        let g = unknot2();
        let (o, x) = g.nw_states();
        assert_eq!(o.unwrap().perm(), vec![0, 1]);
        assert_eq!(x.unwrap().perm(), vec![1, 0]);
    }

    #[test]
    fn split_link_has_zero_linking() {
        let g = GridDiagram::new(4, vec![(1, 2), (2, 1), (3, 4), (4, 3)], vec![(1, 1), (2, 2), (3, 3), (4, 4)], None)
            .unwrap();
        assert_eq!(g.components(), 2);
        assert_eq!(g.linking_number().unwrap(), 0);
        assert!(matches!(unknot2().linking_number(), Err(GridError::NotTwoComponents(1))));
    }
}

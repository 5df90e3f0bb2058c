//! Grid states packed into a machine word.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest grid size a packed state can hold.
pub const MAX_PACKED: usize = 16;

/// A grid state: vertical line `a` is paired with horizontal line `σ(a)`.
/// Four bits per line, so n ≤ 16.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridState {
    packed: u64,
    n: u8,
}

impl GridState {
    pub fn from_perm(perm: &[usize]) -> Self {
        assert!(perm.len() <= MAX_PACKED);
        let mut packed = 0u64;
        for (a, &b) in perm.iter().enumerate() {
            debug_assert!(b < perm.len());
            packed |= (b as u64) << (4 * a);
        }
        GridState { packed, n: perm.len() as u8 }
    }

    /// Checked constructor: `perm` must be a permutation of 0..n.
    pub fn try_from_perm(perm: &[usize]) -> Option<Self> {
        let n = perm.len();
        if n == 0 || n > MAX_PACKED {
            return None;
        }
        let mut seen = 0u32;
        for &b in perm {
            if b >= n || seen >> b & 1 == 1 {
                return None;
            }
            seen |= 1 << b;
        }
        Some(Self::from_perm(perm))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(&(0..n).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, a: usize) -> usize {
        (self.packed >> (4 * a) & 0xf) as usize
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize) {
        self.packed = self.packed & !(0xf << (4 * a)) | (b as u64) << (4 * a);
    }

    /// Swap the rows attached to vertical lines `a1` and `a2`.
    pub fn swapped(&self, a1: usize, a2: usize) -> Self {
        let mut s = *self;
        let (b1, b2) = (self.get(a1), self.get(a2));
        s.set(a1, b2);
        s.set(a2, b1);
        s
    }

    pub fn perm(&self) -> Vec<usize> {
        (0..self.n()).map(|a| self.get(a)).collect()
    }

    /// Lattice points `(a, σ(a))`.
    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).map(move |a| (a, self.get(a)))
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.get(a) == b
    }

    /// Columns where the two states disagree.
    pub fn diff(&self, other: &GridState) -> Vec<usize> {
        (0..self.n()).filter(|&a| self.get(a) != other.get(a)).collect()
    }

    /// Position in lexicographic order (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut used = 0u32;
        let mut r = 0usize;
        for a in 0..n {
            let v = self.get(a);
            let smaller = (!used & ((1u32 << v) - 1)).count_ones() as usize;
            r = r * (n - a) + smaller;
            used |= 1 << v;
        }
        r
    }
}

impl fmt::Debug for GridState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.perm())
    }
}

impl fmt::Display for GridState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "{{{}}}", pts.join(","))
    }
}

/// All states of an n×n grid in lexicographic order.
pub fn all_states(n: usize) -> Vec<GridState> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(factorial(n));
    loop {
        out.push(GridState::from_perm(&perm));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

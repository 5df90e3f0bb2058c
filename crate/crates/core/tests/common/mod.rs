//! Shared helpers for the integration tests: a deliberately naive grid
//! homology oracle and random grid strategies.
#![allow(dead_code)]

pub mod props;

use gridfloer::grid::{GridDiagram, GridState};
use gridfloer::io::GridFile;
use proptest::prelude::*;
use std::collections::BTreeMap;

pub fn corpus(name: &str) -> GridDiagram {
    gridfloer::corpus::load(name).expect("bundled grid").expect("parses").diagram().expect("valid grid")
}

pub fn corpus_file(name: &str) -> GridFile {
    gridfloer::corpus::load(name).unwrap().unwrap()
}

/// All permutations of 0..n, in no particular order.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn count_below_left(p: &[(i32, i32)], q: &[(i32, i32)]) -> i32 {
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

/// Maslov grading from the closed formula, doubled coordinates throughout.
pub fn naive_maslov(perm: &[usize], marks: &[(usize, usize)]) -> i32 {
    let x: Vec<(i32, i32)> = perm.iter().enumerate().map(|(a, &b)| (2 * a as i32, 2 * b as i32)).collect();
    let m: Vec<(i32, i32)> = marks.iter().map(|&(i, j)| (2 * i as i32 - 1, 2 * j as i32 - 1)).collect();
    count_below_left(&x, &x) - count_below_left(&x, &m) - count_below_left(&m, &x) + count_below_left(&m, &m) + 1
}

pub fn naive_components(n: usize, o: &[(usize, usize)], x: &[(usize, usize)]) -> usize {
    let o_in_row: BTreeMap<usize, usize> = o.iter().map(|&(i, j)| (j, i)).collect();
    let x_in_col: BTreeMap<usize, usize> = x.iter().map(|&(i, j)| (i, j)).collect();
    let mut seen = vec![false; n + 1];
    let mut comps = 0;
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        comps += 1;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = o_in_row[&x_in_col[&c]];
        }
    }
    comps
}

/// Does an empty rectangle run from x to x with columns a1 < a2 swapped?
/// Returns the number of empty rectangles (0, 1 or 2).
pub fn naive_empty_rects(n: usize, perm: &[usize], marks: &[(usize, usize)], a1: usize, a2: usize) -> usize {
    let (b1, b2) = (perm[a1], perm[a2]);
    let rects = [(a1, a2 - a1, b1, (b2 + n - b1) % n), (a2, n - (a2 - a1), b2, (b1 + n - b2) % n)];
    rects
        .iter()
        .filter(|&&(l, w, b, h)| {
            let has_mark = marks.iter().any(|&(i, j)| (i - 1 + n - l) % n < w && (j - 1 + n - b) % n < h);
            let has_point = (1..w).any(|s| {
                let a = (l + s) % n;
                let d = (perm[a] + n - b) % n;
                d >= 1 && d < h
            });
            !has_mark && !has_point
        })
        .count()
}

/// F₂ rank of a list of bit rows.
pub fn f2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, |r| r.len() * 64);
    for col in 0..width {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && rows[r][w] & bit != 0 {
                for (a, b) in rows[r].iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A small standalone model of the tilde complex.
pub struct NaiveComplex {
    pub states: Vec<Vec<usize>>,
    pub grading: Vec<(i32, i32)>,
    pub boundary: Vec<Vec<usize>>,
}

impl NaiveComplex {
    /// Non-singular grids only.
    pub fn build(n: usize, o: &[(usize, usize)], x: &[(usize, usize)]) -> Self {
        let ell = naive_components(n, o, x) as i32;
        let marks: Vec<_> = o.iter().chain(x).copied().collect();
        let states = perms(n);
        let index: BTreeMap<Vec<usize>, usize> = states.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let grading = states
            .iter()
            .map(|p| {
                let (mo, mx) = (naive_maslov(p, o), naive_maslov(p, x));
                (mo, mo - mx - (n as i32 - ell))
            })
            .collect();
        let boundary = states
            .iter()
            .map(|p| {
                let mut out = Vec::new();
                for a1 in 0..n {
                    for a2 in a1 + 1..n {
                        if naive_empty_rects(n, p, &marks, a1, a2) % 2 == 1 {
                            let mut q = p.clone();
                            q.swap(a1, a2);
                            out.push(index[&q]);
                        }
                    }
                }
                out
            })
            .collect();
        NaiveComplex { states, grading, boundary }
    }

    /// Keep only the generators selected by `keep`, projecting the differential.
    pub fn restrict(&self, keep: impl Fn(&[usize]) -> bool) -> Self {
        let pos: Vec<Option<usize>> = {
            let mut next = 0;
            self.states
                .iter()
                .map(|p| {
                    keep(p).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let mut out = NaiveComplex { states: Vec::new(), grading: Vec::new(), boundary: Vec::new() };
        for (i, p) in self.states.iter().enumerate() {
            if pos[i].is_some() {
                out.states.push(p.clone());
                out.grading.push(self.grading[i]);
                out.boundary.push(self.boundary[i].iter().filter_map(|&j| pos[j]).collect());
            }
        }
        out
    }

    /// Homology ranks keyed by (M, 2A).
    pub fn homology(&self) -> BTreeMap<(i32, i32), usize> {
        let mut blocks: BTreeMap<(i32, i32), Vec<usize>> = BTreeMap::new();
        for (i, &g) in self.grading.iter().enumerate() {
            blocks.entry(g).or_default().push(i);
        }
        let local: BTreeMap<usize, usize> =
            blocks.values().flat_map(|v| v.iter().enumerate().map(|(k, &i)| (i, k))).collect();
        let rank_from = |g: (i32, i32)| -> usize {
            let (Some(src), Some(tgt)) = (blocks.get(&g), blocks.get(&(g.0 - 1, g.1))) else { return 0 };
            let words = tgt.len().div_ceil(64);
            let rows = src
                .iter()
                .map(|&i| {
                    let mut r = vec![0u64; words];
                    for &j in &self.boundary[i] {
                        assert_eq!(self.grading[j], (g.0 - 1, g.1), "boundary is not homogeneous");
                        let k = local[&j];
                        r[k / 64] ^= 1 << (k % 64);
                    }
                    r
                })
                .collect();
            f2_rank(rows)
        };
        let mut out = BTreeMap::new();
        for (&g, v) in &blocks {
            let r = v.len() - rank_from(g) - rank_from((g.0 + 1, g.1));
            if r > 0 {
                out.insert(g, r);
            }
        }
        out
    }

    /// dim C − 2 rank(∂ + 1 + τ) for τ given on permutations.
    pub fn tate_rank(&self, tau: impl Fn(&[usize]) -> Vec<usize>) -> usize {
        let index: BTreeMap<&Vec<usize>, usize> = self.states.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let len = self.states.len();
        let words = len.div_ceil(64);
        let rows = (0..len)
            .map(|i| {
                let mut r = vec![0u64; words];
                let mut flip = |k: usize| r[k / 64] ^= 1 << (k % 64);
                for &j in &self.boundary[i] {
                    flip(j);
                }
                flip(i);
                flip(index[&tau(&self.states[i])]);
                r
            })
            .collect();
        len - 2 * f2_rank(rows)
    }
}

/// (a, b) ↦ ((c1 − a) mod n, (c2 − b) mod n) on a permutation.
pub fn naive_rotate(perm: &[usize], c1: usize, c2: usize) -> Vec<usize> {
    let n = perm.len();
    let mut out = vec![0; n];
    for (a, &b) in perm.iter().enumerate() {
        out[(c1 + n - a) % n] = (c2 + n - b) % n;
    }
    out
}

pub fn ranks_of(h: &BTreeMap<gridfloer::f2::Bigrading, usize>) -> BTreeMap<(i32, i32), usize> {
    h.iter().filter(|(_, &r)| r > 0).map(|(g, &r)| ((g.m, g.a2), r)).collect()
}

pub fn state(perm: &[usize]) -> GridState {
    GridState::from_perm(perm)
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Any grid (knot or link) with n in 2..=max_n.
pub fn any_grid(max_n: usize) -> impl Strategy<Value = GridDiagram> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), shuffled(n), shuffled(n)))
        .prop_filter("O and X must not share a cell", |(_, o, x)| o.iter().zip(x).all(|(a, b)| a != b))
        .prop_map(|(n, o, x)| {
            let cells = |s: &[usize]| s.iter().enumerate().map(|(i, &j)| (i + 1, j)).collect();
            GridDiagram::new(n, cells(&o), cells(&x), None).unwrap()
        })
}

/// A knot grid: X in column i sits in the row of the O in column π(i),
/// where π is an n-cycle.
pub fn knot_grid(max_n: usize) -> impl Strategy<Value = GridDiagram> {
    (2..=max_n).prop_flat_map(|n| (Just(n), shuffled(n), shuffled(n))).prop_map(|(n, o, order)| {
        let mut pi = vec![0; n + 1];
        for k in 0..n {
            pi[order[k]] = order[(k + 1) % n];
        }
        let oc: Vec<_> = (1..=n).map(|i| (i, o[i - 1])).collect();
        let xc: Vec<_> = (1..=n).map(|i| (i, o[pi[i] - 1])).collect();
        GridDiagram::new(n, oc, xc, None).unwrap()
    })
}

/// A grid mapped to itself by the rotation with constants (c1, c2),
/// swapping O and X.
pub fn swap_symmetric_grid(max_n: usize) -> impl Strategy<Value = (GridDiagram, usize, usize)> {
    (2..=max_n).prop_flat_map(|n| (Just(n), shuffled(n), 0..n, 0..n)).prop_filter_map(
        "rotated O collides with O",
        |(n, o, c1, c2)| {
            let rot = |(i, j): (usize, usize)| ((c1 + n - i % n) % n + 1, (c2 + n - j % n) % n + 1);
            let oc: Vec<_> = (1..=n).map(|i| (i, o[i - 1])).collect();
            let mut xc: Vec<_> = oc.iter().map(|&c| rot(c)).collect();
            xc.sort();
            GridDiagram::new(n, oc, xc, None).ok().map(|g| (g, c1, c2))
        },
    )
}

/// A grid whose O and X sets are each mapped to themselves by the
/// rotation with constants (c1, c2).
pub fn preserve_symmetric_grid(max_n: usize) -> impl Strategy<Value = (GridDiagram, usize, usize)> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 0..n, 0..n, proptest::collection::vec(any::<u32>(), 2 * n)))
        .prop_filter_map("no invariant placement", |(n, c1, c2, seeds)| {
            let o = invariant_perm(n, c1, c2, &seeds[..n])?;
            let x = invariant_perm(n, c1, c2, &seeds[n..])?;
            if o.iter().zip(&x).any(|(a, b)| a == b) {
                return None;
            }
            let cells = |s: &[usize]| s.iter().enumerate().map(|(i, &j)| (i + 1, j)).collect();
            GridDiagram::new(n, cells(&o), cells(&x), None).ok().map(|g| (g, c1, c2))
        })
}

/// A permutation of cell rows with σ(ρ₁(i)) = ρ₂(σ(i)), built orbit by
/// orbit from the seeds.
fn invariant_perm(n: usize, c1: usize, c2: usize, seeds: &[u32]) -> Option<Vec<usize>> {
    let r1 = |i: usize| (c1 + n - i % n) % n + 1;
    let r2 = |j: usize| (c2 + n - j % n) % n + 1;
    let mut sigma = vec![0usize; n + 1];
    let mut free: Vec<usize> = (1..=n).collect();
    for i in 1..=n {
        if sigma[i] != 0 {
            continue;
        }
        let fixed_col = r1(i) == i;
        let choices: Vec<usize> = free.iter().copied().filter(|&j| (r2(j) == j) == fixed_col).collect();
        if choices.is_empty() {
            return None;
        }
        let j = choices[seeds[i - 1] as usize % choices.len()];
        sigma[i] = j;
        sigma[r1(i)] = r2(j);
        free.retain(|&f| f != j && f != r2(j));
    }
    Some(sigma[1..].to_vec())
}

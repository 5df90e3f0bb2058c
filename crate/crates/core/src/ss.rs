//! The spectral sequence of a chain complex with an involution.
//!
//! With h = 1 + τ, a class of E_r is represented by x₀ with ∂x₀ = 0 that
//! extends to a zig-zag x₀, …, x_{r−1} with ∂x_k = h x_{k−1}; the
//! differential is d_r[x₀] = [h x_{r−1}]. Pages start at E_1 = H(∂) with
//! d_1 = h_*.
//!
//! Rather than solving one zig-zag at a time we carry, for each page, a
//! basis of all pairs (x₀, x_{r−1}). Then
//!   Z_r = span of first components,
//!   B_r = im ∂ + h(tails of length r − 1 chains),
//!   E_r = Z_r / B_r,
//! and the pairs of page r + 1 are (Σc x₀, y) with h(Σc x_{r−1}) = ∂y,
//! together with (0, ker ∂).

use crate::f2::{
    poincare, Backend, BigradedComplex, Bigrading, BitVec, Echelon, F2Column, F2Error, LaurentPoly2, SparseVec,
};
use crate::grid::{GridComplex, GridDiagram, GridError, Limits};
use crate::symmetry::{detect_with, tau_permutation, Behavior, SymmetryError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SsError {
    #[error("involution is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("expected exactly one E_∞ survivor in Alexander grading 0, found {found}")]
    UnexpectedSurvivorCount { found: usize },
    #[error("s_τ is undetermined: {0}")]
    Undetermined(String),
    #[error("wrong kind of grid: {0}")]
    WrongKind(String),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Algebra(#[from] F2Error),
}

/// One page. For r ≥ 2 blocks mixing A with its τ-partner are keyed by the
/// larger Alexander grading and the Maslov grading it forces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SSPage {
    pub r: usize,
    pub ranks: BTreeMap<Bigrading, usize>,
    pub reps: BTreeMap<Bigrading, Vec<Vec<u32>>>,
    /// Rank of d_r leaving each bigrading.
    pub d_out_rank: BTreeMap<Bigrading, usize>,
}

impl SSPage {
    pub fn total(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn d_is_zero(&self) -> bool {
        self.d_out_rank.values().all(|&d| d == 0)
    }
}

#[derive(Clone, Debug)]
pub struct SpectralSequence {
    pub pages: Vec<SSPage>,
    /// Page index after which every differential vanishes for degree reasons.
    pub bound: usize,
    /// True when the pages were cut off by `max_r` with a nonzero differential.
    pub non_stabilizing: bool,
    /// Smallest r with rank E_r = rank E_∞.
    pub collapse_page: usize,
}

impl SpectralSequence {
    pub fn e_infinity(&self) -> &SSPage {
        self.pages.last().expect("at least one page")
    }

    pub fn page(&self, r: usize) -> Option<&SSPage> {
        self.pages.get(r.checked_sub(1)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    /// τ preserves (M, A): blocks by A, layers by M.
    Graded,
    /// τ pairs A with a partner and preserves δ: blocks by {A, A'}, layers by δ.
    Delta,
}

struct Block {
    lo: i32,
    hi: i32,
    layers: BTreeMap<i32, Vec<u32>>,
}

struct Layout {
    mode: Mode,
    blocks: Vec<Block>,
    local: Vec<u32>,
}

fn layer_of(mode: Mode, g: Bigrading) -> i32 {
    match mode {
        Mode::Graded => g.m,
        Mode::Delta => g.delta2().div_euclid(2),
    }
}

impl Layout {
    fn new(c: &BigradedComplex, tau: &[u32]) -> Result<Self, SsError> {
        let n = c.len();
        if tau.len() != n {
            return Err(SsError::NotEquivariant(format!("τ has {} entries for {n} generators", tau.len())));
        }
        for i in 0..n {
            let t = tau[i] as usize;
            if t >= n || tau[t] as usize != i {
                return Err(SsError::NotEquivariant(format!("τ² ≠ id at generator {i}")));
            }
            let mut img: Vec<u32> = c.boundary_of(i).iter().map(|&j| tau[j as usize]).collect();
            img.sort_unstable();
            if img != c.boundary_of(t) {
                return Err(SsError::NotEquivariant(format!("∂τ ≠ τ∂ at generator {i}")));
            }
        }
        let graded = (0..n).all(|i| c.grading(tau[i] as usize) == c.grading(i));
        let mode = if graded { Mode::Graded } else { Mode::Delta };
        let mut partner: BTreeMap<i32, i32> = BTreeMap::new();
        for i in 0..n {
            let (g, h) = (c.grading(i), c.grading(tau[i] as usize));
            if mode == Mode::Delta && g.delta2() != h.delta2() {
                return Err(SsError::NotEquivariant(format!("τ changes δ at generator {i}: {g} → {h}")));
            }
            if *partner.entry(g.a2).or_insert(h.a2) != h.a2 {
                return Err(SsError::NotEquivariant(format!("τ sends Alexander grading {} to two gradings", g.a2)));
            }
        }
        let mut by_key: BTreeMap<(i32, i32), Block> = BTreeMap::new();
        let mut local = vec![0u32; n];
        for i in 0..n {
            let g = c.grading(i);
            let p = partner[&g.a2];
            let key = (g.a2.min(p), g.a2.max(p));
            let b = by_key.entry(key).or_insert_with(|| Block { lo: key.0, hi: key.1, layers: BTreeMap::new() });
            let layer = b.layers.entry(layer_of(mode, g)).or_default();
            local[i] = layer.len() as u32;
            layer.push(i as u32);
        }
        Ok(Layout { mode, blocks: by_key.into_values().collect(), local })
    }

    fn key(&self, b: &Block, layer: i32) -> Bigrading {
        match self.mode {
            Mode::Graded => Bigrading::new(layer, b.hi),
            Mode::Delta => {
                let delta2 = 2 * layer + b.hi.rem_euclid(2);
                Bigrading::new((delta2 + b.hi) / 2, b.hi)
            }
        }
    }

    fn bound(&self) -> usize {
        let span = self
            .blocks
            .iter()
            .map(|b| {
                let (lo, hi) = (b.layers.keys().next().unwrap(), b.layers.keys().next_back().unwrap());
                (hi - lo) as usize
            })
            .max()
            .unwrap_or(0);
        span + 2
    }
}

struct Ctx<'a> {
    c: &'a BigradedComplex,
    tau: &'a [u32],
    local: &'a [u32],
    block: &'a Block,
}

/// Per-piece data of one page.
#[derive(Default, Clone)]
struct PieceStats {
    z: usize,
    reps: Vec<Vec<u32>>,
}

impl Ctx<'_> {
    fn size(&self, l: i32) -> usize {
        self.block.layers.get(&l).map_or(0, |v| v.len())
    }

    fn gens(&self, l: i32) -> &[u32] {
        self.block.layers.get(&l).map_or(&[], |v| v.as_slice())
    }

    fn to_local(&self, l: i32, chain: &[u32]) -> BitVec {
        let idx: Vec<usize> = chain.iter().map(|&i| self.local[i as usize] as usize).collect();
        BitVec::from_indices(self.size(l), &idx)
    }

    fn to_global(&self, l: i32, v: &BitVec) -> Vec<u32> {
        let gens = self.gens(l);
        let mut out: Vec<u32> = v.ones().into_iter().map(|k| gens[k]).collect();
        out.sort_unstable();
        out
    }

    fn h(&self, l: i32, v: &BitVec) -> BitVec {
        let gens = self.gens(l);
        let mut out = v.clone();
        for k in v.ones() {
            out.flip(self.local[self.tau[gens[k] as usize] as usize] as usize);
        }
        out
    }

    /// ∂(layer l + 1) inside layer l, tagged by source combinations.
    fn image(&self, l: i32) -> Echelon<BitVec> {
        let (tlen, src) = (self.size(l), self.gens(l + 1));
        let mut e = Echelon::new(tlen);
        for (k, &g) in src.iter().enumerate() {
            let col = self.to_local(l, self.c.boundary_of(g as usize));
            let _ = e.insert(col, Some(BitVec::from_indices(src.len(), &[k])));
        }
        e
    }

    fn kernel(&self, l: i32) -> Vec<BitVec> {
        let src = self.gens(l);
        let mut e = Echelon::new(self.size(l - 1));
        let mut out = Vec::new();
        for (k, &g) in src.iter().enumerate() {
            let col = self.to_local(l - 1, self.c.boundary_of(g as usize));
            if let Err(Some(z)) = e.insert(col, Some(BitVec::from_indices(src.len(), &[k]))) {
                out.push(z);
            }
        }
        out
    }

    /// Dimensions and representatives for pages 1..=rmax + 1; page r + 1
    /// is only used for the rank of d_r.
    fn run(&self, rmax: usize) -> Result<Vec<BTreeMap<i32, PieceStats>>, SsError> {
        let lo = *self.block.layers.keys().next().unwrap();
        let hi = *self.block.layers.keys().next_back().unwrap();
        // chains may start below the lowest layer with x₀ = 0
        let bottom = lo - rmax as i32 - 1;
        let top = hi + rmax as i32 + 1;
        let img: BTreeMap<i32, Echelon<BitVec>> = (bottom..=top).map(|l| (l, self.image(l))).collect();
        let ker: BTreeMap<i32, Vec<BitVec>> = (bottom..=top).map(|l| (l, self.kernel(l))).collect();
        let mut pairs: BTreeMap<i32, Vec<(BitVec, BitVec)>> =
            (bottom..=hi).map(|l| (l, ker[&l].iter().map(|v| (v.clone(), v.clone())).collect())).collect();
        let mut tails_into: BTreeMap<i32, Vec<BitVec>> = BTreeMap::new();
        let mut out = Vec::new();
        for r in 1..=rmax + 1 {
            let mut page = BTreeMap::new();
            for l0 in lo..=hi {
                let mut b = img[&l0].clone();
                for t in tails_into.get(&l0).into_iter().flatten() {
                    let _ = b.insert(self.h(l0, t), None);
                }
                let zs = &pairs[&l0];
                let z = crate::f2::echelon::rank(self.size(l0), zs.iter().map(|(a, _)| a.clone()));
                let before = b.rank();
                let mut reps = Vec::new();
                for (a, _) in zs {
                    if b.insert(a.clone(), None).is_ok() {
                        reps.push(self.to_global(l0, a));
                    }
                }
                if b.rank() != z || before > z {
                    return Err(SsError::Algebra(F2Error::InvariantViolation(format!(
                        "page {r}: boundaries are not contained in the cycles"
                    ))));
                }
                page.insert(l0, PieceStats { z, reps });
            }
            out.push(page);
            if r == rmax + 1 {
                break;
            }
            // tails of length-r chains, landing in layer l0 + r − 1
            tails_into = pairs
                .iter()
                .map(|(&l0, ps)| (l0 + r as i32 - 1, ps.iter().map(|(_, t)| t.clone()).collect()))
                .collect();
            let mut next = BTreeMap::new();
            for (&l0, ps) in &pairs {
                let lt = l0 + r as i32 - 1;
                let (alen, ylen) = (self.size(l0), self.size(lt + 1));
                let mut rel: Echelon<BitVec> = Echelon::new(self.size(lt));
                let mut lifted = Vec::with_capacity(ps.len());
                for (k, (_, t)) in ps.iter().enumerate() {
                    let mut w = self.h(lt, t);
                    let mut p = BitVec::zeros(ylen);
                    img[&lt].reduce_full(&mut w, Some(&mut p));
                    lifted.push(p);
                    if let Err(Some(c)) = rel.insert(w, Some(BitVec::from_indices(ps.len(), &[k]))) {
                        let mut a = BitVec::zeros(alen);
                        let mut y = BitVec::zeros(ylen);
                        for i in c.ones() {
                            a.add_assign(&ps[i].0);
                            y.add_assign(&lifted[i]);
                        }
                        push_pair(&mut next, l0, a, y);
                    }
                }
                for kv in ker.get(&(lt + 1)).into_iter().flatten() {
                    push_pair(&mut next, l0, BitVec::zeros(alen), kv.clone());
                }
            }
            pairs = (bottom..=hi)
                .map(|l0| {
                    let cand = next.remove(&l0).unwrap_or_default();
                    (l0, independent(cand))
                })
                .collect();
        }
        Ok(out)
    }
}

fn push_pair(next: &mut BTreeMap<i32, Vec<(BitVec, BitVec)>>, l0: i32, a: BitVec, y: BitVec) {
    next.entry(l0).or_default().push((a, y));
}

/// A basis of the span of the pairs.
fn independent(pairs: Vec<(BitVec, BitVec)>) -> Vec<(BitVec, BitVec)> {
    let Some((a0, y0)) = pairs.first() else { return pairs };
    let mut e: Echelon<BitVec> = Echelon::new(a0.len() + y0.len());
    pairs.into_iter().filter(|(a, y)| e.insert(a.concat(y), None).is_ok()).collect()
}

/// All pages of the spectral sequence of (c, ∂, 1 + τ), up to `max_r` or
/// until stabilization, whichever comes first.
pub fn pages(c: &BigradedComplex, tau: &[u32], max_r: Option<usize>) -> Result<SpectralSequence, SsError> {
    let layout = Layout::new(c, tau)?;
    let bound = layout.bound();
    let rmax = max_r.map_or(bound, |m| m.clamp(1, bound));
    let h = c.homology(Backend::Auto);

    let per_block: Vec<(Vec<BTreeMap<i32, PieceStats>>, Vec<(Bigrading, usize)>)> = layout
        .blocks
        .par_iter()
        .map(|b| {
            let ctx = Ctx { c, tau, local: &layout.local, block: b };
            let stats = ctx.run(rmax)?;
            // exact d_1 ranks per bigrading
            let mut d1 = Vec::new();
            for (&g, reps) in h.reps.iter() {
                if g.a2 != b.lo && g.a2 != b.hi {
                    continue;
                }
                let l = layer_of(layout.mode, g);
                let mut e = ctx.image(l);
                let k = reps.iter().filter(|z| e.insert(ctx.h(l, &ctx.to_local(l, z)), None).is_ok()).count();
                d1.push((g, k));
            }
            Ok((stats, d1))
        })
        .collect::<Result<_, SsError>>()?;

    let mut pages = Vec::with_capacity(rmax);
    for r in 1..=rmax {
        let mut page = SSPage { r, ..Default::default() };
        if r == 1 {
            page.ranks = h.ranks.clone();
            page.reps = h.reps.clone();
            for (_, d1) in &per_block {
                page.d_out_rank.extend(d1.iter().filter(|(_, k)| *k > 0).copied());
            }
        } else {
            for (b, (stats, _)) in layout.blocks.iter().zip(&per_block) {
                for (&l0, s) in &stats[r - 1] {
                    let key = layout.key(b, l0);
                    let dout = s.z - stats[r][&l0].z;
                    if !s.reps.is_empty() {
                        page.ranks.insert(key, s.reps.len());
                        page.reps.insert(key, s.reps.clone());
                    }
                    if dout > 0 {
                        page.d_out_rank.insert(key, dout);
                    }
                }
            }
        }
        pages.push(page);
    }
    // page 1 from homology must agree with the zig-zag count
    let e1: usize = per_block.iter().flat_map(|(s, _)| s[0].values().map(|p| p.reps.len())).sum();
    if e1 != h.total_rank() {
        return Err(SsError::Algebra(F2Error::InvariantViolation(format!(
            "E_1 has rank {e1} but H(∂) has rank {}",
            h.total_rank()
        ))));
    }
    let non_stabilizing = rmax < bound && !pages.last().unwrap().d_is_zero();
    let inf = pages.last().unwrap().total();
    let collapse_page = pages.iter().position(|p| p.total() == inf).unwrap() + 1;
    Ok(SpectralSequence { pages, bound, non_stabilizing, collapse_page })
}

/// Total rank of E_∞ computed without filtering: ∂ + 1 + τ squares to zero
/// and its homology, dim C − 2 rank(∂ + 1 + τ), is the θ-periodic limit.
pub fn tate_rank(c: &BigradedComplex, tau: &[u32]) -> usize {
    let n = c.len();
    let cols = (0..n).map(|i| {
        let mut v: Vec<usize> = c.boundary_of(i).iter().map(|&j| j as usize).collect();
        if tau[i] as usize != i {
            v.extend([i, tau[i] as usize]);
        }
        SparseVec::from_indices(n, &v)
    });
    n - 2 * crate::f2::echelon::rank(n, cols)
}

/// The complex spanned by τ-fixed generators, with ∂ followed by projection
/// onto fixed generators. Its homology bounds the rank of E_∞ from above.
pub fn fixed_complex(c: &BigradedComplex, tau: &[u32]) -> BigradedComplex {
    let fixed: Vec<u32> = (0..c.len() as u32).filter(|&i| tau[i as usize] == i).collect();
    let mut pos = vec![u32::MAX; c.len()];
    for (k, &i) in fixed.iter().enumerate() {
        pos[i as usize] = k as u32;
    }
    let gens = fixed.iter().map(|&i| c.grading(i as usize)).collect();
    let cols = fixed
        .iter()
        .map(|&i| {
            c.boundary_of(i as usize)
                .iter()
                .filter(|&&j| pos[j as usize] != u32::MAX)
                .map(|&j| pos[j as usize])
                .collect()
        })
        .collect();
    BigradedComplex::new(gens, cols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum STauMethod {
    /// The spectral sequence of the full grid complex.
    Full,
    /// Read off the Alexander-grading-0 slice of the V-stripped homology.
    Reduced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct STauResult {
    pub value: i32,
    pub witness_grading: Bigrading,
    /// A surviving cycle, as generator indices (full method only).
    pub witness: Option<Vec<u32>>,
    pub page_of_collapse: Option<usize>,
    pub e_inf_total: Option<usize>,
    pub method: STauMethod,
}

fn knot_complex(g: &GridDiagram, limits: &Limits) -> Result<GridComplex, SsError> {
    if g.is_singular() || g.components() != 1 {
        return Err(SsError::WrongKind("s_τ needs a knot grid".into()));
    }
    Ok(GridComplex::build(g, limits)?)
}

/// s_τ from the full spectral sequence: the unique E_∞ survivor must sit in
/// symmetrized Alexander grading 0.
pub fn s_tau(g: &GridDiagram, limits: &Limits, max_r: Option<usize>) -> Result<STauResult, SsError> {
    let spec = detect_with(g, Behavior::SwapsOX)?;
    let gc = knot_complex(g, limits)?;
    let tau = tau_permutation(&gc, &spec);
    let ss = pages(&gc.complex, &tau, max_r)?;
    let inf = ss.e_infinity();
    let shift = g.n() as i32 - 1;
    match inf.reps.iter().next() {
        Some((&gr, reps)) if inf.total() == 1 && gr.a2 + shift == 0 => Ok(STauResult {
            value: gr.m + shift / 2,
            witness_grading: gr,
            witness: Some(reps[0].clone()),
            page_of_collapse: Some(ss.collapse_page),
            e_inf_total: Some(1),
            method: STauMethod::Full,
        }),
        _ => Err(SsError::UnexpectedSurvivorCount { found: inf.total() }),
    }
}

/// s_τ from the stripped knot homology HFK(K, 0). The value is defined when
/// that slice is supported in one Maslov grading; E_∞ is known to have rank
/// one when the slice does, and collapse at E_2 is reported for δ-thin knots.
pub fn s_tau_reduced(g: &GridDiagram, limits: &Limits) -> Result<STauResult, SsError> {
    detect_with(g, Behavior::SwapsOX)?;
    let gc = knot_complex(g, limits)?;
    let hfk = poincare(&gc.homology().ranks).strip_v(g.n() as u32 - 1)?;
    let slice: Vec<(i32, i64)> = hfk.terms().filter(|((_, a2), _)| *a2 == 0).map(|((m, _), c)| (m, c)).collect();
    let (m, rank) = match slice[..] {
        [] => return Err(SsError::UnexpectedSurvivorCount { found: 0 }),
        [(m, c)] => (m, c),
        _ => return Err(SsError::Undetermined("HFK(K, 0) spans several Maslov gradings".into())),
    };
    let thin = {
        let d: Vec<i32> = hfk.terms().map(|((m, a2), _)| 2 * m - a2).collect();
        d.windows(2).all(|w| w[0] == w[1])
    };
    Ok(STauResult {
        value: m,
        witness_grading: Bigrading::new(m, 0),
        witness: None,
        page_of_collapse: thin.then_some(2),
        e_inf_total: (rank == 1).then_some(1),
        method: STauMethod::Reduced,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm2Row {
    /// Doubled Alexander grading in the singular knot, 2a + (2 − λ)/2.
    pub a2: i32,
    /// Doubled Alexander grading in the quotient knot, a + (1 − λ)/2.
    pub quotient_a2: i32,
    pub survivors: usize,
    pub expected: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm2Report {
    pub lambda: i32,
    pub collapse_page: usize,
    pub e_infinity: LaurentPoly2,
    /// E_∞ after removing the (1 + u⁻²t⁻²) factors of swapped basepoint pairs.
    pub stripped: LaurentPoly2,
    pub quotient_hfk: LaurentPoly2,
    pub rows: Vec<Thm2Row>,
    /// Survivors in Alexander gradings not of the form 2a + (2 − λ)/2.
    pub off_lattice: Vec<(i32, usize)>,
    pub passed: bool,
}

/// Compare E_∞ of a symmetric singular grid with the knot Floer homology of
/// the quotient knot.
pub fn theorem2_report(
    g_s: &GridDiagram,
    g_quot: &GridDiagram,
    lambda: i32,
    limits: &Limits,
    max_r: Option<usize>,
) -> Result<Thm2Report, SsError> {
    if !g_s.is_singular() {
        return Err(SsError::WrongKind("the first grid must be singular".into()));
    }
    if g_quot.is_singular() || g_quot.components() != 1 {
        return Err(SsError::WrongKind("the quotient grid must be a knot grid".into()));
    }
    let spec = detect_with(g_s, Behavior::PreservesOX)?;
    let gc = GridComplex::build(g_s, limits)?;
    let tau = tau_permutation(&gc, &spec);
    let ss = pages(&gc.complex, &tau, max_r)?;
    let e_inf = poincare(&ss.e_infinity().ranks);
    let stripped = e_inf.strip_w((g_s.n() as u32 - 1) / 2)?;
    let qc = GridComplex::build(g_quot, limits)?;
    let quotient_hfk = poincare(&qc.homology().ranks).strip_v(g_quot.n() as u32 - 1)?;

    let mut surv: BTreeMap<i32, usize> = BTreeMap::new();
    for ((_, a2), c) in stripped.terms() {
        *surv.entry(a2).or_default() += c as usize;
    }
    let mut expect: BTreeMap<i32, usize> = BTreeMap::new();
    for ((_, q2), c) in quotient_hfk.terms() {
        *expect.entry(q2).or_default() += c as usize;
    }
    // A = 2a + (2 − λ)/2 and A_K = a + (1 − λ)/2, doubled: a2 = 2 q2 + λ
    let to_singular = |q2: i32| 2 * q2 + lambda;
    let mut off_lattice = Vec::new();
    let mut rows: BTreeMap<i32, Thm2Row> = BTreeMap::new();
    for (&a2, &s) in &surv {
        if (a2 - lambda).rem_euclid(4) != 0 {
            off_lattice.push((a2, s));
            continue;
        }
        let q2 = (a2 - lambda) / 2;
        rows.insert(a2, Thm2Row { a2, quotient_a2: q2, survivors: s, expected: 0, ok: false });
    }
    for (&q2, &e) in &expect {
        let a2 = to_singular(q2);
        rows.entry(a2).or_insert(Thm2Row { a2, quotient_a2: q2, survivors: 0, expected: 0, ok: false }).expected = e;
    }
    let mut rows: Vec<Thm2Row> = rows.into_values().collect();
    for r in &mut rows {
        r.ok = r.survivors == r.expected;
    }
    let passed = off_lattice.is_empty() && rows.iter().all(|r| r.ok);
    Ok(Thm2Report {
        lambda,
        collapse_page: ss.collapse_page,
        e_infinity: e_inf,
        stripped,
        quotient_hfk,
        rows,
        off_lattice,
        passed,
    })
}

//! Bigraded chain complexes over F₂ and their homology.

use super::column::{BitVec, F2Column, SparseVec};
use super::echelon::Echelon;
use super::grading::Bigrading;
use super::F2Error;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Generators with bigradings and a sparse boundary, one column per generator.
#[derive(Clone, Debug)]
pub struct BigradedComplex {
    gens: Vec<Bigrading>,
    boundary: Vec<Vec<u32>>,
    blocks: BTreeMap<Bigrading, Vec<u32>>,
    local: Vec<u32>,
}

/// Elimination backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Backend {
    Dense,
    Sparse,
    /// Dense up to `DENSE_LIMIT` generators, sparse above.
    #[default]
    Auto,
}

/// 8! generators: the largest complexes reduced with packed rows.
pub const DENSE_LIMIT: usize = 40_320;

impl Backend {
    fn dense_for(self, size: usize) -> bool {
        match self {
            Backend::Dense => true,
            Backend::Sparse => false,
            Backend::Auto => size <= DENSE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Homology {
    pub ranks: BTreeMap<Bigrading, usize>,
    /// Cycle representatives per bigrading, as sorted generator index lists.
    pub reps: BTreeMap<Bigrading, Vec<Vec<u32>>>,
}

impl Homology {
    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }
}

impl BigradedComplex {
    /// Build a complex. Boundary columns are normalized (sorted, F₂-cancelled).
    pub fn new(gens: Vec<Bigrading>, boundary: Vec<Vec<u32>>) -> Self {
        assert_eq!(gens.len(), boundary.len(), "one boundary column per generator");
        let boundary = boundary
            .into_iter()
            .map(|col| {
                let idx: Vec<usize> = col.iter().map(|&i| i as usize).collect();
                SparseVec::from_indices(gens.len(), &idx).indices().to_vec()
            })
            .collect();
        let mut blocks: BTreeMap<Bigrading, Vec<u32>> = BTreeMap::new();
        let mut local = vec![0; gens.len()];
        for (i, g) in gens.iter().enumerate() {
            let b = blocks.entry(*g).or_default();
            local[i] = b.len() as u32;
            b.push(i as u32);
        }
        BigradedComplex { gens, boundary, blocks, local }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Bigrading] {
        &self.gens
    }

    pub fn grading(&self, i: usize) -> Bigrading {
        self.gens[i]
    }

    pub fn boundary_of(&self, i: usize) -> &[u32] {
        &self.boundary[i]
    }

    pub fn blocks(&self) -> &BTreeMap<Bigrading, Vec<u32>> {
        &self.blocks
    }

    /// Position of a generator inside its bigrading block.
    pub fn local_index(&self, i: usize) -> usize {
        self.local[i] as usize
    }

    /// Apply ∂ to a chain given as generator indices.
    pub fn apply(&self, chain: &[u32]) -> Vec<u32> {
        let mut acc: Vec<usize> = Vec::new();
        for &i in chain {
            acc.extend(self.boundary[i as usize].iter().map(|&j| j as usize));
        }
        SparseVec::from_indices(self.len(), &acc).indices().to_vec()
    }

    /// Verify ∂ has bidegree (−1, 0) and ∂² = 0.
    pub fn check(&self) -> Result<(), F2Error> {
        self.boundary.par_iter().enumerate().try_for_each(|(i, col)| {
            for &j in col {
                let (s, t) = (self.gens[i], self.gens[j as usize]);
                if t != s.shift(-1, 0) {
                    return Err(F2Error::InvariantViolation(format!(
                        "boundary of generator {i} at {s} hits generator {j} at {t}"
                    )));
                }
            }
            let dd = self.apply(col);
            if !dd.is_empty() {
                return Err(F2Error::InvariantViolation(format!(
                    "∂² of generator {i} is nonzero ({} terms)",
                    dd.len()
                )));
            }
            Ok(())
        })
    }

    /// Homology ranks and representatives per bigrading.
    pub fn homology(&self, backend: Backend) -> Homology {
        if backend.dense_for(self.len()) {
            self.homology_with::<BitVec>()
        } else {
            self.homology_with::<SparseVec>()
        }
    }

    fn homology_with<C: F2Column>(&self) -> Homology {
        let red = Reduction::<C>::new(self);
        let per: Vec<(Bigrading, usize, Vec<Vec<u32>>)> = self
            .blocks
            .par_iter()
            .map(|(&g, members)| {
                let incoming = red.image_into(g);
                let mut im = incoming.cloned().unwrap_or_else(|| Echelon::new(members.len()));
                let mut reps = Vec::new();
                for z in red.cycles(g) {
                    let ones = z.ones();
                    if im.insert(z, None).is_ok() {
                        reps.push(ones.into_iter().map(|k| members[k]).collect());
                    }
                }
                (g, reps.len(), reps)
            })
            .collect();
        let mut h = Homology::default();
        for (g, r, reps) in per {
            if r > 0 {
                h.ranks.insert(g, r);
                h.reps.insert(g, reps);
            }
        }
        h
    }

    /// Image of ∂ inside the block at `g`, in block-local coordinates.
    pub fn image_in(&self, g: Bigrading) -> Echelon<SparseVec> {
        let len = self.blocks.get(&g).map_or(0, |b| b.len());
        let mut e = Echelon::new(len);
        if let Some(src) = self.blocks.get(&g.shift(1, 0)) {
            for &i in src {
                let col: Vec<usize> = self.boundary[i as usize].iter().map(|&j| self.local_index(j as usize)).collect();
                let _ = e.insert(SparseVec::from_indices(len, &col), None);
            }
        }
        e
    }

    /// Dimension of the span of chains in block `g`, modulo boundaries.
    pub fn rank_mod_boundaries(&self, g: Bigrading, chains: &[Vec<u32>]) -> usize {
        let mut e = self.image_in(g);
        let base = e.rank();
        for c in chains {
            debug_assert!(c.iter().all(|&i| self.gens[i as usize] == g));
            let local: Vec<usize> = c.iter().map(|&i| self.local_index(i as usize)).collect();
            let _ = e.insert(SparseVec::from_indices(e.ambient(), &local), None);
        }
        e.rank() - base
    }

    /// Find `y` with ∂y = `b`; `b` must be homogeneous.
    pub fn solve(&self, b: &[u32]) -> Result<Vec<u32>, F2Error> {
        if b.is_empty() {
            return Ok(Vec::new());
        }
        let g = self.gens[b[0] as usize];
        if b.iter().any(|&i| self.gens[i as usize] != g) {
            return Err(F2Error::InvariantViolation("solve target is not homogeneous".into()));
        }
        let src = g.shift(1, 0);
        let Some(members) = self.blocks.get(&src) else {
            return Err(F2Error::NoSolution);
        };
        let target_len = self.blocks[&g].len();
        let mut e: Echelon<SparseVec> = Echelon::new(target_len);
        for (k, &i) in members.iter().enumerate() {
            let col: Vec<usize> = self.boundary[i as usize].iter().map(|&j| self.local_index(j as usize)).collect();
            let _ =
                e.insert(SparseVec::from_indices(target_len, &col), Some(SparseVec::from_indices(members.len(), &[k])));
        }
        let local: Vec<usize> = b.iter().map(|&i| self.local_index(i as usize)).collect();
        let v = SparseVec::from_indices(target_len, &local);
        let y = e.preimage(&v, members.len()).ok_or(F2Error::NoSolution)?;
        Ok(y.indices().iter().map(|&k| members[k as usize]).collect())
    }
}

/// Per-bigrading reduced boundary: for each grading g the echelon form of
/// ∂(C_g) inside C_{g−(1,0)}, tagged by source combinations.
struct Reduction<C: F2Column> {
    out: BTreeMap<Bigrading, (Echelon<C>, Vec<C>)>,
}

impl<C: F2Column> Reduction<C> {
    fn new(c: &BigradedComplex) -> Self {
        let out = c
            .blocks
            .par_iter()
            .map(|(&g, members)| {
                let tgt = g.shift(-1, 0);
                let tlen = c.blocks.get(&tgt).map_or(0, |v| v.len());
                let mut e = Echelon::new(tlen);
                let mut cycles = Vec::new();
                for (k, &i) in members.iter().enumerate() {
                    let col: Vec<usize> = c.boundary[i as usize].iter().map(|&j| c.local_index(j as usize)).collect();
                    let tag = C::from_indices(members.len(), &[k]);
                    if let Err(Some(z)) = e.insert(C::from_indices(tlen, &col), Some(tag)) {
                        cycles.push(z);
                    }
                }
                (g, (e, cycles))
            })
            .collect();
        Reduction { out }
    }

    fn image_into(&self, g: Bigrading) -> Option<&Echelon<C>> {
        self.out.get(&g.shift(1, 0)).map(|(e, _)| e)
    }

    fn cycles(&self, g: Bigrading) -> Vec<C> {
        self.out.get(&g).map(|(_, z)| z.clone()).unwrap_or_default()
    }
}

//! Singularization, resolutions and the singular skein exact triangle.
//!
//! A symmetric knot grid of odd size m becomes a singular grid by placing a
//! double point at the central cell. Its two resolutions are grids of size
//! m + 1 sharing the O markings and a central lattice point c. States
//! through c span the complexes I, the others span N.

use crate::f2::{poincare, BigradedComplex, Bigrading, F2Column, Homology, LaurentPoly, LaurentPoly2, SparseVec};
use crate::grid::grading::insert_center;
use crate::grid::{Cell, GridComplex, GridDiagram, GridError, Limits};
use crate::symmetry::{detect_with, Behavior, SymmetryError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("central pattern mismatch: {0}")]
    CentralPatternMismatch(String),
    #[error("expected a singular grid of odd size with its double point at the central cell")]
    NotCentralSingular,
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Grid(#[from] GridError),
}

fn mismatch(msg: &str) -> SkeinError {
    SkeinError::CentralPatternMismatch(msg.to_string())
}

/// Replace the central crossing of a symmetric knot grid by a double point.
///
/// Column k must carry X above the centre and O below, row k X to the left
/// and O to the right. The markings along the arc from the left X of row k
/// to the upper X of column k swap type, which makes the rotation preserve
/// markings instead of exchanging them.
pub fn singularize(g: &GridDiagram) -> Result<GridDiagram, SkeinError> {
    if g.is_singular() || g.components() != 1 {
        return Err(mismatch("input must be a knot grid"));
    }
    detect_with(g, Behavior::SwapsOX)?;
    let n = g.n();
    if n % 2 == 0 {
        return Err(mismatch("grid size must be odd"));
    }
    let k = (n + 1) / 2;
    let xc = g.x_in_col(k).expect("every column has an X");
    let oc = g.o_in_col(k)[0];
    let xr = g.x_in_row(k).expect("every row has an X");
    let or = g.o_in_row(k)[0];
    if !(xc.1 > k && oc.1 < k && xr.0 < k && or.0 > k) {
        return Err(mismatch("central column needs X above and O below, central row X left and O right"));
    }
    let mut visited = vec![xr];
    let mut cur = xr;
    loop {
        let o = g.o_in_col(cur.0)[0];
        let x = g.x_in_row(o.1).expect("every row has an X");
        visited.push(o);
        visited.push(x);
        if x == xc {
            break;
        }
        if x == xr || visited.len() > 2 * n {
            return Err(mismatch("trace from the central row never reaches the central column"));
        }
        cur = x;
    }
    let mut o: Vec<Cell> = g.o().iter().filter(|c| !visited.contains(c)).copied().collect();
    let mut x: Vec<Cell> = g.x().iter().filter(|c| !visited.contains(c)).copied().collect();
    o.extend(g.x().iter().filter(|c| visited.contains(c)));
    x.extend(g.o().iter().filter(|c| visited.contains(c)));
    o.sort_unstable();
    x.sort_unstable();
    let s = GridDiagram::new(n, o, x, Some((k, k)))?;
    detect_with(&s, Behavior::PreservesOX)?;
    Ok(s)
}

/// `(𝔾₀, 𝔾₋)` for a singular grid with a central double point.
pub fn resolve(g: &GridDiagram) -> Result<(GridDiagram, GridDiagram), SkeinError> {
    let n = g.n();
    let k = (n + 1) / 2;
    if n % 2 == 0 || g.xx() != Some((k, k)) {
        return Err(SkeinError::NotCentralSingular);
    }
    let lift = |i: usize| if i < k { i } else { i + 1 };
    let mut o: Vec<Cell> = g
        .o()
        .iter()
        .map(|&(i, j)| {
            if i == k {
                (if j < k { k + 1 } else { k }, lift(j))
            } else if j == k {
                (lift(i), if i < k { k } else { k + 1 })
            } else {
                (lift(i), lift(j))
            }
        })
        .collect();
    o.sort_unstable();
    let x: Vec<Cell> = g.x().iter().map(|&(i, j)| (lift(i), lift(j))).collect();
    let with = |extra: [Cell; 2]| {
        let mut v = x.clone();
        v.extend(extra);
        v.sort_unstable();
        v
    };
    let g0 = GridDiagram::new(n + 1, o.clone(), with([(k, k + 1), (k + 1, k)]), None)?;
    let gm = GridDiagram::new(n + 1, o, with([(k, k), (k + 1, k + 1)]), None)?;
    Ok((g0, gm))
}

/// The singular grid together with both resolutions.
#[derive(Clone, Debug)]
pub struct SkeinTriple {
    pub g_s: GridDiagram,
    pub g_0: GridDiagram,
    pub g_minus: GridDiagram,
    /// Index of the central lattice lines in the resolutions; c = (center, center).
    pub center: usize,
}

impl SkeinTriple {
    pub fn from_singular(g_s: &GridDiagram) -> Result<Self, SkeinError> {
        let (g_0, g_minus) = resolve(g_s)?;
        Ok(SkeinTriple { g_s: g_s.clone(), g_0, g_minus, center: g_s.n().div_ceil(2) })
    }

    pub fn from_knot(g: &GridDiagram) -> Result<Self, SkeinError> {
        Self::from_singular(&singularize(g)?)
    }
}

/// An F₂-linear map between complexes, one column of target indices per
/// source generator, homogeneous of bidegree `(dm, da2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub cols: Vec<Vec<u32>>,
    pub degree: (i32, i32),
}

fn normalize(idx: Vec<u32>) -> Vec<u32> {
    let v: Vec<usize> = idx.into_iter().map(|i| i as usize).collect();
    let len = v.iter().max().map_or(0, |m| m + 1);
    SparseVec::from_indices(len, &v).indices().to_vec()
}

impl ChainMap {
    pub fn identity(len: usize) -> Self {
        ChainMap { cols: (0..len as u32).map(|i| vec![i]).collect(), degree: (0, 0) }
    }

    pub fn apply(&self, chain: &[u32]) -> Vec<u32> {
        normalize(chain.iter().flat_map(|&i| self.cols[i as usize].iter().copied()).collect())
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ChainMap) -> ChainMap {
        ChainMap {
            cols: self.cols.iter().map(|c| next.apply(c)).collect(),
            degree: (self.degree.0 + next.degree.0, self.degree.1 + next.degree.1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Homogeneity of the stated bidegree and f∂ = ∂f.
    pub fn check(&self, src: &BigradedComplex, tgt: &BigradedComplex) -> Result<(), SkeinError> {
        if self.cols.len() != src.len() {
            return Err(SkeinError::NotChainMap(format!("{} columns for {} generators", self.cols.len(), src.len())));
        }
        for (i, col) in self.cols.iter().enumerate() {
            let want = src.grading(i).shift(self.degree.0, self.degree.1);
            if let Some(&j) = col.iter().find(|&&j| tgt.grading(j as usize) != want) {
                return Err(SkeinError::NotChainMap(format!(
                    "generator {i} at {} maps to {} outside bidegree {:?}",
                    src.grading(i),
                    tgt.grading(j as usize),
                    self.degree
                )));
            }
            if self.apply(src.boundary_of(i)) != tgt.apply(col) {
                return Err(SkeinError::NotChainMap(format!("f∂ ≠ ∂f on generator {i}")));
            }
        }
        Ok(())
    }
}

/// Mapping cone of f: A → B, generated by A ⊕ B with differential
/// (a, b) ↦ (∂a, f(a) + ∂b). Generators of A are shifted so that the
/// differential lowers Maslov grading by one.
pub fn cone(src: &BigradedComplex, tgt: &BigradedComplex, f: &ChainMap) -> Result<BigradedComplex, SkeinError> {
    f.check(src, tgt)?;
    let ns = src.len() as u32;
    let mut gens: Vec<Bigrading> = src.gens().iter().map(|g| g.shift(f.degree.0 + 1, f.degree.1)).collect();
    gens.extend_from_slice(tgt.gens());
    let mut cols: Vec<Vec<u32>> = (0..src.len())
        .map(|i| src.boundary_of(i).iter().copied().chain(f.cols[i].iter().map(|&j| j + ns)).collect())
        .collect();
    cols.extend((0..tgt.len()).map(|i| tgt.boundary_of(i).iter().map(|&j| j + ns).collect()));
    Ok(BigradedComplex::new(gens, cols))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitKind {
    /// 0-resolution: N is a subcomplex, I a quotient complex.
    Zero,
    /// Negative resolution: I is a subcomplex, N a quotient complex.
    Minus,
}

/// A resolution complex split along the central point.
#[derive(Clone, Debug)]
pub struct CenterSplit {
    pub kind: SplitKind,
    /// Global generator indices of the states through c.
    pub i_index: Vec<u32>,
    pub n_index: Vec<u32>,
    pub i: BigradedComplex,
    pub n: BigradedComplex,
    /// I → N for `Zero`, N → I for `Minus`, in local indices.
    pub connecting: ChainMap,
    /// Boundary terms running against the filtration; zero for a genuine split.
    pub leaks: usize,
}

pub fn center_split(gc: &GridComplex, center: usize, kind: SplitKind) -> CenterSplit {
    let total = gc.states.len();
    let mut local = vec![u32::MAX; total];
    let mut part = vec![false; total];
    let (mut i_index, mut n_index) = (Vec::new(), Vec::new());
    for (g, s) in gc.states.iter().enumerate() {
        if s.get(center) == center {
            part[g] = true;
            local[g] = i_index.len() as u32;
            i_index.push(g as u32);
        } else {
            local[g] = n_index.len() as u32;
            n_index.push(g as u32);
        }
    }
    let mut leaks = 0;
    let sub = |index: &[u32], inside: bool| {
        let gens = index.iter().map(|&g| gc.complex.grading(g as usize)).collect();
        let mut own = Vec::new();
        let mut across = Vec::new();
        for &g in index {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for &t in gc.complex.boundary_of(g as usize) {
                if part[t as usize] == inside {
                    a.push(local[t as usize]);
                } else {
                    b.push(local[t as usize]);
                }
            }
            own.push(a);
            across.push(b);
        }
        (BigradedComplex::new(gens, own), across)
    };
    let (i, i_across) = sub(&i_index, true);
    let (n, n_across) = sub(&n_index, false);
    let (connecting, wrong) = match kind {
        SplitKind::Zero => (i_across, n_across),
        SplitKind::Minus => (n_across, i_across),
    };
    leaks += wrong.iter().map(|c| c.len()).sum::<usize>();
    let connecting = ChainMap { cols: connecting.into_iter().map(normalize).collect(), degree: (-1, 0) };
    CenterSplit { kind, i_index, n_index, i, n, connecting, leaks }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub offending: Vec<Bigrading>,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into(), offending: Vec::new() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TriangleReport {
    pub checks: Vec<Check>,
    pub delta_s: Option<LaurentPoly>,
    pub delta_0: Option<LaurentPoly>,
    pub delta_minus: Option<LaurentPoly>,
    pub poincare_s: LaurentPoly2,
    pub poincare_0: LaurentPoly2,
    pub poincare_minus: LaurentPoly2,
    pub linking_minus: Option<i32>,
}

impl TriangleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Exactness at the middle vertex of A --α--> B --β--> C on homology, per
/// bigrading of B: rank α_* + rank β_* = dim H(B) and β_*α_* = 0.
fn exact_at(
    a: (&BigradedComplex, &Homology),
    alpha: &ChainMap,
    b: (&BigradedComplex, &Homology),
    beta: &ChainMap,
    c: &BigradedComplex,
) -> Vec<Bigrading> {
    let mut bad = Vec::new();
    for (&gb, reps) in &b.1.reps {
        let ga = gb.shift(-alpha.degree.0, -alpha.degree.1);
        let gc = gb.shift(beta.degree.0, beta.degree.1);
        let incoming: Vec<Vec<u32>> =
            a.1.reps.get(&ga).map_or(Vec::new(), |z| z.iter().map(|z| alpha.apply(z)).collect());
        let rank_in = b.0.rank_mod_boundaries(gb, &incoming);
        let outgoing: Vec<Vec<u32>> = reps.iter().map(|w| beta.apply(w)).collect();
        let rank_out = c.rank_mod_boundaries(gc, &outgoing);
        let composite: Vec<Vec<u32>> = incoming.iter().map(|v| beta.apply(v)).collect();
        if rank_in + rank_out != reps.len() || c.rank_mod_boundaries(gc, &composite) != 0 {
            bad.push(gb);
        }
    }
    // classes of A mapping to zero-homology gradings of B still need βα = 0,
    // which holds trivially there
    bad
}

fn shifted(ranks: &BTreeMap<Bigrading, usize>, dm: i32, da2: i32) -> BTreeMap<Bigrading, usize> {
    ranks.iter().map(|(g, &r)| (g.shift(dm, da2), r)).collect()
}

/// Run every check of the negative skein triangle on a triple.
pub fn verify_triangle(t: &SkeinTriple, limits: &Limits) -> Result<TriangleReport, SkeinError> {
    let gs = GridComplex::build(&t.g_s, limits)?;
    let g0 = GridComplex::build(&t.g_0, limits)?;
    let gm = GridComplex::build(&t.g_minus, limits)?;
    let (hs, h0, hm) = (gs.homology(), g0.homology(), gm.homology());
    let mut checks = Vec::new();
    let mut report = TriangleReport {
        checks: Vec::new(),
        delta_s: gs.alexander_polynomial().ok(),
        delta_0: g0.alexander_polynomial().ok(),
        delta_minus: gm.alexander_polynomial().ok(),
        poincare_s: poincare(&hs.ranks),
        poincare_0: poincare(&h0.ranks),
        poincare_minus: poincare(&hm.ranks),
        linking_minus: t.g_minus.linking_number().ok(),
    };

    let o_same = t.g_0.o() == t.g_minus.o();
    checks.push(Check::new("same_o", o_same, if o_same { "resolutions share O" } else { "O sets differ" }));

    let z = center_split(&g0, t.center, SplitKind::Zero);
    let m = center_split(&gm, t.center, SplitKind::Minus);
    checks.push(Check::new(
        "filtration",
        z.leaks == 0 && m.leaks == 0,
        format!("{} terms N₀ → I₀, {} terms I₋ → N₋", z.leaks, m.leaks),
    ));

    // F: GC(𝔾_S) → I₀, x ↦ x ∪ c, with A_S(x) = A_{𝔾₀}(F x) + ½
    let mut iso = z.i.len() == gs.states.len();
    if iso {
        let pos: BTreeMap<u32, u32> = z.i_index.iter().enumerate().map(|(l, &g)| (g, l as u32)).collect();
        let f: Vec<u32> = gs
            .states
            .iter()
            .map(|s| pos.get(&(insert_center(s, t.center).rank() as u32)).copied().unwrap_or(u32::MAX))
            .collect();
        iso = f.iter().all(|&v| v != u32::MAX);
        if iso {
            let fmap = ChainMap { cols: f.iter().map(|&v| vec![v]).collect(), degree: (0, -1) };
            iso = fmap.check(&gs.complex, &z.i).is_ok();
        }
    }
    checks.push(Check::new("center_iso", iso, "x ↦ x ∪ c is a chain isomorphism GC(𝔾_S) → I₀ of bidegree (0, −½)"));

    let hi0 = z.i.homology(Default::default());
    let chi_s = poincare(&shifted(&hi0.ranks, 0, 1)).euler();
    let ok = chi_s == report.poincare_s.euler();
    checks.push(Check::new("euler_singular", ok, format!("χ(H(I₀)[[0,−½]]) = {chi_s}")));

    let psi = ChainMap::identity(z.n.len());
    let psi_ok = z.n.len() == m.n.len() && psi.check(&z.n, &m.n).is_ok();
    checks.push(Check::new("psi", psi_ok, "ψ: N₀ → N₋ is a chain isomorphism of bidegree (0, 0)"));

    let conn_z = z.connecting.check(&z.i, &z.n);
    let conn_m = m.connecting.check(&m.n, &m.i);
    checks.push(Check::new(
        "connecting_bidegree",
        conn_z.is_ok() && conn_m.is_ok(),
        match (&conn_z, &conn_m) {
            (Ok(()), Ok(())) => "both connecting maps are chain maps of bidegree (−1, 0)".to_string(),
            (Err(e), _) | (_, Err(e)) => e.to_string(),
        },
    ));

    let him = m.i.homology(Default::default());
    let i_shift = him.ranks == shifted(&hi0.ranks, 0, 2);
    checks.push(Check::new("i_shift", i_shift, "H(I₋)_(d,s) ≅ H(I₀)_(d,s−1)"));

    if !(psi_ok && conn_z.is_ok() && conn_m.is_ok()) {
        report.checks = checks;
        return Ok(report);
    }

    // f = ∂_{N₋}^{I₋}, g = ψ ∘ ∂_{I₀}^{N₀}
    let f = &m.connecting;
    let g = z.connecting.then(&psi);
    let fg = g.then(f);
    checks.push(Check::new("fg_zero", fg.is_zero(), "∂_{N₋}^{I₋} ∘ ψ ∘ ∂_{I₀}^{N₀} = 0 on chains"));
    let cf = cone(&m.n, &m.i, f)?;
    let cg = cone(&z.i, &m.n, &g)?;
    let cfg = cone(&z.i, &m.i, &fg)?;
    let (hf, hg, hfg) =
        (cf.homology(Default::default()), cg.homology(Default::default()), cfg.homology(Default::default()));
    checks.push(Check::new("cone_minus", hf.ranks == hm.ranks, "H(Cone(∂_{N₋}^{I₋})) ≅ GH(𝔾₋)"));
    checks.push(Check::new("cone_zero", hg.ranks == h0.ranks, "H(Cone(ψ∂_{I₀}^{N₀})) ≅ GH(𝔾₀)"));
    let third = &poincare(&hi0.ranks) * &LaurentPoly2::v_factor();
    let third = third.shift(0, 2);
    checks.push(Check::new("cone_composite", poincare(&hfg.ranks) == third, "H(Cone(fg)) ≅ (H(I₀) ⊗ V)[[0,−1]]"));

    let (ni, nn) = (z.i.len() as u32, m.n.len() as u32);
    // Cone(f) = N₋ ⊕ I₋, Cone(g) = I₀ ⊕ N₋, Cone(fg) = I₀ ⊕ I₋
    let alpha = ChainMap {
        cols: (0..nn).map(|a| vec![ni + a]).chain((0..m.i.len()).map(|_| Vec::new())).collect(),
        degree: (0, 0),
    };
    let beta = ChainMap {
        cols: (0..ni).map(|a| vec![a]).chain(f.cols.iter().map(|c| c.iter().map(|&b| ni + b).collect())).collect(),
        degree: (-1, 0),
    };
    let gamma = ChainMap {
        cols: g.cols.iter().cloned().chain((0..m.i.len() as u32).map(|b| vec![nn + b])).collect(),
        degree: (0, 0),
    };
    let maps_ok = [alpha.check(&cf, &cg), beta.check(&cg, &cfg), gamma.check(&cfg, &cf)];
    let maps_ok: Vec<String> = maps_ok.into_iter().filter_map(|r| r.err().map(|e| e.to_string())).collect();
    let detail =
        if maps_ok.is_empty() { "the three triangle maps are chain maps".to_string() } else { maps_ok.join("; ") };
    checks.push(Check::new("triangle_maps", maps_ok.is_empty(), detail));
    if maps_ok.is_empty() {
        let vertices = [
            ("exact_zero", exact_at((&cf, &hf), &alpha, (&cg, &hg), &beta, &cfg)),
            ("exact_third", exact_at((&cg, &hg), &beta, (&cfg, &hfg), &gamma, &cf)),
            ("exact_minus", exact_at((&cfg, &hfg), &gamma, (&cf, &hf), &alpha, &cg)),
        ];
        for (name, bad) in vertices {
            let mut c = Check::new(name, bad.is_empty(), format!("{} bigradings fail", bad.len()));
            c.offending = bad;
            checks.push(c);
        }
    }

    let chi_m = report.poincare_minus.euler();
    let chi_0 = report.poincare_0.euler();
    let chi_3 = third.euler();
    let ok = chi_m == &chi_0 + &chi_3;
    checks.push(Check::new(
        "euler_triangle",
        ok,
        format!("χ(GH(𝔾₋)) = {chi_m}, χ(GH(𝔾₀)) = {chi_0}, χ(third) = {chi_3}"),
    ));

    let skein = match (&report.delta_s, &report.delta_0, &report.delta_minus) {
        (Some(s), Some(z0), Some(mi)) => {
            let rhs = s + &(&LaurentPoly::monomial(-1, 1) * z0);
            Check::new("skein_relation", *mi == rhs, format!("Δ₋ = {mi}, Δ_S + t^(-1/2)Δ₀ = {rhs}"))
        }
        _ => Check::new("skein_relation", false, "an Alexander polynomial failed to divide"),
    };
    checks.push(skein);
    report.checks = checks;
    Ok(report)
}

//! Versioned structured reports. Human tables are rendered from these
//! structs, never the other way round.

use crate::f2::grading::half;
use crate::f2::{Bigrading, LaurentPoly, LaurentPoly2};
use crate::skein::TriangleReport;
use crate::ss::{STauResult, Thm2Report};
use crate::symmetry::{Behavior, EquivarianceReport, InvolutionSpec};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

pub const SCHEMA_VERSION: u32 = 1;

/// One nonzero entry of a bigraded rank table. `a2` is twice the
/// Alexander grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RankEntry {
    pub m: i32,
    pub a2: i32,
    pub rank: usize,
}

pub fn entries(ranks: &BTreeMap<Bigrading, usize>) -> Vec<RankEntry> {
    ranks.iter().filter(|(_, &r)| r > 0).map(|(g, &rank)| RankEntry { m: g.m, a2: g.a2, rank }).collect()
}

/// Entries of a polynomial with non-negative coefficients.
pub fn poly_entries(p: &LaurentPoly2) -> Vec<RankEntry> {
    p.terms().filter(|(_, c)| *c > 0).map(|((m, a2), c)| RankEntry { m, a2, rank: c as usize }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub n: usize,
    pub components: usize,
    pub singular: bool,
    pub total: usize,
    pub ranks: Vec<RankEntry>,
    pub poincare: LaurentPoly2,
    /// Number of (1 + u⁻¹t⁻¹) factors removed for the stripped table.
    pub strip_power: u32,
    pub stripped: Option<Vec<RankEntry>>,
    pub stripped_poincare: Option<LaurentPoly2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderReport {
    pub n: usize,
    pub components: usize,
    pub singular: bool,
    pub polynomial: LaurentPoly,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub detected: Vec<InvolutionSpec>,
    pub declared: Option<Behavior>,
    pub chosen: InvolutionSpec,
    pub equivariance: EquivarianceReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageReport {
    pub r: usize,
    pub total: usize,
    pub ranks: Vec<RankEntry>,
    /// Rank of d_r leaving each entry's bigrading.
    pub d_out: Vec<RankEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub involution: InvolutionSpec,
    pub bound: usize,
    pub collapse_page: usize,
    pub non_stabilizing: bool,
    /// dim C − 2 rank(∂ + 1 + τ), the expected E_∞ total.
    pub tate_rank: usize,
    pub pages: Vec<PageReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SkeinReport {
    pub center: usize,
    pub g_s: String,
    pub g_0: String,
    pub g_minus: String,
    pub triangle: TriangleReport,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "command", content = "result", rename_all = "lowercase")]
pub enum Body {
    Homology(HomologyReport),
    Alexpoly(AlexanderReport),
    Symmetry(SymmetryReport),
    Sstau(STauResult),
    Spectral(SpectralReport),
    Skein(SkeinReport),
    Thm2(Thm2Report),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub grid: String,
    #[serde(flatten)]
    pub body: Body,
}

impl Report {
    pub fn new(grid: impl Into<String>, body: Body) -> Self {
        Report { schema_version: SCHEMA_VERSION, grid: grid.into(), body }
    }

    /// False when the report records a failed verification.
    pub fn ok(&self) -> bool {
        match &self.body {
            Body::Symmetry(s) => s.equivariance.passed(),
            Body::Spectral(s) => !s.non_stabilizing,
            Body::Skein(s) => s.triangle.passed(),
            Body::Thm2(t) => t.passed,
            _ => true,
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "grid: {}", self.grid);
        match &self.body {
            Body::Homology(h) => human_homology(&mut s, h),
            Body::Alexpoly(a) => {
                let kind = if a.singular {
                    "singular knot"
                } else if a.components == 1 {
                    "knot"
                } else {
                    "link"
                };
                let _ = writeln!(s, "{kind}, n = {}", a.n);
                let _ = writeln!(s, "Alexander polynomial: {}", a.polynomial);
            }
            Body::Symmetry(r) => human_symmetry(&mut s, r),
            Body::Sstau(t) => {
                let _ = writeln!(s, "s_tau = {}", t.value);
                let _ = writeln!(s, "method: {:?}", t.method);
                let _ = writeln!(s, "witness grading: {}", t.witness_grading);
                let _ = writeln!(s, "collapse page: {}", opt(t.page_of_collapse));
                let _ = writeln!(s, "E_inf total: {}", opt(t.e_inf_total));
            }
            Body::Spectral(r) => human_spectral(&mut s, r),
            Body::Skein(r) => human_skein(&mut s, r),
            Body::Thm2(r) => human_thm2(&mut s, r),
        }
        s
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn behavior_word(b: Behavior) -> &'static str {
    match b {
        Behavior::SwapsOX => "swap",
        Behavior::PreservesOX => "preserve",
    }
}

/// Rows by Alexander grading (descending), columns by Maslov grading.
pub fn rank_table(es: &[RankEntry]) -> String {
    if es.is_empty() {
        return "  (zero)\n".to_string();
    }
    let ms: BTreeSet<i32> = es.iter().map(|e| e.m).collect();
    let as_: BTreeSet<i32> = es.iter().map(|e| e.a2).collect();
    let cell: BTreeMap<(i32, i32), usize> = es.iter().map(|e| ((e.a2, e.m), e.rank)).collect();
    let w = es
        .iter()
        .map(|e| e.rank.to_string().len())
        .chain(ms.iter().map(|m| m.to_string().len()))
        .max()
        .unwrap_or(1)
        .max(2);
    let aw = as_.iter().map(|&a| half(a).len()).max().unwrap_or(1).max(3);
    let mut s = format!("  {:>aw$} |", "A\\M");
    for m in &ms {
        let _ = write!(s, " {m:>w$}");
    }
    s.push('\n');
    let _ = writeln!(s, "  {}-+{}", "-".repeat(aw), "-".repeat((w + 1) * ms.len()));
    for &a in as_.iter().rev() {
        let _ = write!(s, "  {:>aw$} |", half(a));
        for &m in &ms {
            match cell.get(&(a, m)) {
                Some(r) => {
                    let _ = write!(s, " {r:>w$}");
                }
                None => {
                    let _ = write!(s, " {:>w$}", ".");
                }
            }
        }
        s.push('\n');
    }
    s
}

fn human_homology(s: &mut String, h: &HomologyReport) {
    let kind = if h.singular {
        "singular knot"
    } else if h.components == 1 {
        "knot"
    } else {
        "link"
    };
    let _ = writeln!(s, "{kind}, n = {}, {} component(s), total rank {}", h.n, h.components, h.total);
    let _ = writeln!(s, "tilde homology:");
    s.push_str(&rank_table(&h.ranks));
    let _ = writeln!(s, "Poincare polynomial: {}", h.poincare);
    match (&h.stripped, &h.stripped_poincare) {
        (Some(st), Some(p)) => {
            let _ = writeln!(s, "after removing (1 + u^-1 t^-1)^{}:", h.strip_power);
            s.push_str(&rank_table(st));
            let _ = writeln!(s, "stripped Poincare polynomial: {p}");
        }
        _ => {
            let _ = writeln!(s, "(1 + u^-1 t^-1)^{} does not divide the Poincare polynomial", h.strip_power);
        }
    }
}

fn human_symmetry(s: &mut String, r: &SymmetryReport) {
    let _ = writeln!(s, "detected rotations (c1, c2, behavior):");
    for d in &r.detected {
        let _ = writeln!(s, "  ({}, {}) {}", d.c1, d.c2, behavior_word(d.behavior));
    }
    if let Some(b) = r.declared {
        let _ = writeln!(s, "declared: {}", behavior_word(b));
    }
    let c = &r.chosen;
    let _ = writeln!(s, "chosen: (a, b) -> ({} - a, {} - b) mod {}, {}", c.c1, c.c2, c.n, behavior_word(c.behavior));
    let e = &r.equivariance;
    let _ = writeln!(s, "tau^2 = id: {}", e.involution);
    let _ = writeln!(s, "d tau = tau d: {}", e.chain_map);
    let _ = writeln!(s, "grading law: {}", e.grading_law);
    let _ = writeln!(s, "fixed states: {}", e.fixed_states);
    for c in &e.counterexamples {
        let _ = writeln!(s, "  {c}");
    }
    let _ = writeln!(s, "{}", if e.passed() { "PASS" } else { "FAIL" });
}

fn human_spectral(s: &mut String, r: &SpectralReport) {
    let c = &r.involution;
    let _ = writeln!(s, "involution: ({}, {}) {}", c.c1, c.c2, behavior_word(c.behavior));
    for p in &r.pages {
        let d: usize = p.d_out.iter().map(|e| e.rank).sum();
        let _ = writeln!(s, "E_{}: total {}, rank d_{} = {}", p.r, p.total, p.r, d);
        s.push_str(&rank_table(&p.ranks));
    }
    let _ = writeln!(s, "collapse page: {}", r.collapse_page);
    let _ = writeln!(s, "degree bound: {}", r.bound);
    let _ = writeln!(s, "Tate rank: {}", r.tate_rank);
    if r.non_stabilizing {
        let _ = writeln!(s, "stopped before the differentials vanished");
    }
}

fn human_skein(s: &mut String, r: &SkeinReport) {
    let t = &r.triangle;
    let _ = writeln!(s, "center lattice point: ({0}, {0})", r.center);
    for (label, text) in [("G_S", &r.g_s), ("G_0", &r.g_0), ("G_-", &r.g_minus)] {
        let _ = writeln!(s, "{label}:");
        for line in text.lines() {
            let _ = writeln!(s, "  {line}");
        }
    }
    let _ = writeln!(s, "Delta_S = {}", opt(t.delta_s.as_ref()));
    let _ = writeln!(s, "Delta_0 = {}", opt(t.delta_0.as_ref()));
    let _ = writeln!(s, "Delta_- = {}", opt(t.delta_minus.as_ref()));
    let _ = writeln!(s, "lk(G_-) = {}", opt(t.linking_minus));
    let w = t.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &t.checks {
        let _ = write!(s, "{} {:<w$}  {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        if !c.offending.is_empty() {
            let gs: Vec<String> = c.offending.iter().map(|g| g.to_string()).collect();
            let _ = write!(s, " [{}]", gs.join(" "));
        }
        s.push('\n');
    }
}

fn human_thm2(s: &mut String, r: &Thm2Report) {
    let _ = writeln!(s, "lambda = {}", r.lambda);
    let _ = writeln!(s, "collapse page: {}", r.collapse_page);
    let _ = writeln!(s, "E_inf: {}", r.e_infinity);
    let _ = writeln!(s, "E_inf stripped: {}", r.stripped);
    let _ = writeln!(s, "quotient HFK: {}", r.quotient_hfk);
    let _ = writeln!(s, "  {:>6} {:>6} {:>9} {:>8}", "A", "a", "survivors", "expected");
    for row in &r.rows {
        let _ = writeln!(
            s,
            "  {:>6} {:>6} {:>9} {:>8}{}",
            half(row.a2),
            half(row.quotient_a2),
            row.survivors,
            row.expected,
            if row.ok { "" } else { "  MISMATCH" }
        );
    }
    for (a2, k) in &r.off_lattice {
        let _ = writeln!(s, "  {k} survivor(s) off the lattice at A = {}", half(*a2));
    }
    let _ = writeln!(s, "{}", if r.passed { "PASS" } else { "FAIL" });
}

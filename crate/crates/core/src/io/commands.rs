//! One function per CLI subcommand, each returning a report body.

use super::gridfile::{GridFile, GridFileError};
use super::report::*;
use crate::f2::{poincare, F2Error};
use crate::grid::{GridComplex, GridError, Limits};
use crate::skein::{verify_triangle, SkeinError, SkeinTriple};
use crate::ss::{pages, s_tau, s_tau_reduced, tate_rank, theorem2_report, SsError};
use crate::symmetry::{detect, tau_permutation, verify_equivariance};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    File(#[from] GridFileError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Algebra(#[from] F2Error),
    #[error(transparent)]
    Ss(#[from] SsError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
}

/// V-factors carried by the tilde complex: one per extra O marking.
pub fn strip_power(f: &GridFile, components: usize, singular: bool) -> u32 {
    if singular {
        f.n as u32 - 1
    } else {
        (f.n - components) as u32
    }
}

pub fn homology(f: &GridFile, limits: &Limits) -> Result<Body, CommandError> {
    let g = f.diagram()?;
    let gc = GridComplex::build(&g, limits)?;
    let h = gc.homology();
    let p = poincare(&h.ranks);
    let k = strip_power(f, g.components(), g.is_singular());
    let stripped = p.strip_v(k).ok();
    Ok(Body::Homology(HomologyReport {
        n: g.n(),
        components: g.components(),
        singular: g.is_singular(),
        total: h.total_rank(),
        ranks: entries(&h.ranks),
        poincare: p,
        strip_power: k,
        stripped: stripped.as_ref().map(poly_entries),
        stripped_poincare: stripped,
    }))
}

pub fn alexpoly(f: &GridFile, limits: &Limits) -> Result<Body, CommandError> {
    let g = f.diagram()?;
    let gc = GridComplex::build(&g, limits)?;
    Ok(Body::Alexpoly(AlexanderReport {
        n: g.n(),
        components: g.components(),
        singular: g.is_singular(),
        polynomial: gc.alexander_polynomial()?,
    }))
}

pub fn symmetry(f: &GridFile, limits: &Limits) -> Result<Body, CommandError> {
    let g = f.diagram()?;
    let chosen = f.involution()?;
    let gc = GridComplex::build(&g, limits)?;
    Ok(Body::Symmetry(SymmetryReport {
        detected: detect(&g).unwrap_or_default(),
        declared: f.symmetry,
        chosen,
        equivariance: verify_equivariance(&gc, &chosen),
    }))
}

pub fn sstau(f: &GridFile, limits: &Limits, reduced: bool, max_r: Option<usize>) -> Result<Body, CommandError> {
    let g = f.diagram()?;
    f.involution()?;
    let r = if reduced { s_tau_reduced(&g, limits)? } else { s_tau(&g, limits, max_r)? };
    Ok(Body::Sstau(r))
}

pub fn spectral(f: &GridFile, limits: &Limits, max_r: Option<usize>) -> Result<Body, CommandError> {
    let g = f.diagram()?;
    let spec = f.involution()?;
    let gc = GridComplex::build(&g, limits)?;
    let tau = tau_permutation(&gc, &spec);
    let ss = pages(&gc.complex, &tau, max_r)?;
    Ok(Body::Spectral(SpectralReport {
        involution: spec,
        bound: ss.bound,
        collapse_page: ss.collapse_page,
        non_stabilizing: ss.non_stabilizing,
        tate_rank: tate_rank(&gc.complex, &tau),
        pages: ss
            .pages
            .iter()
            .map(|p| PageReport { r: p.r, total: p.total(), ranks: entries(&p.ranks), d_out: entries(&p.d_out_rank) })
            .collect(),
    }))
}

/// A singular grid is used as is; a knot grid is singularized first.
pub fn skein(f: &GridFile, limits: &Limits) -> Result<Body, CommandError> {
    let g = f.diagram()?;
    let t = if g.is_singular() { SkeinTriple::from_singular(&g)? } else { SkeinTriple::from_knot(&g)? };
    let triangle = verify_triangle(&t, limits)?;
    Ok(Body::Skein(SkeinReport {
        center: t.center,
        g_s: GridFile::from_diagram(&t.g_s).write(),
        g_0: GridFile::from_diagram(&t.g_0).write(),
        g_minus: GridFile::from_diagram(&t.g_minus).write(),
        triangle,
    }))
}

pub fn thm2(
    f: &GridFile,
    quotient: &GridFile,
    lambda: i32,
    limits: &Limits,
    max_r: Option<usize>,
) -> Result<Body, CommandError> {
    let g = f.diagram()?;
    f.involution()?;
    let q = quotient.diagram()?;
    Ok(Body::Thm2(theorem2_report(&g, &q, lambda, limits, max_r)?))
}

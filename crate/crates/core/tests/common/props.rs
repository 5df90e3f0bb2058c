//! Invariant checks shared by the property tests and the acceptance run.
//! Each returns a description of the first violation.

use gridfloer::f2::poincare;
use gridfloer::grid::grading::maslov_by_propagation;
use gridfloer::grid::rect::{rel_along, transposition_path};
use gridfloer::grid::{rel_grading, GridComplex, GridDiagram, Limits, MarkSet, RectChoice};
use gridfloer::symmetry::{verify_equivariance, Behavior, InvolutionSpec};

pub type Outcome = Result<(), String>;

pub fn build(g: &GridDiagram) -> GridComplex {
    GridComplex::build(g, &Limits::default()).expect("grid within limits")
}

/// ∂² = 0 and ∂ lowers (M, A) by exactly (1, 0), checked by hand.
pub fn boundary_laws(gc: &GridComplex) -> Outcome {
    let c = &gc.complex;
    for i in 0..c.len() {
        let gi = c.grading(i);
        for &j in c.boundary_of(i) {
            let gj = c.grading(j as usize);
            if gj.m != gi.m - 1 || gj.a2 != gi.a2 {
                return Err(format!("∂ maps {gi} to {gj}"));
            }
        }
        let mut twice = std::collections::BTreeMap::<u32, u32>::new();
        for &j in c.boundary_of(i) {
            for &k in c.boundary_of(j as usize) {
                *twice.entry(k).or_default() += 1;
            }
        }
        if twice.values().any(|v| v % 2 == 1) {
            return Err(format!("∂² ≠ 0 on {}", gc.states[i]));
        }
    }
    Ok(())
}

/// Relative gradings add along paths, agree for both rectangle choices and
/// with the closed form, and propagation from the normalizing state
/// reproduces the closed form.
pub fn grading_laws(g: &GridDiagram, gc: &GridComplex, picks: [usize; 3]) -> Outcome {
    let len = gc.states.len();
    let [x, y, z] = picks.map(|p| gc.states[p % len]);
    let idx = |s: &gridfloer::grid::GridState| s.rank();
    for set in [MarkSet::O, MarkSet::X] {
        let marks = g.marks(set);
        let closed = |s: &gridfloer::grid::GridState| match set {
            MarkSet::O => gc.gradings[idx(s)].m_o,
            MarkSet::X => gc.gradings[idx(s)].m_x,
        };
        let xy = rel_grading(g, &x, &y, set).unwrap();
        let yz = rel_grading(g, &y, &z, set).unwrap();
        let xz = rel_grading(g, &x, &z, set).unwrap();
        if xy + yz != xz {
            return Err(format!("{set:?}: rel(x,y) + rel(y,z) = {} but rel(x,z) = {xz}", xy + yz));
        }
        if xy != closed(&x) - closed(&y) {
            return Err(format!("{set:?}: rel(x,y) = {xy}, closed form gives {}", closed(&x) - closed(&y)));
        }
        let second = rel_along(&marks, &transposition_path(&x, &y), RectChoice::Second);
        if second != xy {
            return Err(format!("{set:?}: the two rectangle choices give {xy} and {second}"));
        }
        // a detour through z must not matter either
        let mut detour = transposition_path(&x, &z);
        detour.extend(transposition_path(&z, &y).into_iter().skip(1));
        if rel_along(&marks, &detour, RectChoice::First) != xy {
            return Err(format!("{set:?}: detour through z changes rel(x,y)"));
        }
        for s in [x, y, z] {
            for choice in [RectChoice::First, RectChoice::Second] {
                if maslov_by_propagation(g, &marks, &s, choice) != Some(closed(&s)) {
                    return Err(format!("{set:?}: propagation disagrees with the closed form at {s}"));
                }
            }
        }
    }
    Ok(())
}

/// τ² = id, ∂τ = τ∂ and the grading law of the involution.
pub fn involution_laws(g: &GridDiagram, c1: usize, c2: usize, behavior: Behavior) -> Outcome {
    let gc = build(g);
    let spec = InvolutionSpec { n: g.n(), c1, c2, behavior };
    let r = verify_equivariance(&gc, &spec);
    if r.passed() {
        Ok(())
    } else {
        Err(format!("{:?}", r))
    }
}

/// rank(d, s) = rank(d − 2s, −s) on the stripped knot homology.
pub fn hfk_symmetry(g: &GridDiagram) -> Outcome {
    let gc = build(g);
    let hfk = poincare(&gc.homology().ranks).strip_v(g.n() as u32 - 1).map_err(|e| e.to_string())?;
    for ((m, a2), c) in hfk.terms() {
        let mirror = hfk.coeff(m - a2, -a2);
        if mirror != c {
            return Err(format!("rank({m}, {a2}/2) = {c} but rank({}, {}/2) = {mirror}", m - a2, -a2));
        }
    }
    Ok(())
}

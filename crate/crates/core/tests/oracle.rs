//! The library against the naive model in `common`.

mod common;

use common::*;
use gridfloer::grid::{GridComplex, Limits};
use gridfloer::ss::{pages, tate_rank};
use gridfloer::symmetry::{detect_with, tau_permutation, Behavior};
use proptest::prelude::*;

fn library_ranks(g: &gridfloer::grid::GridDiagram) -> std::collections::BTreeMap<(i32, i32), usize> {
    ranks_of(&GridComplex::build(g, &Limits::default()).unwrap().homology().ranks)
}

#[test]
fn corpus_knots_and_links_match_the_model() {
    for name in ["unknot2", "unknot3", "trefoil_31plus", "trefoil_g_zero", "trefoil_g_minus", "split4"] {
        let g = corpus(name);
        let naive = NaiveComplex::build(g.n(), g.o(), g.x());
        assert_eq!(naive.homology(), library_ranks(&g), "{name}");
    }
}

#[test]
fn figure8_matches_the_model() {
    let g = corpus("figure8");
    let naive = NaiveComplex::build(g.n(), g.o(), g.x());
    assert_eq!(naive.homology(), library_ranks(&g));
}

/// The singular complex is the part of the 0-resolution containing the
/// center point, with Alexander grading raised by one half.
#[test]
fn singular_trefoil_through_the_resolution() {
    let g0 = corpus("trefoil_g_zero");
    let k = 3;
    let naive = NaiveComplex::build(6, g0.o(), g0.x()).restrict(|p| p[k] == k);
    let expected: std::collections::BTreeMap<_, _> =
        naive.homology().into_iter().map(|((m, a2), r)| ((m, a2 + 1), r)).collect();
    assert_eq!(library_ranks(&corpus("singular_trefoil")), expected);
}

#[test]
fn spectral_sequence_limit_matches_model_tate_rank() {
    for (name, behavior) in [
        ("unknot3", Behavior::SwapsOX),
        ("trefoil_31plus", Behavior::SwapsOX),
        ("trefoil_g_zero", Behavior::PreservesOX),
        ("trefoil_g_minus", Behavior::PreservesOX),
    ] {
        let g = corpus(name);
        let spec = detect_with(&g, behavior).unwrap();
        let gc = GridComplex::build(&g, &Limits::default()).unwrap();
        let tau = tau_permutation(&gc, &spec);
        let naive = NaiveComplex::build(g.n(), g.o(), g.x());
        let expect = naive.tate_rank(|p| naive_rotate(p, spec.c1, spec.c2));
        assert_eq!(tate_rank(&gc.complex, &tau), expect, "{name}");
        assert_eq!(pages(&gc.complex, &tau, None).unwrap().e_infinity().total(), expect, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_grids_match_the_model(g in any_grid(5)) {
        let naive = NaiveComplex::build(g.n(), g.o(), g.x());
        prop_assert_eq!(naive.homology(), library_ranks(&g));
    }

    #[test]
    fn closed_form_maslov_matches_the_model(g in any_grid(6), seed in any::<u64>()) {
        let gc = GridComplex::build(&g, &Limits::default()).unwrap();
        let i = (seed % gc.states.len() as u64) as usize;
        let p = gc.states[i].perm();
        prop_assert_eq!(gc.gradings[i].m_o, naive_maslov(&p, g.o()));
        prop_assert_eq!(gc.gradings[i].m_x, naive_maslov(&p, g.x()));
    }

    #[test]
    fn random_spectral_sequences_reach_the_tate_rank((g, c1, c2) in swap_symmetric_grid(5)) {
        let spec = detect_with(&g, Behavior::SwapsOX).unwrap();
        let gc = GridComplex::build(&g, &Limits::default()).unwrap();
        let tau = tau_permutation(&gc, &spec);
        let naive = NaiveComplex::build(g.n(), g.o(), g.x());
        let expect = naive.tate_rank(|p| naive_rotate(p, spec.c1, spec.c2));
        prop_assert_eq!(pages(&gc.complex, &tau, None).unwrap().e_infinity().total(), expect, "rotation ({}, {})", c1, c2);
    }
}

/// Relabelling generators changes every pivot choice but no page.
#[test]
fn pages_do_not_depend_on_generator_order() {
    use gridfloer::f2::BigradedComplex;
    for (name, behavior) in [("trefoil_31plus", Behavior::SwapsOX), ("singular_trefoil", Behavior::PreservesOX)] {
        let g = corpus(name);
        let gc = GridComplex::build(&g, &Limits::default()).unwrap();
        let tau = tau_permutation(&gc, &detect_with(&g, behavior).unwrap());
        let len = gc.complex.len();
        // new index of old generator i
        let sigma: Vec<u32> = (0..len as u32).map(|i| (i * 37 + 11) % len as u32).collect();
        let mut inv = vec![0usize; len];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s as usize] = i;
        }
        let gens = (0..len).map(|k| gc.complex.grading(inv[k])).collect();
        let cols = (0..len)
            .map(|k| {
                let mut c: Vec<u32> = gc.complex.boundary_of(inv[k]).iter().map(|&j| sigma[j as usize]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        let relabelled = BigradedComplex::new(gens, cols);
        let tau2: Vec<u32> = (0..len).map(|k| sigma[tau[inv[k]] as usize]).collect();
        let a = pages(&gc.complex, &tau, None).unwrap();
        let b = pages(&relabelled, &tau2, None).unwrap();
        assert_eq!(a.pages.len(), b.pages.len(), "{name}");
        for (p, q) in a.pages.iter().zip(&b.pages) {
            assert_eq!(p.ranks, q.ranks, "{name} page {}", p.r);
            assert_eq!(p.d_out_rank, q.d_out_rank, "{name} page {}", p.r);
        }
    }
}

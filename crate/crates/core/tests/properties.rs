mod common;

use common::props::*;
use common::*;
use gridfloer::grid::{GridComplex, Limits};
use gridfloer::io::GridFile;
use gridfloer::symmetry::{detect_with, Behavior};
use proptest::prelude::*;

const CORPUS_NAMES: [&str; 8] = [
    "unknot2",
    "unknot3",
    "trefoil_31plus",
    "singular_trefoil",
    "trefoil_g_zero",
    "trefoil_g_minus",
    "figure8",
    "split4",
];

#[test]
fn corpus_boundary_and_grading_laws() {
    for name in CORPUS_NAMES {
        let g = corpus(name);
        let gc = build(&g);
        boundary_laws(&gc).unwrap_or_else(|e| panic!("{name}: {e}"));
        if !g.is_singular() {
            grading_laws(&g, &gc, [0, 7, 13]).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

#[test]
fn corpus_involution_laws() {
    for (name, b) in [
        ("unknot3", Behavior::SwapsOX),
        ("trefoil_31plus", Behavior::SwapsOX),
        ("figure8", Behavior::SwapsOX),
        ("singular_trefoil", Behavior::PreservesOX),
        ("trefoil_g_zero", Behavior::PreservesOX),
        ("trefoil_g_minus", Behavior::PreservesOX),
    ] {
        let g = corpus(name);
        let s = detect_with(&g, b).unwrap();
        involution_laws(&g, s.c1, s.c2, b).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn corpus_hfk_symmetry() {
    for name in ["unknot2", "unknot3", "trefoil_31plus", "trefoil_g_zero", "figure8"] {
        hfk_symmetry(&corpus(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boundary_squares_to_zero(g in any_grid(6)) {
        prop_assert_eq!(boundary_laws(&build(&g)), Ok(()));
    }

    #[test]
    fn relative_gradings_are_path_independent(g in any_grid(6), picks in any::<[usize; 3]>()) {
        let gc = build(&g);
        prop_assert_eq!(grading_laws(&g, &gc, picks), Ok(()));
    }

    #[test]
    fn swapping_rotations_are_equivariant((g, c1, c2) in swap_symmetric_grid(6)) {
        prop_assert_eq!(involution_laws(&g, c1, c2, Behavior::SwapsOX), Ok(()));
    }

    #[test]
    fn preserving_rotations_are_equivariant((g, c1, c2) in preserve_symmetric_grid(6)) {
        prop_assert_eq!(involution_laws(&g, c1, c2, Behavior::PreservesOX), Ok(()));
    }

    #[test]
    fn knot_homology_is_symmetric(g in knot_grid(6)) {
        prop_assert_eq!(g.components(), 1);
        prop_assert_eq!(hfk_symmetry(&g), Ok(()));
    }

    #[test]
    fn alexander_polynomial_is_symmetric(g in knot_grid(6)) {
        let p = GridComplex::build(&g, &Limits::default()).unwrap().alexander_polynomial().unwrap();
        prop_assert_eq!(p.at_one(), 1);
        for (e2, c) in p.terms() {
            prop_assert_eq!(p.coeff(-e2), c);
        }
    }

    #[test]
    fn grid_files_round_trip(g in any_grid(8)) {
        let f = GridFile::from_diagram(&g);
        let text = f.write();
        let back = GridFile::parse(&text).unwrap();
        prop_assert_eq!(back.write(), text);
        prop_assert_eq!(back.diagram().unwrap(), g);
    }
}

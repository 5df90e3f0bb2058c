//! Grids bundled with the crate.

use crate::io::{GridFile, GridFileError};

pub const CORPUS: &[(&str, &str)] = &[
    ("unknot2", include_str!("../corpus/unknot2.grid")),
    ("unknot3", include_str!("../corpus/unknot3.grid")),
    ("trefoil_31plus", include_str!("../corpus/trefoil_31plus.grid")),
    ("singular_trefoil", include_str!("../corpus/singular_trefoil.grid")),
    ("trefoil_g_zero", include_str!("../corpus/trefoil_g_zero.grid")),
    ("trefoil_g_minus", include_str!("../corpus/trefoil_g_minus.grid")),
    ("figure8", include_str!("../corpus/figure8.grid")),
    ("split4", include_str!("../corpus/split4.grid")),
];

/// Raw text of a bundled grid; a trailing `.grid` is ignored.
pub fn text(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".grid").unwrap_or(name);
    CORPUS.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
}

pub fn load(name: &str) -> Option<Result<GridFile, GridFileError>> {
    text(name).map(GridFile::parse)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses_and_round_trips() {
        for (name, t) in CORPUS {
            let f = GridFile::parse(t).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(f.name.as_deref(), Some(*name));
            assert_eq!(&f.write(), t, "{name}");
        }
        assert!(text("unknot2.grid").is_some());
        assert!(load("nope").is_none());
    }
}

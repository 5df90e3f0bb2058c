//! Plain-text grid files.
//!
//! ```text
//! # comment lines at the top are kept
//! name: trefoil_31plus
//! n: 5
//! O: (1,5), (2,1), (3,2), (4,3), (5,4)
//! X: (1,2), (2,3), (3,4), (4,5), (5,1)
//! XX: (3,3)
//! symmetry: swap
//! lambda: 1
//! quotient: unknot2.grid
//! ```
//!
//! Only `n`, `O` and `X` are required. Writing emits the fields in the
//! order above, so a file already in that layout reads and writes back
//! byte for byte.

use crate::grid::{Cell, GridDiagram, GridError};
use crate::symmetry::{detect, Behavior, InvolutionSpec, SymmetryError};
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridFileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("grid file declares symmetry `{expected}` but {found}")]
    SymmetryMismatch { expected: String, found: String },
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GridFile {
    pub comments: Vec<String>,
    pub name: Option<String>,
    pub n: usize,
    pub o: Vec<Cell>,
    pub x: Vec<Cell>,
    pub xx: Option<Cell>,
    pub symmetry: Option<Behavior>,
    pub lambda: Option<i32>,
    pub quotient: Option<String>,
}

fn behavior_name(b: Behavior) -> &'static str {
    match b {
        Behavior::SwapsOX => "swap",
        Behavior::PreservesOX => "preserve",
    }
}

fn parse_cell(s: &str) -> Option<Cell> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// `(1,2), (3,4)`
fn parse_cells(s: &str) -> Option<Vec<Cell>> {
    let mut rest = s.trim();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let close = rest.find(')')?;
        out.push(parse_cell(&rest[..=close])?);
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return None;
            }
        } else if !rest.is_empty() {
            return None;
        }
    }
    Some(out)
}

fn write_cells(cells: &[Cell]) -> String {
    cells.iter().map(|(i, j)| format!("({i},{j})")).collect::<Vec<_>>().join(", ")
}

impl GridFile {
    pub fn parse(text: &str) -> Result<Self, GridFileError> {
        let mut f = GridFile::default();
        let mut n = None;
        let (mut o, mut x) = (None, None);
        let mut in_header = true;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let err = |msg: String| GridFileError::Parse { line, msg };
            let trimmed = raw.trim();
            if trimmed.starts_with('#') {
                if in_header {
                    f.comments.push(raw.to_string());
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            in_header = false;
            let (key, value) =
                trimmed.split_once(':').ok_or_else(|| err(format!("expected `key: value`, got `{trimmed}`")))?;
            let value = value.trim();
            let cells = |v: &str| parse_cells(v).ok_or_else(|| err(format!("bad cell list `{v}`")));
            match key.trim() {
                "name" => f.name = Some(value.to_string()),
                "n" => n = Some(value.parse::<usize>().map_err(|_| err(format!("bad grid size `{value}`")))?),
                "O" => o = Some(cells(value)?),
                "X" => x = Some(cells(value)?),
                "XX" => f.xx = Some(parse_cell(value).ok_or_else(|| err(format!("bad cell `{value}`")))?),
                "symmetry" => {
                    f.symmetry = Some(match value {
                        "swap" => Behavior::SwapsOX,
                        "preserve" => Behavior::PreservesOX,
                        _ => return Err(err(format!("symmetry must be `swap` or `preserve`, got `{value}`"))),
                    })
                }
                "lambda" => f.lambda = Some(value.parse().map_err(|_| err(format!("bad lambda `{value}`")))?),
                "quotient" => f.quotient = Some(value.to_string()),
                other => return Err(err(format!("unknown field `{other}`"))),
            }
        }
        f.n = n.ok_or(GridFileError::Missing("n"))?;
        f.o = o.ok_or(GridFileError::Missing("O"))?;
        f.x = x.ok_or(GridFileError::Missing("X"))?;
        f.diagram()?;
        Ok(f)
    }

    pub fn read(path: &Path) -> Result<Self, GridFileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| GridFileError::Read { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn from_diagram(g: &GridDiagram) -> Self {
        GridFile { n: g.n(), o: g.o().to_vec(), x: g.x().to_vec(), xx: g.xx(), ..Default::default() }
    }

    pub fn diagram(&self) -> Result<GridDiagram, GridError> {
        GridDiagram::new(self.n, self.o.clone(), self.x.clone(), self.xx)
    }

    pub fn write(&self) -> String {
        let mut s = String::new();
        for c in &self.comments {
            let _ = writeln!(s, "{c}");
        }
        if let Some(name) = &self.name {
            let _ = writeln!(s, "name: {name}");
        }
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "O: {}", write_cells(&self.o));
        let _ = writeln!(s, "X: {}", write_cells(&self.x));
        if let Some((i, j)) = self.xx {
            let _ = writeln!(s, "XX: ({i},{j})");
        }
        if let Some(b) = self.symmetry {
            let _ = writeln!(s, "symmetry: {}", behavior_name(b));
        }
        if let Some(l) = self.lambda {
            let _ = writeln!(s, "lambda: {l}");
        }
        if let Some(q) = &self.quotient {
            let _ = writeln!(s, "quotient: {q}");
        }
        s
    }

    /// The preferred rotation. A declared behavior must be confirmed by
    /// detection; otherwise knots default to swapping and singular grids
    /// to preserving markings.
    pub fn involution(&self) -> Result<InvolutionSpec, GridFileError> {
        let g = self.diagram()?;
        let found = detect(&g);
        let want = self.symmetry.unwrap_or(if g.is_singular() { Behavior::PreservesOX } else { Behavior::SwapsOX });
        let all = match found {
            Ok(all) => all,
            Err(SymmetryError::NotSymmetric) if self.symmetry.is_some() => {
                return Err(GridFileError::SymmetryMismatch {
                    expected: behavior_name(want).into(),
                    found: "no rotation symmetry was detected".into(),
                })
            }
            Err(_) => Vec::new(),
        };
        if let Some(s) = all.iter().find(|s| s.behavior == want) {
            return Ok(*s);
        }
        match (self.symmetry, all.first()) {
            (None, Some(s)) => Ok(*s),
            _ => Err(GridFileError::SymmetryMismatch {
                expected: behavior_name(want).into(),
                found: match all.first() {
                    Some(s) => format!("only `{}` rotations exist", behavior_name(s.behavior)),
                    None => "no rotation symmetry was detected".into(),
                },
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "# right-handed trefoil\nname: t\nn: 5\nO: (1,5), (2,1), (3,2), (4,3), (5,4)\nX: (1,2), (2,3), (3,4), (4,5), (5,1)\nsymmetry: swap\n";

    #[test]
    fn round_trip() {
        let f = GridFile::parse(TREFOIL).unwrap();
        assert_eq!(f.write(), TREFOIL);
        assert_eq!(f.o[0], (1, 5));
        assert_eq!(f.symmetry, Some(Behavior::SwapsOX));
    }

    #[test]
    fn loose_spacing_is_accepted() {
        let f = GridFile::parse("n:2\n\nO:(1,2),(2,1)\n  X: ( 1 , 1 ) ,(2,2)\n# trailing\n").unwrap();
        assert_eq!(f.x, vec![(1, 1), (2, 2)]);
        assert!(f.comments.is_empty());
        assert_eq!(f.write(), "n: 2\nO: (1,2), (2,1)\nX: (1,1), (2,2)\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = GridFile::parse("n: 2\nO: (1,2), (2,1\n").unwrap_err();
        assert!(matches!(e, GridFileError::Parse { line: 2, .. }), "{e}");
        let e = GridFile::parse("n: 2\nO: (1,2), (2,1)\n").unwrap_err();
        assert!(matches!(e, GridFileError::Missing("X")));
        let e = GridFile::parse("n: 2\nO: (1,2), (2,1)\nX: (1,2), (2,2)\n").unwrap_err();
        assert!(matches!(e, GridFileError::Grid(_)));
        assert!(GridFile::parse("n: 2\nfoo: 1\n").is_err());
    }

    #[test]
    fn declared_symmetry_must_exist() {
        let mut f = GridFile::parse(TREFOIL).unwrap();
        assert_eq!(f.involution().unwrap().behavior, Behavior::SwapsOX);
        f.symmetry = Some(Behavior::PreservesOX);
        assert!(matches!(f.involution(), Err(GridFileError::SymmetryMismatch { .. })));
    }
}

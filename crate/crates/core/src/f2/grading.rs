use serde::{Deserialize, Serialize};
use std::fmt;

/// A (Maslov, Alexander) bigrading. The Alexander grading is stored doubled
/// so half-integers stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bigrading {
    pub m: i32,
    pub a2: i32,
}

impl Bigrading {
    pub const fn new(m: i32, a2: i32) -> Self {
        Bigrading { m, a2 }
    }

    /// Construct from an integer Alexander grading.
    pub const fn int(m: i32, a: i32) -> Self {
        Bigrading { m, a2: 2 * a }
    }

    pub fn shift(self, dm: i32, da2: i32) -> Self {
        Bigrading { m: self.m + dm, a2: self.a2 + da2 }
    }

    /// Doubled δ-grading, 2M − 2A.
    pub fn delta2(self) -> i32 {
        2 * self.m - self.a2
    }
}

/// Render a doubled value as an integer or a fraction over two.
pub fn half(v2: i32) -> String {
    if v2 % 2 == 0 {
        format!("{}", v2 / 2)
    } else {
        format!("{}/2", v2)
    }
}

impl fmt::Display for Bigrading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, half(self.a2))
    }
}

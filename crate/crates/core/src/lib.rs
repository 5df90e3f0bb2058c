//! Grid homology for knots, singular knots and their π-rotation symmetry.

pub mod corpus;
pub mod f2;
pub mod grid;
pub mod io;
pub mod skein;
pub mod ss;
pub mod symmetry;

//! Exact lattice and polytope kernel: characters, cocharacters, hulls,
//! containment with separating functionals, support minima and
//! minimum-norm points.

mod polytope;
mod weight;

pub use polytope::{Containment, LatticePolytope, MinNormPoint, MIN_NORM_MAX_DIM};
pub use weight::{dot, pairing, traceless, Cocharacter, Weight};

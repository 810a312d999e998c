//! Exact computational toolkit for semistable pairs of SL(N+1)-modules.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`] – characters, cocharacters and rational polytopes with exact
//!   containment, support functions and minimum-norm points;
//! * [`rep`] – concrete symmetric, exterior and tensor modules with their
//!   weights and the matrix action;
//! * [`pairs`] – one-parameter-subgroup weights, Futaki characters and
//!   numerical semistability verdicts;
//! * [`binaryforms`] – resultants, discriminants, root-order criteria and
//!   GKZ polytopes for binary forms;
//! * [`energy`] – the pair energy and its asymptotics (floating point);
//! * [`toric`] – the toric extension criterion;
//! * [`koszul`] – torsion of exact complexes and Koszul resultants.

pub mod binaryforms;
pub mod energy;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod koszul;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod pairs;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod toric;

pub use error::{Error, Result};
pub use rational::Q;

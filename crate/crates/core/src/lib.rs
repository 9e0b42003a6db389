pub mod algebra;
pub mod cli;
pub mod discriminant;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod matroid;
pub mod reciprocal;
pub mod sampling;
pub mod selftest;
pub mod solver;
pub mod symdisc;

pub use error::{Error, ErrorKind, Result};

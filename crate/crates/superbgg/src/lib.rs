//! Exact-arithmetic Kostant (co)homology and BGG-resolution checks for the Lie
//! superalgebras gl(m|n) and osp(m|2n).

pub mod algebra;
pub mod bgg;
pub mod chains;
pub mod cli;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod modules;
pub mod scalar;
pub mod sparse;

pub use error::{Error, Result};

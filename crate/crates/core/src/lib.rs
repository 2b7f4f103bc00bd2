//! Exact quasi-shuffle algebras over `Q[r]` and the tooling built on them.

pub mod cli;
pub mod error;
pub mod hopf;
pub mod mzv;
pub mod psimaps;
pub mod qsalg;
pub mod scalars;
pub mod symsum;
pub mod zeval;

pub use error::{Error, Result};

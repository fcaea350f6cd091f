//! Exact computations with the simple Lie algebra sl(6)/Z in characteristic 2:
//! second adjoint cohomology, the correspondence with trivectors of a
//! six-dimensional space, and the global deformations of types II and III.

pub mod algebra;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod deform;
pub mod error;
pub mod field;
pub mod linalg;
pub mod report;
pub mod rootsys;
pub mod simplicity;
pub mod tables;
pub mod trivector;

pub use error::{Error, Result};

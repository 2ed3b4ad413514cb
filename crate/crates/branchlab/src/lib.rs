//! branchlab: exact local geometry of algebraic plane curves.
//!
//! The library expands curve branches as truncated Puiseux series over
//! algebraic extension towers, computes intersection multiplicities at
//! points and branches (with an independent recursive oracle for
//! cross-checking), verifies Bezout totals, reads Cayley characters and
//! osculating flags off branch coefficients, and analyses linear systems
//! of forms cutting series on a curve. Everything is exact: rationals,
//! tower extensions, and a single perturbation symbol ε.

pub mod arith;
pub mod error;
pub mod series;

pub use error::{Error, ErrorClass, Result};

/// Entry point for the `branchlab` binary; returns the process exit code.
pub fn run_cli() -> i32 {
    // replaced by the full CLI once the analysis modules are in place
    eprintln!("branchlab: command-line interface not yet wired");
    2
}

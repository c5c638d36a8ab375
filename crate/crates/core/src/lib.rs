//! Exact computations in the representation theory of general linear and
//! symmetric groups, with the polyhedral counting they rest on.
//!
//! - [`partitions`]: partitions, semistandard tableaux, Kostka numbers
//! - [`polytope`]: exact LP, integer points, Ehrhart quasi-polynomials
//! - [`symfunc`]: Schur polynomials, products and plethysm
//! - [`lr`]: Littlewood–Richardson coefficients (tableaux and hives)
//! - [`kronecker`]: S_n characters and Kronecker coefficients
//! - [`weylmod`]: explicit Weyl modules and stabilizer invariants
//! - [`obstructions`]: magic squares and obstruction certificates

pub mod acceptance;
pub mod config;
pub mod error;
pub mod exec;
pub mod kronecker;
pub mod linalg;
pub mod lr;
pub mod obstructions;
pub mod partitions;
pub mod poly;
pub mod polytope;
pub mod rational;
pub mod sampling;
pub mod symfunc;
pub mod weylmod;

pub use config::Config;
pub use error::{Error, Result};
pub use exec::Exec;
pub use partitions::{Partition, Tableau};

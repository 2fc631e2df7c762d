//! Exact character theory for the wreath products `Z_k ≀ S_n`.
//!
//! The crate is layered bottom up:
//!
//! - [`algebra`]: rationals, cyclotomic fields `Q(ζ_k)` and sparse Laurent
//!   polynomials with cyclotomic coefficients.
//! - [`shapes`]: partitions, `k`-tuples of partitions drawn corner to corner,
//!   tableaux and rim hook tableaux.
//! - [`wreath`]: colored permutations, cycle notation and conjugacy classes.
//! - [`characters`]: irreducible characters via the Murnaghan–Nakayama rule,
//!   class functions and inner products.
//! - [`color_rules`]: color rules, their characters and their decomposition
//!   by counting semistandard `k`-tableaux.
//! - [`involution`]: the sign-reversing involution on decorated rim hook
//!   tableaux and its fixed points.
//! - [`ehrhart`]: lattice point enumeration, equivariant Ehrhart series and
//!   the wreath Euler–Mahonian statistics.
//! - [`selftest`]: the acceptance checks, shared by the test suite and the CLI.

pub mod algebra;
pub mod budget;
pub mod characters;
pub mod color_rules;
pub mod ehrhart;
mod error;
pub mod involution;
pub mod selftest;
pub mod shapes;
pub mod wreath;

pub use budget::Budget;
pub use error::{Error, Result};

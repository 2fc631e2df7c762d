//! Partitions, `k`-tuples of partitions and tableaux on them.
//!
//! Diagrams use the French convention: row 0 is the bottom row and rows
//! grow upward. A tuple `(γ⁰, …, γ^{k-1})` is drawn corner to corner with
//! `γ⁰` leftmost and highest; the south-east corner of each component touches
//! the north-west corner of the next. An empty component occupies a single
//! placeholder cell that no entry or hook may use.

mod partition;
mod rim_hook;
mod symmetric;
mod tableau;

pub use partition::{enumerate_partitions, enumerate_tuples, Cell, Partition, PartitionTuple};
pub use rim_hook::{enumerate_rht, removable_rim_hooks, RimHook, RimHookTableau};
pub use symmetric::{class_normalizer, kostka, schur_poly, z_lambda};
pub use tableau::{
    enumerate_ssyt, enumerate_syt, for_each_ssyt, standardize, Caps, ContentPool, Tableau,
};

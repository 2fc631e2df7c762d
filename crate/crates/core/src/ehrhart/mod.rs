//! Lattice polytopes, refined Ehrhart polynomials, the bigraded characters
//! of `K[P^{×n}]` and the wreath Euler–Mahonian statistics.

mod euler_mahonian;
mod polytope;
mod series;
mod stats;

pub use euler_mahonian::{euler_mahonian_numerator, verify_euler_mahonian, EulerMahonianCheck};
pub use polytope::{coordinate_sum, lattice_points, HPolytope, PolytopeKind};
pub use series::{
    frobenius_decompose, module_character, plethystic_h, polytope_rule, q_binomial, q_vars, refined_ehrhart,
    tq_vars,
};
pub use stats::{colored_rsk, des_comaj, descents, single, wreath_stats_perm, wreath_stats_tableau, WreathStats};

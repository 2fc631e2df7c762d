//! Exact arithmetic: rationals, cyclotomic numbers and Laurent polynomials.

mod cyclotomic;
mod laurent;
mod text;

pub use cyclotomic::{cyclotomic_poly, root_power_sum, Cyclotomic};
pub use laurent::{LaurentPoly, Vars};
pub use text::variable_names;

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

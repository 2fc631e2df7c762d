use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Cyclotomic, Rational};
use crate::{Error, Result};

/// An ordered list of variable names shared by polynomials that combine.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Vars(names.into_iter().map(Into::into).collect())
    }

    pub fn none() -> Self {
        Vars::new(Vec::<String>::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A sparse Laurent polynomial over `Q(ζ_k)` in an ordered list of variables.
///
/// Terms map integer exponent vectors to nonzero coefficients; the map is
/// ordered, so iteration and rendering are lexicographic in the exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vars,
    order: u32,
    terms: BTreeMap<Vec<i32>, Cyclotomic>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{:?}; ζ_{}]({})", self.vars, self.order, self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_poly(self))
    }
}

impl LaurentPoly {
    pub fn zero(vars: &Vars, k: u32) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            order: k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars, k: u32) -> Self {
        Self::constant(vars, Cyclotomic::one(k))
    }

    pub fn from_int(vars: &Vars, k: u32, n: i64) -> Self {
        Self::constant(vars, Cyclotomic::from_int(k, n))
    }

    pub fn constant(vars: &Vars, c: Cyclotomic) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, exps: Vec<i32>, c: Cyclotomic) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars, c.order());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The single variable `name` raised to `e`.
    pub fn var(vars: &Vars, k: u32, name: &str, e: i32) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::Invalid(format!("unknown variable {name}")))?;
        let mut exps = vec![0; vars.len()];
        exps[i] = e;
        Ok(Self::monomial(vars, exps, Cyclotomic::one(k)))
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Cyclotomic)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial with exponent vector `exps`, zero if absent.
    pub fn coeff(&self, exps: &[i32]) -> Cyclotomic {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Cyclotomic {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Adds `c · x^exps` in place.
    pub fn add_term(&mut self, exps: Vec<i32>, c: &Cyclotomic) {
        assert_eq!(c.order(), self.order, "cyclotomic orders differ");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !self.vars.same(&other.vars) {
            return Err(Error::VariableMismatch(
                self.vars.names().to_vec(),
                other.vars.names().to_vec(),
            ));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.vars, self.order);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        assert_eq!(c.order(), self.order, "cyclotomic orders differ");
        let mut out = Self::zero(&self.vars, self.order);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            let v = a * c;
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Cyclotomic::from_rational(self.order, r.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars, self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial with exponent vector `shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let mut out = Self::zero(&self.vars, self.order);
        for (e, c) in &self.terms {
            let ne = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Drops every term whose exponent in variable `var` exceeds `max_deg`.
    pub fn truncate(&self, var: usize, max_deg: i32) -> Self {
        let mut out = self.clone();
        out.terms.retain(|e, _| e[var] <= max_deg);
        out
    }

    /// The part of degree exactly `d` in variable `var`, with that exponent
    /// set to zero.
    pub fn graded_part(&self, var: usize, d: i32) -> Self {
        let mut out = Self::zero(&self.vars, self.order);
        for (e, c) in &self.terms {
            if e[var] == d {
                let mut ne = e.clone();
                ne[var] = 0;
                out.terms.insert(ne, c.clone());
            }
        }
        out
    }

    /// Smallest and largest exponent of `var` over all terms.
    pub fn degree_range(&self, var: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[var]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Applies complex conjugation to the coefficients only.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(&self.vars, self.order);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.conj());
        }
        out
    }

    /// Substitutes the nonzero rational `value` for variable `var`; the
    /// exponent of `var` becomes zero in every term.
    pub fn specialize(&self, var: usize, value: &Rational) -> Result<Self> {
        if value.is_zero() && self.terms.keys().any(|e| e[var] < 0) {
            return Err(Error::Invalid("cannot substitute 0 for a negative power".into()));
        }
        let mut out = Self::zero(&self.vars, self.order);
        for (e, c) in &self.terms {
            let mut f = Rational::one();
            let base = if e[var] < 0 { value.recip() } else { value.clone() };
            for _ in 0..e[var].unsigned_abs() {
                f *= &base;
            }
            let mut ne = e.clone();
            ne[var] = 0;
            out.add_term(ne, &c.scale(&f));
        }
        Ok(out)
    }

    /// Rewrites the polynomial in another variable list that contains every
    /// variable with a nonzero exponent.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| vars.index_of(n))
            .collect();
        let mut out = Self::zero(vars, self.order);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    let j = map[i].ok_or_else(|| {
                        Error::VariableMismatch(self.vars.names().to_vec(), vars.names().to_vec())
                    })?;
                    ne[j] = x;
                }
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Re-expresses coefficients in `Q(ζ_m)` for a multiple `m` of the order.
    pub fn embed(&self, m: u32) -> Result<Self> {
        let mut out = Self::zero(&self.vars, m);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.embed(m)?);
        }
        Ok(out)
    }

    /// The plethystic power sum `p_m[self]` for polynomials with rational
    /// coefficients: every exponent is multiplied by `m`.
    pub fn adams(&self, m: i32) -> Result<Self> {
        let mut out = Self::zero(&self.vars, self.order);
        for (e, c) in &self.terms {
            if c.as_rational().is_none() {
                return Err(Error::Invalid(
                    "power-sum plethysm needs rational coefficients".into(),
                ));
            }
            let ne = e.iter().map(|x| x * m).collect();
            out.add_term(ne, c);
        }
        Ok(out)
    }

    /// True if every coefficient is an integer in `Q`.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integral_rational())
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.as_rational().is_some_and(|r| r.is_integer() && *r >= Rational::zero()))
    }

    /// Coefficients with integer power-basis components throughout.
    pub fn has_algebraic_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.has_integer_coeffs())
    }

    pub fn parse(vars: &Vars, k: u32, text: &str) -> Result<Self> {
        super::text::parse_poly(vars, k, text)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            c.negate_in_place();
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check(rhs).expect("incompatible polynomials");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &-rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt() -> Vars {
        Vars::new(["q", "t"])
    }

    #[test]
    fn coeff_of_absent_term_is_zero() {
        let p = LaurentPoly::var(&qt(), 3, "q", -2).unwrap();
        assert!(p.coeff(&[1, 0]).is_zero());
        assert!(p.coeff(&[-2, 0]).is_one());
    }

    #[test]
    fn cancellation_removes_terms() {
        let v = qt();
        let q = LaurentPoly::var(&v, 1, "q", 1).unwrap();
        let qi = LaurentPoly::var(&v, 1, "q", -1).unwrap();
        let one = LaurentPoly::one(&v, 1);
        assert_eq!(&q * &qi, one);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn truncate_and_graded_part() {
        let v = qt();
        let mut p = LaurentPoly::zero(&v, 1);
        for d in 0..5 {
            p.add_term(vec![d, d], &Cyclotomic::from_int(1, d as i64 + 1));
        }
        let tr = p.truncate(1, 2);
        assert_eq!(tr.len(), 3);
        let g = p.graded_part(1, 3);
        assert_eq!(g.coeff(&[3, 0]), Cyclotomic::from_int(1, 4));
    }

    #[test]
    fn mismatched_vars_error() {
        let a = LaurentPoly::one(&Vars::new(["q"]), 1);
        let b = LaurentPoly::one(&Vars::new(["t"]), 1);
        assert!(a.checked_add(&b).is_err());
        assert!(a.with_vars(&Vars::new(["t", "q"])).is_ok());
    }

    #[test]
    fn specialize_to_minus_one() {
        let v = Vars::new(["q", "e"]);
        let p = LaurentPoly::parse(&v, 1, "2*q^1 - 3*e^1 + e^-2*q^1").unwrap();
        let s = p.specialize(1, &super::super::rat(-1)).unwrap();
        assert_eq!(s, LaurentPoly::parse(&v, 1, "3*q^1 + 3").unwrap());
    }
}

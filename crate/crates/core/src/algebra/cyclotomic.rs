use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::{Error, Result};

/// Tables for `Q(ζ_k) = Q[x]/Φ_k(x)`.
#[derive(Debug)]
struct Field {
    k: u32,
    /// Coefficients of `x^e mod Φ_k` for `0 <= e < k`.
    powers: Vec<Vec<BigInt>>,
}

impl Field {
    fn degree(&self) -> usize {
        self.powers[0].len()
    }
}

fn field_cache() -> &'static Mutex<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The cyclotomic polynomial `Φ_k` as integer coefficients, constant term
/// first. Computed by dividing `x^k - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_poly(k: u32) -> Vec<BigInt> {
    assert!(k >= 1, "cyclotomic order must be positive");
    if let Some(p) = poly_cache().lock().unwrap().get(&k) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = BigInt::from(-1);
    num[k as usize] = BigInt::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            num = exact_monic_div(&num, &cyclotomic_poly(d));
        }
    }
    poly_cache().lock().unwrap().insert(k, num.clone());
    num
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn field(k: u32) -> Arc<Field> {
    if let Some(f) = field_cache().lock().unwrap().get(&k) {
        return f.clone();
    }
    let phi = cyclotomic_poly(k);
    let deg = phi.len() - 1;
    let mut powers = Vec::with_capacity(k as usize);
    let mut cur = vec![BigInt::zero(); deg];
    cur[0] = BigInt::one();
    for _ in 0..k {
        powers.push(cur.clone());
        // multiply by x and reduce by the monic Φ_k
        let top = cur[deg - 1].clone();
        for j in (1..deg).rev() {
            cur[j] = cur[j - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for j in 0..deg {
                cur[j] -= &top * &phi[j];
            }
        }
    }
    let f = Arc::new(Field { k, powers });
    field_cache().lock().unwrap().insert(k, f.clone());
    f
}

/// An element of `Q(ζ_k)` stored as `φ(k)` rational coefficients on the
/// power basis `1, ζ, …, ζ^{φ(k)-1}`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.k == other.field.k && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.k.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_cyclotomic(self))
    }
}

impl Cyclotomic {
    pub fn zero(k: u32) -> Self {
        let field = field(k);
        let coeffs = vec![Rational::zero(); field.degree()];
        Cyclotomic { field, coeffs }
    }

    pub fn one(k: u32) -> Self {
        Self::from_rational(k, Rational::one())
    }

    pub fn from_rational(k: u32, r: Rational) -> Self {
        let mut z = Self::zero(k);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(k: u32, n: i64) -> Self {
        Self::from_rational(k, Rational::from_integer(n.into()))
    }

    /// Builds an element from `φ(k)` coefficients on the power basis.
    pub fn from_coeffs(k: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let z = Self::zero(k);
        if coeffs.len() != z.coeffs.len() {
            return Err(Error::SizeMismatch(format!(
                "Q(ζ_{k}) needs {} coefficients, got {}",
                z.coeffs.len(),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic {
            field: z.field,
            coeffs,
        })
    }

    /// `ζ_k^e` for any integer `e`.
    pub fn root(k: u32, e: i64) -> Self {
        let field = field(k);
        let idx = e.rem_euclid(k as i64) as usize;
        let coeffs = field.powers[idx]
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Cyclotomic { field, coeffs }
    }

    /// `Σ_e counts[e] ζ^e`, indices taken mod `k`.
    pub fn from_power_counts(k: u32, counts: &[i64]) -> Self {
        let field = field(k);
        let deg = field.degree();
        let mut acc = vec![BigInt::zero(); deg];
        for (e, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let row = &field.powers[e % k as usize];
            for j in 0..deg {
                if !row[j].is_zero() {
                    acc[j] += &row[j] * c;
                }
            }
        }
        Cyclotomic {
            field,
            coeffs: acc.into_iter().map(Rational::from_integer).collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.field.k
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_integral_rational(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    /// True if every power-basis coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.k != other.field.k {
            return Err(Error::OrderMismatch(self.field.k, other.field.k));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let deg = self.field.degree();
        if deg == 1 {
            return Ok(Cyclotomic {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut conv = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<Rational> = conv[..deg].to_vec();
        for (e, c) in conv.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (j, t) in self.field.powers[e % self.field.k as usize].iter().enumerate() {
                if !t.is_zero() {
                    coeffs[j] += c * Rational::from_integer(t.clone());
                }
            }
        }
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation, the field automorphism `ζ ↦ ζ^{k-1}`.
    pub fn conj(&self) -> Self {
        self.galois(self.order() as i64 - 1)
    }

    /// The field automorphism `ζ ↦ ζ^m`; `m` must be coprime to `k`.
    pub fn galois(&self, m: i64) -> Self {
        let k = self.order();
        assert_eq!(num_integer::gcd(m.rem_euclid(k as i64), k as i64), 1, "ζ ↦ ζ^{m} is not an automorphism of Q(ζ_{k})");
        let mut out = Self::zero(k);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = (i as i64 * m).rem_euclid(k as i64) as usize;
            for (j, t) in self.field.powers[idx].iter().enumerate() {
                if !t.is_zero() {
                    out.coeffs[j] += c * Rational::from_integer(t.clone());
                }
            }
        }
        out
    }

    /// Re-expresses the element inside `Q(ζ_m)` for a multiple `m` of `k`.
    pub fn embed(&self, m: u32) -> Result<Self> {
        let k = self.order();
        if !m.is_multiple_of(k) {
            return Err(Error::Invalid(format!("Q(ζ_{k}) does not embed in Q(ζ_{m})")));
        }
        let step = (m / k) as i64;
        let mut out = Self::zero(m);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += &Self::root(m, i as i64 * step).scale(c);
            }
        }
        Ok(out)
    }

    /// Numerical value under `ζ ↦ exp(2πi/k)`, for sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let k = self.order() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * i as f64 / k;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Writes the element as `Σ_e c_e ζ^e` with `0 <= e < φ(k)`.
    pub fn power_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub(crate) fn negate_in_place(&mut self) {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_negative())
    }
}

/// `Σ_{i=0}^{k-1} (u_1^i u_r)^s` computed literally; it is `k` when `k | s`
/// and `0` otherwise.
pub fn root_power_sum(k: u32, r: i64, s: i64) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(k);
    for i in 0..k as i64 {
        acc += &Cyclotomic::root(k, (i + r) * s);
    }
    acc
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).expect("cyclotomic orders differ")
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).expect("cyclotomic orders differ")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        let mut out = self.clone();
        out.negate_in_place();
        out
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        self.negate_in_place();
        self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.order(), rhs.order(), "cyclotomic orders differ");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.order(), rhs.order(), "cyclotomic orders differ");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn root_has_order_k() {
        for k in 1..=12 {
            let z = Cyclotomic::root(k, 1);
            assert!(z.pow(k).is_one(), "k = {k}");
            for e in 1..k {
                assert!(!z.pow(e).is_one(), "k = {k}, e = {e}");
            }
        }
    }

    #[test]
    fn power_sums_of_roots() {
        for k in 1..=8u32 {
            for r in 0..k as i64 {
                for s in -3..12i64 {
                    let v = root_power_sum(k, r, s);
                    let expect = if s.rem_euclid(k as i64) == 0 { k as i64 } else { 0 };
                    assert_eq!(v, Cyclotomic::from_int(k, expect), "k={k} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn conj_is_inverse_on_roots() {
        for k in 1..=12 {
            for e in 0..k as i64 {
                let z = Cyclotomic::root(k, e);
                assert!((&z * &z.conj()).is_one());
            }
        }
    }

    #[test]
    fn embedding_respects_products() {
        let a = Cyclotomic::root(3, 1) + Cyclotomic::from_int(3, 2);
        let b = Cyclotomic::root(3, 2);
        let ab = (&a * &b).embed(12).unwrap();
        let e = &a.embed(12).unwrap() * &b.embed(12).unwrap();
        assert_eq!(ab, e);
        assert!(a.embed(4).is_err());
    }

    #[test]
    fn mismatched_orders_are_errors() {
        let a = Cyclotomic::root(3, 1);
        let b = Cyclotomic::root(4, 1);
        assert_eq!(a.checked_add(&b), Err(Error::OrderMismatch(3, 4)));
        assert!(a.checked_mul(&b).is_err());
    }
}

//! The equivariant Euler–Mahonian identity, checked as truncated series.

use serde_json::{json, Value};

use super::series::tq_vars;
use super::stats::wreath_stats_tableau;
use crate::algebra::{Cyclotomic, LaurentPoly};
use crate::shapes::{enumerate_syt, for_each_ssyt, Caps, PartitionTuple};
use crate::{Budget, Error, Result};

/// `Σ_{T ∈ SYT(γ)} t^{wdes(T)} q^{wcomaj(T)}`.
pub fn euler_mahonian_numerator(gamma: &PartitionTuple) -> Result<LaurentPoly> {
    let vars = tq_vars();
    let mut out = LaurentPoly::zero(&vars, 1);
    for t in enumerate_syt(gamma) {
        let s = wreath_stats_tableau(&t)?;
        out.add_term(vec![s.wdes as i32, s.wcomaj as i32], &Cyclotomic::one(1));
    }
    Ok(out)
}

/// `Σ t^{max T} q^{|T|}` over semistandard `k`-tableaux with entries in
/// `0..=tmax`, entry `j` allowed in component `j mod k` only.
fn ssyt_series(gamma: &PartitionTuple, tmax: u32, by_max: bool) -> LaurentPoly {
    let k = gamma.k();
    let alphabets: Vec<Vec<usize>> = (0..k)
        .map(|c| (c..=tmax as usize).step_by(k).collect())
        .collect();
    let mut out = LaurentPoly::zero(&tq_vars(), 1);
    let mut caps = Caps(vec![gamma.size() as usize; tmax as usize + 1]);
    for_each_ssyt(gamma, &alphabets, &mut caps, &mut |t| {
        let entries: Vec<usize> = t.cells().into_iter().map(|(_, &v)| v).collect();
        let sum: usize = entries.iter().sum();
        let top = if by_max { entries.iter().copied().max().unwrap_or(0) } else { 0 };
        out.add_term(vec![top as i32, sum as i32], &Cyclotomic::one(1));
    });
    out
}

/// The two sides of the identity, all truncated after `t^tmax`.
#[derive(Clone, Debug)]
pub struct EulerMahonianCheck {
    pub shape: PartitionTuple,
    pub tmax: u32,
    /// `Σ_{SYT} t^{wdes} q^{wcomaj}`.
    pub numerator: LaurentPoly,
    /// `∏_{j=1}^n (1 - t^k q^{kj}) Σ_{SSYT_k(γ, N)} t^{max T} q^{|T|}`.
    pub product: LaurentPoly,
    /// `(1 - t) Σ_d t^d Σ_{SSYT_k(γ, N_d)} q^{|T|}` equals
    /// `Σ_{SSYT_k(γ, N)} t^{max T} q^{|T|}`.
    pub smoothing: bool,
}

impl EulerMahonianCheck {
    pub fn holds(&self) -> bool {
        self.smoothing && self.numerator.truncate(0, self.tmax as i32) == self.product
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.shape,
            "tmax": self.tmax,
            "numerator": self.numerator.to_string(),
            "product": self.product.to_string(),
            "smoothing": self.smoothing,
            "holds": self.holds(),
        })
    }
}

pub fn verify_euler_mahonian(gamma: &PartitionTuple, tmax: u32, budget: &Budget) -> Result<EulerMahonianCheck> {
    budget.check_degree(tmax)?;
    let n = gamma.size();
    if n == 0 {
        return Err(Error::Invalid("the shape must have at least one cell".into()));
    }
    let k = gamma.k() as i32;
    let vars = tq_vars();
    let by_max = ssyt_series(gamma, tmax, true);
    let mut product = by_max.clone();
    for j in 1..=n as i32 {
        let mut factor = LaurentPoly::one(&vars, 1);
        factor.add_term(vec![k, k * j], &Cyclotomic::from_int(1, -1));
        product = (&product * &factor).truncate(0, tmax as i32);
    }
    // Σ_d t^d Σ_{SSYT(N_d)} q^{|T|}, one bounded enumeration per d
    let mut graded = LaurentPoly::zero(&vars, 1);
    for d in 0..=tmax {
        graded += &ssyt_series(gamma, d, false).shift(&[d as i32, 0]);
    }
    let mut one_minus_t = LaurentPoly::one(&vars, 1);
    one_minus_t.add_term(vec![1, 0], &Cyclotomic::from_int(1, -1));
    let smoothing = (&graded * &one_minus_t).truncate(0, tmax as i32) == by_max;
    Ok(EulerMahonianCheck {
        shape: gamma.clone(),
        tmax,
        numerator: euler_mahonian_numerator(gamma)?,
        product,
        smoothing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_cell() {
        let g = PartitionTuple::parse("[[1]]").unwrap();
        let c = verify_euler_mahonian(&g, 5, &Budget::default()).unwrap();
        assert!(c.holds());
        assert_eq!(c.numerator, LaurentPoly::one(&tq_vars(), 1));
    }

    #[test]
    fn column_of_two() {
        let g = PartitionTuple::parse("[[1,1]]").unwrap();
        let c = verify_euler_mahonian(&g, 4, &Budget::default()).unwrap();
        assert!(c.holds(), "{}", c.to_json());
        assert_eq!(c.numerator, LaurentPoly::monomial(&tq_vars(), vec![1, 1], Cyclotomic::one(1)));
    }
}

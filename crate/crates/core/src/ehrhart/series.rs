//! Refined Ehrhart polynomials and the bigraded character of `K[P^{×n}]`.

use std::collections::BTreeMap;

use num_traits::One;

use super::polytope::{coordinate_sum, dot, lattice_points, HPolytope};
use crate::algebra::{Cyclotomic, LaurentPoly, Rational, Vars};
use crate::color_rules::{decompose_with, ColorRule, ColorSpec, Decomposition};
use crate::shapes::{enumerate_partitions, z_lambda, PartitionTuple};
use crate::{Budget, Error, Result};

/// Variables `[q]`.
pub fn q_vars() -> Vars {
    Vars::new(["q"])
}

/// Variables `[t, q]`: projective degree first.
pub fn tq_vars() -> Vars {
    Vars::new(["t", "q"])
}

fn check_weight(p: &HPolytope, weight: &[i64]) -> Result<()> {
    if weight.len() != p.dim() {
        return Err(Error::SizeMismatch(format!(
            "weight vector has {} entries, polytope dimension is {}",
            weight.len(),
            p.dim()
        )));
    }
    Ok(())
}

/// `L_{P,d}(q) = Σ_{v ∈ dP ∩ Z^m} q^{a·v}`.
pub fn refined_ehrhart(p: &HPolytope, weight: &[i64], d: u32) -> Result<LaurentPoly> {
    check_weight(p, weight)?;
    let vars = q_vars();
    let mut out = LaurentPoly::zero(&vars, 1);
    for v in lattice_points(p, d) {
        out.add_term(vec![dot(weight, &v) as i32], &Cyclotomic::one(1));
    }
    Ok(out)
}

/// The Gaussian binomial `[top, bottom]_q` as a polynomial in `q`, from the
/// product formula with exact division.
pub fn q_binomial(top: u32, bottom: u32) -> LaurentPoly {
    let vars = q_vars();
    if bottom > top {
        return LaurentPoly::zero(&vars, 1);
    }
    let b = bottom.min(top - bottom);
    let mut num: Vec<i128> = vec![1];
    for i in 1..=b {
        let e = (top - b + i) as usize;
        let mut next = vec![0i128; num.len() + e];
        for (j, &c) in num.iter().enumerate() {
            next[j] += c;
            next[j + e] -= c;
        }
        num = next;
    }
    for i in 1..=b as usize {
        // num = (1 - q^i) r  gives  r_j = num_j + r_{j-i}
        let len = num.len() - i;
        let mut r = vec![0i128; len];
        for j in 0..len {
            r[j] = num[j] + if j >= i { r[j - i] } else { 0 };
        }
        debug_assert!((len..num.len()).all(|j| num[j] == -r[j - i]));
        num = r;
    }
    let mut out = LaurentPoly::zero(&vars, 1);
    for (j, &c) in num.iter().enumerate() {
        if c != 0 {
            out.add_term(vec![j as i32], &Cyclotomic::from_int(1, c as i64));
        }
    }
    out
}

/// `Σ_{d ≤ tmax} t^d ∏_{i,j} Σ_{v ∈ dP} ζ^{i|v|} q^{λ^i_j (a·v)}`: the
/// character of `K[P^{×n}]` on the class `λ`, truncated after `t^tmax`.
pub fn module_character(p: &HPolytope, weight: &[i64], lambda: &PartitionTuple, tmax: u32) -> Result<LaurentPoly> {
    check_weight(p, weight)?;
    let k = lambda.k() as u32;
    let vars = tq_vars();
    let mut out = LaurentPoly::zero(&vars, k);
    for d in 0..=tmax {
        let points = lattice_points(p, d);
        let mut term = LaurentPoly::monomial(&vars, vec![d as i32, 0], Cyclotomic::one(k));
        for (i, part) in lambda.components().iter().enumerate() {
            for &len in part.parts() {
                let mut factor = LaurentPoly::zero(&vars, k);
                for v in &points {
                    let root = Cyclotomic::root(k, i as i64 * coordinate_sum(v));
                    factor.add_term(vec![0, len as i32 * dot(weight, v) as i32], &root);
                }
                term = &term * &factor;
            }
        }
        out += &term;
    }
    Ok(out)
}

/// `F_d = [v^n : v ∈ dP ∩ Z^m]` with value `|v|` and weight `q^{a·v}`.
/// Colors are the lattice points in lexicographic order, named `(x,y,…)`.
pub fn polytope_rule(p: &HPolytope, n: u32, k: u32, weight: &[i64], d: u32) -> Result<ColorRule> {
    check_weight(p, weight)?;
    let vars = q_vars();
    let specs = lattice_points(p, d)
        .into_iter()
        .map(|v| ColorSpec {
            id: format!(
                "({})",
                v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            ),
            mult: n,
            value: coordinate_sum(&v),
            weight: LaurentPoly::monomial(&vars, vec![dot(weight, &v) as i32], Cyclotomic::one(k)),
        })
        .collect();
    ColorRule::from_specs(n, k, specs)
}

/// Multiplicities of the irreducible characters in `K[P^{×n}]` as
/// polynomials in `t` (up to `t^tmax`) and `q`, one color rule `F_d` per
/// projective degree.
pub fn frobenius_decompose(
    p: &HPolytope,
    n: u32,
    k: u32,
    weight: &[i64],
    tmax: u32,
    budget: &Budget,
) -> Result<Decomposition> {
    budget.check_degree(tmax)?;
    budget.check_order(k)?;
    let vars = tq_vars();
    let mut mults: BTreeMap<PartitionTuple, LaurentPoly> = BTreeMap::new();
    for d in 0..=tmax {
        let rule = polytope_rule(p, n, k, weight, d)?;
        let dec = decompose_with(&rule, budget)?;
        for (g, m) in dec.mults {
            let m = m.with_vars(&vars)?.shift(&[d as i32, 0]);
            let slot = mults.entry(g).or_insert_with(|| LaurentPoly::zero(&vars, k));
            *slot += &m;
        }
    }
    mults.retain(|_, m| !m.is_zero());
    Ok(Decomposition { n, k, vars, mults })
}

/// `h_d[A]` for an alphabet `A` written as a polynomial with rational
/// coefficients, via `h_d = Σ_{μ ⊢ d} p_μ / z_μ` and `p_r[A] = A(x^r)`.
pub fn plethystic_h(d: u32, alphabet: &LaurentPoly) -> Result<LaurentPoly> {
    let vars = alphabet.vars().clone();
    let k = alphabet.order();
    let mut out = LaurentPoly::zero(&vars, k);
    for mu in enumerate_partitions(d) {
        let mut term = LaurentPoly::one(&vars, k);
        for &r in mu.parts() {
            term = &term * &alphabet.adams(r as i32)?;
        }
        let z = Rational::from_integer(z_lambda(&mu));
        out += &term.scale_rational(&(Rational::one() / z));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> LaurentPoly {
        LaurentPoly::parse(&q_vars(), 1, text).unwrap()
    }

    #[test]
    fn small_q_binomials() {
        assert_eq!(q_binomial(4, 2), q("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(q_binomial(3, 0), q("1"));
        assert_eq!(q_binomial(2, 3), q("0"));
        assert_eq!(q_binomial(5, 4), q("1 + q + q^2 + q^3 + q^4"));
    }

    #[test]
    fn segment_character_on_one_cycle() {
        let lambda = PartitionTuple::parse("[[],[1]]").unwrap();
        let chi = module_character(&HPolytope::segment(), &[1], &lambda, 3).unwrap();
        for d in 0..=3 {
            let mut expected = LaurentPoly::zero(&tq_vars(), 2);
            for v in 0..=d {
                expected.add_term(vec![0, v], &Cyclotomic::root(2, v as i64));
            }
            assert_eq!(chi.graded_part(0, d), expected);
        }
    }

    #[test]
    fn complete_homogeneous_of_a_small_alphabet() {
        // h_2[1 + q] = 1 + q + q^2
        assert_eq!(plethystic_h(2, &q("1 + q")).unwrap(), q("1 + q + q^2"));
        // h_2[-q] = e_2[q] = 0
        assert!(plethystic_h(2, &q("-q")).unwrap().is_zero());
    }
}

//! Irreducible characters of `Z_k ≀ S_n` and class functions.
//!
//! The irreducible `χ^γ` indexed by a `k`-tuple `γ` is evaluated by the
//! Murnaghan–Nakayama rule: hooks of the cycle lengths are placed in order
//! and a hook of type `a` in component `j` contributes `ζ^{a j}`, times `-1`
//! for each South step.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{Cyclotomic, LaurentPoly, Rational, Vars};
use crate::budget::group_order;
use crate::shapes::{
    class_normalizer, enumerate_rht, enumerate_tuples, removable_rim_hooks, schur_poly, Partition,
    PartitionTuple,
};
use crate::wreath::{class_order, class_representative};
use crate::{Budget, Error, Result};

/// `χ^γ` on a list of `(length, type)` cycles, hooks placed in list order.
pub fn value_on_cycles(gamma: &PartitionTuple, cycles: &[(usize, u32)]) -> Result<Cyclotomic> {
    let k = gamma.k() as u32;
    let total: usize = cycles.iter().map(|c| c.0).sum();
    if total != gamma.size() as usize {
        return Err(Error::SizeMismatch(format!(
            "cycles cover {total} points, shape has {} cells",
            gamma.size()
        )));
    }
    let mut memo = HashMap::new();
    let counts = mn_counts(gamma.components(), cycles, k, &mut memo);
    Ok(Cyclotomic::from_power_counts(k, &counts))
}

type Memo = HashMap<(Vec<Partition>, usize), Vec<i64>>;

/// Signed counts of hook placements by exponent of `ζ`.
fn mn_counts(shape: &[Partition], cycles: &[(usize, u32)], k: u32, memo: &mut Memo) -> Vec<i64> {
    let Some((&(len, a), rest)) = cycles.split_first() else {
        let mut v = vec![0; k as usize];
        v[0] = 1;
        return v;
    };
    let key = (shape.to_vec(), cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = vec![0i64; k as usize];
    let mut cur = shape.to_vec();
    for j in 0..shape.len() {
        for (smaller, cells) in removable_rim_hooks(&shape[j], len) {
            let rows = cells.iter().map(|c| c.0).max().unwrap() - cells.iter().map(|c| c.0).min().unwrap();
            let sign = if rows % 2 == 0 { 1 } else { -1 };
            let shift = (a as usize * j) % k as usize;
            cur[j] = smaller;
            let sub = mn_counts(&cur, rest, k, memo);
            cur[j] = shape[j].clone();
            for (e, c) in sub.iter().enumerate() {
                acc[(e + shift) % k as usize] += sign * c;
            }
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// `χ^γ(λ)` for the class `λ`, using the decreasing cycle notation of a
/// class representative.
pub fn irreducible_value(gamma: &PartitionTuple, lambda: &PartitionTuple) -> Result<Cyclotomic> {
    if gamma.k() != lambda.k() {
        return Err(Error::SizeMismatch("shape and class have different k".into()));
    }
    let rep = class_representative(lambda);
    let k = rep.k();
    let cycles: Vec<(usize, u32)> = rep.cycles().iter().map(|c| (c.len(), c.ctype(k))).collect();
    value_on_cycles(gamma, &cycles)
}

/// `χ^γ` on cycles by summing weights over the explicit rim hook tableaux;
/// slower than [`value_on_cycles`] and kept as a cross-check.
pub fn value_by_tableaux(gamma: &PartitionTuple, cycles: &[(usize, u32)]) -> Result<Cyclotomic> {
    let k = gamma.k() as u32;
    let lengths: Vec<usize> = cycles.iter().map(|c| c.0).collect();
    let ctypes: Vec<u32> = cycles.iter().map(|c| c.1).collect();
    let mut counts = vec![0i64; k as usize];
    for t in enumerate_rht(gamma, &lengths)? {
        let (e, s) = t.weight_exponent(&ctypes, k);
        counts[e as usize] += s;
    }
    Ok(Cyclotomic::from_power_counts(k, &counts))
}

/// The full table: rows indexed by shapes, columns by classes, both in the
/// order of [`enumerate_tuples`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: u32,
    pub k: u32,
    pub shapes: Vec<PartitionTuple>,
    pub classes: Vec<PartitionTuple>,
    /// `values[row][col]`.
    pub values: Vec<Vec<Cyclotomic>>,
    /// Class sizes `n! k^n / Z_λ`, aligned with `classes`.
    pub class_sizes: Vec<BigInt>,
}

impl CharacterTable {
    pub fn build(n: u32, k: u32, budget: &Budget) -> Result<Self> {
        budget.check_order(k)?;
        let shapes = enumerate_tuples(n, k as usize);
        let classes = shapes.clone();
        let values = shapes
            .par_iter()
            .map(|g| classes.iter().map(|l| irreducible_value(g, l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let class_sizes = classes.iter().map(class_order).collect();
        Ok(CharacterTable {
            n,
            k,
            shapes,
            classes,
            values,
            class_sizes,
        })
    }

    /// Memoized shared table.
    pub fn cached(n: u32, k: u32) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().unwrap().get(&(n, k)) {
            return Ok(t.clone());
        }
        let t = Arc::new(Self::build(n, k, &Budget::default())?);
        cache.lock().unwrap().insert((n, k), t.clone());
        Ok(t)
    }

    pub fn row_of(&self, gamma: &PartitionTuple) -> Option<usize> {
        self.shapes.iter().position(|g| g == gamma)
    }

    pub fn class_index(&self, lambda: &PartitionTuple) -> Option<usize> {
        self.classes.iter().position(|l| l == lambda)
    }

    /// Column of the identity class `((1^n), ∅, …)`.
    pub fn identity_class(&self) -> usize {
        let mut parts = vec![Partition::empty(); self.k as usize];
        parts[0] = Partition::new(vec![1; self.n as usize]).expect("partition");
        let id = PartitionTuple::new(parts).expect("k >= 1");
        self.class_index(&id).expect("identity class present")
    }

    pub fn group_order(&self) -> BigInt {
        BigInt::from(group_order(self.n as usize, self.k))
    }

    /// `⟨χ^a, χ^b⟩` for two rows.
    pub fn row_inner_product(&self, a: usize, b: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.k);
        for (c, size) in self.class_sizes.iter().enumerate() {
            let term = &self.values[a][c] * &self.values[b][c].conj();
            acc += &term.scale(&Rational::from_integer(size.clone()));
        }
        acc.scale(&Rational::new(BigInt::one(), self.group_order()))
    }

    pub fn row(&self, gamma: &PartitionTuple) -> Result<ClassFunction> {
        let r = self
            .row_of(gamma)
            .ok_or_else(|| Error::Invalid(format!("{gamma} is not a shape of size {} with k = {}", self.n, self.k)))?;
        let vars = Vars::none();
        let values = self
            .classes
            .iter()
            .zip(&self.values[r])
            .map(|(l, v)| (l.clone(), LaurentPoly::constant(&vars, v.clone())))
            .collect();
        Ok(ClassFunction {
            n: self.n,
            k: self.k,
            vars,
            values,
        })
    }
}

/// A class function with Laurent polynomial values, keyed by class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: u32,
    pub k: u32,
    pub vars: Vars,
    pub values: BTreeMap<PartitionTuple, LaurentPoly>,
}

impl ClassFunction {
    pub fn value(&self, lambda: &PartitionTuple) -> LaurentPoly {
        self.values
            .get(lambda)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(&self.vars, self.k))
    }

    /// Pointwise product; both sides must use the same variables.
    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_group(other)?;
        let mut values = BTreeMap::new();
        for (l, v) in &self.values {
            values.insert(l.clone(), v.checked_mul(&other.value(l))?);
        }
        Ok(ClassFunction {
            n: self.n,
            k: self.k,
            vars: self.vars.clone(),
            values,
        })
    }

    fn same_group(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::SizeMismatch("class functions of different groups".into()));
        }
        Ok(())
    }
}

/// `⟨φ, χ⟩ = (1/|G|) Σ_λ |C_λ| φ(λ) conj(χ(λ))`, conjugation acting on
/// coefficients only. A `χ` without variables is treated as scalar valued.
pub fn inner_product(phi: &ClassFunction, chi: &ClassFunction) -> Result<LaurentPoly> {
    phi.same_group(chi)?;
    let k = phi.k;
    let mut acc = LaurentPoly::zero(&phi.vars, k);
    for (lambda, v) in &phi.values {
        let size = Rational::from_integer(class_order(lambda));
        let c = chi.value(lambda);
        let term = if chi.vars.is_empty() {
            v.scale(&c.constant_term().conj())
        } else {
            v.checked_mul(&c.conj())?
        };
        acc += &term.scale_rational(&size);
    }
    let g = BigInt::from(group_order(phi.n as usize, k));
    Ok(acc.scale_rational(&Rational::new(BigInt::one(), g)))
}

/// Both sides of the multi-Schur identity for `γ` over `v` variables per
/// alphabet, as computed.
#[derive(Clone, Debug)]
pub struct MultiSchurCheck {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl MultiSchurCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Compares `∏_i s_{γ^i}[X^i]` with `Σ_λ conj(χ^γ(λ)) P_λ / Z_λ`, where
/// `P_λ = ∏_r ∏_l Σ_i ζ^{r i} p_{λ^r_l}(X^i)`. The alphabets are
/// `X^i = x{i}_1, …, x{i}_v`.
pub fn verify_multischur(gamma: &PartitionTuple, v: usize) -> Result<MultiSchurCheck> {
    let k = gamma.k() as u32;
    let n = gamma.size();
    let names: Vec<String> = (0..k)
        .flat_map(|i| (1..=v).map(move |j| format!("x{i}_{j}")))
        .collect();
    let vars = Vars::new(names);
    let letter = |i: usize, j: usize, e: i32| {
        let mut exps = vec![0; vars.len()];
        exps[i * v + j] = e;
        LaurentPoly::monomial(&vars, exps, Cyclotomic::one(k))
    };
    let mut lhs = LaurentPoly::one(&vars, k);
    for (i, p) in gamma.components().iter().enumerate() {
        let alphabet: Vec<LaurentPoly> = (0..v).map(|j| letter(i, j, 1)).collect();
        lhs = lhs.checked_mul(&schur_poly(p, &alphabet)?)?;
    }
    let mut power_sum = HashMap::new();
    let mut p_of = |i: usize, m: u32| -> LaurentPoly {
        power_sum
            .entry((i, m))
            .or_insert_with(|| {
                let mut acc = LaurentPoly::zero(&vars, k);
                for j in 0..v {
                    acc += &letter(i, j, m as i32);
                }
                acc
            })
            .clone()
    };
    let mut rhs = LaurentPoly::zero(&vars, k);
    for lambda in enumerate_tuples(n, k as usize) {
        let chi = irreducible_value(gamma, &lambda)?;
        if chi.is_zero() {
            continue;
        }
        let mut pl = LaurentPoly::one(&vars, k);
        for (r, part) in lambda.components().iter().enumerate() {
            for &m in part.parts() {
                let mut factor = LaurentPoly::zero(&vars, k);
                for i in 0..k as usize {
                    let root = Cyclotomic::root(k, (r * i) as i64);
                    factor += &p_of(i, m).scale(&root);
                }
                pl = pl.checked_mul(&factor)?;
            }
        }
        let z = Rational::new(BigInt::one(), class_normalizer(&lambda, k));
        rhs += &pl.scale(&chi.conj()).scale_rational(&z);
    }
    Ok(MultiSchurCheck { lhs, rhs })
}

/// Sum of `χ^γ(1)^2` over all shapes.
pub fn sum_of_squared_degrees(table: &CharacterTable) -> BigInt {
    let id = table.identity_class();
    let mut acc = BigInt::zero();
    for row in &table.values {
        let d = row[id].as_rational().expect("degrees are rational").to_integer();
        acc += &d * &d;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PartitionTuple {
        PartitionTuple::parse(s).unwrap()
    }

    #[test]
    fn hook_tableaux_on_mixed_cycle_types() {
        // cycles of the class ((3,1),(2,2)) fed in the order 2,1,2,3
        let g = t("[[3,1],[2,2]]");
        let lengths = [2, 1, 2, 3];
        let ctypes = [1, 0, 1, 0];
        let rhts = enumerate_rht(&g, &lengths).unwrap();
        assert_eq!(rhts.len(), 5);
        let signed: Vec<i64> = rhts
            .iter()
            .map(|r| match r.weight_exponent(&ctypes, 2) {
                (0, s) => s,
                (_, s) => -s,
            })
            .collect();
        assert_eq!(signed.iter().filter(|&&x| x == 1).count(), 3);
        assert_eq!(signed.iter().filter(|&&x| x == -1).count(), 2);
        let cycles: Vec<(usize, u32)> = lengths.iter().copied().zip(ctypes).collect();
        assert_eq!(value_on_cycles(&g, &cycles).unwrap(), Cyclotomic::one(2));
        assert_eq!(value_by_tableaux(&g, &cycles).unwrap(), Cyclotomic::one(2));
        assert_eq!(irreducible_value(&g, &g).unwrap(), Cyclotomic::one(2));
    }

    #[test]
    fn lengths_1313_with_types_0110_cancel() {
        // class ((3,1),(3,1)): no term of bidegree (4,4) in the power sum product
        let g = t("[[3,1],[2,2]]");
        let cycles = [(1, 0), (3, 1), (1, 1), (3, 0)];
        assert_eq!(enumerate_rht(&g, &[1, 3, 1, 3]).unwrap().len(), 6);
        assert!(value_by_tableaux(&g, &cycles).unwrap().is_zero());
        assert!(irreducible_value(&g, &t("[[3,1],[3,1]]")).unwrap().is_zero());
    }

    #[test]
    fn hyperoctahedral_b2_degrees_and_orthogonality() {
        let tab = CharacterTable::build(2, 2, &Budget::default()).unwrap();
        assert_eq!(tab.shapes.len(), 5);
        let id = tab.identity_class();
        let mut degrees: Vec<i64> = tab
            .values
            .iter()
            .map(|r| r[id].as_rational().unwrap().to_integer().try_into().unwrap())
            .collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
        for a in 0..5 {
            for b in 0..5 {
                let ip = tab.row_inner_product(a, b);
                assert_eq!(ip, Cyclotomic::from_int(2, i64::from(a == b)));
            }
        }
    }

    #[test]
    fn multischur_small() {
        for (n, k, v) in [(2, 2, 2), (3, 2, 1), (2, 3, 1), (3, 1, 2), (1, 3, 1)] {
            for g in enumerate_tuples(n, k) {
                assert!(verify_multischur(&g, v).unwrap().holds(), "{g} with {v} variables");
            }
        }
    }
}

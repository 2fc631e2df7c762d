//! The class function of a color rule.
//!
//! On a class with cycles `(ℓ, a)` a coloring gives every cycle one color,
//! using `ℓ` copies of it. The roots along a cycle multiply to `u_a`, so the
//! cycle contributes `ζ^{a p(f)} ρ(f)^ℓ`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::weights::{give_back, take, Masks, Mono, Tally};
use super::ColorRule;
use crate::algebra::{Cyclotomic, LaurentPoly};
use crate::characters::ClassFunction;
use crate::shapes::{enumerate_tuples, PartitionTuple};
use crate::wreath::ColoredPermutation;
use crate::{Error, Result};

/// `χ^F(λ)`.
pub fn evaluate(rule: &ColorRule, lambda: &PartitionTuple) -> Result<LaurentPoly> {
    if lambda.size() != rule.n() || lambda.k() != rule.k() as usize {
        return Err(Error::SizeMismatch(format!(
            "class {lambda} does not belong to Z_{} wr S_{}",
            rule.k(),
            rule.n()
        )));
    }
    let mut cycles: Vec<(u32, u32)> = Vec::new();
    for (a, p) in lambda.components().iter().enumerate() {
        cycles.extend(p.parts().iter().map(|&l| (l, a as u32)));
    }
    // long cycles first prune hardest
    cycles.sort_by(|x, y| y.cmp(x));
    let masks = Masks::new(rule);
    let mut remaining = rule.capacities().to_vec();
    let monos: Option<Vec<Mono>> = rule.colors().iter().map(|c| Mono::of(&c.weight)).collect();
    match monos {
        Some(monos) => {
            let mut tally = Tally::default();
            let mut exps = vec![0; rule.vars().len()];
            let mut walk = FastWalk {
                rule,
                masks: &masks,
                monos: &monos,
                cycles: &cycles,
                tally: &mut tally,
            };
            walk.run(0, &mut remaining, 0, false, &mut exps);
            Ok(tally.to_poly(rule.vars(), rule.k()))
        }
        None => {
            let mut memo = HashMap::new();
            Ok(general(rule, &masks, &cycles, 0, &mut remaining, &mut memo))
        }
    }
}

struct FastWalk<'a> {
    rule: &'a ColorRule,
    masks: &'a Masks,
    monos: &'a [Mono],
    cycles: &'a [(u32, u32)],
    tally: &'a mut Tally,
}

impl FastWalk<'_> {
    fn run(&mut self, i: usize, remaining: &mut [u32], zeta: u32, negative: bool, exps: &mut [i32]) {
        let k = self.rule.k();
        let Some(&(len, a)) = self.cycles.get(i) else {
            self.tally.add(zeta, exps, if negative { -1 } else { 1 });
            return;
        };
        for f in self.masks.allowed(remaining, len, 0).ones() {
            take(self.rule, remaining, f, len);
            let m = &self.monos[f];
            let p = self.rule.colors()[f].value.rem_euclid(k as i64) as u64;
            let z = (zeta as u64 + a as u64 * p + len as u64 * m.zeta as u64) % k as u64;
            let neg = negative ^ (m.negative && len % 2 == 1);
            for (x, e) in exps.iter_mut().zip(&m.exps) {
                *x += e * len as i32;
            }
            self.run(i + 1, remaining, z as u32, neg, exps);
            for (x, e) in exps.iter_mut().zip(&m.exps) {
                *x -= e * len as i32;
            }
            give_back(self.rule, remaining, f, len);
        }
    }
}

type Memo = HashMap<(usize, Vec<u32>), LaurentPoly>;

fn general(
    rule: &ColorRule,
    masks: &Masks,
    cycles: &[(u32, u32)],
    i: usize,
    remaining: &mut Vec<u32>,
    memo: &mut Memo,
) -> LaurentPoly {
    let k = rule.k();
    let Some(&(len, a)) = cycles.get(i) else {
        return LaurentPoly::one(rule.vars(), k);
    };
    let key = (i, remaining.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = LaurentPoly::zero(rule.vars(), k);
    for f in masks.allowed(remaining, len, 0).ones() {
        take(rule, remaining, f, len);
        let sub = general(rule, masks, cycles, i + 1, remaining, memo);
        give_back(rule, remaining, f, len);
        if sub.is_zero() {
            continue;
        }
        let c = &rule.colors()[f];
        let root = Cyclotomic::root(k, a as i64 * c.value);
        let factor = c.weight.pow(len).scale(&root);
        acc += &(&factor * &sub);
    }
    memo.insert(key, acc.clone());
    acc
}

/// `χ^F` on every class, classes in the order of [`enumerate_tuples`].
pub fn class_function(rule: &ColorRule) -> Result<ClassFunction> {
    let classes = enumerate_tuples(rule.n(), rule.k() as usize);
    let values = classes
        .par_iter()
        .map(|l| Ok((l.clone(), evaluate(rule, l)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(ClassFunction {
        n: rule.n(),
        k: rule.k(),
        vars: rule.vars().clone(),
        values,
    })
}

/// `χ^F(σ)` straight from the definition: every map `[n] → F` within the
/// multiplicities that is constant on the cycles of `σ`, weighted by
/// `∏_i u(σ,i)^{p(g(i))} ρ(g(i))`. Exponential; meant for cross-checks.
pub fn evaluate_element(rule: &ColorRule, sigma: &ColoredPermutation) -> Result<LaurentPoly> {
    if sigma.n() != rule.n() as usize || sigma.k() != rule.k() {
        return Err(Error::SizeMismatch("element and rule belong to different groups".into()));
    }
    let n = sigma.n();
    let mut g = vec![0usize; n];
    let mut remaining = rule.capacities().to_vec();
    let mut acc = LaurentPoly::zero(rule.vars(), rule.k());
    colorings(rule, sigma, 0, &mut g, &mut remaining, &mut acc);
    Ok(acc)
}

fn colorings(
    rule: &ColorRule,
    sigma: &ColoredPermutation,
    i: usize,
    g: &mut [usize],
    remaining: &mut [u32],
    acc: &mut LaurentPoly,
) {
    let n = g.len();
    if i == n {
        if (1..=n as u32).any(|j| g[sigma.image(j) as usize - 1] != g[j as usize - 1]) {
            return;
        }
        let k = rule.k();
        let mut w = LaurentPoly::one(rule.vars(), k);
        for j in 1..=n as u32 {
            let c = &rule.colors()[g[j as usize - 1]];
            let root = Cyclotomic::root(k, sigma.row_root(j) as i64 * c.value);
            w = (&w * &c.weight).scale(&root);
        }
        *acc += &w;
        return;
    }
    for f in 0..rule.colors().len() {
        if take(rule, remaining, f, 1) {
            g[i] = f;
            colorings(rule, sigma, i + 1, g, remaining, acc);
            give_back(rule, remaining, f, 1);
        }
    }
}

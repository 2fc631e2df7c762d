//! Shared machinery for enumerating colorings: resource masks and a fast
//! accumulator for monomial weights.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::ColorRule;
use crate::algebra::{Cyclotomic, LaurentPoly, Vars};

/// A weight `±ζ^zeta x^exps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mono {
    pub zeta: u32,
    pub negative: bool,
    pub exps: Vec<i32>,
}

impl Mono {
    pub fn of(p: &LaurentPoly) -> Option<Mono> {
        if p.len() != 1 {
            return None;
        }
        let (exps, c) = p.terms().next()?;
        let k = p.order();
        for j in 0..k {
            let root = Cyclotomic::root(k, j as i64);
            if *c == root {
                return Some(Mono { zeta: j, negative: false, exps: exps.clone() });
            }
            if *c == -&root {
                return Some(Mono { zeta: j, negative: true, exps: exps.clone() });
            }
        }
        None
    }
}

/// Integer counts of terms `ζ^e x^exps`.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    map: HashMap<(u32, Vec<i32>), i64>,
}

impl Tally {
    pub fn add(&mut self, zeta: u32, exps: &[i32], count: i64) {
        if let Some(v) = self.map.get_mut(&(zeta, exps.to_vec())) {
            *v += count;
        } else {
            self.map.insert((zeta, exps.to_vec()), count);
        }
    }

    pub fn to_poly(&self, vars: &Vars, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::zero(vars, k);
        for ((z, e), &c) in &self.map {
            if c != 0 {
                out.add_term(e.clone(), &Cyclotomic::root(k, *z as i64).scale(&crate::algebra::rat(c)));
            }
        }
        out
    }
}

/// `over[r][t]`: colors that need more than `t` units of resource `r`.
pub(crate) struct Masks {
    over: Vec<Vec<FixedBitSet>>,
    ncolors: usize,
}

impl Masks {
    pub fn new(rule: &ColorRule) -> Masks {
        let ncolors = rule.colors().len();
        let mut top = vec![0u32; rule.capacities().len()];
        for c in rule.colors() {
            for &(r, a) in &c.uses {
                top[r] = top[r].max(a);
            }
        }
        let mut over: Vec<Vec<FixedBitSet>> = top
            .iter()
            .map(|&m| vec![FixedBitSet::with_capacity(ncolors); m as usize])
            .collect();
        for (i, c) in rule.colors().iter().enumerate() {
            for &(r, a) in &c.uses {
                for t in 0..a as usize {
                    over[r][t].insert(i);
                }
            }
        }
        Masks { over, ncolors }
    }

    /// Colors with index at least `from` of which `copies` more copies fit
    /// into `remaining`.
    pub fn allowed(&self, remaining: &[u32], copies: u32, from: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.ncolors);
        set.insert_range(from..self.ncolors);
        for (r, masks) in self.over.iter().enumerate() {
            let t = (remaining[r] / copies) as usize;
            if t < masks.len() {
                set.difference_with(&masks[t]);
            }
        }
        set
    }
}

/// Takes `copies` copies of color `i` out of `remaining`, if they fit.
pub(crate) fn take(rule: &ColorRule, remaining: &mut [u32], i: usize, copies: u32) -> bool {
    let uses = &rule.colors()[i].uses;
    if uses.iter().any(|&(r, a)| remaining[r] < a * copies) {
        return false;
    }
    for &(r, a) in uses {
        remaining[r] -= a * copies;
    }
    true
}

pub(crate) fn give_back(rule: &ColorRule, remaining: &mut [u32], i: usize, copies: u32) {
    for &(r, a) in &rule.colors()[i].uses {
        remaining[r] += a * copies;
    }
}

//! Irreducible decomposition of a color rule's class function.
//!
//! The multiplicity of `χ^γ` is the `ρ`-weighted number of tuples of
//! semistandard tableaux where component `r` holds colors of value `≡ r`.
//! Grouping those tableaux by content, each content contributes its weight
//! times a product of Kostka numbers.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::{Map, Value};

use super::weights::{give_back, take, Masks, Mono, Tally};
use super::ColorRule;
use crate::algebra::{rat, LaurentPoly, Vars};
use crate::characters::{inner_product, CharacterTable, ClassFunction};
use crate::shapes::{enumerate_tuples, for_each_ssyt, kostka, ContentPool, PartitionTuple, Tableau};
use crate::{Budget, Error, Result};

/// A multiset of colors, as `(color index, count)` with increasing indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content {
    pub counts: Vec<(usize, u32)>,
}

impl Content {
    fn from_sorted(seq: &[usize]) -> Content {
        let mut counts: Vec<(usize, u32)> = Vec::new();
        for &f in seq {
            match counts.last_mut() {
                Some((g, c)) if *g == f => *c += 1,
                _ => counts.push((f, 1)),
            }
        }
        Content { counts }
    }

    /// Color ids with repetition.
    pub fn ids(&self, rule: &ColorRule) -> Vec<String> {
        self.counts
            .iter()
            .flat_map(|&(f, c)| std::iter::repeat_n(rule.colors()[f].id.clone(), c as usize))
            .collect()
    }

    /// `∏ ρ(f)^{count}`.
    pub fn weight(&self, rule: &ColorRule) -> LaurentPoly {
        let mut w = LaurentPoly::one(rule.vars(), rule.k());
        for &(f, c) in &self.counts {
            w = &w * &rule.colors()[f].weight.pow(c);
        }
        w
    }

    /// Counts of the colors of each residue, sorted decreasingly.
    fn key(&self, rule: &ColorRule) -> Vec<Vec<u32>> {
        let mut key = vec![Vec::new(); rule.k() as usize];
        for &(f, c) in &self.counts {
            key[rule.residue(f)].push(c);
        }
        for v in &mut key {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        key
    }
}

/// A content, its weight and the number of tableau tuples of a fixed shape
/// with exactly that content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentCount {
    pub content: Content,
    pub weight: LaurentPoly,
    pub tableaux: u64,
}

fn walk_contents(
    rule: &ColorRule,
    budget: &Budget,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    let masks = Masks::new(rule);
    let mut remaining = rule.capacities().to_vec();
    let mut seq = Vec::with_capacity(rule.n() as usize);
    let mut seen: u128 = 0;
    contents_rec(rule, &masks, &mut remaining, &mut seq, budget, &mut seen, visit)
}

fn contents_rec(
    rule: &ColorRule,
    masks: &Masks,
    remaining: &mut [u32],
    seq: &mut Vec<usize>,
    budget: &Budget,
    seen: &mut u128,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    if seq.len() == rule.n() as usize {
        *seen += 1;
        if *seen > budget.max_objects {
            return Err(Error::Budget {
                what: "color contents",
                needed: *seen,
                limit: budget.max_objects,
            });
        }
        visit(seq);
        return Ok(());
    }
    let from = seq.last().copied().unwrap_or(0);
    for f in masks.allowed(remaining, 1, from).ones() {
        take(rule, remaining, f, 1);
        seq.push(f);
        let r = contents_rec(rule, masks, remaining, seq, budget, seen, visit);
        seq.pop();
        give_back(rule, remaining, f, 1);
        r?;
    }
    Ok(())
}

/// Every multiset of `n` colors that fits the multiplicities, in
/// lexicographic order of the sorted color sequences.
pub fn enumerate_contents(rule: &ColorRule, budget: &Budget) -> Result<Vec<Content>> {
    let mut out = Vec::new();
    walk_contents(rule, budget, &mut |seq| out.push(Content::from_sorted(seq)))?;
    Ok(out)
}

/// Multiplicities of the irreducible characters, keyed by shape; zero
/// multiplicities are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: u32,
    pub k: u32,
    pub vars: Vars,
    pub mults: BTreeMap<PartitionTuple, LaurentPoly>,
}

impl Decomposition {
    pub fn get(&self, gamma: &PartitionTuple) -> LaurentPoly {
        self.mults
            .get(gamma)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(&self.vars, self.k))
    }

    pub fn support(&self) -> impl Iterator<Item = &PartitionTuple> {
        self.mults.keys()
    }

    /// True if every multiplicity has nonnegative integer coefficients.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.mults.values().all(LaurentPoly::is_nonnegative_integral)
    }

    /// `{"[[2],[1]]": "q^1 + 1", …}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (g, p) in &self.mults {
            m.insert(g.to_json(), Value::String(p.to_string()));
        }
        Value::Object(m)
    }

    /// `Σ_γ mult(γ) χ^γ` as a class function.
    pub fn synthesize(&self) -> Result<ClassFunction> {
        let table = CharacterTable::cached(self.n, self.k)?;
        let mut values = BTreeMap::new();
        for (c, lambda) in table.classes.iter().enumerate() {
            let mut acc = LaurentPoly::zero(&self.vars, self.k);
            for (g, p) in &self.mults {
                let row = table.row_of(g).expect("shape of the right size");
                acc += &p.scale(&table.values[row][c]);
            }
            values.insert(lambda.clone(), acc);
        }
        Ok(ClassFunction {
            n: self.n,
            k: self.k,
            vars: self.vars.clone(),
            values,
        })
    }
}

enum Acc {
    Fast(Tally),
    General(LaurentPoly),
}

/// [`decompose_with`] under the default budget.
pub fn decompose(rule: &ColorRule) -> Result<Decomposition> {
    decompose_with(rule, &Budget::default())
}

/// Multiplicities by counting tableaux content by content.
pub fn decompose_with(rule: &ColorRule, budget: &Budget) -> Result<Decomposition> {
    let k = rule.k();
    let vars = rule.vars();
    let monos: Option<Vec<Mono>> = rule.colors().iter().map(|c| Mono::of(&c.weight)).collect();
    let mut groups: HashMap<Vec<Vec<u32>>, Acc> = HashMap::new();
    let mut exps = vec![0i32; vars.len()];
    walk_contents(rule, budget, &mut |seq| {
        let content = Content::from_sorted(seq);
        let key = content.key(rule);
        match &monos {
            Some(monos) => {
                let mut zeta = 0u64;
                let mut negative = false;
                exps.iter_mut().for_each(|x| *x = 0);
                for &f in seq {
                    let m = &monos[f];
                    zeta += m.zeta as u64;
                    negative ^= m.negative;
                    for (x, e) in exps.iter_mut().zip(&m.exps) {
                        *x += e;
                    }
                }
                let acc = groups.entry(key).or_insert_with(|| Acc::Fast(Tally::default()));
                if let Acc::Fast(t) = acc {
                    t.add((zeta % k as u64) as u32, &exps, if negative { -1 } else { 1 });
                }
            }
            None => {
                let w = content.weight(rule);
                let acc = groups
                    .entry(key)
                    .or_insert_with(|| Acc::General(LaurentPoly::zero(vars, k)));
                if let Acc::General(p) = acc {
                    *p += &w;
                }
            }
        }
    })?;
    let groups: Vec<(Vec<Vec<u32>>, LaurentPoly)> = groups
        .into_iter()
        .map(|(key, acc)| {
            let p = match acc {
                Acc::Fast(t) => t.to_poly(vars, k),
                Acc::General(p) => p,
            };
            (key, p)
        })
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let shapes = enumerate_tuples(rule.n(), k as usize);
    let mults = shapes
        .par_iter()
        .filter_map(|gamma| {
            let mut acc = LaurentPoly::zero(vars, k);
            for (key, w) in &groups {
                let mut count: u64 = 1;
                for (part, mu) in gamma.components().iter().zip(key) {
                    if count == 0 {
                        break;
                    }
                    count *= kostka(part, mu);
                }
                if count > 0 {
                    acc += &w.scale_rational(&rat(count as i64));
                }
            }
            (!acc.is_zero()).then(|| (gamma.clone(), acc))
        })
        .collect();
    Ok(Decomposition {
        n: rule.n(),
        k,
        vars: vars.clone(),
        mults,
    })
}

/// For the shape `γ`, every content whose residue classes have the sizes
/// of the components of `γ`, with the number of tableau tuples filled by it.
pub fn decompose_by_content(rule: &ColorRule, gamma: &PartitionTuple) -> Result<Vec<ContentCount>> {
    check_shape(rule, gamma)?;
    let sizes = gamma.sizes();
    let mut out = Vec::new();
    for content in enumerate_contents(rule, &Budget::default())? {
        let key = content.key(rule);
        if key.iter().zip(&sizes).any(|(mu, &s)| mu.iter().sum::<u32>() != s) {
            continue;
        }
        let tableaux = gamma
            .components()
            .iter()
            .zip(&key)
            .map(|(p, mu)| kostka(p, mu))
            .product();
        out.push(ContentCount {
            weight: content.weight(rule),
            content,
            tableaux,
        });
    }
    Ok(out)
}

fn check_shape(rule: &ColorRule, gamma: &PartitionTuple) -> Result<()> {
    if gamma.size() != rule.n() || gamma.k() != rule.k() as usize {
        return Err(Error::SizeMismatch(format!(
            "shape {gamma} is not a {}-tuple of size {}",
            rule.k(),
            rule.n()
        )));
    }
    Ok(())
}

struct RulePool<'a> {
    rule: &'a ColorRule,
    remaining: Vec<u32>,
}

impl ContentPool for RulePool<'_> {
    fn take(&mut self, letter: usize) -> bool {
        take(self.rule, &mut self.remaining, letter, 1)
    }

    fn release(&mut self, letter: usize) {
        give_back(self.rule, &mut self.remaining, letter, 1)
    }
}

fn ssyt_k_walk(
    gamma: &PartitionTuple,
    rule: &ColorRule,
    visit: &mut dyn FnMut(&Tableau<usize>),
) -> Result<()> {
    check_shape(rule, gamma)?;
    let mut alphabets = vec![Vec::new(); rule.k() as usize];
    for i in 0..rule.colors().len() {
        alphabets[rule.residue(i)].push(i);
    }
    let mut pool = RulePool {
        rule,
        remaining: rule.capacities().to_vec(),
    };
    for_each_ssyt(gamma, &alphabets, &mut pool, visit);
    Ok(())
}

fn tableau_weight(rule: &ColorRule, t: &Tableau<usize>) -> LaurentPoly {
    let mut w = LaurentPoly::one(rule.vars(), rule.k());
    for (_, &f) in t.cells() {
        w = &w * &rule.colors()[f].weight;
    }
    w
}

/// The tableau tuples of shape `γ` filled with colors of the rule (entries
/// are color indices, ordered as declared), each with its weight `ρ(T)`.
pub fn enumerate_ssyt_k(gamma: &PartitionTuple, rule: &ColorRule) -> Result<Vec<(Tableau<usize>, LaurentPoly)>> {
    let budget = Budget::default();
    let mut out = Vec::new();
    let mut over = false;
    ssyt_k_walk(gamma, rule, &mut |t| {
        if out.len() as u128 >= budget.max_objects {
            over = true;
            return;
        }
        out.push((t.clone(), tableau_weight(rule, t)));
    })?;
    if over {
        return Err(Error::Budget {
            what: "tableaux",
            needed: budget.max_objects + 1,
            limit: budget.max_objects,
        });
    }
    Ok(out)
}

/// Membership in `SSYT_k(γ, F)`: entries are color indices, component `r`
/// holds colors of residue `r`, rows weakly and columns strictly increase in
/// the declared color order, and the content fits the multiplicities.
pub fn is_ssyt_k(rule: &ColorRule, t: &Tableau<usize>) -> bool {
    if check_shape(rule, t.shape()).is_err() || !t.is_semistandard() {
        return false;
    }
    let mut remaining = rule.capacities().to_vec();
    t.cells().into_iter().all(|(c, &f)| {
        f < rule.colors().len() && rule.residue(f) == c.comp && take(rule, &mut remaining, f, 1)
    })
}

/// `Σ_T ρ(T)` over the tableau tuples of shape `γ`, by explicit filling.
pub fn count_ssyt_k(gamma: &PartitionTuple, rule: &ColorRule) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero(rule.vars(), rule.k());
    ssyt_k_walk(gamma, rule, &mut |t| acc += &tableau_weight(rule, t))?;
    Ok(acc)
}

/// Multiplicities as inner products of the class function with every
/// irreducible character.
pub fn brute_force_decompose(rule: &ColorRule, budget: &Budget) -> Result<Decomposition> {
    let (n, k) = (rule.n(), rule.k());
    budget.check_group(n as usize, k)?;
    let table = CharacterTable::cached(n, k)?;
    let phi = super::class_function(rule)?;
    let integral = rule.has_integral_weights();
    let mut mults = BTreeMap::new();
    for gamma in &table.shapes {
        let m = inner_product(&phi, &table.row(gamma)?)?;
        if integral && !m.has_algebraic_integer_coeffs() {
            return Err(Error::NonIntegral(format!("multiplicity of {gamma} is {m}")));
        }
        if !m.is_zero() {
            mults.insert(gamma.clone(), m);
        }
    }
    Ok(Decomposition {
        n,
        k,
        vars: rule.vars().clone(),
        mults,
    })
}

/// `N(γ) = k(|γ⁰| − γ⁰_1) + Σ_i i |γ^i|`.
pub fn n_of(gamma: &PartitionTuple) -> u64 {
    let k = gamma.k() as u64;
    let g0 = gamma.component(0);
    let mut total = k * (g0.size() - g0.row_len(0)) as u64;
    for (i, p) in gamma.components().iter().enumerate() {
        total += i as u64 * p.size() as u64;
    }
    total
}

/// Whether `χ^γ` occurs in the `m`-th tensor power of the defining
/// representation: `m = N(γ) + k r` for some `r ≥ 0`.
pub fn tensor_support(gamma: &PartitionTuple, m: u64) -> bool {
    let n = n_of(gamma);
    m >= n && (m - n).is_multiple_of(gamma.k() as u64)
}

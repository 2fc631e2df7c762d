//! Color rules: finite multisets of colors carrying an integer value and a
//! Laurent polynomial weight. A rule defines a class function by summing the
//! weights of colorings fixed by a group element; its irreducible
//! decomposition is a weighted count of semistandard tableaux.
//!
//! Multiplicities are modelled as resources. A plain color owns one resource
//! whose capacity is its multiplicity. The product of two rules pairs colors,
//! and a pair uses the resources of both factors, so the colorings of a
//! product are exactly the pairs of colorings of the factors.

mod constructors;
mod decompose;
mod evaluate;
mod random;
mod weights;

pub(crate) use weights::{give_back, take};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{variable_names, Cyclotomic, LaurentPoly, Vars};
use crate::{Error, Result};

pub use constructors::{
    basis_rule, defining_power, defining_rule, monomial_rule, natural_rule, tabloid_rule,
    trivial_rule,
};
pub use decompose::{
    brute_force_decompose, count_ssyt_k, decompose, decompose_by_content, decompose_with, enumerate_contents,
    enumerate_ssyt_k, is_ssyt_k, n_of, tensor_support, Content, ContentCount, Decomposition,
};
pub use evaluate::{class_function, evaluate, evaluate_element};
pub use random::random_rule;

/// One entry of a plain rule: `mult` copies of a color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSpec {
    pub id: String,
    pub mult: u32,
    pub value: i64,
    pub weight: LaurentPoly,
}

/// A color together with the resources one copy of it consumes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Color {
    pub id: String,
    pub value: i64,
    pub weight: LaurentPoly,
    /// `(resource, amount)`, resources strictly increasing.
    pub uses: Vec<(usize, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorRule {
    n: u32,
    k: u32,
    vars: Vars,
    colors: Vec<Color>,
    capacities: Vec<u32>,
}

impl ColorRule {
    /// A plain rule; each color gets its own resource.
    pub fn from_specs(n: u32, k: u32, specs: Vec<ColorSpec>) -> Result<Self> {
        let capacities = specs.iter().map(|s| s.mult).collect();
        let colors = specs
            .into_iter()
            .enumerate()
            .map(|(i, s)| Color {
                id: s.id,
                value: s.value,
                weight: s.weight,
                uses: vec![(i, 1)],
            })
            .collect();
        Self::with_resources(n, k, colors, capacities)
    }

    /// A rule with explicit resource usage. Weights are rewritten over the
    /// union of their variables and into `Q(ζ_k)`.
    pub fn with_resources(n: u32, k: u32, colors: Vec<Color>, capacities: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("a color rule needs n >= 1".into()));
        }
        if k == 0 {
            return Err(Error::Invalid("k must be at least 1".into()));
        }
        if capacities.contains(&0) {
            return Err(Error::Invalid("resource capacities must be positive".into()));
        }
        let mut names: Vec<String> = Vec::new();
        for c in &colors {
            for v in c.weight.vars().names() {
                if !names.contains(v) {
                    names.push(v.clone());
                }
            }
        }
        let vars = Vars::new(names);
        let mut out = Vec::with_capacity(colors.len());
        for mut c in colors {
            if c.uses.is_empty() {
                return Err(Error::Invalid(format!("color {} uses no resource", c.id)));
            }
            if c.uses.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(Error::Invalid(format!("color {}: resources must increase", c.id)));
            }
            for &(r, a) in &c.uses {
                if r >= capacities.len() || a == 0 {
                    return Err(Error::Invalid(format!("color {}: bad resource use ({r}, {a})", c.id)));
                }
            }
            c.weight = reorder(&c.weight, k)?.with_vars(&vars)?;
            out.push(c);
        }
        Ok(ColorRule {
            n,
            k,
            vars,
            colors: out,
            capacities,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn capacities(&self) -> &[u32] {
        &self.capacities
    }

    /// Index of the color with this id.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.colors.iter().position(|c| c.id == id)
    }

    /// How many copies of color `i` fit on their own.
    pub fn multiplicity(&self, i: usize) -> u32 {
        self.colors[i]
            .uses
            .iter()
            .map(|&(r, a)| self.capacities[r] / a)
            .min()
            .unwrap_or(0)
    }

    /// True when every color owns a private resource used once per copy.
    pub fn is_plain(&self) -> bool {
        self.capacities.len() == self.colors.len()
            && self.colors.iter().enumerate().all(|(i, c)| c.uses == [(i, 1)])
    }

    /// Residue of a color's value modulo `k`, i.e. the component it may fill.
    pub fn residue(&self, i: usize) -> usize {
        self.colors[i].value.rem_euclid(self.k as i64) as usize
    }

    /// The same colors read in `Z_k' ≀ S_n`.
    pub fn with_k(&self, k: u32) -> Result<Self> {
        Self::with_resources(self.n, k, self.colors.clone(), self.capacities.clone())
    }

    /// Colors paired, values added, weights multiplied; a pair consumes the
    /// resources of both of its entries.
    pub fn product(&self, other: &ColorRule) -> Result<ColorRule> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::SizeMismatch(format!(
                "rules for (n, k) = ({}, {}) and ({}, {})",
                self.n, self.k, other.n, other.k
            )));
        }
        let shift = self.capacities.len();
        let mut names = self.vars.names().to_vec();
        for v in other.vars.names() {
            if !names.contains(v) {
                names.push(v.clone());
            }
        }
        let vars = Vars::new(names);
        let mut colors = Vec::with_capacity(self.colors.len() * other.colors.len());
        for f in &self.colors {
            let wf = f.weight.with_vars(&vars)?;
            for g in &other.colors {
                let mut uses = f.uses.clone();
                uses.extend(g.uses.iter().map(|&(r, a)| (r + shift, a)));
                colors.push(Color {
                    id: format!("({},{})", f.id, g.id),
                    value: f.value + g.value,
                    weight: wf.checked_mul(&g.weight.with_vars(&vars)?)?,
                    uses,
                });
            }
        }
        let mut capacities = self.capacities.clone();
        capacities.extend_from_slice(&other.capacities);
        Self::with_resources(self.n, self.k, colors, capacities)
    }

    /// `self × self × ⋯` (`m` factors); `m = 0` gives the trivial rule.
    pub fn power(&self, m: u32) -> Result<ColorRule> {
        let mut acc = trivial_rule(self.n, self.k);
        if m == 0 {
            return Ok(acc);
        }
        acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// True if every weight is a monomial whose coefficient is a root of
    /// unity up to sign.
    pub fn has_monomial_weights(&self) -> bool {
        self.colors.iter().all(|c| weights::Mono::of(&c.weight).is_some())
    }

    /// True if every weight has coefficients in `Z[ζ_k]`.
    pub fn has_integral_weights(&self) -> bool {
        self.colors.iter().all(|c| c.weight.has_algebraic_integer_coeffs())
    }

    pub fn to_json(&self) -> Value {
        let plain = self.is_plain();
        let colors: Vec<Value> = self
            .colors
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut v = json!({
                    "id": c.id,
                    "mult": self.multiplicity(i),
                    "value": c.value,
                    "weight": c.weight.to_string(),
                });
                if !plain {
                    v["uses"] = json!(c.uses);
                }
                v
            })
            .collect();
        let mut out = json!({
            "n": self.n,
            "k": self.k,
            "vars": self.vars.names(),
            "colors": colors,
        });
        if !plain {
            out["capacities"] = json!(self.capacities);
        }
        out
    }

    /// Reads `{"n", "k", "colors": [{"id", "mult", "value", "weight"}]}`.
    /// `vars` is optional (read off the weights otherwise); `uses` on every
    /// color together with a top-level `capacities` describes a product rule.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawRule = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let names = match raw.vars {
            Some(v) => v,
            None => {
                let mut names: Vec<String> = Vec::new();
                for c in &raw.colors {
                    for v in variable_names(&weight_text(&c.weight))? {
                        if !names.contains(&v) {
                            names.push(v);
                        }
                    }
                }
                names
            }
        };
        let vars = Vars::new(names);
        let parse_weight = |w: &Value| LaurentPoly::parse(&vars, raw.k, &weight_text(w));
        match raw.capacities {
            None => {
                let specs = raw
                    .colors
                    .iter()
                    .map(|c| {
                        if c.uses.is_some() {
                            return Err(Error::Invalid("\"uses\" needs top-level \"capacities\"".into()));
                        }
                        Ok(ColorSpec {
                            id: c.id.clone(),
                            mult: c.mult.ok_or_else(|| Error::Invalid(format!("color {} has no mult", c.id)))?,
                            value: c.value,
                            weight: parse_weight(&c.weight)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                for s in &specs {
                    if s.mult == 0 {
                        return Err(Error::Invalid(format!("color {} has multiplicity 0", s.id)));
                    }
                }
                Self::from_specs(raw.n, raw.k, specs)
            }
            Some(capacities) => {
                let colors = raw
                    .colors
                    .iter()
                    .map(|c| {
                        Ok(Color {
                            id: c.id.clone(),
                            value: c.value,
                            weight: parse_weight(&c.weight)?,
                            uses: c
                                .uses
                                .clone()
                                .ok_or_else(|| Error::Invalid(format!("color {} has no \"uses\"", c.id)))?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::with_resources(raw.n, raw.k, colors, capacities)
            }
        }
    }
}

#[derive(Deserialize, Serialize)]
struct RawColor {
    id: String,
    #[serde(default)]
    mult: Option<u32>,
    #[serde(default)]
    value: i64,
    #[serde(default = "one_weight")]
    weight: Value,
    #[serde(default)]
    uses: Option<Vec<(usize, u32)>>,
}

#[derive(Deserialize, Serialize)]
struct RawRule {
    n: u32,
    k: u32,
    #[serde(default)]
    vars: Option<Vec<String>>,
    colors: Vec<RawColor>,
    #[serde(default)]
    capacities: Option<Vec<u32>>,
}

fn one_weight() -> Value {
    Value::from("1")
}

/// Weights may be given as strings or bare numbers.
fn weight_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Moves a weight into `Q(ζ_k)`: embedding when its order divides `k`,
/// otherwise only rational coefficients can be carried over.
fn reorder(p: &LaurentPoly, k: u32) -> Result<LaurentPoly> {
    let order = p.order();
    if order == k {
        return Ok(p.clone());
    }
    if k.is_multiple_of(order) {
        return p.embed(k);
    }
    let mut out = LaurentPoly::zero(p.vars(), k);
    for (e, c) in p.terms() {
        let r = c.as_rational().ok_or(Error::OrderMismatch(order, k))?;
        out.add_term(e.clone(), &Cyclotomic::from_rational(k, r.clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_plain_and_product() {
        let text = r#"{"n":3,"k":2,"colors":[{"id":"a","mult":2,"value":1,"weight":"q^2"},{"id":"b","mult":3,"value":0,"weight":1}]}"#;
        let f = ColorRule::from_json(text).unwrap();
        assert!(f.is_plain());
        assert_eq!(f.vars().names(), ["q"]);
        assert_eq!(f.multiplicity(0), 2);
        let back = ColorRule::from_json(&f.to_json().to_string()).unwrap();
        assert_eq!(back, f);
        let g = f.product(&f).unwrap();
        assert!(!g.is_plain());
        assert_eq!(g.colors().len(), 4);
        assert_eq!(g.colors()[0].value, 2);
        assert_eq!(g.colors()[0].weight.to_string(), "q^4");
        let back = ColorRule::from_json(&g.to_json().to_string()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn bad_rules_are_rejected() {
        assert!(ColorRule::from_json(r#"{"n":0,"k":1,"colors":[]}"#).is_err());
        assert!(ColorRule::from_json(r#"{"n":1,"k":1,"colors":[{"id":"a","mult":0}]}"#).is_err());
        assert!(ColorRule::from_json(r#"{"n":1,"k":1,"colors":[{"id":"a"}]}"#).is_err());
        assert!(ColorRule::from_json(r#"{"n":1,"k":1,"colors":[{"id":"a","uses":[[0,1]]}],"capacities":[0]}"#).is_err());
    }

    #[test]
    fn product_with_trivial_keeps_colors() {
        let f = defining_rule(3, 2);
        let g = f.product(&trivial_rule(3, 2)).unwrap();
        assert_eq!(g.colors().len(), f.colors().len());
        for (a, b) in f.colors().iter().zip(g.colors()) {
            assert_eq!(a.value, b.value);
            assert_eq!(a.weight, b.weight);
        }
    }
}

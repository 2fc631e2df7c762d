//! Named color rules.

use super::{Color, ColorRule, ColorSpec};
use crate::algebra::{LaurentPoly, Vars};
use crate::shapes::{Partition, PartitionTuple};

fn plain(n: u32, k: u32, specs: Vec<ColorSpec>) -> ColorRule {
    ColorRule::from_specs(n, k, specs).expect("well-formed named rule")
}

fn unit(vars: &Vars, k: u32) -> LaurentPoly {
    LaurentPoly::one(vars, k)
}

/// `[e^n]` with value 0 and weight 1: the trivial character.
pub fn trivial_rule(n: u32, k: u32) -> ColorRule {
    let vars = Vars::none();
    plain(
        n,
        k,
        vec![ColorSpec {
            id: "e".into(),
            mult: n,
            value: 0,
            weight: unit(&vars, k),
        }],
    )
}

/// `[1, ∅^{n-1}]` with `p(1) = 1`, `p(∅) = 0`: the defining representation.
pub fn defining_rule(n: u32, k: u32) -> ColorRule {
    let vars = Vars::none();
    let mut specs = vec![ColorSpec {
        id: "1".into(),
        mult: 1,
        value: 1,
        weight: unit(&vars, k),
    }];
    if n > 1 {
        specs.push(ColorSpec {
            id: "∅".into(),
            mult: n - 1,
            value: 0,
            weight: unit(&vars, k),
        });
    }
    plain(n, k, specs)
}

/// The `m`-fold product of the defining rule. Colors are the subsets `S`
/// of `{1..m}`, value `|S|`; a coloring is a set partition of `{1..m}`
/// into at most `n` blocks, empty blocks allowed.
pub fn defining_power(n: u32, k: u32, m: u32) -> ColorRule {
    if m == 0 {
        return trivial_rule(n, k);
    }
    let base = defining_rule(n, k);
    let per = base.capacities().len();
    let rule = base.power(m).expect("same group");
    let colors = rule
        .colors()
        .iter()
        .map(|c| {
            // resource `per * j` is the "1" of factor j
            let members: Vec<String> = c
                .uses
                .iter()
                .filter(|&&(r, _)| r % per == 0)
                .map(|&(r, _)| (r / per + 1).to_string())
                .collect();
            Color {
                id: format!("{{{}}}", members.join(",")),
                ..c.clone()
            }
        })
        .collect();
    ColorRule::with_resources(n, k, colors, rule.capacities().to_vec()).expect("relabelled rule")
}

/// Young tabloids of content `μ`: `[1^{μ_1}, 2^{μ_2}, …]` for `S_n`.
pub fn tabloid_rule(n: u32, mu: &Partition) -> ColorRule {
    let vars = Vars::none();
    let specs = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &m)| ColorSpec {
            id: (i + 1).to_string(),
            mult: m,
            value: 0,
            weight: unit(&vars, 1),
        })
        .collect();
    plain(n, 1, specs)
}

/// Colors are the multisets `[1^{a_1}, …, m^{a_m}]` with `a ≤ d`
/// componentwise, weight `t1^{a_1} ⋯ tm^{a_m}`, each available `n` times.
/// The coefficient of `t^d` in a multiplicity counts the tableaux whose
/// entries are multisets with union `[1^{d_1}, …, m^{d_m}]`.
pub fn monomial_rule(n: u32, d: &[u32]) -> ColorRule {
    let vars = Vars::new((1..=d.len()).map(|i| format!("t{i}")));
    let mut specs = Vec::new();
    let mut a = vec![0u32; d.len()];
    loop {
        let id = a
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| format!("{}^{}", i + 1, x))
            .collect::<Vec<_>>()
            .join(",");
        let exps = a.iter().map(|&x| x as i32).collect();
        specs.push(ColorSpec {
            id: format!("[{id}]"),
            mult: n,
            value: 0,
            weight: LaurentPoly::monomial(&vars, exps, crate::algebra::Cyclotomic::one(1)),
        });
        // odometer over 0..=d_i
        let mut i = 0;
        while i < a.len() && a[i] == d[i] {
            a[i] = 0;
            i += 1;
        }
        if i == a.len() {
            break;
        }
        a[i] += 1;
    }
    plain(n, 1, specs)
}

/// `N_d = [0^n, 1^n, …, d^n]` with `p(i) = i` and `ρ(i) = q^i`.
pub fn natural_rule(n: u32, k: u32, d: u32) -> ColorRule {
    let vars = Vars::new(["q"]);
    let specs = (0..=d)
        .map(|i| ColorSpec {
            id: i.to_string(),
            mult: n,
            value: i as i64,
            weight: LaurentPoly::var(&vars, k, "q", i as i32).expect("q declared"),
        })
        .collect();
    plain(n, k, specs)
}

/// `F^λ = [f_{i,j}^{λ^i_j}]` with `p(f_{i,j}) = i` and weight 1.
pub fn basis_rule(lambda: &PartitionTuple) -> ColorRule {
    let k = lambda.k() as u32;
    let vars = Vars::none();
    let mut specs = Vec::new();
    for (i, p) in lambda.components().iter().enumerate() {
        for (j, &m) in p.parts().iter().enumerate() {
            specs.push(ColorSpec {
                id: format!("f{},{}", i, j + 1),
                mult: m,
                value: i as i64,
                weight: unit(&vars, k),
            });
        }
    }
    plain(lambda.size(), k, specs)
}

//! Decorated rim hook tableaux: rim hook tableaux whose hooks carry the
//! cycles of a colored permutation and a color each. A sign-reversing
//! involution `psi` and an order `k` map `psi_prime` cancel them down to
//! semistandard fillings, one copy for every group element.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Cyclotomic, LaurentPoly, Rational};
use crate::characters::CharacterTable;
use crate::color_rules::{class_function, count_ssyt_k, enumerate_ssyt_k, give_back, take, ColorRule};
use crate::shapes::{enumerate_rht, removable_rim_hooks, RimHook, RimHookTableau, PartitionTuple, Tableau};
use crate::wreath::{enumerate_group, ColoredPermutation, Cycle};
use crate::{Budget, Error, Result};

/// Largest `n` the lab enumerates.
pub const MAX_N: u32 = 5;

/// The content of one cell: an index of `[n]` and the exponent of the root
/// of unity written in front of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Entry {
    pub index: u32,
    pub root: u32,
}

/// One hook: its cells in path order, the cycle written along it and the
/// index of its color in the rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DecoratedHook {
    pub comp: usize,
    pub cells: Vec<(usize, usize)>,
    pub entries: Vec<Entry>,
    pub color: usize,
}

impl DecoratedHook {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn min_index(&self) -> u32 {
        self.entries.iter().map(|e| e.index).min().unwrap_or(0)
    }

    pub fn south_steps(&self) -> usize {
        RimHook { comp: self.comp, cells: self.cells.clone() }.south_steps()
    }

    fn sort_key(&self) -> (Reverse<usize>, u32) {
        (Reverse(self.color), self.min_index())
    }
}

/// A decorated rim hook tableau. Hooks are kept in placement order: larger
/// color indices first, within a color by increasing smallest index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DecoratedRht {
    shape: PartitionTuple,
    k: u32,
    hooks: Vec<DecoratedHook>,
}

type Site = (usize, usize, usize);

impl DecoratedRht {
    /// Puts the hooks into placement order. No other checks; see
    /// [`DecoratedRht::validate`].
    pub fn new(shape: PartitionTuple, k: u32, mut hooks: Vec<DecoratedHook>) -> Self {
        hooks.sort_by_key(DecoratedHook::sort_key);
        DecoratedRht { shape, k, hooks }
    }

    pub fn shape(&self) -> &PartitionTuple {
        &self.shape
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn hooks(&self) -> &[DecoratedHook] {
        &self.hooks
    }

    pub fn n(&self) -> usize {
        self.shape.size() as usize
    }

    pub fn south_steps(&self) -> usize {
        self.hooks.iter().map(DecoratedHook::south_steps).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.south_steps().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True when no hook has a South step.
    pub fn is_flat(&self) -> bool {
        self.south_steps() == 0
    }

    pub fn rim_hook_tableau(&self) -> RimHookTableau {
        RimHookTableau {
            shape: self.shape.clone(),
            hooks: self
                .hooks
                .iter()
                .map(|h| RimHook { comp: h.comp, cells: h.cells.clone() })
                .collect(),
        }
    }

    /// The hooks read as cycles.
    pub fn cycles(&self) -> Vec<Cycle> {
        self.hooks
            .iter()
            .map(|h| Cycle { entries: h.entries.iter().map(|e| (e.index, e.root)).collect() })
            .collect()
    }

    /// The colored permutation whose cycles are the hooks.
    pub fn permutation(&self) -> Result<ColoredPermutation> {
        ColoredPermutation::from_cycles(self.n(), self.k, &self.cycles())
    }

    /// `(-1)^{South steps} ∏_i ζ^{r_i (p(f_i) - b_i)} ρ(f_i)` over the cells,
    /// `b_i` the component of the cell.
    pub fn weight(&self, rule: &ColorRule) -> Result<LaurentPoly> {
        if rule.k() != self.k {
            return Err(Error::OrderMismatch(rule.k(), self.k));
        }
        let k = self.k;
        let mut zeta = 0i64;
        let mut w = LaurentPoly::one(rule.vars(), k);
        for h in &self.hooks {
            let c = rule
                .colors()
                .get(h.color)
                .ok_or_else(|| Error::Invalid(format!("no color with index {}", h.color)))?;
            for e in &h.entries {
                zeta += e.root as i64 * (c.value - h.comp as i64);
                w = &w * &c.weight;
            }
        }
        let mut root = Cyclotomic::root(k, zeta);
        if self.sign() < 0 {
            root = -root;
        }
        Ok(w.scale(&root))
    }

    /// Checks that the object belongs to `P(γ, F)`: hooks in placement
    /// order, each removable after the ones before it, each starting at its
    /// smallest index, indices exactly `1..=n` and colors within capacity.
    pub fn validate(&self, rule: &ColorRule) -> Result<()> {
        if rule.k() != self.k || self.shape.k() != self.k as usize {
            return Err(Error::SizeMismatch("object and rule use different k".into()));
        }
        if rule.n() as usize != self.n() {
            return Err(Error::SizeMismatch("object and rule use different n".into()));
        }
        if self.hooks.windows(2).any(|w| w[0].sort_key() >= w[1].sort_key()) {
            return Err(Error::Invalid("hooks are not in placement order".into()));
        }
        let mut seen = vec![false; self.n() + 1];
        for h in &self.hooks {
            if h.is_empty() || h.entries.len() != h.cells.len() {
                return Err(Error::Invalid("hook with mismatched entries".into()));
            }
            if h.color >= rule.colors().len() || h.comp >= self.shape.k() {
                return Err(Error::Invalid("hook color or component out of range".into()));
            }
            if h.entries[0].index != h.min_index() {
                return Err(Error::Invalid("hook does not start at its smallest index".into()));
            }
            for e in &h.entries {
                let i = e.index as usize;
                if i == 0 || i > self.n() || seen[i] || e.root >= self.k {
                    return Err(Error::Invalid(format!("bad entry {i}")));
                }
                seen[i] = true;
            }
        }
        let mut cur = self.shape.components().to_vec();
        for h in &self.hooks {
            let next = removable_rim_hooks(&cur[h.comp], h.len())
                .into_iter()
                .find(|(_, cells)| *cells == h.cells)
                .map(|(rest, _)| rest);
            match next {
                Some(rest) => cur[h.comp] = rest,
                None => return Err(Error::Invalid("hooks do not form a rim hook tableau".into())),
            }
        }
        let mut remaining = rule.capacities().to_vec();
        for h in &self.hooks {
            if !take(rule, &mut remaining, h.color, h.len() as u32) {
                return Err(Error::Invalid("colors exceed their multiplicities".into()));
            }
        }
        Ok(())
    }

    /// Cell to `(hook, position along the hook)`.
    fn locate(&self) -> HashMap<Site, (usize, usize)> {
        let mut out = HashMap::new();
        for (h, hook) in self.hooks.iter().enumerate() {
            for (t, &(r, c)) in hook.cells.iter().enumerate() {
                out.insert((hook.comp, r, c), (h, t));
            }
        }
        out
    }

    fn entry_at(&self, loc: &HashMap<Site, (usize, usize)>, site: Site) -> (Entry, usize) {
        let (h, t) = loc[&site];
        (self.hooks[h].entries[t], self.hooks[h].color)
    }

    /// The colors as a tableau of color indices.
    pub fn colors_tableau(&self) -> Tableau<usize> {
        let mut rows = rows_of(&self.shape, 0usize);
        for h in &self.hooks {
            for &(r, c) in &h.cells {
                rows[h.comp][r][c] = h.color;
            }
        }
        Tableau::from_rows(rows).expect("shape rows")
    }

    /// ASCII drawing of the corner-to-corner diagram. Cells show `u<r>:<i>`
    /// (the root is omitted when trivial) and `/<color id>`; `-` and `|`
    /// join consecutive cells of one hook; `[]` marks an empty component.
    pub fn render(&self, rule: &ColorRule) -> String {
        let (w, h) = self.shape.extent();
        let loc = self.locate();
        let mut grid: HashMap<(usize, usize), Site> = HashMap::new();
        for cell in self.shape.cells() {
            grid.insert((cell.x, cell.y), (cell.comp, cell.row, cell.col));
        }
        let placeholders: HashSet<(usize, usize)> =
            self.shape.placeholders().into_iter().map(|(_, x, y)| (x, y)).collect();
        let token = |site: Site| {
            let (e, color) = self.entry_at(&loc, site);
            let id = rule.colors().get(color).map_or_else(|| format!("#{color}"), |c| c.id.clone());
            if e.root == 0 {
                format!("{}/{}", e.index, id)
            } else {
                format!("u{}:{}/{}", e.root, e.index, id)
            }
        };
        let width = grid.values().map(|&s| token(s).len()).max().unwrap_or(2).max(2);
        let joined = |a: Site, b: Site| {
            let (ha, ta) = loc[&a];
            let (hb, tb) = loc[&b];
            ha == hb && ta + 1 == tb
        };
        let mut lines = Vec::new();
        for y in (0..h).rev() {
            let mut line = String::new();
            let mut below = String::new();
            for x in 0..w {
                let text = match grid.get(&(x, y)) {
                    Some(&s) => token(s),
                    None if placeholders.contains(&(x, y)) => "[]".to_string(),
                    None => String::new(),
                };
                line.push_str(&format!("{text:^width$}"));
                let east = match (grid.get(&(x, y)), grid.get(&(x + 1, y))) {
                    (Some(&a), Some(&b)) if joined(a, b) => '-',
                    _ => ' ',
                };
                line.push(east);
                let south = match (grid.get(&(x, y)), y.checked_sub(1).and_then(|y1| grid.get(&(x, y1)))) {
                    (Some(&a), Some(&b)) if joined(a, b) => "|",
                    _ => "",
                };
                below.push_str(&format!("{south:^width$} "));
            }
            lines.push(line.trim_end().to_string());
            if y > 0 {
                lines.push(below.trim_end().to_string());
            }
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }

    pub fn to_json(&self, rule: &ColorRule) -> Value {
        json!({
            "shape": self.shape,
            "k": self.k,
            "hooks": self.hooks.iter().map(|h| json!({
                "comp": h.comp,
                "cells": h.cells,
                "entries": h.entries.iter().map(|e| [e.index, e.root]).collect::<Vec<_>>(),
                "color": rule.colors().get(h.color).map(|c| c.id.clone()),
            })).collect::<Vec<_>>(),
            "south_steps": self.south_steps(),
            "weight": self.weight(rule).map(|w| w.to_string()).ok(),
        })
    }
}

fn rows_of<T: Clone>(shape: &PartitionTuple, fill: T) -> Vec<Vec<Vec<T>>> {
    shape
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&l| vec![fill.clone(); l as usize]).collect())
        .collect()
}

/// Bottom row of the drawing first, left to right, then upward. Components
/// occupy disjoint rows of the drawing, so this runs through the last
/// component first.
pub fn scan_order(shape: &PartitionTuple) -> Vec<Site> {
    let mut out = Vec::with_capacity(shape.size() as usize);
    for (comp, p) in shape.components().iter().enumerate().rev() {
        for row in 0..p.len() {
            for col in 0..p.row_len(row) as usize {
                out.push((comp, row, col));
            }
        }
    }
    out
}

/// Top to bottom, left to right: the first component first, each from its
/// top row down.
pub fn reading_order(shape: &PartitionTuple) -> Vec<Site> {
    let mut out = Vec::with_capacity(shape.size() as usize);
    for (comp, p) in shape.components().iter().enumerate() {
        for row in (0..p.len()).rev() {
            for col in 0..p.row_len(row) as usize {
                out.push((comp, row, col));
            }
        }
    }
    out
}

type Item = ((usize, usize), Entry);

#[derive(Clone, Debug)]
struct Piece {
    comp: usize,
    color: usize,
    items: Vec<Item>,
}

impl Piece {
    fn of(h: &DecoratedHook) -> Piece {
        Piece {
            comp: h.comp,
            color: h.color,
            items: h.cells.iter().copied().zip(h.entries.iter().copied()).collect(),
        }
    }

    fn with(&self, items: Vec<Item>) -> Piece {
        Piece { comp: self.comp, color: self.color, items }
    }

    fn min(&self) -> u32 {
        self.items.iter().map(|it| it.1.index).min().unwrap_or(u32::MAX)
    }

    fn into_hook(self) -> DecoratedHook {
        let (cells, entries) = self.items.into_iter().unzip();
        DecoratedHook { comp: self.comp, cells, entries, color: self.color }
    }
}

fn find_piece(pieces: &[Piece], comp: usize, cell: (usize, usize)) -> Option<(usize, usize)> {
    pieces.iter().enumerate().find_map(|(h, p)| {
        if p.comp != comp {
            return None;
        }
        p.items.iter().position(|it| it.0 == cell).map(|t| (h, t))
    })
}

/// Cuts before every entry smaller than all entries before it.
fn split_at_minima(piece: Piece) -> Vec<Piece> {
    let mut out: Vec<Vec<Item>> = Vec::new();
    let mut low = u32::MAX;
    for it in &piece.items {
        if it.1.index < low {
            low = it.1.index;
            out.push(Vec::new());
        }
        out.last_mut().expect("started").push(*it);
    }
    out.into_iter().map(|items| piece.with(items)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    /// The cell above `c` belongs to the same hook.
    Disconnect,
    /// The cell above `c` ends a hook of the same color.
    Connect,
}

fn find_move(p: &DecoratedRht) -> Option<(Move, Site)> {
    let loc = p.locate();
    for (comp, row, col) in scan_order(&p.shape) {
        let Some(&(ha, ta)) = loc.get(&(comp, row + 1, col)) else {
            continue;
        };
        let (hc, _) = loc[&(comp, row, col)];
        if ha == hc {
            return Some((Move::Disconnect, (comp, row, col)));
        }
        if ta + 1 == p.hooks[ha].len() && p.hooks[ha].color == p.hooks[hc].color {
            return Some((Move::Connect, (comp, row, col)));
        }
    }
    None
}

/// The sign-reversing involution. Scans for the first cell `c` whose upper
/// neighbour either lies in the same hook (cut the hook there) or ends a
/// hook of the same color (join through `c`), then repairs the neighbouring
/// hooks so that the move can be undone. Objects with no such cell are fixed.
pub fn psi(p: &DecoratedRht) -> DecoratedRht {
    let Some((mv, (comp, row, col))) = find_move(p) else {
        return p.clone();
    };
    let mut pieces: Vec<Piece> = p.hooks.iter().map(Piece::of).collect();
    match mv {
        Move::Disconnect => {
            let (h, t) = find_piece(&pieces, comp, (row, col)).expect("cell in a hook");
            let hook = pieces.swap_remove(h);
            pieces.push(hook.with(hook.items[..t].to_vec()));
            let mut xi = hook.with(hook.items[t..].to_vec());
            let first = xi.items[0].1.index;
            if col > 0 {
                let west = pieces.iter().position(|z| {
                    z.comp == comp
                        && z.color == hook.color
                        && z.items.last().map(|it| it.0) == Some((row, col - 1))
                        && first > z.min()
                });
                if let Some(z) = west {
                    let z = pieces.swap_remove(z);
                    let mut items = z.items;
                    items.extend(xi.items);
                    xi.items = items;
                }
            }
            pieces.extend(split_at_minima(xi));
        }
        Move::Connect => {
            let (ha, _) = find_piece(&pieces, comp, (row + 1, col)).expect("cell above in a hook");
            let above = pieces.swap_remove(ha);
            let (h, t) = find_piece(&pieces, comp, (row, col)).expect("cell in a hook");
            let hook = pieces.swap_remove(h);
            if t > 0 {
                pieces.push(hook.with(hook.items[..t].to_vec()));
            }
            let mut zeta = above.clone();
            zeta.items.extend_from_slice(&hook.items[t..]);
            loop {
                let (r, c) = zeta.items.last().expect("nonempty").0;
                let low = zeta.min();
                let next = pieces.iter().position(|x| {
                    x.comp == comp
                        && x.color == zeta.color
                        && x.items[0].0 == (r, c + 1)
                        && low < x.min()
                });
                match next {
                    Some(x) => {
                        let x = pieces.swap_remove(x);
                        zeta.items.extend(x.items);
                    }
                    None => break,
                }
            }
            pieces.push(zeta);
        }
    }
    DecoratedRht::new(
        p.shape.clone(),
        p.k,
        pieces.into_iter().map(Piece::into_hook).collect(),
    )
}

pub fn is_psi_fixed(p: &DecoratedRht) -> bool {
    find_move(p).is_none()
}

/// On fixed points of [`psi`]: multiplies the root of the first cell (in
/// scan order) whose color value is not congruent to its component by `ζ`.
/// Objects without such a cell are returned unchanged.
pub fn psi_prime(p: &DecoratedRht, rule: &ColorRule) -> Result<DecoratedRht> {
    if !is_psi_fixed(p) {
        return Err(Error::Contract("psi_prime is only defined on fixed points of psi".into()));
    }
    let loc = p.locate();
    for site in scan_order(&p.shape) {
        let (h, t) = loc[&site];
        if rule.residue(p.hooks[h].color) != site.0 {
            let mut q = p.clone();
            let e = &mut q.hooks[h].entries[t];
            e.root = (e.root + 1) % p.k;
            return Ok(q);
        }
    }
    Ok(p.clone())
}

/// Fixed by both maps: no move for `psi` and every color sitting in the
/// component given by its value mod `k`.
pub fn is_final(p: &DecoratedRht, rule: &ColorRule) -> bool {
    is_psi_fixed(p) && p.hooks.iter().all(|h| rule.residue(h.color) == h.comp)
}

fn check_sizes(gamma: &PartitionTuple, rule: &ColorRule, budget: &Budget) -> Result<()> {
    if gamma.k() != rule.k() as usize || gamma.size() != rule.n() {
        return Err(Error::SizeMismatch(format!(
            "shape {gamma} does not match a rule for n = {}, k = {}",
            rule.n(),
            rule.k()
        )));
    }
    if rule.n() > MAX_N {
        return Err(Error::Budget {
            what: "involution lab size n",
            needed: rule.n() as u128,
            limit: MAX_N as u128,
        });
    }
    budget.check_group(rule.n() as usize, rule.k())
}

/// Color choices, one per cycle, within the multiplicities.
fn colorings(rule: &ColorRule, lens: &[usize]) -> Vec<Vec<usize>> {
    fn rec(
        rule: &ColorRule,
        lens: &[usize],
        remaining: &mut [u32],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(&len) = lens.get(cur.len()) else {
            out.push(cur.clone());
            return;
        };
        for c in 0..rule.colors().len() {
            if take(rule, remaining, c, len as u32) {
                cur.push(c);
                rec(rule, lens, remaining, cur, out);
                cur.pop();
                give_back(rule, remaining, c, len as u32);
            }
        }
    }
    let mut out = Vec::new();
    rec(rule, lens, &mut rule.capacities().to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Every object of `P(γ, F)`: for each group element, each coloring of its
/// cycles and each rim hook tableau whose hook lengths follow the cycles in
/// placement order.
pub fn enumerate_objects(gamma: &PartitionTuple, rule: &ColorRule, budget: &Budget) -> Result<Vec<DecoratedRht>> {
    check_sizes(gamma, rule, budget)?;
    let n = rule.n() as usize;
    let k = rule.k();
    let mut color_cache: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    let mut rht_cache: HashMap<Vec<usize>, Vec<RimHookTableau>> = HashMap::new();
    let mut out = Vec::new();
    for sigma in enumerate_group(n, k, budget)? {
        let cycles = sigma.cycles();
        let lens: Vec<usize> = cycles.iter().map(Cycle::len).collect();
        let choices = color_cache.entry(lens.clone()).or_insert_with(|| colorings(rule, &lens));
        for choice in choices.iter() {
            let mut order: Vec<usize> = (0..cycles.len()).collect();
            order.sort_by_key(|&i| (Reverse(choice[i]), cycles[i].min_index()));
            let placed: Vec<usize> = order.iter().map(|&i| lens[i]).collect();
            let rhts = match rht_cache.get(&placed) {
                Some(r) => r,
                None => {
                    let r = enumerate_rht(gamma, &placed)?;
                    rht_cache.entry(placed).or_insert(r)
                }
            };
            for rht in rhts {
                let hooks = rht
                    .hooks
                    .iter()
                    .zip(&order)
                    .map(|(h, &i)| DecoratedHook {
                        comp: h.comp,
                        cells: h.cells.clone(),
                        entries: cycles[i].entries.iter().map(|&(index, root)| Entry { index, root }).collect(),
                        color: choice[i],
                    })
                    .collect();
                out.push(DecoratedRht { shape: gamma.clone(), k, hooks });
                if out.len() as u128 > budget.max_objects {
                    return Err(Error::Budget {
                        what: "decorated tableaux",
                        needed: out.len() as u128,
                        limit: budget.max_objects,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Writes `σ` into the cells of `t` in reading order (`u^{a_i} σ_i` into
/// the `i`-th cell) and cuts each row into hooks: a cell joins its left
/// neighbour when both have the same color and its index is not a new
/// minimum of that run of the row.
pub fn reconstruct(t: &Tableau<usize>, sigma: &ColoredPermutation) -> Result<DecoratedRht> {
    let shape = t.shape().clone();
    if shape.k() != sigma.k() as usize || shape.size() as usize != sigma.n() {
        return Err(Error::SizeMismatch("tableau and element do not match".into()));
    }
    let mut entries = rows_of(&shape, Entry { index: 0, root: 0 });
    for (pos, &(comp, row, col)) in reading_order(&shape).iter().enumerate() {
        entries[comp][row][col] = Entry {
            index: sigma.images()[pos],
            root: sigma.colors()[pos],
        };
    }
    let mut hooks = Vec::new();
    for (comp, rows) in entries.iter().enumerate() {
        for (row, cells) in rows.iter().enumerate() {
            let mut low = u32::MAX;
            for (col, &e) in cells.iter().enumerate() {
                let color = *t.get(comp, row, col).expect("same shape");
                let continues = col > 0 && *t.get(comp, row, col - 1).expect("same shape") == color;
                if !continues {
                    low = u32::MAX;
                }
                if e.index < low {
                    low = e.index;
                    hooks.push(DecoratedHook { comp, cells: Vec::new(), entries: Vec::new(), color });
                }
                let h: &mut DecoratedHook = hooks.last_mut().expect("started");
                h.cells.push((row, col));
                h.entries.push(e);
            }
        }
    }
    Ok(DecoratedRht::new(shape, sigma.k(), hooks))
}

/// Inverse of [`reconstruct`] on flat objects: the color tableau and the
/// element read off the cells in reading order.
pub fn deconstruct(p: &DecoratedRht) -> Result<(Tableau<usize>, ColoredPermutation)> {
    let loc = p.locate();
    let (images, colors) = reading_order(&p.shape)
        .into_iter()
        .map(|site| {
            let (e, _) = p.entry_at(&loc, site);
            (e.index, e.root)
        })
        .unzip();
    Ok((p.colors_tableau(), ColoredPermutation::new(p.k, images, colors)?))
}

/// The final fixed points, built as `reconstruct(T, σ)` over all
/// semistandard `k`-tableaux `T` and all group elements `σ`.
pub fn final_fixed_points(gamma: &PartitionTuple, rule: &ColorRule, budget: &Budget) -> Result<Vec<DecoratedRht>> {
    check_sizes(gamma, rule, budget)?;
    let n = rule.n() as usize;
    let tableaux = enumerate_ssyt_k(gamma, rule)?;
    let needed = tableaux.len() as u128 * crate::budget::group_order(n, rule.k());
    if needed > budget.max_objects {
        return Err(Error::Budget {
            what: "decorated tableaux",
            needed,
            limit: budget.max_objects,
        });
    }
    let group: Vec<ColoredPermutation> = enumerate_group(n, rule.k(), budget)?.collect();
    let mut out = Vec::with_capacity(needed as usize);
    for (t, _) in &tableaux {
        for sigma in &group {
            out.push(reconstruct(t, sigma)?);
        }
    }
    Ok(out)
}

/// Outcome of running every step of the cancellation argument on one
/// shape and rule.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub shape: PartitionTuple,
    pub objects: usize,
    /// Enumerated objects failing [`DecoratedRht::validate`].
    pub invalid: usize,
    /// Objects with `psi(psi(P)) != P` or an invalid image.
    pub not_involutive: usize,
    /// Moved objects whose partner does not differ by exactly one South step
    /// with opposite weight.
    pub sign_failures: usize,
    pub psi_fixed: usize,
    /// Fixed points of `psi` that have South steps or whose colors are not
    /// semistandard.
    pub bad_fixed: usize,
    /// Non-final fixed points whose orbit under `psi_prime` is not of size
    /// `k` with weights summing to zero.
    pub orbit_failures: usize,
    pub final_fixed: usize,
    /// `|SSYT_k(γ, F)| · n! kⁿ`.
    pub reconstructed: usize,
    /// Reconstructed objects coincide with the final fixed points and
    /// deconstruct back to their inputs.
    pub bijection: bool,
    pub total_weight: LaurentPoly,
    pub psi_fixed_weight: LaurentPoly,
    pub final_weight: LaurentPoly,
    /// `Σ_λ |C_λ| χ^F(λ) conj(χ^γ(λ))`.
    pub class_sum: LaurentPoly,
    /// `n! kⁿ Σ_T ρ(T)`.
    pub expected: LaurentPoly,
}

impl AuditReport {
    pub fn holds(&self) -> bool {
        self.invalid == 0
            && self.not_involutive == 0
            && self.sign_failures == 0
            && self.bad_fixed == 0
            && self.orbit_failures == 0
            && self.bijection
            && self.final_fixed == self.reconstructed
            && self.total_weight == self.class_sum
            && self.total_weight == self.psi_fixed_weight
            && self.psi_fixed_weight == self.final_weight
            && self.final_weight == self.expected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.shape,
            "objects": self.objects,
            "invalid": self.invalid,
            "not_involutive": self.not_involutive,
            "sign_failures": self.sign_failures,
            "psi_fixed": self.psi_fixed,
            "bad_fixed": self.bad_fixed,
            "orbit_failures": self.orbit_failures,
            "final_fixed": self.final_fixed,
            "reconstructed": self.reconstructed,
            "bijection": self.bijection,
            "total_weight": self.total_weight.to_string(),
            "psi_fixed_weight": self.psi_fixed_weight.to_string(),
            "final_weight": self.final_weight.to_string(),
            "class_sum": self.class_sum.to_string(),
            "expected": self.expected.to_string(),
            "holds": self.holds(),
        })
    }
}

fn sum(vars: &crate::algebra::Vars, k: u32, terms: impl Iterator<Item = LaurentPoly>) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(vars, k);
    for t in terms {
        acc += &t;
    }
    acc
}

#[derive(Default)]
struct ObjectCheck {
    invalid: bool,
    not_involutive: bool,
    sign_failure: bool,
    fixed: bool,
    bad_fixed: bool,
    orbit_failure: bool,
    is_final: bool,
}

fn check_object(p: &DecoratedRht, rule: &ColorRule) -> Result<ObjectCheck> {
    let mut c = ObjectCheck { invalid: p.validate(rule).is_err(), ..Default::default() };
    let q = psi(p);
    if q == *p {
        c.fixed = true;
        let colors = p.colors_tableau();
        c.bad_fixed = !p.is_flat() || !colors.is_semistandard();
        c.is_final = is_final(p, rule);
        if !c.is_final {
            let w0 = p.weight(rule)?;
            let mut total = w0.clone();
            let mut cur = psi_prime(p, rule)?;
            let mut size = 1;
            while cur != *p && size <= p.k() as usize {
                total += &cur.weight(rule)?;
                cur = psi_prime(&cur, rule)?;
                size += 1;
            }
            c.orbit_failure = size != p.k() as usize || !total.is_zero();
        }
    } else {
        c.not_involutive = psi(&q) != *p || q.validate(rule).is_err();
        let south_delta = (p.south_steps() as i64 - q.south_steps() as i64).abs();
        let wp = p.weight(rule)?;
        let wq = q.weight(rule)?;
        c.sign_failure = south_delta != 1 || wq != -&wp;
    }
    Ok(c)
}

/// Enumerates `P(γ, F)` and checks every claim of the cancellation
/// argument: `psi` is a sign-reversing involution, its fixed points are flat
/// with semistandard colors, `psi_prime` cancels the fixed points that are
/// not final in orbits of size `k`, and the final fixed points are exactly
/// the reconstructions of `SSYT_k(γ, F) × Z_k ≀ S_n`. The weight sums at
/// each stage are compared with each other, with the character sum
/// `Σ_σ χ^F(σ) conj(χ^γ(σ))` and with `n! kⁿ Σ_T ρ(T)`.
pub fn audit(gamma: &PartitionTuple, rule: &ColorRule, budget: &Budget) -> Result<AuditReport> {
    let objects = enumerate_objects(gamma, rule, budget)?;
    let k = rule.k();
    let vars = rule.vars();
    let checks = objects
        .par_iter()
        .map(|p| check_object(p, rule))
        .collect::<Result<Vec<_>>>()?;
    let weights = objects.par_iter().map(|p| p.weight(rule)).collect::<Result<Vec<_>>>()?;
    let total_weight = sum(vars, k, weights.iter().cloned());
    let psi_fixed_weight = sum(
        vars,
        k,
        weights.iter().zip(&checks).filter(|(_, c)| c.fixed).map(|(w, _)| w.clone()),
    );
    let final_weight = sum(
        vars,
        k,
        weights.iter().zip(&checks).filter(|(_, c)| c.is_final).map(|(w, _)| w.clone()),
    );
    let finals: HashSet<&DecoratedRht> = objects.iter().zip(&checks).filter(|(_, c)| c.is_final).map(|(p, _)| p).collect();

    let tableaux = enumerate_ssyt_k(gamma, rule)?;
    let rebuilt = final_fixed_points(gamma, rule, budget)?;
    let group: Vec<ColoredPermutation> = enumerate_group(rule.n() as usize, k, budget)?.collect();
    let round_trip = tableaux.par_iter().enumerate().all(|(ti, (t, _))| {
        group.iter().enumerate().all(|(si, sigma)| {
            let p = &rebuilt[ti * group.len() + si];
            matches!(deconstruct(p), Ok((t2, s2)) if t2 == *t && s2 == *sigma)
        })
    });
    let rebuilt_set: HashSet<&DecoratedRht> = rebuilt.iter().collect();
    let bijection = round_trip && rebuilt_set.len() == rebuilt.len() && rebuilt_set == finals;

    let table = CharacterTable::cached(rule.n(), k)?;
    let row = table
        .row_of(gamma)
        .ok_or_else(|| Error::Invalid(format!("no character for {gamma}")))?;
    let chi_f = class_function(rule)?;
    let class_sum = sum(
        vars,
        k,
        table.classes.iter().enumerate().map(|(col, lambda)| {
            let size = Rational::from_integer(table.class_sizes[col].clone());
            chi_f
                .value(lambda)
                .scale(&table.values[row][col].conj())
                .scale_rational(&size)
        }),
    );
    let order = Rational::from_integer(crate::budget::group_order(rule.n() as usize, k).into());
    let expected = count_ssyt_k(gamma, rule)?.scale_rational(&order);

    Ok(AuditReport {
        shape: gamma.clone(),
        objects: objects.len(),
        invalid: checks.iter().filter(|c| c.invalid).count(),
        not_involutive: checks.iter().filter(|c| c.not_involutive).count(),
        sign_failures: checks.iter().filter(|c| c.sign_failure).count(),
        psi_fixed: checks.iter().filter(|c| c.fixed).count(),
        bad_fixed: checks.iter().filter(|c| c.bad_fixed).count(),
        orbit_failures: checks.iter().filter(|c| c.orbit_failure).count(),
        final_fixed: finals.len(),
        reconstructed: rebuilt.len(),
        bijection,
        total_weight,
        psi_fixed_weight,
        final_weight,
        class_sum,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color_rules::{defining_rule, trivial_rule};

    #[test]
    fn single_cell_object() {
        let g = PartitionTuple::parse("[[1]]").unwrap();
        let rule = trivial_rule(1, 1);
        let objs = enumerate_objects(&g, &rule, &Budget::default()).unwrap();
        assert_eq!(objs.len(), 1);
        assert_eq!(objs[0].weight(&rule).unwrap(), LaurentPoly::one(rule.vars(), 1));
        assert!(is_final(&objs[0], &rule));
    }

    #[test]
    fn split_at_minima_cuts_before_new_lows() {
        let items = [12, 15, 14, 5, 7, 4, 6]
            .iter()
            .enumerate()
            .map(|(c, &i)| ((0, c), Entry { index: i, root: 0 }))
            .collect();
        let parts = split_at_minima(Piece { comp: 0, color: 0, items });
        let mins: Vec<Vec<u32>> = parts.iter().map(|p| p.items.iter().map(|it| it.1.index).collect()).collect();
        assert_eq!(mins, vec![vec![12, 15, 14], vec![5, 7], vec![4, 6]]);
    }

    #[test]
    fn psi_prime_rejects_moved_objects() {
        let g = PartitionTuple::parse("[[1,1],[]]").unwrap();
        let rule = trivial_rule(2, 2);
        let objs = enumerate_objects(&g, &rule, &Budget::default()).unwrap();
        let moved = objs.iter().find(|p| !is_psi_fixed(p)).unwrap();
        assert!(matches!(psi_prime(moved, &rule), Err(Error::Contract(_))));
    }

    #[test]
    fn defining_rule_audit() {
        for g in ["[[2],[]]", "[[1,1],[]]", "[[1],[1]]", "[[],[2]]"] {
            let g = PartitionTuple::parse(g).unwrap();
            let r = audit(&g, &defining_rule(2, 2), &Budget::default()).unwrap();
            assert!(r.holds(), "{}", r.to_json());
        }
    }
}

//! Colored permutations `Z_k ≀ S_n`.
//!
//! An element maps `i ↦ u_{a_i} σ_i` where `u_a = ζ_k^a`. As a matrix it has
//! `u_{a_i}` in column `i`, row `σ_i`, so the root sitting in row `j` is
//! `u(σ, j) = u_{a_{σ^{-1}(j)}}`. In cycle notation every index `j` carries
//! that root, each cycle starts at its smallest index and cycles are listed
//! by decreasing smallest index.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::budget::group_order;
use crate::shapes::{class_normalizer, Partition, PartitionTuple};
use crate::{Budget, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPerm", into = "RawPerm")]
pub struct ColoredPermutation {
    k: u32,
    /// `σ_i` for `i = 1..=n`, stored 1-based.
    images: Vec<u32>,
    colors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawPerm {
    n: usize,
    k: u32,
    images: Vec<u32>,
    colors: Vec<u32>,
}

impl TryFrom<RawPerm> for ColoredPermutation {
    type Error = Error;
    fn try_from(r: RawPerm) -> Result<Self> {
        if r.images.len() != r.n {
            return Err(Error::SizeMismatch(format!("n = {} but {} images", r.n, r.images.len())));
        }
        ColoredPermutation::new(r.k, r.images, r.colors)
    }
}

impl From<ColoredPermutation> for RawPerm {
    fn from(p: ColoredPermutation) -> Self {
        RawPerm {
            n: p.images.len(),
            k: p.k,
            images: p.images,
            colors: p.colors,
        }
    }
}

/// One cycle: `(index, root exponent)` pairs starting at the smallest index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cycle {
    pub entries: Vec<(u32, u32)>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min_index(&self) -> u32 {
        self.entries.iter().map(|e| e.0).min().unwrap_or(0)
    }

    /// Exponent of the product of the roots in the cycle.
    pub fn ctype(&self, k: u32) -> u32 {
        (self.entries.iter().map(|e| e.1 as u64).sum::<u64>() % k as u64) as u32
    }
}

impl ColoredPermutation {
    pub fn new(k: u32, images: Vec<u32>, colors: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if k == 0 {
            return Err(Error::Invalid("k must be positive".into()));
        }
        if colors.len() != n {
            return Err(Error::SizeMismatch(format!("{n} images but {} colors", colors.len())));
        }
        let mut seen = vec![false; n + 1];
        for &s in &images {
            if s == 0 || s as usize > n || seen[s as usize] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[s as usize] = true;
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(Error::Invalid(format!("color {c} out of range for k = {k}")));
        }
        Ok(ColoredPermutation { k, images, colors })
    }

    pub fn identity(n: usize, k: u32) -> Self {
        ColoredPermutation {
            k,
            images: (1..=n as u32).collect(),
            colors: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `σ_i` for 1-based `i`.
    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// `a_i` for 1-based `i`.
    pub fn color(&self, i: u32) -> u32 {
        self.colors[i as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// `σ'σ`: images `σ'_{σ_i}`, colors `a'_{σ_i} + a_i`.
    pub fn compose(&self, inner: &ColoredPermutation) -> Result<Self> {
        if self.k != inner.k || self.n() != inner.n() {
            return Err(Error::SizeMismatch("composing elements of different groups".into()));
        }
        let images = inner.images.iter().map(|&s| self.image(s)).collect();
        let colors = inner
            .images
            .iter()
            .zip(&inner.colors)
            .map(|(&s, &a)| (self.color(s) + a) % self.k)
            .collect();
        Ok(ColoredPermutation {
            k: self.k,
            images,
            colors,
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut images = vec![0; n];
        let mut colors = vec![0; n];
        for i in 0..n {
            let s = self.images[i] as usize - 1;
            images[s] = i as u32 + 1;
            colors[s] = (self.k - self.colors[i]) % self.k;
        }
        ColoredPermutation {
            k: self.k,
            images,
            colors,
        }
    }

    /// Exponent of the root in row `j`, `a_{σ^{-1}(j)}`.
    pub fn row_root(&self, j: u32) -> u32 {
        let pre = self.images.iter().position(|&s| s == j).expect("permutation");
        self.colors[pre]
    }

    /// Cycles in decreasing cycle notation.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut idx = Vec::new();
            let mut j = start;
            while !seen[j as usize] {
                seen[j as usize] = true;
                idx.push(j);
                j = self.image(j);
            }
            let l = idx.len();
            let entries = (0..l)
                .map(|t| (idx[t], self.color(idx[(t + l - 1) % l])))
                .collect();
            out.push(Cycle { entries });
        }
        out.reverse();
        out
    }

    /// Rebuilds an element from cycles given as `(index, root)` lists.
    pub fn from_cycles(n: usize, k: u32, cycles: &[Cycle]) -> Result<Self> {
        let mut images = vec![0u32; n];
        let mut colors = vec![0u32; n];
        for c in cycles {
            let l = c.entries.len();
            for t in 0..l {
                let (i, _) = c.entries[t];
                let (j, r) = c.entries[(t + 1) % l];
                if i == 0 || i as usize > n {
                    return Err(Error::Invalid(format!("index {i} out of range")));
                }
                images[i as usize - 1] = j;
                colors[i as usize - 1] = r % k;
            }
        }
        Self::new(k, images, colors)
    }

    /// The cycle notation with parentheses erased.
    pub fn flatten(&self) -> Vec<(u32, u32)> {
        self.cycles().into_iter().flat_map(|c| c.entries).collect()
    }

    /// Inverse of [`flatten`](Self::flatten): cycles start at the
    /// left-to-right minima of the indices.
    pub fn from_flattened(k: u32, word: &[(u32, u32)]) -> Result<Self> {
        let mut cycles: Vec<Cycle> = Vec::new();
        let mut min = u32::MAX;
        for &(i, r) in word {
            if i < min {
                min = i;
                cycles.push(Cycle { entries: Vec::new() });
            }
            cycles.last_mut().expect("started").entries.push((i, r));
        }
        Self::from_cycles(word.len(), k, &cycles)
    }

    /// The class: component `r` lists the lengths of cycles of type `r`.
    pub fn class_type(&self) -> PartitionTuple {
        let mut parts = vec![Vec::new(); self.k as usize];
        for c in self.cycles() {
            parts[c.ctype(self.k) as usize].push(c.len() as u32);
        }
        PartitionTuple::new(parts.into_iter().map(Partition::from_parts).collect())
            .expect("k >= 1")
    }

    /// Text form `u3 6 | u1 4 | u3 2 u2 5 u0 3 | u0 1`.
    pub fn cycle_string(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| {
                c.entries
                    .iter()
                    .map(|(i, r)| format!("u{r} {i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// Parses the output of [`cycle_string`](Self::cycle_string).
    pub fn parse_cycles(n: usize, k: u32, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        for part in text.split('|') {
            let toks: Vec<&str> = part.split_whitespace().collect();
            if !toks.len().is_multiple_of(2) || toks.is_empty() {
                return Err(Error::Parse(format!("bad cycle {part:?}")));
            }
            let mut entries = Vec::new();
            for pair in toks.chunks(2) {
                let r = pair[0]
                    .strip_prefix('u')
                    .and_then(|s| s.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad root {:?}", pair[0])))?;
                let i = pair[1]
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad index {:?}", pair[1])))?;
                entries.push((i, r));
            }
            cycles.push(Cycle { entries });
        }
        Self::from_cycles(n, k, &cycles)
    }

    /// Root exponents as a generalized permutation matrix: `m[row][col]`.
    pub fn matrix(&self) -> Vec<Vec<Option<u32>>> {
        let n = self.n();
        let mut m = vec![vec![None; n]; n];
        for i in 0..n {
            m[self.images[i] as usize - 1][i] = Some(self.colors[i]);
        }
        m
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// Lazily walks `Z_k ≀ S_n`: permutations in lexicographic order, and for
/// each, colorings in lexicographic order.
pub struct GroupIter {
    k: u32,
    images: Vec<u32>,
    colors: Vec<u32>,
    done: bool,
}

impl Iterator for GroupIter {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.done {
            return None;
        }
        let out = ColoredPermutation {
            k: self.k,
            images: self.images.clone(),
            colors: self.colors.clone(),
        };
        // advance colors, then the permutation
        let mut j = self.colors.len();
        loop {
            if j == 0 {
                if !next_permutation(&mut self.images) {
                    self.done = true;
                }
                break;
            }
            j -= 1;
            self.colors[j] += 1;
            if self.colors[j] < self.k {
                break;
            }
            self.colors[j] = 0;
        }
        Some(out)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All `n! k^n` elements, checked against the budget first.
pub fn enumerate_group(n: usize, k: u32, budget: &Budget) -> Result<GroupIter> {
    budget.check_group(n, k)?;
    Ok(GroupIter {
        k,
        images: (1..=n as u32).collect(),
        colors: vec![0; n],
        done: false,
    })
}

/// Size of the class `λ` by counting elements.
pub fn class_size(lambda: &PartitionTuple, budget: &Budget) -> Result<u128> {
    let n = lambda.size() as usize;
    let k = lambda.k() as u32;
    Ok(enumerate_group(n, k, budget)?
        .filter(|g| &g.class_type() == lambda)
        .count() as u128)
}

/// Size of the class `λ` from the centralizer order, `n! k^n / Z_λ`.
pub fn class_order(lambda: &PartitionTuple) -> BigInt {
    let n = lambda.size() as usize;
    let k = lambda.k() as u32;
    let g = BigInt::from(group_order(n, k));
    g / class_normalizer(lambda, k)
}

/// A representative of the class `λ`: consecutive indices form the cycles,
/// each cycle of type `r` carries `u_r` on its first index.
pub fn class_representative(lambda: &PartitionTuple) -> ColoredPermutation {
    let n = lambda.size() as usize;
    let k = lambda.k() as u32;
    let mut cycles = Vec::new();
    let mut next = 1u32;
    for (r, p) in lambda.components().iter().enumerate() {
        for &len in p.parts() {
            let entries = (0..len)
                .map(|t| (next + t, if t == 0 { r as u32 } else { 0 }))
                .collect();
            cycles.push(Cycle { entries });
            next += len;
        }
    }
    ColoredPermutation::from_cycles(n, k, &cycles).expect("valid cycles")
}

/// `n! k^n` as a machine integer when it fits.
pub fn group_order_u64(n: usize, k: u32) -> Option<u64> {
    group_order(n, k).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau() -> ColoredPermutation {
        ColoredPermutation::new(4, vec![1, 5, 2, 4, 3, 6], vec![0, 2, 3, 1, 0, 3]).unwrap()
    }

    #[test]
    fn worked_example_cycle_notation() {
        let t = tau();
        assert_eq!(t.cycle_string(), "u3 6 | u1 4 | u3 2 u2 5 u0 3 | u0 1");
        assert_eq!(t.class_type(), PartitionTuple::parse("[[1],[3,1],[],[1]]").unwrap());
        let flat = t.flatten();
        assert_eq!(ColoredPermutation::from_flattened(4, &flat).unwrap(), t);
        assert_eq!(ColoredPermutation::parse_cycles(6, 4, &t.cycle_string()).unwrap(), t);
        // the matrix has u_3 in row 2, column 3
        assert_eq!(t.matrix()[1][2], Some(3));
        assert_eq!(t.row_root(2), 3);
    }

    #[test]
    fn json_form() {
        let t = tau();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"n":6,"k":4,"images":[1,5,2,4,3,6],"colors":[0,2,3,1,0,3]}"#);
        let back: ColoredPermutation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<ColoredPermutation>(
            r#"{"n":2,"k":2,"images":[1,1],"colors":[0,0]}"#
        )
        .is_err());
    }

    #[test]
    fn group_walk_is_complete() {
        let all: Vec<_> = enumerate_group(3, 2, &Budget::default()).unwrap().collect();
        assert_eq!(all.len(), 48);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), 48);
        let tight = Budget {
            max_group_order: 47,
            ..Budget::default()
        };
        assert!(matches!(enumerate_group(3, 2, &tight), Err(Error::Budget { .. })));
    }

    #[test]
    fn class_sizes_agree() {
        let b = Budget::default();
        for lam in crate::shapes::enumerate_tuples(3, 2) {
            assert_eq!(BigInt::from(class_size(&lam, &b).unwrap()), class_order(&lam));
            assert_eq!(class_representative(&lam).class_type(), lam);
        }
        let lam = PartitionTuple::parse("[[1],[1]]").unwrap();
        assert_eq!(class_size(&lam, &b).unwrap(), 2);
    }
}

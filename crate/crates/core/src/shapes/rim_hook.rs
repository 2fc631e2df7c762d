use serde::Serialize;

use super::{Partition, PartitionTuple};
use crate::{Error, Result};

/// A rim hook inside one component, with its cells listed along the path
/// from the north-west end to the south-east end (East and South steps).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RimHook {
    pub comp: usize,
    /// `(row, col)` pairs, rows from the bottom.
    pub cells: Vec<(usize, usize)>,
}

impl RimHook {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of South steps, one less than the number of rows it meets.
    pub fn south_steps(&self) -> usize {
        let top = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        let bottom = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        top - bottom
    }

    /// Checks that consecutive cells are East or South neighbours.
    pub fn is_path(&self) -> bool {
        self.cells.windows(2).all(|w| {
            let (r0, c0) = w[0];
            let (r1, c1) = w[1];
            (r1 == r0 && c1 == c0 + 1) || (r0 > 0 && r1 == r0 - 1 && c1 == c0)
        })
    }
}

fn beta_set(p: &Partition, len: usize) -> Vec<i64> {
    (0..len)
        .map(|i| p.row_len(i) as i64 + (len - 1 - i) as i64)
        .collect()
}

fn from_beta(beta: &[i64]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|a, b| b.cmp(a));
    let len = b.len();
    Partition::from_parts(
        b.iter()
            .enumerate()
            .map(|(i, &x)| (x - (len - 1 - i) as i64) as u32)
            .collect(),
    )
}

/// Every rim hook of length `len` that can be removed from `p`, with the
/// remaining partition, found by moving one bead of the beta-set.
pub fn removable_rim_hooks(p: &Partition, len: usize) -> Vec<(Partition, Vec<(usize, usize)>)> {
    let rows = p.len();
    if len == 0 || rows == 0 {
        return Vec::new();
    }
    let beta = beta_set(p, rows);
    let mut out = Vec::new();
    for i in (0..rows).rev() {
        let target = beta[i] - len as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let mut nb = beta.clone();
        nb[i] = target;
        let rest = from_beta(&nb);
        let mut cells: Vec<(usize, usize)> = p
            .cells()
            .filter(|&(r, c)| !rest.contains(r, c))
            .collect();
        // path order: top row first, then left to right
        cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        out.push((rest, cells));
    }
    out
}

/// A rim hook tableau: hooks listed in placement order, each hook removable
/// from what is left after removing the hooks before it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RimHookTableau {
    pub shape: PartitionTuple,
    pub hooks: Vec<RimHook>,
}

impl RimHookTableau {
    /// Total number of South steps.
    pub fn south_steps(&self) -> usize {
        self.hooks.iter().map(RimHook::south_steps).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.south_steps().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `(exponent of ζ_k, sign)` of the weight `∏ (ζ^{a_i})^{j_i} (-1)^{S}`
    /// where `a_i` is the type of hook `i` and `j_i` its component.
    pub fn weight_exponent(&self, ctypes: &[u32], k: u32) -> (u32, i64) {
        let e = self
            .hooks
            .iter()
            .zip(ctypes)
            .map(|(h, &a)| a as u64 * h.comp as u64)
            .sum::<u64>()
            % k as u64;
        (e as u32, self.sign())
    }
}

/// All rim hook tableaux of `shape` whose hooks have the given lengths, in
/// placement order.
pub fn enumerate_rht(shape: &PartitionTuple, lengths: &[usize]) -> Result<Vec<RimHookTableau>> {
    let total: usize = lengths.iter().sum();
    if total != shape.size() as usize {
        return Err(Error::SizeMismatch(format!(
            "hook lengths sum to {total}, shape has {} cells",
            shape.size()
        )));
    }
    if lengths.contains(&0) {
        return Err(Error::Invalid("hook lengths must be positive".into()));
    }
    let mut out = Vec::new();
    let mut cur = shape.components().to_vec();
    let mut hooks = Vec::new();
    rht_rec(&mut cur, lengths, &mut hooks, &mut |hs| {
        out.push(RimHookTableau {
            shape: shape.clone(),
            hooks: hs.to_vec(),
        })
    });
    Ok(out)
}

fn rht_rec(
    cur: &mut [Partition],
    lengths: &[usize],
    hooks: &mut Vec<RimHook>,
    visit: &mut dyn FnMut(&[RimHook]),
) {
    let Some((&len, rest)) = lengths.split_first() else {
        visit(hooks);
        return;
    };
    for comp in 0..cur.len() {
        for (smaller, cells) in removable_rim_hooks(&cur[comp], len) {
            let saved = std::mem::replace(&mut cur[comp], smaller);
            hooks.push(RimHook { comp, cells });
            rht_rec(cur, rest, hooks, visit);
            hooks.pop();
            cur[comp] = saved;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hooks_of_a_small_partition() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert!(removable_rim_hooks(&p, 3).is_empty());
        let hooks = removable_rim_hooks(&p, 2);
        assert_eq!(hooks.len(), 1);
        assert_eq!(hooks[0].0, Partition::new(vec![1, 1]).unwrap());
        assert_eq!(hooks[0].1, vec![(0, 1), (0, 2)]);
        let p = Partition::new(vec![2, 2]).unwrap();
        let hooks = removable_rim_hooks(&p, 3);
        assert_eq!(hooks.len(), 1);
        assert_eq!(hooks[0].1, vec![(1, 0), (1, 1), (0, 1)]);
        let h = RimHook { comp: 0, cells: hooks[0].1.clone() };
        assert!(h.is_path());
        assert_eq!(h.south_steps(), 1);
    }

    #[test]
    fn rht_sum_lengths_checked() {
        let g = PartitionTuple::parse("[[2]]").unwrap();
        assert!(enumerate_rht(&g, &[1]).is_err());
        assert_eq!(enumerate_rht(&g, &[1, 1]).unwrap().len(), 1);
        assert_eq!(enumerate_rht(&g, &[2]).unwrap().len(), 1);
    }
}

//! Wreath descents and comajor index, for standard tableaux and for colored
//! permutations, and the colored RSK correspondence between them.

use serde::Serialize;

use crate::shapes::{Cell, Partition, PartitionTuple, Tableau};
use crate::wreath::ColoredPermutation;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WreathStats {
    pub wdes: u64,
    pub wcomaj: u64,
    /// `a_1 ≤ … ≤ a_n`; `wdes = a_n` and `wcomaj = Σ a_i`.
    pub labels: Vec<u64>,
}

impl WreathStats {
    /// From the increments `a_{i+1} - a_i`, starting at `a_0 = 0`.
    fn from_steps(steps: &[u64]) -> Self {
        let mut labels = Vec::with_capacity(steps.len());
        let mut acc = 0;
        for &s in steps {
            acc += s;
            labels.push(acc);
        }
        WreathStats {
            wdes: acc,
            wcomaj: labels.iter().sum(),
            labels,
        }
    }
}

/// Replaces each label `i` of a standard tableau by `a_i`: `a_1` is the
/// component holding 1, and moving from `i` (in `γ^r`) to `i + 1` (in `γ^s`)
/// adds `s - r` if `i + 1` is strictly to the right of `i` in the drawing,
/// `k + s - r` otherwise.
pub fn wreath_stats_tableau(t: &Tableau<u32>) -> Result<WreathStats> {
    if !t.is_standard() {
        return Err(Error::Invalid("wreath statistics need a standard tableau".into()));
    }
    let k = t.shape().k() as i64;
    let n = t.shape().size();
    let cells: Vec<Cell> = (1..=n).map(|i| t.find(i).expect("standard")).collect();
    let mut steps = Vec::with_capacity(n as usize);
    for (i, c) in cells.iter().enumerate() {
        let step = match i.checked_sub(1).map(|j| &cells[j]) {
            None => c.comp as i64,
            Some(prev) if c.x > prev.x => c.comp as i64 - prev.comp as i64,
            Some(prev) => k + c.comp as i64 - prev.comp as i64,
        };
        steps.push(u64::try_from(step).expect("labels weakly increase"));
    }
    Ok(WreathStats::from_steps(&steps))
}

/// Position `i` (from 0, with `a_0 = 0` and `σ_0 = 0` in front) is an
/// `r`-descent if `a_{i+1} - a_i ≡ r (mod k)` with `0 < r < k`, and a
/// `k`-descent if the roots agree and `σ_i > σ_{i+1}`. An `r`-descent at `i`
/// contributes `r` to `wdes` and `r (n - i)` to `wcomaj`.
pub fn wreath_stats_perm(sigma: &ColoredPermutation) -> WreathStats {
    let k = sigma.k() as i64;
    let n = sigma.n();
    let mut steps = Vec::with_capacity(n);
    let (mut prev_root, mut prev_index) = (0i64, 0u32);
    for i in 0..n {
        let (root, index) = (sigma.colors()[i] as i64, sigma.images()[i]);
        let r = (root - prev_root).rem_euclid(k);
        let step = if r != 0 {
            r
        } else if prev_index > index {
            k
        } else {
            0
        };
        steps.push(step as u64);
        prev_root = root;
        prev_index = index;
    }
    WreathStats::from_steps(&steps)
}

/// Row inserts `σ_1, σ_2, …` with `σ_i` going into component `a_i`; the
/// recording tableau gets `i` in the cell the insertion created. Rows are
/// counted from the bottom, the first row being the one inserted into.
pub fn colored_rsk(sigma: &ColoredPermutation) -> (Tableau<u32>, Tableau<u32>) {
    let k = sigma.k() as usize;
    let mut p: Vec<Vec<Vec<u32>>> = vec![Vec::new(); k];
    let mut q: Vec<Vec<Vec<u32>>> = vec![Vec::new(); k];
    for i in 0..sigma.n() {
        let comp = sigma.colors()[i] as usize;
        let mut x = sigma.images()[i];
        let mut row = 0;
        loop {
            if row == p[comp].len() {
                p[comp].push(vec![x]);
                q[comp].push(vec![i as u32 + 1]);
                break;
            }
            let r = &mut p[comp][row];
            match r.iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut r[j], x);
                    row += 1;
                }
                None => {
                    r.push(x);
                    q[comp][row].push(i as u32 + 1);
                    break;
                }
            }
        }
    }
    (
        Tableau::from_rows(p).expect("insertion keeps partition shapes"),
        Tableau::from_rows(q).expect("insertion keeps partition shapes"),
    )
}

/// Classical descents of a standard tableau of one partition: `i` with
/// `i + 1` in a higher row.
pub fn descents(t: &Tableau<u32>) -> Vec<u32> {
    let n = t.shape().size();
    (1..n)
        .filter(|&i| t.find(i + 1).expect("standard").row > t.find(i).expect("standard").row)
        .collect()
}

/// `(des, comaj)` with `comaj = Σ_{i ∈ Des} (n - i)`.
pub fn des_comaj(t: &Tableau<u32>) -> (u64, u64) {
    let n = t.shape().size() as u64;
    let d = descents(t);
    (d.len() as u64, d.iter().map(|&i| n - i as u64).sum())
}

/// A one-component shape as a tuple.
pub fn single(p: &Partition) -> PartitionTuple {
    PartitionTuple::new(vec![p.clone()]).expect("one component")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_and_column() {
        let row: Tableau<u32> = serde_json::from_str("[[[1,2,3,4]]]").unwrap();
        let s = wreath_stats_tableau(&row).unwrap();
        assert_eq!((s.wdes, s.wcomaj), (0, 0));
        let col: Tableau<u32> = serde_json::from_str("[[[1],[2],[3],[4]]]").unwrap();
        let s = wreath_stats_tableau(&col).unwrap();
        assert_eq!(s.labels, vec![0, 1, 2, 3]);
        assert_eq!((s.wdes, s.wcomaj), (3, 6));
    }

    #[test]
    fn identity_has_no_descents() {
        let id = ColoredPermutation::identity(4, 3);
        let s = wreath_stats_perm(&id);
        assert_eq!((s.wdes, s.wcomaj), (0, 0));
    }

    #[test]
    fn classical_rsk() {
        let sigma = ColoredPermutation::new(1, vec![3, 1, 2], vec![0, 0, 0]).unwrap();
        let (p, q) = colored_rsk(&sigma);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[[1,2],[3]]]");
        assert_eq!(serde_json::to_string(&q).unwrap(), "[[[1,3],[2]]]");
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An integer partition stored as its nonincreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Validates that `parts` is nonincreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the bottom row.
    pub fn width(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Length of row `r`, zero above the diagram.
    pub fn row_len(&self, r: usize) -> u32 {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// Column height at column `c`.
    pub fn col_len(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&p| p as usize > c).count()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        (col as u32) < self.row_len(row)
    }

    pub fn conjugate(&self) -> Partition {
        Partition((0..self.width() as usize).map(|c| self.col_len(c) as u32).collect())
    }

    /// `m_i`, the number of parts equal to `i`, for `i = 1..=width`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.width() as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// Cells `(row, col)` in row-major order from the bottom row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.row_len(i);
            b += other.row_len(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A cell of a tuple diagram with both its local and its drawn coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
    /// Column in the corner-to-corner drawing.
    pub x: usize,
    /// Row in the corner-to-corner drawing, 0 at the bottom.
    pub y: usize,
}

/// A `k`-tuple of partitions `(γ⁰, …, γ^{k-1})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionTuple(Vec<Partition>);

impl PartitionTuple {
    pub fn new(parts: Vec<Partition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invalid("a partition tuple needs k >= 1 components".into()));
        }
        Ok(PartitionTuple(parts))
    }

    pub fn from_vecs(parts: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(parts.into_iter().map(Partition::new).collect::<Result<_>>()?)
    }

    /// Parses `[[3,1],[],[2,2]]`, `3,1|-|2,2` or, for one component, `3,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let v: Vec<Vec<u32>> =
                serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::from_vecs(v);
        }
        let comps = t
            .split('|')
            .map(|c| {
                let c = c.trim();
                if c.is_empty() || c == "-" {
                    return Ok(Vec::new());
                }
                c.split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_vecs(comps)
    }

    /// Pads with empty components up to `k`.
    pub fn padded(mut self, k: usize) -> Result<Self> {
        if self.0.len() > k {
            return Err(Error::SizeMismatch(format!(
                "shape has {} components, k = {k}",
                self.0.len()
            )));
        }
        self.0.resize(k, Partition::empty());
        Ok(self)
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.0.iter().map(Partition::size).collect()
    }

    /// Drawn column of the first column of each component.
    pub fn x_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.k());
        let mut acc = 0;
        for p in &self.0 {
            out.push(acc);
            acc += (p.width() as usize).max(1);
        }
        out
    }

    /// Drawn row of the bottom row of each component.
    pub fn y_offsets(&self) -> Vec<usize> {
        let mut out = vec![0; self.k()];
        let mut acc = 0;
        for i in (0..self.k()).rev() {
            out[i] = acc;
            acc += self.0[i].len().max(1);
        }
        out
    }

    /// Total drawn width and height.
    pub fn extent(&self) -> (usize, usize) {
        let w = self.0.iter().map(|p| (p.width() as usize).max(1)).sum();
        let h = self.0.iter().map(|p| p.len().max(1)).sum();
        (w, h)
    }

    pub fn cell(&self, comp: usize, row: usize, col: usize) -> Cell {
        let xo = self.x_offsets();
        let yo = self.y_offsets();
        Cell {
            comp,
            row,
            col,
            x: xo[comp] + col,
            y: yo[comp] + row,
        }
    }

    /// All cells, component by component, rows from the bottom.
    pub fn cells(&self) -> Vec<Cell> {
        let xo = self.x_offsets();
        let yo = self.y_offsets();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, p) in self.0.iter().enumerate() {
            for (row, col) in p.cells() {
                out.push(Cell {
                    comp: i,
                    row,
                    col,
                    x: xo[i] + col,
                    y: yo[i] + row,
                });
            }
        }
        out
    }

    /// Drawn position `(x, y)` of the placeholder of each empty component.
    pub fn placeholders(&self) -> Vec<(usize, usize, usize)> {
        let xo = self.x_offsets();
        let yo = self.y_offsets();
        (0..self.k())
            .filter(|&i| self.0[i].is_empty())
            .map(|i| (i, xo[i], yo[i]))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

fn product(sizes: &[u32], cur: &mut Vec<Partition>, out: &mut Vec<PartitionTuple>) {
    if cur.len() == sizes.len() {
        out.push(PartitionTuple(cur.clone()));
        return;
    }
    for p in enumerate_partitions(sizes[cur.len()]) {
        cur.push(p);
        product(sizes, cur, out);
        cur.pop();
    }
}

/// All `k`-tuples of partitions of total size `n`: component sizes run over
/// compositions in decreasing lexicographic order, then each component over
/// [`enumerate_partitions`].
pub fn enumerate_tuples(n: u32, k: usize) -> Vec<PartitionTuple> {
    assert!(k >= 1, "k must be positive");
    fn compositions(n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == k {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=n).rev() {
            cur.push(a);
            compositions(n - a, k, cur, out);
            cur.pop();
        }
    }
    let mut comps = Vec::new();
    compositions(n, k, &mut Vec::new(), &mut comps);
    let mut out = Vec::new();
    for sizes in comps {
        let mut cur = Vec::with_capacity(k);
        product(&sizes, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(enumerate_tuples(2, 2).len(), 5);
        assert_eq!(enumerate_tuples(0, 3).len(), 1);
        assert_eq!(enumerate_tuples(4, 3).len(), 51);
        assert_eq!(enumerate_tuples(4, 1), enumerate_partitions(4).into_iter().map(|p| PartitionTuple(vec![p])).collect::<Vec<_>>());
    }

    #[test]
    fn serialization_round_trip() {
        let g = PartitionTuple::parse("[[3,1],[],[2,2]]").unwrap();
        assert_eq!(g.to_json(), "[[3,1],[],[2,2]]");
        assert_eq!(PartitionTuple::parse("3,1|-|2,2").unwrap(), g);
        assert_eq!(PartitionTuple::parse("3,1||2,2").unwrap(), g);
        assert!(PartitionTuple::parse("[[1,3]]").is_err());
    }

    #[test]
    fn drawing_offsets() {
        let g = PartitionTuple::parse("[[3,1],[],[2,2]]").unwrap();
        assert_eq!(g.x_offsets(), vec![0, 3, 4]);
        assert_eq!(g.y_offsets(), vec![3, 2, 0]);
        assert_eq!(g.placeholders(), vec![(1, 3, 2)]);
        let c = g.cell(2, 1, 1);
        assert_eq!((c.x, c.y), (5, 1));
    }

    #[test]
    fn conjugate_and_dominance() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![2, 1, 1]).unwrap());
        assert!(p.dominates(&Partition::new(vec![2, 2]).unwrap()));
        assert!(!Partition::new(vec![2, 2]).unwrap().dominates(&p));
    }
}

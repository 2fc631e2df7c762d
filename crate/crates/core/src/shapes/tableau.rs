use serde::{Deserialize, Serialize};

use super::{Cell, Partition, PartitionTuple};
use crate::{Error, Result};

/// A filling of a tuple diagram. `entries[comp][row][col]`, rows from the
/// bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<T> {
    shape: PartitionTuple,
    entries: Vec<Vec<Vec<T>>>,
}

impl<T: Serialize> Serialize for Tableau<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Tableau<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<Vec<Vec<T>>>::deserialize(d)?;
        Tableau::from_rows(entries).map_err(serde::de::Error::custom)
    }
}

impl<T> Tableau<T> {
    /// Builds a tableau from rows; the shape is read off the row lengths.
    pub fn from_rows(entries: Vec<Vec<Vec<T>>>) -> Result<Self> {
        let shape = PartitionTuple::new(
            entries
                .iter()
                .map(|rows| Partition::new(rows.iter().map(|r| r.len() as u32).collect()))
                .collect::<Result<_>>()?,
        )?;
        for rows in &entries {
            if rows.iter().any(|r| r.is_empty()) {
                return Err(Error::Invalid("empty row inside a component".into()));
            }
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &PartitionTuple {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<T>>] {
        &self.entries
    }

    pub fn get(&self, comp: usize, row: usize, col: usize) -> Option<&T> {
        self.entries.get(comp)?.get(row)?.get(col)
    }

    pub fn at(&self, cell: &Cell) -> &T {
        &self.entries[cell.comp][cell.row][cell.col]
    }

    /// Cells with their entries, component by component, rows from the bottom.
    pub fn cells(&self) -> Vec<(Cell, &T)> {
        self.shape
            .cells()
            .into_iter()
            .map(|c| (c, &self.entries[c.comp][c.row][c.col]))
            .collect()
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Tableau<U> {
        Tableau {
            shape: self.shape.clone(),
            entries: self
                .entries
                .iter()
                .map(|rows| rows.iter().map(|r| r.iter().map(&mut f).collect()).collect())
                .collect(),
        }
    }
}

impl<T: Ord> Tableau<T> {
    /// Rows weakly increase to the right and columns strictly increase upward.
    pub fn is_semistandard(&self) -> bool {
        for rows in &self.entries {
            for (r, row) in rows.iter().enumerate() {
                if row.windows(2).any(|w| w[0] > w[1]) {
                    return false;
                }
                if r > 0 {
                    let below = &rows[r - 1];
                    if row.iter().zip(below).any(|(a, b)| a <= b) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Tableau<u32> {
    /// Semistandard with entries exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<u32> = self.cells().into_iter().map(|(_, &v)| v).collect();
        seen.sort_unstable();
        self.is_semistandard() && seen.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    /// Cell holding label `v`.
    pub fn find(&self, v: u32) -> Option<Cell> {
        self.cells().into_iter().find(|(_, &e)| e == v).map(|(c, _)| c)
    }
}

/// Bookkeeping for how often each letter may still be used.
pub trait ContentPool {
    /// Claims one more copy of `letter`, returning false if none is left.
    fn take(&mut self, letter: usize) -> bool;
    fn release(&mut self, letter: usize);
}

/// Independent per-letter caps.
#[derive(Clone, Debug)]
pub struct Caps(pub Vec<usize>);

impl ContentPool for Caps {
    fn take(&mut self, letter: usize) -> bool {
        if self.0[letter] == 0 {
            return false;
        }
        self.0[letter] -= 1;
        true
    }

    fn release(&mut self, letter: usize) {
        self.0[letter] += 1;
    }
}

/// Visits every semistandard filling of `shape` where component `i` draws
/// letters from `alphabets[i]` (ordered as numbers) and `pool` limits how
/// often each letter is used in total.
pub fn for_each_ssyt<P: ContentPool>(
    shape: &PartitionTuple,
    alphabets: &[Vec<usize>],
    pool: &mut P,
    visit: &mut dyn FnMut(&Tableau<usize>),
) {
    assert_eq!(alphabets.len(), shape.k(), "one alphabet per component");
    let cells = shape.cells();
    let mut t = Tableau {
        shape: shape.clone(),
        entries: shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&l| vec![0usize; l as usize]).collect())
            .collect(),
    };
    fill(&cells, 0, alphabets, pool, &mut t, visit);
}

fn fill<P: ContentPool>(
    cells: &[Cell],
    i: usize,
    alphabets: &[Vec<usize>],
    pool: &mut P,
    t: &mut Tableau<usize>,
    visit: &mut dyn FnMut(&Tableau<usize>),
) {
    let Some(c) = cells.get(i) else {
        visit(t);
        return;
    };
    let rows = &t.entries[c.comp];
    let mut lo = 0usize;
    let mut strict = false;
    if c.col > 0 {
        lo = rows[c.row][c.col - 1];
    }
    if c.row > 0 {
        let below = rows[c.row - 1][c.col];
        if below >= lo {
            lo = below;
            strict = true;
        }
    }
    let has_bound = c.col > 0 || c.row > 0;
    for &letter in &alphabets[c.comp] {
        if has_bound && (letter < lo || (strict && letter == lo)) {
            continue;
        }
        if !pool.take(letter) {
            continue;
        }
        t.entries[c.comp][c.row][c.col] = letter;
        fill(cells, i + 1, alphabets, pool, t, visit);
        pool.release(letter);
    }
}

/// Semistandard tableaux of a single partition over letters `0..caps.len()`,
/// letter `i` used at most `caps[i]` times.
pub fn enumerate_ssyt(shape: &Partition, caps: &[usize]) -> Vec<Tableau<usize>> {
    let tuple = PartitionTuple::new(vec![shape.clone()]).expect("one component");
    let alphabet: Vec<usize> = (0..caps.len()).collect();
    let mut out = Vec::new();
    for_each_ssyt(&tuple, &[alphabet], &mut Caps(caps.to_vec()), &mut |t| {
        out.push(t.clone())
    });
    out
}

/// Replaces entries by `1..=n`: smaller letters first, equal letters from
/// left to right in the drawing.
pub fn standardize<T: Ord + Clone>(t: &Tableau<T>) -> Tableau<u32> {
    let mut cells: Vec<(T, usize, Cell)> = t
        .cells()
        .into_iter()
        .map(|(c, v)| (v.clone(), c.x, c))
        .collect();
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut out = t.map(|_| 0u32);
    for (i, (_, _, c)) in cells.into_iter().enumerate() {
        out.entries[c.comp][c.row][c.col] = i as u32 + 1;
    }
    out
}

/// Standard tableaux of a tuple shape, built by placing the largest label in
/// an outer corner and recursing.
pub fn enumerate_syt(shape: &PartitionTuple) -> Vec<Tableau<u32>> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = shape.components().iter().map(|p| p.parts().to_vec()).collect();
    let mut t = Tableau {
        shape: shape.clone(),
        entries: shape
            .components()
            .iter()
            .map(|p| p.parts().iter().map(|&l| vec![0u32; l as usize]).collect())
            .collect(),
    };
    syt_rec(n, &mut rows, &mut t, &mut out);
    out.sort();
    out
}

fn syt_rec(label: u32, rows: &mut [Vec<u32>], t: &mut Tableau<u32>, out: &mut Vec<Tableau<u32>>) {
    if label == 0 {
        out.push(t.clone());
        return;
    }
    for comp in 0..rows.len() {
        for r in 0..rows[comp].len() {
            let len = rows[comp][r];
            if len == 0 {
                continue;
            }
            let above = rows[comp].get(r + 1).copied().unwrap_or(0);
            if above >= len {
                continue;
            }
            rows[comp][r] -= 1;
            t.entries[comp][r][len as usize - 1] = label;
            syt_rec(label - 1, rows, t, out);
            rows[comp][r] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostka_like_counts() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(enumerate_ssyt(&p, &[1, 1, 1]).len(), 2);
        assert_eq!(enumerate_ssyt(&p, &[2, 1]).len(), 1);
        assert_eq!(enumerate_ssyt(&p, &[3, 3, 3]).len(), 8);
    }

    #[test]
    fn syt_counts_match_hook_formula() {
        let g = PartitionTuple::parse("[[2,1],[1]]").unwrap();
        // 4!/(3!1!) * 2 * 1
        assert_eq!(enumerate_syt(&g).len(), 8);
        let g = PartitionTuple::parse("[[3,2]]").unwrap();
        assert_eq!(enumerate_syt(&g).len(), 5);
        for t in enumerate_syt(&g) {
            assert!(t.is_standard());
        }
    }

    #[test]
    fn json_round_trip() {
        let t: Tableau<u32> = serde_json::from_str("[[[1,2,6],[5]],[],[[3,7],[4,8]]]").unwrap();
        assert!(t.is_standard());
        assert_eq!(t.shape().to_json(), "[[3,1],[],[2,2]]");
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[[1,2,6],[5]],[],[[3,7],[4,8]]]");
    }
}

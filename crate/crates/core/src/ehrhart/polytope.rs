//! Lattice polytopes in half-space form and their lattice points.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolytopeKind {
    Simplex,
    Cross,
    Cube,
    Custom,
}

/// `{x ∈ R^m : a·x ≤ b for every row (a, b)}`, dilated by `d` as
/// `{x : a·x ≤ d b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    rows: Vec<(Vec<i64>, i64)>,
    kind: PolytopeKind,
    /// Exact range of each coordinate over the undilated polytope.
    bounds: Vec<(Rational, Rational)>,
}

#[derive(Deserialize)]
struct RawPolytope {
    dim: usize,
    rows: Vec<(Vec<i64>, i64)>,
}

impl HPolytope {
    /// Checks that the polytope is bounded and nonempty and records its
    /// bounding box.
    pub fn new(dim: usize, rows: Vec<(Vec<i64>, i64)>, kind: PolytopeKind) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("polytope dimension must be positive".into()));
        }
        if rows.iter().any(|(a, _)| a.len() != dim) {
            return Err(Error::SizeMismatch(format!("every inequality needs {dim} coefficients")));
        }
        let bounds = (0..dim).map(|i| coordinate_range(&rows, dim, i)).collect::<Result<_>>()?;
        Ok(HPolytope { dim, rows, kind, bounds })
    }

    /// `Δ_m`, the convex hull of `0, e_1, …, e_m`.
    pub fn simplex(m: usize) -> Self {
        let mut rows: Vec<(Vec<i64>, i64)> = (0..m)
            .map(|i| {
                let mut a = vec![0; m];
                a[i] = -1;
                (a, 0)
            })
            .collect();
        rows.push((vec![1; m], 1));
        Self::new(m, rows, PolytopeKind::Simplex).expect("bounded")
    }

    /// The segment `[0, 1]`.
    pub fn segment() -> Self {
        Self::simplex(1)
    }

    /// `Ξ_m`, the convex hull of `±e_1, …, ±e_m`.
    pub fn cross(m: usize) -> Self {
        let rows = (0..1u64 << m)
            .map(|signs| {
                let a = (0..m).map(|i| if signs >> i & 1 == 1 { -1 } else { 1 }).collect();
                (a, 1)
            })
            .collect();
        Self::new(m, rows, PolytopeKind::Cross).expect("bounded")
    }

    /// `[0, 1]^m`.
    pub fn cube(m: usize) -> Self {
        let mut rows = Vec::with_capacity(2 * m);
        for i in 0..m {
            let mut a = vec![0; m];
            a[i] = 1;
            rows.push((a.clone(), 1));
            a[i] = -1;
            rows.push((a, 0));
        }
        Self::new(m, rows, PolytopeKind::Cube).expect("bounded")
    }

    /// `simplex:m`, `cross:m`, `cube:m` or `segment`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, dim) = match spec.split_once(':') {
            Some((name, d)) => {
                let d: usize = d
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dimension in {spec:?}")))?;
                (name.trim(), Some(d))
            }
            None => (spec.trim(), None),
        };
        match (name, dim) {
            ("segment", None) => Ok(Self::segment()),
            ("simplex", Some(m)) if m > 0 => Ok(Self::simplex(m)),
            ("cross", Some(m)) if (1..=16).contains(&m) => Ok(Self::cross(m)),
            ("cube", Some(m)) if m > 0 => Ok(Self::cube(m)),
            _ => Err(Error::Parse(format!(
                "unknown polytope {spec:?}; expected simplex:m, cross:m, cube:m or segment"
            ))),
        }
    }

    /// `{"dim": m, "rows": [[[a_1, …, a_m], b], …]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawPolytope = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(raw.dim, raw.rows, PolytopeKind::Custom)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[(Vec<i64>, i64)] {
        &self.rows
    }

    pub fn kind(&self) -> PolytopeKind {
        self.kind
    }

    pub fn bounds(&self) -> &[(Rational, Rational)] {
        &self.bounds
    }

    pub fn contains(&self, v: &[i64], d: u32) -> bool {
        self.rows
            .iter()
            .all(|(a, b)| a.iter().zip(v).map(|(x, y)| x * y).sum::<i64>() <= d as i64 * b)
    }
}

/// Exact `[min, max]` of coordinate `i` by Fourier–Motzkin elimination of
/// the other coordinates.
fn coordinate_range(rows: &[(Vec<i64>, i64)], dim: usize, i: usize) -> Result<(Rational, Rational)> {
    let mut cur: Vec<(Vec<i128>, i128)> = rows
        .iter()
        .map(|(a, b)| (a.iter().map(|&x| x as i128).collect(), *b as i128))
        .collect();
    for j in (0..dim).filter(|&j| j != i) {
        let (zero, rest): (Vec<_>, Vec<_>) = cur.into_iter().partition(|(a, _)| a[j] == 0);
        let (pos, neg): (Vec<_>, Vec<_>) = rest.into_iter().partition(|(a, _)| a[j] > 0);
        let mut next = zero;
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (cp, cn) = (ap[j], -an[j]);
                let a: Vec<i128> = ap.iter().zip(an).map(|(x, y)| x * cn + y * cp).collect();
                let b = bp * cn + bn * cp;
                next.push(normalize(a, b));
            }
        }
        next.sort();
        next.dedup();
        cur = next;
    }
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (a, b) in &cur {
        let c = a[i];
        if c == 0 {
            if *b < 0 {
                return Err(Error::Invalid("polytope is empty".into()));
            }
            continue;
        }
        let r = Rational::new((*b).into(), c.into());
        if c > 0 {
            hi = Some(hi.map_or(r.clone(), |h| h.min(r)));
        } else {
            lo = Some(lo.map_or(r.clone(), |l| l.max(r)));
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) if l <= h => Ok((l, h)),
        (Some(_), Some(_)) => Err(Error::Invalid("polytope is empty".into())),
        _ => Err(Error::Unbounded),
    }
}

fn normalize(a: Vec<i128>, b: i128) -> (Vec<i128>, i128) {
    let g = a.iter().fold(b.abs(), |g, x| g.gcd(x));
    if g <= 1 {
        return (a, b);
    }
    (a.iter().map(|x| x / g).collect(), b / g)
}

fn ceil(r: &Rational) -> i64 {
    let c = r.ceil().to_integer();
    i64::try_from(c).expect("coordinate fits in i64")
}

fn floor(r: &Rational) -> i64 {
    let f = r.floor().to_integer();
    i64::try_from(f).expect("coordinate fits in i64")
}

/// The points of `dP ∩ Z^m` in lexicographic order. For `d = 0` this is the
/// origin alone, since a bounded polytope has no recession directions.
pub fn lattice_points(p: &HPolytope, d: u32) -> Vec<Vec<i64>> {
    if d == 0 {
        let origin = vec![0; p.dim];
        return if p.contains(&origin, 0) { vec![origin] } else { Vec::new() };
    }
    let scale = Rational::from_integer(d.into());
    let ranges: Vec<(i64, i64)> = p
        .bounds
        .iter()
        .map(|(l, h)| (ceil(&(l * &scale)), floor(&(h * &scale))))
        .collect();
    if ranges.iter().any(|(l, h)| l > h) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut v: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        if p.contains(&v, d) {
            out.push(v.clone());
        }
        let mut i = p.dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < ranges[i].1 {
                v[i] += 1;
                for (j, r) in ranges.iter().enumerate().skip(i + 1) {
                    v[j] = r.0;
                }
                break;
            }
        }
    }
}

/// `|v|`, the coordinate sum.
pub fn coordinate_sum(v: &[i64]) -> i64 {
    v.iter().sum()
}

pub(crate) fn dot(a: &[i64], v: &[i64]) -> i64 {
    a.iter().zip(v).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use num_traits::{Signed, Zero};

    use super::*;

    #[test]
    fn unit_simplex_points() {
        assert_eq!(lattice_points(&HPolytope::simplex(2), 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        for d in 0..6 {
            assert_eq!(lattice_points(&HPolytope::segment(), d).len(), d as usize + 1);
        }
    }

    #[test]
    fn cross_polytope_points() {
        assert_eq!(lattice_points(&HPolytope::cross(2), 1).len(), 5);
        assert_eq!(lattice_points(&HPolytope::cross(2), 2).len(), 13);
        assert_eq!(lattice_points(&HPolytope::cross(3), 1).len(), 7);
    }

    #[test]
    fn bounding_box_is_exact() {
        let p = HPolytope::new(2, vec![(vec![2, 1], 3), (vec![-1, 0], 0), (vec![0, -1], 0)], PolytopeKind::Custom).unwrap();
        assert_eq!(p.bounds()[0], (Rational::zero(), Rational::new(3.into(), 2.into())));
        assert_eq!(p.bounds()[1].1, Rational::from_integer(3.into()));
        assert!(!p.bounds()[0].0.is_negative());
    }

    #[test]
    fn unbounded_and_empty_are_rejected() {
        let half = HPolytope::new(1, vec![(vec![1], 1)], PolytopeKind::Custom);
        assert_eq!(half, Err(Error::Unbounded));
        let empty = HPolytope::new(1, vec![(vec![1], -1), (vec![-1], 0)], PolytopeKind::Custom);
        assert!(matches!(empty, Err(Error::Invalid(_))));
    }

    #[test]
    fn parse_names() {
        assert_eq!(HPolytope::parse("simplex:2").unwrap(), HPolytope::simplex(2));
        assert_eq!(HPolytope::parse("segment").unwrap().dim(), 1);
        assert!(HPolytope::parse("sphere:2").is_err());
        let p = HPolytope::from_json(r#"{"dim":1,"rows":[[[1],2],[[-1],0]]}"#).unwrap();
        assert_eq!(lattice_points(&p, 2).len(), 5);
    }
}

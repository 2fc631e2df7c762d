use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::{enumerate_ssyt, Partition, PartitionTuple};
use crate::algebra::{Cyclotomic, LaurentPoly};
use crate::{Error, Result};

/// `z_λ = ∏_i i^{m_i} m_i!`, the order of the centralizer of a permutation of
/// cycle type `λ`.
pub fn z_lambda(p: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for (i, &m) in p.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            acc *= BigInt::from(i) * BigInt::from(j);
        }
    }
    acc
}

/// `Z_λ = ∏_i z_{λ^i} k^{ℓ(λ^i)}`, the centralizer order of the class `λ`
/// in `Z_k ≀ S_n`.
pub fn class_normalizer(lambda: &PartitionTuple, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for p in lambda.components() {
        acc *= z_lambda(p);
        for _ in 0..p.len() {
            acc *= BigInt::from(k);
        }
    }
    acc
}

type KostkaKey = (Vec<u32>, Vec<u32>);

fn kostka_cache() -> &'static Mutex<HashMap<KostkaKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<KostkaKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Kostka number `K_{λ,μ}`: semistandard tableaux of shape `λ` with
/// content `μ` (any order of `μ`, zeros allowed). Peels off horizontal strips.
pub fn kostka(shape: &Partition, content: &[u32]) -> u64 {
    let mut mu: Vec<u32> = content.iter().copied().filter(|&c| c > 0).collect();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    if mu.iter().sum::<u32>() != shape.size() {
        return 0;
    }
    kostka_rec(shape.parts(), &mu)
}

fn kostka_rec(lambda: &[u32], mu: &[u32]) -> u64 {
    let Some((&last, rest)) = mu.split_last() else {
        return u64::from(lambda.is_empty());
    };
    if lambda.len() > mu.len() {
        return 0;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = kostka_cache().lock().unwrap().get(&key) {
        return v;
    }
    let mut total = 0;
    let mut nu = lambda.to_vec();
    strips(lambda, 0, last, &mut nu, &mut |nu| {
        let trimmed: Vec<u32> = nu.iter().copied().filter(|&x| x > 0).collect();
        total += kostka_rec(&trimmed, rest);
    });
    kostka_cache().lock().unwrap().insert(key, total);
    total
}

/// Visits every `ν` with `λ/ν` a horizontal strip of size `m`, choosing
/// `ν_i ∈ [λ_{i+1}, λ_i]` row by row.
fn strips(lambda: &[u32], i: usize, m: u32, nu: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if i == lambda.len() {
        if m == 0 {
            visit(nu);
        }
        return;
    }
    let lo = lambda.get(i + 1).copied().unwrap_or(0);
    let hi = lambda[i];
    for v in (lo..=hi).rev() {
        let removed = hi - v;
        if removed > m {
            break;
        }
        nu[i] = v;
        strips(lambda, i + 1, m - removed, nu, visit);
    }
    nu[i] = hi;
}

/// `s_λ(x_1, …, x_N)` for an alphabet of polynomials, by enumerating the
/// semistandard tableaux with entries in `1..=N`.
pub fn schur_poly(shape: &Partition, alphabet: &[LaurentPoly]) -> Result<LaurentPoly> {
    let Some(first) = alphabet.first() else {
        return Err(Error::Invalid("schur_poly needs a nonempty alphabet".into()));
    };
    let vars = first.vars().clone();
    let k = first.order();
    let n = shape.size() as usize;
    let mut contents: HashMap<Vec<u32>, u64> = HashMap::new();
    for t in enumerate_ssyt(shape, &vec![n; alphabet.len()]) {
        let mut c = vec![0u32; alphabet.len()];
        for (_, &v) in t.cells() {
            c[v] += 1;
        }
        *contents.entry(c).or_default() += 1;
    }
    let mut powers: Vec<Vec<LaurentPoly>> = Vec::with_capacity(alphabet.len());
    for x in alphabet {
        let mut row = vec![LaurentPoly::one(&vars, k)];
        for e in 1..=n {
            let next = row[e - 1].checked_mul(x)?;
            row.push(next);
        }
        powers.push(row);
    }
    let mut keys: Vec<_> = contents.into_iter().collect();
    keys.sort();
    let mut out = LaurentPoly::zero(&vars, k);
    for (c, count) in keys {
        let mut term = LaurentPoly::constant(&vars, Cyclotomic::from_int(k, count as i64));
        for (i, &e) in c.iter().enumerate() {
            if e > 0 {
                term = &term * &powers[i][e as usize];
            }
        }
        out += &term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vars;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn normalizers() {
        assert_eq!(z_lambda(&p(&[2, 1, 1])), BigInt::from(4));
        assert_eq!(z_lambda(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_lambda(&p(&[])), BigInt::one());
        let g = PartitionTuple::parse("[[1],[1]]").unwrap();
        assert_eq!(class_normalizer(&g, 2), BigInt::from(4));
        let g = PartitionTuple::parse("[[1,1],[]]").unwrap();
        assert_eq!(class_normalizer(&g, 2), BigInt::from(8));
    }

    #[test]
    fn kostka_matches_enumeration() {
        for n in 0..=6 {
            for lam in super::super::enumerate_partitions(n) {
                for mu in super::super::enumerate_partitions(n) {
                    let caps: Vec<usize> = mu.parts().iter().map(|&x| x as usize).collect();
                    assert_eq!(
                        kostka(&lam, mu.parts()),
                        enumerate_ssyt(&lam, &caps).len() as u64,
                        "{lam} {mu}"
                    );
                }
            }
        }
        assert_eq!(kostka(&p(&[2, 1, 1, 1]), &[1, 1, 1, 1, 1]), 4);
        assert_eq!(kostka(&p(&[2, 1, 1, 1]), &[1, 2, 0, 1, 1]), 1);
    }

    #[test]
    fn schur_in_two_variables() {
        let v = Vars::new(["x", "y"]);
        let x = LaurentPoly::var(&v, 1, "x", 1).unwrap();
        let y = LaurentPoly::var(&v, 1, "y", 1).unwrap();
        let s = schur_poly(&p(&[2, 1]), &[x, y]).unwrap();
        assert_eq!(s.to_string(), "x^1*y^2 + x^2*y^1");
    }
}

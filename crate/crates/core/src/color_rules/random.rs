use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ColorRule, ColorSpec};
use crate::algebra::{Cyclotomic, LaurentPoly, Vars};

/// A reproducible random rule for `Z_k ≀ S_n`: up to four colors with
/// values in `0..k`, multiplicities in `1..=n` and weights
/// `ζ^j q^a t^b`. Every fourth seed multiplies two such rules.
pub fn random_rule(n: u32, k: u32, seed: u64) -> ColorRule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rule = plain_random(n, k, &mut rng);
    if seed % 4 == 3 {
        let other = plain_random(n, k, &mut rng);
        return rule.product(&other).expect("same group");
    }
    rule
}

fn plain_random(n: u32, k: u32, rng: &mut ChaCha8Rng) -> ColorRule {
    let vars = Vars::new(["q", "t"]);
    let count = rng.gen_range(1..=4);
    let specs = (0..count)
        .map(|i| {
            let exps = vec![rng.gen_range(0..3), rng.gen_range(0..2)];
            let zeta = if rng.gen_bool(0.25) { rng.gen_range(0..k) } else { 0 };
            ColorSpec {
                id: format!("c{i}"),
                mult: rng.gen_range(1..=n),
                value: rng.gen_range(0..k) as i64,
                weight: LaurentPoly::monomial(&vars, exps, Cyclotomic::root(k, zeta as i64)),
            }
        })
        .collect();
    ColorRule::from_specs(n, k, specs).expect("valid random rule")
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wreath_core::algebra::{Cyclotomic, LaurentPoly, Vars};
use wreath_core::characters::CharacterTable;
use wreath_core::color_rules::*;
use wreath_core::shapes::{enumerate_partitions, enumerate_tuples, schur_poly, Partition, PartitionTuple, Tableau};
use wreath_core::wreath::ColoredPermutation;
use wreath_core::Budget;

fn t(s: &str) -> PartitionTuple {
    PartitionTuple::parse(s).unwrap()
}

fn random_element(n: usize, k: u32, rng: &mut ChaCha8Rng) -> ColoredPermutation {
    let mut images: Vec<u32> = (1..=n as u32).collect();
    for i in (1..n).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    let colors = (0..n).map(|_| rng.gen_range(0..k)).collect();
    ColoredPermutation::new(k, images, colors).unwrap()
}

#[test]
fn defining_rule_values() {
    for (n, k) in [(3, 1), (3, 2), (4, 3)] {
        let f = defining_rule(n, k);
        let mut id = vec![Partition::empty(); k as usize];
        id[0] = Partition::new(vec![1; n as usize]).unwrap();
        let id = PartitionTuple::new(id).unwrap();
        assert_eq!(evaluate(&f, &id).unwrap(), LaurentPoly::from_int(f.vars(), k, n as i64));
        let mut long = vec![Partition::empty(); k as usize];
        long[0] = Partition::new(vec![n]).unwrap();
        assert!(evaluate(&f, &PartitionTuple::new(long).unwrap()).unwrap().is_zero());
    }
    // a coloring of fixed points picks one of them; its root is the weight
    let f = defining_rule(4, 3);
    let v = evaluate(&f, &t("[[1],[],[2,1]]")).unwrap();
    let expected = &Cyclotomic::one(3) + &Cyclotomic::root(3, 2);
    assert_eq!(v.constant_term(), expected);
}

#[test]
fn defining_rule_decomposes_to_one_irreducible() {
    for (n, k) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
        let d = decompose(&defining_rule(n, k)).unwrap();
        let mut parts = vec![Partition::empty(); k as usize];
        parts[0] = Partition::new(vec![n - 1]).unwrap();
        parts[1] = Partition::new(vec![1]).unwrap();
        let expect = PartitionTuple::new(parts).unwrap();
        assert_eq!(d.mults.len(), 1);
        assert!(d.get(&expect).constant_term().is_one());
    }
}

#[test]
fn element_definition_matches_class_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..12 {
        let (n, k) = (1 + seed as u32 % 4, 1 + seed as u32 % 3);
        let f = random_rule(n, k, seed);
        for _ in 0..4 {
            let s = random_element(n as usize, k, &mut rng);
            assert_eq!(evaluate_element(&f, &s).unwrap(), evaluate(&f, &s.class_type()).unwrap());
        }
    }
}

#[test]
fn defining_power_is_trace_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (n, k, m) in [(3, 2, 3), (4, 3, 2), (3, 3, 4)] {
        let f = defining_power(n, k, m);
        for _ in 0..5 {
            let s = random_element(n as usize, k, &mut rng);
            let mut trace = Cyclotomic::zero(k);
            for j in 1..=n {
                if s.image(j) == j {
                    trace += &Cyclotomic::root(k, s.color(j) as i64);
                }
            }
            assert_eq!(evaluate(&f, &s.class_type()).unwrap().constant_term(), trace.pow(m));
        }
    }
}

#[test]
fn products_multiply_class_functions() {
    for seed in 0..6 {
        let f = random_rule(3, 2, seed);
        let g = random_rule(3, 2, seed + 100);
        let fg = f.product(&g).unwrap();
        for lambda in enumerate_tuples(3, 2) {
            let lhs = evaluate(&fg, &lambda).unwrap();
            let a = evaluate(&f, &lambda).unwrap().with_vars(fg.vars()).unwrap();
            let b = evaluate(&g, &lambda).unwrap().with_vars(fg.vars()).unwrap();
            assert_eq!(lhs, &a * &b);
        }
    }
    let def = defining_rule(3, 2);
    let sq = def.product(&def).unwrap();
    for lambda in enumerate_tuples(3, 2) {
        let v = evaluate(&def, &lambda).unwrap();
        assert_eq!(evaluate(&sq, &lambda).unwrap(), &v * &v);
    }
}

#[test]
fn fixed_point_cube_on_32() {
    let f = defining_power(5, 1, 3);
    let d = decompose(&f).unwrap();
    assert_eq!(d.get(&t("[[3,2]]")), LaurentPoly::from_int(f.vars(), 1, 6));
    let shape = t("[[3,2]]");
    assert_eq!(enumerate_ssyt_k(&shape, &f).unwrap().len(), 6);
}

#[test]
fn kronecker_of_tabloid_rules() {
    let f = tabloid_rule(5, &Partition::new(vec![3, 2]).unwrap());
    let g = tabloid_rule(5, &Partition::new(vec![2, 2, 1]).unwrap());
    let fg = f.product(&g).unwrap();
    let shape = t("[[2,1,1,1]]");
    let rows = decompose_by_content(&fg, &shape).unwrap();
    assert_eq!(rows.len(), 5);
    let expected = [
        (["(1,1)", "(1,1)", "(1,2)", "(2,2)", "(2,3)"], 1),
        (["(1,1)", "(1,2)", "(1,2)", "(2,1)", "(2,3)"], 1),
        (["(1,1)", "(1,1)", "(1,3)", "(2,2)", "(2,2)"], 0),
        (["(1,1)", "(1,2)", "(1,3)", "(2,1)", "(2,2)"], 4),
        (["(1,2)", "(1,2)", "(1,3)", "(2,1)", "(2,1)"], 0),
    ];
    for (ids, count) in expected {
        let row = rows.iter().find(|r| r.content.ids(&fg) == ids).expect("content listed");
        assert_eq!(row.tableaux, count, "{ids:?}");
    }
    let d = decompose(&fg).unwrap();
    assert_eq!(d.get(&shape), LaurentPoly::from_int(fg.vars(), 1, 6));
}

#[test]
fn tabloid_rules_give_kostka_numbers() {
    use wreath_core::shapes::kostka;
    for mu in enumerate_partitions(5) {
        let d = decompose(&tabloid_rule(5, &mu)).unwrap();
        for lambda in enumerate_partitions(5) {
            let g = PartitionTuple::new(vec![lambda.clone()]).unwrap();
            let expect = kostka(&lambda, mu.parts()) as i64;
            assert_eq!(d.get(&g), LaurentPoly::from_int(&Vars::none(), 1, expect));
        }
    }
}

#[test]
fn set_partition_tableau_is_a_member() {
    let f = defining_power(8, 2, 10);
    let id = |s: &str| f.index_of(s).unwrap_or_else(|| panic!("no color {s}"));
    let rows = vec![
        vec![vec![id("{1,4}"), id("{7,9}"), id("{}")], vec![id("{}")]],
        vec![vec![id("{2}"), id("{8}")], vec![id("{3,5,6}"), id("{10}")]],
    ];
    let tab = Tableau::from_rows(rows).unwrap();
    assert_eq!(tab.shape(), &t("[[3,1],[2,2]]"));
    assert!(is_ssyt_k(&f, &tab));
    // swapping the two sets in the second component breaks the row order
    let rows = vec![
        vec![vec![id("{1,4}"), id("{7,9}"), id("{}")], vec![id("{}")]],
        vec![vec![id("{8}"), id("{2}")], vec![id("{3,5,6}"), id("{10}")]],
    ];
    assert!(!is_ssyt_k(&f, &Tableau::from_rows(rows).unwrap()));
}

#[test]
fn membership_agrees_with_enumeration() {
    let f = defining_power(3, 2, 3);
    for g in enumerate_tuples(3, 2) {
        let all = enumerate_ssyt_k(&g, &f).unwrap();
        for (tab, _) in &all {
            assert!(is_ssyt_k(&f, tab));
        }
        assert_eq!(count_ssyt_k(&g, &f).unwrap(), decompose(&f).unwrap().get(&g));
    }
}

#[test]
fn empty_when_a_residue_class_is_too_small() {
    let f = defining_rule(3, 2);
    assert!(enumerate_ssyt_k(&t("[[1],[2]]"), &f).unwrap().is_empty());
}

#[test]
fn kostka_route_matches_brute_force() {
    let budget = Budget::default();
    for seed in 0..16u64 {
        let (n, k) = (1 + (seed % 3) as u32, 1 + (seed % 3) as u32 % 3);
        let f = random_rule(n, k, seed);
        assert_eq!(decompose(&f).unwrap(), brute_force_decompose(&f, &budget).unwrap(), "seed {seed}");
    }
    let named = [
        defining_rule(3, 2),
        defining_power(3, 2, 4),
        tabloid_rule(4, &Partition::new(vec![2, 1, 1]).unwrap()),
        monomial_rule(3, &[2, 1]),
        natural_rule(3, 2, 3),
        basis_rule(&t("[[1],[2]]")),
        trivial_rule(3, 3),
    ];
    for f in &named {
        assert_eq!(decompose(f).unwrap(), brute_force_decompose(f, &budget).unwrap());
    }
}

#[test]
fn decomposition_reproduces_the_class_function() {
    for seed in [1u64, 3, 5] {
        let f = random_rule(3, 2, seed);
        let d = decompose(&f).unwrap();
        assert_eq!(d.synthesize().unwrap(), class_function(&f).unwrap());
    }
}

#[test]
fn trivial_rule_is_the_trivial_character() {
    let d = decompose(&trivial_rule(3, 2)).unwrap();
    assert_eq!(d.mults.len(), 1);
    assert!(d.get(&t("[[3],[]]")).constant_term().is_one());
}

#[test]
fn basis_rules_are_unitriangular() {
    for lambda in enumerate_tuples(3, 2) {
        let d = decompose(&basis_rule(&lambda)).unwrap();
        assert!(d.get(&lambda).constant_term().is_one());
        for g in d.support() {
            for (a, b) in g.components().iter().zip(lambda.components()) {
                assert_eq!(a.size(), b.size());
                assert!(a.dominates(b), "{g} vs {lambda}");
            }
        }
    }
}

#[test]
fn monomial_rule_matches_schur_expansion() {
    let d = [2u32, 1];
    let f = monomial_rule(3, &d);
    let dec = decompose(&f).unwrap();
    let vars = f.vars().clone();
    let mut alphabet = Vec::new();
    for a in 0..=d[0] as i32 {
        for b in 0..=d[1] as i32 {
            alphabet.push(LaurentPoly::monomial(&vars, vec![a, b], Cyclotomic::one(1)));
        }
    }
    let target = [d[0] as i32, d[1] as i32];
    for lambda in enumerate_partitions(3) {
        let s = schur_poly(&lambda, &alphabet).unwrap();
        let g = PartitionTuple::new(vec![lambda]).unwrap();
        assert_eq!(dec.get(&g).coeff(&target), s.coeff(&target));
    }
}

#[test]
fn tensor_support_matches_decomposition() {
    for (n, k) in [(2, 2), (3, 2), (3, 3)] {
        for m in 0..=2 * k + 4 {
            let d = decompose(&defining_power(n, k, m)).unwrap();
            for g in enumerate_tuples(n, k as usize) {
                assert_eq!(tensor_support(&g, m as u64), !d.get(&g).is_zero(), "{g} m={m}");
            }
        }
    }
    assert_eq!(n_of(&t("[[2],[1],[]]")), 1);
    assert_eq!(n_of(&t("[[3],[],[]]")), 0);
}

#[test]
fn color_order_does_not_matter() {
    for seed in [0u64, 2, 6] {
        let f = random_rule(3, 2, seed);
        let text = f.to_json();
        let mut rev = text.clone();
        rev["colors"].as_array_mut().unwrap().reverse();
        let g = ColorRule::from_json(&rev.to_string()).unwrap();
        assert_eq!(decompose(&f).unwrap(), decompose(&g).unwrap());
    }
}

#[test]
fn monomial_weights_give_nonnegative_multiplicities() {
    for seed in 0..10u64 {
        let f = random_rule(3, 1, seed);
        assert!(decompose(&f).unwrap().is_nonnegative_integral());
    }
}

#[test]
fn character_table_cache_is_shared() {
    let a = CharacterTable::cached(2, 2).unwrap();
    let b = CharacterTable::cached(2, 2).unwrap();
    assert!(std::sync::Arc::ptr_eq(&a, &b));
}

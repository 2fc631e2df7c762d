use proptest::prelude::*;
use wreath_core::algebra::{Cyclotomic, LaurentPoly, Vars};
use wreath_core::color_rules::*;
use wreath_core::involution::*;
use wreath_core::shapes::{enumerate_tuples, PartitionTuple};
use wreath_core::wreath::ColoredPermutation;
use wreath_core::Budget;

fn t(s: &str) -> PartitionTuple {
    PartitionTuple::parse(s).unwrap()
}

/// `(row, col, root, index)` along the path.
fn hook(comp: usize, color: usize, cells: &[(usize, usize, u32, u32)]) -> DecoratedHook {
    DecoratedHook {
        comp,
        cells: cells.iter().map(|&(r, c, _, _)| (r, c)).collect(),
        entries: cells.iter().map(|&(_, _, root, index)| Entry { index, root }).collect(),
        color,
    }
}

/// Colors `f1, f2, f3` with values 1, 2, 3 and symbolic weights.
fn three_color_rule(n: u32, k: u32, mults: [u32; 3]) -> ColorRule {
    let vars = Vars::new(["r1", "r2", "r3"]);
    let specs = (0..3)
        .map(|i| ColorSpec {
            id: format!("f{}", i + 1),
            mult: mults[i],
            value: i as i64 + 1,
            weight: LaurentPoly::var(&vars, k, &format!("r{}", i + 1), 1).unwrap(),
        })
        .collect();
    ColorRule::from_specs(n, k, specs).unwrap()
}

fn eight_cell_object() -> DecoratedRht {
    DecoratedRht::new(
        t("[[2,1],[2,2],[1]]"),
        3,
        vec![
            hook(2, 2, &[(0, 0, 0, 1)]),
            hook(0, 1, &[(1, 0, 1, 5)]),
            hook(1, 0, &[(1, 0, 0, 2), (1, 1, 1, 6), (0, 1, 0, 4)]),
            hook(1, 0, &[(0, 0, 2, 3)]),
            hook(0, 0, &[(0, 0, 2, 7), (0, 1, 1, 8)]),
        ],
    )
}

fn eight_cell_partner() -> DecoratedRht {
    DecoratedRht::new(
        t("[[2,1],[2,2],[1]]"),
        3,
        vec![
            hook(2, 2, &[(0, 0, 0, 1)]),
            hook(0, 1, &[(1, 0, 1, 5)]),
            hook(1, 0, &[(1, 0, 0, 2), (1, 1, 1, 6)]),
            hook(1, 0, &[(0, 0, 2, 3), (0, 1, 0, 4)]),
            hook(0, 0, &[(0, 0, 2, 7), (0, 1, 1, 8)]),
        ],
    )
}

#[test]
fn eight_cell_object_and_weight() {
    let rule = three_color_rule(8, 3, [6, 1, 1]);
    let p = eight_cell_object();
    p.validate(&rule).unwrap();
    let sigma = ColoredPermutation::parse_cycles(8, 3, "u0 1 | u0 2 u1 6 u0 4 | u2 3 | u1 5 | u2 7 u1 8").unwrap();
    assert_eq!(p.permutation().unwrap(), sigma);
    assert_eq!(p.south_steps(), 1);

    // factor u_r^{p(f) - b} ρ(f) for the cells holding 1..8
    let factors: [(u32, i64, i64, &str); 8] = [
        (0, 3, 2, "r3"),
        (0, 1, 1, "r1"),
        (2, 1, 1, "r1"),
        (0, 1, 1, "r1"),
        (1, 2, 0, "r2"),
        (1, 1, 1, "r1"),
        (2, 1, 0, "r1"),
        (1, 1, 0, "r1"),
    ];
    let mut expected = LaurentPoly::from_int(rule.vars(), 3, -1);
    for (root, value, comp, var) in factors {
        let rho = LaurentPoly::var(rule.vars(), 3, var, 1).unwrap();
        expected = (&expected * &rho).scale(&Cyclotomic::root(3, root as i64 * (value - comp)));
    }
    assert_eq!(p.weight(&rule).unwrap(), expected);
    assert_eq!(expected.to_string(), LaurentPoly::parse(rule.vars(), 3, "-z3^2*r1^6*r2*r3").unwrap().to_string());

}

#[test]
fn eight_cell_object_pairs_with_its_partner() {
    let rule = three_color_rule(8, 3, [6, 1, 1]);
    let p = eight_cell_object();
    let q = eight_cell_partner();
    q.validate(&rule).unwrap();
    assert_eq!(psi(&p), q);
    assert_eq!(psi(&q), p);
    assert_eq!(q.south_steps(), 0);
    assert_eq!(q.weight(&rule).unwrap(), -&p.weight(&rule).unwrap());
}

fn check_golden(name: &str, drawn: &str) {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, drawn).unwrap();
    }
    assert_eq!(drawn, std::fs::read_to_string(&path).unwrap(), "{name}");
}

#[test]
fn eight_cell_rendering() {
    let rule = three_color_rule(8, 3, [6, 1, 1]);
    check_golden("eight_cells.txt", &eight_cell_object().render(&rule));
    check_golden("eight_cells_partner.txt", &eight_cell_partner().render(&rule));
}

/// Objects on one row of eight, one of six and one of three cells whose
/// long rows are joined through a single column.
fn seventeen_cells(joined: bool) -> DecoratedRht {
    let mut hooks = vec![
        hook(0, 0, &[(0, 0, 5, 9)]),
        hook(0, 1, &[(1, 0, 1, 10)]),
        hook(0, 1, &[(1, 4, 1, 2), (1, 5, 3, 13)]),
        hook(0, 2, &[(2, 0, 1, 1), (2, 1, 0, 19), (2, 2, 2, 17)]),
    ];
    if joined {
        hooks.push(hook(
            0,
            1,
            &[
                (1, 1, 2, 3),
                (1, 2, 0, 16),
                (1, 3, 3, 18),
                (0, 3, 1, 14),
                (0, 4, 0, 5),
                (0, 5, 0, 7),
                (0, 6, 2, 4),
                (0, 7, 0, 6),
            ],
        ));
        hooks.push(hook(0, 1, &[(0, 1, 3, 12), (0, 2, 0, 15)]));
    } else {
        hooks.push(hook(0, 1, &[(1, 1, 2, 3), (1, 2, 0, 16), (1, 3, 3, 18)]));
        hooks.push(hook(0, 1, &[(0, 1, 3, 12), (0, 2, 0, 15), (0, 3, 1, 14)]));
        hooks.push(hook(0, 1, &[(0, 4, 0, 5), (0, 5, 0, 7)]));
        hooks.push(hook(0, 1, &[(0, 6, 2, 4), (0, 7, 0, 6)]));
    }
    DecoratedRht::new(t("[[8,6,3],[],[],[],[],[]]"), 6, hooks)
}

#[test]
fn long_rows_swap_under_psi() {
    let a = seventeen_cells(false);
    let b = seventeen_cells(true);
    assert_eq!(psi(&a), b);
    assert_eq!(psi(&b), a);
    assert_eq!(b.south_steps(), a.south_steps() + 1);
}

#[test]
fn root_rotation_orbit() {
    let vars = Vars::none();
    let specs = vec![
        ColorSpec { id: "f1".into(), mult: 2, value: 1, weight: LaurentPoly::one(&vars, 3) },
        ColorSpec { id: "f2".into(), mult: 1, value: 2, weight: LaurentPoly::one(&vars, 3) },
    ];
    let rule = ColorRule::from_specs(3, 3, specs).unwrap();
    let p = DecoratedRht::new(
        t("[[2,1],[],[]]"),
        3,
        vec![hook(0, 1, &[(1, 0, 1, 2)]), hook(0, 0, &[(0, 0, 0, 1), (0, 1, 0, 3)])],
    );
    p.validate(&rule).unwrap();
    assert!(is_psi_fixed(&p));
    assert!(!is_final(&p, &rule));
    let mut orbit = vec![p.clone()];
    loop {
        let next = psi_prime(orbit.last().unwrap(), &rule).unwrap();
        if next == p {
            break;
        }
        orbit.push(next);
    }
    let weights: Vec<Cyclotomic> = orbit.iter().map(|q| q.weight(&rule).unwrap().constant_term()).collect();
    let u = |e| Cyclotomic::root(3, e);
    assert_eq!(weights, vec![u(2), &u(2) * &u(1), &u(2) * &u(2)]);
    let total = weights.iter().fold(Cyclotomic::zero(3), |a, w| &a + w);
    assert!(total.is_zero());
}

#[test]
fn final_count_for_two_singletons() {
    let vars = Vars::none();
    let specs = vec![
        ColorSpec { id: "f1".into(), mult: 1, value: 0, weight: LaurentPoly::one(&vars, 2) },
        ColorSpec { id: "f2".into(), mult: 1, value: 1, weight: LaurentPoly::one(&vars, 2) },
    ];
    let rule = ColorRule::from_specs(2, 2, specs).unwrap();
    let g = t("[[1],[1]]");
    assert_eq!(enumerate_ssyt_k(&g, &rule).unwrap().len(), 1);
    let finals = final_fixed_points(&g, &rule, &Budget::default()).unwrap();
    assert_eq!(finals.len(), 2 * 4);
    let report = audit(&g, &rule, &Budget::default()).unwrap();
    assert!(report.holds(), "{}", report.to_json());
    assert_eq!(report.final_fixed, 8);
}

#[test]
fn reconstructed_weight_ignores_the_element() {
    let rule = three_color_rule(3, 2, [2, 2, 2]);
    let g = t("[[2],[1]]");
    for (tab, rho) in enumerate_ssyt_k(&g, &rule).unwrap() {
        for sigma in wreath_core::wreath::enumerate_group(3, 2, &Budget::default()).unwrap() {
            let p = reconstruct(&tab, &sigma).unwrap();
            p.validate(&rule).unwrap();
            assert!(is_final(&p, &rule));
            assert_eq!(p.weight(&rule).unwrap(), rho);
            assert_eq!(deconstruct(&p).unwrap(), (tab.clone(), sigma));
        }
    }
}

#[test]
fn single_cell_trivial_rule() {
    let rule = trivial_rule(1, 1);
    let objs = enumerate_objects(&t("[[1]]"), &rule, &Budget::default()).unwrap();
    assert_eq!(objs.len(), 1);
    assert_eq!(objs[0].weight(&rule).unwrap(), LaurentPoly::one(rule.vars(), 1));
}

#[test]
fn flat_semistandard_objects_are_fixed() {
    let rule = natural_rule(3, 2, 3);
    let g = t("[[2],[1]]");
    for p in enumerate_objects(&g, &rule, &Budget::default()).unwrap() {
        if p.is_flat() && p.colors_tableau().is_semistandard() {
            assert!(is_psi_fixed(&p));
        }
    }
}

#[test]
fn oversized_requests_are_refused() {
    let rule = trivial_rule(6, 1);
    assert!(matches!(
        enumerate_objects(&t("[[6]]"), &rule, &Budget::default()),
        Err(wreath_core::Error::Budget { .. })
    ));
}

fn audit_all(n: u32, k: u32, rules: &[ColorRule]) {
    for g in enumerate_tuples(n, k as usize) {
        for rule in rules {
            let report = audit(&g, rule, &Budget::default()).unwrap();
            assert!(report.holds(), "{g}: {}", report.to_json());
        }
    }
}

#[test]
fn exhaustive_audit_named_rules() {
    for n in 1..=3 {
        for k in 1..=3 {
            audit_all(n, k, &[trivial_rule(n, k), defining_rule(n, k), natural_rule(n, k, 2)]);
        }
    }
}

#[test]
fn exhaustive_audit_products() {
    audit_all(3, 2, &[defining_power(3, 2, 2)]);
    audit_all(2, 3, &[defining_power(2, 3, 3)]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn audit_random_rules(n in 1u32..=3, k in 1u32..=3, seed in 0u64..1000, pick in 0usize..64) {
        let rule = random_rule(n, k, seed);
        let shapes = enumerate_tuples(n, k as usize);
        let g = &shapes[pick % shapes.len()];
        let report = audit(g, &rule, &Budget::default()).unwrap();
        prop_assert!(report.holds(), "{}", report.to_json());
    }

    #[test]
    fn psi_is_an_involution(n in 1u32..=4, k in 1u32..=2, seed in 0u64..1000, pick in 0usize..64) {
        let rule = random_rule(n, k, seed);
        let shapes = enumerate_tuples(n, k as usize);
        let g = &shapes[pick % shapes.len()];
        for p in enumerate_objects(g, &rule, &Budget::default()).unwrap() {
            let q = psi(&p);
            prop_assert_eq!(&psi(&q), &p);
            if q != p {
                prop_assert_eq!(q.weight(&rule).unwrap(), -&p.weight(&rule).unwrap());
                prop_assert_eq!((q.south_steps() as i64 - p.south_steps() as i64).abs(), 1);
            }
        }
    }
}

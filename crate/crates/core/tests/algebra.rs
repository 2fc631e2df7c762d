use proptest::prelude::*;
use wreath_core::algebra::{rat, Cyclotomic, LaurentPoly, Vars};

fn cyclo(k: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-4i64..=4, k as usize).prop_map(move |c| Cyclotomic::from_power_counts(k, &c))
}

fn poly(k: u32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-2i32..=2, -2i32..=2), prop::collection::vec(-3i64..=3, k as usize)), 0..5).prop_map(
        move |terms| {
            let vars = Vars::new(["q", "t"]);
            let mut p = LaurentPoly::zero(&vars, k);
            for ((a, b), c) in terms {
                p.add_term(vec![a, b], &Cyclotomic::from_power_counts(k, &c));
            }
            p
        },
    )
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

#[test]
fn roots_of_unity() {
    for k in 1..=12u32 {
        let z = Cyclotomic::root(k, 1);
        assert!(z.pow(k).is_one());
        let mut sum = Cyclotomic::zero(k);
        for j in 0..k {
            sum += &Cyclotomic::root(k, j as i64);
            if j > 0 {
                assert!(!z.pow(j).is_one(), "k = {k}, j = {j}");
            }
        }
        assert_eq!(sum.is_zero(), k > 1);
    }
}

#[test]
fn embedding_keeps_values() {
    let z = Cyclotomic::root(3, 1);
    let e = z.embed(6).unwrap();
    assert_eq!(e, Cyclotomic::root(6, 2));
    assert!(z.embed(4).is_err());
}

#[test]
fn parse_and_print() {
    let vars = Vars::new(["q", "t"]);
    let p = LaurentPoly::parse(&vars, 3, "3*q^-2*t^1 + z3^1 - 2").unwrap();
    assert_eq!(LaurentPoly::parse(&vars, 3, &p.to_string()).unwrap(), p);
    assert!(LaurentPoly::parse(&vars, 3, "3*x^2").is_err());
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in (1u32..=9).prop_flat_map(|k| (cyclo(k), cyclo(k), cyclo(k)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        let (x, y) = (a.to_complex(), b.to_complex());
        prop_assert!(close((&a * &b).to_complex(), (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
        prop_assert!(close(a.conj().to_complex(), (x.0, -x.1)));
    }

    #[test]
    fn galois_action_is_multiplicative(m in 1i64..=20, a in cyclo(7), b in cyclo(7)) {
        if m % 7 != 0 {
            prop_assert_eq!((&a * &b).galois(m), &a.galois(m) * &b.galois(m));
            prop_assert_eq!((&a + &b).galois(m), &a.galois(m) + &b.galois(m));
        }
    }

    #[test]
    fn polynomial_ring(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(LaurentPoly::parse(a.vars(), 3, &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn specialization_is_a_ring_map(a in poly(2), b in poly(2), v in 1i64..=3) {
        let s = |p: &LaurentPoly| p.specialize(0, &rat(v)).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn adams_is_a_ring_map(a in poly(1), b in poly(1), m in 1i32..=3) {
        let p = |x: &LaurentPoly| x.adams(m).unwrap();
        prop_assert_eq!(p(&(&a * &b)), &p(&a) * &p(&b));
        prop_assert_eq!(p(&(&a + &b)), &p(&a) + &p(&b));
    }
}

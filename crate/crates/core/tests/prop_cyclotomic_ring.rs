use num_traits::ToPrimitive;
use proptest::prelude::*;
use prym_core::cyclotomic::{euler_phi, Cyclotomic};

/// Floating-point value at `exp(2πi/e)`, independent of the reduction modulo
/// the cyclotomic polynomial.
fn eval(x: &Cyclotomic) -> (f64, f64) {
    let e = x.order() as f64;
    x.coeffs()
        .iter()
        .enumerate()
        .fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap();
            let t = std::f64::consts::TAU * k as f64 / e;
            (re + c * t.cos(), im + c * t.sin())
        })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs() + a.1.abs();
    (a.0 - b.0).abs() < 1e-6 * scale && (a.1 - b.1).abs() < 1e-6 * scale
}

fn element(e: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-5i64..=5, e as usize)
        .prop_map(move |c| Cyclotomic::from_integer_exponents(e, &c))
}

fn triple() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(vec![3u32, 4, 5, 8, 12])
        .prop_flat_map(|e| (Just(e), element(e), element(e), element(e)))
}

fn unit(e: u32) -> impl Strategy<Value = i64> {
    (1..e as i64).prop_filter("unit", move |&k| num_integer::gcd(k, e as i64) == 1)
}

proptest! {
    #[test]
    fn canonical_form_has_phi_coefficients((e, a, _, _) in triple()) {
        prop_assert_eq!(a.coeffs().len(), euler_phi(e) as usize);
    }

    #[test]
    fn addition_and_multiplication_commute((_, a, b, _) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn associativity((_, a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributivity((_, a, b, c) in triple()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn identities_and_inverses((e, a, _, _) in triple()) {
        prop_assert_eq!(&a + &Cyclotomic::zero(e), a.clone());
        prop_assert_eq!(&a * &Cyclotomic::one(e), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a - &a, Cyclotomic::zero(e));
    }

    #[test]
    fn products_match_numeric_evaluation((_, a, b, _) in triple()) {
        let (x, y) = (eval(&a), eval(&b));
        prop_assert!(close(eval(&(&a * &b)), (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
        prop_assert!(close(eval(&(&a + &b)), (x.0 + y.0, x.1 + y.1)));
    }

    #[test]
    fn galois_action_is_a_ring_automorphism((e, a, b, _) in triple(), k in 1i64..64) {
        prop_assume!(num_integer::gcd(k, e as i64) == 1);
        let s = |x: &Cyclotomic| x.galois_apply(k).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn galois_actions_compose(
        (e, k1, k2, a) in prop::sample::select(vec![3u32, 4, 5, 8, 12])
            .prop_flat_map(|e| (Just(e), unit(e), unit(e), element(e)))
    ) {
        let twice = a.galois_apply(k1).unwrap().galois_apply(k2).unwrap();
        prop_assert_eq!(twice, a.galois_apply((k1 * k2) % e as i64).unwrap());
        prop_assert_eq!(a.conj(), a.galois_apply(-1).unwrap());
    }

    #[test]
    fn non_units_are_rejected((e, a, _, _) in triple()) {
        prop_assert!(a.galois_apply(e as i64).is_err());
    }

    #[test]
    fn embedding_is_a_ring_homomorphism((e, a, b, _) in triple(), m in 1u32..4) {
        let big = e * m;
        let emb = |x: &Cyclotomic| x.embed(big).unwrap();
        prop_assert_eq!(emb(&(&a * &b)), &emb(&a) * &emb(&b));
        prop_assert!(close(eval(&emb(&a)), eval(&a)));
    }
}

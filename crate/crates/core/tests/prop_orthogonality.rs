use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use prym_core::characters::CharacterTable;
use prym_core::cyclotomic::Cyclotomic;
use prym_core::{realize_group, PermGroup, Permutation};

fn check_table(g: &PermGroup) -> Result<(), TestCaseError> {
    let t = CharacterTable::new(g).unwrap();
    let k = t.class_count();
    prop_assert_eq!(t.chars.len(), k);
    prop_assert!(t.chars[0]
        .values
        .iter()
        .all(|v| *v == Cyclotomic::one(t.exponent)));
    let mut sum_sq = 0u64;
    for (i, a) in t.chars.iter().enumerate() {
        prop_assert_eq!(g.order() as u64 % a.degree, 0);
        sum_sq += a.degree * a.degree;
        for (j, b) in t.chars.iter().enumerate() {
            let ip = t.inner_product(&a.values, &b.values).unwrap();
            let want = if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            prop_assert_eq!(ip, want, "rows {} {}", i, j);
        }
    }
    prop_assert_eq!(sum_sq, g.order() as u64);
    for x in 0..k {
        for y in 0..k {
            let mut s = Cyclotomic::zero(t.exponent);
            for chi in &t.chars {
                s = &s + &(&chi.values[x] * &chi.values[y].conj());
            }
            let want = if x == y {
                (g.order() / t.classes[x].size) as i64
            } else {
                0
            };
            prop_assert_eq!(
                s.as_rational(),
                Some(BigRational::from_integer(BigInt::from(want)))
            );
        }
    }
    Ok(())
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_permutation_groups(
        (degree, a, b) in (2usize..=6).prop_flat_map(|d| (Just(d), permutation(d), permutation(d)))
    ) {
        let g = PermGroup::generate(degree, &[a, b], 10_000).unwrap();
        check_table(&g)?;
    }

    #[test]
    fn catalog_groups(spec in prop::sample::select(vec![
        "sym(3)", "sym(4)", "sym(5)", "alt(4)", "alt(5)", "dihedral(5)", "dihedral(8)",
        "cyclic(7)", "cyclic(12)", "weylD(3)", "rot(weylD(4))", "product(dihedral(3),cyclic(4))",
    ])) {
        check_table(&realize_group(spec, 10_000).unwrap())?;
    }
}

use proptest::prelude::*;
use prym_core::lattice::{minimal_overgroups, subgroups_up_to_conjugacy};
use prym_core::prym::{check_hypothesis, GroupContext, HypothesisFailure};
use prym_core::{realize_group, PermGroup, Permutation};

/// Whenever maximality fails through an overgroup `N`, that `N` has one-dimensional
/// fixed spaces for every chosen representation, so it satisfies the fixed-dimension item.
fn check_maximality(ctx: &GroupContext) -> Result<(), TestCaseError> {
    let subgroups = subgroups_up_to_conjugacy(&ctx.group, usize::MAX, usize::MAX).subgroups;
    for h in &subgroups {
        for i in ctx.nontrivial_irreps() {
            if ctx.fixed_dim(i, h).unwrap() != 1 {
                continue;
            }
            let report = check_hypothesis(ctx, h, &[i]).unwrap();
            for f in &report.failures {
                let HypothesisFailure::NotMaximal {
                    overgroup_order, ..
                } = f
                else {
                    continue;
                };
                let n = minimal_overgroups(&ctx.group, h)
                    .unwrap()
                    .into_iter()
                    .find(|n| n.order() == *overgroup_order && ctx.fixed_dim(i, n).unwrap() > 0);
                prop_assert!(
                    n.is_some(),
                    "reported overgroup of order {}",
                    overgroup_order
                );
                let n = n.unwrap();
                prop_assert_eq!(ctx.fixed_dim(i, &n).unwrap(), 1);
                let over = check_hypothesis(ctx, &n, &[i]).unwrap();
                let fixed_ok = over
                    .failures
                    .iter()
                    .all(|f| !matches!(f, HypothesisFailure::FixedDimension { .. }));
                prop_assert!(fixed_ok);
            }
            let blocked = minimal_overgroups(&ctx.group, h)
                .unwrap()
                .iter()
                .any(|n| ctx.fixed_dim(i, n).unwrap() > 0);
            prop_assert_eq!(report.pass, !blocked);
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
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_permutation_groups(
        (degree, a, b) in (2usize..=5).prop_flat_map(|d| (Just(d), permutation(d), permutation(d)))
    ) {
        let g = PermGroup::generate(degree, &[a, b], 10_000).unwrap();
        check_maximality(&GroupContext::new(g).unwrap())?;
    }

    #[test]
    fn catalog_groups(spec in prop::sample::select(vec![
        "sym(3)", "sym(4)", "alt(4)", "alt(5)", "dihedral(6)", "weylD(3)",
        "product(dihedral(3),cyclic(2))",
    ])) {
        check_maximality(&GroupContext::new(realize_group(spec, 10_000).unwrap()).unwrap())?;
    }
}

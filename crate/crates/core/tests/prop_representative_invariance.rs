use proptest::prelude::*;
use prym_core::cosets::DoubleCosetData;
use prym_core::hecke::coefficients_a;
use prym_core::lattice::subgroups_up_to_conjugacy;
use prym_core::prym::GroupContext;
use prym_core::realize_group;

fn context(spec: &str) -> GroupContext {
    GroupContext::new(realize_group(spec, 10_000).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `Σ_{h∈H} tr χ(h g^{-1})` is the same for every `g` in a double coset.
    #[test]
    fn coefficients_are_constant_on_double_cosets(
        spec in prop::sample::select(vec!["sym(4)", "alt(5)", "dihedral(6)", "weylD(3)", "product(dihedral(3),sym(2))"]),
        pick in any::<prop::sample::Index>(),
        rep in any::<prop::sample::Index>(),
        seed in any::<u64>(),
    ) {
        let ctx = context(spec);
        let g = &ctx.group;
        let subgroups = subgroups_up_to_conjugacy(g, usize::MAX, usize::MAX).subgroups;
        let h = pick.get(&subgroups);
        let w = rep.get(&ctx.irreps);
        let dc = DoubleCosetData::new(g, h).unwrap();
        let a = coefficients_a(g, &dc, w).unwrap();
        for x in 0..g.order() {
            let xi = g.inv(x);
            let direct: i64 = h.elements().iter().map(|&y| w.trace_values[g.class_of(g.mul(y, xi))]).sum();
            prop_assert_eq!(direct, a[dc.index_of[x]]);
        }
        // A different choice of simultaneous representatives gives the same coefficients.
        let scramble = |x: usize| (x as u64 ^ seed).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let other = DoubleCosetData::with_key(g, h, scramble).unwrap();
        let b = coefficients_a(g, &other, w).unwrap();
        for x in 0..g.order() {
            prop_assert_eq!(a[dc.index_of[x]], b[other.index_of[x]]);
        }
        for (i, reps) in other.reps.iter().enumerate() {
            prop_assert_eq!(reps.len(), other.sizes[i]);
            for &r in reps {
                prop_assert_eq!(other.index_of[r], i);
            }
        }
    }
}

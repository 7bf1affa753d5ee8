use proptest::prelude::*;
use prym_core::lattice::subgroups_up_to_conjugacy;
use prym_core::prym::{
    admissibility_table, check_hypothesis, scan_subgroups, GroupContext, SearchBounds,
};
use prym_core::realize_group;

fn context(spec: &str) -> GroupContext {
    GroupContext::new(realize_group(spec, 10_000).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scan_output_is_invariant_under_conjugation(
        spec in prop::sample::select(vec!["sym(4)", "alt(5)", "dihedral(6)", "weylD(3)", "rot(weylD(4))", "product(dihedral(3),sym(2))"]),
        pick in any::<prop::sample::Index>(),
        by in any::<prop::sample::Index>(),
    ) {
        let ctx = context(spec);
        let g = &ctx.group;
        let subgroups = subgroups_up_to_conjugacy(g, usize::MAX, usize::MAX).subgroups;
        let h = pick.get(&subgroups).clone();
        let x = by.index(g.order());
        let k = g.conjugate_subgroup(&h, x);
        prop_assert_eq!(k.order(), h.order());

        let bounds = SearchBounds { max_r: 2, ..SearchBounds::default() };
        let a = scan_subgroups(&ctx, std::slice::from_ref(&h), &bounds).unwrap();
        let b = scan_subgroups(&ctx, std::slice::from_ref(&k), &bounds).unwrap();
        prop_assert_eq!(a.len(), b.len());
        for (s, t) in a.iter().zip(&b) {
            prop_assert_eq!(&s.triple.reps, &t.triple.reps);
            let (u, v) = (&s.triple.tuple, &t.triple.tuple);
            prop_assert_eq!((u.b, u.b1, u.q, u.deg_k, u.c), (v.b, v.b1, v.q, v.deg_k, v.c));
            let mut bu = u.b_i.clone();
            let mut bv = v.b_i.clone();
            bu.sort_unstable();
            bv.sort_unstable();
            prop_assert_eq!(bu, bv);
            prop_assert_eq!(&s.triple.identities, &t.triple.identities);
            let ru = admissibility_table(&ctx, &h, &s.triple.reps, u).unwrap();
            let rv = admissibility_table(&ctx, &k, &t.triple.reps, v).unwrap();
            prop_assert_eq!(ru, rv);
        }
        for i in ctx.nontrivial_irreps() {
            prop_assert_eq!(ctx.fixed_dim(i, &h).unwrap(), ctx.fixed_dim(i, &k).unwrap());
            prop_assert_eq!(
                check_hypothesis(&ctx, &h, &[i]).unwrap().pass,
                check_hypothesis(&ctx, &k, &[i]).unwrap().pass
            );
        }
    }
}

use lnl_core::lnl::Tag;
use lnl_core::terms::*;
use proptest::prelude::*;

/// A term over g/2, k/1, c/0 whose leaves are the given variables, in order.
fn term_over(vars: Vec<String>) -> BoxedStrategy<Term> {
    match vars.len() {
        0 => prop_oneof![Just(Term::App("c".into(), vec![])), Just(Term::App("k".into(), vec![Term::App("c".into(), vec![])]))].boxed(),
        1 => {
            let v = Term::Var(vars[0].clone());
            prop_oneof![Just(v.clone()), Just(Term::App("k".into(), vec![v]))].boxed()
        }
        n => (1..n)
            .prop_flat_map(move |cut| {
                let (l, r) = (vars[..cut].to_vec(), vars[cut..].to_vec());
                (term_over(l), term_over(r)).prop_map(|(a, b)| Term::App("g".into(), vec![a, b]))
            })
            .boxed(),
    }
}

/// A context with `prefix`-named variables and a valid term in it.
fn term_in_context(prefix: &'static str) -> impl Strategy<Value = (Context, Term)> {
    (0usize..3, 0usize..3, 0usize..3).prop_flat_map(move |(nl, nn, extra)| {
        let lin: Vec<String> = (0..nl).map(|i| format!("{prefix}l{i}")).collect();
        let non: Vec<String> = (0..nn).map(|i| format!("{prefix}n{i}")).collect();
        let mut leaves = lin.clone();
        if nn > 0 {
            leaves.extend((0..extra).map(|i| non[i % nn].clone()));
        }
        let ctx = Context::new(
            lin.iter().map(|n| (n.clone(), Tag::Lin)).chain(non.iter().map(|n| (n.clone(), Tag::NonLin))).collect(),
        )
        .unwrap();
        Just(leaves).prop_shuffle().prop_flat_map(term_over).prop_map(move |t| (ctx.clone(), t))
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_identity((ctx, t) in term_in_context("a")) {
        prop_assert_eq!(Term::parse(&t.to_string()).unwrap(), t);
        prop_assert_eq!(Context::parse(&ctx.to_string()).unwrap(), ctx);
    }

    #[test]
    fn generated_terms_are_valid((ctx, t) in term_in_context("a")) {
        let r = check_term(&ctx, &t, &Signature::small());
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn substitution_keeps_linear_counts((ct, t) in term_in_context("a"), (cs, s) in term_in_context("b"), pick in any::<prop::sample::Index>()) {
        prop_assume!(!ct.entries.is_empty());
        let (var, tag) = ct.entries[pick.index(ct.entries.len())].clone();
        let sig = Signature::small();
        let (u, cu) = subst(&t, &ct, &var, &s, &cs, &sig).unwrap();
        prop_assert!(check_term(&cu, &u, &sig).passed());
        for (v, own) in &cs.entries {
            let want = if *own == Tag::Lin && tag == Tag::Lin { Tag::Lin } else { Tag::NonLin };
            prop_assert_eq!(cu.tag_of(v), Some(want));
        }
        prop_assert_eq!(cu.tag_of(&var), None);
        if tag == Tag::Lin {
            prop_assert_eq!(u.uses(&var), 0);
        }
    }

    #[test]
    fn seeds_give_reproducible_trials(seed in any::<u64>()) {
        let a = tag_arithmetic_check(20, seed);
        prop_assert!(a.passed(), "{}", a);
        prop_assert_eq!(a, tag_arithmetic_check(20, seed));
    }
}

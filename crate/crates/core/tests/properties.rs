use proptest::prelude::*;

use qwalg::format::{parse, parse_bytes, write, ParsedAlgebra};
use qwalg::search::find_isomorphism;
use qwalg::theorems::{lookup, verify_all_with};
use qwalg::transforms::{phi, psi};
use qwalg::{
    canonical_form, classify, enumerate, is_isomorphic, AxiomId, Class, Elem, FiniteAlgebra,
    Requirement, SearchConfig,
};

fn algebra(max: usize) -> impl Strategy<Value = FiniteAlgebra> {
    (1..=max).prop_flat_map(|n| {
        (0..n, prop::collection::vec(0..n as Elem, n * n))
            .prop_map(move |(one, t)| FiniteAlgebra::new(n, one, t).unwrap())
    })
}

fn with_perm(max: usize) -> impl Strategy<Value = (FiniteAlgebra, Vec<Elem>)> {
    algebra(max).prop_flat_map(|a| {
        let perm: Vec<Elem> = (0..a.order() as Elem).collect();
        (Just(a), Just(perm).prop_shuffle())
    })
}

fn involutive_models() -> Vec<FiniteAlgebra> {
    (1..=4)
        .flat_map(|n| {
            enumerate(&SearchConfig::new(n).satisfy([Requirement::Class(Class::InvolutiveBe)]))
                .unwrap()
                .models
                .into_iter()
                .map(|m| m.algebra)
        })
        .collect()
}

proptest! {
    #[test]
    fn classification_is_invariant_under_relabeling((a, perm) in with_perm(5)) {
        let b = a.relabel(&perm);
        let ca = classify(&a);
        let cb = classify(&b);
        for &x in AxiomId::ALL {
            prop_assert_eq!(ca.holds(x), cb.holds(x), "{}", x);
        }
        prop_assert_eq!(canonical_form(&a), canonical_form(&b));
        let f = find_isomorphism(&a, &b).unwrap();
        let image = a.relabel(&f);
        prop_assert_eq!(image.table(), b.table());
    }

    #[test]
    fn canonical_form_separates_non_isomorphic(a in algebra(4), b in algebra(4)) {
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), is_isomorphic(&a, &b));
    }

    #[test]
    fn write_then_parse_is_identity(a in algebra(6), named in any::<bool>()) {
        let a = if named {
            let names: Vec<String> = (0..a.order()).map(|i| format!("e{i}")).collect();
            a.with_names(names).unwrap()
        } else {
            a
        };
        let parsed = ParsedAlgebra::Implication(a.clone());
        let text = write(&parsed);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &parsed);
        prop_assert_eq!(write(&back), text);
    }

    #[test]
    fn parser_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let _ = parse_bytes(&bytes);
    }

    #[test]
    fn parser_survives_near_miss_files(lines in prop::collection::vec("(order|one|imp|names|star|op prod|#)? ?[0-9 a-c]{0,12}", 0..10)) {
        let _ = parse(&lines.join("\n"));
    }

    #[test]
    fn axiom_witnesses_reproduce(a in algebra(4)) {
        let ops = a.derive();
        let c = classify(&a);
        for r in c.axioms.values() {
            prop_assert!(r.reproduces(&ops), "{}", r.axiom);
        }
        for r in verify_all_with(&ops, &c) {
            let entry = lookup(r.id).unwrap();
            prop_assert!(entry.reproduces(&ops, &c, &r), "{}", r.id);
        }
    }

    #[test]
    fn transforms_commute_with_relabeling(seed in any::<prop::sample::Index>(), shuffle in Just((0..4u8).collect::<Vec<_>>()).prop_shuffle()) {
        let models = involutive_models();
        let a = &models[seed.index(models.len())];
        let n = a.order();
        let perm: Vec<Elem> = shuffle.into_iter().filter(|&e| (e as usize) < n).collect();
        let b = a.relabel(&perm);
        let p = phi(&b);
        prop_assert_eq!(&psi(&p), &b);
        prop_assert_eq!(canonical_form(&psi(&phi(a))), canonical_form(&b));
    }
}

mod support;

use llt_core::algebra::lam::{canonical_form_by_search, DEFAULT_CLASS_CAP};
use llt_core::ncsf::{flagged_schur, flagged_schur_by_permutations, FlagSpec, DEFAULT_PERMUTATION_CAP};
use llt_core::rsst::{enumerate, EnumerationSpec, DEFAULT_READING_CAP};
use llt_core::shapes::partitions_of;
use llt_core::words::{is_nonzero_word, is_ribbon_word, word_to_pair, Letter};
use llt_core::{canonical_form, equivalence_class, CanonicalForm, LaurentPoly, Partition, SymFunc};
use proptest::prelude::*;

fn partition_strategy(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn word_strategy(max_len: usize, max_letter: Letter) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=max_letter, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn greedy_canonical_form_matches_class_search(v in word_strategy(6, 6), k in 2i32..=4) {
        let greedy = canonical_form(&v, k);
        let searched = canonical_form_by_search(&v, k, DEFAULT_CLASS_CAP).unwrap();
        prop_assert_eq!(greedy, searched);
    }

    #[test]
    fn class_members_share_a_canonical_form(v in word_strategy(6, 7), k in 2i32..=3) {
        let form = canonical_form(&v, k);
        prop_assume!(form != CanonicalForm::Zero);
        for u in equivalence_class(&v, k, DEFAULT_CLASS_CAP).unwrap() {
            let other = canonical_form(&u, k);
            prop_assert_eq!(form.rep(), other.rep());
        }
    }

    #[test]
    fn nonzero_words_are_ribbon_words(v in word_strategy(8, 9), k in 2i32..=4) {
        let (w, c) = word_to_pair(&v);
        prop_assert_eq!(is_nonzero_word(&v, k), is_ribbon_word(&w, &c, k).unwrap());
        prop_assert_eq!(is_nonzero_word(&v, k), canonical_form(&v, k) != CanonicalForm::Zero);
    }

    #[test]
    fn core_and_quotient_round_trip(lambda in partition_strategy(12), k in 1usize..=4) {
        let (core, quotient) = lambda.core_and_quotient(k);
        prop_assert!(core.is_core(k));
        let size: usize = core.size() + k * quotient.iter().map(Partition::size).sum::<usize>();
        prop_assert_eq!(size, lambda.size());
        prop_assert_eq!(Partition::from_core_and_quotient(&core, &quotient, k).unwrap(), lambda);
    }

    #[test]
    fn ribbon_addition_is_undone_by_removal(lambda in partition_strategy(8), k in 1usize..=4, c in -6i32..=8) {
        if let Some((mu, spin)) = lambda.add_ribbon(k, c) {
            prop_assert_eq!(mu.size(), lambda.size() + k);
            prop_assert!(mu.contains(&lambda));
            prop_assert_eq!(mu.remove_ribbon(k, c), Some((lambda.clone(), spin)));
            prop_assert_eq!(mu.core(k), lambda.core(k));
        }
    }

    #[test]
    fn column_recursion_matches_permutation_sum(
        alpha in prop::collection::vec(0i64..=3, 1..=3),
        supports in prop::collection::vec(prop::collection::btree_set(1 as Letter..=5, 0..=4), 3),
    ) {
        prop_assume!(alpha.iter().sum::<i64>() <= 6);
        let supports: Vec<Vec<Letter>> = supports.into_iter().take(alpha.len()).map(|s| s.into_iter().collect()).collect();
        let spec = FlagSpec::new(alpha, supports).unwrap();
        let by_perm = flagged_schur_by_permutations(&spec, DEFAULT_PERMUTATION_CAP).unwrap();
        prop_assert_eq!(flagged_schur(&spec), by_perm);
    }

    #[test]
    fn sqread_is_a_square_respecting_reading(rows in partition_strategy(5), seed in 0u64..1000) {
        prop_assume!(!rows.is_empty());
        let flags: Vec<i64> = (0..rows.part(1)).map(|i| 3 + i as i64 + (seed % 2) as i64).collect();
        let tableaux = enumerate(&EnumerationSpec::flagged(&rows, &flags)).unwrap();
        prop_assume!(!tableaux.is_empty());
        let t = &tableaux[seed as usize % tableaux.len()];
        prop_assert!(t.validate());
        prop_assert!(t.is_square_respecting_order(&t.sqread_cells()));
        prop_assert!(t.reading_words(true, DEFAULT_READING_CAP).unwrap().contains(&t.sqread()));
    }

    #[test]
    fn schur_expansion_recovers_combinations(
        terms in prop::collection::vec((0usize..64, -2i32..=3, 1i64..=3), 1..=4),
        n in 1usize..=6,
    ) {
        let shapes = partitions_of(n);
        let mut f = SymFunc::zero(n);
        let mut want = std::collections::BTreeMap::<Partition, LaurentPoly>::new();
        for (i, e, c) in terms {
            let lambda = &shapes[i % shapes.len()];
            let coeff = LaurentPoly::monomial(e, c);
            for (d, m) in SymFunc::schur(lambda).coeffs() {
                f.add(d.clone(), &(m.clone() * coeff.clone()));
            }
            *want.entry(lambda.clone()).or_default() += &coeff;
        }
        want.retain(|_, c| !c.is_zero());
        prop_assert_eq!(f.schur_expand().unwrap(), want);
    }
}

//! Randomized invariants over words in small Coxeter groups.

use common::{Dihedral, Model, Signed};
use coxmatch::bruhat::{bruhat_leq, parabolic_left, parabolic_right, Interval};
use coxmatch::coxeter::{CoxeterSystem, Gen, GenSet};
use coxmatch::io::{IntervalDocument, MatchingDocument};
use coxmatch::matchings::{enumerate_special, is_special_n_avoiding, tilde};
use coxmatch::systems::matchings_from_systems;
use proptest::prelude::*;

mod common;

fn group(name: &str) -> CoxeterSystem {
    CoxeterSystem::named(name).unwrap()
}

fn words(rank: u8, max: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(0..rank, 0..=max)
}

/// A group name, its rank and a model.
fn named() -> impl Strategy<Value = (&'static str, u8, Signed)> {
    prop_oneof![
        Just(("A3", 3u8, Signed { n: 3, signed: false })),
        Just(("A4", 4u8, Signed { n: 4, signed: false })),
        Just(("B3", 3u8, Signed { n: 3, signed: true })),
    ]
}

fn group_and_word(max: usize) -> impl Strategy<Value = (&'static str, Signed, Vec<Gen>)> {
    named().prop_flat_map(move |(g, rank, model)| (Just(g), Just(model), words(rank, max)))
        .prop_map(|(g, model, w)| (g, model, w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_represents_the_word((g, model, word) in group_and_word(16)) {
        let sys = group(g);
        let e = sys.canonicalize(&word).unwrap();
        prop_assert!(model.eval(e.word()) == model.eval(&word));
        prop_assert_eq!(sys.canonicalize(e.word()).unwrap(), e.clone());
        let least = e.reduced_words().iter().min().unwrap();
        prop_assert_eq!(least.as_slice(), e.word());
        prop_assert!(e.len() <= word.len());
        prop_assert_eq!(e.len() % 2, word.len() % 2);
    }

    #[test]
    fn dihedral_canonical_forms(m in prop_oneof![Just(0i64), 2i64..9], word in words(2, 20)) {
        let sys = group(&format!("I2:{m}"));
        let model = Dihedral { m };
        let e = sys.canonicalize(&word).unwrap();
        prop_assert!(model.eval(e.word()) == model.eval(&word));
        // reduced words in a dihedral group alternate
        prop_assert!(e.word().windows(2).all(|p| p[0] != p[1]));
        if m > 0 {
            prop_assert!(e.len() <= m as usize);
        }
    }

    #[test]
    fn inverse_swaps_descents((g, _m, word) in group_and_word(12)) {
        let sys = group(g);
        let u = sys.canonicalize(&word).unwrap();
        let inv = sys.inverse(&u);
        prop_assert_eq!(inv.len(), u.len());
        prop_assert_eq!(sys.inverse(&inv), u.clone());
        prop_assert_eq!(inv.left_descents(), u.right_descents());
        prop_assert_eq!(inv.right_descents(), u.left_descents());
        prop_assert!(sys.multiply(&u, &inv).unwrap().is_identity());
    }

    #[test]
    fn multiplication_changes_length_by_one((g, _m, word) in group_and_word(12), s in 0u8..3) {
        let sys = group(g);
        let u = sys.canonicalize(&word).unwrap();
        let us = sys.mult_right(&u, s).unwrap();
        let su = sys.mult_left(s, &u).unwrap();
        if u.right_descents().contains(s) {
            prop_assert_eq!(us.len() + 1, u.len());
        } else {
            prop_assert_eq!(us.len(), u.len() + 1);
        }
        prop_assert_eq!(su.len().abs_diff(u.len()), 1);
        prop_assert_eq!(sys.mult_right(&us, s).unwrap(), u);
    }

    #[test]
    fn parabolic_factorizations((g, _m, word) in group_and_word(12), bits in 0u8..16) {
        let sys = group(g);
        let j = GenSet(bits).intersection(sys.generators());
        let u = sys.canonicalize(&word).unwrap();
        let r = parabolic_right(&sys, &u, j).unwrap();
        prop_assert_eq!(sys.multiply(&r.coset_part, &r.parabolic_part).unwrap(), u.clone());
        prop_assert_eq!(r.coset_part.len() + r.parabolic_part.len(), u.len());
        prop_assert!(r.parabolic_part.in_parabolic(j));
        prop_assert!(r.coset_part.right_descents().intersection(j).is_empty());
        let l = parabolic_left(&sys, &u, j).unwrap();
        prop_assert_eq!(sys.multiply(&l.parabolic_part, &l.coset_part).unwrap(), u.clone());
        prop_assert_eq!(l.coset_part.len() + l.parabolic_part.len(), u.len());
        prop_assert!(l.parabolic_part.in_parabolic(j));
        prop_assert!(l.coset_part.left_descents().intersection(j).is_empty());
        prop_assert!(bruhat_leq(&sys, &r.coset_part, &u).unwrap());
    }

    #[test]
    fn interval_structure((g, _m, word) in group_and_word(9)) {
        let sys = group(g);
        let w = sys.canonicalize(&word).unwrap();
        let iv = Interval::build(&sys, &w).unwrap();
        prop_assert!(iv.hasse().is_k32_free());
        prop_assert!(iv.hasse().rank_two_intervals_are_diamonds());
        prop_assert_eq!(iv.rank(iv.top()), w.len());
        for i in 0..iv.len() {
            prop_assert!(iv.leq(0, i) && iv.leq(i, iv.top()));
            prop_assert_eq!(bruhat_leq(&sys, iv.element(i), &w).unwrap(), true);
        }
        let profile = iv.hasse().rank_profile();
        prop_assert_eq!(profile.first(), Some(&1));
        prop_assert_eq!(profile.last(), Some(&1));
    }

    #[test]
    fn json_round_trip((g, _m, word) in group_and_word(7)) {
        let sys = group(g);
        let iv = Interval::build(&sys, &sys.canonicalize(&word).unwrap()).unwrap();
        let doc = IntervalDocument::from_interval(&iv);
        let back = IntervalDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        let iv2 = back.to_interval().unwrap();
        for m in enumerate_special(&iv).unwrap() {
            let md = MatchingDocument::from_matching(&m);
            prop_assert_eq!(MatchingDocument::from_json(&md.to_json()).unwrap().to_matching(&iv2).unwrap(), m);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn special_matchings_and_systems((g, _m, word) in group_and_word(7)) {
        let sys = group(g);
        let w = sys.canonicalize(&word).unwrap();
        let iv = Interval::build(&sys, &w).unwrap();
        let inv = Interval::build(&sys, &sys.inverse(&w)).unwrap();
        let special = enumerate_special(&iv).unwrap();
        let top = iv.top();
        prop_assert!(special.len() >= (iv.right_descents(top).len() + iv.left_descents(top).len()).min(1));
        for m in &special {
            prop_assert!(is_special_n_avoiding(iv.hasse(), m));
            for u in 0..iv.len() {
                prop_assert!(iv.hasse().covers(u, m.partner(u)) || iv.hasse().covers(m.partner(u), u));
                prop_assert_eq!(m.partner(m.partner(u)), u);
            }
            let t = tilde(&iv, m, &inv);
            prop_assert_eq!(tilde(&inv, &t, &iv), m.clone());
        }
        prop_assert_eq!(matchings_from_systems(&iv).unwrap(), special);
    }
}

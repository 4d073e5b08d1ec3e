//! Independent models of small Coxeter groups, used as oracles for the
//! library's canonical forms, Bruhat intervals and matching counts.

use coxmatch::bruhat::Interval;
use coxmatch::coxeter::{CoxeterSystem, Gen};
use coxmatch::matchings::enumerate_special;
use common::{Dihedral, Model, Signed};
use std::collections::{HashMap, HashSet, VecDeque};

mod common;

/// Breadth-first search of the Cayley graph: each element with its length
/// and one reduced word.
fn cayley<M: Model>(model: &M, rank: usize, max_len: usize) -> HashMap<M::El, Vec<Gen>> {
    let mut seen = HashMap::from([(model.identity(), Vec::new())]);
    let mut queue = VecDeque::from([model.identity()]);
    while let Some(x) = queue.pop_front() {
        let word = seen[&x].clone();
        if word.len() == max_len {
            continue;
        }
        for s in 0..rank as Gen {
            let y = model.act(&x, s);
            if !seen.contains_key(&y) {
                let mut w = word.clone();
                w.push(s);
                seen.insert(y.clone(), w);
                queue.push_back(y);
            }
        }
    }
    seen
}

fn check_canonical_forms<M: Model>(sys: &CoxeterSystem, model: &M, max_len: usize, expected: usize) {
    let all = cayley(model, sys.rank(), max_len);
    assert_eq!(all.len(), expected);
    let mut canon = HashSet::new();
    for (x, word) in &all {
        let e = sys.canonicalize(word).unwrap();
        assert_eq!(e.len(), word.len());
        assert!(model.eval(e.word()) == *x);
        for w in e.reduced_words() {
            assert!(model.eval(w) == *x);
        }
        assert!(canon.insert(e.word().to_vec()));
    }
}

#[test]
fn canonical_forms_match_permutations() {
    check_canonical_forms(&CoxeterSystem::named("A3").unwrap(), &Signed { n: 3, signed: false }, 99, 24);
    check_canonical_forms(&CoxeterSystem::named("A4").unwrap(), &Signed { n: 4, signed: false }, 99, 120);
    check_canonical_forms(&CoxeterSystem::named("B3").unwrap(), &Signed { n: 3, signed: true }, 99, 48);
    check_canonical_forms(&CoxeterSystem::named("I2:5").unwrap(), &Dihedral { m: 5 }, 99, 10);
    check_canonical_forms(&CoxeterSystem::named("I2:0").unwrap(), &Dihedral { m: 0 }, 7, 15);
}

/// `[e, w]` by the subword property on one reduced word of `w`.
fn subword_interval<M: Model>(model: &M, word: &[Gen]) -> HashSet<M::El> {
    let mut out = HashSet::new();
    for mask in 0u32..1 << word.len() {
        let sub: Vec<Gen> = (0..word.len()).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
        out.insert(model.eval(&sub));
    }
    out
}

fn check_intervals<M: Model>(sys: &CoxeterSystem, model: &M, max_len: usize) {
    let all = cayley(model, sys.rank(), max_len);
    for word in all.values() {
        let w = sys.canonicalize(word).unwrap();
        let iv = Interval::build(sys, &w).unwrap();
        let members = subword_interval(model, word);
        assert_eq!(iv.len(), members.len(), "{}", iv.format(iv.top()));
        let below: Vec<HashSet<M::El>> =
            iv.elements().iter().map(|u| subword_interval(model, u.word())).collect();
        for (i, u) in iv.elements().iter().enumerate() {
            assert!(members.contains(&model.eval(u.word())));
            for (j, v) in iv.elements().iter().enumerate() {
                assert_eq!(iv.leq(i, j), below[j].contains(&model.eval(u.word())), "{u:?} <= {v:?}");
            }
        }
    }
}

#[test]
fn intervals_match_subword_oracle() {
    check_intervals(&CoxeterSystem::named("A3").unwrap(), &Signed { n: 3, signed: false }, 99);
    check_intervals(&CoxeterSystem::named("B3").unwrap(), &Signed { n: 3, signed: true }, 99);
    check_intervals(&CoxeterSystem::named("I2:6").unwrap(), &Dihedral { m: 6 }, 99);
    check_intervals(&CoxeterSystem::named("I2:0").unwrap(), &Dihedral { m: 0 }, 6);
}

/// Tableau criterion for `S_n`: `u ≤ w` iff every sorted prefix of `u` is
/// entrywise at most the sorted prefix of `w`.
fn tableau_leq(u: &[i32], w: &[i32]) -> bool {
    (1..=u.len()).all(|k| {
        let mut a = u[..k].to_vec();
        let mut b = w[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

#[test]
fn type_a_order_matches_tableau_criterion() {
    let sys = CoxeterSystem::named("A4").unwrap();
    let model = Signed { n: 4, signed: false };
    let w0 = sys.canonicalize(&[0, 1, 0, 2, 1, 0, 3, 2, 1, 0]).unwrap();
    let iv = Interval::build(&sys, &w0).unwrap();
    assert_eq!(iv.len(), 120);
    // Bruhat order on permutations in one-line notation: compare inverses
    // of the right action.
    let perms: Vec<Vec<i32>> = iv.elements().iter().map(|u| one_line(&model.eval(u.word()))).collect();
    for i in 0..iv.len() {
        for j in 0..iv.len() {
            assert_eq!(iv.leq(i, j), tableau_leq(&perms[i], &perms[j]));
        }
    }
}

/// The right action records positions; invert to get one-line notation.
fn one_line(x: &[i32]) -> Vec<i32> {
    let mut out = vec![0; x.len()];
    for (pos, &v) in x.iter().enumerate() {
        out[(v - 1) as usize] = pos as i32 + 1;
    }
    out
}

/// Special matchings counted straight from the definition, with the order
/// taken from the subword oracle.
fn count_special<M: Model>(model: &M, word: &[Gen]) -> usize {
    let members: Vec<M::El> = subword_interval(model, word).into_iter().collect();
    let below: Vec<HashSet<M::El>> = members
        .iter()
        .map(|x| {
            let w = reduced_word(model, x, word);
            subword_interval(model, &w)
        })
        .collect();
    let n = members.len();
    let len: Vec<usize> = members.iter().map(|x| reduced_word(model, x, word).len()).collect();
    let leq = |a: usize, b: usize| below[b].contains(&members[a]);
    let covers = |a: usize, b: usize| len[b] == len[a] + 1 && leq(a, b);
    let mut partner = vec![usize::MAX; n];
    let mut count = 0;
    fn search(
        partner: &mut Vec<usize>,
        n: usize,
        adjacent: &dyn Fn(usize, usize) -> bool,
        done: &mut dyn FnMut(&[usize]),
    ) {
        let Some(a) = (0..n).find(|&i| partner[i] == usize::MAX) else {
            done(partner);
            return;
        };
        for b in 0..n {
            if partner[b] == usize::MAX && b != a && adjacent(a, b) {
                partner[a] = b;
                partner[b] = a;
                search(partner, n, adjacent, done);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    let adjacent = |a: usize, b: usize| covers(a, b) || covers(b, a);
    search(&mut partner, n, &adjacent, &mut |m: &[usize]| {
        let special = (0..n).all(|u| {
            (0..n).all(|v| !covers(u, v) || m[u] == v || (len[m[u]] < len[u] + 2 && leq(m[u], m[v])))
        });
        if special {
            count += 1;
        }
    });
    count
}

/// A reduced word for `x`, found among the subwords of `word`.
fn reduced_word<M: Model>(model: &M, x: &M::El, word: &[Gen]) -> Vec<Gen> {
    let mut best: Option<Vec<Gen>> = None;
    for mask in 0u32..1 << word.len() {
        let sub: Vec<Gen> = (0..word.len()).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
        if model.eval(&sub) == *x && best.as_ref().is_none_or(|b| sub.len() < b.len()) {
            best = Some(sub);
        }
    }
    best.expect("x is below w")
}

fn library_count(group: &str, word: &[Gen]) -> usize {
    let sys = CoxeterSystem::named(group).unwrap();
    let iv = Interval::build(&sys, &sys.canonicalize(word).unwrap()).unwrap();
    enumerate_special(&iv).unwrap().len()
}

#[test]
fn special_matching_counts() {
    let a2 = Signed { n: 2, signed: false };
    assert_eq!(count_special(&a2, &[0, 1, 0]), 4);
    assert_eq!(library_count("A2", &[0, 1, 0]), 4);

    let b2 = Signed { n: 2, signed: true };
    let b2_top = [0, 1, 0, 1];
    assert_eq!(count_special(&b2, &b2_top), 8);
    assert_eq!(library_count("B2", &b2_top), 8);

    for m in [5i64, 6] {
        let top: Vec<Gen> = (0..m).map(|i| (i % 2) as Gen).collect();
        let expected = count_special(&Dihedral { m }, &top);
        assert_eq!(library_count(&format!("I2:{m}"), &top), expected, "m = {m}");
    }

    let a3 = Signed { n: 3, signed: false };
    for word in cayley(&a3, 3, 99).values() {
        if word.len() <= 5 {
            assert_eq!(library_count("A3", word), count_special(&a3, word), "{word:?}");
        }
    }
}

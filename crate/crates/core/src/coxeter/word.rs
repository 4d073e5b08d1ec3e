use super::{CoxeterSystem, Gen, INFINITY};
use crate::error::{Error, Result};
use std::collections::HashSet;

/// A word in the generators, as a sequence of generator indices.
pub type Word = Vec<Gen>;

impl CoxeterSystem {
    /// Calls `f` with every word obtained from `word` by one braid move.
    pub(crate) fn for_each_braid_move(&self, word: &[Gen], mut f: impl FnMut(Word)) {
        let len = word.len();
        for i in 0..len.saturating_sub(1) {
            let (a, b) = (word[i], word[i + 1]);
            if a == b {
                continue;
            }
            let m = self.order(a, b);
            if m == INFINITY || i + m as usize > len {
                continue;
            }
            let m = m as usize;
            let alternates = (0..m).all(|k| word[i + k] == if k % 2 == 0 { a } else { b });
            if alternates {
                let mut next = word.to_vec();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { b } else { a };
                }
                f(next);
            }
        }
    }

    /// Closure of `seeds` under braid moves, sorted lexicographically.
    pub(crate) fn braid_closure(&self, seeds: impl IntoIterator<Item = Word>) -> Result<Vec<Word>> {
        let cap = self.class_cap();
        let mut seen: HashSet<Word> = HashSet::new();
        let mut stack = Vec::new();
        for w in seeds {
            if seen.insert(w.clone()) {
                stack.push(w);
            }
        }
        while let Some(w) = stack.pop() {
            self.for_each_braid_move(&w, |next| {
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    stack.push(next);
                }
            });
            if seen.len() > cap {
                return Err(Error::ClassCapExceeded { cap });
            }
        }
        let mut class: Vec<Word> = seen.into_iter().collect();
        class.sort_unstable();
        Ok(class)
    }

    /// Reduces a word by Tits' algorithm: explore the braid class, and
    /// whenever some word in it contains two equal adjacent letters, delete
    /// them and start over. Returns the lexicographically least reduced word.
    ///
    /// This is an independent route to the canonical form; [`CoxeterSystem::canonicalize`]
    /// instead multiplies letter by letter.
    pub fn tits_reduce(&self, word: &[Gen]) -> Result<Word> {
        self.check_word(word)?;
        let cap = self.class_cap();
        let mut current = word.to_vec();
        'restart: loop {
            let mut seen: HashSet<Word> = HashSet::new();
            let mut stack = vec![current.clone()];
            seen.insert(current.clone());
            while let Some(w) = stack.pop() {
                if let Some(i) = w.windows(2).position(|p| p[0] == p[1]) {
                    let mut shorter = w;
                    shorter.drain(i..i + 2);
                    current = shorter;
                    continue 'restart;
                }
                self.for_each_braid_move(&w, |next| {
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                });
                if seen.len() > cap {
                    return Err(Error::ClassCapExceeded { cap });
                }
            }
            return Ok(seen.into_iter().min().expect("class is nonempty"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_moves_in_b2() {
        let b2 = CoxeterSystem::named("B2").unwrap();
        let class = b2.braid_closure([vec![0, 1, 0, 1]]).unwrap();
        assert_eq!(class, vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
    }

    #[test]
    fn no_moves_across_infinite_bond() {
        let inf = CoxeterSystem::named("I2:0").unwrap();
        let class = inf.braid_closure([vec![0, 1, 0, 1, 0, 1]]).unwrap();
        assert_eq!(class.len(), 1);
    }

    #[test]
    fn tits_reduction_examples() {
        let a3 = CoxeterSystem::named("A3").unwrap();
        assert_eq!(a3.tits_reduce(&[0, 2, 0]).unwrap(), vec![2]);
        assert_eq!(a3.tits_reduce(&[0, 0]).unwrap(), Vec::<Gen>::new());
        let a2 = CoxeterSystem::named("A2").unwrap();
        assert_eq!(a2.tits_reduce(&[1, 0, 1]).unwrap(), vec![0, 1, 0]);
        assert_eq!(a2.tits_reduce(&[0, 1, 0, 1]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn class_cap_is_enforced() {
        let a3 = CoxeterSystem::named("A3").unwrap().with_class_cap(3);
        // The longest element of A3 has 16 reduced words.
        let err = a3.braid_closure([vec![0, 1, 0, 2, 1, 0]]).unwrap_err();
        assert_eq!(err, Error::ClassCapExceeded { cap: 3 });
    }
}

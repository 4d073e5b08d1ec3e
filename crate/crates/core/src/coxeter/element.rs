use super::{CoxeterSystem, Gen, GenSet, Word};
use crate::error::Result;
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// A group element, stored as its lexicographically least reduced word.
///
/// The full braid class (every reduced word of the element) is kept
/// alongside; descents are read off its first and last letters. Equality,
/// hashing and ordering only look at the canonical word.
#[derive(Clone)]
pub struct Element {
    canonical: Word,
    right_descents: GenSet,
    left_descents: GenSet,
    support: GenSet,
    class: Arc<[Word]>,
}

impl Element {
    fn from_class(class: Vec<Word>) -> Element {
        debug_assert!(!class.is_empty());
        let canonical = class.iter().min().expect("nonempty class").clone();
        let right_descents = class.iter().filter_map(|w| w.last().copied()).collect();
        let left_descents = class.iter().filter_map(|w| w.first().copied()).collect();
        let support = canonical.iter().copied().collect();
        Element { canonical, right_descents, left_descents, support, class: class.into() }
    }

    pub fn identity() -> Element {
        Element::from_class(vec![Vec::new()])
    }

    pub fn word(&self) -> &[Gen] {
        &self.canonical
    }

    /// Coxeter length `ℓ(u)`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_identity(&self) -> bool {
        self.canonical.is_empty()
    }

    /// `D_R(u) = {s : ℓ(us) < ℓ(u)}`.
    pub fn right_descents(&self) -> GenSet {
        self.right_descents
    }

    /// `D_L(u) = {s : ℓ(su) < ℓ(u)}`.
    pub fn left_descents(&self) -> GenSet {
        self.left_descents
    }

    /// Generators appearing in any (equivalently, every) reduced word.
    pub fn support(&self) -> GenSet {
        self.support
    }

    /// All reduced words, sorted lexicographically.
    pub fn reduced_words(&self) -> &[Word] {
        &self.class
    }

    /// Membership in the parabolic subgroup `W_J`.
    pub fn in_parabolic(&self, j: GenSet) -> bool {
        self.support.is_subset(j)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rank-major, then lexicographic on canonical words.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.canonical.cmp(&other.canonical))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({:?})", self.canonical)
    }
}

impl CoxeterSystem {
    pub fn identity(&self) -> Element {
        Element::identity()
    }

    /// The element represented by an arbitrary word over the generators.
    pub fn canonicalize(&self, word: &[Gen]) -> Result<Element> {
        self.check_word(word)?;
        word.iter()
            .try_fold(Element::identity(), |u, &s| self.mult_right(&u, s))
    }

    /// All reduced expressions of `u`.
    pub fn reduced_class<'a>(&self, u: &'a Element) -> &'a [Word] {
        u.reduced_words()
    }

    /// `us`. Going down filters the braid class; going up closes
    /// `{x·s}` under braid moves.
    pub fn mult_right(&self, u: &Element, s: Gen) -> Result<Element> {
        if u.right_descents.contains(s) {
            let class = u
                .class
                .iter()
                .filter(|w| w.last() == Some(&s))
                .map(|w| w[..w.len() - 1].to_vec())
                .collect();
            Ok(Element::from_class(class))
        } else {
            let seeds = u.class.iter().map(|w| {
                let mut x = w.clone();
                x.push(s);
                x
            });
            Ok(Element::from_class(self.braid_closure(seeds)?))
        }
    }

    /// `su`.
    pub fn mult_left(&self, s: Gen, u: &Element) -> Result<Element> {
        if u.left_descents.contains(s) {
            let class = u
                .class
                .iter()
                .filter(|w| w.first() == Some(&s))
                .map(|w| w[1..].to_vec())
                .collect();
            Ok(Element::from_class(class))
        } else {
            let seeds = u.class.iter().map(|w| {
                let mut x = Vec::with_capacity(w.len() + 1);
                x.push(s);
                x.extend_from_slice(w);
                x
            });
            Ok(Element::from_class(self.braid_closure(seeds)?))
        }
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        v.word().iter().try_fold(u.clone(), |acc, &s| self.mult_right(&acc, s))
    }

    pub fn inverse(&self, u: &Element) -> Element {
        let class = u
            .class
            .iter()
            .map(|w| w.iter().rev().copied().collect())
            .collect();
        Element::from_class(class)
    }

    pub fn right_descents(&self, u: &Element) -> GenSet {
        u.right_descents
    }

    pub fn left_descents(&self, u: &Element) -> GenSet {
        u.left_descents
    }

    /// The element `s t s …` with `k` letters, alternating from `s`.
    pub fn alternating(&self, s: Gen, t: Gen, k: usize) -> Result<Element> {
        let word: Word = (0..k).map(|i| if i % 2 == 0 { s } else { t }).collect();
        self.canonicalize(&word)
    }
}

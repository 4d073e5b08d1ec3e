use super::HasseDiagram;
use crate::coxeter::{CoxeterSystem, Element, Gen, GenSet, Word};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Default cap on `ℓ(w)` when building `[e, w]`.
pub const DEFAULT_LENGTH_CAP: usize = 12;

const NONE: u32 = u32::MAX;

/// The lower Bruhat interval `[e, w]`.
///
/// Elements are sorted rank-major, then lexicographically by canonical word,
/// so index 0 is `e` and the last index is `w`. Left and right
/// multiplication by generators are tabulated for elements whose product
/// stays in the interval.
#[derive(Debug, Clone)]
pub struct Interval {
    sys: CoxeterSystem,
    elements: Vec<Element>,
    index: HashMap<Word, usize>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    hasse: HasseDiagram,
}

impl Interval {
    pub fn build(sys: &CoxeterSystem, w: &Element) -> Result<Interval> {
        Self::build_capped(sys, w, DEFAULT_LENGTH_CAP)
    }

    pub fn build_capped(sys: &CoxeterSystem, w: &Element, length_cap: usize) -> Result<Interval> {
        if w.len() > length_cap {
            return Err(Error::LengthCapExceeded { length: w.len(), cap: length_cap });
        }
        // [e, xs] = [e, x] ∪ [e, x]·s whenever s is a right descent of xs.
        let mut found: HashMap<Word, Element> = HashMap::new();
        found.insert(Vec::new(), sys.identity());
        for &s in w.word() {
            let layer: Vec<Element> = found.values().cloned().collect();
            for u in layer {
                let us = sys.mult_right(&u, s)?;
                found.entry(us.word().to_vec()).or_insert(us);
            }
        }
        let mut elements: Vec<Element> = found.into_values().collect();
        elements.sort();
        let index: HashMap<Word, usize> =
            elements.iter().enumerate().map(|(i, u)| (u.word().to_vec(), i)).collect();

        let n = sys.rank();
        let mut rmul = vec![NONE; elements.len() * n];
        let mut lmul = vec![NONE; elements.len() * n];
        for (i, u) in elements.iter().enumerate() {
            for s in 0..n as Gen {
                let slot = i * n + s as usize;
                if rmul[slot] == NONE {
                    let us = sys.mult_right(u, s)?;
                    if let Some(&j) = index.get(us.word()) {
                        rmul[slot] = j as u32;
                        rmul[j * n + s as usize] = i as u32;
                    }
                }
                if lmul[slot] == NONE {
                    let su = sys.mult_left(s, u)?;
                    if let Some(&j) = index.get(su.word()) {
                        lmul[slot] = j as u32;
                        lmul[j * n + s as usize] = i as u32;
                    }
                }
            }
        }

        // Lower covers of v: single-letter deletions from one reduced word of
        // v that drop the length by one. Every prefix and every deletion is a
        // subword of v, so the walk never leaves the interval.
        let mut covers = Vec::new();
        for (v, elem) in elements.iter().enumerate() {
            let word = elem.word();
            let mut prefix = Vec::with_capacity(word.len() + 1);
            let mut cur = 0usize;
            prefix.push(cur);
            for &s in word {
                cur = rmul[cur * n + s as usize] as usize;
                prefix.push(cur);
            }
            for del in 0..word.len() {
                let mut cur = prefix[del];
                for &s in &word[del + 1..] {
                    cur = rmul[cur * n + s as usize] as usize;
                }
                if elements[cur].len() + 1 == elem.len() {
                    covers.push((cur, v));
                }
            }
        }
        let rank = elements.iter().map(Element::len).collect();
        let hasse = HasseDiagram::from_covers(rank, &covers)?;
        Ok(Interval { sys: sys.clone(), elements, index, rmul, lmul, hasse })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn top_element(&self) -> &Element {
        &self.elements[self.top()]
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn hasse(&self) -> &HasseDiagram {
        &self.hasse
    }

    pub fn rank(&self, i: usize) -> usize {
        self.elements[i].len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.hasse.leq(i, j)
    }

    pub fn index_of(&self, u: &Element) -> Option<usize> {
        self.index.get(u.word()).copied()
    }

    /// Index of the element with the given canonical word.
    pub fn index_of_canonical(&self, word: &[Gen]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Index of the element represented by an arbitrary word.
    pub fn index_of_word(&self, word: &[Gen]) -> Result<Option<usize>> {
        Ok(self.index_of(&self.sys.canonicalize(word)?))
    }

    /// `us`, if it lies in the interval.
    pub fn rmul(&self, i: usize, s: Gen) -> Option<usize> {
        let v = self.rmul[i * self.sys.rank() + s as usize];
        (v != NONE).then_some(v as usize)
    }

    /// `su`, if it lies in the interval.
    pub fn lmul(&self, s: Gen, i: usize) -> Option<usize> {
        let v = self.lmul[i * self.sys.rank() + s as usize];
        (v != NONE).then_some(v as usize)
    }

    pub fn right_descents(&self, i: usize) -> GenSet {
        self.elements[i].right_descents()
    }

    pub fn left_descents(&self, i: usize) -> GenSet {
        self.elements[i].left_descents()
    }

    pub fn support(&self, i: usize) -> GenSet {
        self.elements[i].support()
    }

    /// Generators lying below the top element.
    pub fn top_support(&self) -> GenSet {
        self.top_element().support()
    }

    /// Index of a generator `s`, if `s ≤ w`.
    pub fn generator_index(&self, s: Gen) -> Option<usize> {
        self.rmul(0, s)
    }

    /// The product of interval elements `factors[0] · factors[1] · …`.
    /// Returns `None` when the product is not below the top element.
    pub fn product(&self, factors: &[usize]) -> Result<Option<usize>> {
        let mut cur = 0usize;
        let mut escaped: Option<Element> = None;
        for &f in factors {
            for &s in self.elements[f].word() {
                escaped = match escaped {
                    None => match self.rmul(cur, s) {
                        Some(next) => {
                            cur = next;
                            None
                        }
                        None => Some(self.sys.mult_right(&self.elements[cur], s)?),
                    },
                    Some(u) => Some(self.sys.mult_right(&u, s)?),
                };
                if let Some(u) = &escaped {
                    if let Some(back) = self.index_of(u) {
                        cur = back;
                        escaped = None;
                    }
                }
            }
        }
        Ok(match escaped {
            None => Some(cur),
            Some(_) => None,
        })
    }

    /// Like [`Interval::product`], but returns the element even when it
    /// falls outside the interval.
    pub fn product_element(&self, factors: &[usize]) -> Result<Element> {
        let mut acc = self.sys.identity();
        for &f in factors {
            acc = self.sys.multiply(&acc, &self.elements[f])?;
        }
        Ok(acc)
    }

    /// Right parabolic factorization `u = u^J · u_J`, as indices.
    pub fn parabolic_right(&self, u: usize, j: GenSet) -> (usize, usize) {
        let mut cur = u;
        let mut stripped = Vec::new();
        while let Some(s) = self.right_descents(cur).intersection(j).iter().next() {
            cur = self.rmul(cur, s).expect("descent stays in the interval");
            stripped.push(s);
        }
        let mut par = 0;
        for &s in stripped.iter().rev() {
            par = self.rmul(par, s).expect("parabolic part is below u");
        }
        (cur, par)
    }

    /// Left parabolic factorization `u = _J u · ^J u`, returned as
    /// `(_J u, ^J u)`.
    pub fn parabolic_left(&self, u: usize, j: GenSet) -> (usize, usize) {
        let mut cur = u;
        let mut stripped = Vec::new();
        while let Some(s) = self.left_descents(cur).intersection(j).iter().next() {
            cur = self.lmul(s, cur).expect("descent stays in the interval");
            stripped.push(s);
        }
        let mut par = 0;
        for &s in stripped.iter().rev() {
            par = self.lmul(s, par).expect("parabolic part is below u");
        }
        (par, cur)
    }

    /// `w_0(J)`: the maximum of `W_J ∩ [e, w]`.
    ///
    /// Panics if the maximum is not unique, which cannot happen in a
    /// Coxeter group.
    pub fn max_parabolic(&self, j: GenSet) -> usize {
        let members: Vec<usize> = (0..self.len()).filter(|&i| self.support(i).is_subset(j)).collect();
        let top = *members
            .iter()
            .max_by_key(|&&i| self.rank(i))
            .expect("identity is always a member");
        assert!(
            members.iter().all(|&i| self.leq(i, top)),
            "W_J ∩ [e,w] has no unique maximum"
        );
        top
    }

    /// Indices of `W_J ∩ [e, w]`.
    pub fn parabolic_members(&self, j: GenSet) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.support(i).is_subset(j)).collect()
    }

    /// For each element `u`, the index of `u⁻¹` in `other`, which must be
    /// the interval of the inverse top element.
    pub fn inverse_map(&self, other: &Interval) -> Vec<usize> {
        self.elements
            .iter()
            .map(|u| {
                other
                    .index_of(&self.sys.inverse(u))
                    .expect("other interval is [e, w⁻¹]")
            })
            .collect()
    }

    pub fn format(&self, i: usize) -> String {
        let w = self.sys.format_word(self.elements[i].word());
        if w.is_empty() {
            "e".to_string()
        } else {
            w
        }
    }
}

//! Presentation-level Coxeter group arithmetic.
//!
//! Elements are represented by their lexicographically least reduced word,
//! together with the full set of their reduced words (the braid class). All
//! arithmetic is exact and works for any Coxeter matrix, including infinite
//! bonds.

mod element;
mod genset;
mod word;

pub use element::Element;
pub use genset::{Gen, GenSet};
pub use word::Word;

use crate::error::{Error, Result};
use std::collections::HashSet;

/// Sentinel order for an infinite bond (`m_{s,t} = ∞`).
pub const INFINITY: u32 = u32::MAX;

/// Largest supported rank.
pub const MAX_RANK: usize = 8;

/// Default cap on the number of words in a braid class.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    /// Builds a matrix from rows. Entries equal to [`INFINITY`] denote `∞`.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if !(1..=MAX_RANK).contains(&n) {
            return Err(Error::InvalidMatrix(format!(
                "rank {n} outside supported range 1..={MAX_RANK}"
            )));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!("row {i} has {} entries", row.len())));
            }
            entries.extend_from_slice(row);
        }
        for i in 0..n {
            for j in 0..n {
                let m = entries[i * n + j];
                if m != entries[j * n + i] {
                    return Err(Error::InvalidMatrix(format!("asymmetric at ({i},{j})")));
                }
                if i == j && m != 1 {
                    return Err(Error::InvalidMatrix(format!("diagonal entry ({i},{i}) is {m}")));
                }
                if i != j && m < 2 {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry ({i},{j}) is {m}")));
                }
            }
        }
        Ok(CoxeterMatrix { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Order of `st`; [`INFINITY`] for an infinite bond.
    pub fn order(&self, s: Gen, t: Gen) -> u32 {
        self.entries[s as usize * self.n + t as usize]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    /// Type `A_n`: a path with bonds of order 3.
    pub fn type_a(n: usize) -> Result<Self> {
        Self::linear(n, |_| 3)
    }

    /// Type `B_n`: a path whose first bond has order 4.
    pub fn type_b(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidMatrix("B_n needs n >= 2".into()));
        }
        Self::linear(n, |i| if i == 0 { 4 } else { 3 })
    }

    /// The dihedral group `I_2(m)`; `m = 0` stands for `∞`.
    pub fn dihedral(m: u32) -> Result<Self> {
        let m = if m == 0 { INFINITY } else { m };
        Self::new(vec![vec![1, m], vec![m, 1]])
    }

    fn linear(n: usize, bond: impl Fn(usize) -> u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("rank 0".into()));
        }
        let mut rows = vec![vec![2u32; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for i in 0..n.saturating_sub(1) {
            rows[i][i + 1] = bond(i);
            rows[i + 1][i] = bond(i);
        }
        Self::new(rows)
    }
}

/// A Coxeter system: a validated matrix together with generator labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    names: Vec<String>,
    class_cap: usize,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix, names: Vec<String>) -> Result<Self> {
        if names.len() != matrix.rank() {
            return Err(Error::InvalidMatrix(format!(
                "{} names for rank {}",
                names.len(),
                matrix.rank()
            )));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(CoxeterSystem { matrix, names, class_cap: DEFAULT_CLASS_CAP })
    }

    /// A system with the default labels `s1, …, sn`.
    pub fn with_default_names(matrix: CoxeterMatrix) -> Self {
        let names = (1..=matrix.rank()).map(|i| format!("s{i}")).collect();
        Self::new(matrix, names).expect("default names are distinct")
    }

    pub fn with_class_cap(mut self, cap: usize) -> Self {
        self.class_cap = cap;
        self
    }

    /// Parses a named group: `A{n}`, `B{n}` or `I2:{m}` (`I2:0` is `I_2(∞)`).
    pub fn named(spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group `{spec}`"));
        let matrix = if let Some(m) = spec.strip_prefix("I2:") {
            CoxeterMatrix::dihedral(m.parse().map_err(|_| bad())?)?
        } else if let Some(n) = spec.strip_prefix('A') {
            CoxeterMatrix::type_a(n.parse().map_err(|_| bad())?)?
        } else if let Some(n) = spec.strip_prefix('B') {
            CoxeterMatrix::type_b(n.parse().map_err(|_| bad())?)?
        } else {
            return Err(bad());
        };
        Ok(Self::with_default_names(matrix))
    }

    /// Parses a whitespace-separated integer grid; `0` means `∞`.
    pub fn from_grid(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| match tok.parse::<u32>() {
                        Ok(0) => Ok(INFINITY),
                        Ok(m) => Ok(m),
                        Err(_) => Err(Error::Parse(format!("bad matrix entry `{tok}`"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::with_default_names(CoxeterMatrix::new(rows)?))
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn generators(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn order(&self, s: Gen, t: Gen) -> u32 {
        self.matrix.order(s, t)
    }

    pub fn commute(&self, s: Gen, t: Gen) -> bool {
        self.order(s, t) <= 2
    }

    /// `C_s = {r ∈ S : rs = sr}`; contains `s` itself.
    pub fn commuting_set(&self, s: Gen) -> GenSet {
        (0..self.rank() as Gen).filter(|&r| self.commute(r, s)).collect()
    }

    pub fn class_cap(&self) -> usize {
        self.class_cap
    }

    pub fn generator(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Gen)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s as usize]
    }

    /// Parses a word such as `s1-s2-s1` or `s1,s2,s1`. The empty string is
    /// the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split([',', '-', ' '])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| self.generator(t))
            .collect()
    }

    /// Parses a generator set such as `s1,s2`.
    pub fn parse_genset(&self, text: &str) -> Result<GenSet> {
        Ok(self.parse_word(text)?.into_iter().collect())
    }

    /// Formats a word with `-` separators; the empty word is `""`.
    pub fn format_word(&self, word: &[Gen]) -> String {
        word.iter().map(|&s| self.name(s)).collect::<Vec<_>>().join("-")
    }

    pub fn format_genset(&self, set: GenSet) -> String {
        let names: Vec<_> = set.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn check_word(&self, word: &[Gen]) -> Result<()> {
        match word.iter().find(|&&s| s as usize >= self.rank()) {
            Some(&s) => Err(Error::GeneratorOutOfRange { index: s as usize, rank: self.rank() }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_and_a1xa1_are_valid() {
        let a2 = CoxeterMatrix::new(vec![vec![1, 3], vec![3, 1]]).unwrap();
        assert_eq!(a2.order(0, 1), 3);
        let a1a1 = CoxeterMatrix::new(vec![vec![1, 2], vec![2, 1]]).unwrap();
        let sys = CoxeterSystem::with_default_names(a1a1);
        assert_eq!(sys.commuting_set(0), GenSet::pair(0, 1));
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(matches!(
            CoxeterMatrix::new(vec![vec![1, 1], vec![1, 1]]),
            Err(Error::InvalidMatrix(_))
        ));
        assert!(CoxeterMatrix::new(vec![vec![1, 3], vec![4, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![1; 9]; 9]).is_err());
    }

    #[test]
    fn rejects_duplicate_names() {
        let m = CoxeterMatrix::type_a(2).unwrap();
        let err = CoxeterSystem::new(m, vec!["a".into(), "a".into()]).unwrap_err();
        assert_eq!(err, Error::DuplicateName("a".into()));
    }

    #[test]
    fn commuting_sets() {
        let a2 = CoxeterSystem::named("A2").unwrap();
        assert_eq!(a2.commuting_set(0), GenSet::singleton(0));
        let a3 = CoxeterSystem::named("A3").unwrap();
        assert_eq!(a3.commuting_set(0), GenSet::pair(0, 2));
    }

    #[test]
    fn named_groups() {
        let b3 = CoxeterSystem::named("B3").unwrap();
        assert_eq!(b3.order(0, 1), 4);
        assert_eq!(b3.order(1, 2), 3);
        assert_eq!(b3.order(0, 2), 2);
        let inf = CoxeterSystem::named("I2:0").unwrap();
        assert_eq!(inf.order(0, 1), INFINITY);
        assert!(CoxeterSystem::named("E8").is_err());
    }

    #[test]
    fn grid_parsing_uses_zero_for_infinity() {
        let sys = CoxeterSystem::from_grid("1 0 2\n0 1 3\n2 3 1\n").unwrap();
        assert_eq!(sys.order(0, 1), INFINITY);
        assert_eq!(sys.order(1, 2), 3);
    }

    #[test]
    fn word_parsing_round_trips() {
        let sys = CoxeterSystem::named("A3").unwrap();
        let w = sys.parse_word("s1,s3-s2").unwrap();
        assert_eq!(w, vec![0, 2, 1]);
        assert_eq!(sys.format_word(&w), "s1-s3-s2");
        assert!(sys.parse_word("s9").is_err());
        assert!(sys.parse_word("").unwrap().is_empty());
    }
}

use crate::bruhat::Interval;
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, INFINITY};
use crate::error::{Error, Result};
use crate::matchings::Matching;
use serde::{Deserialize, Serialize};

/// An interval `[e, w]` as plain data. Orders of `∞` are written as `0`;
/// elements are canonical words in rank-major lex order and covers index
/// into them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalDocument {
    pub matrix: Vec<Vec<u32>>,
    pub names: Vec<String>,
    pub top: String,
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl IntervalDocument {
    pub fn from_interval(iv: &Interval) -> Self {
        let sys = iv.system();
        let matrix = sys
            .matrix()
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(|m| if m == INFINITY { 0 } else { m }).collect())
            .collect();
        let mut covers: Vec<[usize; 2]> = iv.hasse().cover_pairs().map(|(a, b)| [a, b]).collect();
        covers.sort_unstable();
        IntervalDocument {
            matrix,
            names: sys.names().to_vec(),
            top: sys.format_word(iv.top_element().word()),
            elements: iv.elements().iter().map(|u| sys.format_word(u.word())).collect(),
            covers,
        }
    }

    pub fn system(&self) -> Result<CoxeterSystem> {
        let rows = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&m| if m == 0 { INFINITY } else { m }).collect())
            .collect();
        CoxeterSystem::new(CoxeterMatrix::new(rows)?, self.names.clone())
    }

    /// Rebuilds the interval from `matrix`, `names` and `top`, and checks
    /// that `elements` and `covers` agree with it.
    pub fn to_interval(&self) -> Result<Interval> {
        let sys = self.system()?;
        let w = sys.canonicalize(&sys.parse_word(&self.top)?)?;
        let iv = Interval::build(&sys, &w)?;
        if Self::from_interval(&iv) != *self {
            return Err(Error::Parse("elements or covers do not match the top element".into()));
        }
        Ok(iv)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A matching as index pairs `[lower, upper]`, sorted by the lower index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingDocument {
    pub pairs: Vec<[usize; 2]>,
}

impl MatchingDocument {
    pub fn from_matching(m: &Matching) -> Self {
        MatchingDocument { pairs: m.pairs().into_iter().map(|(a, b)| [a, b]).collect() }
    }

    pub fn to_matching(&self, iv: &Interval) -> Result<Matching> {
        let pairs: Vec<(usize, usize)> = self.pairs.iter().map(|&[a, b]| (a, b)).collect();
        Matching::from_pairs(iv.hasse(), &pairs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

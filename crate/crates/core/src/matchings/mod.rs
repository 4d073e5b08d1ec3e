//! Matchings of graded posets and of lower Bruhat intervals.

mod enumerate;
mod local;

pub use enumerate::{
    enumerate_special, enumerate_special_capped, perfect_matchings, SearchStats, DEFAULT_SIZE_CAP,
};
pub use local::{
    dihedral_agreement, minimal_non_rho, orbit, orbit_is_dihedral_interval, restrict, tilde,
    Agreement, Restriction,
};

use crate::bruhat::{HasseDiagram, Interval};
use crate::coxeter::Gen;
use crate::error::{Error, Result};

/// A fixed-point-free involution pairing each element with a Hasse
/// neighbour. Entry `i` is the partner of element `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pairing: Vec<u32>,
}

impl Matching {
    pub fn from_pairing(hasse: &HasseDiagram, pairing: Vec<usize>) -> Result<Matching> {
        let n = hasse.len();
        if pairing.len() != n {
            return Err(Error::NotAMatching(format!("{} entries for {n} elements", pairing.len())));
        }
        for (i, &j) in pairing.iter().enumerate() {
            if j >= n {
                return Err(Error::NotAMatching(format!("partner {j} of {i} out of range")));
            }
            if pairing[j] != i || i == j {
                return Err(Error::NotAMatching(format!("not an involution at {i}")));
            }
            if !hasse.covers(i, j) && !hasse.covers(j, i) {
                return Err(Error::NotAMatching(format!("{i} and {j} are not a cover pair")));
            }
        }
        Ok(Matching { pairing: pairing.into_iter().map(|j| j as u32).collect() })
    }

    /// Builds a matching from a map that may leave the poset (`None`).
    pub fn from_map(hasse: &HasseDiagram, map: &[Option<usize>]) -> Result<Matching> {
        let pairing = map
            .iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::NotAMatching(format!("image of {i} is outside"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairing(hasse, pairing)
    }

    /// Builds from unordered pairs; every element must appear exactly once.
    pub fn from_pairs(hasse: &HasseDiagram, pairs: &[(usize, usize)]) -> Result<Matching> {
        let mut pairing = vec![usize::MAX; hasse.len()];
        for &(a, b) in pairs {
            if a >= hasse.len() || b >= hasse.len() {
                return Err(Error::NotAMatching(format!("pair ({a},{b}) out of range")));
            }
            if pairing[a] != usize::MAX || pairing[b] != usize::MAX {
                return Err(Error::NotAMatching(format!("element repeated in ({a},{b})")));
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        if let Some(i) = pairing.iter().position(|&p| p == usize::MAX) {
            return Err(Error::NotAMatching(format!("element {i} unmatched")));
        }
        Self::from_pairing(hasse, pairing)
    }

    pub(crate) fn from_raw(pairing: Vec<u32>) -> Matching {
        Matching { pairing }
    }

    pub fn len(&self) -> usize {
        self.pairing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairing.is_empty()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.pairing[i] as usize
    }

    pub fn pairing(&self) -> Vec<usize> {
        self.pairing.iter().map(|&j| j as usize).collect()
    }

    /// Pairs `(i, j)` with `i < j`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.pairing
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j as usize)
            .map(|(i, &j)| (i, j as usize))
            .collect()
    }
}

/// A cover `u ◁ v` with `u ◁ M(u)`, `M(v) ◁ v` and `u ≠ M(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NConfiguration {
    pub u: usize,
    pub v: usize,
}

impl NConfiguration {
    /// `[M(v), u, v, M(u)]`: bottom-left, bottom-right, top-left, top-right.
    pub fn quadruple(&self, m: &Matching) -> [usize; 4] {
        [m.partner(self.v), self.u, self.v, m.partner(self.u)]
    }
}

/// `ρ_s`: `u ↦ us`; requires `s ∈ D_R(w)`.
pub fn rho_matching(iv: &Interval, s: Gen) -> Result<Matching> {
    if !iv.right_descents(iv.top()).contains(s) {
        return Err(Error::NotADescent(iv.system().name(s).to_string()));
    }
    let map: Vec<Option<usize>> = (0..iv.len()).map(|i| iv.rmul(i, s)).collect();
    Matching::from_map(iv.hasse(), &map)
}

/// `λ_s`: `u ↦ su`; requires `s ∈ D_L(w)`.
pub fn lambda_matching(iv: &Interval, s: Gen) -> Result<Matching> {
    if !iv.left_descents(iv.top()).contains(s) {
        return Err(Error::NotADescent(iv.system().name(s).to_string()));
    }
    let map: Vec<Option<usize>> = (0..iv.len()).map(|i| iv.lmul(s, i)).collect();
    Matching::from_map(iv.hasse(), &map)
}

/// `u1 ◁ u2` and `M(u1) ≠ u2` imply `M(u1) ≤ M(u2)`.
pub fn is_special_definition(hasse: &HasseDiagram, m: &Matching) -> bool {
    hasse
        .cover_pairs()
        .all(|(u1, u2)| m.partner(u1) == u2 || hasse.leq(m.partner(u1), m.partner(u2)))
}

/// No N-configuration. Equivalent to specialness on posets whose rank-2
/// intervals have at least four elements.
pub fn is_special_n_avoiding(hasse: &HasseDiagram, m: &Matching) -> bool {
    first_n_configuration(hasse, m).is_none()
}

fn is_n(hasse: &HasseDiagram, m: &Matching, u: usize, v: usize) -> bool {
    let (mu, mv) = (m.partner(u), m.partner(v));
    u != mv && hasse.rank(mu) > hasse.rank(u) && hasse.rank(mv) < hasse.rank(v)
}

pub fn first_n_configuration(hasse: &HasseDiagram, m: &Matching) -> Option<NConfiguration> {
    hasse
        .cover_pairs()
        .find(|&(u, v)| is_n(hasse, m, u, v))
        .map(|(u, v)| NConfiguration { u, v })
}

pub fn n_configurations(hasse: &HasseDiagram, m: &Matching) -> Vec<NConfiguration> {
    let mut all: Vec<_> = hasse
        .cover_pairs()
        .filter(|&(u, v)| is_n(hasse, m, u, v))
        .map(|(u, v)| NConfiguration { u, v })
        .collect();
    all.sort();
    all
}

/// Pointwise `M(x) = x·s` on the given elements (false where `xs` leaves
/// the interval).
pub fn agrees_with_rho(iv: &Interval, m: &Matching, s: Gen, on: &[usize]) -> bool {
    on.iter().all(|&x| iv.rmul(x, s) == Some(m.partner(x)))
}

/// Pointwise `M(x) = s·x` on the given elements.
pub fn agrees_with_lambda(iv: &Interval, m: &Matching, s: Gen, on: &[usize]) -> bool {
    on.iter().all(|&x| iv.lmul(s, x) == Some(m.partner(x)))
}

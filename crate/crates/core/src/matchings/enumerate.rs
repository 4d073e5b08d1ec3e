use super::{is_special_definition, is_special_n_avoiding, Matching};
use crate::bruhat::{HasseDiagram, Interval};
use crate::error::{Error, Result};
use std::ops::ControlFlow;

/// Default cap on interval size for [`enumerate_special`].
pub const DEFAULT_SIZE_CAP: usize = 4096;

const FREE: u32 = u32::MAX;

/// Counters from one run of the special-matching search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Complete perfect matchings reached by the search.
    pub candidates: u64,
    /// Branches cut because a new pair closed an N-configuration.
    pub pruned: u64,
    /// Candidates on which the definition and N-avoidance disagreed.
    pub disagreements: u64,
}

/// Visits perfect matchings of the Hasse diagram, in lexicographic order of
/// their pairing arrays (for rank-major indexed posets).
///
/// The least unmatched element (rank-major) is always paired with one of its
/// upper covers, since its lower covers are already matched. With `prune`,
/// a branch is cut as soon as the new pair forms an N-configuration with a
/// pair fixed earlier; every N-configuration involves two pairs, so a
/// completed matching is then N-avoiding.
pub fn perfect_matchings(
    hasse: &HasseDiagram,
    prune: bool,
    mut visit: impl FnMut(&Matching) -> ControlFlow<()>,
) -> u64 {
    let n = hasse.len();
    if n % 2 == 1 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (hasse.rank(i), i));
    let mut search = Search { hasse, order, partner: vec![FREE; n], prune, pruned: 0 };
    let _ = search.go(0, &mut visit);
    search.pruned
}

struct Search<'a> {
    hasse: &'a HasseDiagram,
    order: Vec<usize>,
    partner: Vec<u32>,
    prune: bool,
    pruned: u64,
}

impl Search<'_> {
    fn go(
        &mut self,
        mut pos: usize,
        visit: &mut impl FnMut(&Matching) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        while pos < self.order.len() && self.partner[self.order[pos]] != FREE {
            pos += 1;
        }
        if pos == self.order.len() {
            return visit(&Matching::from_raw(self.partner.clone()));
        }
        let x = self.order[pos];
        let hasse = self.hasse;
        for &y in hasse.upper_covers(x) {
            if self.partner[y] != FREE {
                continue;
            }
            if self.prune && self.closes_n(x, y) {
                self.pruned += 1;
                continue;
            }
            self.partner[x] = y as u32;
            self.partner[y] = x as u32;
            let flow = self.go(pos + 1, visit);
            self.partner[x] = FREE;
            self.partner[y] = FREE;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Whether pairing `x ◁ y` creates an N-configuration with a fixed pair.
    fn closes_n(&self, x: usize, y: usize) -> bool {
        let h = self.hasse;
        // x as the lower end u: some v ▷ x already matched downwards.
        let as_u = h.upper_covers(x).iter().any(|&v| {
            v != y && self.partner[v] != FREE && h.rank(self.partner[v] as usize) < h.rank(v)
        });
        // y as the upper end v: some u ◁ y already matched upwards.
        let as_v = h.lower_covers(y).iter().any(|&u| {
            u != x && self.partner[u] != FREE && h.rank(self.partner[u] as usize) > h.rank(u)
        });
        as_u || as_v
    }
}

/// All special matchings of the interval, sorted by pairing array.
pub fn enumerate_special(iv: &Interval) -> Result<Vec<Matching>> {
    enumerate_special_capped(iv.hasse(), DEFAULT_SIZE_CAP).map(|(all, _)| all)
}

/// Special matchings of any graded poset, with search statistics. Each
/// completed candidate is re-checked against the definition.
pub fn enumerate_special_capped(
    hasse: &HasseDiagram,
    size_cap: usize,
) -> Result<(Vec<Matching>, SearchStats)> {
    if hasse.len() > size_cap {
        return Err(Error::SizeCapExceeded { size: hasse.len(), cap: size_cap });
    }
    let mut found = Vec::new();
    let mut stats = SearchStats::default();
    stats.pruned = perfect_matchings(hasse, true, |m| {
        stats.candidates += 1;
        let by_definition = is_special_definition(hasse, m);
        if by_definition != is_special_n_avoiding(hasse, m) {
            stats.disagreements += 1;
        }
        if by_definition {
            found.push(m.clone());
        }
        ControlFlow::Continue(())
    });
    found.sort();
    Ok((found, stats))
}

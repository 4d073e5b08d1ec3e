use crate::error::{Error, Result};

/// A finite graded poset given by its cover relation.
///
/// Elements are `0..len`. The order relation is precomputed as one bitset
/// of lower elements per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    rank: Vec<usize>,
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
    words: usize,
    below: Vec<u64>,
}

impl HasseDiagram {
    /// Builds the diagram from ranks and cover pairs `(lower, upper)`.
    /// Every cover must raise the rank by exactly one.
    pub fn from_covers(rank: Vec<usize>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = rank.len();
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::Precondition(format!("cover ({a},{b}) out of range")));
            }
            if rank[b] != rank[a] + 1 {
                return Err(Error::Precondition(format!("cover ({a},{b}) is not rank-adjacent")));
            }
            down[b].push(a);
            up[a].push(b);
        }
        for list in down.iter_mut().chain(up.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let words = n.div_ceil(64).max(1);
        let mut below = vec![0u64; n * words];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| rank[i]);
        for &i in &order {
            below[i * words + i / 64] |= 1 << (i % 64);
            for &c in &down[i] {
                for k in 0..words {
                    below[i * words + k] |= below[c * words + k];
                }
            }
        }
        Ok(HasseDiagram { rank, down, up, words, below })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// `i ≤ j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j * self.words + i / 64] & (1 << (i % 64)) != 0
    }

    /// `i ◁ j`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.rank[j] == self.rank[i] + 1 && self.leq(i, j)
    }

    /// All pairs `(u, v)` with `u ◁ v`.
    pub fn cover_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.down
            .iter()
            .enumerate()
            .flat_map(|(v, list)| list.iter().map(move |&u| (u, v)))
    }

    /// Number of elements of each rank, from 0 upwards.
    pub fn rank_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.max_rank() + 1];
        for &r in &self.rank {
            profile[r] += 1;
        }
        profile
    }

    /// Elements of the closed interval `[u, v]`, in increasing index order.
    pub fn interval(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&z| self.leq(u, z) && self.leq(z, v)).collect()
    }

    /// The subposet induced on `members` (sorted, distinct), with covers
    /// taken from this diagram. Correct for convex subsets such as intervals.
    pub fn induced(&self, members: &[usize]) -> HasseDiagram {
        let pos = |x: usize| members.binary_search(&x).ok();
        let base = members.iter().map(|&m| self.rank[m]).min().unwrap_or(0);
        let rank = members.iter().map(|&m| self.rank[m] - base).collect();
        let mut covers = Vec::new();
        for (j, &m) in members.iter().enumerate() {
            for &c in &self.down[m] {
                if let Some(i) = pos(c) {
                    covers.push((i, j));
                }
            }
        }
        HasseDiagram::from_covers(rank, &covers).expect("induced covers are rank-adjacent")
    }

    /// No five distinct elements `a1, a2, a3, b1, b2` with every `a_i`
    /// covered by every `b_j`, or every `a_i` covering every `b_j`.
    pub fn is_k32_free(&self) -> bool {
        self.find_k32().is_none()
    }

    /// A pair `(b1, b2)` of same-rank elements sharing three or more lower
    /// covers, or three or more upper covers.
    pub fn find_k32(&self) -> Option<(usize, usize)> {
        let n = self.len();
        for b1 in 0..n {
            for b2 in b1 + 1..n {
                if self.rank[b1] != self.rank[b2] {
                    continue;
                }
                let shared_down = self.down[b1].iter().filter(|x| self.down[b2].contains(x)).count();
                let shared_up = self.up[b1].iter().filter(|x| self.up[b2].contains(x)).count();
                if shared_down >= 3 || shared_up >= 3 {
                    return Some((b1, b2));
                }
            }
        }
        None
    }

    /// Whether the poset looks like a Bruhat interval of a rank-2 Coxeter
    /// group: rank sizes `1, 2, …, 2, 1` (or a single point), each element of
    /// rank `k ≥ 1` covering every element of rank `k - 1`.
    pub fn is_dihedral(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let profile = self.rank_profile();
        let top = profile.len() - 1;
        let shape_ok = profile.iter().enumerate().all(|(k, &c)| {
            if k == 0 || k == top {
                c == 1
            } else {
                c == 2
            }
        });
        if !shape_ok {
            return false;
        }
        (0..self.len()).all(|v| {
            let r = self.rank[v];
            r == 0 || self.down[v].len() == profile[r - 1]
        })
    }

    /// Every rank-2 interval has exactly four elements.
    pub fn rank_two_intervals_are_diamonds(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n)
                .filter(|&y| self.rank[y] == self.rank[x] + 2 && self.leq(x, y))
                .all(|y| self.interval(x, y).len() == 4)
        })
    }
}

use super::{k_of, System};
use crate::bruhat::Interval;
use crate::coxeter::{CoxeterSystem, Gen, GenSet};
use crate::error::{Error, Result};
use crate::matchings::Matching;

/// Whether a generator counts as commuting with itself in `C_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsReading {
    /// `C_s = {r : rs = sr}`, which contains `s`.
    Includes,
    /// `C_s ∖ {s}`.
    Excludes,
}

impl CsReading {
    pub fn commuting_set(self, sys: &CoxeterSystem, s: Gen) -> GenSet {
        match self {
            CsReading::Includes => sys.commuting_set(s),
            CsReading::Excludes => sys.commuting_set(s).without(s),
        }
    }

    pub fn k_of(self, sys: &CoxeterSystem, j: GenSet, s: Gen) -> GenSet {
        self.commuting_set(sys, s).union(sys.generators().difference(j))
    }
}

/// `u^J · s · u_J`, or `None` when it is not below `w`.
pub fn eval_simple(iv: &Interval, j: GenSet, s: Gen, u: usize) -> Result<Option<usize>> {
    let Some(si) = iv.generator_index(s) else {
        return Ok(None);
    };
    let (c, p) = iv.parabolic_right(u, j);
    iv.product(&[c, si, p])
}

/// The map `u ↦ u^J s u_J` as a matching, or `None` if some image is not
/// below `w`.
pub fn simple_matching(iv: &Interval, j: GenSet, s: Gen) -> Result<Option<Matching>> {
    let mut map = Vec::with_capacity(iv.len());
    for u in 0..iv.len() {
        match eval_simple(iv, j, s, u)? {
            Some(v) => map.push(Some(v)),
            None => return Ok(None),
        }
    }
    Matching::from_map(iv.hasse(), &map).map(Some)
}

/// `w^I ∈ W_{K(I)}`, or `None` when `u^I s u_I ≤ w` fails for some `u`.
pub fn coset_criterion(iv: &Interval, i: GenSet, s: Gen, reading: CsReading) -> Result<Option<bool>> {
    if simple_matching(iv, i, s)?.is_none() {
        return Ok(None);
    }
    let (wi, _) = iv.parabolic_right(iv.top(), i);
    Ok(Some(iv.support(wi).is_subset(reading.k_of(iv.system(), i, s))))
}

/// All `(x, y)` with `u = x·y` and `ℓ(u) = ℓ(x) + ℓ(y)`, ordered by `x`.
pub fn right_splittings(iv: &Interval, u: usize) -> Vec<(usize, usize)> {
    let mut seen = vec![(u, 0usize)];
    let mut stack = vec![(u, 0usize)];
    while let Some((x, y)) = stack.pop() {
        for r in iv.right_descents(x).iter() {
            let x2 = iv.rmul(x, r).expect("descent");
            if seen.iter().any(|&(z, _)| z == x2) {
                continue;
            }
            let y2 = iv.lmul(r, y).expect("ry is below u");
            seen.push((x2, y2));
            stack.push((x2, y2));
        }
    }
    seen.sort_unstable();
    seen
}

/// `u1 · s · u2` for a length-additive splitting with `u1 ∈ W_K`,
/// `u2 ∈ W_J`, `K = C_s ∪ (S∖J)` and `C_s ⊆ J`.
pub fn eval_relaxed(iv: &Interval, j: GenSet, s: Gen, u1: usize, u2: usize) -> Result<Option<usize>> {
    let sys = iv.system();
    if !sys.commuting_set(s).is_subset(j) {
        return Err(Error::Precondition("need C_s ⊆ J".into()));
    }
    if !iv.support(u1).is_subset(k_of(sys, j, s)) || !iv.support(u2).is_subset(j) {
        return Err(Error::Precondition("need u1 ∈ W_K and u2 ∈ W_J".into()));
    }
    let Some(u) = iv.product(&[u1, u2])? else {
        return Err(Error::NotInInterval);
    };
    if iv.rank(u) != iv.rank(u1) + iv.rank(u2) {
        return Err(Error::Precondition("lengths are not additive".into()));
    }
    let Some(si) = iv.generator_index(s) else {
        return Ok(None);
    };
    iv.product(&[u1, si, u2])
}

fn triple_admissible(iv: &Interval, r: &System, k: GenSet, (u1, u2, u3): (usize, usize, usize)) -> bool {
    let (s, t) = (r.s, r.t);
    let sup1 = iv.support(u1);
    (sup1.is_subset(k.without(s)) || sup1.is_subset(k.without(t)))
        && iv.support(u2).is_subset(r.st())
        && iv.support(u3).is_subset(r.j)
        && !iv.right_descents(u1).contains(s)
        && !iv.right_descents(u1).contains(t)
        && !iv.left_descents(u3).contains(s)
}

/// `u1 · M_st(u2) · u3` under the hypotheses of the three-factor formula.
pub fn eval_triple(iv: &Interval, r: &System, u1: usize, u2: usize, u3: usize) -> Result<Option<usize>> {
    if r.is_multiplication(iv) {
        return Err(Error::Precondition("M_st is ρ_s".into()));
    }
    let k = k_of(iv.system(), r.j, r.s);
    if !triple_admissible(iv, r, k, (u1, u2, u3)) {
        return Err(Error::Precondition("triple is not admissible".into()));
    }
    match iv.product(&[u1, u2, u3])? {
        Some(u) if iv.rank(u) == iv.rank(u1) + iv.rank(u2) + iv.rank(u3) => {}
        _ => return Err(Error::Precondition("lengths are not additive".into())),
    }
    iv.product(&[u1, r.part.apply(&r.m_st, u2), u3])
}

/// Admissible triples `(u1, u2, u3)` for `u`, for a right system with
/// `M_st ≢ ρ_s`.
pub fn admissible_triples(iv: &Interval, r: &System, u: usize) -> Vec<(usize, usize, usize)> {
    let k = k_of(iv.system(), r.j, r.s);
    let mut out = Vec::new();
    for (u1, rest) in right_splittings(iv, u) {
        for (u2, u3) in right_splittings(iv, rest) {
            if triple_admissible(iv, r, k, (u1, u2, u3)) {
                out.push((u1, u2, u3));
            }
        }
    }
    out
}

/// Readings of the equality criterion for two right systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrReading {
    /// `J ∪ C_s = J' ∪ C_s` over all of `S`.
    Literal,
    /// The same equation intersected with the support of `w`.
    SupportRestricted,
}

/// Equality criterion for the matchings of two right systems.
pub fn systems_equal_rr(iv: &Interval, a: &System, b: &System, reading: RrReading) -> bool {
    let sys = iv.system();
    if a.s != b.s {
        return false;
    }
    let cs = sys.commuting_set(a.s);
    let scope = match reading {
        RrReading::Literal => sys.generators(),
        RrReading::SupportRestricted => iv.top_support(),
    };
    if a.j.union(cs).intersection(scope) != b.j.union(cs).intersection(scope) {
        return false;
    }
    (a.is_multiplication(iv) && b.is_multiplication(iv)) || (a.t == b.t && a.m_st == b.m_st)
}

/// Readings of the equality criterion for a right and a left system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RlReading {
    /// `J ∩ K ⊆ C_s` and `J ∪ K ⊆ S ∖ C_s`.
    Literal,
    /// Both inclusions applied to the sets with `s` removed.
    WithoutS,
    /// `J ∩ K ⊆ C_s` and `S ∖ C_s ⊆ J ∪ K`.
    Reversed,
    /// `Reversed`, with both sides intersected with the support of `w`.
    ReversedOnSupport,
}

/// Equality criterion for `M_R` and `_L M`, where `l` is a left system.
pub fn systems_equal_rl(iv: &Interval, r: &System, l: &System, reading: RlReading, cs_reading: CsReading) -> bool {
    let sys = iv.system();
    let s = r.s;
    if l.s != s || !r.is_multiplication(iv) || !l.is_multiplication(iv) {
        return false;
    }
    let cs = cs_reading.commuting_set(sys, s);
    let others = sys.generators().difference(cs);
    let (meet, join) = (r.j.intersection(l.j), r.j.union(l.j));
    match reading {
        RlReading::Literal => meet.is_subset(cs) && join.is_subset(others),
        RlReading::WithoutS => meet.without(s).is_subset(cs) && join.without(s).is_subset(others),
        RlReading::Reversed => meet.is_subset(cs) && others.is_subset(join),
        RlReading::ReversedOnSupport => {
            let sup = iv.top_support();
            meet.intersection(sup).is_subset(cs) && others.intersection(sup).is_subset(join)
        }
    }
}

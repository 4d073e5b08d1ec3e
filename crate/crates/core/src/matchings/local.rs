use super::Matching;
use crate::bruhat::{HasseDiagram, Interval};
use crate::coxeter::{Element, Gen, GenSet};
use crate::error::{Error, Result};

/// A matching restricted to a subinterval `[u, v]`, reindexed on the
/// sorted members.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub members: Vec<usize>,
    pub hasse: HasseDiagram,
    pub matching: Matching,
}

/// Restricts `M` to `[u, v]`, which requires `M(v) ◁ v` and `u ◁ M(u)`.
/// Errors if the preconditions fail or if `M` does not preserve `[u, v]`.
pub fn restrict(hasse: &HasseDiagram, m: &Matching, u: usize, v: usize) -> Result<Restriction> {
    if !hasse.leq(u, v) {
        return Err(Error::Precondition(format!("{u} is not below {v}")));
    }
    if hasse.rank(m.partner(v)) > hasse.rank(v) || hasse.rank(m.partner(u)) < hasse.rank(u) {
        return Err(Error::Precondition("need M(v) ◁ v and u ◁ M(u)".into()));
    }
    let members = hasse.interval(u, v);
    let sub = hasse.induced(&members);
    let pairing = members
        .iter()
        .map(|&x| {
            members
                .binary_search(&m.partner(x))
                .map_err(|_| Error::NotAMatching(format!("M({x}) leaves [{u},{v}]")))
        })
        .collect::<Result<Vec<_>>>()?;
    let matching = Matching::from_pairing(&sub, pairing)?;
    Ok(Restriction { members, hasse: sub, matching })
}

/// The orbit of `u` under the group generated by `M` and `N`, sorted.
pub fn orbit(m: &Matching, n: &Matching, u: usize) -> Vec<usize> {
    let mut seen = vec![u];
    let mut frontier = vec![u];
    while let Some(x) = frontier.pop() {
        for y in [m.partner(x), n.partner(x)] {
            if !seen.contains(&y) {
                seen.push(y);
                frontier.push(y);
            }
        }
    }
    seen.sort_unstable();
    seen
}

/// Whether the sorted set `members` is an interval `[a, b]` of the poset and
/// that interval is dihedral.
pub fn orbit_is_dihedral_interval(hasse: &HasseDiagram, members: &[usize]) -> bool {
    let Some(&a) = members.iter().min_by_key(|&&x| hasse.rank(x)) else {
        return false;
    };
    let Some(&b) = members.iter().max_by_key(|&&x| hasse.rank(x)) else {
        return false;
    };
    hasse.interval(a, b) == members && hasse.induced(members).is_dihedral()
}

/// Outcome of testing the rank-2 agreement property at one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    /// The two matchings differ somewhere on the dihedral union below `v`.
    NotApplicable,
    /// They agree on the union and at `v`.
    Confirmed,
    /// They agree on the union but not at `v`.
    Violated,
}

/// Tests whether agreement of `M` and `M'` on `⋃_t [e, v_0(s,t)]` forces
/// `M(v) = M'(v)`, where `s = M(e) = M'(e)`. The two matchings may live on
/// different intervals, both containing `v`.
pub fn dihedral_agreement(
    (iv, m): (&Interval, &Matching),
    (iv2, m2): (&Interval, &Matching),
    v: &Element,
) -> Result<Agreement> {
    let (Some(vi), Some(vj)) = (iv.index_of(v), iv2.index_of(v)) else {
        return Err(Error::NotInInterval);
    };
    let image = |iv: &Interval, m: &Matching, x: usize| iv.element(m.partner(x)).clone();
    let s = image(iv, m, 0);
    if s != image(iv2, m2, 0) {
        return Err(Error::Precondition("M(e) and M'(e) differ".into()));
    }
    let s_gen = s.word()[0];
    for x in iv.hasse().interval(0, vi) {
        if iv.support(x).without(s_gen).len() > 1 {
            continue;
        }
        let y = iv2.index_of(iv.element(x)).expect("x ≤ v lies in both intervals");
        if image(iv, m, x) != image(iv2, m2, y) {
            return Ok(Agreement::NotApplicable);
        }
    }
    Ok(if image(iv, m, vi) == image(iv2, m2, vj) {
        Agreement::Confirmed
    } else {
        Agreement::Violated
    })
}

/// The minimal `x ≤ w_0(s,t)` with `M(x) ≠ xs`, or `None` when `M = ρ_s`
/// on `[e, w_0(s,t)]`. Requires `M(e) = s` and `M(t) = ts`, and errors if
/// the failures have more than one minimal element.
pub fn minimal_non_rho(iv: &Interval, m: &Matching, s: Gen, t: Gen) -> Result<Option<usize>> {
    let (Some(si), Some(ti)) = (iv.generator_index(s), iv.generator_index(t)) else {
        return Err(Error::Precondition("s and t must lie below w".into()));
    };
    if m.partner(0) != si || Some(m.partner(ti)) != iv.lmul(t, si) {
        return Err(Error::Precondition("need M(e) = s and M(t) = ts".into()));
    }
    let failures: Vec<usize> = iv
        .parabolic_members(GenSet::pair(s, t))
        .into_iter()
        .filter(|&x| iv.rmul(x, s) != Some(m.partner(x)))
        .collect();
    let minimal: Vec<usize> = failures
        .iter()
        .copied()
        .filter(|&x| !failures.iter().any(|&y| y != x && iv.leq(y, x)))
        .collect();
    match minimal.as_slice() {
        [] => Ok(None),
        [x0] => Ok(Some(*x0)),
        _ => Err(Error::Precondition("failures of ρ_s have several minimal elements".into())),
    }
}

/// `M̃(x) = M(x⁻¹)⁻¹`, a matching of `inv`, which must be `[e, w⁻¹]`.
pub fn tilde(iv: &Interval, m: &Matching, inv: &Interval) -> Matching {
    let to_inv = iv.inverse_map(inv);
    let mut pairing = vec![0u32; inv.len()];
    for (y, &x) in to_inv.iter().enumerate() {
        pairing[x] = to_inv[m.partner(y)] as u32;
    }
    Matching::from_raw(pairing)
}

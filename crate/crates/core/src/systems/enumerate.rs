use super::{simple_matching, DihedralPart, System};
use crate::bruhat::{Interval, Side};
use crate::coxeter::{Gen, GenSet};
use crate::error::{Error, Result};
use crate::matchings::{enumerate_special_capped, Matching, DEFAULT_SIZE_CAP};
use rayon::prelude::*;
use std::sync::Arc;

/// Special matchings of `[e, w_0(s,t)]` with `M(e) = s` and `M(t) = ts`
/// (right) or `M(t) = st` (left); the second condition is void when `t ≰ w`.
pub fn dihedral_special_matchings(part: &DihedralPart, iv: &Interval, side: Side) -> Result<Vec<Matching>> {
    let Some(si) = iv.generator_index(part.s) else {
        return Ok(Vec::new());
    };
    let target_t = iv.generator_index(part.t).map(|ti| match side {
        Side::Right => (ti, iv.rmul(ti, part.s)),
        Side::Left => (ti, iv.lmul(part.s, ti)),
    });
    let (all, _) = enumerate_special_capped(&part.hasse, DEFAULT_SIZE_CAP)?;
    Ok(all
        .into_iter()
        .filter(|m| part.apply(m, 0) == si)
        .filter(|m| target_t.is_none_or(|(ti, img)| Some(part.apply(m, ti)) == img))
        .collect())
}

/// Every quadruple satisfying axiom 1, ordered by `(s, t, J, M_st)`.
pub fn candidate_systems(iv: &Interval, side: Side) -> Result<Vec<System>> {
    let sys = iv.system();
    let all = sys.generators();
    let mut out = Vec::new();
    for s in iv.top_support().iter() {
        for t in all.without(s).iter() {
            let part = Arc::new(DihedralPart::new(iv, s, t));
            let matchings = dihedral_special_matchings(&part, iv, side)?;
            for j in all.without(s).without(t).subsets() {
                for m in &matchings {
                    out.push(System { side, j: j.with(s), s, t, part: part.clone(), m_st: m.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// All right (or left) systems for the top element of `iv`.
pub fn enumerate_systems(iv: &Interval, side: Side) -> Result<Vec<System>> {
    let candidates = candidate_systems(iv, side)?;
    let keep = candidates
        .par_iter()
        .map(|c| c.check(iv).map(|r| r.holds()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(candidates.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect())
}

pub fn enumerate_right_systems(iv: &Interval) -> Result<Vec<System>> {
    enumerate_systems(iv, Side::Right)
}

pub fn enumerate_left_systems(iv: &Interval) -> Result<Vec<System>> {
    enumerate_systems(iv, Side::Left)
}

fn system_matching(iv: &Interval, sys: &System) -> Result<Matching> {
    sys.matching(iv)?
        .ok_or_else(|| Error::NotAMatching(format!("map of {} is not a matching", sys.describe(iv))))
}

/// The matchings associated with all right and left systems, deduplicated
/// and sorted.
pub fn matchings_from_systems(iv: &Interval) -> Result<Vec<Matching>> {
    let mut systems = enumerate_right_systems(iv)?;
    systems.extend(enumerate_left_systems(iv)?);
    let mut all = systems
        .par_iter()
        .map(|r| system_matching(iv, r))
        .collect::<Result<Vec<_>>>()?;
    all.sort();
    all.dedup();
    Ok(all)
}

/// Matchings of right systems whose `M_st` is `ρ_s`, deduplicated and sorted.
pub fn rho_type_matchings(iv: &Interval) -> Result<Vec<Matching>> {
    let mut all = Vec::new();
    for r in enumerate_right_systems(iv)? {
        if r.is_multiplication(iv) {
            all.push(system_matching(iv, &r)?);
        }
    }
    all.sort();
    all.dedup();
    Ok(all)
}

/// All `(J, s)` with `C_s ⊆ J ⊊ S`, `w^J ∈ W_{C_s ∪ (S∖J)}` and
/// `u^J s u_J ≤ w` for every `u ≤ w`.
pub fn coset_type_list(iv: &Interval) -> Result<Vec<(GenSet, Gen)>> {
    let sys = iv.system();
    let all = sys.generators();
    let mut out = Vec::new();
    for s in all.iter() {
        let cs = sys.commuting_set(s);
        for extra in all.difference(cs).subsets() {
            let j = cs.union(extra);
            if j == all {
                continue;
            }
            let (wj, _) = iv.parabolic_right(iv.top(), j);
            if !iv.support(wj).is_subset(super::k_of(sys, j, s)) {
                continue;
            }
            if simple_matching(iv, j, s)?.is_some() {
                out.push((j, s));
            }
        }
    }
    Ok(out)
}

/// [`coset_type_list`] plus the pairs `(S∖{t}, s)` with `t ∈ C_s∖{s}`,
/// `w^{S∖{t}} ∈ W_{C_s}` and closure. These reach the `ρ_s`-type matchings
/// whose `J ∪ C_s` is all of `S`, which the strict `J ⊊ S` bound omits.
pub fn coset_type_list_completed(iv: &Interval) -> Result<Vec<(GenSet, Gen)>> {
    let sys = iv.system();
    let all = sys.generators();
    let mut out = coset_type_list(iv)?;
    for s in all.iter() {
        let cs = sys.commuting_set(s);
        for t in cs.without(s).iter() {
            let j = all.without(t);
            let (wj, _) = iv.parabolic_right(iv.top(), j);
            if iv.support(wj).is_subset(cs) && simple_matching(iv, j, s)?.is_some() {
                out.push((j, s));
                break;
            }
        }
    }
    Ok(out)
}

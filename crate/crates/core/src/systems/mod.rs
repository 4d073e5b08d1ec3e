//! Right and left systems, their associated matchings, and the
//! classification of special matchings.

mod enumerate;
mod simple;

pub use enumerate::{
    candidate_systems, coset_type_list, coset_type_list_completed, dihedral_special_matchings, enumerate_left_systems,
    enumerate_right_systems, enumerate_systems, matchings_from_systems, rho_type_matchings,
};
pub use simple::{
    admissible_triples, eval_relaxed, eval_simple, eval_triple, coset_criterion, right_splittings,
    simple_matching, systems_equal_rl, systems_equal_rr, CsReading, RlReading, RrReading,
};

use crate::bruhat::{HasseDiagram, Interval, Side};
use crate::coxeter::{CoxeterSystem, Element, Gen, GenSet};
use crate::error::Result;
use crate::matchings::Matching;
use std::fmt;
use std::sync::Arc;

/// `K_s(J) = C_s ∪ (S ∖ J)`.
pub fn k_of(sys: &CoxeterSystem, j: GenSet, s: Gen) -> GenSet {
    sys.commuting_set(s).union(sys.generators().difference(j))
}

/// `[e, w_0(s,t)] = W_{s,t} ∩ [e, w]` inside an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralPart {
    pub s: Gen,
    pub t: Gen,
    /// Interval indices, increasing.
    pub members: Vec<usize>,
    pub hasse: HasseDiagram,
}

impl DihedralPart {
    pub fn new(iv: &Interval, s: Gen, t: Gen) -> DihedralPart {
        let members = iv.parabolic_members(GenSet::pair(s, t));
        let hasse = iv.hasse().induced(&members);
        DihedralPart { s, t, members, hasse }
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position(x).is_some()
    }

    /// `M(x)` as an interval index, for `x` in the part.
    pub fn apply(&self, m: &Matching, x: usize) -> usize {
        self.members[m.partner(self.position(x).expect("element of the dihedral part"))]
    }

    /// The matching of the part given by an interval map, if it is one.
    pub fn matching_from(&self, f: impl Fn(usize) -> Option<usize>) -> Option<Matching> {
        let map: Vec<Option<usize>> =
            self.members.iter().map(|&x| f(x).and_then(|y| self.position(y))).collect();
        Matching::from_map(&self.hasse, &map).ok()
    }

    /// Whether `M(x) = xs` for every `x` in the part.
    pub fn is_rho(&self, iv: &Interval, m: &Matching, s: Gen) -> bool {
        self.members.iter().all(|&x| iv.rmul(x, s) == Some(self.apply(m, x)))
    }

    /// Whether `M(x) = sx` for every `x` in the part.
    pub fn is_lambda(&self, iv: &Interval, m: &Matching, s: Gen) -> bool {
        self.members.iter().all(|&x| iv.lmul(s, x) == Some(self.apply(m, x)))
    }

    /// `M(αx) = αM(x)` for every `x` in the part with `αx` in the part.
    pub fn commutes_with_lambda(&self, iv: &Interval, m: &Matching, alpha: Gen) -> bool {
        self.members.iter().all(|&x| match iv.lmul(alpha, x).filter(|&ax| self.contains(ax)) {
            Some(ax) => iv.lmul(alpha, self.apply(m, x)) == Some(self.apply(m, ax)),
            None => true,
        })
    }

    /// `M(xα) = M(x)α` for every `x` in the part with `xα` in the part.
    pub fn commutes_with_rho(&self, iv: &Interval, m: &Matching, alpha: Gen) -> bool {
        self.members.iter().all(|&x| match iv.rmul(x, alpha).filter(|&xa| self.contains(xa)) {
            Some(xa) => iv.rmul(self.apply(m, x), alpha) == Some(self.apply(m, xa)),
            None => true,
        })
    }
}

/// A quadruple `(J, s, t, M_st)`. On the right side it is a candidate right
/// system for `w`; on the left side a candidate left system, with
/// `M_st(t) = st`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    pub side: Side,
    pub j: GenSet,
    pub s: Gen,
    pub t: Gen,
    pub part: Arc<DihedralPart>,
    pub m_st: Matching,
}

/// Failed axioms of a candidate system, numbered 1 to 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub side: Side,
    pub failed: Vec<u8>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.failed.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.side == Side::Right { 'R' } else { 'L' };
        if self.failed.is_empty() {
            return write!(f, "ok");
        }
        let names: Vec<String> = self.failed.iter().map(|k| format!("{letter}{k}")).collect();
        write!(f, "fails {}", names.join(","))
    }
}

impl System {
    pub fn st(&self) -> GenSet {
        GenSet::pair(self.s, self.t)
    }

    /// `M_st ≡ ρ_s` (right) or `M_st ≡ λ_s` (left) on `[e, w_0(s,t)]`.
    pub fn is_multiplication(&self, iv: &Interval) -> bool {
        match self.side {
            Side::Right => self.part.is_rho(iv, &self.m_st, self.s),
            Side::Left => self.part.is_lambda(iv, &self.m_st, self.s),
        }
    }

    /// The three factors around `M_st` for `u`: for a right system
    /// `((u^J)^{st}, ū, ^{s}(u_J))` with `ū = (u^J)_{st} · _{s}(u_J)`, and
    /// mirrored for a left system.
    pub fn split(&self, iv: &Interval, u: usize) -> Result<(usize, usize, usize)> {
        let (s, st) = (GenSet::singleton(self.s), self.st());
        match self.side {
            Side::Right => {
                let (c, p) = iv.parabolic_right(u, self.j);
                let (a, b) = iv.parabolic_right(c, st);
                let (d, e) = iv.parabolic_left(p, s);
                let bar = iv.product(&[b, d])?.expect("subword of u");
                Ok((a, bar, e))
            }
            Side::Left => {
                let (p, c) = iv.parabolic_left(u, self.j);
                let (a, b) = iv.parabolic_right(p, s);
                let (d, e) = iv.parabolic_left(c, st);
                let bar = iv.product(&[b, d])?.expect("subword of u");
                Ok((a, bar, e))
            }
        }
    }

    /// `M_R(u)` or `_L M(u)`, or `None` when it is not below `w`.
    pub fn eval(&self, iv: &Interval, u: usize) -> Result<Option<usize>> {
        let (a, bar, e) = self.split(iv, u)?;
        iv.product(&[a, self.part.apply(&self.m_st, bar), e])
    }

    /// Like [`System::eval`], but returns the element even outside `[e, w]`.
    pub fn eval_element(&self, iv: &Interval, u: usize) -> Result<Element> {
        let (a, bar, e) = self.split(iv, u)?;
        iv.product_element(&[a, self.part.apply(&self.m_st, bar), e])
    }

    /// The associated map as a matching of `[e, w]`, if it is one.
    pub fn matching(&self, iv: &Interval) -> Result<Option<Matching>> {
        let map = (0..iv.len()).map(|u| self.eval(iv, u)).collect::<Result<Vec<_>>>()?;
        Ok(Matching::from_map(iv.hasse(), &map).ok())
    }

    /// Checks axioms 1 to 5 of the system's side.
    pub fn check(&self, iv: &Interval) -> Result<AxiomReport> {
        let (s, t) = (self.s, self.t);
        let part = &self.part;
        let mut failed = Vec::new();

        let si = iv.generator_index(s);
        let t_image = iv.generator_index(t).map(|ti| match self.side {
            Side::Right => (ti, iv.rmul(ti, s)),
            Side::Left => (ti, iv.lmul(s, ti)),
        });
        let r1 = self.j.contains(s)
            && !self.j.contains(t)
            && s != t
            && si.is_some_and(|si| part.apply(&self.m_st, 0) == si)
            && t_image.is_none_or(|(ti, img)| Some(part.apply(&self.m_st, ti)) == img)
            && crate::matchings::is_special_definition(&part.hasse, &self.m_st);
        if !r1 {
            failed.push(1);
        }

        for u in 0..iv.len() {
            if self.eval(iv, u)?.is_none() {
                failed.push(2);
                break;
            }
        }

        let top = iv.top();
        let sides = match self.side {
            Side::Right => {
                let (c, p) = iv.parabolic_right(top, self.j);
                let (a, _) = iv.parabolic_right(c, self.st());
                let (_, e) = iv.parabolic_left(p, GenSet::singleton(s));
                (c, a, e)
            }
            Side::Left => {
                let (p, c) = iv.parabolic_left(top, self.j);
                let (_, a) = iv.parabolic_left(c, self.st());
                let (e, _) = iv.parabolic_right(p, GenSet::singleton(s));
                (c, a, e)
            }
        };
        let (coset, outer, inner) = sides;
        let sys = iv.system();
        if !self.j.intersection(iv.support(coset)).iter().all(|r| sys.commute(r, s)) {
            failed.push(3);
        }
        let r4 = self.st().intersection(iv.support(outer)).iter().all(|alpha| match self.side {
            Side::Right => part.commutes_with_lambda(iv, &self.m_st, alpha),
            Side::Left => part.commutes_with_rho(iv, &self.m_st, alpha),
        });
        if !r4 {
            failed.push(4);
        }
        let r5 = !iv.support(inner).contains(s)
            || match self.side {
                Side::Right => part.commutes_with_rho(iv, &self.m_st, s),
                Side::Left => part.commutes_with_lambda(iv, &self.m_st, s),
            };
        if !r5 {
            failed.push(5);
        }
        Ok(AxiomReport { side: self.side, failed })
    }

    /// The same quadruple read on the other side for `w⁻¹`, with `M_st`
    /// replaced by `M̃_st`. `to_inv` maps indices of `iv` to `inv`.
    pub fn mirror(&self, inv: &Interval, to_inv: &[usize]) -> System {
        let part = DihedralPart::new(inv, self.s, self.t);
        let mut pairing = vec![0usize; part.members.len()];
        for &x in &self.part.members {
            let y = part.position(to_inv[x]).expect("inverse of a dihedral element");
            let my = part.position(to_inv[self.part.apply(&self.m_st, x)]).expect("inverse");
            pairing[y] = my;
        }
        let m_st = Matching::from_pairing(&part.hasse, pairing).expect("inversion preserves covers");
        let side = match self.side {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        };
        System { side, j: self.j, s: self.s, t: self.t, part: Arc::new(part), m_st }
    }

    pub fn describe(&self, iv: &Interval) -> String {
        let sys = iv.system();
        let pairs: Vec<String> = self
            .m_st
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("{}<->{}", iv.format(self.part.members[a]), iv.format(self.part.members[b])))
            .collect();
        format!(
            "{} J={} s={} t={} M_st=[{}]",
            if self.side == Side::Right { "right" } else { "left" },
            sys.format_genset(self.j),
            sys.name(self.s),
            sys.name(self.t),
            pairs.join(" ")
        )
    }
}

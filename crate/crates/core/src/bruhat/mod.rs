//! Bruhat order, lower intervals and parabolic factorizations.

mod hasse;
mod interval;

pub use hasse::HasseDiagram;
pub use interval::{Interval, DEFAULT_LENGTH_CAP};

use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `u = u^J · u_J`
    Right,
    /// `u = _J u · ^J u`
    Left,
}

/// A length-additive splitting of an element into a minimal coset
/// representative and a parabolic part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicFactorization {
    pub coset_part: Element,
    pub parabolic_part: Element,
    pub side: Side,
    pub j: GenSet,
}

/// `u ≤ w` in Bruhat order.
///
/// With `s ∈ D_L(w)`: `u ≤ w` iff `su ≤ sw` when `s ∈ D_L(u)`, and iff
/// `u ≤ sw` otherwise.
pub fn bruhat_leq(sys: &CoxeterSystem, u: &Element, w: &Element) -> Result<bool> {
    let (mut u, mut w) = (u.clone(), w.clone());
    loop {
        if u.is_identity() {
            return Ok(true);
        }
        if u.len() > w.len() {
            return Ok(false);
        }
        let s = w.word()[0];
        if u.left_descents().contains(s) {
            u = sys.mult_left(s, &u)?;
        }
        w = sys.mult_left(s, &w)?;
    }
}

/// `u = u^J · u_J`: strips right descents lying in `J`.
pub fn parabolic_right(sys: &CoxeterSystem, u: &Element, j: GenSet) -> Result<ParabolicFactorization> {
    let mut coset = u.clone();
    let mut stripped = Vec::new();
    while let Some(s) = coset.right_descents().intersection(j).iter().next() {
        coset = sys.mult_right(&coset, s)?;
        stripped.push(s);
    }
    stripped.reverse();
    let parabolic = sys.canonicalize(&stripped)?;
    Ok(ParabolicFactorization { coset_part: coset, parabolic_part: parabolic, side: Side::Right, j })
}

/// `u = _J u · ^J u`: strips left descents lying in `J`.
pub fn parabolic_left(sys: &CoxeterSystem, u: &Element, j: GenSet) -> Result<ParabolicFactorization> {
    let mut coset = u.clone();
    let mut stripped = Vec::new();
    while let Some(s) = coset.left_descents().intersection(j).iter().next() {
        coset = sys.mult_left(s, &coset)?;
        stripped.push(s);
    }
    let parabolic = sys.canonicalize(&stripped)?;
    Ok(ParabolicFactorization { coset_part: coset, parabolic_part: parabolic, side: Side::Left, j })
}

/// `w_0(J)` for the interval `[e, w]`.
pub fn max_parabolic(iv: &Interval, j: GenSet) -> Element {
    iv.element(iv.max_parabolic(j)).clone()
}

/// Checks `u^J ≤ w^J` and `^J u ≤ ^J w` for `u ≤ w`, both inside `iv`.
pub fn monotone_projection_check(iv: &Interval, u: usize, w: usize, j: GenSet) -> bool {
    let (ur, _) = iv.parabolic_right(u, j);
    let (wr, _) = iv.parabolic_right(w, j);
    let (_, ul) = iv.parabolic_left(u, j);
    let (_, wl) = iv.parabolic_left(w, j);
    iv.leq(ur, wr) && iv.leq(ul, wl)
}

pub fn check_k32_free(iv: &Interval) -> bool {
    iv.hasse().is_k32_free()
}

pub fn is_dihedral(iv: &Interval) -> bool {
    iv.hasse().is_dihedral()
}

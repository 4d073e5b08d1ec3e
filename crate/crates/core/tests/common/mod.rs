//! Faithful models of small Coxeter groups shared by the oracle tests.

use coxmatch::coxeter::Gen;

/// A faithful model of a Coxeter group acting on the right.
pub trait Model {
    type El: Clone + Eq + std::hash::Hash;
    fn identity(&self) -> Self::El;
    fn act(&self, x: &Self::El, s: Gen) -> Self::El;
    fn eval(&self, word: &[Gen]) -> Self::El {
        word.iter().fold(self.identity(), |x, &s| self.act(&x, s))
    }
}

/// `S_{n+1}` for `A_n`, and signed permutations for `B_n`: generator 0 flips
/// the sign of the first entry and generator `i` swaps entries `i-1` and `i`.
#[derive(Debug, Clone)]
pub struct Signed {
    pub n: usize,
    pub signed: bool,
}

impl Model for Signed {
    type El = Vec<i32>;
    fn identity(&self) -> Vec<i32> {
        let size = if self.signed { self.n } else { self.n + 1 };
        (1..=size as i32).collect()
    }
    fn act(&self, x: &Vec<i32>, s: Gen) -> Vec<i32> {
        let mut y = x.clone();
        let s = s as usize;
        match (self.signed, s) {
            (true, 0) => y[0] = -y[0],
            (true, _) => y.swap(s - 1, s),
            (false, _) => y.swap(s, s + 1),
        }
        y
    }
}

/// `I_2(m)` as rotations and reflections; `m = 0` is the infinite group.
#[derive(Debug, Clone)]
pub struct Dihedral {
    pub m: i64,
}

impl Model for Dihedral {
    type El = (i64, bool);
    fn identity(&self) -> (i64, bool) {
        (0, false)
    }
    fn act(&self, &(a, f): &(i64, bool), s: Gen) -> (i64, bool) {
        let b = s as i64;
        let r = if f { a - b } else { a + b };
        (if self.m == 0 { r } else { r.rem_euclid(self.m) }, !f)
    }
}


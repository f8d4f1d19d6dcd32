//! Decomposition of `SL_2(Z)` matrices into words in `sigma` and powers of `T`.

use std::fmt;

use crate::arith::mat2::Mat2;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Sigma,
    T(i128),
}

impl Atom {
    pub fn matrix(&self) -> Mat2 {
        match self {
            Atom::Sigma => Mat2::SIGMA,
            Atom::T(n) => Mat2::t(*n),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Sigma => write!(f, "S"),
            Atom::T(n) => write!(f, "T^{n}"),
        }
    }
}

/// Atoms whose product equals `m` up to sign. Runs the Euclidean algorithm
/// on the first column: peel off `T^q` with `q = floor(a/c)`, then swap with
/// `sigma`, until the lower-left entry vanishes.
pub fn psl2_word(m: &Mat2) -> Result<Vec<Atom>> {
    if m.det() != 1 {
        return Err(Error::Determinant(m.det()));
    }
    let mut out = Vec::new();
    let mut cur = *m;
    if cur.c.abs() > cur.a.abs() {
        out.push(Atom::Sigma);
        cur = Mat2::SIGMA * cur;
    }
    while cur.c != 0 {
        let q = cur.a.div_euclid(cur.c);
        out.push(Atom::T(q));
        out.push(Atom::Sigma);
        cur = Mat2::SIGMA * Mat2::t(-q) * cur;
    }
    // cur = +-[[1, b], [0, 1]] up to the sign of a
    let shift = cur.a * cur.b;
    if shift != 0 {
        out.push(Atom::T(shift));
    }
    Ok(out)
}

pub fn word_product(word: &[Atom]) -> Mat2 {
    word.iter().fold(Mat2::IDENTITY, |acc, a| acc * a.matrix())
}

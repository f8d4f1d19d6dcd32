//! Cusp classes of `Gamma_0(N)`.
//!
//! Equivalence test: write `alpha = g_alpha(oo)` and `beta = g_beta(oo)` with
//! `g` in `SL_2(Z)`. Then `beta = gamma(alpha)` for some `gamma` in
//! `Gamma_0(N)` iff `gamma = g_beta T^m g_alpha^{-1}` for some integer `m`,
//! and the lower-left entry of that product is
//! `c_beta d_alpha - d_beta c_alpha - m c_alpha c_beta`. So the cusps are
//! equivalent iff this vanishes mod `N` for some `m` in `[0, N)`; this is the
//! classical criterion `c_beta d_alpha = c_alpha d_beta (mod gcd(c_alpha c_beta, N))`.

use std::fmt;

use crate::arith::int::{divisors, gcd};
use crate::arith::mat2::{normalize_cusp, Mat2};

use super::DirichletCharacter;

/// A cusp `a/c` in lowest terms, `c >= 0`; infinity is `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cusp {
    pub a: i128,
    pub c: i128,
}

impl Cusp {
    pub const INFINITY: Cusp = Cusp { a: 1, c: 0 };

    pub fn new(a: i128, c: i128) -> Cusp {
        let (a, c) = normalize_cusp(a, c);
        Cusp { a, c }
    }

    /// A matrix of `SL_2(Z)` sending infinity to this cusp.
    pub fn matrix(&self) -> Mat2 {
        Mat2::from_cusp(self.a, self.c)
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.c {
            0 => write!(f, "oo"),
            1 => write!(f, "{}", self.a),
            c => write!(f, "{}/{}", self.a, c),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CuspStatus {
    Alive,
    /// The stabilizer acts through a nontrivial character value, so the
    /// class vanishes in the twisted coinvariants.
    Killed,
}

/// Smallest `m` in `[0, N)` with `g_beta T^m g_alpha^{-1}` in `Gamma_0(N)`.
pub fn equivalence_shift(n: u64, g_alpha: &Mat2, g_beta: &Mat2) -> Option<i128> {
    let n = n as i128;
    let base = g_beta.c * g_alpha.d - g_beta.d * g_alpha.c;
    let step = g_alpha.c * g_beta.c;
    (0..n).find(|m| (base - m * step).rem_euclid(n) == 0)
}

pub fn cusps_equivalent(n: u64, x: Cusp, y: Cusp) -> bool {
    equivalence_shift(n, &x.matrix(), &y.matrix()).is_some()
}

/// Representatives of the cusp classes with their status under a character.
#[derive(Clone, Debug)]
pub struct CuspClasses {
    level: u64,
    reps: Vec<Cusp>,
    mats: Vec<Mat2>,
    widths: Vec<i128>,
    stabilizer_d: Vec<i128>,
    status: Vec<CuspStatus>,
}

/// Where a cusp `g(oo)` lands: the class index, and `gamma` in `Gamma_0(N)`
/// with `gamma(rep) = g(oo)` and `gamma g_rep = g T^m`.
#[derive(Clone, Copy, Debug)]
pub struct CuspLocation {
    pub class: usize,
    pub shift: i128,
    pub gamma: Mat2,
}

impl CuspClasses {
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representatives(&self) -> &[Cusp] {
        &self.reps
    }

    pub fn status(&self) -> &[CuspStatus] {
        &self.status
    }

    pub fn alive_count(&self) -> usize {
        self.status.iter().filter(|s| **s == CuspStatus::Alive).count()
    }

    /// Matrix `g_rep` with `g_rep(oo) = rep`.
    pub fn rep_matrix(&self, i: usize) -> Mat2 {
        self.mats[i]
    }

    /// Width `h` of the class: `g T^h g^{-1}` generates the stabilizer.
    pub fn width(&self, i: usize) -> i128 {
        self.widths[i]
    }

    /// Lower-right entry of the stabilizer generator `g T^h g^{-1}`.
    pub fn stabilizer_d(&self, i: usize) -> i128 {
        self.stabilizer_d[i]
    }

    /// Locates the cusp `g(oo)`.
    pub fn locate(&self, g: &Mat2) -> CuspLocation {
        for (class, rep) in self.mats.iter().enumerate() {
            if let Some(shift) = equivalence_shift(self.level, rep, g) {
                let gamma = *g * Mat2::t(shift) * rep.adj();
                return CuspLocation { class, shift, gamma };
            }
        }
        unreachable!("every cusp has a class")
    }

    pub fn class_of(&self, x: Cusp) -> usize {
        self.locate(&x.matrix()).class
    }
}

/// Cusp classes for `Gamma_0(N)`: infinity first, then `a/c` for `c | N`
/// ascending and `a` in `[0, N)`, keeping the first of each class.
pub fn cusp_classes(n: u64, chi: &DirichletCharacter) -> CuspClasses {
    let ni = n as i128;
    let mut reps: Vec<Cusp> = vec![Cusp::INFINITY];
    for c in divisors(n) {
        let c = c as i128;
        for a in 0..ni.max(1) {
            if gcd(a, c) != 1 {
                continue;
            }
            let x = Cusp::new(a, c);
            if !reps.iter().any(|r| cusps_equivalent(n, *r, x)) {
                reps.push(x);
            }
        }
    }
    let mats: Vec<Mat2> = reps.iter().map(Cusp::matrix).collect();
    let mut widths = Vec::new();
    let mut stab = Vec::new();
    let mut status = Vec::new();
    for g in &mats {
        let h = ni / gcd(g.c * g.c, ni);
        let d = 1 + g.a * g.c * h;
        widths.push(h);
        stab.push(d);
        status.push(if chi.value_i128(d).is_one() {
            CuspStatus::Alive
        } else {
            CuspStatus::Killed
        });
    }
    CuspClasses {
        level: n,
        reps,
        mats,
        widths,
        stabilizer_d: stab,
        status,
    }
}

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::int::{divisors, ext_gcd, factor_int, gcd, psl2_index};
use crate::arith::mat2::Mat2;
use crate::arith::FieldElement;
use crate::error::{Error, Result};
use crate::level::Cusp;
use crate::linalg::{restrict_operator, Matrix, Subspace};
use crate::manin::{act_left, monomial, ManinSpace};

/// Which invariant subspace an operator is restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceTag {
    Full,
    Cuspidal,
    Plus,
}

impl FromStr for SubspaceTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(SubspaceTag::Full),
            "cusp" | "cuspidal" => Ok(SubspaceTag::Cuspidal),
            "plus" => Ok(SubspaceTag::Plus),
            _ => Err(Error::Parse(format!("unknown subspace '{s}'"))),
        }
    }
}

impl fmt::Display for SubspaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubspaceTag::Full => "full",
            SubspaceTag::Cuspidal => "cusp",
            SubspaceTag::Plus => "plus",
        })
    }
}

/// `sigma_a` in `SL_2(Z)`, congruent to `diag(a^{-1}, a)` mod `N`; the
/// identity for `a = 1`.
pub fn sigma_matrix(a: u64, n: u64) -> Mat2 {
    if a % n.max(2) == 1 || n == 1 {
        return Mat2::IDENTITY;
    }
    let (_, s, t) = ext_gcd(a as i128, n as i128);
    // a s + N t = 1
    Mat2::new(s, -t, n as i128, a as i128)
}

/// Representatives `sigma_a [[a, b], [0, d]]` with `ad = n`, `gcd(a, N) = 1`
/// and `0 <= b < d`.
pub fn coset_reps(n: u64, level: u64) -> Vec<Mat2> {
    let mut out = Vec::new();
    for a in divisors(n) {
        if gcd(a as i128, level as i128) != 1 {
            continue;
        }
        let d = n / a;
        let s = sigma_matrix(a, level);
        for b in 0..d {
            out.push(s * Mat2::new(a as i128, b as i128, 0, d as i128));
        }
    }
    out
}

/// `ceil(k mu / 12)` with `mu` the index of `Gamma_0(N)`.
pub fn sturm_bound(n: u64, k: u32) -> u64 {
    (k as u64 * psl2_index(n)).div_ceil(12)
}

/// Hecke and diamond operators on a Manin space, cached by index.
pub struct HeckeContext<'a> {
    space: &'a ManinSpace,
    pool: Option<rayon::ThreadPool>,
    cache: Mutex<HashMap<(SubspaceTag, u64), Arc<Matrix>>>,
    diamonds: Mutex<HashMap<(SubspaceTag, u64), Arc<Matrix>>>,
}

impl<'a> HeckeContext<'a> {
    pub fn new(space: &'a ManinSpace) -> Self {
        HeckeContext {
            space,
            pool: None,
            cache: Mutex::new(HashMap::new()),
            diamonds: Mutex::new(HashMap::new()),
        }
    }

    /// Computes matrix columns on `threads` worker threads.
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.pool = (threads > 1)
            .then(|| rayon::ThreadPoolBuilder::new().num_threads(threads).build().ok())
            .flatten();
        self
    }

    pub fn space(&self) -> &'a ManinSpace {
        self.space
    }

    pub fn subspace(&self, tag: SubspaceTag) -> Subspace {
        match tag {
            SubspaceTag::Full => Subspace::full(self.space.field(), self.space.dim()),
            SubspaceTag::Cuspidal => self.space.cuspidal_subspace().clone(),
            SubspaceTag::Plus => self.space.plus_subspace().clone(),
        }
    }

    /// Image of basis vector `j` under `sum_delta delta`.
    fn column(&self, j: usize, reps: &[Mat2]) -> Vec<FieldElement> {
        let s = self.space;
        let f = s.field();
        let m = (s.weight() - 1) as usize;
        let gen = s.basis_generators()[j];
        let g = s.generator_matrix(gen);
        let p = monomial(f, m - 1, gen % m);
        let mut out = vec![f.zero(); s.dim()];
        for delta in reps {
            let h = *delta * g;
            let q = act_left(f, &h, &p);
            s.add_path(Cusp::new(h.b, h.d), Cusp::new(h.a, h.c), &q, &mut out);
        }
        out
    }

    /// `sum_delta delta` acting on the whole space.
    pub fn sum_action(&self, reps: &[Mat2]) -> Matrix {
        let dim = self.space.dim();
        let cols: Vec<Vec<FieldElement>> = match &self.pool {
            Some(pool) => pool.install(|| (0..dim).into_par_iter().map(|j| self.column(j, reps)).collect()),
            None => (0..dim).map(|j| self.column(j, reps)).collect(),
        };
        Matrix::from_columns(self.space.field(), dim, &cols)
    }

    fn restrict(&self, full: &Matrix, tag: SubspaceTag) -> Result<Matrix> {
        match tag {
            SubspaceTag::Full => Ok(full.clone()),
            _ => restrict_operator(full, &self.subspace(tag)),
        }
    }

    fn lookup(map: &Mutex<HashMap<(SubspaceTag, u64), Arc<Matrix>>>, key: (SubspaceTag, u64)) -> Option<Arc<Matrix>> {
        map.lock().expect("cache lock").get(&key).cloned()
    }

    fn store(map: &Mutex<HashMap<(SubspaceTag, u64), Arc<Matrix>>>, key: (SubspaceTag, u64), m: Matrix) -> Arc<Matrix> {
        map.lock().expect("cache lock").entry(key).or_insert_with(|| Arc::new(m)).clone()
    }

    /// `T_n` on the whole space.
    pub fn hecke_matrix(&self, n: u64) -> Result<Arc<Matrix>> {
        self.hecke_operator(n, SubspaceTag::Full)
    }

    /// `T_n` restricted to a tagged subspace.
    pub fn hecke_operator(&self, n: u64, tag: SubspaceTag) -> Result<Arc<Matrix>> {
        if n == 0 {
            return Err(Error::Domain("T_0 is undefined".into()));
        }
        if let Some(m) = Self::lookup(&self.cache, (tag, n)) {
            return Ok(m);
        }
        let field = self.space.field();
        let dim = self.subspace(tag).dim();
        let fac = factor_int(n);
        let m = if n == 1 {
            Matrix::identity(field, dim)
        } else if fac.len() > 1 {
            let mut acc = Matrix::identity(field, dim);
            for (p, e) in fac {
                acc = &acc * &*self.hecke_operator(p.pow(e), tag)?;
            }
            acc
        } else if fac[0].1 == 1 {
            let full = match Self::lookup(&self.cache, (SubspaceTag::Full, n)) {
                Some(m) => m,
                None => Self::store(&self.cache, (SubspaceTag::Full, n), self.sum_action(&coset_reps(n, self.space.level()))),
            };
            self.restrict(&full, tag)?
        } else {
            let l = fac[0].0;
            let t_l = self.hecke_operator(l, tag)?;
            let mut m = &*t_l * &*self.hecke_operator(n / l, tag)?;
            if self.space.level() % l != 0 {
                let c = field.from_bigint(&BigInt::from(l).pow(self.space.weight() - 1));
                let d = self.diamond_operator(l, tag)?;
                m = &m - &(&*d * &*self.hecke_operator(n / (l * l), tag)?).scale(&c);
            }
            m
        };
        Ok(Self::store(&self.cache, (tag, n), m))
    }

    /// `<a>` on the whole space, computed by applying `sigma_a`.
    pub fn diamond_matrix(&self, a: i64) -> Result<Arc<Matrix>> {
        self.diamond_operator(a.rem_euclid(self.space.level() as i64) as u64, SubspaceTag::Full)
    }

    pub fn diamond_operator(&self, a: u64, tag: SubspaceTag) -> Result<Arc<Matrix>> {
        let n = self.space.level();
        if gcd(a as i128, n as i128) != 1 {
            return Err(Error::Domain(format!("{a} is not a unit mod {n}")));
        }
        let a = a % n.max(1);
        if let Some(m) = Self::lookup(&self.diamonds, (tag, a)) {
            return Ok(m);
        }
        let full = match Self::lookup(&self.diamonds, (SubspaceTag::Full, a)) {
            Some(m) => m,
            None => Self::store(&self.diamonds, (SubspaceTag::Full, a), self.sum_action(&[sigma_matrix(a, n)])),
        };
        debug_assert_eq!(
            *full,
            Matrix::scalar(self.space.field(), full.rows(), &self.space.character().value(a as i64))
        );
        let m = self.restrict(&full, tag)?;
        Ok(Self::store(&self.diamonds, (tag, a), m))
    }
}

//! The projective line over `Z/NZ`.

use crate::arith::int::gcd;
use crate::error::{Error, Result};

/// A normalized point `(u:v)` of `P^1(Z/NZ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P1Element {
    pub u: u64,
    pub v: u64,
}

/// All points of `P^1(Z/NZ)` with an O(1) lookup from raw pairs.
///
/// The representative of an orbit under unit scaling is its
/// lexicographically least pair `(u, v)` with entries in `[0, N)`; the list
/// is sorted in that order.
#[derive(Clone, Debug)]
pub struct P1Table {
    n: u64,
    elems: Vec<P1Element>,
    /// Indexed by `u * N + v`: the class index and the unit `lambda` with
    /// `(u, v) = lambda * rep`, or `None` for non-projective pairs.
    lookup: Vec<Option<(u32, u64)>>,
}

impl P1Table {
    pub fn new(n: u64) -> Result<P1Table> {
        if n == 0 {
            return Err(Error::Domain("level must be positive".into()));
        }
        let units: Vec<u64> = (0..n).filter(|&l| gcd(l as i128, n as i128) == 1).collect();
        let size = (n * n) as usize;
        let mut lookup = vec![None; size];
        let mut elems = Vec::new();
        for u in 0..n {
            for v in 0..n {
                let slot = (u * n + v) as usize;
                if lookup[slot].is_some() || gcd(gcd(u as i128, v as i128), n as i128) != 1 {
                    continue;
                }
                let idx = elems.len() as u32;
                elems.push(P1Element { u, v });
                for &l in &units {
                    let key = ((l * u % n) * n + l * v % n) as usize;
                    lookup[key].get_or_insert((idx, l));
                }
            }
        }
        Ok(P1Table { n, elems, lookup })
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[P1Element] {
        &self.elems
    }

    pub fn get(&self, i: usize) -> P1Element {
        self.elems[i]
    }

    /// Class index of `(u:v)` and the unit `lambda` with
    /// `(u, v) = lambda * rep (mod N)`.
    pub fn index(&self, u: i64, v: i64) -> Option<(usize, u64)> {
        let n = self.n as i64;
        let (u, v) = (u.rem_euclid(n), v.rem_euclid(n));
        self.lookup[(u * n + v) as usize].map(|(i, l)| (i as usize, l))
    }
}

/// Canonical representative of `(u:v)` in `P^1(Z/NZ)`.
pub fn p1_normalize(u: i64, v: i64, n: u64) -> Result<P1Element> {
    if n == 0 {
        return Err(Error::Domain("level must be positive".into()));
    }
    let ni = n as i64;
    let (u, v) = (u.rem_euclid(ni) as u64, v.rem_euclid(ni) as u64);
    if gcd(gcd(u as i128, v as i128), n as i128) != 1 {
        return Err(Error::NotProjective {
            u: u as i64,
            v: v as i64,
            n,
        });
    }
    Ok((1..=n)
        .filter(|&l| gcd(l as i128, n as i128) == 1)
        .map(|l| P1Element {
            u: l * u % n,
            v: l * v % n,
        })
        .min()
        .expect("1 is a unit"))
}

/// All classes of `P^1(Z/NZ)` in table order.
pub fn p1_list(n: u64) -> Result<Vec<P1Element>> {
    Ok(P1Table::new(n)?.elems)
}

//! Minimal and characteristic polynomials.

use crate::arith::{FieldElement, Poly};
use crate::error::{Error, Result};

use super::matrix::Matrix;

/// Vectors kept in semi-echelon form: each stored row vanishes at the pivots
/// of all earlier rows and is 1 at its own pivot.
struct SemiEchelon {
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl SemiEchelon {
    fn new() -> Self {
        SemiEchelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduces `v` in place; `track` receives the same row operations applied
    /// to the stored companions.
    fn reduce(&self, v: &mut [FieldElement], mut track: impl FnMut(usize, &FieldElement)) {
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
            track(k, &c);
        }
    }

    /// Normalizes and stores an already reduced nonzero vector; returns the
    /// inverse of the scaling pivot entry.
    fn push(&mut self, mut v: Vec<FieldElement>) -> FieldElement {
        let p = v.iter().position(|x| !x.is_zero()).expect("nonzero vector");
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        self.rows.push(v);
        self.pivots.push(p);
        inv
    }
}

fn sub_scaled(a: &mut Vec<FieldElement>, c: &FieldElement, b: &[FieldElement]) {
    if a.len() < b.len() {
        a.resize(b.len(), c.field().zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x - &(c * y);
        }
    }
}

/// Monic least-degree annihilator, as the lcm of the minimal polynomials of
/// the vectors of growing Krylov spans.
pub fn minimal_polynomial(m: &Matrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "minimal polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let field = m.field().clone();
    let n = m.rows();
    let mut global = SemiEchelon::new();
    let mut acc = Poly::one(&field);
    for i in 0..n {
        let mut e = vec![field.zero(); n];
        e[i] = field.one();
        let mut probe = e.clone();
        global.reduce(&mut probe, |_, _| {});
        if probe.iter().all(FieldElement::is_zero) {
            continue;
        }
        // Krylov sequence of e, tracking each stored row as a polynomial in m
        let mut local = SemiEchelon::new();
        let mut polys: Vec<Vec<FieldElement>> = Vec::new();
        let mut w = e;
        let mut degree = 0;
        loop {
            let mut v = w.clone();
            let mut poly = vec![field.zero(); degree + 1];
            poly[degree] = field.one();
            local.reduce(&mut v, |k, c| sub_scaled(&mut poly, c, &polys[k]));
            if v.iter().all(FieldElement::is_zero) {
                let rel = Poly::new(field.clone(), poly);
                acc = acc.lcm(&rel)?;
                break;
            }
            let mut g = v.clone();
            global.reduce(&mut g, |_, _| {});
            if g.iter().any(|x| !x.is_zero()) {
                global.push(g);
            }
            let inv = local.push(v);
            polys.push(poly.iter().map(|c| c * &inv).collect());
            w = m.mul_vec(&w);
            degree += 1;
        }
    }
    Ok(acc)
}

/// Characteristic polynomial `det(x I - M)` via reduction to Hessenberg form.
pub fn char_polynomial(m: &Matrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let field = m.field().clone();
    let n = m.rows();
    let mut h: Vec<Vec<FieldElement>> = m.row_vectors();
    for c in 1..n.saturating_sub(1) {
        let Some(i) = (c..n).find(|&i| !h[i][c - 1].is_zero()) else {
            continue;
        };
        if i != c {
            h.swap(i, c);
            for row in h.iter_mut() {
                row.swap(i, c);
            }
        }
        let t = h[c][c - 1].inv().unwrap();
        for i in c + 1..n {
            let u = &h[i][c - 1] * &t;
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let d = &u * &h[c][j];
                h[i][j] = &h[i][j] - &d;
            }
            for row in h.iter_mut() {
                let d = &u * &row[i];
                row[c] = &row[c] + &d;
            }
        }
    }
    let x = Poly::x(&field);
    let mut p: Vec<Poly> = vec![Poly::one(&field)];
    for k in 1..=n {
        let mut pk = &(&x - &Poly::constant(h[k - 1][k - 1].clone())) * &p[k - 1];
        let mut t = field.one();
        for i in 1..k {
            t = &t * &h[k - i][k - i - 1];
            let c = &t * &h[k - i - 1][k - 1];
            if !c.is_zero() {
                pk = &pk - &p[k - i - 1].scale(&c);
            }
        }
        p.push(pk);
    }
    Ok(p.pop().unwrap())
}

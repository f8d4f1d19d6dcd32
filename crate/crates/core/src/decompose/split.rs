use crate::arith::{poly_factor, poly_factor_seeded, Poly, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::linalg::{minimal_polynomial, restrict_operator, Matrix, Subspace};

/// How a piece is cut by an irreducible factor `p^e` of a minimal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// Kernel of `p(T)^e`: pieces partition the space.
    Primary,
    /// Kernel of `p(T)`.
    Generalized,
}

fn check_square_family(ops: &[Matrix]) -> Result<()> {
    if let Some(first) = ops.first() {
        for m in ops {
            if !m.is_square() || m.rows() != first.rows() {
                return Err(Error::Shape(format!(
                    "operators of shapes {}x{} and {}x{}",
                    first.rows(),
                    first.cols(),
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != first.field() {
                return Err(Error::FieldMismatch(m.field().to_string(), first.field().to_string()));
            }
        }
    }
    Ok(())
}

/// First pair `(i, j)` with `ops[i] ops[j] != ops[j] ops[i]`.
pub fn commutativity_witness(ops: &[Matrix]) -> Option<(usize, usize)> {
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if &ops[i] * &ops[j] != &ops[j] * &ops[i] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Common primary (or generalized) eigenspaces of commuting operators,
/// refining one operator at a time in the given order.
pub fn common_eigenspaces(ops: &[Matrix], mode: SplitMode) -> Result<Vec<Subspace>> {
    common_eigenspaces_seeded(ops, mode, DEFAULT_SEED)
}

/// [`common_eigenspaces`] with an explicit seed for the randomized
/// factorization. The output does not depend on the seed.
pub fn common_eigenspaces_seeded(ops: &[Matrix], mode: SplitMode, seed: u64) -> Result<Vec<Subspace>> {
    let Some(first) = ops.first() else {
        return Err(Error::Shape("no operators given".into()));
    };
    check_square_family(ops)?;
    if let Some((i, j)) = commutativity_witness(ops) {
        return Err(Error::Commutativity(i, j));
    }
    let field = first.field();
    let n = first.rows();
    let mut pieces = if n == 0 { vec![] } else { vec![Subspace::full(field, n)] };
    for op in ops {
        let mut next = Vec::new();
        for w in &pieces {
            let a = restrict_operator(op, w)?;
            for (p, e) in poly_factor_seeded(&minimal_polynomial(&a)?, seed)? {
                let q = if mode == SplitMode::Primary { p.pow(e as u64) } else { p };
                let kernel = a.eval_poly(&q)?.kernel_basis();
                next.push(w.from_coordinates(&kernel));
            }
        }
        pieces = next;
    }
    Ok(pieces)
}

/// Orthogonal idempotents of the algebra generated by `m`, one per
/// irreducible factor of its minimal polynomial.
///
/// For each factor `p^e` other than a power of `x`, `g = f / p^e` is
/// evaluated at `m`; stripping `x` from the minimal polynomial of `g(m)` and
/// scaling to constant term 1 gives `h` with `1 - h(g(m))` the idempotent.
/// The nilpotent part, if any, gets the complement of the others.
pub fn idempotents_of(m: &Matrix) -> Result<Vec<Matrix>> {
    if !m.is_square() {
        return Err(Error::Shape(format!("{}x{} matrix is not square", m.rows(), m.cols())));
    }
    let field = m.field();
    let n = m.rows();
    let id = Matrix::identity(field, n);
    if n == 0 {
        return Ok(vec![]);
    }
    let f = minimal_polynomial(m)?;
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut has_x = false;
    for (p, e) in poly_factor(&f)? {
        if p == x {
            has_x = true;
            continue;
        }
        let g = f.div_exact(&p.pow(e as u64))?;
        let m1 = m.eval_poly(&g)?;
        let mut h = minimal_polynomial(&m1)?;
        while h.coeff(0).is_zero() {
            h = h.div_exact(&x)?;
        }
        let h = h.scale(&h.coeff(0).inv().expect("nonzero constant term"));
        out.push(&id - &m1.eval_poly(&h)?);
    }
    if has_x {
        let sum = out.iter().fold(Matrix::zero(field, n, n), |acc, e| &acc + e);
        out.push(&id - &sum);
    }
    Ok(out)
}

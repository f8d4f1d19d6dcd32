use crate::arith::{Field, FieldElement};
use crate::error::{Error, Result};

use super::matrix::{rref_in_place, Matrix};

/// A subspace of `K^n` stored by its reduced echelon basis, so equal
/// subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(field: &Field, ambient: usize, mut vecs: Vec<Vec<FieldElement>>) -> Subspace {
        let pivots = rref_in_place(&mut vecs, ambient);
        vecs.truncate(pivots.len());
        Subspace {
            field: field.clone(),
            ambient,
            basis: vecs,
            pivots,
        }
    }

    pub fn full(field: &Field, n: usize) -> Subspace {
        Subspace::from_vectors(field, n, Matrix::identity(field, n).row_vectors())
    }

    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace::from_vectors(field, n, Vec::new())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as rows.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.ambient, self.basis.clone()).expect("consistent rows")
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let coords: Vec<FieldElement> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `sum_i c_i b_i` over the basis.
    pub fn combine(&self, coords: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = &*o + &(c * x);
                }
            }
        }
        out
    }

    /// The subspace of `self` whose coordinates lie in `coords`, a subspace
    /// of `K^dim`.
    pub fn from_coordinates(&self, coords: &Subspace) -> Subspace {
        let vecs = coords.basis.iter().map(|c| self.combine(c)).collect();
        Subspace::from_vectors(&self.field, self.ambient, vecs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(&self.field, self.ambient, vecs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x B1 = y B2  <=>  (x, -y) in the left kernel of [B1; B2]
        let d1 = self.dim();
        let cols: Vec<Vec<FieldElement>> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()))
            .collect();
        let m = Matrix::from_columns(&self.field, self.ambient, &cols);
        let ker = m.kernel_basis();
        let vecs = ker
            .basis
            .iter()
            .map(|k| self.combine(&k[..d1]))
            .collect();
        Subspace::from_vectors(&self.field, self.ambient, vecs)
    }

    /// Image of the basis under `m`, checking invariance.
    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.mul_vec(b)))
    }
}

/// Matrix of `m` on the invariant subspace `w`, in the echelon basis of `w`.
pub fn restrict_operator(m: &Matrix, w: &Subspace) -> Result<Matrix> {
    if !m.is_square() || m.rows() != w.ambient_dim() {
        return Err(Error::Shape(format!(
            "{}x{} operator on a subspace of dimension-{} space",
            m.rows(),
            m.cols(),
            w.ambient_dim()
        )));
    }
    let mut columns = Vec::with_capacity(w.dim());
    for b in w.basis() {
        let image = m.mul_vec(b);
        match w.coordinates(&image) {
            Some(c) => columns.push(c),
            None => {
                return Err(Error::InvarianceViolation {
                    witness: b.iter().map(ToString::to_string).collect(),
                })
            }
        }
    }
    Ok(Matrix::from_columns(m.field(), w.dim(), &columns))
}

/// Linear span of matrices viewed as vectors of length `n^2`.
pub fn span_closure(mats: &[Matrix]) -> Result<Subspace> {
    let Some(first) = mats.first() else {
        return Err(Error::Shape("no matrices given".into()));
    };
    for m in mats {
        if !m.is_square() || m.rows() != first.rows() {
            return Err(Error::Shape(format!(
                "mixed shapes {}x{} and {}x{}",
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
    let n = first.rows();
    Ok(Subspace::from_vectors(
        first.field(),
        n * n,
        mats.iter().map(Matrix::flatten).collect(),
    ))
}

use crate::arith::FieldElement;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

use super::operators::{sturm_bound, HeckeContext, SubspaceTag};

/// The span of `T_1, ..., T_B` on a tagged subspace, `B` the Sturm bound.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    tag: SubspaceTag,
    module_dim: usize,
    bound: u64,
    span: Subspace,
}

impl HeckeAlgebra {
    pub fn tag(&self) -> SubspaceTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    /// Dimension of the subspace the operators act on.
    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn sturm_bound(&self) -> u64 {
        self.bound
    }

    /// Indices `n` whose operators span the algebra.
    pub fn generators(&self) -> Vec<u64> {
        (1..=self.bound).collect()
    }

    /// Echelonized basis of the algebra as matrices.
    pub fn basis(&self) -> Vec<Matrix> {
        let n = self.module_dim;
        self.span
            .basis()
            .iter()
            .map(|v| Matrix::new(self.span.field().clone(), n, n, v.clone()).expect("square"))
            .collect()
    }

    /// Coordinates of an operator in the echelon basis, if it lies in the span.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<FieldElement>> {
        self.span.coordinates(&m.flatten())
    }
}

pub fn hecke_algebra(ctx: &HeckeContext, tag: SubspaceTag) -> Result<HeckeAlgebra> {
    let space = ctx.space();
    let bound = sturm_bound(space.level(), space.weight());
    let module_dim = ctx.subspace(tag).dim();
    let mut vecs = Vec::new();
    for n in 1..=bound {
        vecs.push(ctx.hecke_operator(n, tag)?.flatten());
    }
    let span = Subspace::from_vectors(space.field(), module_dim * module_dim, vecs);
    Ok(HeckeAlgebra { tag, module_dim, bound, span })
}

/// The dual basis of the algebra paired with `T_1, ..., T_P`: entry `j`
/// lists `phi_j(T_n)` for `n = 1..=P`.
pub fn qexp_basis(ctx: &HeckeContext, alg: &HeckeAlgebra, precision: usize) -> Result<Vec<Vec<FieldElement>>> {
    if precision == 0 {
        return Err(Error::Domain("precision must be positive".into()));
    }
    let mut out = vec![Vec::with_capacity(precision); alg.dim()];
    for n in 1..=precision as u64 {
        let t = ctx.hecke_operator(n, alg.tag)?;
        let coords = alg.coordinates(&t).ok_or_else(|| {
            Error::Domain(format!("T_{n} lies outside the span of T_1..T_{}", alg.bound))
        })?;
        for (row, c) in out.iter_mut().zip(coords) {
            row.push(c);
        }
    }
    Ok(out)
}

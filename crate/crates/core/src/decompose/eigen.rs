use serde_json::{json, Value};

use crate::arith::int::is_prime;
use crate::arith::{make_extension, poly_factor_seeded, Field, FieldElement, Poly, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeContext};
use crate::linalg::{minimal_polynomial, restrict_operator, Matrix, Subspace};

use super::split::{common_eigenspaces_seeded, SplitMode};

/// Trials allowed when looking for a primitive element of a residue field.
pub const MAX_PRIMITIVE_TRIALS: usize = 100;

/// A primary piece of the module with the algebra generators restricted to it.
#[derive(Clone, Debug)]
pub struct LocalFactor {
    pub subspace: Subspace,
    pub generators: Vec<Matrix>,
    pub is_field: bool,
    /// Minimal polynomial of a primitive element of the residue field.
    pub residue_modulus: Poly,
}

/// A Galois orbit of normalized eigenforms: the residue field and the
/// images `a_1, ..., a_P` of the Hecke operators in it.
#[derive(Clone, Debug)]
pub struct EigenformClass {
    pub modulus: Poly,
    pub field: Field,
    pub an: Vec<FieldElement>,
}

impl EigenformClass {
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Coordinates of `a_n` over the base field.
    pub fn coordinates(&self, n: usize) -> Vec<FieldElement> {
        let a = &self.an[n - 1];
        match a.coords() {
            Some(c) => c.to_vec(),
            None => vec![a.clone()],
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "modulus": self.modulus.coeffs().iter().map(FieldElement::to_json).collect::<Vec<_>>(),
            "degree": self.degree(),
            "an": (1..=self.an.len())
                .map(|n| self.coordinates(n).iter().map(FieldElement::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// The single irreducible factor of a prime-power polynomial.
fn radical(p: &Poly, seed: u64) -> Result<Option<Poly>> {
    let f = poly_factor_seeded(p, seed)?;
    Ok((f.len() == 1).then(|| f[0].0.clone()))
}

/// Generators `p_i(a_i)` of the maximal ideal of a local factor, `p_i` the
/// radical of the minimal polynomial of `a_i`.
pub fn maximal_ideal(factor: &LocalFactor) -> Result<Vec<Matrix>> {
    maximal_ideal_seeded(factor, DEFAULT_SEED)
}

fn maximal_ideal_seeded(factor: &LocalFactor, seed: u64) -> Result<Vec<Matrix>> {
    factor
        .generators
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let p = radical(&minimal_polynomial(a)?, seed)?.ok_or(Error::NotLocal(i))?;
            a.eval_poly(&p)
        })
        .collect()
}

/// Linear span of all products of the generators, including the identity.
fn algebra_span(field: &Field, n: usize, gens: &[Matrix]) -> Subspace {
    let id = Matrix::identity(field, n);
    let mut span = Subspace::from_vectors(field, n * n, vec![id.flatten()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for g in gens {
                let c = b * g;
                let v = c.flatten();
                if !span.contains(&v) {
                    span = span.sum(&Subspace::from_vectors(field, n * n, vec![v]));
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    span
}

fn unflatten(field: &Field, n: usize, v: &[FieldElement]) -> Matrix {
    Matrix::new(field.clone(), n, n, v.to_vec()).expect("square")
}

/// Coefficients `c` with `target = sum_j c_j vectors[j]`, if any.
fn solve(field: &Field, vectors: &[Vec<FieldElement>], target: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let r = vectors.len();
    let rows: Vec<Vec<FieldElement>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<FieldElement> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (rref, pivots) = Matrix::from_rows(field, r + 1, rows).ok()?.echelonize();
    if pivots.last() == Some(&r) {
        return None;
    }
    let mut out = vec![field.zero(); r];
    for (i, &p) in pivots.iter().enumerate() {
        out[p] = rref.get(i, r).clone();
    }
    Some(out)
}

/// Local factor data for a primary piece `w` of the module, with the spans
/// of the local algebra and of its maximal ideal (as flattened matrices).
pub fn local_factor(ops: &[Matrix], w: &Subspace) -> Result<(LocalFactor, Subspace, Subspace)> {
    local_factor_seeded(ops, w, DEFAULT_SEED)
}

fn local_factor_seeded(ops: &[Matrix], w: &Subspace, seed: u64) -> Result<(LocalFactor, Subspace, Subspace)> {
    let field = w.field().clone();
    let d = w.dim();
    let gens: Vec<Matrix> = ops.iter().map(|t| restrict_operator(t, w)).collect::<Result<_>>()?;
    let algebra = algebra_span(&field, d, &gens);
    let mut factor = LocalFactor {
        subspace: w.clone(),
        generators: gens,
        is_field: false,
        residue_modulus: Poly::x(&field),
    };
    let ideal_gens = maximal_ideal_seeded(&factor, seed)?;
    let ideal_vecs: Vec<Vec<FieldElement>> = algebra
        .basis()
        .iter()
        .flat_map(|b| {
            let b = unflatten(&field, d, b);
            ideal_gens.iter().map(move |g| (&b * g).flatten())
        })
        .collect();
    let ideal = Subspace::from_vectors(&field, d * d, ideal_vecs);
    factor.is_field = ideal.dim() == 0;
    Ok((factor, algebra, ideal))
}

/// A primitive element of the residue field of a local factor and its
/// minimal polynomial: generators first, then `a_i + c a_j` for
/// `c = 1, 2, ...`.
fn primitive_element(factor: &LocalFactor, residue_degree: usize, seed: u64) -> Result<(Matrix, Poly)> {
    let field = factor.subspace.field();
    let gens = &factor.generators;
    let d = factor.subspace.dim();
    let mut candidates: Vec<Matrix> = gens.clone();
    if gens.is_empty() {
        candidates.push(Matrix::identity(field, d));
    }
    let mut c = 1i64;
    while candidates.len() < MAX_PRIMITIVE_TRIALS {
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                candidates.push(&gens[i] + &gens[j].scale(&field.from_i64(c)));
            }
        }
        if gens.len() < 2 {
            break;
        }
        c += 1;
    }
    for x in candidates.into_iter().take(MAX_PRIMITIVE_TRIALS) {
        let p = radical(&minimal_polynomial(&x)?, seed)?.ok_or(Error::NotLocal(0))?;
        if p.degree() == Some(residue_degree) {
            return Ok((x, p));
        }
    }
    Err(Error::SearchFailure { trials: MAX_PRIMITIVE_TRIALS, dim: d })
}

/// Galois orbits of normalized eigenforms on the algebra's subspace.
///
/// The module is split by the operators `T_p` for primes `p` up to the Sturm
/// bound, taken in ascending order.
pub fn eigenform_classes(ctx: &HeckeContext, alg: &HeckeAlgebra, precision: usize) -> Result<Vec<EigenformClass>> {
    eigenform_classes_seeded(ctx, alg, precision, DEFAULT_SEED)
}

/// [`eigenform_classes`] with an explicit factorization seed.
pub fn eigenform_classes_seeded(
    ctx: &HeckeContext,
    alg: &HeckeAlgebra,
    precision: usize,
    seed: u64,
) -> Result<Vec<EigenformClass>> {
    let space = ctx.space();
    let field = space.field().clone();
    if matches!(field, Field::Extension(_)) {
        return Err(Error::UnsupportedField(format!("decomposition over {field}")));
    }
    let tag = alg.tag();
    let d = alg.module_dim();
    if d == 0 {
        return Ok(vec![]);
    }
    let mut ops: Vec<Matrix> = Vec::new();
    for p in (2..=alg.sturm_bound()).filter(|&p| is_prime(p)) {
        ops.push((*ctx.hecke_operator(p, tag)?).clone());
    }
    let pieces = if ops.is_empty() {
        vec![Subspace::full(&field, d)]
    } else {
        common_eigenspaces_seeded(&ops, SplitMode::Primary, seed)?
    };
    let mut out = Vec::new();
    for w in pieces {
        let (mut factor, algebra, ideal) = local_factor_seeded(&ops, &w, seed)?;
        let residue_degree = algebra.dim() - ideal.dim();
        let (x, p) = primitive_element(&factor, residue_degree, seed)?;
        factor.residue_modulus = p.clone();
        let deg = residue_degree;
        let residue = if deg == 1 { field.clone() } else { make_extension(&field, &p)? };
        let theta = if deg == 1 {
            -p.coeff(0)
        } else {
            residue.generator().expect("extension")
        };
        let dw = w.dim();
        let mut vectors: Vec<Vec<FieldElement>> = Vec::new();
        let mut power = Matrix::identity(&field, dw);
        for _ in 0..deg {
            vectors.push(power.flatten());
            power = &power * &x;
        }
        vectors.extend(ideal.basis().iter().cloned());
        let mut an = Vec::with_capacity(precision);
        for n in 1..=precision as u64 {
            let t = restrict_operator(&*ctx.hecke_operator(n, tag)?, &w)?;
            let c = solve(&field, &vectors, &t.flatten())
                .ok_or_else(|| Error::Domain(format!("T_{n} is not in the local algebra")))?;
            // sum_j c_j theta^j in the residue field
            let mut value = residue.zero();
            let mut th = residue.one();
            for cj in &c[..deg] {
                let lifted = if deg == 1 { cj.clone() } else { residue.from_coords(vec![cj.clone()])? };
                value = &value + &(&lifted * &th);
                th = &th * &theta;
            }
            an.push(value);
        }
        out.push(EigenformClass { modulus: p, field: residue, an });
    }
    Ok(out)
}

use std::sync::OnceLock;

use crate::arith::int::{ext_gcd, gcd};
use crate::arith::mat2::Mat2;
use crate::arith::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::level::{cusp_classes, Cusp, CuspClasses, DirichletCharacter, P1Table};
use crate::linalg::{Matrix, Subspace};

use super::sparse::{collect_row, SparseEchelon, SparseRow};
use super::weight::{act_subst, monomial};
use super::word::{psl2_word, Atom};

/// `{alpha, beta} (x) P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularSymbolPath {
    pub alpha: Cusp,
    pub beta: Cusp,
    pub coeff: Vec<FieldElement>,
}

impl ModularSymbolPath {
    pub fn new(alpha: Cusp, beta: Cusp, coeff: Vec<FieldElement>) -> Self {
        ModularSymbolPath { alpha, beta, coeff }
    }
}

/// Projection of `V_{k-2}` onto the coinvariants at one cusp class.
#[derive(Clone, Debug)]
struct CuspBlock {
    rref: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
    offset: usize,
}

impl CuspBlock {
    fn project(&self, mut w: Vec<FieldElement>, scale: &FieldElement, out: &mut [FieldElement]) {
        for (row, &p) in self.rref.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
        }
        for (j, &f) in self.free.iter().enumerate() {
            if !w[f].is_zero() {
                out[self.offset + j] = &out[self.offset + j] + &(scale * &w[f]);
            }
        }
    }
}

/// Manin symbol presentation of the modular symbols of weight `k`, level `N`
/// and character `chi`.
///
/// Generator `p * (k - 1) + i` is `[X^i Y^{k-2-i}, (u:v)]` with `(u:v)` the
/// `p`-th element of `P^1(Z/NZ)`; it stands for `g (P {0, oo})` where `g` has
/// bottom row `(u, v)`. Scaling the pair by a unit `l` multiplies the symbol
/// by `chi(l)`.
#[derive(Debug)]
pub struct ManinSpace {
    level: u64,
    weight: u32,
    chi: DirichletCharacter,
    field: Field,
    p1: P1Table,
    lifts: Vec<Mat2>,
    relations: Vec<SparseRow>,
    free: Vec<usize>,
    images: Vec<SparseRow>,
    cusps: CuspClasses,
    blocks: Vec<CuspBlock>,
    boundary_dim: usize,
    boundary: Matrix,
    cuspidal: Subspace,
    eta: Matrix,
    plus: OnceLock<Subspace>,
    minus: OnceLock<Subspace>,
}

/// A matrix of `SL_2(Z)` whose bottom row reduces to `(u, v)` mod `N`.
pub fn lift_to_sl2(u: u64, v: u64, n: u64) -> Mat2 {
    let ni = n as i128;
    let c = if u % n == 0 { ni } else { (u % n) as i128 };
    let mut d = (v % n) as i128;
    while gcd(c, d) != 1 {
        d += ni;
    }
    let (_, x, y) = ext_gcd(d, c);
    // d x + c y = 1
    Mat2::new(x, -y, c, d)
}

pub fn build_space(n: u64, k: u32, chi: &DirichletCharacter, field: &Field) -> Result<ManinSpace> {
    if n == 0 {
        return Err(Error::Domain("level must be positive".into()));
    }
    if k < 2 {
        return Err(Error::Domain(format!("weight {k} < 2")));
    }
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if chi.field() != field {
        return Err(Error::FieldMismatch(chi.field().to_string(), field.to_string()));
    }
    if chi.modulus() != n {
        return Err(Error::Domain(format!(
            "character modulus {} differs from level {n}",
            chi.modulus()
        )));
    }
    let expected = if k % 2 == 0 { 1 } else { -1 };
    let chi_m1 = chi.value(-1);
    if chi_m1 != field.from_i64(expected) {
        return Err(Error::Parity {
            chi_minus_one: chi_m1.to_string(),
            expected: expected as i32,
            weight: k,
        });
    }
    ManinSpace::build(n, k, chi.clone(), field.clone())
}

impl ManinSpace {
    fn build(n: u64, k: u32, chi: DirichletCharacter, field: Field) -> Result<ManinSpace> {
        let p1 = P1Table::new(n)?;
        let m = (k - 1) as usize;
        let ngens = p1.len() * m;
        let lifts: Vec<Mat2> = p1.elements().iter().map(|e| lift_to_sl2(e.u, e.v, n)).collect();
        let mut space = ManinSpace {
            level: n,
            weight: k,
            cusps: cusp_classes(n, &chi),
            chi,
            field: field.clone(),
            p1,
            lifts,
            relations: Vec::new(),
            free: Vec::new(),
            images: Vec::new(),
            blocks: Vec::new(),
            boundary_dim: 0,
            boundary: Matrix::zero(&field, 0, 0),
            cuspidal: Subspace::zero(&field, 0),
            eta: Matrix::zero(&field, 0, 0),
            plus: OnceLock::new(),
            minus: OnceLock::new(),
        };
        space.relations = space.relation_rows();
        let mut ech = SparseEchelon::new();
        for r in &space.relations {
            ech.insert(r.clone());
        }
        let (free, images) = ech.quotient(&field, ngens);
        space.free = free;
        space.images = images;
        space.build_blocks();
        let dim = space.dim();
        let cols: Vec<Vec<FieldElement>> =
            space.free.iter().map(|&g| space.generator_boundary(g)).collect();
        space.boundary = Matrix::from_columns(&field, space.boundary_dim, &cols);
        space.cuspidal = space.boundary.kernel_basis();
        let eta_cols: Vec<Vec<FieldElement>> = (0..dim).map(|j| space.eta_column(j)).collect();
        space.eta = Matrix::from_columns(&field, dim, &eta_cols);
        Ok(space)
    }

    /// Terms of `[P, (u, v)]` on the generators.
    fn symbol_terms(&self, poly: &[FieldElement], u: i128, v: i128) -> Vec<(usize, FieldElement)> {
        let ni = self.level as i128;
        let (idx, l) = self
            .p1
            .index(u.rem_euclid(ni) as i64, v.rem_euclid(ni) as i64)
            .expect("bottom row of an invertible matrix is projective");
        let scale = self.chi.value(l as i64);
        let m = poly.len();
        poly.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (idx * m + i, c * &scale))
            .collect()
    }

    fn relation_rows(&self) -> Vec<SparseRow> {
        let f = &self.field;
        let n = (self.weight - 2) as usize;
        let tau2 = Mat2::TAU * Mat2::TAU;
        let mut rows = Vec::new();
        for (pi, e) in self.p1.elements().iter().enumerate() {
            let (u, v) = (e.u as i128, e.v as i128);
            for i in 0..=n {
                let x = monomial(f, n, i);
                let gen = pi * (n + 1) + i;
                let one = (gen, f.one());
                // x + x sigma
                let mut terms = vec![one.clone()];
                terms.extend(self.symbol_terms(&act_subst(f, &x, &Mat2::SIGMA), v, -u));
                rows.push(collect_row(f, terms));
                // x + x tau + x tau^2
                let mut terms = vec![one];
                terms.extend(self.symbol_terms(&act_subst(f, &x, &Mat2::TAU), -u - v, u));
                terms.extend(self.symbol_terms(&act_subst(f, &x, &tau2), v, -u - v));
                rows.push(collect_row(f, terms));
            }
            // units fixing (u:v) whose character value is not 1 kill it
            let nn = self.level;
            let killed = (2..nn).any(|l| {
                gcd(l as i128, nn as i128) == 1
                    && (l * e.u) % nn == e.u
                    && (l * e.v) % nn == e.v
                    && !self.chi.value(l as i64).is_one()
            });
            if killed {
                for i in 0..=n {
                    rows.push(vec![(pi * (n + 1) + i, f.one())]);
                }
            }
        }
        rows.retain(|r| !r.is_empty());
        rows
    }

    fn build_blocks(&mut self) {
        let f = &self.field;
        let n = (self.weight - 2) as usize;
        let mut offset = 0;
        for c in 0..self.cusps.len() {
            let h = self.cusps.width(c);
            let chi_s = self.chi.value_i128(self.cusps.stabilizer_d(c));
            let t = Mat2::t(h).adj();
            let rows: Vec<Vec<FieldElement>> = (0..=n)
                .map(|i| {
                    let mut r = act_subst(f, &monomial(f, n, i), &t);
                    r[i] = &r[i] - &chi_s;
                    r
                })
                .collect();
            let (rref, pivots) = Matrix::from_rows(f, n + 1, rows).expect("square").echelonize();
            let rref: Vec<Vec<FieldElement>> =
                (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect();
            let free: Vec<usize> = (0..=n).filter(|j| !pivots.contains(j)).collect();
            let len = free.len();
            self.blocks.push(CuspBlock { rref, pivots, free, offset });
            offset += len;
        }
        self.boundary_dim = offset;
    }

    /// Boundary of a generator in the cusp-class coordinates:
    /// `(gP){g oo} - (gP){g 0}`.
    pub fn generator_boundary(&self, gen: usize) -> Vec<FieldElement> {
        let f = &self.field;
        let m = (self.weight - 1) as usize;
        let (pi, i) = (gen / m, gen % m);
        let g = self.lifts[pi];
        let p = monomial(f, m - 1, i);
        let mut out = vec![f.zero(); self.boundary_dim];
        for (mb, sign) in [(g, f.one()), (g * Mat2::SIGMA, f.from_i64(-1))] {
            let loc = self.cusps.locate(&mb);
            let scale = &sign * &self.chi.value_i128(loc.gamma.d);
            if scale.is_zero() {
                continue;
            }
            let q = act_subst(f, &p, &(g.adj() * mb * Mat2::t(loc.shift)));
            self.blocks[loc.class].project(q, &scale, &mut out);
        }
        out
    }

    fn eta_column(&self, j: usize) -> Vec<FieldElement> {
        let f = &self.field;
        let m = (self.weight - 1) as usize;
        let gen = self.free[j];
        let (pi, i) = (gen / m, gen % m);
        let e = self.p1.get(pi);
        let sign = if i % 2 == 0 { f.one() } else { f.from_i64(-1) };
        let mut poly = vec![f.zero(); m];
        poly[i] = sign;
        let mut out = vec![f.zero(); self.dim()];
        self.accumulate(&self.symbol_terms(&poly, -(e.u as i128), e.v as i128), &mut out);
        out
    }

    fn accumulate(&self, terms: &[(usize, FieldElement)], out: &mut [FieldElement]) {
        for (gen, c) in terms {
            for (j, v) in &self.images[*gen] {
                out[*j] = &out[*j] + &(c * v);
            }
        }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn character(&self) -> &DirichletCharacter {
        &self.chi
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p1(&self) -> &P1Table {
        &self.p1
    }

    pub fn cusps(&self) -> &CuspClasses {
        &self.cusps
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    /// Generators whose classes form the quotient basis, ascending.
    pub fn basis_generators(&self) -> &[usize] {
        &self.free
    }

    /// Relation rows on the generators, as sorted sparse rows.
    pub fn relations(&self) -> &[SparseRow] {
        &self.relations
    }

    /// A matrix of `SL_2(Z)` representing the `P^1` part of a generator.
    pub fn generator_matrix(&self, gen: usize) -> Mat2 {
        self.lifts[gen / (self.weight - 1) as usize]
    }

    /// Image of a generator in the quotient basis.
    pub fn generator_image(&self, gen: usize) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim()];
        self.accumulate(&[(gen, self.field.one())], &mut out);
        out
    }

    /// Image of a sparse combination of generators.
    pub fn combination_image(&self, row: &[(usize, FieldElement)]) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim()];
        self.accumulate(row, &mut out);
        out
    }

    /// Quotient vector of the Manin symbol `[P, (u, v)]` with `(u, v)`
    /// coprime to `N`.
    pub fn manin_symbol_vector(&self, poly: &[FieldElement], u: i128, v: i128) -> Vec<FieldElement> {
        let mut out = vec![self.field.zero(); self.dim()];
        self.accumulate(&self.symbol_terms(poly, u, v), &mut out);
        out
    }

    /// Adds `sign * (Q {alpha, oo})` to `out`.
    fn add_to_infinity(&self, alpha: Cusp, q: &[FieldElement], negate: bool, out: &mut [FieldElement]) {
        if alpha.c == 0 {
            return;
        }
        let f = &self.field;
        let word = psl2_word(&alpha.matrix()).expect("cusp matrices have determinant 1");
        let mut w = Mat2::IDENTITY;
        for atom in word {
            if atom == Atom::Sigma {
                // Q {W 0, W oo} = [act_subst(Q, W), bottom row of W]
                let mut r = act_subst(f, q, &w);
                if negate {
                    r.iter_mut().for_each(|x| *x = -x.clone());
                }
                let terms = self.symbol_terms(&r, w.c, w.d);
                self.accumulate(&terms, out);
            }
            w = w * atom.matrix();
        }
    }

    /// Quotient vector of `{alpha, beta} (x) P`, via
    /// `{alpha, beta} = {alpha, oo} - {beta, oo}` and continued fractions.
    pub fn modular_to_vector(&self, path: &ModularSymbolPath) -> Vec<FieldElement> {
        assert_eq!(path.coeff.len(), (self.weight - 1) as usize, "coefficient degree");
        let mut out = vec![self.field.zero(); self.dim()];
        self.add_to_infinity(path.alpha, &path.coeff, false, &mut out);
        self.add_to_infinity(path.beta, &path.coeff, true, &mut out);
        out
    }

    /// Adds the image of `{alpha, beta} (x) Q` to `out`.
    pub(crate) fn add_path(&self, alpha: Cusp, beta: Cusp, q: &[FieldElement], out: &mut [FieldElement]) {
        self.add_to_infinity(alpha, q, false, out);
        self.add_to_infinity(beta, q, true, out);
    }

    /// Map from the quotient basis to the coinvariants of the cusp classes.
    pub fn boundary_matrix(&self) -> &Matrix {
        &self.boundary
    }

    pub fn cuspidal_subspace(&self) -> &Subspace {
        &self.cuspidal
    }

    /// `(u:v) -> (-u:v)`, `X^i Y^j -> (-1)^i X^i Y^j`.
    pub fn eta_involution(&self) -> &Matrix {
        &self.eta
    }

    fn signed_cuspidal(&self, sign: i64) -> Subspace {
        let shifted = &self.eta - &Matrix::scalar(&self.field, self.dim(), &self.field.from_i64(sign));
        self.boundary
            .stack(&shifted)
            .expect("same column count")
            .kernel_basis()
    }

    /// Cuspidal `+1` eigenspace of the involution.
    pub fn plus_subspace(&self) -> &Subspace {
        self.plus.get_or_init(|| self.signed_cuspidal(1))
    }

    pub fn minus_subspace(&self) -> &Subspace {
        self.minus.get_or_init(|| self.signed_cuspidal(-1))
    }
}

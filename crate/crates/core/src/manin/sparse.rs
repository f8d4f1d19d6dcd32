//! Sparse rows and an incremental echelon form for the relation module.

use std::collections::BTreeMap;

use crate::arith::{Field, FieldElement};

/// Sorted `(column, value)` pairs with no zero values.
pub type SparseRow = Vec<(usize, FieldElement)>;

/// `a + c * b` for sorted sparse rows.
pub fn add_scaled(a: &[(usize, FieldElement)], c: &FieldElement, b: &[(usize, FieldElement)]) -> SparseRow {
    if c.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Collects `(column, value)` terms into a sorted row, summing duplicates.
pub fn collect_row(field: &Field, terms: impl IntoIterator<Item = (usize, FieldElement)>) -> SparseRow {
    let mut acc: BTreeMap<usize, FieldElement> = BTreeMap::new();
    for (c, v) in terms {
        if v.is_zero() {
            continue;
        }
        let e = acc.entry(c).or_insert_with(|| field.zero());
        *e = &*e + &v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Rows in echelon form keyed by their leading column, each with leading
/// coefficient 1.
pub struct SparseEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new() -> SparseEchelon {
        SparseEchelon { pivots: BTreeMap::new() }
    }

    /// Reduces `row` against the stored pivots and keeps the remainder.
    pub fn insert(&mut self, mut row: SparseRow) {
        while let Some((col, lead)) = row.first().cloned() {
            match self.pivots.get(&col) {
                Some(p) => row = add_scaled(&row, &-lead, p),
                None => {
                    let inv = lead.inv().expect("nonzero lead");
                    let row: SparseRow = row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
                    self.pivots.insert(col, row);
                    return;
                }
            }
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Expresses every column as a combination of the non-pivot columns.
    ///
    /// Returns the sorted free columns and, for each of the `ncols` columns,
    /// its image as a sparse row indexed by position among the free columns.
    pub fn quotient(&self, field: &Field, ncols: usize) -> (Vec<usize>, Vec<SparseRow>) {
        let free: Vec<usize> = (0..ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        let mut position = vec![usize::MAX; ncols];
        for (i, &c) in free.iter().enumerate() {
            position[c] = i;
        }
        let mut image: Vec<SparseRow> = vec![Vec::new(); ncols];
        for &c in &free {
            image[c] = vec![(position[c], field.one())];
        }
        // every non-leading column of a pivot row is larger than its pivot
        for (&col, row) in self.pivots.iter().rev() {
            let mut acc: SparseRow = Vec::new();
            for (c, v) in &row[1..] {
                acc = add_scaled(&acc, &-v.clone(), &image[*c]);
            }
            image[col] = acc;
        }
        (free, image)
    }
}

impl Default for SparseEchelon {
    fn default() -> Self {
        Self::new()
    }
}

//! Sparse exact row reduction.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type SparseRow<S> = BTreeMap<usize, S>;

/// Incremental reduced row echelon form over an exact field.
///
/// Rows are fed one at a time; each is reduced against the current pivots and,
/// if it survives, normalized to a leading 1 and used to clear its pivot
/// column from every stored row. The stored rows are therefore always in
/// reduced echelon form, which is unique for the row space.
#[derive(Debug, Clone)]
pub struct Echelon<S: Scalar> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<S>>,
}

fn axpy<S: Scalar>(target: &mut SparseRow<S>, factor: &S, source: &SparseRow<S>) {
    for (col, value) in source {
        let delta = factor.clone() * value.clone();
        let slot = target.entry(*col).or_insert_with(S::zero);
        *slot = slot.clone() + delta;
        if slot.is_zero() {
            target.remove(col);
        }
    }
}

impl<S: Scalar> Echelon<S> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn push(&mut self, mut row: SparseRow<S>) -> bool {
        row.retain(|_, v| !v.is_zero());
        let hits: Vec<usize> = row
            .keys()
            .filter(|c| self.pivots.contains_key(c))
            .copied()
            .collect();
        for col in hits {
            // Stored rows are fully reduced, so clearing one pivot column never
            // reintroduces another.
            if let Some(value) = row.get(&col).cloned() {
                axpy(&mut row, &-value, &self.pivots[&col]);
            }
        }
        let Some((&lead, lead_value)) = row.iter().next() else {
            return false;
        };
        debug_assert!(lead < self.ncols);
        let inv = S::one() / lead_value.clone();
        for v in row.values_mut() {
            *v = v.clone() * inv.clone();
        }
        for stored in self.pivots.values_mut() {
            if let Some(value) = stored.get(&lead).cloned() {
                axpy(stored, &-value, &row);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    /// Reduced rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow<S>> {
        self.pivots.values()
    }

    /// Nullspace basis in canonical form: the reduced echelon form of the
    /// solution space, so each vector has leading coefficient 1 and the set
    /// depends only on the row space.
    pub fn nullspace(&self) -> Vec<SparseRow<S>> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        let mut raw: Vec<SparseRow<S>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = SparseRow::new();
            v.insert(f, S::one());
            for (&pc, row) in &self.pivots {
                if let Some(x) = row.get(&f) {
                    v.insert(pc, -x.clone());
                }
            }
            raw.push(v);
        }
        let mut basis = Echelon::new(self.ncols);
        for v in raw {
            basis.push(v);
        }
        basis.pivots.into_values().collect()
    }
}

/// Canonical nullspace basis of the matrix with the given sparse rows.
pub fn nullspace<S: Scalar>(
    ncols: usize,
    rows: impl IntoIterator<Item = SparseRow<S>>,
) -> Vec<SparseRow<S>> {
    let mut ech = Echelon::new(ncols);
    for row in rows {
        ech.push(row);
    }
    ech.nullspace()
}

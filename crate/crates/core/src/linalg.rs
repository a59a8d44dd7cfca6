//! Sparse exact linear algebra over cyclotomic scalars: incremental row
//! reduction, rank, kernel bases, and span membership. Sizes here are small
//! (hundreds of unknowns), so a straightforward reduced row echelon form is
//! plenty.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalars::Cyclotomic;

pub type SparseVec = BTreeMap<usize, Cyclotomic>;

/// Incrementally maintained reduced row echelon form.
#[derive(Default)]
pub struct RowReducer {
    /// pivot column -> row normalized to pivot coefficient 1 and reduced
    /// against every other pivot
    rows: BTreeMap<usize, SparseVec>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Residual of `row` after reduction against the current pivots.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let hit = row
                .iter()
                .find(|(c, v)| self.rows.contains_key(c) && !v.is_zero())
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, coeff)) = hit else {
                row.retain(|_, v| !v.is_zero());
                return row;
            };
            let pivot = &self.rows[&col];
            for (c, v) in pivot {
                let delta = coeff.mul(v);
                let entry = row.entry(*c).or_insert_with(Cyclotomic::zero);
                *entry = entry.sub(&delta);
            }
            row.retain(|_, v| !v.is_zero());
        }
    }

    /// Insert a row; returns the pivot column if it increased the rank.
    pub fn insert(&mut self, row: SparseVec) -> Option<usize> {
        let red = self.reduce(row);
        let (&pivot, lead) = red.iter().next()?;
        let inv = lead.inv().expect("nonzero pivot");
        let normalized: SparseVec = red.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
        // back-substitute into existing rows so the form stays fully reduced
        for other in self.rows.values_mut() {
            if let Some(coeff) = other.get(&pivot).cloned() {
                if coeff.is_zero() {
                    continue;
                }
                for (c, v) in &normalized {
                    let delta = coeff.mul(v);
                    let entry = other.entry(*c).or_insert_with(Cyclotomic::zero);
                    *entry = entry.sub(&delta);
                }
                other.retain(|_, v| !v.is_zero());
            }
        }
        self.rows.insert(pivot, normalized);
        Some(pivot)
    }

    /// Is `row` in the span of the inserted rows?
    pub fn contains(&self, row: SparseVec) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Kernel of the linear map sending unit vector `e_j` to `columns[j]`, where
/// column entries are indexed by any ordered coordinate type. The basis is
/// returned as dense coefficient vectors of length `columns.len()`.
pub fn kernel_basis<C: Ord + Clone>(columns: &[BTreeMap<C, Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    // Transpose into rows over the union of coordinates.
    let mut coords: BTreeMap<C, usize> = BTreeMap::new();
    for col in columns {
        for c in col.keys() {
            let next = coords.len();
            coords.entry(c.clone()).or_insert(next);
        }
    }
    let mut rows: Vec<SparseVec> = alloc::vec![SparseVec::new(); coords.len()];
    for (j, col) in columns.iter().enumerate() {
        for (c, v) in col {
            if !v.is_zero() {
                rows[coords[c]].insert(j, v.clone());
            }
        }
    }
    let mut reducer = RowReducer::new();
    for row in rows {
        if !row.is_empty() {
            reducer.insert(row);
        }
    }
    // Free columns parameterize the kernel.
    let pivot_cols: BTreeMap<usize, &SparseVec> =
        reducer.rows.iter().map(|(c, r)| (*c, r)).collect();
    let mut basis = Vec::new();
    for f in 0..columns.len() {
        if pivot_cols.contains_key(&f) {
            continue;
        }
        let mut v = alloc::vec![Cyclotomic::zero(); columns.len()];
        v[f] = Cyclotomic::one();
        for (p, row) in &pivot_cols {
            if let Some(c) = row.get(&f) {
                v[*p] = c.neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank of the column family.
pub fn rank<C: Ord + Clone>(columns: &[BTreeMap<C, Cyclotomic>]) -> usize {
    columns.len() - kernel_basis(columns).len()
}

/// A span of sparse vectors supporting membership tests.
pub struct Span<C: Ord + Clone> {
    coords: BTreeMap<C, usize>,
    reducer: RowReducer,
}

impl<C: Ord + Clone> Default for Span<C> {
    fn default() -> Self {
        Span {
            coords: BTreeMap::new(),
            reducer: RowReducer::new(),
        }
    }
}

impl<C: Ord + Clone> Span<C> {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, v: &BTreeMap<C, Cyclotomic>) -> SparseVec {
        let mut row = SparseVec::new();
        for (c, x) in v {
            if x.is_zero() {
                continue;
            }
            let next = self.coords.len();
            let idx = *self.coords.entry(c.clone()).or_insert(next);
            row.insert(idx, x.clone());
        }
        row
    }

    pub fn insert(&mut self, v: &BTreeMap<C, Cyclotomic>) {
        let row = self.intern(v);
        if !row.is_empty() {
            self.reducer.insert(row);
        }
    }

    pub fn dim(&self) -> usize {
        self.reducer.rank()
    }

    /// Membership; vectors touching unseen coordinates are not in the span.
    pub fn contains(&self, v: &BTreeMap<C, Cyclotomic>) -> bool {
        let mut row = SparseVec::new();
        for (c, x) in v {
            if x.is_zero() {
                continue;
            }
            match self.coords.get(c) {
                Some(idx) => {
                    row.insert(*idx, x.clone());
                }
                None => return false,
            }
        }
        self.reducer.contains(row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{primitive_root, Cyclotomic};

    fn c(k: i64) -> Cyclotomic {
        Cyclotomic::from_integer(k)
    }

    #[test]
    fn kernel_of_dependent_columns() {
        // columns: (1,0), (0,1), (1,1) -> kernel spanned by (1,1,-1)
        let cols = alloc::vec![
            BTreeMap::from([(0usize, c(1))]),
            BTreeMap::from([(1usize, c(1))]),
            BTreeMap::from([(0usize, c(1)), (1usize, c(1))]),
        ];
        let k = kernel_basis(&cols);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // check A v = 0
        assert_eq!(v[0].add(&v[2]), Cyclotomic::zero());
        assert_eq!(v[1].add(&v[2]), Cyclotomic::zero());
        assert_eq!(rank(&cols), 2);
    }

    #[test]
    fn kernel_with_cyclotomic_entries() {
        let z = primitive_root(4);
        // columns (1, z) and (z, -1) are dependent: z * (1, z) = (z, -1)
        let cols = alloc::vec![
            BTreeMap::from([(0usize, c(1)), (1usize, z.clone())]),
            BTreeMap::from([(0usize, z.clone()), (1usize, c(-1))]),
        ];
        assert_eq!(rank(&cols), 1);
        let k = kernel_basis(&cols);
        assert_eq!(k.len(), 1);
    }

    #[test]
    fn span_membership() {
        let mut span: Span<&'static str> = Span::new();
        span.insert(&BTreeMap::from([("a", c(1)), ("b", c(2))]));
        span.insert(&BTreeMap::from([("b", c(1))]));
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&BTreeMap::from([("a", c(3)), ("b", c(1))])));
        assert!(!span.contains(&BTreeMap::from([("c", c(1))])));
        assert!(span.contains(&BTreeMap::new()));
    }
}

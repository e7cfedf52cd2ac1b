//! Exact sparse linear algebra over the coefficient fields.
//!
//! Everything here works on column vectors stored as sorted `(row, value)`
//! pairs. The `Echelon` accumulator is the workhorse: it absorbs columns one
//! at a time and answers rank, membership and kernel questions.

use crate::ring::Scalar;

pub type SparseVec = Vec<(usize, Scalar)>;

/// Sparse column-major matrix.
#[derive(Clone, Debug)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn new(rows: usize, ncols: usize) -> Self {
        SparseMat {
            rows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn push_entry(&mut self, col: usize, row: usize, value: Scalar) {
        debug_assert!(row < self.rows);
        if !value.is_zero() {
            self.cols[col].push((row, value));
        }
    }

    /// Sort and merge duplicate entries inside each column.
    pub fn normalize(&mut self) {
        for col in &mut self.cols {
            col.sort_by_key(|(r, _)| *r);
            let mut merged: SparseVec = Vec::with_capacity(col.len());
            for (r, v) in col.drain(..) {
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => {
                        *lv = lv.add(&v);
                    }
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *col = merged;
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for col in &self.cols {
            ech.insert(col.clone());
        }
        ech.rank()
    }

    /// Matrix-vector product (vector indexed by columns).
    pub fn apply(&self, vec: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (c, coeff) in vec {
            for (r, v) in &self.cols[*c] {
                acc.push((*r, v.mul(coeff)));
            }
        }
        combine(acc)
    }

    /// Basis of the kernel, as vectors over the column index set.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut ech = Echelon::with_combos();
        let mut kernel = Vec::new();
        for (k, col) in self.cols.iter().enumerate() {
            match ech.insert_tracked(col.clone(), k) {
                Some(combo) => kernel.push(combo),
                None => {}
            }
        }
        kernel
    }
}

fn combine(mut entries: SparseVec) -> SparseVec {
    entries.sort_by_key(|(r, _)| *r);
    let mut merged: SparseVec = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match merged.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = lv.add(&v),
            _ => merged.push((r, v)),
        }
    }
    merged.retain(|(_, v)| !v.is_zero());
    merged
}

/// y += c * x on sorted sparse vectors.
fn axpy(y: &SparseVec, c: &Scalar, x: &SparseVec) -> SparseVec {
    let mut out: SparseVec = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        if j >= x.len() || (i < y.len() && y[i].0 < x[j].0) {
            out.push(y[i].clone());
            i += 1;
        } else if i >= y.len() || x[j].0 < y[i].0 {
            let v = c.mul(&x[j].1);
            if !v.is_zero() {
                out.push((x[j].0, v));
            }
            j += 1;
        } else {
            let v = y[i].1.add(&c.mul(&x[j].1));
            if !v.is_zero() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon accumulator. Pivot columns are normalized to
/// pivot value 1 and indexed by pivot row.
pub struct Echelon {
    pivots: std::collections::HashMap<usize, usize>,
    cols: Vec<SparseVec>,
    combos: Option<Vec<SparseVec>>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon {
            pivots: std::collections::HashMap::new(),
            cols: Vec::new(),
            combos: None,
        }
    }

    pub fn with_combos() -> Self {
        Echelon {
            pivots: std::collections::HashMap::new(),
            cols: Vec::new(),
            combos: Some(Vec::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    /// Insert a column; returns true when it enlarged the span.
    pub fn insert(&mut self, col: SparseVec) -> bool {
        self.reduce_and_store(col, None).is_none()
    }

    /// Insert with combo tracking; on reduction to zero returns the
    /// combination of previously inserted tagged columns (tag included with
    /// coefficient 1) that witnesses the dependency.
    pub fn insert_tracked(&mut self, col: SparseVec, tag: usize) -> Option<SparseVec> {
        self.reduce_and_store(col, Some(tag))
    }

    /// True when `col` already lies in the span (does not store it).
    pub fn contains(&self, col: &SparseVec) -> bool {
        self.residual(col).is_empty()
    }

    /// Reduce `col` against the current pivots without storing.
    pub fn residual(&self, col: &SparseVec) -> SparseVec {
        let mut cur = col.clone();
        loop {
            match self.first_hit(&cur) {
                Some((k, v)) => {
                    cur = axpy(&cur, &v.neg(), &self.cols[k]);
                }
                None => return cur,
            }
        }
    }

    // Entry whose pivot has the smallest insertion index. Pivot columns are
    // fully reduced against earlier pivots when stored, so eliminating in
    // this order strictly increases the smallest pivot index present and the
    // reduction loop terminates after at most rank() steps.
    fn first_hit(&self, cur: &SparseVec) -> Option<(usize, Scalar)> {
        cur.iter()
            .filter_map(|(r, v)| self.pivots.get(r).map(|&k| (k, v.clone())))
            .min_by_key(|(k, _)| *k)
    }

    fn reduce_and_store(&mut self, col: SparseVec, tag: Option<usize>) -> Option<SparseVec> {
        let mut cur = col;
        let mut combo: SparseVec = match (&self.combos, tag) {
            (Some(_), Some(t)) => vec![(t, one_like(&cur))],
            _ => Vec::new(),
        };
        loop {
            match self.first_hit(&cur) {
                Some((k, v)) => {
                    let c = v.neg();
                    cur = axpy(&cur, &c, &self.cols[k]);
                    if let Some(combos) = &self.combos {
                        combo = axpy(&combo, &c, &combos[k]);
                    }
                }
                None => break,
            }
        }
        if cur.is_empty() {
            return if self.combos.is_some() && !combo.is_empty() {
                Some(combo)
            } else if tag.is_some() && self.combos.is_some() {
                Some(combo)
            } else {
                Some(Vec::new())
            };
        }
        // normalize on the structurally first entry
        let (prow, pval) = cur[0].clone();
        let inv = pval.inv();
        cur = cur
            .iter()
            .map(|(r, v)| (*r, v.mul(&inv)))
            .collect();
        if let Some(combos) = &mut self.combos {
            combo = combo.iter().map(|(r, v)| (*r, v.mul(&inv))).collect();
            combos.push(combo);
        }
        self.pivots.insert(prow, self.cols.len());
        self.cols.push(cur);
        None
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}

/// Inverse of a small dense matrix by Gauss-Jordan elimination; `None` when
/// singular. Rows must be nonempty and square.
pub fn invert_dense(mat: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = mat.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let field = mat[0][0].field();
    let mut a: Vec<Vec<Scalar>> = mat.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv();
        for j in 0..n {
            a[col][j] = a[col][j].mul(&p);
            inv[col][j] = inv[col][j].mul(&p);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                    inv[r][j] = inv[r][j].sub(&f.mul(&inv[col][j]));
                }
            }
        }
    }
    Some(inv)
}

fn one_like(v: &SparseVec) -> Scalar {
    match v.first() {
        Some((_, s)) => s.field().one(),
        None => crate::ring::FieldSpec::Q.one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldSpec;

    fn q(v: i64) -> Scalar {
        FieldSpec::Q.from_i64(v)
    }

    fn mat(rows: usize, cols: &[&[(usize, i64)]]) -> SparseMat {
        let mut m = SparseMat::new(rows, cols.len());
        for (k, col) in cols.iter().enumerate() {
            for &(r, v) in *col {
                m.push_entry(k, r, q(v));
            }
        }
        m.normalize();
        m
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = mat(3, &[&[(0, 1), (1, 2)], &[(0, 2), (1, 4)], &[(2, 1)]]);
        assert_eq!(m.rank(), 2);
        let id = mat(3, &[&[(0, 1)], &[(1, 1)], &[(2, 1)]]);
        assert_eq!(id.rank(), 3);
        assert_eq!(mat(3, &[&[], &[]]).rank(), 0);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = mat(
            2,
            &[&[(0, 1), (1, 1)], &[(0, 2), (1, 2)], &[(0, 1)], &[(1, 3)]],
        );
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 4 - m.rank());
        for v in &ker {
            assert!(m.apply(v).is_empty());
        }
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        e.insert(vec![(0, q(1)), (1, q(1))]);
        e.insert(vec![(1, q(1))]);
        assert!(e.contains(&vec![(0, q(3)), (1, q(-2))]));
        assert!(!e.contains(&vec![(2, q(1))]));
    }
}

//! Sparse matrix blocks and exact Gaussian elimination.
//!
//! [`Block`] stores one degree-block of a graded map in column-major sparse
//! form; tensor products make blocks large but extremely sparse, so dense
//! storage is reserved for the solver. [`SpanBuilder`] is the single
//! elimination engine used everywhere a linear question is asked (solving,
//! kernels, membership, basis extension). It keeps a fully reduced echelon
//! set together with the expression of each echelon vector in the originally
//! inserted vectors, so solutions come out in the caller's coordinates.

use crate::scalar::Scalar;

/// Scan order for candidate vectors during basis extension. Used by the
/// cohomology splitting to produce two genuinely different section choices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    Forward,
    Reverse,
}

impl PivotOrder {
    /// The indices `0..n` in this scan order.
    pub fn scan(self, n: usize) -> Vec<usize> {
        match self {
            PivotOrder::Forward => (0..n).collect(),
            PivotOrder::Reverse => (0..n).rev().collect(),
        }
    }
}

/// One degree-block of a graded map: a sparse `rows × cols` matrix.
/// Columns hold `(row, value)` pairs sorted by row with no explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Block<K> {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, K)>>,
}

impl<K: Scalar> Block<K> {
    pub fn zero(rows: usize, cols: usize) -> Block<K> {
        Block { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Block<K> {
        let mut b = Block::zero(n, n);
        for i in 0..n {
            b.columns[i].push((i, K::one()));
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> K {
        match self.columns[col].binary_search_by_key(&row, |e| e.0) {
            Ok(i) => self.columns[col][i].1.clone(),
            Err(_) => K::zero(),
        }
    }

    pub fn set(&mut self, row: usize, col: usize, value: K) {
        assert!(row < self.rows && col < self.cols, "block entry out of range");
        let c = &mut self.columns[col];
        match c.binary_search_by_key(&row, |e| e.0) {
            Ok(i) => {
                if value.is_zero() {
                    c.remove(i);
                } else {
                    c[i].1 = value;
                }
            }
            Err(i) => {
                if !value.is_zero() {
                    c.insert(i, (row, value));
                }
            }
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: K) {
        let v = self.get(row, col) + value;
        self.set(row, col, v);
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &K)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn column(&self, col: usize) -> &[(usize, K)] {
        &self.columns[col]
    }

    pub fn dense_column(&self, col: usize) -> Vec<K> {
        let mut v = vec![K::zero(); self.rows];
        for (i, x) in &self.columns[col] {
            v[*i] = x.clone();
        }
        v
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &Block<K>) -> Block<K> {
        assert_eq!(self.cols, other.rows, "block shape mismatch in product");
        let mut out = Block::zero(self.rows, other.cols);
        for j in 0..other.cols {
            let mut acc: Vec<(usize, K)> = Vec::new();
            for (k, coeff) in &other.columns[j] {
                for (i, v) in &self.columns[*k] {
                    let term = coeff.clone() * v.clone();
                    match acc.binary_search_by_key(i, |e| e.0) {
                        Ok(p) => acc[p].1 = acc[p].1.clone() + term,
                        Err(p) => acc.insert(p, (*i, term)),
                    }
                }
            }
            acc.retain(|(_, v)| !v.is_zero());
            out.columns[j] = acc;
        }
        out
    }

    pub fn add(&self, other: &Block<K>) -> Block<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.add_to(i, j, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Block<K> {
        self.scale(&-K::one())
    }

    pub fn scale(&self, c: &K) -> Block<K> {
        if c.is_zero() {
            return Block::zero(self.rows, self.cols);
        }
        let mut out = self.clone();
        for col in &mut out.columns {
            for e in col.iter_mut() {
                e.1 = e.1.clone() * c.clone();
            }
        }
        out
    }

    /// Apply to a dense coordinate vector.
    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![K::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.columns[j] {
                out[*i] = out[*i].clone() + a.clone() * x.clone();
            }
        }
        out
    }
}

/// Incremental exact elimination: a fully reduced echelon set plus the
/// expression of each echelon vector over the inserted independent vectors.
pub struct SpanBuilder<K> {
    dim: usize,
    echelon: Vec<Vec<K>>,
    pivots: Vec<usize>,
    /// `echelon[i] = Σ_j coords[i][j] · inserted[j]` over independent inserts.
    coords: Vec<Vec<K>>,
}

impl<K: Scalar> SpanBuilder<K> {
    pub fn new(dim: usize) -> SpanBuilder<K> {
        SpanBuilder { dim, echelon: Vec::new(), pivots: Vec::new(), coords: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Echelon basis of the span (each vector has a 1 at its pivot row and
    /// every other echelon vector vanishes there).
    pub fn basis(&self) -> &[Vec<K>] {
        &self.echelon
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &[K]) -> (Vec<K>, Vec<K>) {
        let mut residual = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.echelon.len());
        for (e, p) in self.echelon.iter().zip(&self.pivots) {
            let c = residual[*p].clone();
            if !c.is_zero() {
                for (r, ev) in residual.iter_mut().zip(e) {
                    *r = r.clone() - c.clone() * ev.clone();
                }
            }
            coeffs.push(c);
        }
        (residual, coeffs)
    }

    pub fn contains(&self, v: &[K]) -> bool {
        self.reduce(v).0.iter().all(K::is_zero)
    }

    /// Insert `v`. `Ok(())` if the rank grew; `Err(c)` if `v` is already in
    /// the span, with `v = Σ c_j · inserted[j]` over the independent inserts.
    pub fn insert(&mut self, v: &[K]) -> Result<(), Vec<K>> {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        let (mut residual, coeffs) = self.reduce(v);
        let pivot = match residual.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => {
                let mut c = vec![K::zero(); self.coords.first().map_or(0, Vec::len)];
                for (ci, row) in coeffs.iter().zip(&self.coords) {
                    for (acc, x) in c.iter_mut().zip(row) {
                        *acc = acc.clone() + ci.clone() * x.clone();
                    }
                }
                return Err(c);
            }
        };
        let inv = K::one() / residual[pivot].clone();
        for x in residual.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        // new echelon vector = (v − Σ coeffs_i · echelon_i) / residual[pivot]
        let n = self.coords.len();
        let mut new_coords = vec![K::zero(); n + 1];
        new_coords[n] = inv.clone();
        for (ci, row) in coeffs.iter().zip(&self.coords) {
            for (acc, x) in new_coords.iter_mut().zip(row) {
                *acc = acc.clone() - inv.clone() * ci.clone() * x.clone();
            }
        }
        for row in self.coords.iter_mut() {
            row.push(K::zero());
        }
        // Fully reduce: clear the new pivot row from the old echelon vectors.
        for i in 0..self.echelon.len() {
            let c = self.echelon[i][pivot].clone();
            if !c.is_zero() {
                for (x, nv) in self.echelon[i].iter_mut().zip(&residual) {
                    *x = x.clone() - c.clone() * nv.clone();
                }
                for (x, nc) in self.coords[i].iter_mut().zip(&new_coords) {
                    *x = x.clone() - c.clone() * nc.clone();
                }
            }
        }
        self.echelon.push(residual);
        self.pivots.push(pivot);
        self.coords.push(new_coords);
        Ok(())
    }

    /// Coordinates of `v` over the inserted independent vectors, if `v` lies
    /// in the span.
    pub fn coordinates(&self, v: &[K]) -> Option<Vec<K>> {
        let (residual, coeffs) = self.reduce(v);
        if residual.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut c = vec![K::zero(); self.coords.first().map_or(0, Vec::len)];
        for (ci, row) in coeffs.iter().zip(&self.coords) {
            for (acc, x) in c.iter_mut().zip(row) {
                *acc = acc.clone() + ci.clone() * x.clone();
            }
        }
        Some(c)
    }
}

/// Solve `Σ_j x_j · cols[j] = rhs` by elimination. Columns that are linearly
/// dependent on earlier ones receive coefficient 0.
pub fn solve_columns<K: Scalar>(cols: &[Vec<K>], rhs: &[K]) -> Option<Vec<K>> {
    let dim = rhs.len();
    let mut builder = SpanBuilder::new(dim);
    let mut independent = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if builder.insert(c).is_ok() {
            independent.push(j);
        }
    }
    let coeffs = builder.coordinates(rhs)?;
    let mut x = vec![K::zero(); cols.len()];
    for (c, j) in coeffs.into_iter().zip(independent) {
        x[j] = c;
    }
    Some(x)
}

/// Basis of `{x : Σ_j x_j · cols[j] = 0}`, one vector per dependent column.
pub fn kernel_basis<K: Scalar>(cols: &[Vec<K>], dim: usize) -> Vec<Vec<K>> {
    let mut builder = SpanBuilder::new(dim);
    let mut independent = Vec::new();
    let mut kernel = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        match builder.insert(c) {
            Ok(()) => independent.push(j),
            Err(coeffs) => {
                let mut x = vec![K::zero(); cols.len()];
                for (c, i) in coeffs.into_iter().zip(&independent) {
                    x[*i] = c;
                }
                x[j] = -K::one();
                kernel.push(x);
            }
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::Rat;

    #[test]
    fn sparse_block_basics() {
        let mut b: Block<Rat> = Block::zero(3, 2);
        b.set(0, 1, int(2));
        b.set(2, 0, frac(1, 3));
        assert_eq!(b.get(0, 1), int(2));
        assert_eq!(b.get(1, 1), int(0));
        b.add_to(0, 1, int(-2));
        assert_eq!(b.get(0, 1), int(0));
        assert_eq!(b.entries().count(), 1);
    }

    #[test]
    fn matmul_against_identity() {
        let mut b: Block<Rat> = Block::zero(2, 2);
        b.set(0, 0, int(1));
        b.set(0, 1, int(5));
        b.set(1, 0, int(-3));
        let id = Block::identity(2);
        assert_eq!(b.matmul(&id), b);
        assert_eq!(id.matmul(&b), b);
    }

    #[test]
    fn solve_and_kernel() {
        // columns (1,1), (1,-1): invertible system
        let cols: Vec<Vec<Rat>> = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let x = solve_columns(&cols, &[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        assert!(solve_columns(&cols[..1].to_vec(), &[int(1), int(0)]).is_none());

        // dependent columns give a kernel vector
        let cols: Vec<Vec<Rat>> = vec![
            vec![int(1), int(2)],
            vec![int(2), int(4)],
            vec![int(0), int(1)],
        ];
        let ker = kernel_basis(&cols, 2);
        assert_eq!(ker.len(), 1);
        let x = &ker[0];
        // check Σ x_j col_j = 0
        for row in 0..2 {
            let s: Rat = (0..3).map(|j| x[j].clone() * cols[j][row].clone()).sum();
            assert_eq!(s, int(0));
        }
    }

    #[test]
    fn span_membership_and_coordinates() {
        let mut sb: SpanBuilder<Rat> = SpanBuilder::new(3);
        sb.insert(&[int(1), int(0), int(1)]).unwrap();
        sb.insert(&[int(0), int(2), int(0)]).unwrap();
        assert!(sb.contains(&[int(3), int(4), int(3)]));
        assert!(!sb.contains(&[int(0), int(0), int(1)]));
        let c = sb.coordinates(&[int(3), int(4), int(3)]).unwrap();
        assert_eq!(c, vec![int(3), int(2)]);
    }

    #[test]
    fn pivot_order_scans() {
        assert_eq!(PivotOrder::Forward.scan(3), vec![0, 1, 2]);
        assert_eq!(PivotOrder::Reverse.scan(3), vec![2, 1, 0]);
    }
}

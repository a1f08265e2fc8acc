//! Sparse exact linear algebra over [`Scalar`].
//!
//! Vectors are sorted lists of `(index, value)` with no stored zeros. Matrices
//! are stored by rows. Row reduction always pivots on the first nonzero entry,
//! so bases come out in a canonical form for a fixed input order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SVec = Vec<(usize, Scalar)>;

pub fn sv_from_dense(v: &[Scalar]) -> SVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn sv_to_dense(v: &SVec, n: usize) -> Vec<Scalar> {
    let mut d = vec![Scalar::zero(); n];
    for (i, c) in v {
        d[*i] = c.clone();
    }
    d
}

pub fn sv_unit(i: usize) -> SVec {
    vec![(i, Scalar::one())]
}

pub fn sv_get(v: &SVec, i: usize) -> Scalar {
    match v.binary_search_by_key(&i, |(k, _)| *k) {
        Ok(p) => v[p].1.clone(),
        Err(_) => Scalar::zero(),
    }
}

/// `x + c*y`.
pub fn sv_axpy(x: &SVec, c: &Scalar, y: &SVec) -> SVec {
    if c.is_zero() {
        return x.clone();
    }
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let xi = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let yj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if xi < yj {
            out.push(x[i].clone());
            i += 1;
        } else if yj < xi {
            out.push((yj, c * &y[j].1));
            j += 1;
        } else {
            let s = &x[i].1 + &(c * &y[j].1);
            if !s.is_zero() {
                out.push((xi, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_add(x: &SVec, y: &SVec) -> SVec {
    sv_axpy(x, &Scalar::one(), y)
}

pub fn sv_sub(x: &SVec, y: &SVec) -> SVec {
    sv_axpy(x, &Scalar::from_int(-1), y)
}

pub fn sv_scale(x: &SVec, c: &Scalar) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v * c)).collect()
}

pub fn sv_dot(x: &SVec, y: &SVec) -> Scalar {
    let (mut i, mut j) = (0, 0);
    let mut acc = Scalar::zero();
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&x[i].1 * &y[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Collects `(index, value)` terms with repeated indices into an [`SVec`].
pub fn sv_collect(terms: impl IntoIterator<Item = (usize, Scalar)>) -> SVec {
    let mut m: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let e = m.entry(i).or_insert_with(Scalar::zero);
        *e += &c;
    }
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Row-sparse matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    nrows: usize,
    ncols: usize,
    rows: Vec<SVec>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.nrows, self.ncols)?;
        for r in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(nrows: usize, ncols: usize) -> Mat {
        Mat { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Mat {
        Mat::scalar(n, &Scalar::one())
    }

    pub fn scalar(n: usize, c: &Scalar) -> Mat {
        let rows = (0..n).map(|i| if c.is_zero() { vec![] } else { vec![(i, c.clone())] }).collect();
        Mat { nrows: n, ncols: n, rows }
    }

    pub fn from_dense(d: &[Vec<Scalar>]) -> Mat {
        let nrows = d.len();
        let ncols = d.first().map(Vec::len).unwrap_or(0);
        Mat { nrows, ncols, rows: d.iter().map(|r| sv_from_dense(r)).collect() }
    }

    pub fn from_ints(d: &[&[i64]]) -> Mat {
        let dense: Vec<Vec<Scalar>> = d.iter().map(|r| r.iter().map(|x| Scalar::from_int(*x)).collect()).collect();
        Mat::from_dense(&dense)
    }

    pub fn from_rows(ncols: usize, rows: Vec<SVec>) -> Mat {
        Mat { nrows: rows.len(), ncols, rows }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(nrows: usize, cols: &[SVec]) -> Mat {
        Mat::from_rows(nrows, cols.to_vec()).transpose()
    }

    pub fn from_entries(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Mat {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (i, j, c) in entries {
            buckets[i].push((j, c));
        }
        Mat { nrows, ncols, rows: buckets.into_iter().map(sv_collect).collect() }
    }

    /// Elementary matrix `E_{ij}`.
    pub fn unit(nrows: usize, ncols: usize, i: usize, j: usize) -> Mat {
        Mat::from_entries(nrows, ncols, [(i, j, Scalar::one())])
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        sv_get(&self.rows[i], j)
    }

    pub fn col(&self, j: usize) -> SVec {
        (0..self.nrows)
            .filter_map(|i| {
                let c = self.get(i, j);
                (!c.is_zero()).then_some((i, c))
            })
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, *j, c)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| sv_to_dense(r, self.ncols)).collect()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn transpose(&self) -> Mat {
        let mut cols: Vec<SVec> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in r {
                cols[*j].push((i, c.clone()));
            }
        }
        Mat { nrows: self.ncols, ncols: self.nrows, rows: cols }
    }

    pub fn add(&self, o: &Mat) -> Mat {
        self.axpy(&Scalar::one(), o)
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        self.axpy(&Scalar::from_int(-1), o)
    }

    /// `self + c*o`.
    pub fn axpy(&self, c: &Scalar, o: &Mat) -> Mat {
        assert_eq!((self.nrows, self.ncols), (o.nrows, o.ncols), "shape mismatch");
        let rows = self.rows.iter().zip(&o.rows).map(|(a, b)| sv_axpy(a, c, b)).collect();
        Mat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat { nrows: self.nrows, ncols: self.ncols, rows: self.rows.iter().map(|r| sv_scale(r, c)).collect() }
    }

    pub fn neg(&self) -> Mat {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.ncols, o.nrows, "shape mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &o.rows[*k] {
                        let e = acc.entry(*j).or_insert_with(Scalar::zero);
                        *e += &(a * b);
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        Mat { nrows: self.nrows, ncols: o.ncols, rows }
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let c = sv_dot(r, v);
                (!c.is_zero()).then_some((i, c))
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).sum()
    }

    /// Plain (unsigned) Kronecker product.
    pub fn kron(&self, o: &Mat) -> Mat {
        let mut rows = Vec::with_capacity(self.nrows * o.nrows);
        for ra in &self.rows {
            for rb in &o.rows {
                let mut r = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        r.push((ja * o.ncols + jb, a * b));
                    }
                }
                rows.push(r);
            }
        }
        Mat { nrows: self.nrows * o.nrows, ncols: self.ncols * o.ncols, rows }
    }

    pub fn block_diag(blocks: &[Mat]) -> Mat {
        let ncols = blocks.iter().map(|b| b.ncols).sum();
        let mut rows = Vec::new();
        let mut off = 0;
        for b in blocks {
            for r in &b.rows {
                rows.push(r.iter().map(|(j, c)| (j + off, c.clone())).collect());
            }
            off += b.ncols;
        }
        Mat { nrows: rows.len(), ncols, rows }
    }

    /// `P^{-1} A P` style reindexing: entry `(i, j)` moves to `(perm[i], perm[j])`.
    pub fn permute(&self, perm: &[usize]) -> Mat {
        let entries = self.entries().map(|(i, j, c)| (perm[i], perm[j], c.clone())).collect::<Vec<_>>();
        Mat::from_entries(self.nrows, self.ncols, entries)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        let rows = rows
            .iter()
            .map(|&i| {
                let mut r: SVec = self.rows[i].iter().filter_map(|(j, c)| pos.get(j).map(|k| (*k, c.clone()))).collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        Mat::from_rows(cols.len(), rows)
    }

    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.ncols, o.ncols);
        let mut rows = self.rows.clone();
        rows.extend(o.rows.iter().cloned());
        Mat::from_rows(self.ncols, rows)
    }

    /// Vertical stack of matrices with equal column counts.
    pub fn stack(ncols: usize, blocks: &[Mat]) -> Mat {
        let rows = blocks
            .iter()
            .flat_map(|b| {
                assert_eq!(b.ncols, ncols);
                b.rows.iter().cloned()
            })
            .collect();
        Mat::from_rows(ncols, rows)
    }

    /// Row-major flattening, index `i*ncols + j`.
    pub fn flatten(&self) -> SVec {
        self.entries().map(|(i, j, c)| (i * self.ncols + j, c.clone())).collect()
    }

    pub fn unflatten(v: &SVec, nrows: usize, ncols: usize) -> Mat {
        Mat::from_entries(nrows, ncols, v.iter().map(|(k, c)| (k / ncols, k % ncols, c.clone())))
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.ncols);
        for r in &self.rows {
            e.insert(r);
        }
        e.rank()
    }

    /// Basis of the right kernel. Each basis vector has a `1` at one free
    /// column and `0` at the others, so kernel coordinates are read there.
    pub fn nullspace(&self) -> Vec<SVec> {
        let mut e = Echelon::new(self.ncols);
        for r in &self.rows {
            e.insert(r);
        }
        e.complement_kernel()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.nrows;
        let aug: Vec<SVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut r = r.clone();
                r.push((n + i, Scalar::one()));
                r
            })
            .collect();
        let mut e = Echelon::new(2 * n);
        for r in &aug {
            e.insert(r);
        }
        e.make_rref();
        let mut rows = vec![Vec::new(); n];
        for r in e.rows() {
            let p = r[0].0;
            if p >= n {
                return None;
            }
            if r.iter().any(|(j, _)| *j < n && *j != p) {
                return None;
            }
            rows[p] = r.iter().filter(|(j, _)| *j >= n).map(|(j, c)| (j - n, c.clone())).collect();
        }
        if e.rank() < n || rows.iter().enumerate().any(|(i, _)| !e.pivot_of.contains_key(&i)) {
            return None;
        }
        Some(Mat::from_rows(n, rows))
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &SVec) -> Option<SVec> {
        let n = self.ncols;
        let mut e = Echelon::new(n + 1);
        for (i, r) in self.rows.iter().enumerate() {
            let mut r = r.clone();
            let bi = sv_get(b, i);
            if !bi.is_zero() {
                r.push((n, bi));
            }
            e.insert(&r);
        }
        if e.pivot_of.contains_key(&n) {
            return None;
        }
        e.make_rref();
        let mut x = Vec::new();
        for r in e.rows() {
            let last = r.last().unwrap();
            if last.0 == n {
                x.push((r[0].0, last.1.clone()));
            }
        }
        x.sort_by_key(|e| e.0);
        Some(x)
    }
}

/// Incremental row echelon form with first-nonzero pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SVec>,
    pivot_of: HashMap<usize, usize>,
    rref: bool,
}

impl Echelon {
    pub fn new(dim: usize) -> Echelon {
        Echelon { dim, rows: Vec::new(), pivot_of: HashMap::new(), rref: true }
    }

    pub fn from_vectors<'a>(dim: usize, vs: impl IntoIterator<Item = &'a SVec>) -> Echelon {
        let mut e = Echelon::new(dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_of.contains_key(&i)
    }

    /// Remainder of `v` with every pivot coordinate eliminated. Two vectors
    /// have the same remainder exactly when they agree modulo the span.
    pub fn reduce(&self, v: &SVec) -> SVec {
        if self.rows.is_empty() {
            return v.clone();
        }
        let mut w: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = w.range(cursor..).find(|(k, _)| self.pivot_of.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let row = &self.rows[self.pivot_of[&k]];
            for (j, x) in row {
                let e = w.entry(*j).or_insert_with(Scalar::zero);
                *e -= &(&c * x);
                if e.is_zero() {
                    w.remove(j);
                }
            }
            cursor = k + 1;
        }
        w.into_iter().collect()
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv().expect("nonzero pivot");
        let r = sv_scale(&r, &inv);
        self.pivot_of.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        self.rref = false;
        true
    }

    /// Back-substitutes so each pivot column has a single nonzero entry.
    pub fn make_rref(&mut self) {
        if self.rref {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i][0].0));
        for &i in &order {
            let p = self.rows[i][0].0;
            let pivot_row = self.rows[i].clone();
            for (k, r) in self.rows.iter_mut().enumerate() {
                if k == i {
                    continue;
                }
                let c = sv_get(r, p);
                if !c.is_zero() {
                    *r = sv_axpy(r, &(-c), &pivot_row);
                }
            }
        }
        // order rows by pivot for a canonical basis
        let mut rows = std::mem::take(&mut self.rows);
        rows.sort_by_key(|r| r[0].0);
        self.pivot_of = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        self.rows = rows;
        self.rref = true;
    }

    /// Canonical (reduced, pivot-ordered) basis of the span.
    pub fn basis(&mut self) -> Vec<SVec> {
        self.make_rref();
        self.rows.clone()
    }

    /// Coordinates of `v` in the reduced basis, or `None` if `v` is outside
    /// the span. Requires [`Echelon::make_rref`] to have run.
    pub fn coords(&self, v: &SVec) -> Option<Vec<Scalar>> {
        assert!(self.rref, "coords needs a reduced basis");
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.iter().map(|r| sv_get(v, r[0].0)).collect())
    }

    /// Kernel of the linear map whose rows span this echelon form.
    pub fn complement_kernel(&mut self) -> Vec<SVec> {
        self.make_rref();
        let free: Vec<usize> = (0..self.dim).filter(|j| !self.pivot_of.contains_key(j)).collect();
        // column j of the rref, restricted to free j, gives the kernel vector
        let mut by_free: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
        for r in &self.rows {
            let p = r[0].0;
            for (j, c) in &r[1..] {
                by_free.entry(*j).or_default().push((p, -c));
            }
        }
        free.iter()
            .map(|&f| {
                let mut v = by_free.remove(&f).unwrap_or_default();
                v.push((f, Scalar::one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    /// Indices that are not pivots; they coordinatize the quotient by the span.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|j| !self.pivot_of.contains_key(j)).collect()
    }
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    basis: Vec<SVec>,
    pivots: Vec<usize>,
    inv: Mat,
}

impl BasisCoords {
    /// Panics if `basis` is linearly dependent.
    pub fn new(dim: usize, basis: &[SVec]) -> BasisCoords {
        let e = Echelon::from_vectors(dim, basis);
        assert_eq!(e.rank(), basis.len(), "basis vectors are dependent");
        let mut pivots = e.pivots();
        pivots.sort_unstable();
        // rows: pivot coordinates, columns: basis vectors
        let sub = Mat::from_cols(dim, basis).submatrix(&pivots, &(0..basis.len()).collect::<Vec<_>>());
        let inv = sub.inverse().expect("pivot minor is invertible");
        BasisCoords { basis: basis.to_vec(), pivots, inv }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.basis
    }

    /// Coordinates of `v`, assuming `v` lies in the span.
    pub fn coords_unchecked(&self, v: &SVec) -> SVec {
        let r: SVec = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(k, p)| {
                let c = sv_get(v, *p);
                (!c.is_zero()).then_some((k, c))
            })
            .collect();
        self.inv.apply(&r)
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &SVec) -> Option<SVec> {
        let c = self.coords_unchecked(v);
        (self.combine(&c) == *v).then_some(c)
    }

    pub fn combine(&self, c: &SVec) -> SVec {
        c.iter().fold(Vec::new(), |acc, (k, x)| sv_axpy(&acc, x, &self.basis[*k]))
    }
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect(dim: usize, a: &[SVec], b: &[SVec]) -> Vec<SVec> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // solve sum x_i a_i - sum y_j b_j = 0
    let cols: Vec<SVec> = a.iter().cloned().chain(b.iter().map(|v| sv_scale(v, &Scalar::from_int(-1)))).collect();
    let m = Mat::from_cols(dim, &cols);
    let mut out = Echelon::new(dim);
    for k in m.nullspace() {
        let v = k.iter().filter(|(i, _)| *i < a.len()).fold(Vec::new(), |acc, (i, c)| sv_axpy(&acc, c, &a[*i]));
        out.insert(&v);
    }
    out.basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_inverse() {
        let a = Mat::from_ints(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert_eq!(inv.get(0, 0), Scalar::from_int(-2));
        assert_eq!(inv.get(1, 0), Scalar::frac(3, 2));
        assert!(Mat::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn nullspace_is_pivot_normalized() {
        let a = Mat::from_ints(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let k = a.nullspace();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v).is_empty());
        }
        assert_eq!(sv_get(&k[0], 1), Scalar::one());
        assert_eq!(sv_get(&k[0], 0), Scalar::from_int(-1));
    }

    #[test]
    fn solve_and_rank() {
        let a = Mat::from_ints(&[&[2, 0, 1], &[0, 1, 1], &[2, 1, 2]]);
        assert_eq!(a.rank(), 2);
        let b = vec![(0, Scalar::from_int(2)), (1, Scalar::one()), (2, Scalar::from_int(3))];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        assert!(a.solve(&vec![(0, Scalar::one())]).is_none());
    }

    #[test]
    fn kron_matches_entries() {
        let a = Mat::from_ints(&[&[1, 2], &[0, 1]]);
        let b = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.get(1, 2), Scalar::from_int(2));
        assert_eq!(k.get(2, 3), Scalar::one());
        assert_eq!(k.get(3, 3), Scalar::zero());
    }

    #[test]
    fn echelon_coords_and_intersection() {
        let v1 = sv_from_dense(&[Scalar::one(), Scalar::one(), Scalar::zero()]);
        let v2 = sv_from_dense(&[Scalar::zero(), Scalar::one(), Scalar::one()]);
        let mut e = Echelon::from_vectors(3, [&v1, &v2]);
        e.make_rref();
        let w = sv_axpy(&v1, &Scalar::from_int(3), &v2);
        let c = e.coords(&w).unwrap();
        let back = e.rows().iter().zip(&c).fold(Vec::new(), |acc, (r, x)| sv_axpy(&acc, x, r));
        assert_eq!(back, w);
        let u = vec![sv_unit(1)];
        assert!(intersect(3, &[v1.clone(), v2.clone()], &u).is_empty());
        let i = intersect(3, &[v1, v2], &[sv_unit(0), sv_unit(2)]);
        assert_eq!(i.len(), 1);
    }
}

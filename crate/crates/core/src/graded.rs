//! Z2-graded spaces and maps.
//!
//! Every space lists its even basis vectors before its odd ones. Tensor
//! products reorder the lexicographic product basis by a stable parity sort
//! and report the permutation they used.

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Mat, SVec};
use crate::scalar::Scalar;

/// Parity, `0` (even) or `1` (odd).
pub type Parity = u8;

/// `(-1)^(a*b)` as a scalar.
pub fn koszul(a: Parity, b: Parity) -> Scalar {
    if a & b & 1 == 1 {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    pub even: usize,
    pub odd: usize,
    pub labels: Vec<String>,
}

impl GradedSpace {
    /// `C^{m|n}` with labels `v0, v1, ...`.
    pub fn new(even: usize, odd: usize) -> GradedSpace {
        let labels = (0..even + odd).map(|i| format!("v{i}")).collect();
        GradedSpace { even, odd, labels }
    }

    pub fn with_labels(even: usize, odd: usize, labels: Vec<String>) -> GradedSpace {
        assert_eq!(labels.len(), even + odd);
        GradedSpace { even, odd, labels }
    }

    pub fn dim(&self) -> usize {
        self.even + self.odd
    }

    pub fn parity(&self, i: usize) -> Parity {
        (i >= self.even) as Parity
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    /// Parity of a vector, if homogeneous. The zero vector counts as even.
    pub fn vector_parity(&self, v: &SVec) -> Option<Parity> {
        let mut p = None;
        for (i, _) in v {
            let q = self.parity(*i);
            match p {
                None => p = Some(q),
                Some(x) if x != q => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    /// Graded tensor product. Returns the space and `perm`, where `perm[a*dim(w)+b]`
    /// is the position of `v_a ⊗ w_b`.
    pub fn tensor(&self, w: &GradedSpace) -> (GradedSpace, Vec<usize>) {
        let pars: Vec<Parity> =
            (0..self.dim()).flat_map(|a| (0..w.dim()).map(move |b| (a, b))).map(|(a, b)| self.parity(a) ^ w.parity(b)).collect();
        let perm = parity_sort(&pars);
        let even = pars.iter().filter(|p| **p == 0).count();
        let mut labels = vec![String::new(); pars.len()];
        for a in 0..self.dim() {
            for b in 0..w.dim() {
                labels[perm[a * w.dim() + b]] = format!("{}⊗{}", self.labels[a], w.labels[b]);
            }
        }
        (GradedSpace { even, odd: pars.len() - even, labels }, perm)
    }

    /// Direct sum. Returns the space and, for each summand, the positions of its
    /// basis vectors.
    pub fn direct_sum(parts: &[&GradedSpace]) -> (GradedSpace, Vec<Vec<usize>>) {
        let even: usize = parts.iter().map(|p| p.even).sum();
        let mut pos = Vec::new();
        let mut labels = vec![String::new(); parts.iter().map(|p| p.dim()).sum()];
        let (mut e, mut o) = (0, even);
        for (k, p) in parts.iter().enumerate() {
            let mut v = Vec::with_capacity(p.dim());
            for i in 0..p.dim() {
                let at = if p.parity(i) == 0 {
                    e += 1;
                    e - 1
                } else {
                    o += 1;
                    o - 1
                };
                labels[at] = format!("{}#{k}", p.labels[i]);
                v.push(at);
            }
            pos.push(v);
        }
        let odd = labels.len() - even;
        (GradedSpace { even, odd, labels }, pos)
    }

    /// Parity-shifted copy `ΠV`.
    pub fn shift(&self) -> (GradedSpace, Vec<usize>) {
        let perm: Vec<usize> = (0..self.dim()).map(|i| if i < self.even { self.odd + i } else { i - self.even }).collect();
        let mut labels = vec![String::new(); self.dim()];
        for i in 0..self.dim() {
            labels[perm[i]] = format!("Π{}", self.labels[i]);
        }
        (GradedSpace { even: self.odd, odd: self.even, labels }, perm)
    }
}

/// Stable sort of positions by parity; `out[i]` is the new position of `i`.
pub fn parity_sort(pars: &[Parity]) -> Vec<usize> {
    let even = pars.iter().filter(|p| **p == 0).count();
    let (mut e, mut o) = (0, even);
    pars.iter()
        .map(|p| {
            if *p == 0 {
                e += 1;
                e - 1
            } else {
                o += 1;
                o - 1
            }
        })
        .collect()
}

/// Reindexes rows by `row_perm` and columns by `col_perm`.
pub fn reindex(m: &Mat, row_perm: &[usize], col_perm: &[usize]) -> Mat {
    Mat::from_entries(
        m.nrows(),
        m.ncols(),
        m.entries().map(|(i, j, c)| (row_perm[i], col_perm[j], c.clone())).collect::<Vec<_>>(),
    )
}

/// Parity of a matrix between graded spaces, `None` when inhomogeneous.
/// The zero map counts as even.
pub fn mat_parity(m: &Mat, src: &GradedSpace, tgt: &GradedSpace) -> Option<Parity> {
    let mut p = None;
    for (i, j, _) in m.entries() {
        let q = tgt.parity(i) ^ src.parity(j);
        match p {
            None => p = Some(q),
            Some(x) if x != q => return None,
            _ => {}
        }
    }
    Some(p.unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub mat: Mat,
    pub src: GradedSpace,
    pub tgt: GradedSpace,
    /// `None` for inhomogeneous maps.
    pub parity: Option<Parity>,
}

impl GradedMap {
    pub fn new(mat: Mat, src: GradedSpace, tgt: GradedSpace) -> Result<GradedMap> {
        if mat.nrows() != tgt.dim() || mat.ncols() != src.dim() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix between spaces of dims {} and {}",
                mat.nrows(),
                mat.ncols(),
                src.dim(),
                tgt.dim()
            )));
        }
        let parity = mat_parity(&mat, &src, &tgt);
        Ok(GradedMap { mat, src, tgt, parity })
    }

    pub fn identity(v: &GradedSpace) -> GradedMap {
        GradedMap { mat: Mat::identity(v.dim()), src: v.clone(), tgt: v.clone(), parity: Some(0) }
    }

    pub fn compose(&self, o: &GradedMap) -> Result<GradedMap> {
        if o.tgt.dim() != self.src.dim() {
            return Err(Error::Dimension("composition of incompatible maps".into()));
        }
        GradedMap::new(self.mat.mul(&o.mat), o.src.clone(), self.tgt.clone())
    }
}

/// A graded subspace given by a homogeneous basis (even vectors first) in
/// ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    pub space: GradedSpace,
    pub basis: Vec<SVec>,
}

impl GradedSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Embedding matrix, columns are the basis vectors.
    pub fn embedding(&self, ambient_dim: usize) -> Mat {
        Mat::from_cols(ambient_dim, &self.basis)
    }
}

fn graded_subspace(amb: &GradedSpace, vecs: Vec<SVec>) -> GradedSubspace {
    let (mut ev, mut od): (Vec<SVec>, Vec<SVec>) = (Vec::new(), Vec::new());
    for v in vecs {
        match amb.vector_parity(&v) {
            Some(1) => od.push(v),
            _ => ev.push(v),
        }
    }
    let (e, o) = (ev.len(), od.len());
    ev.extend(od);
    GradedSubspace { space: GradedSpace::new(e, o), basis: ev }
}

/// Graded kernel of `f`. For an inhomogeneous map this is the largest graded
/// subspace inside the kernel.
pub fn kernel(f: &GradedMap) -> GradedSubspace {
    if f.parity.is_some() {
        return graded_subspace(&f.src, f.mat.nullspace());
    }
    let mut vecs = Vec::new();
    for p in [0, 1] {
        let cols: Vec<usize> = (0..f.src.dim()).filter(|j| f.src.parity(*j) == p).collect();
        let sub = f.mat.submatrix(&(0..f.mat.nrows()).collect::<Vec<_>>(), &cols);
        for v in sub.nullspace() {
            vecs.push(v.iter().map(|(k, c)| (cols[*k], c.clone())).collect());
        }
    }
    graded_subspace(&f.src, vecs)
}

/// Sign-twisted Kronecker product of raw matrices:
/// `(f⊗g)(v_a⊗w_b) = (-1)^{|g||a|} f(v_a)⊗g(w_b)` in lexicographic order.
pub fn koszul_kron(f: &Mat, f_src: &GradedSpace, g: &Mat, g_par: Parity) -> Mat {
    let k = f.kron(g);
    if g_par == 0 {
        return k;
    }
    let gc = g.ncols();
    Mat::from_entries(
        k.nrows(),
        k.ncols(),
        k.entries()
            .map(|(i, j, c)| {
                let a = j / gc;
                let c = if f_src.parity(a) == 1 { -c } else { c.clone() };
                (i, j, c)
            })
            .collect::<Vec<_>>(),
    )
}

/// Graded tensor product of homogeneous maps, in the parity-sorted bases of
/// the tensor product spaces.
pub fn graded_tensor(f: &GradedMap, g: &GradedMap) -> Result<GradedMap> {
    let (Some(pf), Some(pg)) = (f.parity, g.parity) else {
        return Err(Error::Domain("graded tensor needs homogeneous maps".into()));
    };
    let (src, sp) = f.src.tensor(&g.src);
    let (tgt, tp) = f.tgt.tensor(&g.tgt);
    let k = koszul_kron(&f.mat, &f.src, &g.mat, pg);
    Ok(GradedMap { mat: reindex(&k, &tp, &sp), src, tgt, parity: Some(pf ^ pg) })
}

/// Basis of the parity-`p` endomorphisms `T` of `v` with
/// `T X = s(X) X T` for every `(X, |X|)` in `ops`, where `s(X) = (-1)^{p|X|}`
/// when `graded` and `1` otherwise.
pub fn commutant_general(v: &GradedSpace, ops: &[(Mat, Parity)], p: Parity, graded: bool) -> Vec<Mat> {
    let pairs: Vec<(Mat, Mat, Parity)> = ops.iter().map(|(m, q)| (m.clone(), m.clone(), *q)).collect();
    intertwiners(v, v, &pairs, p, graded)
}

/// Basis of the parity-`p` maps `T: v -> w` with `T X = s(X) Y T` for every
/// `(X, Y, |X|)` in `pairs`; `s` as in [`commutant_general`].
pub fn intertwiners(v: &GradedSpace, w: &GradedSpace, pairs: &[(Mat, Mat, Parity)], p: Parity, graded: bool) -> Vec<Mat> {
    let (n, m) = (v.dim(), w.dim());
    // unknowns: entries (i, j) of T with parity(i) + parity(j) = p
    let mut idx = vec![usize::MAX; m * n];
    let mut unknowns = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if w.parity(i) ^ v.parity(j) == p {
                idx[i * n + j] = unknowns.len();
                unknowns.push((i, j));
            }
        }
    }
    let nu = unknowns.len();
    let mut ech = Echelon::new(nu);
    'outer: for (x, y, px) in pairs {
        let sign = if graded { koszul(p, *px) } else { Scalar::one() };
        let xt = x.transpose();
        for i in 0..m {
            for j in 0..n {
                // (T X)_{ij} - s (Y T)_{ij}
                let mut terms = Vec::new();
                for (k, c) in xt.row(j) {
                    let u = idx[i * n + k];
                    if u != usize::MAX {
                        terms.push((u, c.clone()));
                    }
                }
                for (k, c) in y.row(i) {
                    let u = idx[k * n + j];
                    if u != usize::MAX {
                        terms.push((u, -(&sign * c)));
                    }
                }
                let row = crate::linalg::sv_collect(terms);
                if !row.is_empty() {
                    ech.insert(&row);
                    if ech.is_full() {
                        break 'outer;
                    }
                }
            }
        }
    }
    ech.complement_kernel()
        .into_iter()
        .map(|k| Mat::from_entries(m, n, k.into_iter().map(|(u, c)| (unknowns[u].0, unknowns[u].1, c)).collect::<Vec<_>>()))
        .collect()
}

/// Supercommutant of homogeneous operators on `v`, restricted to parity `p`.
pub fn commutant(v: &GradedSpace, ops: &[GradedMap], p: Parity) -> Result<Vec<GradedMap>> {
    let mut raw = Vec::with_capacity(ops.len());
    for o in ops {
        let Some(q) = o.parity else {
            return Err(Error::Domain("commutant needs homogeneous operators".into()));
        };
        raw.push((o.mat.clone(), q));
    }
    Ok(commutant_general(v, &raw, p, true)
        .into_iter()
        .map(|m| GradedMap { mat: m, src: v.clone(), tgt: v.clone(), parity: Some(p) })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(d: &[&[i64]], v: &GradedSpace) -> GradedMap {
        GradedMap::new(Mat::from_ints(d), v.clone(), v.clone()).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let v11 = GradedSpace::new(1, 1);
        assert_eq!(kernel(&GradedMap::identity(&v11)).dim(), 0);
        let v21 = GradedSpace::new(2, 1);
        let z = GradedMap::new(Mat::zeros(3, 3), v21.clone(), v21).unwrap();
        assert_eq!(kernel(&z).dim(), 3);
        let f = map(&[&[0, 1], &[0, 0]], &v11);
        assert_eq!(f.parity, Some(1));
        let k = kernel(&f);
        assert_eq!(k.space, GradedSpace::new(1, 0));
        assert_eq!(k.basis, vec![vec![(0, Scalar::one())]]);
    }

    #[test]
    fn odd_tensor_square_sign() {
        let v11 = GradedSpace::new(1, 1);
        let f = map(&[&[0, 1], &[1, 0]], &v11);
        let g = map(&[&[0, 2], &[1, 0]], &v11);
        let fg = graded_tensor(&f, &g).unwrap();
        let lhs = fg.mat.mul(&fg.mat);
        let ff = GradedMap::new(f.mat.mul(&f.mat), v11.clone(), v11.clone()).unwrap();
        let gg = GradedMap::new(g.mat.mul(&g.mat), v11.clone(), v11.clone()).unwrap();
        let rhs = graded_tensor(&ff, &gg).unwrap().mat.neg();
        assert_eq!(lhs, rhs);
        assert!(graded_tensor(&map(&[&[1, 1], &[0, 1]], &v11), &f).is_err());
    }

    #[test]
    fn tensor_identity_is_identity() {
        let v = GradedSpace::new(2, 1);
        let w = GradedSpace::new(1, 2);
        let t = graded_tensor(&GradedMap::identity(&v), &GradedMap::identity(&w)).unwrap();
        assert_eq!(t.mat, Mat::identity(9));
        assert_eq!(t.src.even, 2 + 2);
    }

    #[test]
    fn commutant_of_m11_and_q1() {
        let v = GradedSpace::new(1, 1);
        let units: Vec<GradedMap> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| GradedMap::new(Mat::unit(2, 2, i, j), v.clone(), v.clone()).unwrap())
            .collect();
        assert_eq!(commutant(&v, &units, 0).unwrap().len(), 1);
        assert_eq!(commutant(&v, &units, 1).unwrap().len(), 0);
        let q1 = vec![GradedMap::identity(&v), map(&[&[0, 1], &[1, 0]], &v)];
        let odd = commutant(&v, &q1, 1).unwrap();
        assert_eq!(odd.len(), 1);
        // spanned by P = (0 1; -1 0)
        let p = Mat::from_ints(&[&[0, 1], &[-1, 0]]);
        assert_eq!(Echelon::from_vectors(4, [&odd[0].mat.flatten(), &p.flatten()]).rank(), 1);
        assert_eq!(commutant(&v, &[], 0).unwrap().len(), 2);
    }
}

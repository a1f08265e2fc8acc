//! The queer Lie superalgebra `q(n)`, realized on the slice of block matrices
//! `(A B; B A)` of size `2(n+1)` with `tr A = tr B = 0`.
//!
//! Basis order: even `h_1..h_n` (with `h_k = e_kk - e_{k+1,k+1}`), then
//! `e_ij` for `i != j` in lexicographic order; odd `h'_1..h'_n`, then
//! `e'_ij` in the same order. Indices `i, j` are 1-based in labels and
//! 0-based in the API.

use crate::error::{Error, Result};
use crate::graded::Parity;
use crate::lie::{supercommutator, LieSuper, RootTag};
use crate::linalg::{BasisCoords, Echelon, Mat, SVec};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Queer {
    /// Rank parameter: matrices have size `n + 1`.
    pub n: usize,
    pub g: LieSuper,
    mats: Vec<Mat>,
    coords: BasisCoords,
}

/// Matrix `(A B; B A)` of size `2N`.
pub fn queer_block(a: &Mat, b: &Mat) -> Mat {
    let n = a.nrows();
    let mut e = Vec::new();
    for (i, j, c) in a.entries() {
        e.push((i, j, c.clone()));
        e.push((n + i, n + j, c.clone()));
    }
    for (i, j, c) in b.entries() {
        e.push((i, n + j, c.clone()));
        e.push((n + i, j, c.clone()));
    }
    Mat::from_entries(2 * n, 2 * n, e)
}

/// Projection of `q~(n)` onto the traceless slice: subtract `(tr A / N) I`.
pub fn project_traceless(m: Mat) -> Mat {
    let s = m.nrows();
    let n = s / 2;
    let tr: Scalar = (0..n).map(|i| m.get(i, i)).sum();
    if tr.is_zero() {
        return m;
    }
    m.axpy(&-(&tr / &Scalar::from_int(n as i64)), &Mat::identity(s))
}

/// `ε_i - ε_j` in simple-root coordinates.
pub fn eps_root(n: usize, i: usize, j: usize) -> Vec<i32> {
    let mut r = vec![0; n];
    if i < j {
        r[i..j].iter_mut().for_each(|x| *x = 1);
    } else {
        r[j..i].iter_mut().for_each(|x| *x = -1);
    }
    r
}

/// Value of a root (simple-root coordinates) on `h_k`, via the `sl_{n+1}`
/// Cartan matrix.
pub fn root_on_h(root: &[i32], k: usize) -> i64 {
    let n = root.len();
    let mut v = 2 * root[k] as i64;
    if k > 0 {
        v -= root[k - 1] as i64;
    }
    if k + 1 < n {
        v -= root[k + 1] as i64;
    }
    v
}

impl Queer {
    pub fn new(n: usize) -> Queer {
        assert!(n >= 1, "q(n) needs n >= 1");
        let big = n + 1;
        let unit = |i: usize, j: usize| Mat::unit(big, big, i, j);
        let h = |k: usize| unit(k, k).sub(&unit(k + 1, k + 1));
        let zero = Mat::zeros(big, big);
        let offdiag: Vec<(usize, usize)> = (0..big).flat_map(|i| (0..big).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
        let mut basis: Vec<(Mat, Parity, String)> = Vec::new();
        let mut roots = Vec::new();
        for k in 0..n {
            basis.push((queer_block(&h(k), &zero), 0, format!("h{}", k + 1)));
            roots.push(RootTag::Cartan);
        }
        for &(i, j) in &offdiag {
            basis.push((queer_block(&unit(i, j), &zero), 0, format!("e{}{}", i + 1, j + 1)));
            roots.push(RootTag::Root(eps_root(n, i, j)));
        }
        for k in 0..n {
            basis.push((queer_block(&zero, &h(k)), 1, format!("h'{}", k + 1)));
            roots.push(RootTag::Cartan);
        }
        for &(i, j) in &offdiag {
            basis.push((queer_block(&zero, &unit(i, j)), 1, format!("e'{}{}", i + 1, j + 1)));
            roots.push(RootTag::Root(eps_root(n, i, j)));
        }
        let g = LieSuper::from_matrices(&basis, project_traceless, Some(roots)).expect("q(n) closes");
        let mats: Vec<Mat> = basis.iter().map(|b| b.0.clone()).collect();
        let flat: Vec<SVec> = mats.iter().map(Mat::flatten).collect();
        let coords = BasisCoords::new(4 * big * big, &flat);
        Queer { n, g, mats, coords }
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    fn off_index(&self, i: usize, j: usize) -> usize {
        let big = self.n + 1;
        assert!(i != j && i < big && j < big);
        i * (big - 1) + if j > i { j - 1 } else { j }
    }

    pub fn h(&self, k: usize) -> usize {
        k
    }

    pub fn e(&self, i: usize, j: usize) -> usize {
        self.n + self.off_index(i, j)
    }

    pub fn h_odd(&self, k: usize) -> usize {
        self.g.space.even + k
    }

    pub fn e_odd(&self, i: usize, j: usize) -> usize {
        self.g.space.even + self.n + self.off_index(i, j)
    }

    pub fn roots(&self) -> &[RootTag] {
        self.g.roots.as_deref().expect("q(n) carries roots")
    }

    /// Block matrix of a basis element.
    pub fn matrix(&self, i: usize) -> &Mat {
        &self.mats[i]
    }

    pub fn matrix_of(&self, v: &SVec) -> Mat {
        let s = 2 * (self.n + 1);
        v.iter().fold(Mat::zeros(s, s), |acc, (k, c)| acc.axpy(c, &self.mats[*k]))
    }

    /// Coordinates of a block matrix in the slice (after projection).
    pub fn element(&self, m: &Mat) -> Result<SVec> {
        self.coords
            .coords(&project_traceless(m.clone()).flatten())
            .ok_or_else(|| Error::Domain("matrix is not of the form (A B; B A)".into()))
    }

    /// Even diagonal part `h̄_0`.
    /// Automorphism `x -> S x S^-1` for `S = (s 0; 0 s)`, as a matrix on
    /// the basis.
    pub fn conjugation(&self, s: &Mat) -> Result<Mat> {
        let big = self.n + 1;
        if s.nrows() != big || s.ncols() != big {
            return Err(Error::Dimension(format!("expected a {big}x{big} matrix")));
        }
        let inv = s.inverse().ok_or_else(|| Error::Domain("conjugating matrix is singular".into()))?;
        let zero = Mat::zeros(big, big);
        let (bs, bi) = (queer_block(s, &zero), queer_block(&inv, &zero));
        let cols = (0..self.dim()).map(|k| self.element(&bs.mul(self.matrix(k)).mul(&bi))).collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_cols(self.dim(), &cols))
    }

    /// Conjugation by `diag(1, ..., 1, -1)`, an involution.
    pub fn sign_conjugation(&self) -> Mat {
        let big = self.n + 1;
        let s = Mat::from_entries(big, big, (0..big).map(|i| (i, i, Scalar::from_int(if i + 1 == big { -1 } else { 1 }))));
        self.conjugation(&s).expect("diagonal sign matrix is invertible")
    }

    pub fn h0(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// Odd diagonal part `h̄_1`.
    pub fn h1(&self) -> Vec<usize> {
        (0..self.n).map(|k| self.h_odd(k)).collect()
    }

    pub fn cartan(&self) -> Vec<usize> {
        let mut v = self.h0();
        v.extend(self.h1());
        v
    }

    pub fn n_plus(&self) -> Vec<usize> {
        (0..self.dim()).filter(|i| self.roots()[*i].is_positive()).collect()
    }

    pub fn n_minus(&self) -> Vec<usize> {
        (0..self.dim()).filter(|i| self.roots()[*i].is_negative()).collect()
    }

    pub fn borel(&self) -> Vec<usize> {
        let mut v = self.cartan();
        v.extend(self.n_plus());
        v.sort_unstable();
        v
    }

    pub fn positive_roots(&self) -> Vec<Vec<i32>> {
        let big = self.n + 1;
        (0..big).flat_map(|i| (i + 1..big).map(move |j| (i, j))).map(|(i, j)| eps_root(self.n, i, j)).collect()
    }

    pub fn simple_roots(&self) -> Vec<Vec<i32>> {
        (0..self.n).map(|k| eps_root(self.n, k, k + 1)).collect()
    }

    /// Basis of `q_α`; `None` when `α` is neither `0` nor a root.
    pub fn root_space(&self, alpha: &[i32]) -> Option<Vec<usize>> {
        if alpha.iter().all(|x| *x == 0) {
            return Some(self.cartan());
        }
        let v: Vec<usize> = (0..self.dim()).filter(|i| self.roots()[*i] == RootTag::Root(alpha.to_vec())).collect();
        (!v.is_empty()).then_some(v)
    }

    /// Values `α(h_k)` of the `h̄_0`-weight of `x`, if `x` is a weight vector.
    pub fn weight_of(&self, x: &SVec) -> Option<Vec<Scalar>> {
        if x.is_empty() {
            return None;
        }
        let (pivot, c0) = &x[0];
        let mut w = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let hx = self.g.bracket(&vec![(self.h(k), Scalar::one())], x);
            let lam = &crate::linalg::sv_get(&hx, *pivot) / c0;
            if hx != crate::linalg::sv_scale(x, &lam) {
                return None;
            }
            w.push(lam);
        }
        Some(w)
    }

    /// Simple-root coordinates of a weight given by its values on `h_k`, when
    /// it lies in the root lattice.
    pub fn weight_to_root(&self, w: &[Scalar]) -> Option<Vec<i32>> {
        let n = self.n;
        let cartan = Mat::from_entries(
            n,
            n,
            (0..n).flat_map(|k| (0..n).map(move |j| (k, j))).map(|(k, j)| {
                let mut e = vec![0; n];
                e[j] = 1;
                (k, j, Scalar::from_int(root_on_h(&e, k)))
            }),
        );
        let rhs = crate::linalg::sv_from_dense(w);
        let sol = cartan.solve(&rhs)?;
        let dense = crate::linalg::sv_to_dense(&sol, n);
        dense
            .iter()
            .map(|c| {
                let g = c.as_gauss()?;
                if !g.is_real() {
                    return None;
                }
                i32::try_from(&g.re).ok()
            })
            .collect()
    }
}

/// The identity `e_ii - e_jj = ½[e'_ii - e'_jj, e'_ii + e'_jj - 2e'_kk]` for
/// distinct `i, j, k`, and `[h̄_1, h̄_1] = h̄_0`.
pub fn cartan_generation_check(n: usize) -> bool {
    let q = Queer::new(n);
    let big = n + 1;
    let zero = Mat::zeros(big, big);
    let d = |i: usize| Mat::unit(big, big, i, i);
    let half = Scalar::frac(1, 2);
    for i in 0..big {
        for j in 0..big {
            for k in 0..big {
                if i == j || j == k || i == k {
                    continue;
                }
                let x = queer_block(&zero, &d(i).sub(&d(j)));
                let y = queer_block(&zero, &d(i).add(&d(j)).sub(&d(k).scale(&Scalar::from_int(2))));
                let lhs = queer_block(&d(i).sub(&d(j)), &zero);
                let rhs = project_traceless(supercommutator(&x, 1, &y, 1)).scale(&half);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    let h1: Vec<SVec> = q.h1().into_iter().map(|i| vec![(i, Scalar::one())]).collect();
    let span = q.g.bracket_span(&h1, &h1);
    let h0 = Echelon::from_vectors(q.dim(), &q.h0().into_iter().map(|i| vec![(i, Scalar::one())]).collect::<Vec<_>>());
    span.len() == n && span.iter().all(|v| h0.contains(v))
}

/// `q~(n)`: all `(A B; B A)` with `tr B = 0`, including the identity.
pub fn build_q_tilde(n: usize) -> LieSuper {
    let big = n + 1;
    let zero = Mat::zeros(big, big);
    let mut basis = Vec::new();
    for i in 0..big {
        for j in 0..big {
            basis.push((queer_block(&Mat::unit(big, big, i, j), &zero), 0, format!("E{}{}", i + 1, j + 1)));
        }
    }
    for k in 0..n {
        let h = Mat::unit(big, big, k, k).sub(&Mat::unit(big, big, k + 1, k + 1));
        basis.push((queer_block(&zero, &h), 1, format!("h'{}", k + 1)));
    }
    for i in 0..big {
        for j in 0..big {
            if i != j {
                basis.push((queer_block(&zero, &Mat::unit(big, big, i, j)), 1, format!("e'{}{}", i + 1, j + 1)));
            }
        }
    }
    LieSuper::from_matrices(&basis, |m| m, None).expect("q~(n) closes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sv_get;

    #[test]
    fn dims_and_axioms() {
        let q2 = Queer::new(2);
        assert_eq!(q2.dim(), 16);
        assert_eq!(q2.g.check_axioms(), (true, true, true));
        assert_eq!(Queer::new(3).dim(), 30);
    }

    #[test]
    fn brackets() {
        let q = Queer::new(2);
        let b = q.g.bracket(&vec![(q.e(0, 1), Scalar::one())], &vec![(q.e(1, 0), Scalar::one())]);
        assert_eq!(b, vec![(q.h(0), Scalar::one())]);
        // [e'12, e'21] = (1/3)(e11 + e22 - 2 e33) = (1/3) h1 + (2/3) h2
        let b = q.g.bracket(&vec![(q.e_odd(0, 1), Scalar::one())], &vec![(q.e_odd(1, 0), Scalar::one())]);
        assert_eq!(b, vec![(q.h(0), Scalar::frac(1, 3)), (q.h(1), Scalar::frac(2, 3))]);
        let m = q.matrix_of(&b);
        assert_eq!(m.get(0, 0), Scalar::frac(1, 3));
        assert_eq!(m.get(2, 2), Scalar::frac(-2, 3));
    }

    #[test]
    fn roots_and_weights() {
        let q = Queer::new(2);
        assert_eq!(q.positive_roots().len(), 3);
        assert_eq!(q.root_space(&[1, 0]).unwrap(), vec![q.e(0, 1), q.e_odd(0, 1)]);
        assert_eq!(q.root_space(&[0, 0]).unwrap().len(), 4);
        assert!(q.root_space(&[2, 0]).is_none());
        let w = q.weight_of(&vec![(q.e(1, 2), Scalar::one())]).unwrap();
        assert_eq!(q.weight_to_root(&w).unwrap(), vec![0, 1]);
        assert_eq!(w, vec![Scalar::from_int(-1), Scalar::from_int(2)]);
        assert_eq!(Queer::new(3).positive_roots().len(), 6);
    }

    #[test]
    fn triangular_parts() {
        let q = Queer::new(2);
        let np: Vec<SVec> = q.n_plus().into_iter().map(|i| vec![(i, Scalar::one())]).collect();
        assert_eq!(q.g.subalgebra_closure(&np).len(), 6);
        let sub = q.g.subalgebra(&np, vec![String::new(); 6]).unwrap();
        assert!(sub.is_solvable());
        let b: Vec<SVec> = q.borel().into_iter().map(|i| vec![(i, Scalar::one())]).collect();
        assert_eq!(q.g.subalgebra_closure(&b).len(), 10);
        assert!(!q.g.is_solvable());
    }

    #[test]
    fn generation_and_simplicity() {
        assert!(cartan_generation_check(2));
        assert!(cartan_generation_check(3));
        assert!(!cartan_generation_check(1));
        assert!(Queer::new(2).g.is_simple());
        let qt = build_q_tilde(1);
        assert!(!qt.is_simple());
        let q = Queer::new(2);
        let x = q.element(&q.matrix(q.e(0, 2)).clone()).unwrap();
        assert_eq!(sv_get(&x, q.e(0, 2)), Scalar::one());
    }
}

//! Associative superalgebras given by structure constants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graded::{commutant_general, koszul, koszul_kron, parity_sort, reindex, GradedSpace, Parity};
use crate::linalg::{sv_axpy, sv_collect, BasisCoords, Echelon, Mat, SVec};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct AssocSuper {
    pub space: GradedSpace,
    /// `mult[i][j]` is the product of basis elements `i` and `j`.
    pub mult: Vec<Vec<SVec>>,
    pub unit: SVec,
}

impl AssocSuper {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut terms = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in &self.mult[*i][*j] {
                    terms.push((*k, &xy * c));
                }
            }
        }
        sv_collect(terms)
    }

    /// Algebra spanned by a parity-homogeneous family of square matrices that
    /// is closed under products and contains the identity.
    pub fn from_matrix_basis(basis: &[(Mat, Parity, String)]) -> Result<AssocSuper> {
        let n = basis.first().map(|b| b.0.nrows()).unwrap_or(0);
        let pars: Vec<Parity> = basis.iter().map(|b| b.1).collect();
        let perm = parity_sort(&pars);
        let mut sorted: Vec<Option<&(Mat, Parity, String)>> = vec![None; basis.len()];
        for (i, b) in basis.iter().enumerate() {
            sorted[perm[i]] = Some(b);
        }
        let sorted: Vec<&(Mat, Parity, String)> = sorted.into_iter().map(Option::unwrap).collect();
        let flat: Vec<SVec> = sorted.iter().map(|b| b.0.flatten()).collect();
        let bc = BasisCoords::new(n * n, &flat);
        let coords =
            |m: &Mat| bc.coords(&m.flatten()).ok_or_else(|| Error::Domain("matrix family is not closed under products".into()));
        let mut mult = Vec::with_capacity(basis.len());
        for a in &sorted {
            let mut row = Vec::with_capacity(basis.len());
            for b in &sorted {
                row.push(coords(&a.0.mul(&b.0))?);
            }
            mult.push(row);
        }
        let unit = coords(&Mat::identity(n))?;
        let even = pars.iter().filter(|p| **p == 0).count();
        let labels = sorted.iter().map(|b| b.2.clone()).collect();
        Ok(AssocSuper { space: GradedSpace::with_labels(even, basis.len() - even, labels), mult, unit })
    }

    /// Residual-free check of associativity, unit laws and parity.
    pub fn check_axioms(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let p = self.parity(i) ^ self.parity(j);
                if self.mult[i][j].iter().any(|(k, _)| self.parity(*k) != p) {
                    return false;
                }
                let ei = vec![(i, Scalar::one())];
                if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                    return false;
                }
                for k in 0..d {
                    let ek = vec![(k, Scalar::one())];
                    let l = self.mul(&self.mult[i][j], &ek);
                    let r = self.mul(&ei, &self.mult[j][k]);
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Left multiplication operator of a basis element.
    pub fn left_mult(&self, i: usize) -> Mat {
        let d = self.dim();
        Mat::from_entries(
            d,
            d,
            (0..d).flat_map(|j| self.mult[i][j].iter().map(move |(k, c)| (*k, j, c.clone()))).collect::<Vec<_>>(),
        )
    }

    /// Graded tensor product `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'`.
    pub fn tensor(&self, o: &AssocSuper) -> AssocSuper {
        let (space, perm) = self.space.tensor(&o.space);
        let d = space.dim();
        let od = o.dim();
        let mut mult = vec![vec![Vec::new(); d]; d];
        for a in 0..self.dim() {
            for b in 0..od {
                for a2 in 0..self.dim() {
                    for b2 in 0..od {
                        let sign = koszul(o.parity(b), self.parity(a2));
                        let mut terms = Vec::new();
                        for (x, cx) in &self.mult[a][a2] {
                            for (y, cy) in &o.mult[b][b2] {
                                terms.push((perm[x * od + y], &sign * &(cx * cy)));
                            }
                        }
                        mult[perm[a * od + b]][perm[a2 * od + b2]] = sv_collect(terms);
                    }
                }
            }
        }
        let mut uterms = Vec::new();
        for (x, cx) in &self.unit {
            for (y, cy) in &o.unit {
                uterms.push((perm[x * od + y], cx * cy));
            }
        }
        AssocSuper { space, mult, unit: sv_collect(uterms) }
    }
}

/// `M(m|n)`: all `(m+n)x(m+n)` matrices, even blocks on the diagonal.
pub fn make_m(m: usize, n: usize) -> AssocSuper {
    AssocSuper::from_matrix_basis(&m_basis(m, n)).expect("matrix units form an algebra")
}

/// Matrix units of `M(m|n)` with parities and labels.
pub fn m_basis(m: usize, n: usize) -> Vec<(Mat, Parity, String)> {
    let s = m + n;
    let block = |i: usize| (i >= m) as Parity;
    let mut basis = Vec::new();
    for i in 0..s {
        for j in 0..s {
            basis.push((Mat::unit(s, s, i, j), block(i) ^ block(j), format!("E{}{}", i + 1, j + 1)));
        }
    }
    basis
}

/// `Q(m)`: matrices `(A B; B A)` on `C^{m|m}`.
pub fn make_q(m: usize) -> AssocSuper {
    AssocSuper::from_matrix_basis(&q_basis(m)).expect("Q(m) is an algebra")
}

/// Basis of `Q(m)` with parities and labels.
pub fn q_basis(m: usize) -> Vec<(Mat, Parity, String)> {
    let s = 2 * m;
    let mut basis = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let a = Mat::from_entries(s, s, [(i, j, Scalar::one()), (m + i, m + j, Scalar::one())]);
            basis.push((a, 0, format!("E{}{}", i + 1, j + 1)));
        }
    }
    for i in 0..m {
        for j in 0..m {
            let b = Mat::from_entries(s, s, [(i, m + j, Scalar::one()), (m + i, j, Scalar::one())]);
            basis.push((b, 1, format!("E'{}{}", i + 1, j + 1)));
        }
    }
    basis
}

/// The defining module of a matrix superalgebra given by a basis as accepted
/// by [`AssocSuper::from_matrix_basis`], operators in the same sorted order.
pub fn natural_action(basis: &[(Mat, Parity, String)], space: GradedSpace) -> ModuleAction {
    let pars: Vec<Parity> = basis.iter().map(|b| b.1).collect();
    let perm = parity_sort(&pars);
    let mut ops = vec![Mat::zeros(0, 0); basis.len()];
    for (i, b) in basis.iter().enumerate() {
        ops[perm[i]] = b.0.clone();
    }
    ModuleAction { space, ops }
}

/// The odd matrix `P = (0 I; -I 0)` on `C^{m|m}`.
pub fn p_matrix(m: usize) -> Mat {
    let mut e = Vec::new();
    for i in 0..m {
        e.push((i, m + i, Scalar::one()));
        e.push((m + i, i, Scalar::from_int(-1)));
    }
    Mat::from_entries(2 * m, 2 * m, e)
}

/// Symmetric bilinear form on `C^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPair {
    pub r: usize,
    pub f: Mat,
}

impl QuadraticPair {
    pub fn new(f: Mat) -> Result<QuadraticPair> {
        if !f.is_square() || f.transpose() != f {
            return Err(Error::Domain("quadratic form must be a symmetric square matrix".into()));
        }
        Ok(QuadraticPair { r: f.nrows(), f })
    }

    pub fn identity(r: usize) -> QuadraticPair {
        QuadraticPair { r, f: Mat::identity(r) }
    }

    pub fn is_degenerate(&self) -> bool {
        self.f.rank() < self.r
    }
}

/// Subsets of `0..r` ordered by parity, then by bit mask.
fn clifford_monomials(r: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..(1u32 << r)).collect();
    all.sort_by_key(|m| (m.count_ones() % 2, *m));
    all
}

fn mask_label(m: u32) -> String {
    if m == 0 {
        return "1".into();
    }
    (0..32).filter(|i| m >> i & 1 == 1).map(|i| format!("x{}", i + 1)).collect::<Vec<_>>().join("")
}

/// Clifford algebra with `x^2 = f(x, x)`, i.e. `x_i x_j + x_j x_i = 2 f_ij`.
pub fn clifford(q: &QuadraticPair) -> AssocSuper {
    let r = q.r;
    let monos = clifford_monomials(r);
    let pos: HashMap<u32, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut memo: HashMap<(u32, usize), Vec<(u32, Scalar)>> = HashMap::new();
    let mut mult = Vec::with_capacity(monos.len());
    for &s in &monos {
        let mut row = Vec::with_capacity(monos.len());
        for &t in &monos {
            let mut acc: Vec<(u32, Scalar)> = vec![(s, Scalar::one())];
            for j in (0..r).filter(|j| t >> j & 1 == 1) {
                acc = rmul_comb(&acc, j, &q.f, &mut memo);
            }
            row.push(sv_collect(acc.into_iter().map(|(m, c)| (pos[&m], c))));
        }
        mult.push(row);
    }
    let labels = monos.iter().map(|m| mask_label(*m)).collect();
    let even = monos.iter().filter(|m| m.count_ones() % 2 == 0).count();
    AssocSuper { space: GradedSpace::with_labels(even, monos.len() - even, labels), mult, unit: vec![(0, Scalar::one())] }
}

fn rmul_comb(
    comb: &[(u32, Scalar)],
    j: usize,
    f: &Mat,
    memo: &mut HashMap<(u32, usize), Vec<(u32, Scalar)>>,
) -> Vec<(u32, Scalar)> {
    let mut out: HashMap<u32, Scalar> = HashMap::new();
    for (m, c) in comb {
        for (m2, c2) in rmul(*m, j, f, memo) {
            let e = out.entry(m2).or_insert_with(Scalar::zero);
            *e += &(c * &c2);
        }
    }
    let mut v: Vec<(u32, Scalar)> = out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|e| e.0);
    v
}

/// Straightened form of `x_S * x_j`.
fn rmul(s: u32, j: usize, f: &Mat, memo: &mut HashMap<(u32, usize), Vec<(u32, Scalar)>>) -> Vec<(u32, Scalar)> {
    if let Some(v) = memo.get(&(s, j)) {
        return v.clone();
    }
    let out = if s == 0 {
        vec![(1u32 << j, Scalar::one())]
    } else {
        let last = 31 - s.leading_zeros() as usize;
        let rest = s & !(1u32 << last);
        if last < j {
            vec![(s | 1 << j, Scalar::one())]
        } else if last == j {
            vec![(rest, f.get(j, j))]
        } else {
            // x_rest x_last x_j = -(x_rest x_j) x_last + 2 f(last, j) x_rest
            let a = rmul(rest, j, f, memo);
            let mut v = rmul_comb(&a, last, f, memo);
            for e in v.iter_mut() {
                e.1 = -e.1.clone();
            }
            let two_f = Scalar::from_int(2) * f.get(last, j);
            if !two_f.is_zero() {
                v.push((rest, two_f));
            }
            let mut acc: HashMap<u32, Scalar> = HashMap::new();
            for (m, c) in v {
                let e = acc.entry(m).or_insert_with(Scalar::zero);
                *e += &c;
            }
            let mut v: Vec<(u32, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort_by_key(|e| e.0);
            v
        }
    };
    memo.insert((s, j), out.clone());
    out
}

/// Basis index of generator `x_j` inside [`clifford`].
pub fn clifford_generator_index(r: usize, j: usize) -> usize {
    clifford_monomials(r).iter().position(|m| *m == 1 << j).expect("generator")
}

/// Elements of parity `p` commuting (in the ungraded sense) with every basis
/// element.
fn ungraded_center(a: &AssocSuper, p: Parity) -> Vec<SVec> {
    let d = a.dim();
    let cand: Vec<usize> = (0..d).filter(|k| a.parity(*k) == p).collect();
    let mut ech = Echelon::new(cand.len());
    for b in 0..d {
        // sum_k z_k (k*b - b*k) = 0
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d];
        for (u, &k) in cand.iter().enumerate() {
            let diff = sv_axpy(&a.mult[k][b], &Scalar::from_int(-1), &a.mult[b][k]);
            for (t, c) in diff {
                cols[t].push((u, c));
            }
        }
        for row in cols {
            if !row.is_empty() {
                ech.insert(&sv_collect(row));
            }
        }
    }
    ech.complement_kernel().into_iter().map(|v| v.into_iter().map(|(u, c)| (cand[u], c)).collect()).collect()
}

/// Basis of `Z(|A|) ∩ A_1`.
pub fn odd_center(a: &AssocSuper) -> Vec<SVec> {
    ungraded_center(a, 1)
}

/// Radical of the trace form `(a, b) -> tr(L_{ab})`, which is the Jacobson
/// radical in characteristic zero.
pub fn trace_radical(a: &AssocSuper) -> Vec<SVec> {
    let d = a.dim();
    let tr: Vec<Scalar> = (0..d).map(|k| a.left_mult(k).trace()).collect();
    let rows: Vec<SVec> = (0..d)
        .map(|i| {
            sv_collect((0..d).flat_map(|j| {
                let t: Scalar = a.mult[i][j].iter().map(|(k, c)| c * &tr[*k]).sum();
                std::iter::once((j, t))
            }))
        })
        .collect();
    Mat::from_rows(d, rows).nullspace()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleType {
    TypeM(usize, usize),
    TypeQ(usize),
    NotSimple,
}

fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// Classification of a finite-dimensional associative superalgebra as
/// `M(m|n)` (with `m >= n`), `Q(m)` or not simple.
///
/// Simplicity is decided by a zero trace-form radical together with a
/// one-dimensional even part of the ungraded center.
pub fn classify_simple(a: &AssocSuper) -> Result<SimpleType> {
    if a.dim() == 0 || !trace_radical(a).is_empty() || ungraded_center(a, 0).len() != 1 {
        return Ok(SimpleType::NotSimple);
    }
    let bad = || Error::Domain(format!("simple algebra of dimension {} fits no normal form", a.dim()));
    if !odd_center(a).is_empty() {
        let m = isqrt(a.dim() / 2).filter(|m| 2 * m * m == a.dim() && a.space.even == m * m).ok_or_else(bad)?;
        return Ok(SimpleType::TypeQ(m));
    }
    let s = isqrt(a.dim()).ok_or_else(bad)?;
    let (e, o) = (a.space.even, a.space.odd);
    if e < o {
        return Err(bad());
    }
    let t = isqrt(e - o).ok_or_else(bad)?;
    if (s + t) % 2 != 0 || t > s {
        return Err(bad());
    }
    Ok(SimpleType::TypeM((s + t) / 2, (s - t) / 2))
}

/// Action of an associative superalgebra: one operator per basis element.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub space: GradedSpace,
    pub ops: Vec<Mat>,
}

impl ModuleAction {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Checks that the action is a parity-preserving unital homomorphism.
    pub fn is_homomorphism(&self, a: &AssocSuper) -> bool {
        if self.ops.len() != a.dim() {
            return false;
        }
        for (k, op) in self.ops.iter().enumerate() {
            if crate::graded::mat_parity(op, &self.space, &self.space).is_some_and(|p| p != a.parity(k)) {
                return false;
            }
        }
        if self.act(&a.unit) != Mat::identity(self.dim()) {
            return false;
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if self.ops[i].mul(&self.ops[j]) != self.act(&a.mult[i][j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn act(&self, v: &SVec) -> Mat {
        let n = self.dim();
        v.iter().fold(Mat::zeros(n, n), |acc, (k, c)| acc.axpy(c, &self.ops[*k]))
    }

    pub fn parity_ops(&self) -> Vec<(Mat, Parity)> {
        self.ops.iter().map(|m| (m.clone(), crate::graded::mat_parity(m, &self.space, &self.space).unwrap_or(0))).collect()
    }
}

/// Irreducible module of a nondegenerate Clifford algebra, given by the
/// action of the generators `x_1..x_r`.
pub fn clifford_generators_irrep(q: &QuadraticPair) -> Result<(GradedSpace, Vec<Mat>)> {
    let r = q.r;
    if q.is_degenerate() {
        return Err(Error::Domain("clifford_irrep needs a nondegenerate form".into()));
    }
    if r == 0 {
        return Ok((GradedSpace::new(1, 0), Vec::new()));
    }
    let (p, d) = congruence_diagonalize(&q.f);
    let v11 = GradedSpace::new(1, 1);
    let mut factors: Vec<Vec<Mat>> = Vec::new();
    let mut k = 0;
    while k + 1 < r {
        let (a, b) = (&d[k], &d[k + 1]);
        let qv = (-(b / a)).adjoin_sqrt();
        let y1 = Mat::from_dense(&[vec![Scalar::zero(), a.clone()], vec![Scalar::one(), Scalar::zero()]]);
        let y2 = Mat::from_dense(&[vec![Scalar::zero(), -(a * &qv)], vec![qv.clone(), Scalar::zero()]]);
        factors.push(vec![y1, y2]);
        k += 2;
    }
    if k < r {
        factors.push(vec![Mat::from_dense(&[vec![Scalar::zero(), d[k].clone()], vec![Scalar::one(), Scalar::zero()]])]);
    }
    // y operators on the graded tensor product of the factors
    let mut space = GradedSpace::new(1, 0);
    let mut ys: Vec<Mat> = Vec::new();
    for fac in &factors {
        let (ns, perm) = space.tensor(&v11);
        let id_f = Mat::identity(2);
        let mut new_ys: Vec<Mat> = ys.iter().map(|y| reindex(&koszul_kron(y, &space, &id_f, 0), &perm, &perm)).collect();
        let id_s = Mat::identity(space.dim());
        for y in fac {
            new_ys.push(reindex(&koszul_kron(&id_s, &space, y, 1), &perm, &perm));
        }
        ys = new_ys;
        space = ns;
    }
    // x_i = sum_k (P^{-1})_{ki} y_k
    let pinv = p.inverse().expect("congruence is invertible");
    let n = space.dim();
    let xs: Vec<Mat> = (0..r).map(|i| (0..r).fold(Mat::zeros(n, n), |acc, kk| acc.axpy(&pinv.get(kk, i), &ys[kk]))).collect();
    for i in 0..r {
        for j in 0..r {
            let ac = xs[i].mul(&xs[j]).add(&xs[j].mul(&xs[i]));
            if ac != Mat::scalar(n, &(Scalar::from_int(2) * q.f.get(i, j))) {
                return Err(Error::Domain("Clifford relations failed in constructed module".into()));
            }
        }
    }
    Ok((space, xs))
}

/// Irreducible module of `clifford(q)` with an operator for every basis
/// monomial.
pub fn clifford_irrep(q: &QuadraticPair) -> Result<ModuleAction> {
    let (space, xs) = clifford_generators_irrep(q)?;
    let n = space.dim();
    let ops = clifford_monomials(q.r)
        .into_iter()
        .map(|m| (0..q.r).filter(|j| m >> j & 1 == 1).fold(Mat::identity(n), |acc, j| acc.mul(&xs[j])))
        .collect();
    Ok(ModuleAction { space, ops })
}

/// Returns `(P, d)` with `P^T f P = diag(d)`.
pub fn congruence_diagonalize(f: &Mat) -> (Mat, Vec<Scalar>) {
    let r = f.nrows();
    let mut g = f.clone();
    let mut p = Mat::identity(r);
    for k in 0..r {
        if g.get(k, k).is_zero() {
            if let Some(j) = (k + 1..r).find(|j| !g.get(*j, *j).is_zero()) {
                let sw = swap_mat(r, k, j);
                g = sw.transpose().mul(&g).mul(&sw);
                p = p.mul(&sw);
            } else if let Some(j) = (k + 1..r).find(|j| !g.get(k, *j).is_zero()) {
                // e_k <- e_k + e_j gives diagonal entry 2 g_kj
                let t = Mat::identity(r).add(&Mat::unit(r, r, j, k));
                g = t.transpose().mul(&g).mul(&t);
                p = p.mul(&t);
            } else {
                continue;
            }
        }
        let piv = g.get(k, k);
        let mut t = Mat::identity(r);
        for j in k + 1..r {
            let c = g.get(k, j);
            if !c.is_zero() {
                t = t.add(&Mat::unit(r, r, k, j).scale(&-(&c / &piv)));
            }
        }
        g = t.transpose().mul(&g).mul(&t);
        p = p.mul(&t);
    }
    let d = (0..r).map(|i| g.get(i, i)).collect();
    (p, d)
}

fn swap_mat(r: usize, a: usize, b: usize) -> Mat {
    Mat::from_entries(
        r,
        r,
        (0..r).map(|i| {
            let j = if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            };
            (i, j, Scalar::one())
        }),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Density {
    Full,
    QComm,
    Smaller(usize),
}

impl Density {
    pub fn is_irreducible(&self) -> bool {
        !matches!(self, Density::Smaller(_))
    }
}

/// Span of all products of the operators, including the identity.
pub fn operator_closure(n: usize, ops: &[Mat]) -> Echelon {
    let mut gens = Echelon::new(n * n);
    let mut gen_mats = Vec::new();
    for o in ops {
        if gens.insert(&o.flatten()) {
            gen_mats.push(o.clone());
        }
    }
    let mut ech = Echelon::new(n * n);
    let id = Mat::identity(n);
    ech.insert(&id.flatten());
    let mut queue = vec![id];
    while let Some(b) = queue.pop() {
        for g in &gen_mats {
            let p = g.mul(&b);
            if ech.insert(&p.flatten()) {
                if ech.is_full() {
                    return ech;
                }
                queue.push(p);
            }
        }
    }
    ech
}

/// Irreducibility oracle by density of the operator closure.
pub fn density_type(space: &GradedSpace, ops: &[(Mat, Parity)]) -> Density {
    let n = space.dim();
    let mats: Vec<Mat> = ops.iter().map(|o| o.0.clone()).collect();
    let c = operator_closure(n, &mats);
    if c.is_full() {
        return Density::Full;
    }
    let d = c.rank();
    let m = space.even;
    if space.even == space.odd && d == 2 * m * m && m > 0 {
        let odd = commutant_general(space, ops, 1, true);
        if odd.len() == 1 {
            let sq = odd[0].mul(&odd[0]);
            let c0 = sq.get(0, 0);
            if !c0.is_zero() && sq == Mat::scalar(n, &c0) {
                return Density::QComm;
            }
        }
    }
    Density::Smaller(d)
}

pub fn density_of_action(act: &ModuleAction) -> Density {
    density_type(&act.space, &act.parity_ops())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::tower_scope;

    #[test]
    fn matrix_algebras() {
        let m11 = make_m(1, 1);
        assert_eq!((m11.dim(), m11.space.even), (4, 2));
        assert!(m11.check_axioms());
        let q1 = make_q(1);
        assert_eq!(q1.dim(), 2);
        let q2 = make_q(2);
        assert_eq!((q2.dim(), q2.space.even), (8, 4));
        assert!(q2.check_axioms());
        assert_eq!(classify_simple(&make_m(2, 1)).unwrap(), SimpleType::TypeM(2, 1));
        assert_eq!(classify_simple(&q2).unwrap(), SimpleType::TypeQ(2));
    }

    #[test]
    fn p_supercommutes_with_q() {
        let p = p_matrix(2);
        assert_eq!(p.mul(&p), Mat::identity(4).neg());
        let b = Mat::from_entries(4, 4, [(0, 3, Scalar::one()), (2, 1, Scalar::one())]);
        // odd T: TP = -PT
        assert_eq!(b.mul(&p), p.mul(&b).neg());
    }

    #[test]
    fn clifford_small() {
        let c0 = clifford(&QuadraticPair::identity(0));
        assert_eq!(c0.dim(), 1);
        let c1 = clifford(&QuadraticPair::identity(1));
        assert!(c1.check_axioms());
        assert_eq!(classify_simple(&c1).unwrap(), SimpleType::TypeQ(1));
        assert_eq!(odd_center(&c1).len(), 1);
        let c2 = clifford(&QuadraticPair::identity(2));
        assert_eq!(classify_simple(&c2).unwrap(), SimpleType::TypeM(1, 1));
        let c3 = clifford(&QuadraticPair::identity(3));
        assert!(c3.check_axioms());
        assert_eq!(classify_simple(&c3).unwrap(), SimpleType::TypeQ(2));
        let deg = clifford(&QuadraticPair::new(Mat::zeros(1, 1)).unwrap());
        assert_eq!(classify_simple(&deg).unwrap(), SimpleType::NotSimple);
        assert_eq!(odd_center(&make_m(1, 1)).len(), 0);
        assert_eq!(odd_center(&make_q(1)).len(), 1);
    }

    #[test]
    fn clifford_irreps() {
        tower_scope(|| {
            for r in 1..=4 {
                let q = QuadraticPair::identity(r);
                let act = clifford_irrep(&q).unwrap();
                assert_eq!(act.dim(), 1 << r.div_ceil(2));
                assert!(act.is_homomorphism(&clifford(&q)));
                let dt = density_of_action(&act);
                assert_eq!(dt, if r % 2 == 1 { Density::QComm } else { Density::Full });
            }
            let hyper = QuadraticPair::new(Mat::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
            let act = clifford_irrep(&hyper).unwrap();
            assert!(act.is_homomorphism(&clifford(&hyper)));
            assert!(clifford_irrep(&QuadraticPair::new(Mat::zeros(2, 2)).unwrap()).is_err());
        });
    }

    #[test]
    fn density_examples() {
        let v = GradedSpace::new(1, 1);
        let m11: Vec<(Mat, Parity)> =
            (0..2).flat_map(|i| (0..2).map(move |j| (Mat::unit(2, 2, i, j), ((i != j) as Parity)))).collect();
        assert_eq!(density_type(&v, &m11), Density::Full);
        let q1 = vec![(Mat::identity(2), 0), (Mat::from_ints(&[&[0, 1], &[1, 0]]), 1)];
        assert_eq!(density_type(&v, &q1), Density::QComm);
    }

    #[test]
    fn q_tensor_q1_is_type_m() {
        assert_eq!(classify_simple(&make_q(1).tensor(&make_q(1))).unwrap(), SimpleType::TypeM(1, 1));
        let t = make_q(2).tensor(&make_q(1));
        assert!(t.check_axioms());
        assert_eq!(classify_simple(&t).unwrap(), SimpleType::TypeM(2, 2));
    }
}

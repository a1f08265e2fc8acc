//! Irreducible finite-dimensional modules of `𝔥⊗A`, where `𝔥 = h̄_0 ⊕ h̄_1`
//! is the Cartan subalgebra of `q(n)`.
//!
//! The basis of `𝔥` is `h_1..h_n, h'_1..h'_n`, so `𝔥⊗A` has `h_k⊗a_j` at
//! `k*dim(A) + j` and `h'_k⊗a_j` at `(n+k)*dim(A) + j`. A functional `ψ` on
//! `h̄_0⊗A` is stored by its values on `h_k⊗a_j` at `k*dim(A) + j`.

use crate::assoc::{clifford_generators_irrep, QuadraticPair};
use crate::coeff::{CoeffAlgebra, Ideal, QuotientMap};
use crate::error::{Error, Result};
use crate::graded::{commutant_general, GradedSpace, Parity};
use crate::lie::{find_isomorphism, LieModule, LieSuper};
use crate::linalg::{sv_get, Echelon, Mat, SVec};
use crate::mapsuper::{largest_ideal_in, tensor_lie, MapSuper};
use crate::queer::Queer;
use crate::scalar::Scalar;

/// The Cartan subalgebra `𝔥` of `q(n)` with basis `h_k, h'_k`.
pub fn cartan_subalgebra(q: &Queer) -> LieSuper {
    let idx = q.cartan();
    let basis: Vec<SVec> = idx.iter().map(|i| vec![(*i, Scalar::one())]).collect();
    let labels = idx.iter().map(|i| q.g.space.labels[*i].clone()).collect();
    q.g.subalgebra(&basis, labels).expect("the Cartan subalgebra closes")
}

/// `𝔥⊗A`.
pub fn cartan_map(q: &Queer, a: &CoeffAlgebra) -> MapSuper {
    tensor_lie(&cartan_subalgebra(q), a)
}

/// `[h'_k, h'_l]` in coordinates of `h̄_0`.
fn odd_brackets(n: usize) -> Vec<Vec<SVec>> {
    let q = Queer::new(n);
    (0..n)
        .map(|k| {
            (0..n)
                .map(|l| {
                    let b = q.g.bracket(&vec![(q.h_odd(k), Scalar::one())], &vec![(q.h_odd(l), Scalar::one())]);
                    debug_assert!(b.iter().all(|(m, _)| *m < n));
                    b
                })
                .collect()
        })
        .collect()
}

/// A linear functional on `h̄_0⊗A`, with its ideal `I_ψ`.
#[derive(Clone, Debug)]
pub struct PsiFunctional {
    pub n: usize,
    pub a: CoeffAlgebra,
    pub values: Vec<Scalar>,
    pub ideal: Ideal,
}

impl PartialEq for PsiFunctional {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.values == o.values && self.a.mult == o.a.mult
    }
}

impl PsiFunctional {
    pub fn new(n: usize, a: &CoeffAlgebra, values: Vec<Scalar>) -> Result<PsiFunctional> {
        if values.len() != n * a.dim() {
            return Err(Error::Dimension(format!("ψ needs {} values, got {}", n * a.dim(), values.len())));
        }
        let ideal = i_psi_of(n, a, &values);
        Ok(PsiFunctional { n, a: a.clone(), values, ideal })
    }

    pub fn zero(n: usize, a: &CoeffAlgebra) -> PsiFunctional {
        PsiFunctional::new(n, a, vec![Scalar::zero(); n * a.dim()]).expect("sizes match")
    }

    /// `λ∘ev_p` for a weight `λ` given by its values on `h_k`.
    pub fn evaluation(a: &CoeffAlgebra, lambda: &[Scalar], point: usize) -> Result<PsiFunctional> {
        let chi = &a.points.get(point).ok_or_else(|| Error::Domain(format!("unknown point index {point}")))?.chi;
        let values = lambda.iter().flat_map(|l| chi.iter().map(move |c| l * c)).collect();
        PsiFunctional::new(lambda.len(), a, values)
    }

    /// From `(h-label, A-label, value)` triples; labels `h1..hn` and the
    /// basis labels of `A`.
    pub fn from_triples(n: usize, a: &CoeffAlgebra, triples: &[(String, String, Scalar)]) -> Result<PsiFunctional> {
        let mut values = vec![Scalar::zero(); n * a.dim()];
        for (h, lab, c) in triples {
            let k = h
                .strip_prefix('h')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|k| (1..=n).contains(k))
                .ok_or_else(|| Error::Parse(format!("unknown Cartan label {h}")))?;
            let j =
                a.labels.iter().position(|l| l == lab).ok_or_else(|| Error::Parse(format!("unknown basis label {lab} of A")))?;
            values[(k - 1) * a.dim() + j] += c;
        }
        PsiFunctional::new(n, a, values)
    }

    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// `ψ(h_k⊗f)`.
    pub fn eval(&self, k: usize, f: &SVec) -> Scalar {
        f.iter().map(|(j, c)| c * &self.values[k * self.dim_a() + j]).sum()
    }

    /// `ψ` on an element of `h̄_0⊗A` in coordinates `k*dim(A) + j`.
    pub fn eval_vec(&self, v: &SVec) -> Scalar {
        v.iter().map(|(i, c)| c * &self.values[*i]).sum()
    }

    /// `λ = ψ|_{h̄_0}`: values `ψ(h_k⊗1)`.
    pub fn lambda(&self) -> Vec<Scalar> {
        let one = self.a.one();
        (0..self.n).map(|k| self.eval(k, &one)).collect()
    }

    pub fn add(&self, o: &PsiFunctional) -> Result<PsiFunctional> {
        if self.n != o.n || self.a.mult != o.a.mult {
            return Err(Error::Domain("functionals live on different algebras".into()));
        }
        PsiFunctional::new(self.n, &self.a, self.values.iter().zip(&o.values).map(|(x, y)| x + y).collect())
    }

    /// Whether `ψ(h̄_0⊗I) = 0`.
    pub fn kills(&self, i: &Ideal) -> bool {
        i.basis.iter().all(|v| (0..self.n).all(|k| self.eval(k, v).is_zero()))
    }

    /// Points of `A` in the support of `I_ψ`.
    pub fn support(&self) -> Vec<usize> {
        self.a.support(&self.ideal)
    }
}

/// `{a : ψ(h̄_0⊗a) = 0}`.
fn psi_kernel(n: usize, a: &CoeffAlgebra, values: &[Scalar]) -> Vec<SVec> {
    let d = a.dim();
    let m = Mat::from_entries(
        n,
        d,
        (0..n).flat_map(|k| (0..d).map(move |j| (k, j))).filter_map(|(k, j)| {
            let c = &values[k * d + j];
            (!c.is_zero()).then(|| (k, j, c.clone()))
        }),
    );
    m.nullspace()
}

fn i_psi_of(n: usize, a: &CoeffAlgebra, values: &[Scalar]) -> Ideal {
    largest_ideal_in(a, &psi_kernel(n, a, values))
}

/// The largest ideal `I` with `ψ(h̄_0⊗I) = 0`.
pub fn i_psi(psi: &PsiFunctional) -> Ideal {
    psi.ideal.clone()
}

/// The form `f_ψ(x, y) = ψ([x, y])` on `𝔥_ψ = h̄_1⊗A/I_ψ` and its reduction.
#[derive(Clone, Debug)]
pub struct CliffordData {
    pub ideal: Ideal,
    /// `A/I_ψ`.
    pub quotient: CoeffAlgebra,
    pub qmap: QuotientMap,
    /// Gram matrix of `f_ψ` on the basis `h'_k⊗b_j` at `k*dim(B) + j`.
    pub gram: Mat,
    /// Basis of the radical `𝔥_ψ^⊥`.
    pub radical: Vec<SVec>,
    /// Basis elements of `𝔥_ψ` whose classes span `𝔥_ψ/𝔥_ψ^⊥`.
    pub selected: Vec<usize>,
    /// Element of `h̄_0⊗A` with `ψ(z) = 1`.
    pub z: SVec,
    pub rank: usize,
}

impl CliffordData {
    pub fn dim_h_psi(&self) -> usize {
        self.gram.nrows()
    }

    /// Coordinates of `h'_k⊗a` in `𝔥_ψ`.
    pub fn odd_coords(&self, k: usize, a: &SVec) -> SVec {
        let db = self.quotient.dim();
        self.qmap.project(a).into_iter().map(|(j, c)| (k * db + j, c)).collect()
    }

    /// Coefficients on the selected basis of the class of `x` modulo the
    /// radical.
    pub fn reduce(&self, x: &SVec) -> SVec {
        let s = &self.selected;
        let gss = self.gram.submatrix(s, s);
        let gx: SVec = s
            .iter()
            .enumerate()
            .filter_map(|(u, &i)| {
                let c: Scalar = x.iter().map(|(j, v)| v * &self.gram.get(i, *j)).sum();
                (!c.is_zero()).then_some((u, c))
            })
            .collect();
        gss.solve(&gx).expect("the selected block is nondegenerate")
    }
}

/// The data of `f_ψ` for `ψ != 0`.
pub fn build_clifford_data(psi: &PsiFunctional) -> Result<CliffordData> {
    if psi.is_zero() {
        return Err(Error::Domain("ψ = 0 gives the trivial module".into()));
    }
    let n = psi.n;
    let a = &psi.a;
    let (b, qmap) = a.quotient_algebra(&psi.ideal);
    let db = b.dim();
    let hh = odd_brackets(n);
    let lifts: Vec<SVec> = (0..db).map(|j| vec![(qmap.free[j], Scalar::one())]).collect();
    let dim = n * db;
    let mut e = Vec::new();
    for (k, row) in hh.iter().enumerate() {
        for (l, terms) in row.iter().enumerate() {
            for i in 0..db {
                for j in 0..db {
                    let prod = a.mul(&lifts[i], &lifts[j]);
                    let c: Scalar = terms.iter().map(|(m, w)| w * &psi.eval(*m, &prod)).sum();
                    if !c.is_zero() {
                        e.push((k * db + i, l * db + j, c));
                    }
                }
            }
        }
    }
    let gram = Mat::from_entries(dim, dim, e);
    let radical = gram.nullspace();
    let mut ech = Echelon::new(dim);
    let selected: Vec<usize> = (0..dim).filter(|i| ech.insert(gram.row(*i))).collect();
    let rank = selected.len();
    let (k0, j0) = (0..n)
        .flat_map(|k| (0..a.dim()).map(move |j| (k, j)))
        .find(|(k, j)| !psi.values[k * a.dim() + j].is_zero())
        .expect("ψ is nonzero");
    let z = vec![(k0 * a.dim() + j0, psi.values[k0 * a.dim() + j0].inv().expect("nonzero"))];
    Ok(CliffordData { ideal: psi.ideal.clone(), quotient: b, qmap, gram, radical, selected, z, rank })
}

/// `H(ψ)` as a module of `𝔥⊗A`.
#[derive(Clone, Debug)]
pub struct CartanModule {
    pub psi: PsiFunctional,
    pub module: LieModule,
    pub rank: usize,
    /// Odd endomorphism with `φ^2 = -1` supercommuting with the action, for
    /// odd rank.
    pub phi: Option<Mat>,
}

impl CartanModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn is_type_q(&self) -> bool {
        self.phi.is_some()
    }

    /// Operator of `h_k⊗a_j` (`odd = false`) or `h'_k⊗a_j` (`odd = true`).
    pub fn op(&self, odd: bool, k: usize, j: usize) -> &Mat {
        let n = self.psi.n;
        &self.module.ops[(k + if odd { n } else { 0 }) * self.psi.dim_a() + j]
    }
}

/// The irreducible module `H(ψ)`.
pub fn build_h(psi: &PsiFunctional) -> Result<CartanModule> {
    build_h_ordered(psi, None)
}

/// `H(ψ)` with the Clifford generators taken in the given order of the
/// selected basis. Different orders give isomorphic modules.
pub fn build_h_ordered(psi: &PsiFunctional, order: Option<&[usize]>) -> Result<CartanModule> {
    let n = psi.n;
    let da = psi.dim_a();
    let nops = 2 * n * da;
    if psi.is_zero() {
        let space = GradedSpace::new(1, 0);
        return Ok(CartanModule {
            psi: psi.clone(),
            module: LieModule { space, ops: vec![Mat::zeros(1, 1); nops] },
            rank: 0,
            phi: None,
        });
    }
    let data = build_clifford_data(psi)?;
    let r = data.rank;
    let order: Vec<usize> = match order {
        Some(o) => {
            let mut s = o.to_vec();
            s.sort_unstable();
            if s != (0..r).collect::<Vec<_>>() {
                return Err(Error::Domain("order must be a permutation of the selected basis".into()));
            }
            o.to_vec()
        }
        None => (0..r).collect(),
    };
    let sel: Vec<usize> = order.iter().map(|u| data.selected[*u]).collect();
    let half = Scalar::frac(1, 2);
    let f = data.gram.submatrix(&sel, &sel).scale(&half);
    let (space, xs) = clifford_generators_irrep(&QuadraticPair::new(f)?)?;
    let dim = space.dim();
    // position in `xs` of each selected index
    let mut slot = vec![0; r];
    for (pos, u) in order.iter().enumerate() {
        slot[*u] = pos;
    }
    let mut ops = Vec::with_capacity(nops);
    for k in 0..n {
        for j in 0..da {
            ops.push(Mat::scalar(dim, &psi.values[k * da + j]));
        }
    }
    for k in 0..n {
        for j in 0..da {
            let x = data.odd_coords(k, &vec![(j, Scalar::one())]);
            let c = if x.is_empty() { Vec::new() } else { data.reduce(&x) };
            ops.push(c.iter().fold(Mat::zeros(dim, dim), |acc, (u, v)| acc.axpy(v, &xs[slot[*u]])));
        }
    }
    let module = LieModule { space, ops };
    let phi = if r % 2 == 1 { Some(odd_involution(&module)?) } else { None };
    Ok(CartanModule { psi: psi.clone(), module, rank: r, phi })
}

/// The odd operator `φ` with `φ^2 = -1` supercommuting with the action.
fn odd_involution(m: &LieModule) -> Result<Mat> {
    let odd = commutant_general(&m.space, &m.parity_ops(), 1, true);
    let [phi] = odd.as_slice() else {
        return Err(Error::Domain(format!("odd commutant has dimension {}", odd.len())));
    };
    let sq = phi.mul(phi);
    let c = sq.get(0, 0);
    if c.is_zero() || sq != Mat::scalar(m.dim(), &c) {
        return Err(Error::Domain("odd commutant does not square to a scalar".into()));
    }
    let s = (-c.inv().expect("nonzero")).adjoin_sqrt();
    Ok(phi.scale(&s))
}

/// Result of [`classify_cartan_module`].
#[derive(Clone, Debug)]
pub struct CartanClass {
    pub psi: PsiFunctional,
    pub h: CartanModule,
    /// Isomorphism `V -> H(ψ)` (possibly odd, i.e. onto the parity shift).
    pub witness: Mat,
    pub witness_parity: Parity,
}

/// Reads `ψ` off the central action of `h̄_0⊗A` on an irreducible module and
/// matches it with `H(ψ)`.
pub fn classify_cartan_module(n: usize, a: &CoeffAlgebra, v: &LieModule) -> Result<CartanClass> {
    let da = a.dim();
    if v.ops.len() != 2 * n * da {
        return Err(Error::Dimension(format!("expected {} operators, got {}", 2 * n * da, v.ops.len())));
    }
    if !v.density().is_irreducible() {
        return Err(Error::Domain("module is not irreducible".into()));
    }
    let d = v.dim();
    let mut values = Vec::with_capacity(n * da);
    for op in &v.ops[..n * da] {
        let c = op.get(0, 0);
        if *op != Mat::scalar(d, &c) {
            return Err(Error::Domain("h̄_0⊗A does not act by scalars".into()));
        }
        values.push(c);
    }
    let psi = PsiFunctional::new(n, a, values)?;
    let h = build_h(&psi)?;
    let (witness, witness_parity) =
        find_isomorphism(v, &h.module).ok_or_else(|| Error::Domain("no isomorphism with H(ψ)".into()))?;
    Ok(CartanClass { psi, h, witness, witness_parity })
}

/// The module `U(𝔥⊗B)⊗_{U(h̄_0⊗B)} C_ψ` for `B = A/I`, pulled back to
/// `𝔥⊗A`; `ψ` must vanish on `h̄_0⊗I`. It is the Clifford algebra of
/// `(h̄_1⊗B, ½f_ψ)` acting on itself, of dimension `2^{dim h̄_1⊗B}`.
pub fn induced_module(psi: &PsiFunctional, i: &Ideal) -> Result<LieModule> {
    if !psi.kills(i) {
        return Err(Error::Domain("ψ does not vanish on h̄_0⊗I".into()));
    }
    let n = psi.n;
    let a = &psi.a;
    let da = a.dim();
    let (b, qmap) = a.quotient_algebra(i);
    let db = b.dim();
    let hh = odd_brackets(n);
    let m = n * db;
    if m > 20 {
        return Err(Error::Unsupported(format!("induced module of dimension 2^{m}")));
    }
    let lifts: Vec<SVec> = (0..db).map(|j| vec![(qmap.free[j], Scalar::one())]).collect();
    let half = Scalar::frac(1, 2);
    let f = Mat::from_entries(
        m,
        m,
        (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter_map(|(x, y)| {
            let (k, i1, l, j1) = (x / db, x % db, y / db, y % db);
            let prod = a.mul(&lifts[i1], &lifts[j1]);
            let c: Scalar = hh[k][l].iter().map(|(t, w)| w * &psi.eval(*t, &prod)).sum();
            (!c.is_zero()).then(|| (x, y, &c * &half))
        }),
    );
    let cl = crate::assoc::clifford(&QuadraticPair::new(f)?);
    let gens: Vec<Mat> = (0..m).map(|x| cl.left_mult(crate::assoc::clifford_generator_index(m, x))).collect();
    let dim = cl.dim();
    let mut ops = Vec::with_capacity(2 * n * da);
    for k in 0..n {
        for j in 0..da {
            ops.push(Mat::scalar(dim, &psi.values[k * da + j]));
        }
    }
    for k in 0..n {
        for j in 0..da {
            let pj = qmap.project(&vec![(j, Scalar::one())]);
            ops.push(pj.iter().fold(Mat::zeros(dim, dim), |acc, (t, c)| acc.axpy(c, &gens[k * db + t])));
        }
    }
    Ok(LieModule { space: cl.space.clone(), ops })
}

/// Whether every operator of `h'_k⊗I` vanishes on `H(ψ)`.
pub fn odd_part_kills(h: &CartanModule, i: &Ideal) -> bool {
    let n = h.psi.n;
    (0..n).all(|k| {
        i.basis.iter().all(|v| {
            let op = v.iter().fold(Mat::zeros(h.dim(), h.dim()), |acc, (j, c)| acc.axpy(c, h.op(true, k, *j)));
            op.is_zero()
        })
    })
}

/// `ψ([x, x])` for `x = h'_k⊗f`, computed from the bracket of `𝔥⊗A`.
pub fn psi_of_square(psi: &PsiFunctional, k: usize, f: &SVec) -> Scalar {
    let hh = odd_brackets(psi.n);
    let ff = psi.a.mul(f, f);
    hh[k][k].iter().map(|(m, w)| w * &psi.eval(*m, &ff)).sum()
}

/// Coefficient of `h_m` in `[h'_k, h'_l]`.
pub fn odd_bracket_coeff(n: usize, k: usize, l: usize, m: usize) -> Scalar {
    sv_get(&odd_brackets(n)[k][l], m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::Density;
    use crate::scalar::tower_scope;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|x| Scalar::from_int(*x)).collect()
    }

    fn two_point() -> CoeffAlgebra {
        // C[t]/(t^2 - 1), points t = 1 and t = -1
        CoeffAlgebra::poly_quotient(&ints(&[-1, 0, 1]), &ints(&[1, -1])).unwrap()
    }

    fn omega() -> Scalar {
        (Scalar::from_int(-1) + Scalar::from_int(-3).adjoin_sqrt()) * Scalar::frac(1, 2)
    }

    fn is_module(q: &Queer, a: &CoeffAlgebra, m: &LieModule) -> bool {
        m.is_module_of(&cartan_map(q, a).g)
    }

    #[test]
    fn i_psi_examples() {
        let a = two_point();
        assert!(PsiFunctional::zero(2, &a).ideal.is_whole());
        let p0 = a.point_index("(t-(1))").unwrap();
        let psi = PsiFunctional::evaluation(&a, &ints(&[1, 2]), p0).unwrap();
        // I_ψ = (t-1), the maximal ideal of the support point
        let t_minus_1 = vec![(0, Scalar::from_int(-1)), (1, Scalar::one())];
        assert_eq!(psi.ideal, a.ideal(&[t_minus_1]));
        assert_eq!(psi.support(), vec![p0]);
        assert!(psi.kills(&psi.ideal));
        assert!(!psi.kills(&a.whole()));
        let psi2 = psi.add(&PsiFunctional::evaluation(&a, &ints(&[3, 1]), 1 - p0).unwrap()).unwrap();
        assert!(psi2.ideal.is_zero());
    }

    #[test]
    fn i_psi_is_largest() {
        let a = two_point();
        let psi = PsiFunctional::evaluation(&a, &ints(&[1, 0]), 0).unwrap();
        // every ideal killed by ψ lies in I_ψ
        for i in [a.zero_ideal(), a.max_ideal(0), a.max_ideal(1), a.whole()] {
            if psi.kills(&i) {
                assert!(i.is_subset(&psi.ideal));
            }
        }
    }

    #[test]
    fn odd_bracket_table() {
        // [h'_1, h'_1] = 2(e11 + e22) - (4/3) I = (2/3) h_1 + (4/3) h_2 in q(2)
        assert_eq!(odd_bracket_coeff(2, 0, 0, 0), Scalar::frac(2, 3));
        assert_eq!(odd_bracket_coeff(2, 0, 0, 1), Scalar::frac(4, 3));
        assert_eq!(odd_bracket_coeff(2, 1, 1, 0), Scalar::frac(-4, 3));
        assert_eq!(odd_bracket_coeff(2, 0, 1, 1), Scalar::frac(-2, 3));
        assert_eq!(odd_bracket_coeff(1, 0, 0, 0), Scalar::zero());
    }

    #[test]
    fn rank_examples() {
        tower_scope(|| {
            let q = Queer::new(2);
            let c = CoeffAlgebra::complex();
            // λ = ε1 - ε3 gives λ(h_1) = λ(h_2) = 1
            let psi = PsiFunctional::new(2, &c, ints(&[1, 1])).unwrap();
            let data = build_clifford_data(&psi).unwrap();
            assert_eq!(data.gram.to_dense(), vec![ints(&[2, 0]), ints(&[0, -2])]);
            assert_eq!(data.rank, 2);
            let h = build_h(&psi).unwrap();
            assert_eq!(h.dim(), 2);
            assert!(!h.is_type_q());
            assert!(is_module(&q, &c, &h.module));
            // det f_ψ = -(4/3)(a^2 + ab + b^2) vanishes at b = ωa
            let psi = PsiFunctional::new(2, &c, vec![Scalar::one(), omega()]).unwrap();
            let data = build_clifford_data(&psi).unwrap();
            assert_eq!(data.rank, 1);
            let h = build_h(&psi).unwrap();
            assert_eq!(h.dim(), 2);
            assert!(h.is_type_q());
            let phi = h.phi.as_ref().unwrap();
            assert_eq!(phi.mul(phi), Mat::scalar(2, &Scalar::from_int(-1)));
            assert!(is_module(&q, &c, &h.module));
            assert_eq!(h.module.density(), Density::QComm);
        });
    }

    #[test]
    fn two_point_rank_adds() {
        tower_scope(|| {
            let q = Queer::new(2);
            let a = two_point();
            let l1 = ints(&[1, 1]);
            let l2 = vec![Scalar::one(), omega()];
            let r1 = build_clifford_data(&PsiFunctional::new(2, &CoeffAlgebra::complex(), l1.clone()).unwrap()).unwrap().rank;
            let r2 = build_clifford_data(&PsiFunctional::new(2, &CoeffAlgebra::complex(), l2.clone()).unwrap()).unwrap().rank;
            let psi =
                PsiFunctional::evaluation(&a, &l1, 0).unwrap().add(&PsiFunctional::evaluation(&a, &l2, 1).unwrap()).unwrap();
            let h = build_h(&psi).unwrap();
            assert_eq!(h.rank, r1 + r2);
            assert_eq!(h.dim(), 4);
            assert!(h.is_type_q());
            assert!(is_module(&q, &a, &h.module));
            assert!(h.module.density().is_irreducible());
        });
    }

    #[test]
    fn trivial_and_degenerate() {
        let q = Queer::new(1);
        let c = CoeffAlgebra::complex();
        let h = build_h(&PsiFunctional::zero(1, &c)).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.module.ops.iter().all(Mat::is_zero));
        // in q(1) the odd Cartan elements anticommute to 0
        let psi = PsiFunctional::new(1, &c, ints(&[5])).unwrap();
        let h = build_h(&psi).unwrap();
        assert_eq!(h.rank, 0);
        assert_eq!(h.dim(), 1);
        assert!(is_module(&q, &c, &h.module));
    }

    #[test]
    fn square_is_half_bracket() {
        tower_scope(|| {
            let a = two_point();
            let psi = PsiFunctional::evaluation(&a, &ints(&[2, 1]), 0)
                .unwrap()
                .add(&PsiFunctional::evaluation(&a, &ints(&[1, 3]), 1).unwrap())
                .unwrap();
            let h = build_h(&psi).unwrap();
            let half = Scalar::frac(1, 2);
            for k in 0..2 {
                for j in 0..2 {
                    let x = h.op(true, k, j);
                    let f = vec![(j, Scalar::one())];
                    assert_eq!(x.mul(x), Mat::scalar(h.dim(), &(&half * &psi_of_square(&psi, k, &f))));
                }
            }
        });
    }

    #[test]
    fn radical_acts_by_zero() {
        tower_scope(|| {
            // A = C[t]/(t^2): t generates a radical direction
            let a = CoeffAlgebra::poly_quotient(&ints(&[0, 0, 1]), &ints(&[0, 0])).unwrap();
            let psi = PsiFunctional::new(2, &a, ints(&[1, 0, 1, 0])).unwrap();
            let data = build_clifford_data(&psi).unwrap();
            assert!(psi.ideal.dim() == 1);
            assert_eq!(data.rank, 2);
            let h = build_h(&psi).unwrap();
            assert!(odd_part_kills(&h, &psi.ideal));
            let psi = PsiFunctional::new(2, &a, ints(&[0, 1, 0, 1])).unwrap();
            assert!(psi.ideal.is_zero());
            let data = build_clifford_data(&psi).unwrap();
            // f_ψ pairs h'⊗1 with h'⊗t, and h'⊗t with itself vanishes
            assert_eq!(data.rank, 4);
            assert!(data.radical.is_empty());
            assert_eq!(build_h(&psi).unwrap().dim(), 4);
        });
    }

    #[test]
    fn classify_roundtrip() {
        tower_scope(|| {
            let a = two_point();
            let psi = PsiFunctional::evaluation(&a, &ints(&[1, 1]), 0).unwrap();
            let h = build_h(&psi).unwrap();
            let cls = classify_cartan_module(2, &a, &h.module).unwrap();
            assert_eq!(cls.psi, psi);
            assert_eq!(cls.witness_parity, 0);
            // conjugate by a permutation-like even change of basis
            let s = Mat::from_ints(&[&[2, 0], &[0, 1]]);
            let si = s.inverse().unwrap();
            let conj = LieModule { space: h.module.space.clone(), ops: h.module.ops.iter().map(|o| si.mul(o).mul(&s)).collect() };
            let cls = classify_cartan_module(2, &a, &conj).unwrap();
            assert_eq!(cls.psi, psi);
            for (x, y) in conj.ops.iter().zip(&cls.h.module.ops) {
                assert_eq!(cls.witness.mul(x), y.mul(&cls.witness));
            }
            // H ⊕ H is rejected
            let (sp, _) = GradedSpace::direct_sum(&[&h.module.space, &h.module.space]);
            let dbl =
                LieModule { space: sp, ops: h.module.ops.iter().map(|o| Mat::block_diag(&[o.clone(), o.clone()])).collect() };
            assert!(classify_cartan_module(2, &a, &dbl).is_err());
        });
    }

    #[test]
    fn pivot_order_independence() {
        tower_scope(|| {
            let a = two_point();
            let psi = PsiFunctional::evaluation(&a, &ints(&[2, 1]), 0)
                .unwrap()
                .add(&PsiFunctional::evaluation(&a, &ints(&[1, 1]), 1).unwrap())
                .unwrap();
            let h1 = build_h(&psi).unwrap();
            let r = h1.rank;
            let rev: Vec<usize> = (0..r).rev().collect();
            let h2 = build_h_ordered(&psi, Some(&rev)).unwrap();
            assert!(find_isomorphism(&h1.module, &h2.module).is_some());
        });
    }

    #[test]
    fn induced_bound() {
        tower_scope(|| {
            let a = two_point();
            let psi = PsiFunctional::evaluation(&a, &ints(&[1, 1]), 0).unwrap();
            let ind = induced_module(&psi, &psi.ideal).unwrap();
            assert_eq!(ind.dim(), 4);
            assert!(is_module(&Queer::new(2), &a, &ind));
            let h = build_h(&psi).unwrap();
            // H(ψ) is a quotient of the induced module
            assert!(!crate::lie::hom_space(&ind, &h.module, 0).is_empty());
        });
    }
}

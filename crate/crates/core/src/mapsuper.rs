//! Map superalgebras `g⊗A`, their Γ-invariant subalgebras, evaluation maps
//! and annihilators of modules.
//!
//! The basis of `g⊗A` is ordered with the `g` index major: `x_i⊗a_j` sits at
//! `i*dim(A) + j`. Since `A` is even and the basis of `g` lists even elements
//! first, this ordering is parity sorted.

use crate::coeff::{CoeffAlgebra, GammaAction, Ideal};
use crate::error::{Error, Result};
use crate::lie::{LieModule, LieSuper};
use crate::linalg::{sv_collect, BasisCoords, Echelon, Mat, SVec};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct MapSuper {
    pub base: LieSuper,
    pub a: CoeffAlgebra,
    pub g: LieSuper,
}

impl MapSuper {
    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    pub fn index(&self, x: usize, a: usize) -> usize {
        x * self.a.dim() + a
    }

    /// `(x, a)` of a basis index.
    pub fn split(&self, k: usize) -> (usize, usize) {
        (k / self.a.dim(), k % self.a.dim())
    }

    /// Element `x⊗f` for `x` in the base algebra and `f` in `A`.
    pub fn elem(&self, x: &SVec, f: &SVec) -> SVec {
        let mut t = Vec::new();
        for (i, c) in x {
            for (j, d) in f {
                t.push((self.index(*i, *j), c * d));
            }
        }
        sv_collect(t)
    }

    /// Indices `x⊗a_j` for `x` in a list of base indices.
    pub fn tensor_indices(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter().flat_map(|x| (0..self.a.dim()).map(move |j| (*x, j))).map(|(x, j)| self.index(x, j)).collect()
    }

    /// Action of an automorphism pair `(γ_g, γ_A)` on `g⊗A`.
    pub fn automorphism(&self, on_g: &Mat, on_a: &Mat) -> Mat {
        on_g.kron(on_a)
    }

    /// Averaging projector `(1/|Γ|) Σ_γ γ`.
    pub fn averaging(&self, act: &GammaAction) -> Mat {
        let d = self.g.dim();
        let elems = act.elements();
        let sum = elems.iter().fold(Mat::zeros(d, d), |acc, e| {
            acc.add(&self.automorphism(&act.element_on_g(e, self.base.dim()), &act.element_on_a(e, self.a.dim())))
        });
        sum.scale(&Scalar::frac(1, elems.len() as i64))
    }

    /// Fixed-point subalgebra `(g⊗A)^Γ`.
    pub fn invariants(&self, act: &GammaAction) -> Result<InvariantSub> {
        let p = self.averaging(act);
        let d = self.g.dim();
        let mut e = Echelon::new(d);
        for j in 0..d {
            e.insert(&p.col(j));
        }
        let basis = e.basis();
        let labels = basis.iter().map(|v| self.describe(v)).collect();
        let sub = self.g.subalgebra(&basis, labels)?;
        // subalgebra() reorders by parity; recover the sorted basis
        let pars: Vec<u8> = basis.iter().map(|v| self.g.space.vector_parity(v).unwrap_or(0)).collect();
        let perm = crate::graded::parity_sort(&pars);
        let mut sorted = vec![Vec::new(); basis.len()];
        for (i, v) in basis.into_iter().enumerate() {
            sorted[perm[i]] = v;
        }
        let coords = BasisCoords::new(d, &sorted);
        Ok(InvariantSub { g: sub, basis: sorted, coords, projector: p })
    }

    pub fn describe(&self, v: &SVec) -> String {
        let terms: Vec<String> = v
            .iter()
            .map(|(k, c)| {
                let (x, a) = self.split(*k);
                format!("({c}){}⊗{}", self.base.space.labels[x], self.a.labels[a])
            })
            .collect();
        terms.join(" + ")
    }

    /// Evaluation `g⊗A -> ⊕_i g` at distinct declared points.
    pub fn ev(&self, points: &[usize]) -> Result<EvalMap> {
        for (k, p) in points.iter().enumerate() {
            if *p >= self.a.points.len() {
                return Err(Error::Domain(format!("unknown point index {p}")));
            }
            if points[..k].contains(p) {
                return Err(Error::Domain(format!("point {} repeated", self.a.points[*p].label)));
            }
        }
        let dg = self.base.dim();
        let mut e = Vec::new();
        for (i, p) in points.iter().enumerate() {
            for x in 0..dg {
                for j in 0..self.a.dim() {
                    let c = self.a.points[*p].chi[j].clone();
                    if !c.is_zero() {
                        e.push((i * dg + x, self.index(x, j), c));
                    }
                }
            }
        }
        Ok(EvalMap { points: points.to_vec(), base_dim: dg, mat: Mat::from_entries(points.len() * dg, self.g.dim(), e) })
    }

    /// Evaluation restricted to `(g⊗A)^Γ`; the points must lie in distinct orbits.
    pub fn ev_gamma(&self, act: &GammaAction, inv: &InvariantSub, points: &[usize]) -> Result<EvalMap> {
        for (k, p) in points.iter().enumerate() {
            for q in &points[..k] {
                if act.elements().iter().any(|e| act.move_point(&self.a, e, *q) == Some(*p)) {
                    return Err(Error::Domain(format!(
                        "points {} and {} lie in one orbit",
                        self.a.points[*q].label, self.a.points[*p].label
                    )));
                }
            }
        }
        let ev = self.ev(points)?;
        let emb = Mat::from_cols(self.g.dim(), &inv.basis);
        Ok(EvalMap { mat: ev.mat.mul(&emb), ..ev })
    }

    /// `Ann_A(V)` for a module of `g⊗A`, its support and whether it is radical.
    pub fn ann_and_support(&self, v: &LieModule) -> AnnReport {
        let da = self.a.dim();
        // K = {a : ρ(x⊗a) = 0 for all x}
        let k = kernel_of_family(da, |j| (0..self.base.dim()).map(move |x| (x, j)).collect(), |(x, j)| &v.ops[self.index(x, j)]);
        let ann = largest_ideal_in(&self.a, &k);
        self.report(ann)
    }

    /// Γ-symmetrized annihilator of a module of `(g⊗A)^Γ`.
    pub fn ann_and_support_twisted(&self, act: &GammaAction, inv: &InvariantSub, v: &LieModule) -> AnnReport {
        let da = self.a.dim();
        // ρ(P(x⊗a)) for basis x, a
        let mut ops: Vec<Vec<Mat>> = Vec::with_capacity(da);
        for j in 0..da {
            let mut row = Vec::with_capacity(self.base.dim());
            for x in 0..self.base.dim() {
                let pv = inv.projector.col(self.index(x, j));
                let c = inv.coords.coords_unchecked(&pv);
                row.push(v.act(&c));
            }
            ops.push(row);
        }
        let l = kernel_of_family(da, |j| (0..self.base.dim()).map(move |x| (x, j)).collect(), |(x, j)| &ops[j][x]);
        let lp = largest_ideal_in(&self.a, &l);
        let ann = act.invariant_core(&self.a, &lp);
        self.report(ann)
    }

    fn report(&self, ann: Ideal) -> AnnReport {
        let support = self.a.support(&ann);
        let reduced = self.a.radical(&ann) == ann;
        AnnReport { ann, support, reduced }
    }
}

/// Subspace `{a : Σ_j a_j M(x, j) = 0 for all x}` for a family of matrices.
fn kernel_of_family<'a>(
    da: usize,
    idx: impl Fn(usize) -> Vec<(usize, usize)>,
    get: impl Fn((usize, usize)) -> &'a Mat,
) -> Vec<SVec> {
    // rows indexed by (x, r, c), columns by j
    let mut rows: std::collections::BTreeMap<(usize, usize, usize), Vec<(usize, Scalar)>> = Default::default();
    for j in 0..da {
        for (x, jj) in idx(j) {
            for (r, c, val) in get((x, jj)).entries() {
                rows.entry((x, r, c)).or_default().push((j, val.clone()));
            }
        }
    }
    let mut e = Echelon::new(da);
    for (_, row) in rows {
        e.insert(&sv_collect(row));
        if e.is_full() {
            break;
        }
    }
    e.complement_kernel()
}

/// Largest ideal contained in the subspace `k`: `{a : a b ∈ k for all b}`.
pub fn largest_ideal_in(a: &CoeffAlgebra, k: &[SVec]) -> Ideal {
    let d = a.dim();
    let ek = Echelon::from_vectors(d, k);
    // column j: concatenation over b of the reduction of e_j * e_b modulo k
    let cols: Vec<SVec> = (0..d)
        .map(|j| {
            let mut v = Vec::new();
            for b in 0..d {
                for (t, c) in ek.reduce(&a.mult[j][b]) {
                    v.push((b * d + t, c));
                }
            }
            v
        })
        .collect();
    let m = Mat::from_cols(d * d, &cols);
    let ker = m.nullspace();
    Ideal { dim_a: d, basis: Echelon::from_vectors(d, &ker).basis() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnReport {
    pub ann: Ideal,
    pub support: Vec<usize>,
    pub reduced: bool,
}

#[derive(Clone, Debug)]
pub struct InvariantSub {
    pub g: LieSuper,
    /// Basis in coordinates of `g⊗A`, parity sorted.
    pub basis: Vec<SVec>,
    pub coords: BasisCoords,
    pub projector: Mat,
}

impl InvariantSub {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Restriction of a `g⊗A`-module to the subalgebra.
    pub fn restrict(&self, v: &LieModule) -> LieModule {
        v.pullback(&self.basis)
    }
}

#[derive(Clone, Debug)]
pub struct EvalMap {
    pub points: Vec<usize>,
    pub base_dim: usize,
    /// Rows `i*dim(g) + x`, point-major.
    pub mat: Mat,
}

impl EvalMap {
    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.mat.nrows()
    }
}

/// `g⊗A` with bracket `[x⊗f, y⊗h] = [x,y]⊗fh`. Root tags are inherited.
pub fn tensor_lie(base: &LieSuper, a: &CoeffAlgebra) -> MapSuper {
    let da = a.dim();
    let d = base.dim() * da;
    let mut bracket = vec![vec![Vec::new(); d]; d];
    for x in 0..base.dim() {
        for y in 0..base.dim() {
            let xy = &base.bracket[x][y];
            if xy.is_empty() {
                continue;
            }
            for f in 0..da {
                for h in 0..da {
                    let fh = &a.mult[f][h];
                    let mut t = Vec::with_capacity(xy.len() * fh.len());
                    for (z, c) in xy {
                        for (k, e) in fh {
                            t.push((z * da + k, c * e));
                        }
                    }
                    bracket[x * da + f][y * da + h] = sv_collect(t);
                }
            }
        }
    }
    let labels: Vec<String> = (0..d).map(|k| format!("{}⊗{}", base.space.labels[k / da], a.labels[k % da])).collect();
    let space = crate::graded::GradedSpace::with_labels(base.space.even * da, base.space.odd * da, labels);
    let roots = base.roots.as_ref().map(|r| (0..d).map(|k| r[k / da].clone()).collect());
    MapSuper { base: base.clone(), a: a.clone(), g: LieSuper { space, bracket, roots } }
}

/// Pullback of a module of `g` along evaluation at one point.
pub fn ev_module(m: &MapSuper, point: usize, rho: &LieModule) -> LieModule {
    let da = m.a.dim();
    let ops = (0..m.g.dim())
        .map(|k| {
            let (x, j) = (k / da, k % da);
            rho.ops[x].scale(&m.a.points[point].chi[j])
        })
        .collect();
    LieModule { space: rho.space.clone(), ops }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::queer::Queer;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|x| Scalar::from_int(*x)).collect()
    }

    fn two_point() -> CoeffAlgebra {
        CoeffAlgebra::two_point()
    }

    fn conj_sigma(q: &Queer) -> Mat {
        q.sign_conjugation()
    }

    #[test]
    fn dims() {
        let q = Queer::new(2);
        assert_eq!(tensor_lie(&q.g, &CoeffAlgebra::complex()).g.dim(), 16);
        let dual = CoeffAlgebra::poly_quotient(&ints(&[0, 0, 1]), &ints(&[0, 0])).unwrap();
        let m = tensor_lie(&q.g, &dual);
        assert_eq!(m.g.dim(), 32);
        assert!(m.g.check_axioms().0);
        let h =
            q.g.subalgebra(&q.cartan().iter().map(|i| vec![(*i, Scalar::one())]).collect::<Vec<_>>(), vec![String::new(); 4])
                .unwrap();
        assert_eq!(tensor_lie(&h, &two_point()).g.dim(), 8);
    }

    #[test]
    fn invariants_and_ev() {
        let q = Queer::new(2);
        let a = two_point();
        let m = tensor_lie(&q.g, &a);
        let flip = crate::coeff::scale_variable(&a, &Scalar::from_int(-1));
        let triv = GammaAction { orders: vec![2], on_a: vec![flip.clone()], on_g: vec![Mat::identity(16)] };
        let inv = m.invariants(&triv).unwrap();
        assert_eq!(inv.dim(), 16);
        let sigma = conj_sigma(&q);
        let tw = GammaAction { orders: vec![2], on_a: vec![flip], on_g: vec![sigma] };
        assert!(tw.validate(&a, &q.g).valid());
        let inv2 = m.invariants(&tw).unwrap();
        assert_eq!(inv2.dim(), 16);
        assert!(inv2.g.jacobi_ok());
        assert_eq!(m.ev(&[0, 1]).unwrap().rank(), 32);
        assert_eq!(m.ev(&[0]).unwrap().rank(), 16);
        assert!(m.ev(&[0, 0]).is_err());
        assert_eq!(m.ev_gamma(&tw, &inv2, &[0]).unwrap().rank(), 16);
        assert!(m.ev_gamma(&tw, &inv2, &[0, 1]).is_err());
    }

    #[test]
    fn annihilators() {
        let q = Queer::new(2);
        let a = two_point();
        let m = tensor_lie(&q.g, &a);
        let triv = LieModule { space: crate::graded::GradedSpace::new(1, 0), ops: vec![Mat::zeros(1, 1); m.g.dim()] };
        let r = m.ann_and_support(&triv);
        assert!(r.ann.is_whole() && r.support.is_empty());
        let v = ev_module(&m, 0, &q.g.adjoint());
        assert!(v.is_module_of(&m.g));
        let r = m.ann_and_support(&v);
        assert_eq!(r.ann, a.max_ideal(0));
        assert_eq!(r.support, vec![0]);
        assert!(r.reduced);
    }
}

//! Finite-dimensional Lie superalgebras by structure constants, and their
//! modules.

use crate::assoc::{density_type, AssocSuper, Density};
use crate::error::{Error, Result};
use crate::graded::{intertwiners, koszul, mat_parity, parity_sort, GradedSpace, Parity};
use crate::linalg::{sv_axpy, sv_collect, sv_scale, BasisCoords, Echelon, Mat, SVec};
use crate::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Root bookkeeping for basis elements of algebras with a triangular
/// decomposition. Roots are written in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootTag {
    Cartan,
    Root(Vec<i32>),
}

impl RootTag {
    pub fn is_positive(&self) -> bool {
        matches!(self, RootTag::Root(r) if r.iter().all(|x| *x >= 0))
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, RootTag::Root(r) if r.iter().all(|x| *x <= 0))
    }

    pub fn height(&self) -> i32 {
        match self {
            RootTag::Cartan => 0,
            RootTag::Root(r) => r.iter().sum(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LieSuper {
    pub space: GradedSpace,
    /// `bracket[i][j]` is `[x_i, x_j]`.
    pub bracket: Vec<Vec<SVec>>,
    /// Optional root tag per basis element.
    pub roots: Option<Vec<RootTag>>,
}

impl LieSuper {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn bracket(&self, a: &SVec, b: &SVec) -> SVec {
        let mut terms = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in &self.bracket[*i][*j] {
                    terms.push((*k, &xy * c));
                }
            }
        }
        sv_collect(terms)
    }

    /// Lie superalgebra spanned by a parity-sorted family of matrices, with
    /// the supercommutator followed by `project` as bracket. The projected
    /// bracket of two family members must lie in the span.
    pub fn from_matrices(
        basis: &[(Mat, Parity, String)],
        project: impl Fn(Mat) -> Mat,
        roots: Option<Vec<RootTag>>,
    ) -> Result<LieSuper> {
        let pars: Vec<Parity> = basis.iter().map(|b| b.1).collect();
        if parity_sort(&pars).iter().enumerate().any(|(i, p)| i != *p) {
            return Err(Error::Domain("basis must list even elements first".into()));
        }
        let n = basis.first().map(|b| b.0.nrows()).unwrap_or(0);
        let flat: Vec<SVec> = basis.iter().map(|b| b.0.flatten()).collect();
        let bc = BasisCoords::new(n * n, &flat);
        let mut bracket = Vec::with_capacity(basis.len());
        for a in basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in basis {
                let sc = supercommutator(&a.0, a.1, &b.0, b.1);
                let c = bc
                    .coords(&project(sc).flatten())
                    .ok_or_else(|| Error::Domain(format!("bracket [{}, {}] leaves the span", a.2, b.2)))?;
                row.push(c);
            }
            bracket.push(row);
        }
        let even = pars.iter().filter(|p| **p == 0).count();
        let labels = basis.iter().map(|b| b.2.clone()).collect();
        Ok(LieSuper { space: GradedSpace::with_labels(even, basis.len() - even, labels), bracket, roots })
    }

    /// Supercommutator residuals: returns `(grading_ok, skew_ok, jacobi_ok)`.
    pub fn check_axioms(&self) -> (bool, bool, bool) {
        let d = self.dim();
        let mut grading = true;
        let mut skew = true;
        for i in 0..d {
            for j in 0..d {
                let p = self.parity(i) ^ self.parity(j);
                if self.bracket[i][j].iter().any(|(k, _)| self.parity(*k) != p) {
                    grading = false;
                }
                let s = -koszul(self.parity(i), self.parity(j));
                if self.bracket[i][j] != sv_scale(&self.bracket[j][i], &s) {
                    skew = false;
                }
            }
        }
        (grading, skew, self.jacobi_ok())
    }

    /// `[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]` on all basis triples.
    pub fn jacobi_ok(&self) -> bool {
        let d = self.dim();
        for a in 0..d {
            let ea = vec![(a, Scalar::one())];
            for b in 0..d {
                let eb = vec![(b, Scalar::one())];
                let s = koszul(self.parity(a), self.parity(b));
                for c in 0..d {
                    let ec = vec![(c, Scalar::one())];
                    let lhs = self.bracket(&ea, &self.bracket[b][c]);
                    let r1 = self.bracket(&self.bracket[a][b], &ec);
                    let r2 = self.bracket(&eb, &self.bracket[a][c]);
                    if lhs != sv_axpy(&r1, &s, &r2) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|r| r.iter().all(Vec::is_empty))
    }

    /// Adjoint operator of a basis element.
    pub fn ad(&self, i: usize) -> Mat {
        let d = self.dim();
        Mat::from_entries(
            d,
            d,
            (0..d).flat_map(|j| self.bracket[i][j].iter().map(move |(k, c)| (*k, j, c.clone()))).collect::<Vec<_>>(),
        )
    }

    pub fn adjoint(&self) -> LieModule {
        LieModule { space: self.space.clone(), ops: (0..self.dim()).map(|i| self.ad(i)).collect() }
    }

    /// Span of all brackets between the two spans.
    pub fn bracket_span(&self, a: &[SVec], b: &[SVec]) -> Vec<SVec> {
        let mut e = Echelon::new(self.dim());
        for x in a {
            for y in b {
                e.insert(&self.bracket(x, y));
            }
        }
        e.basis()
    }

    /// `g, [g,g], [[g,g],[g,g]], ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Vec<SVec>> {
        let mut cur: Vec<SVec> = (0..self.dim()).map(|i| vec![(i, Scalar::one())]).collect();
        let mut out = vec![cur.clone()];
        loop {
            let next = self.bracket_span(&cur, &cur);
            if next.len() == cur.len() {
                return out;
            }
            out.push(next.clone());
            if next.is_empty() {
                return out;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|s| s.is_empty())
    }

    /// Smallest graded ideal containing the homogeneous components of `seed`.
    pub fn ideal_closure(&self, seed: &[SVec]) -> Vec<SVec> {
        let d = self.dim();
        let mut e = Echelon::new(d);
        let mut queue = Vec::new();
        for v in seed {
            for p in [0, 1] {
                let comp: SVec = v.iter().filter(|(i, _)| self.parity(*i) == p).cloned().collect();
                if e.insert(&comp) {
                    queue.push(comp);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for i in 0..d {
                let w = self.bracket(&vec![(i, Scalar::one())], &v);
                if e.insert(&w) {
                    queue.push(w);
                }
            }
        }
        e.basis()
    }

    /// Simple means nonabelian with irreducible adjoint module; irreducibility
    /// is certified by the density of the adjoint operators.
    pub fn is_simple(&self) -> bool {
        if self.dim() == 0 || self.is_abelian() {
            return false;
        }
        self.adjoint().density().is_irreducible()
    }

    /// Subalgebra generated by `gens`.
    pub fn subalgebra_closure(&self, gens: &[SVec]) -> Vec<SVec> {
        let mut e = Echelon::from_vectors(self.dim(), gens);
        let mut all = e.basis();
        let mut frontier = all.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for y in &all.clone() {
                    let b = self.bracket(x, y);
                    if e.insert(&b) {
                        next.push(b.clone());
                        all.push(b);
                    }
                }
            }
            frontier = next;
        }
        e.basis()
    }

    /// Restriction of the structure constants to a subalgebra with the given
    /// homogeneous basis (which must be closed under the bracket).
    pub fn subalgebra(&self, basis: &[SVec], labels: Vec<String>) -> Result<LieSuper> {
        let pars: Vec<Parity> = basis.iter().map(|v| self.space.vector_parity(v).unwrap_or(0)).collect();
        let perm = parity_sort(&pars);
        let mut sorted = vec![Vec::new(); basis.len()];
        let mut slabels = vec![String::new(); basis.len()];
        for (i, v) in basis.iter().enumerate() {
            sorted[perm[i]] = v.clone();
            slabels[perm[i]] = labels[i].clone();
        }
        let bc = BasisCoords::new(self.dim(), &sorted);
        let mut bracket = Vec::with_capacity(basis.len());
        for a in &sorted {
            let mut row = Vec::with_capacity(basis.len());
            for b in &sorted {
                row.push(bc.coords(&self.bracket(a, b)).ok_or_else(|| Error::Domain("subspace is not a subalgebra".into()))?);
            }
            bracket.push(row);
        }
        let even = pars.iter().filter(|p| **p == 0).count();
        Ok(LieSuper { space: GradedSpace::with_labels(even, basis.len() - even, slabels), bracket, roots: None })
    }
}

pub fn supercommutator(a: &Mat, pa: Parity, b: &Mat, pb: Parity) -> Mat {
    a.mul(b).axpy(&-koszul(pa, pb), &b.mul(a))
}

/// Lie superalgebra of an associative superalgebra, bracket the supercommutator.
pub fn from_assoc(a: &AssocSuper) -> LieSuper {
    let d = a.dim();
    let bracket = (0..d)
        .map(|i| (0..d).map(|j| sv_axpy(&a.mult[i][j], &-koszul(a.parity(i), a.parity(j)), &a.mult[j][i])).collect())
        .collect();
    LieSuper { space: a.space.clone(), bracket, roots: None }
}

/// A module: one operator per basis element of the algebra.
#[derive(Clone, Debug)]
pub struct LieModule {
    pub space: GradedSpace,
    pub ops: Vec<Mat>,
}

impl LieModule {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Checks parity and `ρ([x,y]) = [ρ(x), ρ(y)]` on basis pairs.
    pub fn is_module_of(&self, g: &LieSuper) -> bool {
        if self.ops.len() != g.dim() {
            return false;
        }
        for (i, op) in self.ops.iter().enumerate() {
            if !op.is_zero() && mat_parity(op, &self.space, &self.space) != Some(g.parity(i)) {
                return false;
            }
        }
        for i in 0..g.dim() {
            for j in i..g.dim() {
                let lhs = supercommutator(&self.ops[i], g.parity(i), &self.ops[j], g.parity(j));
                if lhs != self.act(&g.bracket[i][j]) {
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
        self.ops.iter().map(|m| (m.clone(), mat_parity(m, &self.space, &self.space).unwrap_or(0))).collect()
    }

    pub fn density(&self) -> Density {
        density_type(&self.space, &self.parity_ops())
    }

    /// Pullback along a linear map of algebras given by images of basis
    /// elements of the source algebra.
    pub fn pullback(&self, images: &[SVec]) -> LieModule {
        LieModule { space: self.space.clone(), ops: images.iter().map(|v| self.act(v)).collect() }
    }
}

/// Basis of the parity-`p` maps `T: v -> w` with `T ρ_v(x) = ρ_w(x) T`.
pub fn hom_space(v: &LieModule, w: &LieModule, p: Parity) -> Vec<Mat> {
    let pairs: Vec<(Mat, Mat, Parity)> = v.ops.iter().zip(&w.ops).map(|(x, y)| (x.clone(), y.clone(), 0)).collect();
    intertwiners(&v.space, &w.space, &pairs, p, false)
}

/// An invertible homogeneous intertwiner `v -> w`, even ones preferred.
/// Random combinations of a Hom basis are tried with a fixed seed.
pub fn find_isomorphism(v: &LieModule, w: &LieModule) -> Option<(Mat, Parity)> {
    if v.dim() != w.dim() || v.ops.len() != w.ops.len() {
        return None;
    }
    let n = v.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for p in [0, 1] {
        let basis = hom_space(v, w, p);
        if basis.is_empty() {
            continue;
        }
        for attempt in 0..8 {
            let t = basis.iter().fold(Mat::zeros(n, n), |acc, b| {
                let c = if attempt == 0 { 1 } else { rng.gen_range(-9i64..=9) };
                acc.axpy(&Scalar::from_int(c), b)
            });
            if t.rank() == n {
                return Some((t, p));
            }
        }
    }
    None
}

/// Report of the solvable-module test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvableCheck {
    /// Whether `[g_1, g_1] ⊆ [g_0, g_0]` and `g` is solvable.
    pub hypothesis: bool,
    pub module_dim: usize,
    /// `Some(dim == 1)` when the hypothesis holds, `None` otherwise.
    pub conclusion: Option<bool>,
}

/// For an irreducible module of a solvable algebra whose odd-odd brackets lie
/// in the derived even part, the module must be one-dimensional.
pub fn check_solvable_module_dim(g: &LieSuper, act: &LieModule) -> SolvableCheck {
    let d = g.dim();
    let ev: Vec<SVec> = (0..g.space.even).map(|i| vec![(i, Scalar::one())]).collect();
    let od: Vec<SVec> = (g.space.even..d).map(|i| vec![(i, Scalar::one())]).collect();
    let g00 = Echelon::from_vectors(d, &g.bracket_span(&ev, &ev));
    let g11 = g.bracket_span(&od, &od);
    let hypothesis = g.is_solvable() && g11.iter().all(|v| g00.contains(v));
    SolvableCheck { hypothesis, module_dim: act.dim(), conclusion: hypothesis.then_some(act.dim() == 1) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{make_m, make_q};

    #[test]
    fn gl11_and_qhat() {
        let gl = from_assoc(&make_m(1, 1));
        assert_eq!(gl.dim(), 4);
        assert_eq!(gl.check_axioms(), (true, true, true));
        let c = from_assoc(&make_m(1, 0));
        assert!(c.is_abelian());
        let qh = from_assoc(&make_q(2));
        assert_eq!(qh.dim(), 8);
        assert!(qh.jacobi_ok());
        assert!(!qh.is_simple());
    }

    #[test]
    fn adjoint_is_module() {
        let gl = from_assoc(&make_m(2, 1));
        assert!(gl.adjoint().is_module_of(&gl));
    }

    #[test]
    fn ideal_closure_of_abelian_line() {
        let g = from_assoc(&make_m(1, 0).tensor(&make_m(1, 0)));
        let v = vec![(0, Scalar::from_int(3))];
        assert_eq!(g.ideal_closure(&[v]).len(), 1);
    }

    #[test]
    fn solvable_checks() {
        let ab = LieSuper { space: GradedSpace::new(3, 0), bracket: vec![vec![Vec::new(); 3]; 3], roots: None };
        assert!(ab.is_solvable());
        let one = LieModule { space: GradedSpace::new(1, 0), ops: vec![Mat::zeros(1, 1); 3] };
        assert_eq!(check_solvable_module_dim(&ab, &one).conclusion, Some(true));
        // gl(1|1): [odd, odd] hits the centre, outside [g0, g0] = 0
        let gl = from_assoc(&make_m(1, 1));
        let m = gl.adjoint();
        assert!(!check_solvable_module_dim(&gl, &m).hypothesis);
    }
}

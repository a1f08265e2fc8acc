//! Finite-dimensional commutative unital coefficient algebras, their ideals
//! and finite abelian group actions.
//!
//! Maximal ideals are declared, not solved for. Each one is stored as the
//! character `A -> C` whose kernel it is.

use crate::error::{Error, Result};
use crate::linalg::{sv_axpy, sv_collect, sv_dot, sv_from_dense, sv_scale, Echelon, Mat, SVec};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// `C[t]/(f)` with `f` monic, coefficients constant term first.
    Poly { modulus: Vec<Scalar> },
    /// `C[t, t^-1]/(f)` with `f(0) != 0`; identical to the polynomial model.
    Laurent { modulus: Vec<Scalar> },
    /// `C^k` with the idempotent basis.
    Points,
    /// A quotient of another algebra.
    Quotient,
}

/// A declared maximal ideal, stored as its character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxIdeal {
    pub label: String,
    /// Values of the character on the basis of `A`.
    pub chi: Vec<Scalar>,
    /// Local dimension (multiplicity) at this point.
    pub multiplicity: usize,
}

impl MaxIdeal {
    pub fn eval(&self, a: &SVec) -> Scalar {
        a.iter().map(|(k, c)| c * &self.chi[*k]).sum()
    }
}

#[derive(Clone, Debug)]
pub struct CoeffAlgebra {
    pub labels: Vec<String>,
    pub mult: Vec<Vec<SVec>>,
    pub unit: SVec,
    pub points: Vec<MaxIdeal>,
    pub presentation: Presentation,
}

/// An ideal, stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub dim_a: usize,
    pub basis: Vec<SVec>,
}

impl Ideal {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.dim_a - self.basis.len()
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::from_vectors(self.dim_a, &self.basis)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.echelon().contains(v)
    }

    pub fn is_subset(&self, o: &Ideal) -> bool {
        let e = o.echelon();
        self.basis.iter().all(|v| e.contains(v))
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.basis.len() == self.dim_a
    }
}

fn fmt_poly(c: &[Scalar]) -> String {
    let mut terms = Vec::new();
    for (k, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        let coef = if k > 0 && a.is_one() {
            String::new()
        } else if k > 0 {
            format!("({a})")
        } else {
            format!("{a}")
        };
        terms.push(format!("{coef}{mono}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl CoeffAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn one(&self) -> SVec {
        self.unit.clone()
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

    pub fn basis_vec(&self, i: usize) -> SVec {
        vec![(i, Scalar::one())]
    }

    /// Multiplication operator of `a`.
    pub fn mult_op(&self, a: &SVec) -> Mat {
        let d = self.dim();
        Mat::from_cols(d, &(0..d).map(|j| self.mul(a, &self.basis_vec(j))).collect::<Vec<_>>())
    }

    /// The field `C` itself.
    /// `C` with basis label `1`.
    pub fn complex() -> CoeffAlgebra {
        CoeffAlgebra { labels: vec!["1".into()], ..CoeffAlgebra::points(1) }
    }

    /// `C[t]/(t^2-1)` with points `t = 1, -1`.
    pub fn two_point() -> CoeffAlgebra {
        let m = [-1, 0, 1].map(Scalar::from_int);
        Self::poly_quotient(&m, &[Scalar::one(), Scalar::from_int(-1)]).expect("split modulus")
    }

    /// `C[t,t^-1]/(t^4-1)` with points `t = 1, -1, i, -i`.
    pub fn four_point() -> CoeffAlgebra {
        let m = [-1, 0, 0, 0, 1].map(Scalar::from_int);
        let roots = [Scalar::one(), Scalar::from_int(-1), Scalar::i(), -Scalar::i()];
        Self::laurent_quotient(&m, &roots).expect("split modulus")
    }

    /// Dual numbers `C[t]/(t^2)`, one point of multiplicity 2.
    pub fn dual() -> CoeffAlgebra {
        let m = [0, 0, 1].map(Scalar::from_int);
        Self::poly_quotient(&m, &[Scalar::zero(), Scalar::zero()]).expect("split modulus")
    }

    /// Preset by name: `complex`, `two_point`, `four_point`, `dual`.
    pub fn preset(name: &str) -> Option<CoeffAlgebra> {
        match name {
            "complex" => Some(Self::complex()),
            "two_point" => Some(Self::two_point()),
            "four_point" => Some(Self::four_point()),
            "dual" => Some(Self::dual()),
            _ => None,
        }
    }

    /// `C^k` with idempotent basis `p1..pk`.
    pub fn points(k: usize) -> CoeffAlgebra {
        let mult = (0..k).map(|i| (0..k).map(|j| if i == j { vec![(i, Scalar::one())] } else { Vec::new() }).collect()).collect();
        let points = (0..k)
            .map(|i| MaxIdeal {
                label: format!("p{}", i + 1),
                chi: (0..k).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect(),
                multiplicity: 1,
            })
            .collect();
        CoeffAlgebra {
            labels: (0..k).map(|i| format!("p{}", i + 1)).collect(),
            mult,
            unit: (0..k).map(|i| (i, Scalar::one())).collect(),
            points,
            presentation: Presentation::Points,
        }
    }

    /// `C[t]/(f)` for monic `f` (constant term first) with declared roots
    /// listed with multiplicity.
    pub fn poly_quotient(modulus: &[Scalar], roots: &[Scalar]) -> Result<CoeffAlgebra> {
        let a = Self::poly_model(modulus, roots)?;
        Ok(CoeffAlgebra { presentation: Presentation::Poly { modulus: modulus.to_vec() }, ..a })
    }

    /// `C[t, t^-1]/(f)`, requiring `f(0) != 0` so that `t` is invertible.
    pub fn laurent_quotient(modulus: &[Scalar], roots: &[Scalar]) -> Result<CoeffAlgebra> {
        if modulus.first().is_none_or(Scalar::is_zero) {
            return Err(Error::Domain("Laurent modulus needs a nonzero constant term".into()));
        }
        let a = Self::poly_model(modulus, roots)?;
        Ok(CoeffAlgebra { presentation: Presentation::Laurent { modulus: modulus.to_vec() }, ..a })
    }

    fn poly_model(modulus: &[Scalar], roots: &[Scalar]) -> Result<CoeffAlgebra> {
        let d = modulus.len().checked_sub(1).ok_or_else(|| Error::Domain("empty modulus".into()))?;
        if d == 0 || !modulus[d].is_one() {
            return Err(Error::Domain("modulus must be monic of positive degree".into()));
        }
        // declared roots must factor f completely
        let mut prod = vec![Scalar::one()];
        for r in roots {
            let mut next = vec![Scalar::zero(); prod.len() + 1];
            for (k, c) in prod.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &(c * r);
            }
            prod = next;
        }
        if prod != modulus {
            return Err(Error::Domain(format!("declared roots do not factor the modulus {}", fmt_poly(modulus))));
        }
        // powers t^k mod f for k < 2d - 1
        let mut pows: Vec<Vec<Scalar>> = Vec::new();
        let mut cur = vec![Scalar::zero(); d];
        cur[0] = Scalar::one();
        for _ in 0..(2 * d).max(1) {
            pows.push(cur.clone());
            // multiply by t
            let top = cur[d - 1].clone();
            let mut next = vec![Scalar::zero(); d];
            for k in (1..d).rev() {
                next[k] = cur[k - 1].clone();
            }
            for (k, n) in next.iter_mut().enumerate() {
                *n -= &(&top * &modulus[k]);
            }
            cur = next;
        }
        let mult = (0..d).map(|i| (0..d).map(|j| sv_from_dense(&pows[i + j])).collect()).collect();
        let mut distinct: Vec<(Scalar, usize)> = Vec::new();
        for r in roots {
            match distinct.iter_mut().find(|(x, _)| x == r) {
                Some(e) => e.1 += 1,
                None => distinct.push((r.clone(), 1)),
            }
        }
        let points = distinct
            .into_iter()
            .map(|(r, m)| MaxIdeal {
                label: if r.is_zero() { "(t)".into() } else { format!("(t-({r}))") },
                chi: (0..d).map(|k| r.pow(k as u32)).collect(),
                multiplicity: m,
            })
            .collect();
        let labels = (0..d)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            })
            .collect();
        Ok(CoeffAlgebra { labels, mult, unit: vec![(0, Scalar::one())], points, presentation: Presentation::Quotient })
    }

    /// Index of the generator `t` for polynomial models.
    pub fn t(&self) -> Option<SVec> {
        match self.presentation {
            Presentation::Poly { .. } | Presentation::Laurent { .. } if self.dim() > 1 => Some(vec![(1, Scalar::one())]),
            _ => None,
        }
    }

    /// Checks commutativity, associativity, unit and that every declared
    /// point is a character with multiplicities summing to `dim A`.
    pub fn validate(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            let ei = self.basis_vec(i);
            if self.mul(&self.unit, &ei) != ei {
                return false;
            }
            for j in 0..d {
                if self.mult[i][j] != self.mult[j][i] {
                    return false;
                }
                for k in 0..d {
                    let ek = self.basis_vec(k);
                    if self.mul(&self.mult[i][j], &ek) != self.mul(&ei, &self.mult[j][k]) {
                        return false;
                    }
                }
                for p in &self.points {
                    if p.eval(&self.mult[i][j]) != &p.chi[i] * &p.chi[j] {
                        return false;
                    }
                }
            }
        }
        self.points.iter().all(|p| p.eval(&self.unit).is_one()) && self.points.iter().map(|p| p.multiplicity).sum::<usize>() == d
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label == label)
    }

    // ---- ideals

    pub fn zero_ideal(&self) -> Ideal {
        Ideal { dim_a: self.dim(), basis: Vec::new() }
    }

    pub fn whole(&self) -> Ideal {
        Ideal { dim_a: self.dim(), basis: (0..self.dim()).map(|i| self.basis_vec(i)).collect() }
    }

    /// Ideal generated by the given elements.
    pub fn ideal(&self, gens: &[SVec]) -> Ideal {
        let mut e = Echelon::new(self.dim());
        for g in gens {
            for i in 0..self.dim() {
                e.insert(&self.mul(g, &self.basis_vec(i)));
            }
        }
        Ideal { dim_a: self.dim(), basis: e.basis() }
    }

    /// Ideal spanned by a subspace, if that subspace is an ideal.
    pub fn ideal_from_span(&self, span: &[SVec]) -> Option<Ideal> {
        let mut e = Echelon::from_vectors(self.dim(), span);
        let id = Ideal { dim_a: self.dim(), basis: e.basis() };
        self.is_ideal(&id).then_some(id)
    }

    pub fn is_ideal(&self, i: &Ideal) -> bool {
        let e = i.echelon();
        i.basis.iter().all(|v| (0..self.dim()).all(|k| e.contains(&self.mul(v, &self.basis_vec(k)))))
    }

    /// Maximal ideal of a declared point.
    pub fn max_ideal(&self, p: usize) -> Ideal {
        let chi = sv_from_dense(&self.points[p].chi);
        let k = Mat::from_rows(self.dim(), vec![chi]).nullspace();
        Ideal { dim_a: self.dim(), basis: Echelon::from_vectors(self.dim(), &k).basis() }
    }

    pub fn product(&self, i: &Ideal, j: &Ideal) -> Ideal {
        let mut e = Echelon::new(self.dim());
        for a in &i.basis {
            for b in &j.basis {
                e.insert(&self.mul(a, b));
            }
        }
        Ideal { dim_a: self.dim(), basis: e.basis() }
    }

    pub fn power(&self, i: &Ideal, k: usize) -> Ideal {
        (0..k).fold(self.whole(), |acc, _| self.product(&acc, i))
    }

    pub fn sum(&self, i: &Ideal, j: &Ideal) -> Ideal {
        let mut e = Echelon::from_vectors(self.dim(), i.basis.iter().chain(&j.basis));
        Ideal { dim_a: self.dim(), basis: e.basis() }
    }

    pub fn intersect(&self, i: &Ideal, j: &Ideal) -> Ideal {
        Ideal { dim_a: self.dim(), basis: crate::linalg::intersect(self.dim(), &i.basis, &j.basis) }
    }

    /// Radical of `I`: preimage of the trace-form radical of `A/I`.
    pub fn radical(&self, i: &Ideal) -> Ideal {
        let (b, proj) = self.quotient_algebra(i);
        let db = b.dim();
        let tr: Vec<Scalar> = (0..db).map(|k| b.mult_op(&b.basis_vec(k)).trace()).collect();
        let trv = sv_from_dense(&tr);
        let rows: Vec<SVec> = (0..db).map(|x| sv_collect((0..db).map(|y| (y, sv_dot(&b.mult[x][y], &trv))))).collect();
        let rad_b = Mat::from_rows(db, rows).nullspace();
        let free = proj.free;
        let lifts: Vec<SVec> = rad_b.iter().map(|v| v.iter().map(|(k, c)| (free[*k], c.clone())).collect()).collect();
        let mut e = Echelon::from_vectors(self.dim(), i.basis.iter().chain(&lifts));
        Ideal { dim_a: self.dim(), basis: e.basis() }
    }

    pub fn nilradical(&self) -> Ideal {
        self.radical(&self.zero_ideal())
    }

    /// Declared points whose maximal ideal contains `I`.
    pub fn support(&self, i: &Ideal) -> Vec<usize> {
        (0..self.points.len()).filter(|p| i.basis.iter().all(|v| self.points[*p].eval(v).is_zero())).collect()
    }

    /// `A/I` with basis the non-pivot coordinates of `I`.
    pub fn quotient_algebra(&self, i: &Ideal) -> (CoeffAlgebra, QuotientMap) {
        let e = i.echelon();
        let free = e.free_columns();
        let pos: std::collections::HashMap<usize, usize> = free.iter().enumerate().map(|(k, f)| (*f, k)).collect();
        let project = |v: &SVec| -> SVec { e.reduce(v).into_iter().map(|(k, c)| (pos[&k], c)).collect() };
        let mult = free.iter().map(|&a| free.iter().map(|&b| project(&self.mult[a][b])).collect()).collect();
        let unit = project(&self.unit);
        let points = self
            .support(i)
            .into_iter()
            .map(|p| MaxIdeal {
                label: self.points[p].label.clone(),
                chi: free.iter().map(|f| self.points[p].chi[*f].clone()).collect(),
                multiplicity: 0,
            })
            .collect();
        let labels = free.iter().map(|f| self.labels[*f].clone()).collect();
        let mut b = CoeffAlgebra { labels, mult, unit, points, presentation: Presentation::Quotient };
        let mults: Vec<usize> = match b.local_dims() {
            Ok(v) => v,
            Err(_) => vec![0; b.points.len()],
        };
        for (p, m) in b.points.iter_mut().zip(mults) {
            p.multiplicity = m;
        }
        (b, QuotientMap { dim_a: self.dim(), free, ideal: i.clone() })
    }

    fn local_dims(&self) -> Result<Vec<usize>> {
        let split = self.crt_split(&self.zero_ideal())?;
        Ok(split.pieces.iter().map(Vec::len).collect())
    }

    /// Splits `A/I` into local pieces, one per point of `Supp(I)`.
    pub fn crt_split(&self, i: &Ideal) -> Result<CrtSplit> {
        let supp = self.support(i);
        let e = i.echelon();
        let d = self.dim();
        let mut idems = Vec::new();
        for &p in &supp {
            // linear element with χ_q(e0) = δ_pq on the support
            let rows: Vec<SVec> = supp.iter().map(|q| sv_from_dense(&self.points[*q].chi)).collect();
            let rhs: SVec = supp.iter().enumerate().filter(|(_, q)| **q == p).map(|(k, _)| (k, Scalar::one())).collect();
            let m = Mat::from_rows(d, rows);
            let mut x = m.solve(&rhs).ok_or_else(|| Error::Domain("characters are dependent".into()))?;
            x = e.reduce(&x);
            for _ in 0..=usize::BITS - d.leading_zeros() {
                let x2 = e.reduce(&self.mul(&x, &x));
                if x2 == x {
                    break;
                }
                let x3 = e.reduce(&self.mul(&x2, &x));
                x = sv_axpy(&sv_scale(&x2, &Scalar::from_int(3)), &Scalar::from_int(-2), &x3);
            }
            if e.reduce(&self.mul(&x, &x)) != x {
                return Err(Error::Domain("idempotent lift did not converge".into()));
            }
            idems.push(x);
        }
        let total = idems.iter().fold(Vec::new(), |acc, x| sv_axpy(&acc, &Scalar::one(), x));
        if e.reduce(&total) != e.reduce(&self.unit) {
            return Err(Error::Domain("quotient does not split over the declared points".into()));
        }
        let pieces = idems
            .iter()
            .map(|x| {
                let mut ech = Echelon::new(d);
                for k in 0..d {
                    ech.insert(&e.reduce(&self.mul(x, &self.basis_vec(k))));
                }
                ech.basis()
            })
            .collect();
        Ok(CrtSplit { points: supp, idempotents: idems, pieces })
    }
}

/// Projection `A -> A/I` onto the non-pivot coordinates of `I`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub dim_a: usize,
    pub free: Vec<usize>,
    pub ideal: Ideal,
}

impl QuotientMap {
    pub fn project(&self, v: &SVec) -> SVec {
        let e = self.ideal.echelon();
        let pos: std::collections::HashMap<usize, usize> = self.free.iter().enumerate().map(|(k, f)| (*f, k)).collect();
        e.reduce(v).into_iter().map(|(k, c)| (pos[&k], c)).collect()
    }

    /// Lift of a quotient basis vector.
    pub fn lift(&self, v: &SVec) -> SVec {
        v.iter().map(|(k, c)| (self.free[*k], c.clone())).collect()
    }

    pub fn matrix(&self) -> Mat {
        let cols: Vec<SVec> = (0..self.dim_a).map(|k| self.project(&vec![(k, Scalar::one())])).collect();
        Mat::from_cols(self.free.len(), &cols)
    }
}

#[derive(Clone, Debug)]
pub struct CrtSplit {
    /// Supporting points, in declaration order.
    pub points: Vec<usize>,
    /// Orthogonal idempotents summing to `1` in `A/I` (reduced representatives).
    pub idempotents: Vec<SVec>,
    /// Basis of each local piece `e_k (A/I)` (reduced representatives).
    pub pieces: Vec<Vec<SVec>>,
}

/// Finite abelian group given by commuting generators of finite order acting
/// on `A` and on a Lie superalgebra.
#[derive(Clone, Debug)]
pub struct GammaAction {
    pub orders: Vec<usize>,
    /// Automorphism of `A` per generator (columns are images of basis vectors).
    pub on_a: Vec<Mat>,
    /// Even automorphism of the Lie superalgebra per generator.
    pub on_g: Vec<Mat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub relations: bool,
    pub algebra_automorphisms: bool,
    pub lie_automorphisms: bool,
    pub abelian: bool,
    pub permutes_points: bool,
    pub free: bool,
    /// Orbits of the declared points.
    pub orbits: Vec<Vec<usize>>,
}

impl GammaReport {
    pub fn valid(&self) -> bool {
        self.relations && self.algebra_automorphisms && self.lie_automorphisms && self.abelian && self.permutes_points
    }
}

impl GammaAction {
    pub fn trivial(dim_a: usize, dim_g: usize) -> GammaAction {
        let _ = (dim_a, dim_g);
        GammaAction { orders: Vec::new(), on_a: Vec::new(), on_g: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }

    /// Exponent vectors of all group elements, identity first.
    pub fn elements(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..o).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn compose(gens: &[Mat], exps: &[usize], dim: usize) -> Mat {
        let mut m = Mat::identity(dim);
        for (g, &e) in gens.iter().zip(exps) {
            for _ in 0..e {
                m = g.mul(&m);
            }
        }
        m
    }

    pub fn element_on_a(&self, exps: &[usize], dim_a: usize) -> Mat {
        Self::compose(&self.on_a, exps, dim_a)
    }

    pub fn element_on_g(&self, exps: &[usize], dim_g: usize) -> Mat {
        Self::compose(&self.on_g, exps, dim_g)
    }

    /// Image of a declared point under `γ`: the character `χ ∘ γ^{-1}`.
    pub fn move_point(&self, a: &CoeffAlgebra, exps: &[usize], p: usize) -> Option<usize> {
        let g = self.element_on_a(exps, a.dim()).inverse()?;
        let chi = sv_from_dense(&a.points[p].chi);
        // (χ ∘ g)(e_j) = χ(g e_j) = sum_i χ_i g_ij
        let moved: Vec<Scalar> = (0..a.dim()).map(|j| sv_dot(&chi, &g.col(j))).collect();
        a.points.iter().position(|q| q.chi == moved)
    }

    pub fn validate(&self, a: &CoeffAlgebra, g: &crate::lie::LieSuper) -> GammaReport {
        let (da, dg) = (a.dim(), g.dim());
        let k = self.orders.len();
        let mut relations = self.on_a.len() == k && self.on_g.len() == k;
        let mut alg = true;
        let mut lie = true;
        let mut abelian = true;
        if relations {
            for i in 0..k {
                let mut e = vec![0; k];
                e[i] = self.orders[i];
                if self.element_on_a(&e, da) != Mat::identity(da) || self.element_on_g(&e, dg) != Mat::identity(dg) {
                    relations = false;
                }
                alg &= is_algebra_automorphism(a, &self.on_a[i]);
                lie &= is_lie_automorphism(g, &self.on_g[i]);
                for j in 0..k {
                    abelian &= self.on_a[i].mul(&self.on_a[j]) == self.on_a[j].mul(&self.on_a[i]);
                    abelian &= self.on_g[i].mul(&self.on_g[j]) == self.on_g[j].mul(&self.on_g[i]);
                }
            }
        }
        let elems = self.elements();
        let mut permutes = alg;
        let mut free = true;
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        if alg && relations {
            for p in 0..a.points.len() {
                let mut orbit = Vec::new();
                for (n, e) in elems.iter().enumerate() {
                    match self.move_point(a, e, p) {
                        Some(q) => {
                            if n > 0 && q == p {
                                free = false;
                            }
                            if !orbit.contains(&q) {
                                orbit.push(q);
                            }
                        }
                        None => permutes = false,
                    }
                }
                orbit.sort_unstable();
                if !orbits.contains(&orbit) {
                    orbits.push(orbit);
                }
            }
        } else {
            free = false;
        }
        GammaReport {
            relations,
            algebra_automorphisms: alg,
            lie_automorphisms: lie,
            abelian,
            permutes_points: permutes,
            free,
            orbits,
        }
    }

    /// Whether `I` is stable under every generator.
    pub fn is_invariant_ideal(&self, i: &Ideal) -> bool {
        let e = i.echelon();
        self.on_a.iter().all(|g| i.basis.iter().all(|v| e.contains(&g.apply(v))))
    }

    /// Largest Γ-invariant ideal inside `I`: the intersection of its translates.
    pub fn invariant_core(&self, a: &CoeffAlgebra, i: &Ideal) -> Ideal {
        self.elements().iter().fold(a.whole(), |acc, e| {
            let g = self.element_on_a(e, a.dim());
            let moved = Ideal {
                dim_a: a.dim(),
                basis: Echelon::from_vectors(a.dim(), &i.basis.iter().map(|v| g.apply(v)).collect::<Vec<_>>()).basis(),
            };
            a.intersect(&acc, &moved)
        })
    }
}

pub fn is_algebra_automorphism(a: &CoeffAlgebra, m: &Mat) -> bool {
    let d = a.dim();
    if m.nrows() != d || m.ncols() != d || m.inverse().is_none() || m.apply(&a.unit) != a.unit {
        return false;
    }
    let img: Vec<SVec> = (0..d).map(|j| m.col(j)).collect();
    (0..d).all(|i| (0..d).all(|j| m.apply(&a.mult[i][j]) == a.mul(&img[i], &img[j])))
}

pub fn is_lie_automorphism(g: &crate::lie::LieSuper, m: &Mat) -> bool {
    let d = g.dim();
    if m.nrows() != d || m.ncols() != d || m.inverse().is_none() {
        return false;
    }
    if crate::graded::mat_parity(m, &g.space, &g.space) != Some(0) {
        return false;
    }
    let img: Vec<SVec> = (0..d).map(|j| m.col(j)).collect();
    (0..d).all(|i| (0..d).all(|j| m.apply(&g.bracket[i][j]) == g.bracket(&img[i], &img[j])))
}

/// Diagonal automorphism `t^k -> c^k t^k` of a polynomial model.
pub fn scale_variable(a: &CoeffAlgebra, c: &Scalar) -> Mat {
    Mat::from_entries(a.dim(), a.dim(), (0..a.dim()).map(|k| (k, k, c.pow(k as u32))))
}

//! Schur data, the irreducible tensor product `⊗̂`, evaluation modules
//! `êv_Ψ` and `êv_Ψ^Γ`, isomorphism testing and enumeration of irreducible
//! modules of `q⊗A` and `(q⊗A)^Γ` over a finite catalog of `q`-modules.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::assoc::Density;
use crate::cartan::PsiFunctional;
use crate::coeff::{CoeffAlgebra, GammaAction};
use crate::error::{Error, Result};
use crate::graded::{commutant_general, koszul_kron, reindex, GradedSpace, Parity};
use crate::hw::{simple_quotient, WeightModule};
use crate::lie::{find_isomorphism, hom_space, supercommutator, LieModule, LieSuper};
use crate::linalg::{sv_collect, BasisCoords, Echelon, Mat, SVec};
use crate::mapsuper::{tensor_lie, MapSuper};
use crate::queer::Queer;
use crate::scalar::Scalar;

/// Largest dimension for which the density oracle is used.
pub const DENSITY_LIMIT: usize = 32;
/// Largest dimension for which isomorphisms are found by a full Hom solve.
pub const HOM_SOLVE_LIMIT: usize = 48;

/// Graded endomorphisms of an irreducible module.
#[derive(Clone, Debug, PartialEq)]
pub struct SchurData {
    pub even_dim: usize,
    /// Odd endomorphism, if any, with `φ² = c·id`.
    pub phi: Option<Mat>,
    pub c: Option<Scalar>,
    pub normalized: bool,
}

impl SchurData {
    pub fn type_m() -> SchurData {
        SchurData { even_dim: 1, phi: None, c: None, normalized: true }
    }

    pub fn is_type_q(&self) -> bool {
        self.phi.is_some()
    }

    pub fn label(&self) -> &'static str {
        if self.is_type_q() {
            "Q"
        } else {
            "M"
        }
    }

    fn from_phi(phi: Mat) -> SchurData {
        SchurData { even_dim: 1, phi: Some(phi), c: Some(Scalar::from_int(-1)), normalized: true }
    }
}

/// Commutant solve with `φ` rescaled to `φ² = -id`.
pub fn schur_data(m: &LieModule) -> Result<SchurData> {
    let ops = m.parity_ops();
    let even = commutant_general(&m.space, &ops, 0, true);
    let mut odd = commutant_general(&m.space, &ops, 1, true);
    if even.len() != 1 || odd.len() > 1 {
        return Err(Error::Domain(format!("commutant of dims {}|{}: not irreducible", even.len(), odd.len())));
    }
    if m.dim() <= DENSITY_LIMIT && !m.density().is_irreducible() {
        return Err(Error::Domain("module is not irreducible".into()));
    }
    let Some(phi) = odd.pop() else {
        return Ok(SchurData::type_m());
    };
    let n = m.dim();
    let sq = phi.mul(&phi);
    let c = sq.get(0, 0);
    if c.is_zero() || sq != Mat::scalar(n, &c) {
        return Err(Error::Domain("odd endomorphism does not square to a nonzero scalar".into()));
    }
    let minus_inv = -c.inv().expect("nonzero");
    let s = minus_inv.adjoin_invertible_sqrt()?;
    let phi = phi.scale(&s);
    if phi.mul(&phi) != Mat::scalar(n, &Scalar::from_int(-1)) {
        return Err(Error::Domain("normalization of φ failed".into()));
    }
    Ok(SchurData::from_phi(phi))
}

/// Direct sum of Lie superalgebras with, per summand, the positions of its
/// basis in the parity-sorted basis of the sum.
pub fn lie_direct_sum(g1: &LieSuper, g2: &LieSuper) -> (LieSuper, Vec<Vec<usize>>) {
    let (space, pos) = GradedSpace::direct_sum(&[&g1.space, &g2.space]);
    let d = space.dim();
    let mut bracket = vec![vec![Vec::new(); d]; d];
    for (g, p) in [g1, g2].iter().zip(&pos) {
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                bracket[p[i]][p[j]] = sv_collect(g.bracket[i][j].iter().map(|(k, c)| (p[*k], c.clone())));
            }
        }
    }
    (LieSuper { space, bracket, roots: None }, pos)
}

/// An irreducible module with its Schur data. For a `⊗̂`-product,
/// `factors[i][x]` is the position of basis element `x` of the `i`-th factor
/// algebra in `algebra`, and `ambient` embeds the module into the plain
/// (lexicographic) tensor product of the factor spaces.
#[derive(Clone, Debug)]
pub struct Irreducible {
    pub algebra: LieSuper,
    pub module: LieModule,
    pub schur: SchurData,
    pub factors: Vec<Vec<usize>>,
    pub ambient: Mat,
}

impl Irreducible {
    pub fn new(algebra: LieSuper, module: LieModule) -> Result<Irreducible> {
        if !module.is_module_of(&algebra) {
            return Err(Error::Domain("not a module of the algebra".into()));
        }
        let schur = schur_data(&module)?;
        Ok(Self::with_schur(algebra, module, schur))
    }

    pub fn with_schur(algebra: LieSuper, module: LieModule, schur: SchurData) -> Irreducible {
        let d = module.dim();
        let factors = vec![(0..algebra.dim()).collect()];
        Irreducible { algebra, module, schur, factors, ambient: Mat::identity(d) }
    }

    pub fn trivial(algebra: LieSuper) -> Irreducible {
        let module = LieModule { space: GradedSpace::new(1, 0), ops: vec![Mat::zeros(1, 1); algebra.dim()] };
        Self::with_schur(algebra, module, SchurData::type_m())
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 1 && self.module.ops.iter().all(Mat::is_zero)
    }

    /// `ρ∘γ` for an even automorphism `γ` of the algebra (columns are images).
    pub fn twist(&self, gamma: &Mat) -> Irreducible {
        let images: Vec<SVec> = (0..self.algebra.dim()).map(|j| gamma.col(j)).collect();
        Irreducible { module: self.module.pullback(&images), ..self.clone() }
    }

    /// Operators listed factor by factor, in each factor's own basis order.
    pub fn factor_ops(&self) -> Vec<Mat> {
        self.factors.iter().flatten().map(|k| self.module.ops[*k].clone()).collect()
    }
}

/// Result of `⊗̂`.
#[derive(Clone, Debug)]
pub struct HatProduct {
    pub product: Irreducible,
    /// Whether `V¹⊗V²` splits, i.e. both factors are of type Q.
    pub split: bool,
    /// Dimension of `V¹⊗V²`.
    pub full_dim: usize,
    /// Columns: basis of `V̂` in the parity-sorted basis of `V¹⊗V²`.
    pub embedding: Mat,
    /// The `-1`-eigenspace of `φ̃₁⊗φ₂` in the split case.
    pub complement: Option<LieModule>,
}

/// `V¹⊗V²` as a module of `𝔤¹⊕𝔤²`, with the parity permutation of the
/// tensor basis.
pub fn sum_tensor(a: &Irreducible, b: &Irreducible) -> (LieSuper, Vec<Vec<usize>>, LieModule, Vec<usize>) {
    let (g, pos) = lie_direct_sum(&a.algebra, &b.algebra);
    let (s1, s2) = (&a.module.space, &b.module.space);
    let (space, perm) = s1.tensor(s2);
    let (ia, ib) = (Mat::identity(s1.dim()), Mat::identity(s2.dim()));
    let mut ops = vec![Mat::zeros(space.dim(), space.dim()); g.dim()];
    for (x, op) in a.module.ops.iter().enumerate() {
        ops[pos[0][x]] = reindex(&koszul_kron(op, s1, &ib, 0), &perm, &perm);
    }
    for (y, op) in b.module.ops.iter().enumerate() {
        ops[pos[1][y]] = reindex(&koszul_kron(&ia, s1, op, b.algebra.parity(y)), &perm, &perm);
    }
    (g, pos, LieModule { space, ops }, perm)
}

/// Irreducible product: the full tensor product unless both factors are of
/// type Q, in which case the `+1`-eigenspace of `φ̃₁⊗φ₂`, `φ̃₁ = √-1 φ₁`.
pub fn hat_tensor(a: &Irreducible, b: &Irreducible) -> Result<HatProduct> {
    let (g, pos, full, perm) = sum_tensor(a, b);
    let (s1, s2) = (&a.module.space, &b.module.space);
    let n = full.dim();
    let factors: Vec<Vec<usize>> = a
        .factors
        .iter()
        .map(|f| f.iter().map(|k| pos[0][*k]).collect())
        .chain(b.factors.iter().map(|f| f.iter().map(|k| pos[1][*k]).collect()))
        .collect();
    // ambient: column perm[i*d2+j] is ambient_a(i) ⊗ ambient_b(j)
    let kr = a.ambient.kron(&b.ambient);
    let mut inv_perm = vec![0; n];
    for (k, p) in perm.iter().enumerate() {
        inv_perm[*p] = k;
    }
    let ambient_full = Mat::from_cols(kr.nrows(), &inv_perm.iter().map(|k| kr.col(*k)).collect::<Vec<_>>());
    let (ia, ib) = (Mat::identity(s1.dim()), Mat::identity(s2.dim()));
    match (&a.schur.phi, &b.schur.phi) {
        (Some(p1), Some(p2)) => {
            let pt = p1.scale(&Scalar::i());
            let t = reindex(&koszul_kron(&pt, s1, p2, 1), &perm, &perm);
            if t.mul(&t) != Mat::identity(n) {
                return Err(Error::Domain("(φ̃₁⊗φ₂)² is not the identity".into()));
            }
            let (plus, emb) = eigen_module(&full, &t, &Scalar::one())?;
            let (minus, _) = eigen_module(&full, &t, &Scalar::from_int(-1))?;
            let ambient = ambient_full.mul(&emb);
            let product = Irreducible { algebra: g, module: plus, schur: SchurData::type_m(), factors, ambient };
            Ok(HatProduct { product, split: true, full_dim: n, embedding: emb, complement: Some(minus) })
        }
        (p1, p2) => {
            let schur = match (p1, p2) {
                (Some(p), None) => SchurData::from_phi(reindex(&koszul_kron(p, s1, &ib, 0), &perm, &perm)),
                (None, Some(p)) => SchurData::from_phi(reindex(&koszul_kron(&ia, s1, p, 1), &perm, &perm)),
                _ => SchurData::type_m(),
            };
            let product = Irreducible { algebra: g, module: full, schur, factors, ambient: ambient_full };
            Ok(HatProduct { product, split: false, full_dim: n, embedding: Mat::identity(n), complement: None })
        }
    }
}

/// Eigenspace `{v : T v = s v}` of an even operator commuting with the
/// action, computed block by block on the joint eigenspaces of the diagonal
/// operators so that a weight basis stays a weight basis.
pub fn eigen_module(m: &LieModule, t: &Mat, s: &Scalar) -> Result<(LieModule, Mat)> {
    let n = m.dim();
    let diag: Vec<&Mat> = m.ops.iter().filter(|op| op.entries().all(|(i, j, _)| i == j)).collect();
    let mut blocks: BTreeMap<(Parity, Vec<Scalar>), Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let key = (m.space.parity(i), diag.iter().map(|d| d.get(i, i)).collect());
        blocks.entry(key).or_default().push(i);
    }
    let shifted = t.sub(&Mat::scalar(n, s));
    let mut basis = Vec::new();
    let mut even = 0;
    for ((p, _), idx) in &blocks {
        let sub = shifted.submatrix(&(0..n).collect::<Vec<_>>(), idx);
        for v in sub.submatrix(idx, &(0..idx.len()).collect::<Vec<_>>()).nullspace() {
            let w: SVec = v.iter().map(|(k, c)| (idx[*k], c.clone())).collect();
            if !shifted.apply(&w).is_empty() {
                return Err(Error::Domain("operator does not preserve the weight blocks".into()));
            }
            basis.push(w);
            if *p == 0 {
                even += 1;
            }
        }
    }
    let emb = Mat::from_cols(n, &basis);
    let sub = restrict_module(m, &basis, GradedSpace::new(even, basis.len() - even))?;
    Ok((sub, emb))
}

/// Action on an invariant subspace with the given (parity-sorted) basis.
pub fn restrict_module(m: &LieModule, basis: &[SVec], space: GradedSpace) -> Result<LieModule> {
    let coords = BasisCoords::new(m.dim(), basis);
    let d = basis.len();
    let mut ops = Vec::with_capacity(m.ops.len());
    for op in &m.ops {
        let mut cols = Vec::with_capacity(d);
        for v in basis {
            cols.push(coords.coords(&op.apply(v)).ok_or_else(|| Error::Domain("subspace is not invariant".into()))?);
        }
        ops.push(Mat::from_cols(d, &cols));
    }
    Ok(LieModule { space, ops })
}

/// Maps `T: v -> w` fixed on `start` by `images` and extended along words in
/// the operators. Returns `T` only if it is invertible and intertwines every
/// operator.
pub fn extend_intertwiner(v: &LieModule, w: &LieModule, start: &[SVec], images: &[SVec]) -> Option<Mat> {
    let n = v.dim();
    if w.dim() != n || v.ops.len() != w.ops.len() {
        return None;
    }
    let mut ech = Echelon::new(n);
    let mut pairs: Vec<(SVec, SVec)> = Vec::new();
    for (x, y) in start.iter().zip(images) {
        if ech.insert(x) {
            pairs.push((x.clone(), y.clone()));
        }
    }
    let mut k = 0;
    while k < pairs.len() && !ech.is_full() {
        let (x, y) = pairs[k].clone();
        for (a, b) in v.ops.iter().zip(&w.ops) {
            let ax = a.apply(&x);
            if !ax.is_empty() && ech.insert(&ax) {
                pairs.push((ax, b.apply(&y)));
            }
        }
        k += 1;
    }
    if !ech.is_full() {
        return None;
    }
    let bv = Mat::from_cols(n, &pairs.iter().map(|p| p.0.clone()).collect::<Vec<_>>());
    let bw = Mat::from_cols(n, &pairs.iter().map(|p| p.1.clone()).collect::<Vec<_>>());
    let t = bw.mul(&bv.inverse()?);
    let ok = t.rank() == n && v.ops.iter().zip(&w.ops).all(|(a, b)| t.mul(a) == b.mul(&t));
    ok.then_some(t)
}

/// An invertible intertwiner `v -> w`, homogeneous when possible.
pub fn is_isomorphic(v: &LieModule, w: &LieModule) -> Option<Mat> {
    if v.dim() != w.dim() || v.ops.len() != w.ops.len() {
        return None;
    }
    if let Some((t, _)) = find_isomorphism(v, w) {
        return Some(t);
    }
    let n = v.dim();
    let basis: Vec<Mat> = hom_space(v, w, 0).into_iter().chain(hom_space(v, w, 1)).collect();
    if basis.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    (0..8).find_map(|_| {
        let t = basis.iter().fold(Mat::zeros(n, n), |acc, b| acc.axpy(&Scalar::from_int(rng.gen_range(-9i64..=9)), b));
        (t.rank() == n).then_some(t)
    })
}

/// Isomorphism between weight modules of `q⊗A` through their top weight
/// spaces: every intertwiner of the tops is extended along the action.
pub fn hw_isomorphism(q: &Queer, a: &CoeffAlgebra, v: &LieModule, w: &LieModule) -> Result<Option<Mat>> {
    if v.dim() != w.dim() {
        return Ok(None);
    }
    let wv = WeightModule::from_module(q, a, v.clone())?;
    let ww = WeightModule::from_module(q, a, w.clone())?;
    if wv.lambda != ww.lambda {
        return Ok(None);
    }
    let top = |m: &WeightModule| -> Vec<usize> { (0..m.dim()).filter(|i| m.weights[*i].iter().all(|x| *x == 0)).collect() };
    let (tv, tw) = (top(&wv), top(&ww));
    let (cv, cw) = (wv.top_cartan_module(q), ww.top_cartan_module(q));
    let start: Vec<SVec> = tv.iter().map(|i| vec![(*i, Scalar::one())]).collect();
    for p in [0, 1] {
        for t0 in hom_space(&cv, &cw, p) {
            let images: Vec<SVec> = (0..tv.len()).map(|j| t0.col(j).iter().map(|(r, c)| (tw[*r], c.clone())).collect()).collect();
            if let Some(t) = extend_intertwiner(v, w, &start, &images) {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// How irreducibility was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrrCert {
    Density(Density),
    HighestWeight(bool),
    /// Same operator span as a certified irreducible module.
    ImageSpan(bool),
}

impl IrrCert {
    pub fn irreducible(&self) -> bool {
        match self {
            IrrCert::Density(d) => d.is_irreducible(),
            IrrCert::HighestWeight(b) | IrrCert::ImageSpan(b) => *b,
        }
    }

    pub fn method(&self) -> &'static str {
        match self {
            IrrCert::Density(_) => "density",
            IrrCert::HighestWeight(_) => "highest-weight",
            IrrCert::ImageSpan(_) => "image-span",
        }
    }
}

/// Density oracle up to [`DENSITY_LIMIT`], the highest-weight criterion
/// beyond.
pub fn certify_irreducible(q: &Queer, a: &CoeffAlgebra, v: &LieModule) -> Result<IrrCert> {
    if v.dim() <= DENSITY_LIMIT {
        return Ok(IrrCert::Density(v.density()));
    }
    let w = WeightModule::from_module(q, a, v.clone())?;
    Ok(IrrCert::HighestWeight(w.is_irreducible_hw(q)))
}

/// Whether two families of operators span the same space.
pub fn same_operator_span(x: &[Mat], y: &[Mat]) -> bool {
    let Some(first) = x.first().or(y.first()) else {
        return true;
    };
    let dim = first.nrows() * first.ncols();
    let ex = Echelon::from_vectors(dim, &x.iter().map(Mat::flatten).collect::<Vec<_>>());
    let ey = Echelon::from_vectors(dim, &y.iter().map(Mat::flatten).collect::<Vec<_>>());
    ex.rank() == ey.rank() && ey.rows().iter().all(|r| ex.contains(r))
}

/// `ψ` on the top weight space: the scalars by which `h̄_0⊗a_j` act there.
pub fn top_psi(q: &Queer, a: &CoeffAlgebra, v: &LieModule) -> Result<PsiFunctional> {
    let w = WeightModule::from_module(q, a, v.clone())?;
    let top = w.top_cartan_module(q);
    let (n, da, d) = (q.n, a.dim(), top.dim());
    let mut values = Vec::with_capacity(n * da);
    for op in &top.ops[..n * da] {
        let c = op.get(0, 0);
        if *op != Mat::scalar(d, &c) {
            return Err(Error::Domain("h̄_0⊗A does not act by scalars on the top weight space".into()));
        }
        values.push(c);
    }
    PsiFunctional::new(n, a, values)
}

/// The witness of `(V¹⊗̂V²)⊗̂V³ ≅ V¹⊗̂(V²⊗̂V³)`.
#[derive(Clone, Debug)]
pub struct AssocCheck {
    pub left_dim: usize,
    pub right_dim: usize,
    /// `"associator"` if the natural map restricts, `"hom"` if found by a solve.
    pub method: &'static str,
    pub witness: Option<Mat>,
}

impl AssocCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn assoc_check(v1: &Irreducible, v2: &Irreducible, v3: &Irreducible) -> Result<AssocCheck> {
    let left = hat_tensor(&hat_tensor(v1, v2)?.product, v3)?.product;
    let right = hat_tensor(v1, &hat_tensor(v2, v3)?.product)?.product;
    let (lm, rm) = (leaf_module(&left), leaf_module(&right));
    let (left_dim, right_dim) = (left.dim(), right.dim());
    if left_dim != right_dim {
        return Ok(AssocCheck { left_dim, right_dim, method: "dims", witness: None });
    }
    let rb: Vec<SVec> = (0..right_dim).map(|j| right.ambient.col(j)).collect();
    let coords = BasisCoords::new(right.ambient.nrows(), &rb);
    let cols: Option<Vec<SVec>> = (0..left_dim).map(|j| coords.coords(&left.ambient.col(j))).collect();
    if let Some(cols) = cols {
        let t = Mat::from_cols(right_dim, &cols);
        if t.rank() == right_dim && lm.ops.iter().zip(&rm.ops).all(|(a, b)| t.mul(a) == b.mul(&t)) {
            return Ok(AssocCheck { left_dim, right_dim, method: "associator", witness: Some(t) });
        }
    }
    if left_dim > HOM_SOLVE_LIMIT {
        return Err(Error::Unsupported(format!("Hom solve in dimension {left_dim}")));
    }
    Ok(AssocCheck { left_dim, right_dim, method: "hom", witness: is_isomorphic(&lm, &rm) })
}

fn leaf_module(m: &Irreducible) -> LieModule {
    LieModule { space: m.module.space.clone(), ops: m.factor_ops() }
}

/// Outcome of the tensor product dichotomy for two irreducibles.
#[derive(Clone, Debug)]
pub struct Dichotomy {
    pub full_dim: usize,
    pub hat_dim: usize,
    pub split: bool,
    pub hat_irreducible: bool,
    /// Split case: equal eigenspace dims and an isomorphism between them.
    pub complement_iso: Option<bool>,
    /// Non-split case: the full product is the irreducible `V̂`.
    pub full_is_hat: bool,
}

impl Dichotomy {
    pub fn holds(&self) -> bool {
        self.hat_irreducible
            && if self.split {
                self.complement_iso == Some(true) && 2 * self.hat_dim == self.full_dim
            } else {
                self.full_is_hat && self.hat_dim == self.full_dim
            }
    }
}

/// Checks the dichotomy on `V¹⊗V²`; `irreducible` certifies `V̂`.
pub fn dichotomy(a: &Irreducible, b: &Irreducible, irreducible: impl Fn(&Irreducible) -> Result<bool>) -> Result<Dichotomy> {
    let h = hat_tensor(a, b)?;
    let hat_irreducible = irreducible(&h.product)?;
    let complement_iso = match &h.complement {
        Some(c) if c.dim() == h.product.dim() => {
            if c.dim() > HOM_SOLVE_LIMIT {
                return Err(Error::Unsupported(format!("Hom solve in dimension {}", c.dim())));
            }
            Some(is_isomorphic(&h.product.module, c).is_some())
        }
        Some(_) => Some(false),
        None => None,
    };
    Ok(Dichotomy {
        full_dim: h.full_dim,
        hat_dim: h.product.dim(),
        split: h.split,
        hat_irreducible,
        complement_iso,
        full_is_hat: !h.split && h.embedding == Mat::identity(h.full_dim),
    })
}

/// A finite catalog of irreducible `q`-modules; entry 0 is the trivial one.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    /// Highest weight `λ(h_k)`.
    pub lambda: Vec<Scalar>,
    pub irr: Irreducible,
}

/// Splits a catalog list at commas outside parentheses.
pub fn parse_catalog_names(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let (mut depth, mut cur) = (0, String::new());
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

impl Catalog {
    /// Entries by name: `trivial`, `adjoint`, or `V(a1,...,an)` for the
    /// simple quotient of highest weight `λ(h_k) = a_k`, found with the
    /// given truncation depth. The trivial entry is always present and first.
    pub fn new(q: &Queer, names: &[String], depth: usize) -> Result<Catalog> {
        let complex = CoeffAlgebra::complex();
        let mut entries = vec![CatalogEntry {
            name: "trivial".into(),
            lambda: vec![Scalar::zero(); q.n],
            irr: Irreducible::trivial(q.g.clone()),
        }];
        for name in names {
            if name == "trivial" {
                continue;
            }
            if entries.iter().any(|e| &e.name == name) {
                return Err(Error::Parse(format!("catalog entry {name} repeated")));
            }
            let module = if name == "adjoint" {
                q.g.adjoint()
            } else if let Some(inner) = name.strip_prefix("V(").and_then(|r| r.strip_suffix(')')) {
                let lambda = inner
                    .split(',')
                    .map(|x| x.trim().parse::<i64>().map(Scalar::from_int).map_err(|e| Error::Parse(format!("{name}: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                if lambda.len() != q.n {
                    return Err(Error::Parse(format!("{name}: expected {} coordinates", q.n)));
                }
                let psi = PsiFunctional::evaluation(&complex, &lambda, 0)?;
                let sq = simple_quotient(q, &psi, depth)?;
                let m = sq.module.ok_or_else(|| Error::Domain(format!("{name}: truncation at depth {depth} is inconclusive")))?;
                m.module
            } else {
                return Err(Error::Parse(format!("unknown catalog entry {name}")));
            };
            let w = WeightModule::from_module(q, &complex, module.clone())?;
            let irr = Irreducible::new(q.g.clone(), module)?;
            entries.push(CatalogEntry { name: name.clone(), lambda: w.lambda, irr });
        }
        Ok(Catalog { n: q.n, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.name == name)
    }

    /// For each entry, the entry isomorphic to its twist by `γ`.
    pub fn twist_table(&self, gamma: &Mat) -> Result<Vec<usize>> {
        self.entries
            .iter()
            .map(|e| {
                let t = e.irr.twist(gamma);
                self.entries
                    .iter()
                    .position(|f| {
                        f.irr.dim() == t.dim() && f.lambda == e.lambda && is_isomorphic(&t.module, &f.irr.module).is_some()
                    })
                    .ok_or_else(|| Error::Domain(format!("twist of {} is not in the catalog", e.name)))
            })
            .collect()
    }
}

/// `êv_{m_1..m_k}(V_1..V_k)`: the `⊗̂`-product of the factors pulled back
/// along evaluation. Trivial factors are dropped.
#[derive(Clone, Debug)]
pub struct EvModule {
    pub points: Vec<usize>,
    pub product: Option<Irreducible>,
    pub split: Vec<bool>,
    pub module: LieModule,
}

impl EvModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn schur(&self) -> SchurData {
        self.product.as_ref().map_or_else(SchurData::type_m, |p| p.schur.clone())
    }
}

pub fn ev_hat(m: &MapSuper, factors: &[(usize, &Irreducible)]) -> Result<EvModule> {
    let live: Vec<(usize, &Irreducible)> = factors.iter().filter(|(_, r)| !r.is_trivial()).cloned().collect();
    for (_, r) in &live {
        if r.algebra.dim() != m.base.dim() {
            return Err(Error::Dimension("factor is not a module of the base algebra".into()));
        }
    }
    let points: Vec<usize> = live.iter().map(|(p, _)| *p).collect();
    let ev = m.ev(&points)?;
    let Some(((_, first), rest)) = live.split_first() else {
        let module = LieModule { space: GradedSpace::new(1, 0), ops: vec![Mat::zeros(1, 1); m.g.dim()] };
        return Ok(EvModule { points, product: None, split: Vec::new(), module });
    };
    let mut prod = (*first).clone();
    let mut split = Vec::new();
    for (_, r) in rest {
        let h = hat_tensor(&prod, r)?;
        split.push(h.split);
        prod = h.product;
    }
    let dq = m.base.dim();
    let evt = ev.mat.transpose();
    let images: Vec<SVec> =
        (0..m.g.dim()).map(|z| sv_collect(evt.row(z).iter().map(|(r, c)| (prod.factors[r / dq][r % dq], c.clone())))).collect();
    let module = prod.module.pullback(&images);
    Ok(EvModule { points, product: Some(prod), split, module })
}

/// A map from the declared points of `A` to catalog indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PsiMap(pub Vec<usize>);

impl PsiMap {
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|p| self.0[*p] != 0).collect()
    }

    pub fn describe(&self, a: &CoeffAlgebra, cat: &Catalog) -> String {
        let s: Vec<String> =
            self.support().iter().map(|p| format!("{}:{}", a.points[*p].label, cat.entries[self.0[*p]].name)).collect();
        if s.is_empty() {
            "0".into()
        } else {
            s.join(" ")
        }
    }

    /// Whether `Ψ(γm) ≅ Ψ(m)∘γ⁻¹` for every `γ`, with `twist[e][k]` the entry
    /// of the twist of entry `k` by element `e`.
    pub fn is_equivariant(&self, a: &CoeffAlgebra, act: &GammaAction, twists: &[Vec<usize>]) -> bool {
        act.elements()
            .iter()
            .zip(twists)
            .all(|(e, tw)| (0..self.0.len()).all(|p| act.move_point(a, e, p).is_some_and(|gp| self.0[gp] == tw[self.0[p]])))
    }
}

/// `êv_Ψ` over the catalog.
pub fn ev_psi(m: &MapSuper, cat: &Catalog, psi: &PsiMap) -> Result<EvModule> {
    let f: Vec<(usize, &Irreducible)> = psi.support().into_iter().map(|p| (p, &cat.entries[psi.0[p]].irr)).collect();
    ev_hat(m, &f)
}

/// Expected top functional `Σ ψ_i` of `êv_Ψ`.
pub fn expected_psi(a: &CoeffAlgebra, cat: &Catalog, psi: &PsiMap) -> Result<PsiFunctional> {
    psi.support().into_iter().try_fold(PsiFunctional::zero(cat.n, a), |acc, p| {
        acc.add(&PsiFunctional::evaluation(a, &cat.entries[psi.0[p]].lambda, p)?)
    })
}

/// One orbit representative per orbit: the smallest point.
pub fn orbit_representatives(orbits: &[Vec<usize>]) -> Vec<usize> {
    orbits.iter().map(|o| o[0]).collect()
}

/// Twisted data for `(q⊗A)^Γ`.
#[derive(Clone, Debug)]
pub struct Twisted {
    pub act: GammaAction,
    pub inv: crate::mapsuper::InvariantSub,
    pub orbits: Vec<Vec<usize>>,
    /// `twists[e][k]`: entry of catalog entry `k` twisted by `γ_e⁻¹`.
    pub twists: Vec<Vec<usize>>,
}

impl Twisted {
    pub fn new(m: &MapSuper, act: GammaAction, cat: &Catalog) -> Result<Twisted> {
        let rep = act.validate(&m.a, &m.base);
        if !rep.valid() {
            return Err(Error::Domain(format!("invalid group action: {rep:?}")));
        }
        if !rep.free {
            let bad = (0..m.a.points.len())
                .find(|p| act.elements().iter().skip(1).any(|e| act.move_point(&m.a, e, *p) == Some(*p)))
                .map_or_else(|| "?".to_string(), |p| m.a.points[p].label.clone());
            return Err(Error::Domain(format!("freeness violated at {bad}")));
        }
        let inv = m.invariants(&act)?;
        let twists = act
            .elements()
            .iter()
            .map(|e| {
                let g = act.element_on_g(e, m.base.dim()).inverse().expect("automorphism");
                cat.twist_table(&g)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Twisted { act, inv, orbits: rep.orbits, twists })
    }

    /// Extends values on orbit representatives equivariantly.
    pub fn extend(&self, m: &MapSuper, reps_values: &[usize]) -> PsiMap {
        let mut v = vec![0; m.a.points.len()];
        for (orbit, k) in self.orbits.iter().zip(reps_values) {
            let r = orbit[0];
            for (e, tw) in self.act.elements().iter().zip(&self.twists) {
                if let Some(p) = self.act.move_point(&m.a, e, r) {
                    v[p] = tw[*k];
                }
            }
        }
        PsiMap(v)
    }

    /// Support of `Ψ` inside the orbit representatives.
    pub fn x_star(&self, psi: &PsiMap) -> Vec<usize> {
        orbit_representatives(&self.orbits).into_iter().filter(|p| psi.0[*p] != 0).collect()
    }
}

/// `êv_Ψ^Γ`: `êv` at orbit representatives restricted to `(q⊗A)^Γ`.
pub fn ev_hat_gamma(m: &MapSuper, tw: &Twisted, cat: &Catalog, psi: &PsiMap) -> Result<(EvModule, LieModule)> {
    if !psi.is_equivariant(&m.a, &tw.act, &tw.twists) {
        return Err(Error::Domain("Ψ is not equivariant".into()));
    }
    let xs = tw.x_star(psi);
    let f: Vec<(usize, &Irreducible)> = xs.iter().map(|p| (*p, &cat.entries[psi.0[*p]].irr)).collect();
    let full = ev_hat(m, &f)?;
    m.ev_gamma(&tw.act, &tw.inv, &xs)?;
    let restricted = tw.inv.restrict(&full.module);
    Ok((full, restricted))
}

/// Exact equality of the restrictions of `êv_m(ρ)` and `êv_{γm}(ρ∘γ⁻¹)` for
/// every `γ`, plus `ρ∘γ⁻¹` lying in the catalog.
pub fn invariance_check(m: &MapSuper, tw: &Twisted, cat: &Catalog, psi: &PsiMap) -> Result<bool> {
    let xs = tw.x_star(psi);
    let base = tw.inv.restrict(&ev_psi_at(m, cat, psi, &xs, None)?.module);
    for e in tw.act.elements() {
        let moved: Option<Vec<usize>> = xs.iter().map(|p| tw.act.move_point(&m.a, &e, *p)).collect();
        let Some(moved) = moved else {
            return Ok(false);
        };
        let ginv = tw.act.element_on_g(&e, m.base.dim()).inverse().expect("automorphism");
        let other = tw.inv.restrict(&ev_psi_at(m, cat, psi, &xs, Some((&moved, &ginv)))?.module);
        if other.ops != base.ops {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ev_psi_at(m: &MapSuper, cat: &Catalog, psi: &PsiMap, xs: &[usize], moved: Option<(&[usize], &Mat)>) -> Result<EvModule> {
    let irrs: Vec<Irreducible> = xs
        .iter()
        .map(|p| {
            let r = &cat.entries[psi.0[*p]].irr;
            match moved {
                Some((_, g)) => r.twist(g),
                None => r.clone(),
            }
        })
        .collect();
    let pts: Vec<usize> = moved.map_or_else(|| xs.to_vec(), |(mv, _)| mv.to_vec());
    let f: Vec<(usize, &Irreducible)> = pts.iter().cloned().zip(irrs.iter()).collect();
    ev_hat(m, &f)
}

/// One row of a classification.
#[derive(Clone, Debug)]
pub struct ClassRow {
    pub psi: PsiMap,
    pub label: String,
    pub dim: usize,
    pub factor_types: Vec<String>,
    pub schur: String,
    pub irreducible: IrrCert,
    pub support: Vec<usize>,
    pub reduced: bool,
    /// Top functional equals `Σ ψ_i`.
    pub top_character: bool,
    /// Twisted case: evaluation at `X_*` is onto, the restriction keeps
    /// the operator span, the support lies in `X_*`, and translates agree.
    pub surjective: Option<bool>,
    pub restriction: Option<bool>,
    pub invariance: Option<bool>,
}

impl ClassRow {
    pub fn ok(&self) -> bool {
        self.irreducible.irreducible()
            && self.reduced
            && self.top_character
            && self.surjective != Some(false)
            && self.restriction != Some(false)
            && self.invariance != Some(false)
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub algebra: String,
    pub twisted: bool,
    pub rows: Vec<ClassRow>,
    /// `distinct[i][j]`: the invariant separating rows `i` and `j`, `"="` on
    /// the diagonal, `"iso"` if an isomorphism was found.
    pub distinct: Vec<Vec<String>>,
}

impl Classification {
    pub fn all_distinct(&self) -> bool {
        (0..self.rows.len())
            .all(|i| (0..self.rows.len()).all(|j| i == j || self.distinct[i][j] != "iso" && self.distinct[i][j] != "?"))
    }

    pub fn failures(&self) -> Vec<String> {
        let mut f: Vec<String> = self.rows.iter().filter(|r| !r.ok()).map(|r| format!("row {} fails: {r:?}", r.label)).collect();
        if !self.all_distinct() {
            f.push("two rows are not separated".into());
        }
        f
    }
}

/// All (equivariant) `Ψ` over the catalog with their modules, each certified
/// irreducible and pairwise non-isomorphic.
pub fn classify_enumerate(q: &Queer, a: &CoeffAlgebra, act: Option<GammaAction>, cat: &Catalog) -> Result<Classification> {
    classify_bounded(q, a, act, cat, None)
}

/// As [`classify_enumerate`], keeping only `Ψ` whose support (counted on
/// orbit representatives in the twisted case) has at most `max_support`
/// points.
pub fn classify_bounded(
    q: &Queer,
    a: &CoeffAlgebra,
    act: Option<GammaAction>,
    cat: &Catalog,
    max_support: Option<usize>,
) -> Result<Classification> {
    let m = tensor_lie(&q.g, a);
    let tw = act.map(|g| Twisted::new(&m, g, cat)).transpose()?;
    let slots = tw.as_ref().map_or(a.points.len(), |t| t.orbits.len());
    let mut psis = Vec::new();
    let total = cat.len().pow(slots as u32);
    for code in 0..total {
        let vals: Vec<usize> = (0..slots).map(|s| code / cat.len().pow((slots - 1 - s) as u32) % cat.len()).collect();
        if max_support.is_some_and(|k| vals.iter().filter(|v| **v != 0).count() > k) {
            continue;
        }
        psis.push(match &tw {
            Some(t) => t.extend(&m, &vals),
            None => PsiMap(vals),
        });
    }
    let mut rows = Vec::new();
    let mut modules = Vec::new();
    let mut anns = Vec::new();
    for psi in psis {
        let (full, module) = match &tw {
            Some(t) => ev_hat_gamma(&m, t, cat, &psi)?,
            None => {
                let e = ev_psi(&m, cat, &psi)?;
                let md = e.module.clone();
                (e, md)
            }
        };
        let cert_full = certify_irreducible(q, a, &full.module)?;
        let top = top_psi(q, a, &full.module)?;
        let expected = match &tw {
            Some(t) => {
                let xs = t.x_star(&psi);
                let mut only = vec![0; a.points.len()];
                for p in &xs {
                    only[*p] = psi.0[*p];
                }
                expected_psi(a, cat, &PsiMap(only))?
            }
            None => expected_psi(a, cat, &psi)?,
        };
        let shown = tw.as_ref().map_or_else(|| psi.support(), |t| t.x_star(&psi));
        let factor_types: Vec<String> = shown.iter().map(|p| cat.entries[psi.0[*p]].irr.schur.label().to_string()).collect();
        let (irreducible, support, reduced, surjective, restriction, invariance, ann) = match &tw {
            Some(t) => {
                let xs = t.x_star(&psi);
                let surj = m.ev_gamma(&t.act, &t.inv, &xs)?.is_surjective();
                let span = same_operator_span(&module.ops, &full.module.ops);
                let untw = m.ann_and_support(&full.module);
                let in_x = untw.support.iter().all(|p| xs.contains(p));
                let r = m.ann_and_support_twisted(&t.act, &t.inv, &module);
                let inv_ok = invariance_check(&m, t, cat, &psi)?;
                let cert = IrrCert::ImageSpan(cert_full.irreducible() && span);
                (cert, r.support.clone(), r.reduced && untw.reduced, Some(surj), Some(in_x && span), Some(inv_ok), r.ann)
            }
            None => {
                let r = m.ann_and_support(&module);
                let ok_support = r.support == psi.support();
                (cert_full, r.support.clone(), r.reduced && ok_support, None, None, None, r.ann)
            }
        };
        rows.push(ClassRow {
            label: psi.describe(a, cat),
            psi,
            dim: module.dim(),
            factor_types,
            schur: full.schur().label().to_string(),
            irreducible,
            support,
            reduced,
            top_character: top == expected,
            surjective,
            restriction,
            invariance,
        });
        modules.push((module, top));
        anns.push(ann);
    }
    let k = rows.len();
    let mut distinct = vec![vec![String::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            distinct[i][j] = if i == j {
                "=".into()
            } else if rows[i].dim != rows[j].dim {
                "dim".into()
            } else if anns[i] != anns[j] {
                "ann".into()
            } else if tw.is_none() && modules[i].1 != modules[j].1 {
                "psi".into()
            } else if rows[i].dim <= HOM_SOLVE_LIMIT {
                if is_isomorphic(&modules[i].0, &modules[j].0).is_some() {
                    "iso".into()
                } else {
                    "hom".into()
                }
            } else {
                "?".into()
            };
        }
    }
    let algebra = a.labels.join(",");
    Ok(Classification { algebra, twisted: tw.is_some(), rows, distinct })
}

/// Checks that `ops` supercommute with `phi`.
pub fn supercommutes(m: &LieModule, g: &LieSuper, phi: &Mat) -> bool {
    m.ops.iter().enumerate().all(|(i, op)| supercommutator(op, g.parity(i), phi, 1).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{m_basis, make_q, natural_action, q_basis};
    use crate::cartan::{build_h, cartan_subalgebra};
    use crate::coeff::scale_variable;
    use crate::lie::from_assoc;
    use crate::scalar::tower_scope;

    /// `C^{1|1}` as a module of the Lie superalgebra of `Q(1)` or `M(1|1)`.
    fn standard(basis: &[(Mat, Parity, String)]) -> Irreducible {
        let alg = crate::assoc::AssocSuper::from_matrix_basis(basis).unwrap();
        let act = natural_action(basis, GradedSpace::new(1, 1));
        Irreducible::new(from_assoc(&alg), LieModule { space: act.space, ops: act.ops }).unwrap()
    }

    #[test]
    fn schur_of_small_modules() {
        tower_scope(|| {
            let q1 = standard(&q_basis(1));
            assert!(q1.schur.is_type_q());
            let phi = q1.schur.phi.clone().unwrap();
            assert_eq!(phi.mul(&phi), Mat::scalar(2, &Scalar::from_int(-1)));
            assert!(supercommutes(&q1.module, &q1.algebra, &phi));
            let m11 = standard(&m_basis(1, 1));
            assert!(!m11.schur.is_type_q());
            let t = Irreducible::trivial(from_assoc(&make_q(1)));
            assert_eq!(schur_data(&t.module).unwrap(), SchurData::type_m());
        });
    }

    #[test]
    fn standard_q1_squared() {
        tower_scope(|| {
            let v = standard(&q_basis(1));
            let h = hat_tensor(&v, &v).unwrap();
            assert!(h.split);
            assert_eq!((h.full_dim, h.product.dim()), (4, 2));
            assert!(h.product.module.is_module_of(&h.product.algebra));
            assert!(h.product.module.density().is_irreducible());
            let c = h.complement.clone().unwrap();
            assert!(is_isomorphic(&h.product.module, &c).is_some());
            let d = dichotomy(&v, &v, |p| Ok(p.module.density().is_irreducible())).unwrap();
            assert!(d.holds());
            assert!(schur_data(&h.product.module).unwrap() == SchurData::type_m());
        });
    }

    #[test]
    fn associativity_with_q_factors() {
        tower_scope(|| {
            let v = standard(&q_basis(1));
            let w = standard(&m_basis(1, 1));
            let r = assoc_check(&v, &v, &v).unwrap();
            assert!(r.holds());
            assert_eq!(r.left_dim, 4);
            let r = assoc_check(&v, &v, &w).unwrap();
            assert!(r.holds());
            let r = assoc_check(&v, &w, &v).unwrap();
            assert!(r.holds());
            let t = Irreducible::trivial(from_assoc(&make_q(1)));
            assert_eq!(assoc_check(&t, &t, &t).unwrap().method, "associator");
        });
    }

    fn h_irreducible(n: usize, lambda: &[i64]) -> Irreducible {
        let a = CoeffAlgebra::complex();
        let q = Queer::new(n);
        let lam: Vec<Scalar> = lambda.iter().map(|x| Scalar::from_int(*x)).collect();
        let psi = PsiFunctional::evaluation(&a, &lam, 0).unwrap();
        let h = build_h(&psi).unwrap();
        Irreducible::new(cartan_subalgebra(&q), h.module).unwrap()
    }

    #[test]
    fn cartan_modules_of_odd_rank_split() {
        tower_scope(|| {
            let v = h_irreducible(3, &[1, 2, 4]);
            assert!(v.schur.is_type_q());
            let w = h_irreducible(3, &[2, 1, 1]);
            let d = dichotomy(&v, &w, |p| Ok(p.module.density().is_irreducible())).unwrap();
            assert!(d.split && d.holds());
            assert_eq!(d.full_dim, 2 * d.hat_dim);
            let m = h_irreducible(2, &[1, 3]);
            assert!(!m.schur.is_type_q());
            let h = hat_tensor(&v, &m).unwrap();
            assert!(!h.split && h.product.schur.is_type_q());
            assert!(supercommutes(&h.product.module, &h.product.algebra, h.product.schur.phi.as_ref().unwrap()));
            assert!(assoc_check(&v, &w, &m).unwrap().holds());
        });
    }

    #[test]
    fn adjoint_is_type_m_and_catalog() {
        tower_scope(|| {
            let q = Queer::new(2);
            let cat = Catalog::new(&q, &parse_catalog_names("trivial,adjoint"), 6).unwrap();
            assert_eq!(cat.len(), 2);
            assert_eq!(cat.entries[1].lambda, vec![Scalar::one(), Scalar::one()]);
            assert!(!cat.entries[1].irr.schur.is_type_q());
            let sigma = q.sign_conjugation();
            assert_eq!(cat.twist_table(&sigma).unwrap(), vec![0, 1]);
            assert_eq!(parse_catalog_names("trivial, V(2,1),adjoint"), vec!["trivial", "V(2,1)", "adjoint"]);
            assert!(Catalog::new(&q, &["bogus".into()], 4).is_err());
        });
    }

    #[test]
    fn evaluation_modules_two_point() {
        tower_scope(|| {
            let q = Queer::new(2);
            let a = CoeffAlgebra::two_point();
            let m = tensor_lie(&q.g, &a);
            let cat = Catalog::new(&q, &["adjoint".into()], 6).unwrap();
            let zero = ev_psi(&m, &cat, &PsiMap(vec![0, 0])).unwrap();
            assert_eq!(zero.dim(), 1);
            assert!(zero.module.is_module_of(&m.g));
            let e0 = ev_psi(&m, &cat, &PsiMap(vec![1, 0])).unwrap();
            let e1 = ev_psi(&m, &cat, &PsiMap(vec![0, 1])).unwrap();
            assert_eq!(e0.dim(), 16);
            assert!(e0.module.is_module_of(&m.g));
            assert!(certify_irreducible(&q, &a, &e0.module).unwrap().irreducible());
            assert!(is_isomorphic(&e0.module, &e1.module).is_none());
            assert!(is_isomorphic(&e0.module, &e0.module).is_some());
            assert_eq!(top_psi(&q, &a, &e0.module).unwrap(), expected_psi(&a, &cat, &PsiMap(vec![1, 0])).unwrap());
            let r = m.ann_and_support(&e1.module);
            assert_eq!(r.support, vec![1]);
            assert!(r.reduced);
        });
    }

    #[test]
    fn hw_isomorphism_matches_hom_solve() {
        tower_scope(|| {
            let q = Queer::new(2);
            let a = CoeffAlgebra::complex();
            let adj = q.g.adjoint();
            let psi = PsiFunctional::evaluation(&a, &[Scalar::one(), Scalar::one()], 0).unwrap();
            let v = simple_quotient(&q, &psi, 6).unwrap().module.unwrap().module;
            let t = hw_isomorphism(&q, &a, &v, &adj).unwrap().unwrap();
            assert_eq!(t.rank(), 16);
            assert!(is_isomorphic(&v, &adj).is_some());
        });
    }

    #[test]
    fn gamma_twisted_two_point() {
        tower_scope(|| {
            let q = Queer::new(2);
            let a = CoeffAlgebra::two_point();
            let cat = Catalog::new(&q, &["adjoint".into()], 6).unwrap();
            let act = GammaAction {
                orders: vec![2],
                on_a: vec![scale_variable(&a, &Scalar::from_int(-1))],
                on_g: vec![q.sign_conjugation()],
            };
            let c = classify_enumerate(&q, &a, Some(act), &cat).unwrap();
            assert_eq!(c.rows.len(), 2);
            assert_eq!(c.rows.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![1, 16]);
            assert!(c.failures().is_empty(), "{:?}", c.failures());
            let m = tensor_lie(&q.g, &CoeffAlgebra::dual());
            let bad = GammaAction {
                orders: vec![2],
                on_a: vec![scale_variable(&CoeffAlgebra::dual(), &Scalar::from_int(-1))],
                on_g: vec![q.sign_conjugation()],
            };
            let err = Twisted::new(&m, bad, &cat).unwrap_err();
            assert!(err.to_string().contains("freeness violated at"));
        });
    }
}

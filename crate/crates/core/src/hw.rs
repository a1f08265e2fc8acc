//! Highest weight modules of `q(n)⊗A`: truncated Verma modules, their
//! maximal submodules and simple quotients, singular vectors and the
//! irreducibility criterion for finite-dimensional weight modules.
//!
//! Weights are written `λ - β` with `β ∈ Q⁺` in simple-root coordinates.
//! Weight keys are ordered graded-lex: by height, then lexicographically.

use std::collections::{BTreeMap, HashMap};

use crate::assoc::operator_closure;
use crate::cartan::{build_h, classify_cartan_module, CartanModule, PsiFunctional};
use crate::coeff::{CoeffAlgebra, Ideal};
use crate::error::{Error, Result};
use crate::graded::{koszul, GradedSpace, Parity};
use crate::lie::{LieModule, RootTag};
use crate::linalg::{sv_collect, Echelon, Mat, SVec};
use crate::mapsuper::{tensor_lie, MapSuper};
use crate::queer::Queer;
use crate::scalar::Scalar;

pub fn height(beta: &[i32]) -> i32 {
    beta.iter().sum()
}

/// Graded-lex key of `β`.
pub fn weight_key(beta: &[i32]) -> (i32, Vec<i32>) {
    (height(beta), beta.to_vec())
}

/// Default truncation depth `n(n+1)`.
pub fn default_depth(n: usize) -> usize {
    n * (n + 1)
}

/// `-α` for a negative root tag, `α` for a positive one.
fn root_abs(t: &RootTag) -> Option<Vec<i32>> {
    match t {
        RootTag::Root(r) => Some(r.iter().map(|x| x.abs()).collect()),
        RootTag::Cartan => None,
    }
}

/// A finite-dimensional module of `q⊗A` (operators for every basis element,
/// `x⊗a_j` at `x*dim(A) + j`) whose basis consists of weight vectors.
#[derive(Clone, Debug)]
pub struct WeightModule {
    pub n: usize,
    pub a: CoeffAlgebra,
    pub module: LieModule,
    /// `β` with weight `λ - β` for every basis vector.
    pub weights: Vec<Vec<i32>>,
    /// `λ(h_k)`.
    pub lambda: Vec<Scalar>,
    pub psi: Option<PsiFunctional>,
}

/// One row of a weight table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRow {
    pub beta: Vec<i32>,
    pub dim: usize,
    pub singular: usize,
}

impl WeightModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Reads weights off the diagonal action of `h_k⊗1`. The highest weight
    /// is the unique maximal one; fails if there is none or if some weight
    /// is not of the form `λ - β`.
    pub fn from_module(q: &Queer, a: &CoeffAlgebra, module: LieModule) -> Result<WeightModule> {
        let n = q.n;
        let da = a.dim();
        if module.ops.len() != q.dim() * da {
            return Err(Error::Dimension(format!("expected {} operators, got {}", q.dim() * da, module.ops.len())));
        }
        let d = module.dim();
        let one = a.one();
        let hs: Vec<Mat> =
            (0..n).map(|k| one.iter().fold(Mat::zeros(d, d), |acc, (j, c)| acc.axpy(c, &module.ops[q.h(k) * da + j]))).collect();
        for h in &hs {
            if h.entries().any(|(i, j, _)| i != j) {
                return Err(Error::Domain("h̄_0⊗1 is not diagonal in the given basis".into()));
            }
        }
        let vals: Vec<Vec<Scalar>> = (0..d).map(|i| hs.iter().map(|h| h.get(i, i)).collect()).collect();
        let mut distinct: Vec<Vec<Scalar>> = vals.clone();
        distinct.sort();
        distinct.dedup();
        let diff = |x: &[Scalar], y: &[Scalar]| -> Option<Vec<i32>> {
            let w: Vec<Scalar> = x.iter().zip(y).map(|(a, b)| a - b).collect();
            q.weight_to_root(&w)
        };
        let top: Vec<&Vec<Scalar>> = distinct
            .iter()
            .filter(|mu| !distinct.iter().any(|nu| nu != *mu && diff(nu, mu).is_some_and(|b| b.iter().all(|x| *x >= 0))))
            .collect();
        let [lambda] = top.as_slice() else {
            return Err(Error::Domain(format!("{} maximal weights", top.len())));
        };
        let lambda = (*lambda).clone();
        let weights = vals
            .iter()
            .map(|mu| {
                diff(&lambda, mu)
                    .filter(|b| b.iter().all(|x| *x >= 0))
                    .ok_or_else(|| Error::Domain("a weight is not below the highest weight".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightModule { n, a: a.clone(), module, weights, lambda, psi: None })
    }

    /// Weight spaces in graded-lex order.
    pub fn weight_spaces(&self) -> Vec<(Vec<i32>, Vec<usize>)> {
        let mut m: BTreeMap<(i32, Vec<i32>), Vec<usize>> = BTreeMap::new();
        for (i, b) in self.weights.iter().enumerate() {
            m.entry(weight_key(b)).or_default().push(i);
        }
        m.into_iter().map(|((_, b), v)| (b, v)).collect()
    }

    fn ops_where(&self, q: &Queer, pred: impl Fn(&RootTag) -> bool) -> Vec<&Mat> {
        let da = self.a.dim();
        (0..q.dim() * da).filter(|k| pred(&q.roots()[k / da])).map(|k| &self.module.ops[k]).collect()
    }

    /// Per weight, the vectors killed by `𝔫⁺⊗A`.
    pub fn singular_vectors(&self, q: &Queer) -> Vec<(Vec<i32>, Vec<SVec>)> {
        let raising = self.ops_where(q, RootTag::is_positive);
        self.weight_spaces()
            .into_iter()
            .map(|(b, idx)| {
                let blocks: Vec<Mat> =
                    raising.iter().map(|op| op.submatrix(&(0..self.dim()).collect::<Vec<_>>(), &idx)).collect();
                let stacked = Mat::stack(idx.len(), &blocks);
                let ker = if blocks.is_empty() { unit_vectors(idx.len()) } else { stacked.nullspace() };
                let vecs = ker.into_iter().map(|v| v.into_iter().map(|(u, c)| (idx[u], c)).collect()).collect();
                (b, vecs)
            })
            .collect()
    }

    pub fn table(&self, q: &Queer) -> Vec<WeightRow> {
        self.singular_vectors(q)
            .into_iter()
            .zip(self.weight_spaces())
            .map(|((beta, s), (_, idx))| WeightRow { beta, dim: idx.len(), singular: s.len() })
            .collect()
    }

    /// The top weight space as a module of `𝔥⊗A`.
    pub fn top_cartan_module(&self, q: &Queer) -> LieModule {
        let da = self.a.dim();
        let top: Vec<usize> = (0..self.dim()).filter(|i| self.weights[*i].iter().all(|x| *x == 0)).collect();
        let even = top.iter().filter(|i| self.module.space.parity(**i) == 0).count();
        let ops = q
            .cartan()
            .iter()
            .flat_map(|x| (0..da).map(move |j| x * da + j))
            .map(|k| self.module.ops[k].submatrix(&top, &top))
            .collect();
        LieModule { space: GradedSpace::new(even, top.len() - even), ops }
    }

    /// Irreducibility criterion: singular vectors only at `λ`, all of `M_λ`
    /// singular, `M_λ` irreducible over `𝔥⊗A`, and `M_λ` generating `M`
    /// under `𝔫⁻⊗A`.
    pub fn is_irreducible_hw(&self, q: &Queer) -> bool {
        self.hw_report(q).irreducible()
    }

    pub fn hw_report(&self, q: &Queer) -> HwReport {
        let sing = self.singular_vectors(q);
        let spaces = self.weight_spaces();
        let top_dim = spaces.first().filter(|(b, _)| height(b) == 0).map_or(0, |(_, v)| v.len());
        let concentrated = sing.iter().all(|(b, s)| height(b) == 0 || s.is_empty());
        let top_singular = sing.first().filter(|(b, _)| height(b) == 0).map_or(0, |(_, s)| s.len()) == top_dim;
        let top_irreducible = classify_cartan_module(self.n, &self.a, &self.top_cartan_module(q)).is_ok();
        let lowering: Vec<Mat> = self.ops_where(q, RootTag::is_negative).into_iter().cloned().collect();
        let top: Vec<SVec> =
            (0..self.dim()).filter(|i| self.weights[*i].iter().all(|x| *x == 0)).map(|i| vec![(i, Scalar::one())]).collect();
        let generated = spin(self.dim(), &top, &lowering).rank() == self.dim();
        HwReport { concentrated, top_singular, top_irreducible, generated }
    }

    /// Pullback along `q⊗A -> q⊗B` for a quotient `B = A/I`.
    fn pullback_quotient(&self, a: &CoeffAlgebra, proj: &Mat, qdim: usize) -> WeightModule {
        let db = self.a.dim();
        let da = a.dim();
        let d = self.dim();
        let ops = (0..qdim * da)
            .map(|k| {
                let (x, j) = (k / da, k % da);
                proj.col(j).iter().fold(Mat::zeros(d, d), |acc, (t, c)| acc.axpy(c, &self.module.ops[x * db + t]))
            })
            .collect();
        WeightModule {
            n: self.n,
            a: a.clone(),
            module: LieModule { space: self.module.space.clone(), ops },
            weights: self.weights.clone(),
            lambda: self.lambda.clone(),
            psi: None,
        }
    }
}

/// The four conditions of the irreducibility criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HwReport {
    pub concentrated: bool,
    pub top_singular: bool,
    pub top_irreducible: bool,
    pub generated: bool,
}

impl HwReport {
    pub fn irreducible(&self) -> bool {
        self.concentrated && self.top_singular && self.top_irreducible && self.generated
    }
}

fn unit_vectors(k: usize) -> Vec<SVec> {
    (0..k).map(|i| vec![(i, Scalar::one())]).collect()
}

/// Span of `start` closed under the operators.
pub fn spin(dim: usize, start: &[SVec], ops: &[Mat]) -> Echelon {
    let mut e = Echelon::new(dim);
    let mut queue: Vec<SVec> = Vec::new();
    for v in start {
        if e.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for op in ops {
            let w = op.apply(&v);
            if !w.is_empty() && e.insert(&w) {
                queue.push(w);
            }
        }
    }
    e
}

type Mono = Vec<u16>;

/// PBW straightening in `U(q⊗B)` acting on `U(𝔫⁻⊗B)⊗H(ψ)`.
struct Straightener {
    g: MapSuper,
    /// Root tag per basis element of `q⊗B`.
    tags: Vec<RootTag>,
    /// Basis indices of the lowering operators, in order.
    lower: Vec<usize>,
    lpos: Vec<Option<u16>>,
    lpar: Vec<Parity>,
    lbeta: Vec<Vec<i32>>,
    /// Action of `𝔥⊗B` on `H(ψ)`, indexed like `q⊗B`.
    hops: Vec<Option<Mat>>,
    dim_h: usize,
    memo_u: HashMap<(u16, Mono), Vec<(Mono, Scalar)>>,
    memo_v: HashMap<(usize, Mono), Vec<(Mono, Mat)>>,
}

impl Straightener {
    fn new(q: &Queer, h: &CartanModule) -> Straightener {
        let b = &h.psi.a;
        let db = b.dim();
        let g = tensor_lie(&q.g, b);
        let tags: Vec<RootTag> = (0..g.g.dim()).map(|k| q.roots()[k / db].clone()).collect();
        let lower: Vec<usize> = (0..g.g.dim()).filter(|k| tags[*k].is_negative()).collect();
        let mut lpos = vec![None; g.g.dim()];
        for (p, k) in lower.iter().enumerate() {
            lpos[*k] = Some(p as u16);
        }
        let lpar = lower.iter().map(|k| g.g.parity(*k)).collect();
        let lbeta = lower.iter().map(|k| root_abs(&tags[*k]).expect("root")).collect();
        let cartan = q.cartan();
        let mut hops = vec![None; g.g.dim()];
        for (c, x) in cartan.iter().enumerate() {
            for j in 0..db {
                hops[x * db + j] = Some(h.module.ops[c * db + j].clone());
            }
        }
        Straightener { g, tags, lower, lpos, lpar, lbeta, hops, dim_h: h.dim(), memo_u: HashMap::new(), memo_v: HashMap::new() }
    }

    fn mono_height(&self, m: &[u16]) -> i32 {
        m.iter().map(|p| height(&self.lbeta[*p as usize])).sum()
    }

    fn mono_beta(&self, m: &[u16]) -> Vec<i32> {
        let n = self.lbeta.first().map_or(0, Vec::len);
        let mut b = vec![0; n];
        for p in m {
            for (x, y) in b.iter_mut().zip(&self.lbeta[*p as usize]) {
                *x += y;
            }
        }
        b
    }

    fn mono_parity(&self, m: &[u16]) -> Parity {
        (m.iter().filter(|p| self.lpar[**p as usize] == 1).count() % 2) as Parity
    }

    /// Lowering operators in `[x, y]`, as positions.
    fn lower_bracket(&self, x: usize, y: usize) -> Vec<(u16, Scalar)> {
        self.g.g.bracket[x][y].iter().map(|(k, c)| (self.lpos[*k].expect("lowering bracket"), c.clone())).collect()
    }

    /// `y_j · m` in PBW form.
    fn lmul_u(&mut self, j: u16, m: &[u16]) -> Vec<(Mono, Scalar)> {
        let Some(&i1) = m.first() else {
            return vec![(vec![j], Scalar::one())];
        };
        let odd_j = self.lpar[j as usize] == 1;
        if j < i1 || (j == i1 && !odd_j) {
            let mut v = Vec::with_capacity(m.len() + 1);
            v.push(j);
            v.extend_from_slice(m);
            return vec![(v, Scalar::one())];
        }
        let key = (j, m.to_vec());
        if let Some(v) = self.memo_u.get(&key) {
            return v.clone();
        }
        let rest = &m[1..];
        let mut acc: BTreeMap<Mono, Scalar> = BTreeMap::new();
        let (x, y) = (self.lower[j as usize], self.lower[i1 as usize]);
        if j == i1 {
            // y_j^2 = ½[y_j, y_j]
            let half = Scalar::frac(1, 2);
            for (k, c) in self.lower_bracket(x, x) {
                for (mm, d) in self.lmul_u(k, rest) {
                    *acc.entry(mm).or_insert_with(Scalar::zero) += &(&half * &(&c * &d));
                }
            }
        } else {
            for (k, c) in self.lower_bracket(x, y) {
                for (mm, d) in self.lmul_u(k, rest) {
                    *acc.entry(mm).or_insert_with(Scalar::zero) += &(&c * &d);
                }
            }
            let s = koszul(self.lpar[j as usize], self.lpar[i1 as usize]);
            for (mm, d) in self.lmul_u(j, rest) {
                for (m2, e) in self.lmul_u(i1, &mm) {
                    *acc.entry(m2).or_insert_with(Scalar::zero) += &(&s * &(&d * &e));
                }
            }
        }
        let out: Vec<(Mono, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.memo_u.insert(key, out.clone());
        out
    }

    /// `z · (m ⊗ -)` as a sum of `m' ⊗ T` with `T` acting on `H(ψ)`.
    fn act(&mut self, z: usize, m: &[u16]) -> Vec<(Mono, Mat)> {
        if let Some(p) = self.lpos[z] {
            let id = Mat::identity(self.dim_h);
            return self.lmul_u(p, m).into_iter().map(|(mm, c)| (mm, id.scale(&c))).collect();
        }
        let Some(&i1) = m.first() else {
            return match (&self.tags[z], &self.hops[z]) {
                (RootTag::Cartan, Some(op)) if !op.is_zero() => vec![(Vec::new(), op.clone())],
                _ => Vec::new(),
            };
        };
        let key = (z, m.to_vec());
        if let Some(v) = self.memo_v.get(&key) {
            return v.clone();
        }
        let rest = &m[1..];
        let y = self.lower[i1 as usize];
        let mut acc: BTreeMap<Mono, Mat> = BTreeMap::new();
        let zy = self.g.g.bracket[z][y].clone();
        for (w, c) in zy {
            for (mm, t) in self.act(w, rest) {
                add_mat(&mut acc, mm, &t.scale(&c));
            }
        }
        let s = koszul(self.g.g.parity(z), self.lpar[i1 as usize]);
        for (mm, t) in self.act(z, rest) {
            for (m2, c) in self.lmul_u(i1, &mm) {
                add_mat(&mut acc, m2, &t.scale(&(&s * &c)));
            }
        }
        let out: Vec<(Mono, Mat)> = acc.into_iter().filter(|(_, t)| !t.is_zero()).collect();
        self.memo_v.insert(key, out.clone());
        out
    }
}

fn add_mat(acc: &mut BTreeMap<Mono, Mat>, m: Mono, t: &Mat) {
    match acc.get_mut(&m) {
        Some(e) => *e = e.add(t),
        None => {
            acc.insert(m, t.clone());
        }
    }
}

/// Truncated Verma module `V̄(ψ)` up to height `depth`.
pub struct Verma {
    pub n: usize,
    pub depth: usize,
    pub h: CartanModule,
    /// Basis vectors `(monomial, index in H(ψ))`, parity sorted.
    pub basis: Vec<(Vec<u16>, usize)>,
    pub weights: Vec<Vec<i32>>,
    pub space: GradedSpace,
    index: HashMap<(Vec<u16>, usize), usize>,
    st: Straightener,
}

impl Verma {
    pub fn new(q: &Queer, psi: &PsiFunctional, depth: usize) -> Result<Verma> {
        if psi.n != q.n {
            return Err(Error::Dimension("ψ and q(n) disagree on n".into()));
        }
        let h = build_h(psi)?;
        let st = Straightener::new(q, &h);
        let mut monos: Vec<Mono> = Vec::new();
        let mut cur = Vec::new();
        enumerate_monos(&st, 0, depth as i32, &mut cur, &mut monos);
        let hpar = h.module.space.parities();
        let mut basis: Vec<(Mono, usize)> = monos.iter().flat_map(|m| (0..h.dim()).map(move |i| (m.clone(), i))).collect();
        basis.sort_by_cached_key(|(m, i)| {
            let p = st.mono_parity(m) ^ hpar[*i];
            (p, weight_key(&st.mono_beta(m)), m.clone(), *i)
        });
        let weights: Vec<Vec<i32>> = basis.iter().map(|(m, _)| st.mono_beta(m)).collect();
        let even = basis.iter().filter(|(m, i)| st.mono_parity(m) ^ hpar[*i] == 0).count();
        let space = GradedSpace::new(even, basis.len() - even);
        let index = basis.iter().enumerate().map(|(k, b)| (b.clone(), k)).collect();
        Ok(Verma { n: q.n, depth, h, basis, weights, space, index, st })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn algebra(&self) -> &MapSuper {
        &self.st.g
    }

    /// Image of basis vector `k` under `q⊗B` basis element `z`; terms beyond
    /// the truncation are dropped.
    pub fn apply(&mut self, z: usize, k: usize) -> SVec {
        let (m, i) = self.basis[k].clone();
        let mut h = self.st.mono_height(&m);
        if let Some(b) = root_abs(&self.st.tags[z]) {
            h += if self.st.tags[z].is_negative() { height(&b) } else { -height(&b) };
        }
        if h > self.depth as i32 || h < 0 {
            return Vec::new();
        }
        let terms = self.st.act(z, &m);
        let mut out = Vec::new();
        for (mm, t) in terms {
            for (r, c) in t.col(i) {
                out.push((self.index[&(mm.clone(), r)], c));
            }
        }
        sv_collect(out)
    }

    pub fn op(&mut self, z: usize) -> Mat {
        let cols: Vec<SVec> = (0..self.dim()).map(|k| self.apply(z, k)).collect();
        Mat::from_cols(self.dim(), &cols)
    }

    /// The truncated module with operators for every basis element of `q⊗B`.
    pub fn weight_module(&mut self) -> WeightModule {
        let ops = (0..self.st.g.g.dim()).map(|z| self.op(z)).collect();
        WeightModule {
            n: self.n,
            a: self.h.psi.a.clone(),
            module: LieModule { space: self.space.clone(), ops },
            weights: self.weights.clone(),
            lambda: self.h.psi.lambda(),
            psi: Some(self.h.psi.clone()),
        }
    }

    pub fn weight_spaces(&self) -> Vec<(Vec<i32>, Vec<usize>)> {
        let mut m: BTreeMap<(i32, Vec<i32>), Vec<usize>> = BTreeMap::new();
        for (i, b) in self.weights.iter().enumerate() {
            m.entry(weight_key(b)).or_default().push(i);
        }
        m.into_iter().map(|((_, b), v)| (b, v)).collect()
    }

    /// Raising generators: simple root vectors tensored with the basis of `B`.
    fn raising_generators(&self) -> Vec<usize> {
        (0..self.st.g.g.dim()).filter(|z| self.st.tags[*z].is_positive() && self.st.tags[*z].height() == 1).collect()
    }
}

fn enumerate_monos(st: &Straightener, start: usize, budget: i32, cur: &mut Mono, out: &mut Vec<Mono>) {
    out.push(cur.clone());
    for p in start..st.lower.len() {
        let h = height(&st.lbeta[p]);
        if h > budget {
            continue;
        }
        cur.push(p as u16);
        let next = if st.lpar[p] == 1 { p + 1 } else { p };
        enumerate_monos(st, next, budget - h, cur, out);
        cur.pop();
    }
}

/// Truncated `V̄(ψ)` as a weight module.
pub fn verma(q: &Queer, psi: &PsiFunctional, depth: usize) -> Result<WeightModule> {
    Ok(Verma::new(q, psi, depth)?.weight_module())
}

/// Per-weight dimensions of `V̄(ψ)`, `N(ψ)` and `V(ψ)` in a truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRow {
    pub beta: Vec<i32>,
    pub verma: usize,
    pub maximal: usize,
    pub simple: usize,
}

#[derive(Clone, Debug)]
pub struct SimpleQuotient {
    pub rows: Vec<QuotientRow>,
    /// First height of a vanishing band of width `n`, when found.
    pub band: Option<usize>,
    /// The module `V(ψ)` over `q⊗A`, when the truncation is conclusive.
    pub module: Option<WeightModule>,
}

impl SimpleQuotient {
    pub fn conclusive(&self) -> bool {
        self.module.is_some()
    }

    pub fn dim(&self) -> Option<usize> {
        self.module.as_ref().map(WeightModule::dim)
    }
}

/// `V(ψ) = V̄(ψ)/N(ψ)`, built over `A/I_ψ` and pulled back to `A`.
/// `N(ψ)` is found height by height: `v ∈ N_μ` iff every raising generator
/// maps `v` into `N`.
pub fn simple_quotient(q: &Queer, psi: &PsiFunctional, depth: usize) -> Result<SimpleQuotient> {
    let n = q.n;
    let a = &psi.a;
    let da = a.dim();
    if psi.is_zero() {
        let module = LieModule { space: GradedSpace::new(1, 0), ops: vec![Mat::zeros(1, 1); q.dim() * da] };
        let wm = WeightModule {
            n,
            a: a.clone(),
            module,
            weights: vec![vec![0; n]],
            lambda: vec![Scalar::zero(); n],
            psi: Some(psi.clone()),
        };
        return Ok(SimpleQuotient {
            rows: vec![QuotientRow { beta: vec![0; n], verma: 1, maximal: 0, simple: 1 }],
            band: Some(1),
            module: Some(wm),
        });
    }
    let (b, qmap) = a.quotient_algebra(&psi.ideal);
    let psi_b = PsiFunctional::new(
        n,
        &b,
        (0..n).flat_map(|k| qmap.free.iter().map(move |f| (k, *f))).map(|(k, f)| psi.values[k * da + f].clone()).collect(),
    )?;
    let mut v = Verma::new(q, &psi_b, depth)?;
    let spaces = v.weight_spaces();
    let total = v.dim();
    let raising = v.raising_generators();
    let mut nmax: HashMap<Vec<i32>, Echelon> = HashMap::new();
    let mut rows = Vec::new();
    let mut per_height: BTreeMap<i32, usize> = BTreeMap::new();
    let mut band = None;
    let mut done_height = -1;
    for (beta, idx) in &spaces {
        let h = height(beta);
        if h > done_height + 1 {
            // all weights of height h-1 are processed
            done_height = h - 1;
            if let Some(s) = band_start(&per_height, done_height, n) {
                band = Some(s);
                break;
            }
        }
        let mut e = Echelon::new(total);
        if h > 0 {
            // constraint rows indexed by (generator, target coordinate)
            let mut cols: Vec<SVec> = Vec::with_capacity(idx.len());
            for &k in idx {
                let mut col = Vec::new();
                for (gi, &z) in raising.iter().enumerate() {
                    let img = v.apply(z, k);
                    if img.is_empty() {
                        continue;
                    }
                    let tb = &v.weights[img[0].0];
                    let red = match nmax.get(tb) {
                        Some(nt) => nt.reduce(&img),
                        None => img,
                    };
                    col.extend(red.into_iter().map(|(t, c)| (gi * total + t, c)));
                }
                cols.push(col);
            }
            let m = Mat::from_cols(raising.len() * total, &cols);
            for kv in m.nullspace() {
                e.insert(&kv.into_iter().map(|(u, c)| (idx[u], c)).collect());
            }
        }
        let simple = idx.len() - e.rank();
        rows.push(QuotientRow { beta: beta.clone(), verma: idx.len(), maximal: e.rank(), simple });
        *per_height.entry(h).or_insert(0) += simple;
        nmax.insert(beta.clone(), e);
    }
    if band.is_none() {
        band = band_start(&per_height, depth as i32, n);
    }
    let Some(h0) = band else {
        return Ok(SimpleQuotient { rows, band: None, module: None });
    };
    // quotient basis: non-pivot coordinates of N in weights below the band
    let mut qidx: Vec<usize> = Vec::new();
    for (beta, idx) in &spaces {
        if height(beta) >= h0 as i32 {
            continue;
        }
        let e = &nmax[beta];
        qidx.extend(idx.iter().filter(|k| !e.is_pivot(**k)));
    }
    qidx.sort_unstable();
    let pos: HashMap<usize, usize> = qidx.iter().enumerate().map(|(u, k)| (*k, u)).collect();
    let d = qidx.len();
    let db = b.dim();
    let mut ops = Vec::with_capacity(q.dim() * db);
    for z in 0..q.dim() * db {
        let mut cols = Vec::with_capacity(d);
        for &k in &qidx {
            let img = v.apply(z, k);
            let col: SVec = match img.first() {
                None => Vec::new(),
                Some((t, _)) => {
                    let tb = v.weights[*t].clone();
                    if height(&tb) >= h0 as i32 {
                        Vec::new()
                    } else {
                        nmax[&tb].reduce(&img).into_iter().map(|(t, c)| (pos[&t], c)).collect()
                    }
                }
            };
            cols.push(col);
        }
        ops.push(Mat::from_cols(d, &cols));
    }
    let even = qidx.iter().filter(|k| v.space.parity(**k) == 0).count();
    let wm_b = WeightModule {
        n,
        a: b.clone(),
        module: LieModule { space: GradedSpace::new(even, d - even), ops },
        weights: qidx.iter().map(|k| v.weights[*k].clone()).collect(),
        lambda: psi.lambda(),
        psi: None,
    };
    let mut wm = wm_b.pullback_quotient(a, &qmap.matrix(), q.dim());
    wm.psi = Some(psi.clone());
    rows.retain(|r| height(&r.beta) < h0 as i32 + n as i32);
    Ok(SimpleQuotient { rows, band: Some(h0), module: Some(wm) })
}

/// First height `h >= 1` with `V(ψ)` zero on heights `h..h+n-1`, all within
/// the processed range.
fn band_start(per_height: &BTreeMap<i32, usize>, upto: i32, n: usize) -> Option<usize> {
    let n = n as i32;
    (1..=upto - n + 1).find(|h| (*h..h + n).all(|t| per_height.get(&t).copied().unwrap_or(0) == 0)).map(|h| h as usize)
}

/// Both sides of `ψ(h̄_0⊗I) = 0 ⟺ (q⊗I)V(ψ) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealCheck {
    pub psi_vanishes: bool,
    pub acts_by_zero: bool,
}

impl IdealCheck {
    pub fn consistent(&self) -> bool {
        self.psi_vanishes == self.acts_by_zero
    }
}

pub fn check_psi0_ideal(psi: &PsiFunctional, i: &Ideal, v: &WeightModule, qdim: usize) -> IdealCheck {
    let da = psi.a.dim();
    let d = v.dim();
    let acts_by_zero = i.basis.iter().all(|f| {
        (0..qdim).all(|x| f.iter().fold(Mat::zeros(d, d), |acc, (j, c)| acc.axpy(c, &v.module.ops[x * da + j])).is_zero())
    });
    IdealCheck { psi_vanishes: psi.kills(i), acts_by_zero }
}

/// The four equivalent conditions for a finite-dimensional `V(ψ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessConditions {
    pub quasifinite: bool,
    pub annihilator_finite_codim: bool,
    pub psi_vanishes_on_ann: bool,
    pub finite_support: bool,
    /// `Ann_A V(ψ) = I_ψ`.
    pub ann_is_i_psi: bool,
}

impl FinitenessConditions {
    pub fn all(&self) -> bool {
        self.quasifinite && self.annihilator_finite_codim && self.psi_vanishes_on_ann && self.finite_support && self.ann_is_i_psi
    }
}

pub fn finiteness_conditions(q: &Queer, psi: &PsiFunctional, v: &WeightModule) -> FinitenessConditions {
    let spaces = v.weight_spaces();
    let quasifinite = spaces.iter().map(|(_, s)| s.len()).sum::<usize>() == v.dim();
    let m = tensor_lie(&q.g, &psi.a);
    let rep = m.ann_and_support(&v.module);
    FinitenessConditions {
        quasifinite,
        annihilator_finite_codim: rep.ann.codim() <= psi.a.dim(),
        psi_vanishes_on_ann: psi.kills(&rep.ann),
        finite_support: rep.support.len() <= psi.a.points.len(),
        ann_is_i_psi: rep.ann == psi.ideal,
    }
}

/// Whether the ideal `q⊗I` acts by zero as soon as it kills one nonzero
/// vector; returns `None` when it kills no nonzero vector.
pub fn ideal_kills_vector_implies_zero(v: &LieModule, qdim: usize, da: usize, i: &Ideal) -> Option<bool> {
    let d = v.dim();
    let ops: Vec<Mat> = i
        .basis
        .iter()
        .flat_map(|f| (0..qdim).map(move |x| (x, f)))
        .map(|(x, f)| f.iter().fold(Mat::zeros(d, d), |acc, (j, c)| acc.axpy(c, &v.ops[x * da + j])))
        .collect();
    if ops.is_empty() {
        return Some(true);
    }
    let ker = Mat::stack(d, &ops).nullspace();
    if ker.is_empty() {
        return None;
    }
    Some(ops.iter().all(Mat::is_zero))
}

/// Dimension of the operator algebra generated by a module, for reports.
pub fn closure_dim(v: &LieModule) -> usize {
    operator_closure(v.dim(), &v.ops).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::Density;
    use crate::scalar::tower_scope;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|x| Scalar::from_int(*x)).collect()
    }

    /// Coefficient of `x^β` in `Π_α ((1+x^α)/(1-x^α))^{d}` over positive
    /// roots, times `dim H`; computed by dynamic programming over the roots.
    fn pbw_series(n: usize, copies: usize, depth: i32) -> HashMap<Vec<i32>, usize> {
        let q = Queer::new(n);
        let mut series: HashMap<Vec<i32>, usize> = HashMap::new();
        series.insert(vec![0; n], 1);
        for alpha in q.positive_roots() {
            for parity in [0, 1] {
                for _ in 0..copies {
                    let mut next: HashMap<Vec<i32>, usize> = HashMap::new();
                    for (b, c) in &series {
                        let mut k = 0;
                        loop {
                            let nb: Vec<i32> = b.iter().zip(&alpha).map(|(x, y)| x + k * y).collect();
                            if height(&nb) > depth || (parity == 1 && k > 1) {
                                break;
                            }
                            *next.entry(nb).or_insert(0) += c;
                            k += 1;
                        }
                    }
                    series = next;
                }
            }
        }
        series
    }

    #[test]
    fn pbw_dimension_law() {
        tower_scope(|| {
            let q = Queer::new(2);
            let c = CoeffAlgebra::complex();
            let psi = PsiFunctional::new(2, &c, ints(&[3, 1])).unwrap();
            let v = Verma::new(&q, &psi, 4).unwrap();
            let hd = v.h.dim();
            let law = pbw_series(2, 1, 4);
            for (b, idx) in v.weight_spaces() {
                assert_eq!(idx.len(), law[&b] * hd, "weight {b:?}");
            }
            // simple roots: one even and one odd lowering operator
            let s1 = v.weight_spaces().into_iter().find(|(b, _)| b == &vec![1, 0]).unwrap();
            assert_eq!(s1.1.len(), 2 * hd);
        });
    }

    #[test]
    fn verma_relations_hold_below_truncation() {
        tower_scope(|| {
            let q = Queer::new(2);
            let c = CoeffAlgebra::complex();
            let psi = PsiFunctional::new(2, &c, ints(&[2, 1])).unwrap();
            let mut v = Verma::new(&q, &psi, 3).unwrap();
            let wm = v.weight_module();
            let g = &q.g;
            // [x, y] v = x y v - ± y x v on vectors of height <= 1
            let low: Vec<usize> = (0..wm.dim()).filter(|k| height(&wm.weights[*k]) <= 1).collect();
            for x in 0..g.dim() {
                for y in 0..g.dim() {
                    let lhs = wm.module.act(&g.bracket[x][y]);
                    let rhs = crate::lie::supercommutator(&wm.module.ops[x], g.parity(x), &wm.module.ops[y], g.parity(y));
                    for &k in &low {
                        assert_eq!(lhs.col(k), rhs.col(k), "[{x},{y}] on {k}");
                    }
                }
            }
        });
    }

    #[test]
    fn adjoint_is_simple_quotient() {
        tower_scope(|| {
            let q = Queer::new(2);
            let c = CoeffAlgebra::complex();
            let psi = PsiFunctional::new(2, &c, ints(&[1, 1])).unwrap();
            let sq = simple_quotient(&q, &psi, default_depth(2)).unwrap();
            let m = sq.module.as_ref().unwrap();
            assert_eq!(m.dim(), 16);
            assert_eq!(sq.band, Some(5));
            assert!(m.module.is_module_of(&q.g));
            let adj = q.g.adjoint();
            assert!(crate::lie::find_isomorphism(&m.module, &adj).is_some());
            assert!(m.is_irreducible_hw(&q));
        });
    }

    #[test]
    fn adjoint_singular_vectors() {
        tower_scope(|| {
            let q = Queer::new(2);
            let adj = WeightModule::from_module(&q, &CoeffAlgebra::complex(), q.g.adjoint()).unwrap();
            let sing = adj.singular_vectors(&q);
            let nonzero: Vec<_> = sing.iter().filter(|(_, s)| !s.is_empty()).collect();
            assert_eq!(nonzero.len(), 1);
            assert_eq!(nonzero[0].0, vec![0, 0]);
            assert_eq!(nonzero[0].1.len(), 2);
            assert_eq!(adj.lambda, ints(&[1, 1]));
            assert!(adj.is_irreducible_hw(&q));
            assert_eq!(adj.module.density(), Density::Full);
        });
    }

    #[test]
    fn trivial_and_doubled() {
        tower_scope(|| {
            let q = Queer::new(2);
            let c = CoeffAlgebra::complex();
            let sq = simple_quotient(&q, &PsiFunctional::zero(2, &c), 0).unwrap();
            assert_eq!(sq.dim(), Some(1));
            assert!(sq.module.unwrap().is_irreducible_hw(&q));
            // H(ψ) ⊕ H(ψ) with 𝔫± acting by zero
            let psi = PsiFunctional::new(2, &c, ints(&[1, 1])).unwrap();
            let h = build_h(&psi).unwrap();
            let (sp, _) = GradedSpace::direct_sum(&[&h.module.space, &h.module.space]);
            let mut ops = vec![Mat::zeros(4, 4); q.dim()];
            for (cpos, x) in q.cartan().iter().enumerate() {
                let o = &h.module.ops[cpos];
                ops[*x] = crate::graded::reindex(&Mat::block_diag(&[o.clone(), o.clone()]), &[0, 2, 1, 3], &[0, 2, 1, 3]);
            }
            let m = WeightModule::from_module(&q, &c, LieModule { space: sp, ops }).unwrap();
            let sing = m.singular_vectors(&q);
            assert_eq!(sing[0].1.len(), 4);
            assert!(!m.is_irreducible_hw(&q));
        });
    }

    #[test]
    fn two_point_quotient_and_ideal_action() {
        tower_scope(|| {
            let q = Queer::new(2);
            let a = CoeffAlgebra::poly_quotient(&ints(&[-1, 0, 1]), &ints(&[1, -1])).unwrap();
            let psi = PsiFunctional::evaluation(&a, &ints(&[1, 1]), 0).unwrap();
            let sq = simple_quotient(&q, &psi, 6).unwrap();
            let m = sq.module.unwrap();
            assert_eq!(m.dim(), 16);
            let qa = tensor_lie(&q.g, &a);
            assert!(m.module.is_module_of(&qa.g));
            let fc = finiteness_conditions(&q, &psi, &m);
            assert!(fc.all(), "{fc:?}");
            for i in [a.zero_ideal(), a.max_ideal(0), a.max_ideal(1), a.whole()] {
                assert!(check_psi0_ideal(&psi, &i, &m, q.dim()).consistent());
            }
            assert!(check_psi0_ideal(&psi, &psi.ideal, &m, q.dim()).acts_by_zero);
            assert!(!check_psi0_ideal(&psi, &a.whole(), &m, q.dim()).psi_vanishes);
        });
    }

    #[test]
    fn q1_quotients() {
        tower_scope(|| {
            let q = Queer::new(1);
            let c = CoeffAlgebra::complex();
            for l in 0..4 {
                let psi = PsiFunctional::new(1, &c, ints(&[l])).unwrap();
                let sq = simple_quotient(&q, &psi, 8).unwrap();
                assert_eq!(sq.dim(), Some(l as usize + 1));
            }
        });
    }
}

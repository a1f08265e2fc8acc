//! Verification suites and their reports. Every random instance comes from
//! a `ChaCha8` stream seeded by the caller, so identical seeds give
//! identical reports.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::assoc::{
    classify_simple, clifford, clifford_irrep, density_of_action, m_basis, make_m, make_q, natural_action, q_basis, AssocSuper,
    Density, QuadraticPair, SimpleType,
};
use crate::cartan::{build_h, build_h_ordered, cartan_map, induced_module, odd_part_kills, PsiFunctional};
use crate::coeff::{scale_variable, CoeffAlgebra, GammaAction, Ideal};
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::hw::{default_depth, finiteness_conditions, height, simple_quotient, Verma, WeightModule};
use crate::lie::{find_isomorphism, from_assoc, hom_space, LieModule};
use crate::linalg::Mat;
use crate::mapsuper::tensor_lie;
use crate::products::{
    assoc_check, certify_irreducible, classify_bounded, dichotomy, ev_psi, hat_tensor, hw_isomorphism, lie_direct_sum, top_psi,
    Catalog, Classification, Irreducible, PsiMap,
};
use crate::queer::{cartan_generation_check, Queer};
use crate::scalar::{tower_scope, Scalar};

pub const SUITES: [&str; 5] = ["superalg", "queer", "cartan", "hw", "products"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub target: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, target: &str, seed: u64) -> Report {
        Report { command: command.into(), target: target.into(), seed, checks: Vec::new() }
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        json!({
            "command": self.command,
            "target": self.target,
            "seed": self.seed,
            "passed": self.checks.len() - self.failed(),
            "failed": self.failed(),
            "checks": checks,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} (seed {})\n", self.command, self.target, self.seed);
        let w = self.checks.iter().map(|c| c.suite.len() + c.name.len() + 3).max().unwrap_or(0);
        for c in &self.checks {
            let head = format!("[{}] {}", c.suite, c.name);
            let _ = writeln!(s, "{} {head:<w$}  {}", if c.passed { "PASS" } else { "FAIL" }, c.detail);
        }
        let _ = writeln!(s, "{} passed, {} failed", self.checks.len() - self.failed(), self.failed());
        s
    }

    fn record(&mut self, suite: &str, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(Check { suite: suite.into(), name: name.into(), passed, detail });
    }
}

/// Runs one suite or `all`.
pub fn run_verify(target: &str, seed: u64) -> Result<Report> {
    let names: Vec<&str> = match target {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        other => return Err(Error::Parse(format!("unknown suite `{other}`; expected one of {} or all", SUITES.join(", ")))),
    };
    let mut rep = Report::new("verify", target, seed);
    for (k, name) in names.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        tower_scope(|| match *name {
            "superalg" => superalg(&mut rep, &mut rng),
            "queer" => queer(&mut rep),
            "cartan" => cartan(&mut rep, &mut rng, 20),
            "hw" => hw(&mut rep),
            _ => products(&mut rep),
        });
    }
    Ok(rep)
}

/// Random form `UᵀDU` with `U` unitriangular over the integers and `D`
/// diagonal with entries in `±{1, 4, 9}`, so every pivot is a square and no
/// field extension is needed. Degenerate forms get one zero in `D`.
pub fn random_form(rng: &mut ChaCha8Rng, r: usize, degenerate: bool) -> Mat {
    let mut u = vec![vec![Scalar::zero(); r]; r];
    let mut d = vec![vec![Scalar::zero(); r]; r];
    for i in 0..r {
        u[i][i] = Scalar::one();
        for x in u[i].iter_mut().skip(i + 1) {
            *x = Scalar::from_int(rng.gen_range(-2i64..=2));
        }
        let k = [1i64, 4, 9][rng.gen_range(0..3)];
        d[i][i] = Scalar::from_int(if rng.gen_bool(0.5) { k } else { -k });
    }
    if degenerate {
        let k = rng.gen_range(0..r);
        d[k][k] = Scalar::zero();
    }
    let u = Mat::from_dense(&u);
    u.transpose().mul(&Mat::from_dense(&d)).mul(&u)
}

/// `ψ` with integer values in `-2..=2`.
pub fn random_psi(rng: &mut ChaCha8Rng, n: usize, a: &CoeffAlgebra) -> PsiFunctional {
    let values = (0..n * a.dim()).map(|_| Scalar::from_int(rng.gen_range(-2i64..=2))).collect();
    PsiFunctional::new(n, a, values).expect("sized")
}

/// The defining module `C^{m|m}` or `C^{m|n}` as an irreducible module of
/// the Lie superalgebra of `Q(m)` or `M(m|n)`.
pub fn standard_module(basis: &[(Mat, u8, String)], even: usize, odd: usize) -> Result<Irreducible> {
    let alg = AssocSuper::from_matrix_basis(basis)?;
    let act = natural_action(basis, GradedSpace::new(even, odd));
    Irreducible::new(from_assoc(&alg), LieModule { space: act.space, ops: act.ops })
}

fn superalg(rep: &mut Report, rng: &mut ChaCha8Rng) {
    const S: &str = "superalg";
    rep.record(S, "matrix superalgebras", || {
        let ok = [make_m(1, 1), make_m(2, 1), make_q(1), make_q(2)].iter().all(AssocSuper::check_axioms);
        let t = (classify_simple(&make_m(2, 1))?, classify_simple(&make_q(2))?);
        Ok((ok && t == (SimpleType::TypeM(2, 1), SimpleType::TypeQ(2)), format!("{t:?}")))
    });
    rep.record(S, "Q(1)⊗Q(1) is M(1|1)", || {
        let t = classify_simple(&make_q(1).tensor(&make_q(1)))?;
        Ok((t == SimpleType::TypeM(1, 1), format!("{t:?}")))
    });
    rep.record(S, "C^{1|1}⊗C^{1|1} splits in two", || {
        let v = standard_module(&q_basis(1), 1, 1)?;
        let d = dichotomy(&v, &v, |p| Ok(p.module.density().is_irreducible()))?;
        Ok((
            d.split && d.hat_dim == 2 && d.holds(),
            format!("full {} hat {} complement iso {:?}", d.full_dim, d.hat_dim, d.complement_iso),
        ))
    });
    rep.record(S, "M(1|1) module is type M", || {
        let v = standard_module(&m_basis(1, 1), 1, 1)?;
        Ok((!v.schur.is_type_q(), v.schur.label().to_string()))
    });
    for r in 1..=6 {
        rep.record(S, &format!("Clifford algebras r={r}"), || clifford_check(rng, r, 5));
    }
    rep.record(S, "degenerate forms are not simple", || {
        let mut ok = true;
        for r in 1..=4 {
            let q = QuadraticPair::new(random_form(rng, r, true))?;
            ok &= classify_simple(&clifford(&q))? == SimpleType::NotSimple;
        }
        Ok((ok, "r = 1..4".into()))
    });
}

/// `count` random nondegenerate forms of rank `r`: dimension `2^r`, module
/// dimension `2^{⌈r/2⌉}`, type Q exactly for odd `r`, density type to match.
pub fn clifford_check(rng: &mut ChaCha8Rng, r: usize, count: usize) -> Result<(bool, String)> {
    let mut types = Vec::new();
    let mut ok = true;
    for _ in 0..count {
        let q = QuadraticPair::new(random_form(rng, r, false))?;
        let c = clifford(&q);
        let act = clifford_irrep(&q)?;
        let t = classify_simple(&c)?;
        let want = if r % 2 == 1 { Density::QComm } else { Density::Full };
        ok &= c.dim() == 1 << r
            && act.dim() == 1 << r.div_ceil(2)
            && matches!(t, SimpleType::TypeQ(_)) == (r % 2 == 1)
            && density_of_action(&act) == want
            && act.is_homomorphism(&c);
        types.push(format!("{t:?}"));
    }
    types.dedup();
    Ok((ok, format!("{count} forms, dim 2^{r}, module dim {}, {}", 1 << r.div_ceil(2), types.join(" "))))
}

fn queer(rep: &mut Report) {
    const S: &str = "queer";
    for (n, dim, roots) in [(2, 16, 3), (3, 30, 6)] {
        rep.record(S, &format!("q({n}) structure"), || {
            let q = Queer::new(n);
            let ax = q.g.check_axioms();
            let gen = cartan_generation_check(n);
            let simple = q.g.is_simple();
            let ok = ax == (true, true, true) && q.dim() == dim && q.positive_roots().len() == roots && gen && simple;
            Ok((
                ok,
                format!(
                    "dim {}, positive roots {}, axioms {ax:?}, generated {gen}, simple {simple}",
                    q.dim(),
                    q.positive_roots().len()
                ),
            ))
        });
    }
    rep.record(S, "conjugation automorphism", || {
        let q = Queer::new(2);
        let s = q.sign_conjugation();
        Ok((crate::coeff::is_lie_automorphism(&q.g, &s) && s.mul(&s) == Mat::identity(q.dim()), "diag(1,1,-1)".into()))
    });
}

/// Ideals of `A` built from declared points, for random pairs `(ψ, I)`.
fn candidate_ideals(a: &CoeffAlgebra) -> Vec<Ideal> {
    let mut out = vec![a.zero_ideal(), a.whole(), a.nilradical()];
    for p in 0..a.points.len() {
        out.push(a.max_ideal(p));
        out.push(a.power(&a.max_ideal(p), 2));
    }
    out
}

/// Results for one `ψ`: irreducible with the right dimension and even
/// action, rebuilt module isomorphic, odd part killing an ideal in `ker ψ`,
/// induced module bounded and mapping onto `H(ψ)`. Returns the character
/// read off the even action.
struct HCase {
    ok: bool,
    ideal: bool,
    induced: bool,
    dim: usize,
    character: Vec<Scalar>,
}

fn h_case(g: &crate::lie::LieSuper, psi: &PsiFunctional, pick: usize) -> Result<HCase> {
    tower_scope(|| {
        let a = &psi.a;
        let h = build_h(psi)?;
        let d = h.dim();
        let mut character = Vec::new();
        let mut even = true;
        for k in 0..psi.n {
            for j in 0..a.dim() {
                let op = h.op(false, k, j);
                let c = op.get(0, 0).clone();
                even &= *op == Mat::scalar(d, &c);
                character.push(c);
            }
        }
        let irr = h.module.density().is_irreducible();
        let rev: Vec<usize> = (0..h.rank).rev().collect();
        let rebuilt = find_isomorphism(&h.module, &build_h_ordered(psi, Some(&rev))?.module).is_some();
        let ok = even && character == psi.values && irr && rebuilt && d == 1 << h.rank.div_ceil(2) && h.module.is_module_of(g);
        let ideals: Vec<Ideal> = candidate_ideals(a).into_iter().filter(|i| psi.kills(i)).collect();
        let i = &ideals[pick % ideals.len()];
        let ideal = odd_part_kills(&h, i);
        let ind = induced_module(psi, i)?;
        let induced = ind.dim() <= 1usize << (psi.n * i.codim()) && !hom_space(&ind, &h.module, 0).is_empty();
        Ok(HCase { ok, ideal, induced, dim: d, character })
    })
}

/// Checks on `H(ψ)` for random `ψ` over three algebras.
pub fn cartan_corpus(rng: &mut ChaCha8Rng, per_algebra: usize) -> Vec<(String, bool, String)> {
    let mut out = Vec::new();
    let q = Queer::new(2);
    for (name, a) in
        [("C", CoeffAlgebra::complex()), ("C[t]/(t^2)", CoeffAlgebra::dual()), ("C[t]/(t^2-1)", CoeffAlgebra::two_point())]
    {
        let g = cartan_map(&q, &a).g;
        let psis: Vec<PsiFunctional> = (0..per_algebra).map(|_| random_psi(rng, 2, &a)).collect();
        let picks: Vec<usize> = (0..per_algebra).map(|_| rng.gen_range(0..64)).collect();
        let cases: Vec<Result<HCase>> = psis.iter().zip(&picks).map(|(p, k)| h_case(&g, p, *k)).collect();
        let good = |f: fn(&HCase) -> bool| cases.iter().all(|c| c.as_ref().is_ok_and(f));
        let dims: Vec<usize> = cases.iter().map(|c| c.as_ref().map_or(0, |c| c.dim)).collect();
        // characters are isomorphism invariants; neighbours are also compared by Hom solving
        let mut sep = true;
        for i in 0..psis.len() {
            for j in 0..psis.len() {
                let same = psis[i] == psis[j];
                sep &= matches!((&cases[i], &cases[j]), (Ok(x), Ok(y)) if (x.character == y.character) == same);
            }
        }
        for w in psis.windows(2) {
            sep &= tower_scope(|| match (build_h(&w[0]), build_h(&w[1])) {
                (Ok(x), Ok(y)) => find_isomorphism(&x.module, &y.module).is_some() == (w[0] == w[1]),
                _ => false,
            });
        }
        out.push((format!("H(ψ) over {name}"), good(|c| c.ok), format!("{} functionals, dims {dims:?}", psis.len())));
        out.push((
            format!("distinct ψ separate over {name}"),
            sep,
            format!("{} characters, {} Hom solves", psis.len(), psis.len().saturating_sub(1)),
        ));
        out.push((format!("odd part kills ideals in ker ψ over {name}"), good(|c| c.ideal), String::new()));
        out.push((format!("induced modules bounded over {name}"), good(|c| c.induced), "dim ≤ 2^{n·codim I}".into()));
    }
    out
}

fn cartan(rep: &mut Report, rng: &mut ChaCha8Rng, per_algebra: usize) {
    for (name, ok, detail) in cartan_corpus(rng, per_algebra) {
        rep.record("cartan", &name, || Ok((ok, detail)));
    }
}

/// Counts of PBW monomials by weight below a height bound: each positive root
/// contributes `copies` even and `copies` odd generators.
pub fn pbw_counts(q: &Queer, copies: usize, depth: i32) -> HashMap<Vec<i32>, usize> {
    let mut series: HashMap<Vec<i32>, usize> = HashMap::new();
    series.insert(vec![0; q.n], 1);
    for alpha in q.positive_roots() {
        for odd in [false, true] {
            for _ in 0..copies {
                let mut next: HashMap<Vec<i32>, usize> = HashMap::new();
                for (b, c) in &series {
                    for k in 0.. {
                        let nb: Vec<i32> = b.iter().zip(&alpha).map(|(x, y)| x + k * y).collect();
                        if height(&nb) > depth || (odd && k > 1) {
                            break;
                        }
                        *next.entry(nb).or_insert(0) += c;
                    }
                }
                series = next;
            }
        }
    }
    series
}

/// Whether truncated Verma weight spaces match the PBW count times `dim H`.
pub fn pbw_law_holds(q: &Queer, psi: &PsiFunctional, depth: usize) -> Result<bool> {
    let v = Verma::new(q, psi, depth)?;
    let copies = psi.a.dim() - psi.ideal.dim();
    let law = pbw_counts(q, copies, depth as i32);
    let spaces = v.weight_spaces();
    let total: usize = law.values().sum();
    Ok(spaces.len() == law.len()
        && spaces.iter().all(|(b, idx)| law.get(b).is_some_and(|c| c * v.h.dim() == idx.len()))
        && v.dim() == total * v.h.dim())
}

/// `V ⊕ W` as a module.
pub fn module_direct_sum(v: &LieModule, w: &LieModule) -> LieModule {
    let (space, pos) = GradedSpace::direct_sum(&[&v.space, &w.space]);
    let n = space.dim();
    let ops = v
        .ops
        .iter()
        .zip(&w.ops)
        .map(|(x, y)| {
            let mut e = Vec::new();
            for (m, p) in [(x, &pos[0]), (y, &pos[1])] {
                e.extend(m.entries().map(|(i, j, c)| (p[i], p[j], c.clone())));
            }
            Mat::from_entries(n, n, e)
        })
        .collect();
    LieModule { space, ops }
}

fn hw(rep: &mut Report) {
    const S: &str = "hw";
    let q = Queer::new(2);
    let c = CoeffAlgebra::complex();
    rep.record(S, "PBW dimension law", || {
        let dual = CoeffAlgebra::dual();
        let cases = [
            PsiFunctional::new(2, &c, vec![Scalar::from_int(3), Scalar::one()])?,
            PsiFunctional::new(2, &c, vec![Scalar::one(), Scalar::one()])?,
            PsiFunctional::new(2, &dual, [1, 2, 0, 1].map(Scalar::from_int).to_vec())?,
        ];
        let mut ok = true;
        for psi in &cases {
            for depth in 0..=4 {
                ok &= pbw_law_holds(&q, psi, depth)?;
            }
        }
        Ok((ok, "q(2) over C and C[t]/(t^2), depths 0..4".into()))
    });
    rep.record(S, "adjoint is a simple quotient", || {
        let psi = PsiFunctional::new(2, &c, vec![Scalar::one(), Scalar::one()])?;
        let sq = simple_quotient(&q, &psi, default_depth(2))?;
        let m = sq.module.ok_or_else(|| Error::Domain("inconclusive".into()))?;
        let iso = find_isomorphism(&m.module, &q.g.adjoint()).is_some();
        Ok((m.dim() == 16 && iso, format!("dim {}, band {:?}, isomorphic to adjoint {iso}", m.dim(), sq.band)))
    });
    rep.record(S, "highest-weight criterion agrees with density", || {
        let corpus = hw_corpus(&q)?;
        let mut rows = Vec::new();
        let mut ok = true;
        for (name, a, m) in &corpus {
            let w = WeightModule::from_module(&q, a, m.clone())?;
            let hwv = w.is_irreducible_hw(&q);
            let dv = m.density().is_irreducible();
            ok &= hwv == dv;
            rows.push(format!("{name}:{}", if hwv { "irr" } else { "red" }));
        }
        Ok((ok, rows.join(" ")))
    });
    rep.record(S, "finiteness conditions", || {
        let a = CoeffAlgebra::two_point();
        let psi = PsiFunctional::evaluation(&a, &[Scalar::one(), Scalar::one()], 0)?;
        let m = simple_quotient(&q, &psi, 6)?.module.ok_or_else(|| Error::Domain("inconclusive".into()))?;
        let f = finiteness_conditions(&q, &psi, &m);
        Ok((f.all(), format!("{f:?}")))
    });
}

/// Small modules with a weight basis, reducible and irreducible.
pub fn hw_corpus(q: &Queer) -> Result<Vec<(String, CoeffAlgebra, LieModule)>> {
    let c = CoeffAlgebra::complex();
    let adj = q.g.adjoint();
    let triv = LieModule { space: GradedSpace::new(1, 0), ops: vec![Mat::zeros(1, 1); q.dim()] };
    let two = CoeffAlgebra::two_point();
    let cat = Catalog::new(q, &["adjoint".into()], default_depth(q.n))?;
    let m = tensor_lie(&q.g, &two);
    let ev = ev_psi(&m, &cat, &PsiMap(vec![1, 0]))?.module;
    let mut out = vec![
        ("trivial".to_string(), c.clone(), triv.clone()),
        ("adjoint".to_string(), c.clone(), adj.clone()),
        ("adjoint+trivial".to_string(), c.clone(), module_direct_sum(&adj, &triv)),
        ("ev(adjoint)".to_string(), two.clone(), ev),
    ];
    if q.n == 2 {
        let psi = PsiFunctional::new(2, &c, vec![Scalar::one(), Scalar::one()])?;
        let h = build_h(&psi)?;
        let mut ops = vec![Mat::zeros(h.dim(), h.dim()); q.dim()];
        for (k, x) in q.cartan().iter().enumerate() {
            ops[*x] = h.module.ops[k].clone();
        }
        let top = LieModule { space: h.module.space.clone(), ops };
        out.push(("H(1,1) with n± = 0".to_string(), c.clone(), module_direct_sum(&top, &top)));
    }
    Ok(out)
}

fn classification_checks(rep: &mut Report, tag: &str, c: &Classification) {
    const S: &str = "products";
    let irr = c.rows.iter().all(|r| r.irreducible.irreducible());
    let methods: Vec<&str> = c.rows.iter().map(|r| r.irreducible.method()).collect();
    rep.record(S, &format!("{tag}: every êv irreducible"), || {
        Ok((irr, format!("{} modules, dims {:?}, {methods:?}", c.rows.len(), c.rows.iter().map(|r| r.dim).collect::<Vec<_>>())))
    });
    rep.record(S, &format!("{tag}: top character is Σψ_i"), || Ok((c.rows.iter().all(|r| r.top_character), String::new())));
    rep.record(S, &format!("{tag}: reduced finite support"), || Ok((c.rows.iter().all(|r| r.reduced), String::new())));
    let seps: Vec<String> = c.distinct.iter().map(|r| r.join(",")).collect();
    rep.record(S, &format!("{tag}: pairwise non-isomorphic"), || Ok((c.all_distinct(), seps.join(" | "))));
    if c.twisted {
        rep.record(S, &format!("{tag}: twisted evaluation onto"), || {
            Ok((c.rows.iter().all(|r| r.surjective == Some(true)), String::new()))
        });
        rep.record(S, &format!("{tag}: independent of orbit representatives"), || {
            Ok((c.rows.iter().all(|r| r.invariance == Some(true)), String::new()))
        });
        rep.record(S, &format!("{tag}: restriction of an untwisted module"), || {
            Ok((c.rows.iter().all(|r| r.restriction == Some(true)), String::new()))
        });
    }
}

/// `Γ = Z/2` acting by `t -> -t` and conjugation by `diag(1, ..., 1, -1)`.
pub fn flip_action(q: &Queer, a: &CoeffAlgebra) -> GammaAction {
    GammaAction { orders: vec![2], on_a: vec![scale_variable(a, &Scalar::from_int(-1))], on_g: vec![q.sign_conjugation()] }
}

/// Tensor product of two evaluation modules at distinct points, pulled back
/// along the diagonal: irreducible with the expected top functional and
/// isomorphic to the two-point evaluation module.
pub fn disjoint_support_check(q: &Queer, a: &CoeffAlgebra, cat: &Catalog, p: usize, r: usize) -> Result<(bool, String)> {
    let m = tensor_lie(&q.g, a);
    let k = a.points.len();
    let single = |x: usize| -> Result<Irreducible> {
        let mut v = vec![0; k];
        v[x] = 1;
        Irreducible::new(m.g.clone(), ev_psi(&m, cat, &PsiMap(v))?.module)
    };
    let (v1, v2) = (single(p)?, single(r)?);
    let h = hat_tensor(&v1, &v2)?;
    let (_, pos) = lie_direct_sum(&m.g, &m.g);
    let images: Vec<Vec<(usize, Scalar)>> =
        (0..m.g.dim()).map(|z| vec![(pos[0][z], Scalar::one()), (pos[1][z], Scalar::one())]).collect();
    let diag = h.product.module.pullback(&images);
    let cert = certify_irreducible(q, a, &diag)?;
    let mut both = vec![0; k];
    both[p] = 1;
    both[r] = 1;
    let psi = PsiMap(both);
    let expected = crate::products::expected_psi(a, cat, &psi)?;
    let top = top_psi(q, a, &diag)? == expected;
    let ev = ev_psi(&m, cat, &psi)?;
    let iso = hw_isomorphism(q, a, &diag, &ev.module)?.is_some();
    let ok = cert.irreducible() && !h.split && h.full_dim == diag.dim() && top && iso;
    Ok((ok, format!("dim {}, split {}, {} certificate, top {top}, isomorphic to êv {iso}", diag.dim(), h.split, cert.method())))
}

fn products(rep: &mut Report) {
    const S: &str = "products";
    let q = Queer::new(2);
    let cat = match Catalog::new(&q, &["adjoint".into()], default_depth(2)) {
        Ok(c) => c,
        Err(e) => return rep.record(S, "catalog", || Err(e)),
    };
    rep.record(S, "catalog {trivial, adjoint}", || {
        Ok((cat.len() == 2, format!("adjoint type {}", cat.entries[1].irr.schur.label())))
    });
    rep.record(S, "odd-rank Cartan modules split", || {
        let a = CoeffAlgebra::complex();
        let q3 = Queer::new(3);
        let h = |l: [i64; 3]| -> Result<Irreducible> {
            let psi = PsiFunctional::evaluation(&a, &l.map(Scalar::from_int), 0)?;
            Irreducible::new(crate::cartan::cartan_subalgebra(&q3), build_h(&psi)?.module)
        };
        let (v, w) = (h([1, 2, 4])?, h([2, 1, 1])?);
        let d = dichotomy(&v, &w, |p| Ok(p.module.density().is_irreducible()))?;
        Ok((d.split && d.holds(), format!("types {}{}, full {} hat {}", v.schur.label(), w.schur.label(), d.full_dim, d.hat_dim)))
    });
    rep.record(S, "associativity of ⊗̂ with type Q factors", || {
        let v = standard_module(&q_basis(1), 1, 1)?;
        let w = standard_module(&m_basis(1, 1), 1, 1)?;
        let checks = [assoc_check(&v, &v, &v)?, assoc_check(&v, &v, &w)?, assoc_check(&w, &v, &v)?];
        let ok = checks.iter().all(|c| c.holds());
        Ok((ok, checks.iter().map(|c| format!("{}:{}", c.left_dim, c.method)).collect::<Vec<_>>().join(" ")))
    });
    rep.record(S, "associativity of ⊗̂ on the catalog", || {
        let (t, adj) = (&cat.entries[0].irr, &cat.entries[1].irr);
        let c1 = assoc_check(adj, t, adj)?;
        let c2 = assoc_check(t, adj, t)?;
        Ok((c1.holds() && c2.holds(), format!("{}:{} {}:{}", c1.left_dim, c1.method, c2.left_dim, c2.method)))
    });
    for (name, a, bound) in [("two_point", CoeffAlgebra::two_point(), None), ("four_point", CoeffAlgebra::four_point(), Some(2))]
    {
        rep.record(S, &format!("{name}: disjoint supports give irreducible products"), || {
            disjoint_support_check(&q, &a, &cat, 0, 1)
        });
        match classify_bounded(&q, &a, None, &cat, bound) {
            Ok(c) => classification_checks(rep, name, &c),
            Err(e) => rep.record(S, &format!("{name}: classification"), || Err(e)),
        }
        match classify_bounded(&q, &a, Some(flip_action(&q, &a)), &cat, None) {
            Ok(c) => classification_checks(rep, &format!("{name} twisted"), &c),
            Err(e) => rep.record(S, &format!("{name} twisted: classification"), || Err(e)),
        }
    }
}

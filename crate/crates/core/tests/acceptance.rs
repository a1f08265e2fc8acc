//! Acceptance checks. Each prints one PASS/FAIL line and must finish within
//! its time limit; all run in one test so the lines appear in order.

use std::io::Write;
use std::time::{Duration, Instant};

use qmap_core::assoc::{classify_simple, clifford, make_q, q_basis, QuadraticPair, SimpleType};
use qmap_core::cartan::PsiFunctional;
use qmap_core::coeff::{CoeffAlgebra, Ideal};
use qmap_core::hw::{check_psi0_ideal, default_depth, finiteness_conditions, simple_quotient, Verma, WeightModule};
use qmap_core::lie::{find_isomorphism, LieModule};
use qmap_core::mapsuper::tensor_lie;
use qmap_core::products::{
    assoc_check, classify_bounded, classify_enumerate, dichotomy, ev_psi, Catalog, Classification, Irreducible, PsiMap,
};
use qmap_core::queer::{cartan_generation_check, Queer};
use qmap_core::scalar::tower_scope;
use qmap_core::verify::{
    cartan_corpus, clifford_check, disjoint_support_check, flip_action, hw_corpus, module_direct_sum, pbw_counts, random_form,
    run_verify, standard_module,
};
use qmap_core::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = (bool, String);

fn criterion(log: &mut Vec<bool>, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
    let t = Instant::now();
    let (ok, detail) = tower_scope(f);
    let el = t.elapsed();
    let pass = ok && el < limit;
    // Written to the stderr handle directly so the lines survive output capture.
    let line =
        format!("{} {name}: {detail} [{:.2}s, limit {}s]", if pass { "PASS" } else { "FAIL" }, el.as_secs_f64(), limit.as_secs());
    let lead = if log.is_empty() { "\n" } else { "" };
    writeln!(std::io::stderr(), "{lead}{line}").expect("stderr");
    log.push(pass);
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|x| Scalar::from_int(*x)).collect()
}

fn tensor_square_of_q1() -> Outcome {
    let t = classify_simple(&make_q(1).tensor(&make_q(1))).unwrap();
    let v = standard_module(&q_basis(1), 1, 1).unwrap();
    let d = dichotomy(&v, &v, |p| Ok(p.module.density().is_irreducible())).unwrap();
    let ok = t == SimpleType::TypeM(1, 1) && d.split && d.hat_dim == 2 && d.full_dim == 4 && d.complement_iso == Some(true);
    (ok, format!("Q(1)⊗Q(1) is {t:?}, C^(1|1)⊗C^(1|1) = V̂⊕V̂ with dim V̂ {}", d.hat_dim))
}

fn queer_structure() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, dim, roots) in [(2, 16, 3), (3, 30, 6)] {
        let q = Queer::new(n);
        ok &= q.g.check_axioms() == (true, true, true)
            && q.dim() == dim
            && q.positive_roots().len() == roots
            && cartan_generation_check(n)
            && q.g.is_simple();
        parts.push(format!("q({n}) dim {} with {} positive roots", q.dim(), q.positive_roots().len()));
    }
    (ok, parts.join(", "))
}

fn clifford_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut ok = true;
    for r in 1..=6 {
        ok &= clifford_check(&mut rng, r, 5).unwrap().0;
    }
    for r in 1..=6 {
        for _ in 0..2 {
            let q = QuadraticPair::new(random_form(&mut rng, r, true)).unwrap();
            ok &= classify_simple(&clifford(&q)).unwrap() == SimpleType::NotSimple;
        }
    }
    (ok, "r = 1..6, five nondegenerate and two degenerate forms each".into())
}

fn cartan_bijection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let rows = cartan_corpus(&mut rng, 20);
    let failed: Vec<&String> = rows.iter().filter(|r| !r.1).map(|r| &r.0).collect();
    (failed.is_empty() && rows.len() == 12, format!("20 functionals over each of three algebras, failing: {failed:?}"))
}

/// Totals of truncated Verma modules at depths 0..4, from expanding
/// `dim H · Π_α ((1+x^α)/(1-x^α))^c` over the three positive roots of q(2)
/// with a computer algebra system.
const PBW_TOTALS: [(usize, [usize; 5]); 2] = [(2, [2, 10, 30, 70, 138]), (4, [4, 36, 180, 660, 1972])];

fn highest_weight_suite() -> Outcome {
    let q = Queer::new(2);
    let c = CoeffAlgebra::complex();
    let dual = CoeffAlgebra::dual();
    let mut ok = true;
    let cases = [
        (PsiFunctional::new(2, &c, ints(&[3, 1])).unwrap(), 0),
        (PsiFunctional::new(2, &c, ints(&[1, 1])).unwrap(), 0),
        (PsiFunctional::new(2, &dual, ints(&[1, 2, 0, 1])).unwrap(), 1),
    ];
    for (psi, k) in &cases {
        let copies = psi.a.dim() - psi.ideal.dim();
        for depth in 0..=4 {
            let v = Verma::new(&q, psi, depth).unwrap();
            let law = pbw_counts(&q, copies, depth as i32);
            let spaces = v.weight_spaces();
            ok &= v.h.dim() == PBW_TOTALS[*k].0 && v.dim() == PBW_TOTALS[*k].1[depth];
            ok &= spaces.len() == law.len() && spaces.iter().all(|(b, idx)| law[b] * v.h.dim() == idx.len());
        }
    }
    let psi = PsiFunctional::new(2, &c, ints(&[1, 1])).unwrap();
    let adj = simple_quotient(&q, &psi, default_depth(2)).unwrap().module.unwrap();
    ok &= adj.dim() == 16 && find_isomorphism(&adj.module, &q.g.adjoint()).is_some();

    let mut corpus: Vec<(Queer, String, CoeffAlgebra, LieModule)> = Vec::new();
    for (name, a, m) in hw_corpus(&q).unwrap() {
        corpus.push((Queer::new(2), format!("q(2) {name}"), a, m));
    }
    let q1 = Queer::new(1);
    let v = |l: i64| simple_quotient(&q1, &PsiFunctional::new(1, &c, ints(&[l])).unwrap(), 8).unwrap().module.unwrap().module;
    for l in 1..=3 {
        corpus.push((Queer::new(1), format!("q(1) V({l})"), c.clone(), v(l)));
    }
    corpus.push((Queer::new(1), "q(1) V(1)+V(2)".into(), c.clone(), module_direct_sum(&v(1), &v(2))));
    for l in [[2, 1], [1, 2]] {
        let p = PsiFunctional::new(2, &c, ints(&l)).unwrap();
        let m = simple_quotient(&q, &p, 8).unwrap().module.unwrap();
        corpus.push((Queer::new(2), format!("q(2) V({},{})", l[0], l[1]), c.clone(), m.module));
    }
    let mut disagree = Vec::new();
    let mut dims = Vec::new();
    for (qn, name, a, m) in &corpus {
        if m.dim() > 64 {
            continue;
        }
        dims.push(m.dim());
        // more than one maximal weight already rules out irreducibility
        let hw = match WeightModule::from_module(qn, a, m.clone()) {
            Ok(w) => w.is_irreducible_hw(qn),
            Err(e) if e.to_string().contains("maximal weights") => false,
            Err(e) => return (false, format!("{name}: {e}")),
        };
        if hw != m.density().is_irreducible() {
            disagree.push(name.clone());
        }
    }
    ok &= disagree.is_empty();
    (
        ok,
        format!(
            "PBW law at depths 0..4, adjoint recovered, {} corpus modules of dims {dims:?}, disagreements {disagree:?}",
            dims.len()
        ),
    )
}

fn finiteness_equivalences() -> Outcome {
    let q2 = Queer::new(2);
    let q1 = Queer::new(1);
    let c = CoeffAlgebra::complex();
    let two = CoeffAlgebra::two_point();
    let dual = CoeffAlgebra::dual();
    let mut cases: Vec<(&Queer, PsiFunctional)> = Vec::new();
    for l in [[0, 0], [1, 1], [2, 1], [1, 2]] {
        cases.push((&q2, PsiFunctional::new(2, &c, ints(&l)).unwrap()));
    }
    for l in 1..=3 {
        cases.push((&q1, PsiFunctional::new(1, &c, ints(&[l])).unwrap()));
    }
    for p in 0..2 {
        cases.push((&q2, PsiFunctional::evaluation(&two, &ints(&[1, 1]), p).unwrap()));
    }
    cases.push((&q2, PsiFunctional::evaluation(&dual, &ints(&[1, 1]), 0).unwrap()));
    let mut ok = true;
    let (mut forward, mut backward) = (0, 0);
    let mut dims = Vec::new();
    for (q, psi) in &cases {
        let Some(v) = simple_quotient(q, psi, 8).unwrap().module else {
            return (false, format!("inconclusive truncation for {:?}", psi.values));
        };
        dims.push(v.dim());
        let f = finiteness_conditions(q, psi, &v);
        let all = [f.quasifinite, f.annihilator_finite_codim, f.psi_vanishes_on_ann, f.finite_support];
        ok &= all.iter().all(|b| *b) && f.ann_is_i_psi;
        let a = &psi.a;
        let mut ideals: Vec<Ideal> = vec![a.zero_ideal(), a.whole(), psi.ideal.clone(), a.nilradical()];
        for p in 0..a.points.len() {
            ideals.push(a.max_ideal(p));
            ideals.push(a.power(&a.max_ideal(p), 2));
        }
        for i in &ideals {
            let chk = check_psi0_ideal(psi, i, &v, q.dim());
            ok &= chk.consistent();
            if chk.psi_vanishes {
                forward += 1;
            } else {
                backward += 1;
            }
        }
    }
    ok &= cases.len() == 10 && forward > 0 && backward > 0;
    (
        ok,
        format!(
            "{} modules of dims {dims:?}; ideal criterion: {forward} vanishing and {backward} non-vanishing cases",
            cases.len()
        ),
    )
}

fn classification_ok(c: &Classification) -> bool {
    c.rows.iter().all(|r| r.ok()) && c.all_distinct()
}

fn products_suite() -> Outcome {
    let q = Queer::new(2);
    let cat = Catalog::new(&q, &["adjoint".into()], default_depth(2)).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    // split branch: two type Q factors
    let v = standard_module(&q_basis(1), 1, 1).unwrap();
    let d = dichotomy(&v, &v, |p| Ok(p.module.density().is_irreducible())).unwrap();
    ok &= d.holds() && d.split;
    for (name, a, bound) in [("two_point", CoeffAlgebra::two_point(), None), ("four_point", CoeffAlgebra::four_point(), Some(2))]
    {
        let (dis, _) = disjoint_support_check(&q, &a, &cat, 0, 1).unwrap();
        let m = tensor_lie(&q.g, &a);
        let single = |p: usize| {
            let mut s = vec![0; a.points.len()];
            s[p] = 1;
            Irreducible::new(m.g.clone(), ev_psi(&m, &cat, &PsiMap(s)).unwrap().module).unwrap()
        };
        let (v1, v2, t) = (single(0), single(1), Irreducible::trivial(m.g.clone()));
        let assoc = assoc_check(&v1, &t, &v2).unwrap().holds() && assoc_check(&t, &v1, &t).unwrap().holds();
        let untw = classify_bounded(&q, &a, None, &cat, bound).unwrap();
        let tw = classify_enumerate(&q, &a, Some(flip_action(&q, &a)), &cat).unwrap();
        let top = untw.rows.iter().chain(&tw.rows).all(|r| r.top_character);
        let surj = tw.rows.iter().all(|r| r.surjective == Some(true));
        let inv = tw.rows.iter().all(|r| r.invariance == Some(true));
        let distinct = untw.all_distinct() && tw.all_distinct();
        ok &= dis && assoc && top && surj && inv && distinct;
        parts.push(format!(
            "{name}: dichotomy {dis}, associativity {assoc}, top characters {top}, onto {surj}, invariance {inv}, distinct {distinct}"
        ));
    }
    (ok, parts.join("; "))
}

fn classification() -> Outcome {
    let q = Queer::new(2);
    let cat = Catalog::new(&q, &["adjoint".into()], default_depth(2)).unwrap();
    let two = CoeffAlgebra::two_point();
    let four = CoeffAlgebra::four_point();
    let untw = classify_enumerate(&q, &two, None, &cat).unwrap();
    let tw = classify_enumerate(&q, &four, Some(flip_action(&q, &four)), &cat).unwrap();
    let restriction = tw.rows.iter().all(|r| r.restriction == Some(true));
    let dims = |c: &Classification| c.rows.iter().map(|r| r.dim).collect::<Vec<_>>();
    let ok = classification_ok(&untw)
        && classification_ok(&tw)
        && restriction
        && dims(&untw) == [1, 16, 16, 256]
        && tw.rows.len() == 4;
    (ok, format!("untwisted dims {:?}, twisted dims {:?}, restriction {restriction}", dims(&untw), dims(&tw)))
}

fn determinism() -> Outcome {
    let a = run_verify("all", 7).unwrap();
    let b = run_verify("all", 7).unwrap();
    let (ja, jb) = (serde_json::to_string_pretty(&a.to_json()).unwrap(), serde_json::to_string_pretty(&b.to_json()).unwrap());
    (ja == jb && a.ok(), format!("{} checks, {} bytes, identical {}", a.checks.len(), ja.len(), ja == jb))
}

#[test]
fn acceptance() {
    let mut log = Vec::new();
    criterion(&mut log, "tensor square of Q(1) and of C^(1|1)", secs(1), tensor_square_of_q1);
    criterion(&mut log, "structure of q(2) and q(3)", secs(30), queer_structure);
    criterion(&mut log, "Clifford superalgebras", secs(60), clifford_suite);
    criterion(&mut log, "Cartan modules H(ψ)", secs(120), cartan_bijection);
    criterion(&mut log, "highest weight modules", secs(300), highest_weight_suite);
    criterion(&mut log, "finiteness conditions for V(ψ)", secs(120), finiteness_equivalences);
    criterion(&mut log, "irreducible products and evaluation modules", secs(600), products_suite);
    criterion(&mut log, "classification over two and four points", secs(900), classification);
    criterion(&mut log, "deterministic reports", secs(120), determinism);
    assert_eq!(log.len(), 9);
    assert!(log.iter().all(|b| *b), "{} of 9 criteria failed", log.iter().filter(|b| !**b).count());
}

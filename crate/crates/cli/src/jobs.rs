//! The commands behind `qmap`, each producing a text and a structured report.

use std::fmt::Write as _;
use std::path::Path;

use qmap_core::assoc::{m_basis, q_basis};
use qmap_core::cartan::{build_h, cartan_subalgebra, PsiFunctional};
use qmap_core::coeff::CoeffAlgebra;
use qmap_core::hw::{default_depth, simple_quotient, weight_key};
use qmap_core::io::{algebra_from_value, parse_group, parse_json, parse_psi, psi_to_json, scalar_to_json};
use qmap_core::products::{
    classify_bounded, hat_tensor, is_isomorphic, parse_catalog_names, Catalog, Classification, Irreducible, DENSITY_LIMIT,
    HOM_SOLVE_LIMIT,
};
use qmap_core::queer::Queer;
use qmap_core::scalar::tower_scope;
use qmap_core::verify::{run_verify, standard_module};
use qmap_core::{Error, Result, Scalar};
use serde_json::{json, Value};

pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn check_n(n: usize) -> Result<Queer> {
    if !(1..=4).contains(&n) {
        return Err(Error::Parse(format!("--n must be between 1 and 4, got {n}")));
    }
    Ok(Queer::new(n))
}

pub fn verify(suite: &str, seed: u64) -> Result<Output> {
    let r = run_verify(suite, seed)?;
    Ok(Output { text: r.to_text(), json: r.to_json(), ok: r.ok() })
}

/// `--algebra` is a JSON file or a preset name.
fn load_algebra(arg: &str) -> Result<CoeffAlgebra> {
    let p = Path::new(arg);
    if p.is_file() {
        let text = read(p)?;
        return algebra_from_value(&text, &parse_json(&text)?);
    }
    CoeffAlgebra::preset(arg)
        .ok_or_else(|| Error::Parse(format!("`{arg}` is neither a file nor a preset (complex, two_point, four_point, dual)")))
}

fn scalars_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn classify(
    algebra: &str,
    group: Option<&Path>,
    catalog: &str,
    n: usize,
    depth: Option<usize>,
    max_support: Option<usize>,
) -> Result<Output> {
    let q = check_n(n)?;
    let a = load_algebra(algebra)?;
    let act = group.map(|p| read(p).and_then(|t| parse_group(&t, &a, &q))).transpose()?;
    if let Some(g) = &act {
        let r = g.validate(&a, &q.g);
        if !r.valid() {
            return Err(Error::Domain(format!("invalid group action: {r:?}")));
        }
    }
    tower_scope(|| {
        let cat = Catalog::new(&q, &parse_catalog_names(catalog), depth.unwrap_or(default_depth(n)))?;
        let c = classify_bounded(&q, &a, act, &cat, max_support)?;
        Ok(classification_output(&a, &cat, &c, max_support))
    })
}

fn classification_output(a: &CoeffAlgebra, cat: &Catalog, c: &Classification, max_support: Option<usize>) -> Output {
    let points: Vec<&str> = a.points.iter().map(|p| p.label.as_str()).collect();
    let catalog: Vec<Value> = cat
        .entries
        .iter()
        .map(|e| json!({"name": e.name, "lambda": scalars_json(&e.lambda), "dim": e.irr.dim(), "schur": e.irr.schur.label()}))
        .collect();
    let rows: Vec<Value> = c
        .rows
        .iter()
        .map(|r| {
            let psi: Vec<Value> =
                r.psi.support().iter().map(|p| json!({"point": points[*p], "module": cat.entries[r.psi.0[*p]].name})).collect();
            let mut v = json!({
                "psi": psi,
                "label": r.label,
                "dim": r.dim,
                "factor_types": r.factor_types,
                "schur": r.schur,
                "irreducible": r.irreducible.irreducible(),
                "certificate": r.irreducible.method(),
                "support": r.support.iter().map(|p| points[*p]).collect::<Vec<_>>(),
                "reduced": r.reduced,
                "top_character": r.top_character,
            });
            if c.twisted {
                v["surjective"] = json!(r.surjective);
                v["restriction"] = json!(r.restriction);
                v["invariance"] = json!(r.invariance);
            }
            v
        })
        .collect();
    let failures = c.failures();
    let json = json!({
        "command": "classify",
        "algebra": {"basis": a.labels, "points": points},
        "twisted": c.twisted,
        "max_support": max_support,
        "catalog": catalog,
        "rows": rows,
        "distinct": c.distinct,
        "failures": failures,
    });
    let mut t = String::new();
    let _ = writeln!(t, "classification over A with basis [{}], points {}", a.labels.join(", "), points.join(" "));
    let _ = writeln!(
        t,
        "{}{}",
        if c.twisted { "twisted" } else { "untwisted" },
        max_support.map_or(String::new(), |k| format!(", support at most {k}"))
    );
    let _ = writeln!(
        t,
        "catalog: {}",
        cat.entries
            .iter()
            .map(|e| format!("{} (dim {}, type {})", e.name, e.irr.dim(), e.irr.schur.label()))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let _ = writeln!(t, "{:>3}  {:>5}  {:<5}  {:<8}  {:<14}  module", "#", "dim", "schur", "factors", "certificate");
    for (i, r) in c.rows.iter().enumerate() {
        let ok = if r.ok() { "" } else { "  FAIL" };
        let _ = writeln!(
            t,
            "{i:>3}  {:>5}  {:<5}  {:<8}  {:<14}  {}{ok}",
            r.dim,
            r.schur,
            r.factor_types.join(""),
            r.irreducible.method(),
            r.label
        );
    }
    let _ = writeln!(t, "separating invariants:");
    for row in &c.distinct {
        let _ = writeln!(t, "  {}", row.iter().map(|s| format!("{s:>4}")).collect::<Vec<_>>().join(""));
    }
    let _ = writeln!(t, "{} modules, {} failures", c.rows.len(), failures.len());
    Output { text: t, json, ok: failures.is_empty() }
}

pub fn dims(n: usize, psi_path: &Path, depth: Option<usize>) -> Result<Output> {
    let q = check_n(n)?;
    let psi = parse_psi(&read(psi_path)?)?;
    if psi.n != n {
        return Err(Error::Parse(format!("functional has n = {}, but --n is {n}", psi.n)));
    }
    let depth = depth.unwrap_or(default_depth(n));
    tower_scope(|| {
        let sq = simple_quotient(&q, &psi, depth)?;
        let mut rows = sq.rows.clone();
        rows.sort_by_key(|r| weight_key(&r.beta));
        let total: usize = rows.iter().map(|r| r.simple).sum();
        let json = json!({
            "command": "dims",
            "n": n,
            "depth": depth,
            "psi": psi_to_json(&psi),
            "conclusive": sq.conclusive(),
            "band": sq.band,
            "rows": rows.iter().map(|r| json!({"weight": r.beta, "verma": r.verma, "maximal": r.maximal, "simple": r.simple})).collect::<Vec<_>>(),
            "total": total,
        });
        let mut t = String::new();
        let _ = writeln!(t, "V(ψ) for q({n}), depth {depth}");
        let _ = writeln!(t, "{:<16} {:>8} {:>8} {:>8}", "weight", "verma", "maximal", "simple");
        for r in &rows {
            let _ = writeln!(t, "{:<16} {:>8} {:>8} {:>8}", format!("{:?}", r.beta), r.verma, r.maximal, r.simple);
        }
        let status = match sq.band {
            Some(b) if sq.conclusive() => format!("conclusive, vanishing band at height {b}"),
            _ => "inconclusive at this depth".into(),
        };
        let _ = writeln!(t, "total {total} ({status})");
        Ok(Output { text: t, json, ok: true })
    })
}

/// Parses a module reference into an irreducible module.
fn module_ref(s: &str, q: &Queer, depth: usize) -> Result<Irreducible> {
    let args = |inner: &str| -> Result<Vec<i64>> {
        inner.split([',', '|']).map(|x| x.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{s}: {e}")))).collect()
    };
    let inner = |p: &str| s.strip_prefix(p).and_then(|r| r.strip_suffix(')'));
    if s == "trivial" || s == "adjoint" || s.starts_with("V(") {
        let cat = Catalog::new(q, &[s.to_string()], depth)?;
        return Ok(cat.entries[cat.index(s).expect("present")].irr.clone());
    }
    if let Some(x) = inner("H(") {
        let l: Vec<Scalar> = args(x)?.into_iter().map(Scalar::from_int).collect();
        if l.len() != q.n {
            return Err(Error::Parse(format!("{s}: expected {} values", q.n)));
        }
        let psi = PsiFunctional::evaluation(&CoeffAlgebra::complex(), &l, 0)?;
        return Irreducible::new(cartan_subalgebra(q), build_h(&psi)?.module);
    }
    if let Some(x) = inner("Q(") {
        return match args(x)?[..] {
            [m] if (1..=3).contains(&m) => standard_module(&q_basis(m as usize), m as usize, m as usize),
            _ => Err(Error::Parse(format!("{s}: expected Q(m) with 1 ≤ m ≤ 3"))),
        };
    }
    if let Some(x) = inner("M(") {
        return match args(x)?[..] {
            [m, k] if m >= 0 && k >= 0 && (1..=4).contains(&(m + k)) => {
                standard_module(&m_basis(m as usize, k as usize), m as usize, k as usize)
            }
            _ => Err(Error::Parse(format!("{s}: expected M(m|k) with 1 ≤ m+k ≤ 4"))),
        };
    }
    Err(Error::Parse(format!("unknown module `{s}`")))
}

pub fn decompose(refs: &[String], n: usize, depth: Option<usize>) -> Result<Output> {
    let q = check_n(n)?;
    let depth = depth.unwrap_or(default_depth(n));
    tower_scope(|| {
        let mods: Vec<Irreducible> = refs.iter().map(|r| module_ref(r, &q, depth)).collect::<Result<_>>()?;
        let mut t = String::new();
        let factors: Vec<Value> =
            refs.iter().zip(&mods).map(|(r, m)| json!({"module": r, "dim": m.dim(), "schur": m.schur.label()})).collect();
        for (r, m) in refs.iter().zip(&mods) {
            let _ = writeln!(t, "{r}: dim {}, type {}", m.dim(), m.schur.label());
        }
        let mut steps = Vec::new();
        let mut ok = true;
        let mut acc = mods[0].clone();
        let mut name = refs[0].clone();
        for (r, m) in refs.iter().zip(&mods).skip(1) {
            let h = hat_tensor(&acc, m)?;
            let hat = h.product.dim();
            let irreducible = (hat <= DENSITY_LIMIT).then(|| h.product.module.density().is_irreducible());
            let complement_iso = h
                .complement
                .as_ref()
                .filter(|c| c.dim() <= HOM_SOLVE_LIMIT)
                .map(|c| c.dim() == hat && is_isomorphic(&h.product.module, c).is_some());
            ok &= irreducible != Some(false) && complement_iso != Some(false);
            ok &= if h.split { 2 * hat == h.full_dim } else { hat == h.full_dim };
            name = if name.contains('⊗') { format!("({name})⊗̂{r}") } else { format!("{name}⊗̂{r}") };
            let shape = if h.split { format!("V̂⊕V̂, dim V̂ = {hat}") } else { format!("irreducible, dim {hat}") };
            let _ = writeln!(
                t,
                "{name}: full dim {}, {shape}, type {}, irreducible {}, summands isomorphic {}",
                h.full_dim,
                h.product.schur.label(),
                irreducible.map_or("not certified".into(), |b| b.to_string()),
                complement_iso.map_or("n/a".into(), |b| b.to_string()),
            );
            steps.push(json!({
                "product": name,
                "full_dim": h.full_dim,
                "split": h.split,
                "hat_dim": hat,
                "schur": h.product.schur.label(),
                "irreducible": irreducible,
                "summands_isomorphic": complement_iso,
            }));
            acc = h.product;
        }
        let json = json!({"command": "decompose", "n": n, "factors": factors, "steps": steps, "ok": ok});
        Ok(Output { text: t, json, ok })
    })
}

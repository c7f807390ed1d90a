//! Command handlers: each returns the rendered output and whether the
//! analysis came out positive.

use crate::{tables, CertifyKind, Cli, Command, Failure, Format, Input, Outcome};
use coxlab::catalog::{self, format_values, CatalogEntry};
use coxlab::certify::{
    certify_ghc, certify_quasi_fuchsian, disconnected_check, discriminant_identity, lambda_polynomial, region_csv,
    region_scan, sweep_csv, sweep_family, Certificate, FamilyTemplate, Region,
};
use coxlab::classify::{classify_irreducible, moussong};
use coxlab::diagram::{parse_template, CoxeterDiagram, DiagramTemplate};
use coxlab::exactla::{determinant, inertia};
use coxlab::nerve::{join_sphere_certificate, nerve};
use coxlab::orbit::{orbit_report, FloatRep, OrbitConfig};
use coxlab::scalar::AlgScalar;
use coxlab::tits;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

/// A resolved input diagram with its provenance.
struct Loaded {
    diagram: CoxeterDiagram,
    label: String,
    entry: Option<&'static CatalogEntry>,
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn split_catalog(spec: &str) -> Result<(&str, &str), Failure> {
    spec.split_once(':').ok_or_else(|| Failure::Usage(format!("--catalog expects table:item, got `{spec}`")))
}

fn given_params(input: &Input) -> BTreeMap<String, u32> {
    input.params.iter().cloned().collect()
}

fn load_template(input: &Input) -> Result<(DiagramTemplate, String, Option<&'static CatalogEntry>), Failure> {
    if let Some(path) = &input.file {
        let t = parse_template(&read_file(path)?).map_err(Failure::usage)?;
        return Ok((t, path.display().to_string(), None));
    }
    let spec = input.catalog.as_deref().expect("clap enforces one input");
    let (table, item) = split_catalog(spec)?;
    let e = catalog::find_entry(table, item).map_err(Failure::usage)?;
    Ok((e.template.clone(), e.id(), Some(e)))
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    let (template, label, entry) = load_template(input)?;
    let mut values = given_params(input);
    let defaults = match entry {
        Some(e) => e.minimal_values().unwrap_or_default(),
        None => template.minimal_values(),
    };
    for (k, v) in defaults {
        values.entry(k).or_insert(v);
    }
    let diagram = match entry {
        Some(e) => e.instantiate(&values).map_err(Failure::usage)?,
        None => template.instantiate(&values).map_err(Failure::usage)?,
    };
    let label = if values.is_empty() { label } else { format!("{label} {}", format_values(&values)) };
    Ok(Loaded { diagram, label, entry })
}

fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(cmd: &str) -> Failure {
    Failure::Usage(format!("--format csv is not available for `{cmd}`"))
}

fn no_dot(cmd: &str) -> Failure {
    Failure::Usage(format!("--format dot is not available for `{cmd}`"))
}

pub fn run(cli: &Cli, digits: u32) -> Result<Outcome, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Classify(input) => classify(input, fmt),
        Command::Signature { input, lambda } => signature(input, lambda.as_deref(), fmt, digits),
        Command::Moussong(input) => hyperbolicity(input, fmt),
        Command::Nerve(input) => nerve_cmd(input, fmt),
        Command::Certify { kind } => certify(kind, fmt, digits),
        Command::Lambda(input) => lambda(input, fmt, digits),
        Command::Sweep { input, ranges, widen } => sweep(input, ranges, *widen, fmt, digits),
        Command::Region { pmax, qmax } => region(*pmax, qmax.unwrap_or(*pmax), fmt),
        Command::Orbit { input, length, lemma_samples, tiling_samples, tiling_length, seed, tol, limit_csv } => {
            let cfg = OrbitConfig {
                length: *length,
                lemma_samples: *lemma_samples,
                tiling_samples: *tiling_samples,
                tiling_length: *tiling_length,
                seed: *seed,
                tol: *tol,
            };
            orbit(input, &cfg, limit_csv.as_deref(), fmt)
        }
        Command::Catalog { table } => catalog_cmd(table.as_deref(), fmt),
        Command::Tables { which } => tables::run(which, cli.out.as_deref(), fmt, digits),
    }
}

/// Writes the output to `--out` or stdout; `tables` writes its own files.
pub fn emit(cli: &Cli, output: &str) -> Result<(), Failure> {
    let writes_dir = matches!(&cli.command, Command::Tables { which } if which == "all");
    match &cli.out {
        Some(path) if !writes_dir => {
            std::fs::write(path, output).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        _ => {
            use std::io::Write;
            std::io::stdout().write_all(output.as_bytes()).map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn classify(input: &Input, fmt: Format) -> Result<Outcome, Failure> {
    let l = load(input)?;
    if fmt == Format::Dot {
        return Ok(Outcome { output: l.diagram.to_dot(), positive: true });
    }
    let mut comps = Vec::new();
    for c in l.diagram.components() {
        let sub = l.diagram.restrict(c).map_err(Failure::usage)?;
        let class = classify_irreducible(&sub).map_err(Failure::usage)?;
        comps.push((c, class));
    }
    let single = comps.len() == 1;
    let output = match fmt {
        Format::Json => {
            let list: Vec<Value> =
                comps.iter().map(|(c, k)| json!({ "nodes": c, "kind": k.kind, "name": k.catalog_name })).collect();
            let mut v = json!({ "diagram": l.label, "components": list });
            if single {
                v["kind"] = json!(comps[0].1.kind);
                v["name"] = json!(comps[0].1.catalog_name);
            }
            json_string(&v)
        }
        Format::Text => {
            let mut s = String::new();
            for (c, k) in &comps {
                let name = k.catalog_name.as_deref().unwrap_or("-");
                writeln!(s, "{:?}\t{:?}\t{name}", c.to_one_based(), k.kind).unwrap();
            }
            s
        }
        Format::Csv => return Err(no_csv("classify")),
        Format::Dot => unreachable!(),
    };
    Ok(Outcome { output, positive: true })
}

fn parse_lambda(s: &str) -> Result<AlgScalar, Failure> {
    let bad = || Failure::Usage(format!("λ must be an integer or a ratio a/b, got `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().map_err(|_| bad())?, d.trim().parse::<i64>().map_err(|_| bad())?),
        None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
    };
    AlgScalar::from_ratio(n, d).map_err(Failure::usage)
}

fn signature(input: &Input, lambda: Option<&str>, fmt: Format, digits: u32) -> Result<Outcome, Failure> {
    let l = load(input)?;
    let c = match lambda {
        Some(s) => l.diagram.lambda_cosine_matrix(&parse_lambda(s)?).map_err(Failure::usage)?,
        None => l.diagram.cosine_matrix(),
    };
    let det = determinant(&c);
    let sig = inertia(&c).map_err(Failure::usage)?;
    let output = match fmt {
        Format::Json => json_string(&json!({
            "diagram": l.label,
            "lambda": lambda,
            "det_exact": det.exact_string(),
            "det_float": det.to_float(digits),
            "signature": [sig.pos, sig.neg, sig.null],
        })),
        Format::Text => format!("det = {} ≈ {}\nsignature = {sig}\n", det.exact_string(), det.to_float(digits)),
        Format::Csv => format!(
            "diagram,det_exact,det_float,sig_p,sig_q,sig_r\n\"{}\",\"{}\",{},{},{},{}\n",
            l.label,
            det.exact_string(),
            det.to_float(digits),
            sig.pos,
            sig.neg,
            sig.null
        ),
        Format::Dot => return Err(no_dot("signature")),
    };
    Ok(Outcome { output, positive: true })
}

fn hyperbolicity(input: &Input, fmt: Format) -> Result<Outcome, Failure> {
    let l = load(input)?;
    let v = moussong(&l.diagram).map_err(Failure::usage)?;
    let output = match fmt {
        Format::Json => json_string(&json!({ "diagram": l.label, "hyperbolic": v.hyperbolic, "witness": v.witness })),
        Format::Text => match &v.witness {
            None => "hyperbolic\n".to_string(),
            Some(w) => format!("not hyperbolic: {}\n", serde_json::to_string(w).expect("serializable")),
        },
        Format::Csv => return Err(no_csv("moussong")),
        Format::Dot => return Err(no_dot("moussong")),
    };
    Ok(Outcome { output, positive: true })
}

fn nerve_cmd(input: &Input, fmt: Format) -> Result<Outcome, Failure> {
    let l = load(input)?;
    let n = nerve(&l.diagram).map_err(Failure::usage)?;
    let join = join_sphere_certificate(&l.diagram).map_err(Failure::usage)?;
    let output = match fmt {
        Format::Dot => n.to_dot(),
        Format::Json => json_string(&json!({
            "diagram": l.label,
            "f_vector": n.f_vector(),
            "euler_characteristic": n.euler_characteristic(),
            "dimension": n.dimension(),
            "join_certificate": join,
            "complex": n.to_json(),
        })),
        Format::Text => {
            let mut s = format!("f-vector: {:?}\nEuler characteristic: {}\n", n.f_vector(), n.euler_characteristic());
            match &join {
                Some(j) => writeln!(
                    s,
                    "nerve ≅ ∂Δ{:?} * ∂Δ{:?}, a sphere of dimension {}",
                    j.s1.to_one_based(),
                    j.s2.to_one_based(),
                    j.d as isize - 1
                )
                .unwrap(),
                None => s.push_str("no Lannér bipartition found\n"),
            }
            s
        }
        Format::Csv => return Err(no_csv("nerve")),
    };
    Ok(Outcome { output, positive: true })
}

fn render_certificate(c: &Certificate, fmt: Format) -> Result<String, Failure> {
    match fmt {
        Format::Json => Ok(json_string(&serde_json::to_value(c).expect("serializable"))),
        Format::Text => {
            let mut s = format!("{} ({:?})\n", c.diagram, c.kind);
            for ch in &c.checks {
                writeln!(s, "  [{}] {}", if ch.pass { "pass" } else { "FAIL" }, ch.name).unwrap();
            }
            match &c.conclusion {
                Some(k) => writeln!(s, "conclusion ({}): {}", k.theorem, k.statement).unwrap(),
                None => s.push_str("no conclusion: some hypothesis failed\n"),
            }
            Ok(s)
        }
        Format::Csv => {
            let mut s = String::from("check,pass\n");
            for ch in &c.checks {
                writeln!(s, "{},{}", ch.name, ch.pass).unwrap();
            }
            Ok(s)
        }
        Format::Dot => Err(no_dot("certify")),
    }
}

fn certify(kind: &CertifyKind, fmt: Format, _digits: u32) -> Result<Outcome, Failure> {
    let cert = match kind {
        CertifyKind::Ghc(input) => {
            let l = load(input)?;
            certify_ghc(&l.diagram).with_id(l.label)
        }
        CertifyKind::Qf(input) => {
            let l = load(input)?;
            certify_quasi_fuchsian(&l.diagram).with_id(l.label)
        }
        CertifyKind::Disconnected(input) => {
            let l = load(input)?;
            let reference = l.entry.and_then(|e| e.reference_diagram());
            disconnected_check(&l.diagram, reference.as_ref()).map_err(Failure::usage)?.with_id(l.label)
        }
    };
    Ok(Outcome { output: render_certificate(&cert, fmt)?, positive: cert.passes() })
}

fn lambda(input: &Input, fmt: Format, digits: u32) -> Result<Outcome, Failure> {
    let l = load(input)?;
    let q = lambda_polynomial(&l.diagram).map_err(Failure::usage)?;
    let ident = discriminant_identity(&l.diagram).map_err(Failure::usage)?;
    let output = match fmt {
        Format::Json => {
            let mut v = q.to_json();
            v["diagram"] = json!(l.label);
            v["discriminant_identity"] = ident.to_json();
            json_string(&v)
        }
        Format::Text => {
            let mut s = String::new();
            for (name, x) in [("a0", &q.a0), ("a1", &q.a1), ("a2", &q.a2), ("delta", &q.delta)] {
                writeln!(s, "{name} = {} ≈ {}", x.exact_string(), x.to_float(digits)).unwrap();
            }
            match &q.roots {
                Some((l1, l2)) => {
                    writeln!(s, "λ1 = {l1} ≈ {}\nλ2 = {l2} ≈ {}", l1.to_float(digits), l2.to_float(digits)).unwrap()
                }
                None => s.push_str("no two distinct real roots\n"),
            }
            writeln!(s, "δ = 16·det C(S1)·det C(S2): {}", ident.holds()).unwrap();
            s
        }
        Format::Csv => {
            let mut w = String::from("a0,a1,a2,delta,lambda1,lambda2\n");
            let (r1, r2) = q.roots.as_ref().map(|(a, b)| (a.to_float(digits), b.to_float(digits))).unwrap_or_default();
            writeln!(
                w,
                "{},{},{},{},{r1},{r2}",
                q.a0.to_float(digits),
                q.a1.to_float(digits),
                q.a2.to_float(digits),
                q.delta.to_float(digits)
            )
            .unwrap();
            w
        }
        Format::Dot => return Err(no_dot("lambda")),
    };
    Ok(Outcome { output, positive: ident.holds() })
}

fn sweep(
    input: &Input,
    ranges: &[(String, u32, u32)],
    widen: bool,
    fmt: Format,
    digits: u32,
) -> Result<Outcome, Failure> {
    let (template, label, entry) = load_template(input)?;
    let mut fam = match entry {
        Some(e) => FamilyTemplate::from_entry(e),
        None => FamilyTemplate::new(label, template),
    };
    if widen {
        for (name, lo, hi) in ranges {
            fam = fam.with_range(name, *lo, Some(*hi)).map_err(Failure::usage)?;
        }
    }
    let fixed = given_params(input);
    let mut points = vec![fixed];
    for (name, lo, hi) in ranges {
        points = points
            .into_iter()
            .flat_map(|p| {
                (*lo..=*hi).map(move |v| {
                    let mut q = p.clone();
                    q.insert(name.clone(), v);
                    q
                })
            })
            .collect();
    }
    let res = sweep_family(&fam, &points).map_err(Failure::usage)?;
    let agree = res.rows.iter().all(|r| r.routes_agree);
    let output = match fmt {
        Format::Csv => sweep_csv(&res, digits),
        Format::Json => {
            let rows: Vec<Value> = res
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "params": r.params,
                        "det_exact": r.det.exact_string(),
                        "det_float": r.det.to_float(digits),
                        "signature": [r.signature.pos, r.signature.neg, r.signature.null],
                        "hyperbolic": r.hyperbolic,
                        "verdict": r.regime,
                        "routes_agree": r.routes_agree,
                    })
                })
                .collect();
            json_string(&json!({
                "family": res.family,
                "rows": rows,
                "increasing": res.increasing,
                "limit_det": { "exact": res.limit.exact_string(), "decimal": res.limit.to_float(digits) },
            }))
        }
        Format::Text => {
            let mut s = String::new();
            for r in &res.rows {
                writeln!(
                    s,
                    "{}\tdet ≈ {}\t{}\t{}",
                    format_values(&r.params),
                    r.det.to_float(digits),
                    r.signature,
                    r.regime
                )
                .unwrap();
            }
            writeln!(s, "increasing: {}\nlimit det ≈ {}", res.increasing, res.limit.to_float(digits)).unwrap();
            s
        }
        Format::Dot => return Err(no_dot("sweep")),
    };
    Ok(Outcome { output, positive: agree })
}

fn region(pmax: u32, qmax: u32, fmt: Format) -> Result<Outcome, Failure> {
    if pmax < 7 || qmax < 7 {
        return Err(Failure::Usage("the scan starts at p = q = 7".into()));
    }
    let scan = region_scan(pmax, qmax).map_err(Failure::usage)?;
    let output = match fmt {
        Format::Csv => region_csv(&scan),
        Format::Json => json_string(&json!({ "cells": scan.values().collect::<Vec<_>>() })),
        Format::Text => {
            let mut s = String::new();
            for r in [Region::Light, Region::Dark] {
                let cells: Vec<String> =
                    scan.values().filter(|v| v.membership == r).map(|v| format!("({},{})", v.p, v.q)).collect();
                writeln!(s, "{} ({} cells): {}", r.label(), cells.len(), cells.join(" ")).unwrap();
            }
            let b: Vec<String> = scan.values().filter(|v| v.boundary).map(|v| format!("({},{})", v.p, v.q)).collect();
            writeln!(s, "boundary: {}", b.join(" ")).unwrap();
            s
        }
        Format::Dot => return Err(no_dot("region")),
    };
    Ok(Outcome { output, positive: true })
}

fn orbit(input: &Input, cfg: &OrbitConfig, limit_csv: Option<&Path>, fmt: Format) -> Result<Outcome, Failure> {
    let l = load(input)?;
    let rep = tits::build(&l.diagram.cosine_matrix(), &l.diagram).map_err(Failure::usage)?;
    let frep = FloatRep::from_rep(&rep).map_err(Failure::usage)?;
    let (report, limit) = orbit_report(&frep, cfg).map_err(Failure::usage)?;
    if let Some(path) = limit_csv {
        std::fs::write(path, limit.to_csv()).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    let output = match fmt {
        Format::Json => json_string(&serde_json::to_value(&report).expect("serializable")),
        Format::Csv => limit.to_csv(),
        Format::Text => format!(
            "{} ({})\nball sizes {:?}\nproximal elements {}, limit points {}, max B(x,y) {:?}\n\
             lemma samples {} with {} violations\ntiling samples {} × {} translates with {} violations\n",
            l.label,
            report.evidence,
            report.ball_sizes,
            report.n_proximal,
            report.n_limit_points,
            report.max_pairwise_inner,
            report.lemma_light.accepted,
            report.lemma_light.violations,
            report.tiling.samples,
            report.tiling.translates,
            report.tiling.violations
        ),
        Format::Dot => return Err(no_dot("orbit")),
    };
    Ok(Outcome { output, positive: report.passes() })
}

fn catalog_cmd(table: Option<&str>, fmt: Format) -> Result<Outcome, Failure> {
    let output = match table {
        None => match fmt {
            Format::Json => json_string(&json!(catalog::tables()
                .iter()
                .map(|t| json!({ "key": t.key, "number": t.number, "dimension": t.dimension, "title": t.title }))
                .collect::<Vec<_>>())),
            Format::Text | Format::Csv => {
                let mut s = String::from("key,number,dimension,entries,title\n");
                for t in catalog::tables() {
                    let n = catalog::table_entries(t.key).map(|v| v.len()).unwrap_or(0);
                    let num = t.number.map(|x| x.to_string()).unwrap_or_default();
                    let dim = t.dimension.map(|x| x.to_string()).unwrap_or_default();
                    writeln!(s, "{},{num},{dim},{n},\"{}\"", t.key, t.title).unwrap();
                }
                s
            }
            Format::Dot => return Err(no_dot("catalog")),
        },
        Some(name) => {
            let entries = catalog::table_entries(name).map_err(Failure::usage)?;
            match fmt {
                Format::Json => json_string(&json!(entries
                    .iter()
                    .map(|e| json!({
                        "id": e.id(),
                        "params": e.param_names(),
                        "constraint": e.constraint.describe(),
                        "minimal": e.minimal_values(),
                        "diagram": e.template.serialize(),
                    }))
                    .collect::<Vec<_>>())),
                Format::Text | Format::Csv => {
                    let mut s = String::from("id,params,constraint,minimal\n");
                    for e in entries {
                        let min = e.minimal_values().map(|v| format_values(&v)).unwrap_or_else(|| "-".into());
                        writeln!(
                            s,
                            "{},\"{}\",\"{}\",\"{min}\"",
                            e.id(),
                            e.param_names().join(" "),
                            e.constraint.describe()
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Dot => return Err(no_dot("catalog")),
            }
        }
    };
    Ok(Outcome { output, positive: true })
}

//! Deterministic regeneration of the computed table content as CSV.
//!
//! Each entry is evaluated at its reference parameters when the table gives
//! them, and at its smallest admissible parameters otherwise.

use crate::{Failure, Format, Outcome};
use coxlab::catalog::{self, format_values, CatalogEntry, TableInfo, TableKind};
use coxlab::certify::{certify_ghc, certify_quasi_fuchsian, disconnected_check, lambda_polynomial};
use coxlab::classify::{classify_irreducible, moussong};
use coxlab::diagram::CoxeterDiagram;
use coxlab::exactla::{determinant, inertia, Signature};
use coxlab::scalar::AlgScalar;
use std::collections::BTreeMap;
use std::path::Path;

pub const HEADER: [&str; 15] = [
    "item",
    "tag",
    "params",
    "rank",
    "det_exact",
    "det_float",
    "signature",
    "hyperbolic",
    "kind",
    "a0",
    "a1",
    "a2",
    "lambda1",
    "lambda2",
    "verdict",
];

fn values_for(e: &CatalogEntry) -> Option<BTreeMap<String, u32>> {
    if !e.reference.is_empty() {
        Some(e.reference.clone())
    } else {
        e.minimal_values()
    }
}

fn diagram_for(e: &CatalogEntry, values: &BTreeMap<String, u32>) -> Result<CoxeterDiagram, Failure> {
    // reference parameters may sit on the boundary of the admissible range
    e.template.instantiate_unchecked(values).map_err(Failure::usage)
}

fn row(info: &TableInfo, e: &CatalogEntry, digits: u32) -> Result<Vec<String>, Failure> {
    let mut rec = vec![e.index.to_string(), e.tag.clone().unwrap_or_default()];
    let Some(values) = values_for(e) else {
        rec.push("none admissible".into());
        rec.resize(HEADER.len(), String::new());
        return Ok(rec);
    };
    let d = diagram_for(e, &values)?;
    let c = d.cosine_matrix();
    let det = determinant(&c);
    let sig = inertia(&c).map_err(Failure::usage)?;
    let hyp = moussong(&d).map_err(Failure::usage)?.hyperbolic;
    rec.extend([
        format_values(&values),
        d.rank().to_string(),
        det.exact_string(),
        det.to_float(digits),
        sig.to_string(),
        hyp.to_string(),
    ]);
    let mut kind = String::new();
    let mut quad = vec![String::new(); 5];
    let verdict = match info.kind {
        TableKind::Ghc => pass_label(certify_ghc(&d).failures(), "GHC"),
        TableKind::QuasiFuchsian => pass_label(certify_quasi_fuchsian(&d).failures(), "quasi-Fuchsian"),
        TableKind::Lattice if d.has_infinity() => {
            // the polytope's Gram matrix is C^λ₀ at the double root of det C^λ
            let q = lambda_polynomial(&d).map_err(Failure::usage)?;
            quad[0] = q.a0.to_float(digits);
            quad[1] = q.a1.to_float(digits);
            quad[2] = q.a2.to_float(digits);
            if q.delta.is_zero() && !q.a2.is_zero() {
                let l0 = q.a1.neg().div(&q.a2.mul(&AlgScalar::from_i64(2))).map_err(Failure::usage)?;
                quad[3] = l0.to_float(digits);
                quad[4] = l0.to_float(digits);
                let s = inertia(&d.lambda_cosine_matrix(&l0).map_err(Failure::usage)?).map_err(Failure::usage)?;
                polytope_label(s, info.dimension)
            } else {
                "no double root".to_string()
            }
        }
        TableKind::Lattice => polytope_label(sig, info.dimension),
        TableKind::OneInfinity | TableKind::DisconnectedAds | TableKind::DisconnectedQf => {
            let q = lambda_polynomial(&d).map_err(Failure::usage)?;
            quad[0] = q.a0.to_float(digits);
            quad[1] = q.a1.to_float(digits);
            quad[2] = q.a2.to_float(digits);
            if let Some((l1, l2)) = &q.roots {
                quad[3] = l1.to_float(digits);
                quad[4] = l2.to_float(digits);
            }
            let reference = e.reference_diagram();
            let cert = disconnected_check(&d, reference.as_ref()).map_err(Failure::usage)?;
            pass_label(cert.failures(), "disconnected")
        }
        TableKind::Spherical | TableKind::Affine | TableKind::Lanner => {
            let class = classify_irreducible(&d).map_err(Failure::usage)?;
            kind = format!("{:?}", class.kind);
            class.catalog_name.unwrap_or_default()
        }
    };
    rec.push(kind);
    rec.extend(quad);
    rec.push(verdict);
    Ok(rec)
}

fn polytope_label(s: Signature, dimension: Option<usize>) -> String {
    if s.neg == 1 && Some(s.pos) == dimension {
        format!("compact polytope Gram {s}")
    } else {
        format!("other signature {s}")
    }
}

fn pass_label(failures: Vec<&str>, ok: &str) -> String {
    if failures.is_empty() {
        ok.to_string()
    } else {
        format!("fails {}", failures.join(" "))
    }
}

/// The CSV of one table.
pub fn table_csv(key: &str, digits: u32) -> Result<String, Failure> {
    let info = catalog::table_info(key).map_err(Failure::usage)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).map_err(|e| Failure::Io(e.to_string()))?;
    for e in catalog::table_entries(info.key).map_err(Failure::usage)? {
        w.write_record(row(info, e, digits)?).map_err(|e| Failure::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

/// `which` is a table key, a table number, or `all`. With `all` and `--out`,
/// one `<key>.csv` per table is written into that directory; without it the
/// tables are concatenated on stdout, each preceded by a `# <key>` line.
pub fn run(which: &str, out: Option<&Path>, fmt: Format, digits: u32) -> Result<Outcome, Failure> {
    if !matches!(fmt, Format::Csv | Format::Text) {
        return Err(Failure::Usage("tables are emitted as CSV only".into()));
    }
    if which != "all" {
        return Ok(Outcome { output: table_csv(which, digits)?, positive: true });
    }
    let mut combined = String::new();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    }
    for info in catalog::tables() {
        let csv = table_csv(info.key, digits)?;
        match out {
            Some(dir) => {
                let path = dir.join(format!("{}.csv", info.key));
                std::fs::write(&path, &csv).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            None => {
                combined.push_str(&format!("# {}\n", info.key));
                combined.push_str(&csv);
            }
        }
    }
    Ok(Outcome { output: combined, positive: true })
}

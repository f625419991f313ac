//! Machine-readable documents: JSON builders for every command, the CSV
//! form of a fusion table, and the parsers that make serialization
//! round-trip testable.  Exact rationals travel as reduced "p/q" strings,
//! never as floats; complex entries travel as [re, im] pairs next to the
//! tolerance they were verified under.

use crate::affine::TypeClass;
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::fusion::{FoldResult, FusionTable};
use crate::level::LevelData;
use crate::modular::SMatrix;
use crate::root_system::{Rat, RootSystem, Weight};
use num::complex::Complex64;
use serde_json::{json, Value};
use std::str::FromStr;

fn weight_list(ws: &[Weight]) -> Value {
    json!(ws)
}

fn phase_strings(ld: &LevelData) -> Value {
    let rows: Vec<Vec<String>> = ld
        .points
        .iter()
        .map(|p| p.phases.iter().map(|q| q.to_string()).collect())
        .collect();
    json!(rows)
}

/// Document for the `weights` command: the alcove, the evaluation phases,
/// and (for dual-twisted types) the dual alcove the phases are indexed by.
pub fn weights_doc(rs: &RootSystem, ld: &LevelData) -> Value {
    let mut doc = json!({
        "type": rs.data.affine_type.to_string(),
        "level": ld.level,
        "rank": rs.rank,
        "dual_coxeter": rs.data.dual_coxeter,
        "norm_const": ld.norm_const,
        "weights": weight_list(&ld.weights),
        "phases": phase_strings(ld),
    });
    if rs.data.affine_type.class() == TypeClass::TwistedDual {
        doc["coweights"] = weight_list(&ld.coweights);
    }
    doc
}

/// Summary of the verification run attached to a serialized fusion table.
#[derive(Debug, Clone)]
pub struct FuseVerification {
    pub orthonormality_residual: f64,
    pub kac_walton_mode: &'static str,
    pub kac_walton_pairs: usize,
    pub kac_walton_agrees: bool,
}

pub fn fuse_doc(
    rs: &RootSystem,
    ld: &LevelData,
    table: &FusionTable,
    verification: &FuseVerification,
) -> Value {
    let np = ld.weights.len();
    let mut entries = Vec::new();
    for l in 0..np {
        for m in 0..np {
            for n in 0..np {
                let c = table.coeffs[l][m][n];
                if c != 0 {
                    entries.push(json!([l, m, n, c]));
                }
            }
        }
    }
    let mut doc = json!({
        "type": rs.data.affine_type.to_string(),
        "level": ld.level,
        "weights": weight_list(&ld.weights),
        "entries": entries,
        "max_residual": table.max_residual,
        "verification": {
            "orthonormality_residual": verification.orthonormality_residual,
            "kac_walton": {
                "mode": verification.kac_walton_mode,
                "pairs_checked": verification.kac_walton_pairs,
                "agrees": verification.kac_walton_agrees,
            },
        },
    });
    if !table.negative_entries.is_empty() {
        doc["negative_entries"] = json!(table
            .negative_entries
            .iter()
            .map(|&(l, m, n, c)| json!([l, m, n, c]))
            .collect::<Vec<_>>());
    }
    doc
}

/// CSV form of a fusion table: one `lambda,mu,nu,c` row per nonzero
/// coefficient, weights written as space-joined coordinates.
pub fn fuse_csv(ld: &LevelData, table: &FusionTable) -> String {
    let mut out = String::from("lambda,mu,nu,c\n");
    let show = |w: &Weight| {
        w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    };
    let np = ld.weights.len();
    for l in 0..np {
        for m in 0..np {
            for n in 0..np {
                let c = table.coeffs[l][m][n];
                if c != 0 {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        show(&ld.weights[l]),
                        show(&ld.weights[m]),
                        show(&ld.weights[n]),
                        c
                    ));
                }
            }
        }
    }
    out
}

pub fn verlinde_doc(
    rs: &RootSystem,
    ld: &LevelData,
    genus: i64,
    insertions: &[Weight],
    value: i64,
    raw: Complex64,
    residual: f64,
) -> Value {
    json!({
        "type": rs.data.affine_type.to_string(),
        "level": ld.level,
        "genus": genus,
        "insertions": weight_list(insertions),
        "value_integer": value,
        "raw_complex": [raw.re, raw.im],
        "residual": residual,
    })
}

pub fn smatrix_doc(s: &SMatrix, rows: &[Weight], tolerance: f64) -> Value {
    let entries: Vec<Vec<[f64; 2]>> = s
        .entries
        .iter()
        .map(|row| row.iter().map(|e| [e.re, e.im]).collect())
        .collect();
    json!({
        "type": s.source.to_string(),
        "target": s.target.to_string(),
        "level": s.level,
        "rows": weight_list(rows),
        "cols": weight_list(&s.columns),
        "entries": entries,
        "unitarity_residual": s.unitarity_residual(),
        "tolerance": tolerance,
    })
}

pub fn decompose_doc(
    rs: &RootSystem,
    ld: &LevelData,
    lam: &Weight,
    mu: &Weight,
    constituents: &[(Weight, i64, FoldResult)],
    fused: &[(Weight, i64)],
) -> Value {
    let parts: Vec<Value> = constituents
        .iter()
        .map(|(w, mult, fold)| {
            let f = match fold {
                FoldResult::Wall => json!({ "kind": "wall" }),
                FoldResult::Interior { weight, sign } => {
                    json!({ "kind": "interior", "weight": weight, "sign": sign })
                }
            };
            json!({ "weight": w, "multiplicity": mult, "fold": f })
        })
        .collect();
    json!({
        "type": rs.data.affine_type.to_string(),
        "level": ld.level,
        "lambda": lam,
        "mu": mu,
        "constituents": parts,
        "fused": fused
            .iter()
            .map(|(w, c)| json!({ "weight": w, "coefficient": c }))
            .collect::<Vec<_>>(),
    })
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn check_doc(type_name: &str, level: i64, checks: &[CheckOutcome]) -> Value {
    json!({
        "type": type_name,
        "level": level,
        "checks": checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
        "passed": checks.iter().all(|c| c.passed),
    })
}

// ---------------------------------------------------------------------------
// Parsers (round-trip support)

fn as_weight(v: &Value) -> Result<Weight> {
    v.as_array()
        .ok_or_else(|| Error::InvalidInput("weight is not an array".into()))?
        .iter()
        .map(|c| {
            c.as_i64()
                .ok_or_else(|| Error::InvalidInput("weight coordinate is not an integer".into()))
        })
        .collect()
}

fn as_weights(v: &Value) -> Result<Vec<Weight>> {
    v.as_array()
        .ok_or_else(|| Error::InvalidInput("weight list is not an array".into()))?
        .iter()
        .map(as_weight)
        .collect()
}

/// Parse a `weights` document back into (weights, phases).
pub fn parse_weights_doc(text: &str) -> Result<(Vec<Weight>, Vec<Vec<Rat>>)> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    let weights = as_weights(&doc["weights"])?;
    let phases = doc["phases"]
        .as_array()
        .ok_or_else(|| Error::InvalidInput("phases missing".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::InvalidInput("phase row is not an array".into()))?
                .iter()
                .map(|s| {
                    let s = s
                        .as_str()
                        .ok_or_else(|| Error::InvalidInput("phase is not a string".into()))?;
                    Rat::from_str(s)
                        .map_err(|e| Error::InvalidInput(format!("bad fraction {s}: {e}")))
                })
                .collect::<Result<Vec<Rat>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((weights, phases))
}

/// Parse a `fuse` JSON document back into (weights, sparse entries).
pub fn parse_fuse_doc(text: &str) -> Result<(Vec<Weight>, Vec<(usize, usize, usize, i64)>)> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    let weights = as_weights(&doc["weights"])?;
    let entries = doc["entries"]
        .as_array()
        .ok_or_else(|| Error::InvalidInput("entries missing".into()))?
        .iter()
        .map(|e| {
            let row = e
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| Error::InvalidInput("entry is not a 4-tuple".into()))?;
            let idx = |i: usize| {
                row[i]
                    .as_i64()
                    .ok_or_else(|| Error::InvalidInput("entry field is not an integer".into()))
            };
            Ok((idx(0)? as usize, idx(1)? as usize, idx(2)? as usize, idx(3)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((weights, entries))
}

/// Parse the CSV form back into rows of (lambda, mu, nu, c) by coordinates.
pub fn parse_fuse_csv(text: &str) -> Result<Vec<(Weight, Weight, Weight, i64)>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "lambda,mu,nu,c" {
                return Err(Error::InvalidInput(format!("bad CSV header: {line}")));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 4 {
            return Err(Error::InvalidInput(format!("bad CSV row: {line}")));
        }
        let weight = |s: &str| -> Result<Weight> {
            s.split_whitespace()
                .map(|c| {
                    c.parse::<i64>()
                        .map_err(|e| Error::InvalidInput(format!("bad coordinate {c}: {e}")))
                })
                .collect()
        };
        let c = cols[3]
            .parse::<i64>()
            .map_err(|e| Error::InvalidInput(format!("bad coefficient: {e}")))?;
        rows.push((weight(cols[0])?, weight(cols[1])?, weight(cols[2])?, c));
    }
    Ok(rows)
}

/// Parse an `smatrix` document back into (rows, cols, complex entries).
pub fn parse_smatrix_doc(
    text: &str,
) -> Result<(Vec<Weight>, Vec<Weight>, Vec<Vec<Complex64>>)> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))?;
    let rows = as_weights(&doc["rows"])?;
    let cols = as_weights(&doc["cols"])?;
    let entries = doc["entries"]
        .as_array()
        .ok_or_else(|| Error::InvalidInput("entries missing".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::InvalidInput("entry row is not an array".into()))?
                .iter()
                .map(|pair| {
                    let p = pair
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| Error::InvalidInput("entry is not [re, im]".into()))?;
                    let part = |i: usize| {
                        p[i].as_f64()
                            .ok_or_else(|| Error::InvalidInput("entry part is not a number".into()))
                    };
                    Ok(Complex64::new(part(0)?, part(1)?))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rows, cols, entries))
}

/// Run the orthonormality + Kac-Walton verification attached to `fuse`
/// output.  `exhaustive` checks every pair; otherwise a deterministic
/// sample of at most eight pairs is used.
pub fn verify_fuse(
    rs: &RootSystem,
    ld: &LevelData,
    ct: &CharacterTable,
    table: &FusionTable,
    cfg: &crate::config::Config,
    exhaustive: bool,
) -> Result<FuseVerification> {
    let ortho = ct.gram_residual();
    let np = ld.weights.len();
    let mut pairs: Vec<(usize, usize)> =
        (0..np).flat_map(|l| (l..np).map(move |m| (l, m))).collect();
    if !exhaustive && pairs.len() > 8 {
        let step = pairs.len() / 8;
        pairs = pairs.into_iter().step_by(step.max(1)).take(8).collect();
    }
    let mut folder = crate::fusion::AlcoveFolder::new(rs, ld, ct, cfg);
    let mut agrees = true;
    for &(l, m) in &pairs {
        let product = crate::fusion::kac_walton_product(
            rs,
            &mut folder,
            cfg,
            &ld.weights[l],
            &ld.weights[m],
        )?;
        let mut expect: Vec<(Weight, i64)> = (0..np)
            .filter(|&n| table.coeffs[l][m][n] != 0)
            .map(|n| (ld.weights[n].clone(), table.coeffs[l][m][n]))
            .collect();
        expect.sort();
        if product != expect {
            agrees = false;
        }
    }
    Ok(FuseVerification {
        orthonormality_residual: ortho,
        kac_walton_mode: if exhaustive { "exhaustive" } else { "sample" },
        kac_walton_pairs: pairs.len(),
        kac_walton_agrees: agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineType;
    use crate::config::Config;

    fn stack(name: &str, k: i64) -> (RootSystem, LevelData, CharacterTable, Config) {
        let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
        let cfg = Config::default();
        let ld = LevelData::new(&rs, k, &cfg).unwrap();
        let ct = CharacterTable::new(&rs, &ld, &cfg).unwrap();
        (rs, ld, ct, cfg)
    }

    #[test]
    fn weights_doc_round_trips() {
        for (name, k) in [("A1~1", 1), ("C2~1", 2), ("D4~2", 1)] {
            let (rs, ld, _, _) = stack(name, k);
            let doc = weights_doc(&rs, &ld);
            let text = serde_json::to_string_pretty(&doc).unwrap();
            let (ws, phases) = parse_weights_doc(&text).unwrap();
            assert_eq!(ws, ld.weights);
            let expect: Vec<Vec<Rat>> =
                ld.points.iter().map(|p| p.phases.clone()).collect();
            assert_eq!(phases, expect);
        }
    }

    #[test]
    fn a1_level_one_phase_strings() {
        let (rs, ld, _, _) = stack("A1~1", 1);
        let doc = weights_doc(&rs, &ld);
        assert_eq!(doc["phases"][0][0], "1/6");
        assert_eq!(doc["phases"][1][0], "1/3");
        assert_eq!(doc["norm_const"], 6);
        assert_eq!(doc["dual_coxeter"], 2);
    }

    #[test]
    fn fuse_doc_round_trips_both_formats() {
        let (rs, ld, ct, cfg) = stack("C2~1", 1);
        let table = FusionTable::new(&rs, &ld, &ct, &cfg).unwrap();
        let v = verify_fuse(&rs, &ld, &ct, &table, &cfg, true).unwrap();
        assert!(v.kac_walton_agrees);
        let text = serde_json::to_string_pretty(&fuse_doc(&rs, &ld, &table, &v)).unwrap();
        let (ws, entries) = parse_fuse_doc(&text).unwrap();
        assert_eq!(ws, ld.weights);
        for (l, m, n, c) in &entries {
            assert_eq!(table.coeffs[*l][*m][*n], *c);
        }
        let nonzeros = table
            .coeffs
            .iter()
            .flatten()
            .flatten()
            .filter(|&&c| c != 0)
            .count();
        assert_eq!(entries.len(), nonzeros);

        let csv = fuse_csv(&ld, &table);
        let rows = parse_fuse_csv(&csv).unwrap();
        assert_eq!(rows.len(), nonzeros);
        for (lam, mu, nu, c) in rows {
            let idx = |w: &Weight| ld.weight_index[w];
            assert_eq!(table.coeffs[idx(&lam)][idx(&mu)][idx(&nu)], c);
        }
    }

    #[test]
    fn smatrix_doc_round_trips() {
        let (rs, ld, ct, cfg) = stack("A4~2", 2);
        let s = SMatrix::new(&rs, &ld, &ct, &cfg).unwrap();
        let text =
            serde_json::to_string_pretty(&smatrix_doc(&s, &ld.weights, cfg.tol_unitarity))
                .unwrap();
        let (rows, cols, entries) = parse_smatrix_doc(&text).unwrap();
        assert_eq!(rows, ld.weights);
        assert_eq!(cols, s.columns);
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                assert_eq!(*e, s.entries[i][j]);
            }
        }
    }
}

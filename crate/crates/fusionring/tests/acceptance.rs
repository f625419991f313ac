//! Acceptance suite: one test per criterion, each printing a single
//! PASS line when every assertion inside it holds.  The shared test matrix
//! covers all three type classes at several ranks and levels.

use fusionring::affine::{AffineType, TypeClass};
use fusionring::characters::CharacterTable;
use fusionring::config::Config;
use fusionring::fusion::{
    kac_walton_product, twisted_iso_check, verlinde_trace, AlcoveFolder, FusionTable,
};
use fusionring::level::{enumerate_torus, is_regular, torus_orbit, LevelData};
use fusionring::modular::{
    check_transpose, verlinde_diagonalization_residual, SMatrix,
};
use fusionring::root_system::{RootSystem, Weight};
use std::collections::{HashMap, HashSet};

/// Every (type, level) configuration the suite runs on.
const MATRIX: &[(&str, &[i64])] = &[
    ("A1~1", &[1, 2, 3, 8]),
    ("A2~1", &[1, 2, 3]),
    ("C2~1", &[1, 2, 3]),
    ("G2~1", &[1, 2]),
    ("B3~1", &[1, 2]),
    ("A4~2", &[1, 2, 3, 5]),
    ("A6~2", &[1, 3]),
    ("A5~2", &[1, 2]),
    ("D4~2", &[1, 2]),
    ("D5~2", &[1, 2]),
    ("E6~2", &[1, 2]),
    ("D4~3", &[1, 2, 3]),
];

struct Stack {
    rs: RootSystem,
    ld: LevelData,
    ct: CharacterTable,
    cfg: Config,
}

fn stack(name: &str, k: i64) -> Stack {
    let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
    let cfg = Config::default();
    let ld = LevelData::new(&rs, k, &cfg).unwrap();
    let ct = CharacterTable::new(&rs, &ld, &cfg).unwrap();
    Stack { rs, ld, ct, cfg }
}

fn for_matrix(mut f: impl FnMut(&str, i64, &Stack)) {
    for (name, levels) in MATRIX {
        for &k in *levels {
            let s = stack(name, k);
            f(name, k, &s);
        }
    }
}

#[test]
fn criterion_1_orthonormality() {
    for_matrix(|name, k, s| {
        let g = s.ct.gram_residual();
        assert!(g < 1e-8, "{name} k={k}: Gram residual {g:.3e}");
    });
    println!("criterion 1 (character orthonormality across the matrix): PASS");
}

#[test]
fn criterion_2_integrality() {
    for_matrix(|name, k, s| {
        let table = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg)
            .unwrap_or_else(|e| panic!("{name} k={k}: {e}"));
        assert!(
            table.max_residual < 1e-6,
            "{name} k={k}: residual {:.3e}",
            table.max_residual
        );
    });
    println!("criterion 2 (coefficient integrality across the matrix): PASS");
}

#[test]
fn criterion_3_oracle_triangle() {
    for_matrix(|name, k, s| {
        let table = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
        let mut folder = AlcoveFolder::new(&s.rs, &s.ld, &s.ct, &s.cfg);
        let np = s.ld.weights.len();
        for l in 0..np {
            for m in l..np {
                // spectral row == alternating-sum row, on every nu at once
                let product = kac_walton_product(
                    &s.rs,
                    &mut folder,
                    &s.cfg,
                    &s.ld.weights[l],
                    &s.ld.weights[m],
                )
                .unwrap();
                let mut expect: Vec<(Weight, i64)> = (0..np)
                    .filter(|&n| table.coeffs[l][m][n] != 0)
                    .map(|n| (s.ld.weights[n].clone(), table.coeffs[l][m][n]))
                    .collect();
                expect.sort();
                assert_eq!(product, expect, "{name} k={k} pair ({l},{m})");

                // below the stabilization bound the classical tensor
                // multiplicity is the fusion coefficient, exactly
                let classical: HashMap<Weight, i64> = s
                    .rs
                    .tensor_decompose(
                        &s.ld.weights[l],
                        &s.ld.weights[m],
                        s.cfg.group_cap,
                    )
                    .unwrap()
                    .into_iter()
                    .collect();
                for n in 0..np {
                    let total: Weight = s.ld.weights[l]
                        .iter()
                        .zip(&s.ld.weights[m])
                        .zip(&s.ld.weights[n])
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    if s.rs.level_of(&total) <= 2 * k {
                        let cl = classical.get(&s.ld.weights[n]).copied().unwrap_or(0);
                        assert_eq!(
                            table.coeffs[l][m][n], cl,
                            "{name} k={k} triple ({l},{m},{n})"
                        );
                    }
                }
            }
        }
    });
    println!("criterion 3 (spectral == alternating-sum == classical in regime): PASS");
}

#[test]
fn criterion_4_odd_level_coincidence() {
    for (n, k) in [(2usize, 0i64), (2, 1), (2, 2), (3, 1)] {
        let report = twisted_iso_check(n, k, &Config::default()).unwrap();
        assert!(
            report.holds(),
            "n={n} k={k}: {:?}",
            report.first_difference
        );
    }
    println!("criterion 4 (twisted/untwisted ring coincidence at odd level): PASS");
}

#[test]
fn criterion_5_trace_specializations() {
    // genus one counts the alcove, across the whole matrix
    for_matrix(|name, k, s| {
        let (v, _, r) = verlinde_trace(&s.rs, &s.ld, &s.ct, 1, &[]).unwrap();
        assert!(r < 1e-6, "{name} k={k}: residual {r:.3e}");
        assert_eq!(v, s.ld.weights.len() as i64, "{name} k={k}");
    });
    // low-genus specializations on a subset with full tables
    for (name, k) in [
        ("A1~1", 3),
        ("A2~1", 2),
        ("C2~1", 2),
        ("G2~1", 1),
        ("A4~2", 3),
        ("A5~2", 1),
        ("D4~2", 1),
        ("E6~2", 1),
        ("D4~3", 2),
    ] {
        let s = stack(name, k);
        let table = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
        let np = s.ld.weights.len();
        for l in 0..np {
            for m in 0..np {
                let (v, _, r) = verlinde_trace(
                    &s.rs,
                    &s.ld,
                    &s.ct,
                    0,
                    &[s.ld.weights[l].clone(), s.ld.weights[m].clone()],
                )
                .unwrap();
                assert!(r < 1e-6);
                assert_eq!(v, i64::from(table.dual[l] == m), "{name} k={k} ({l},{m})");
                for n in 0..np {
                    let (v3, _, r3) = verlinde_trace(
                        &s.rs,
                        &s.ld,
                        &s.ct,
                        0,
                        &[
                            s.ld.weights[l].clone(),
                            s.ld.weights[m].clone(),
                            s.ld.weights[n].clone(),
                        ],
                    )
                    .unwrap();
                    assert!(r3 < 1e-6);
                    assert_eq!(
                        v3,
                        table.symmetric_coefficient(l, m, n),
                        "{name} k={k} ({l},{m},{n})"
                    );
                }
            }
        }
    }
    // the pinned genus-two value for the two-element ring
    let s = stack("A1~1", 1);
    let (v, _, r) = verlinde_trace(&s.rs, &s.ld, &s.ct, 2, &[]).unwrap();
    assert_eq!(v, 4);
    assert!(r < 1e-6);
    println!("criterion 5 (trace specializations at genus 0, 1, 2): PASS");
}

#[test]
fn criterion_6_modular_matrix() {
    for_matrix(|name, k, s| {
        let sm = SMatrix::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
        let u = sm.unitarity_residual();
        assert!(u < 1e-8, "{name} k={k}: unitarity {u:.3e}");
        let t = AffineType::parse(name).unwrap();
        let dev = check_transpose(t, k, &s.cfg)
            .unwrap_or_else(|e| panic!("{name} k={k}: {e}"));
        assert!(dev < 1e-8, "{name} k={k}: transpose {dev:.3e}");
        if t == s.rs.data.adjacent_type {
            let table = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
            let r = verlinde_diagonalization_residual(&s.ld, &table, &sm).unwrap();
            assert!(r < 1e-6, "{name} k={k}: diagonalization {r:.3e}");
        }
    });
    println!("criterion 6 (modular unitarity, transpose, diagonalization): PASS");
}

#[test]
fn criterion_7_structural_identities() {
    // the dual Coxeter number equals <rho, theta-check> + 1 for two ranks
    // of every infinite family and every fixed exceptional type
    let families = [
        "A1~1", "A2~1", "B3~1", "B4~1", "C2~1", "C3~1", "D4~1", "D5~1",
        "E6~1", "E7~1", "E8~1", "F4~1", "G2~1", "A4~2", "A6~2", "A5~2",
        "A7~2", "D4~2", "D5~2", "E6~2", "D4~3",
    ];
    for name in families {
        let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
        assert_eq!(
            rs.dual_coxeter(),
            rs.data.dual_coxeter,
            "{name}: pairing-derived value disagrees with the table"
        );
    }

    // exactly one evaluation point per alcove weight, everywhere; the
    // evaluation weight is strictly positive on every point
    for_matrix(|name, k, s| {
        assert_eq!(s.ld.points.len(), s.ld.weights.len(), "{name} k={k}");
        if s.rs.data.affine_type.class() == TypeClass::TwistedDual {
            assert_eq!(s.ld.coweights.len(), s.ld.weights.len(), "{name} k={k}");
        }
        assert!(
            s.ct.delta.iter().all(|&d| d > 0.0),
            "{name} k={k}: nonpositive evaluation weight"
        );
    });

    // fundamental-domain property by full enumeration of the torus group:
    // the regular points split into orbits holding exactly one evaluation
    // point each
    for (name, k) in [
        ("A1~1", 1),
        ("A1~1", 2),
        ("A1~1", 3),
        ("C2~1", 1),
        ("A4~2", 1),
        ("A4~2", 2),
    ] {
        let s = stack(name, k);
        let all = enumerate_torus(&s.rs, &s.ld, &s.cfg).unwrap();
        assert_eq!(all.len() as i64, s.ld.norm_const, "{name} k={k}");
        let sigma: HashSet<_> = s.ld.points.iter().cloned().collect();
        let mut regular = 0usize;
        for t in &all {
            if !is_regular(&s.rs, t) {
                assert!(!sigma.contains(t), "{name} k={k}: irregular point listed");
                continue;
            }
            regular += 1;
            let orbit = torus_orbit(&s.rs, t);
            let hits = orbit.iter().filter(|p| sigma.contains(*p)).count();
            assert_eq!(hits, 1, "{name} k={k}: orbit of a regular point");
        }
        assert_eq!(
            regular,
            s.ld.weights.len() * s.rs.weyl_order as usize,
            "{name} k={k}: regular point count"
        );
    }
    println!("criterion 7 (structural identities and fundamental domain): PASS");
}

#[test]
fn criterion_8_frozen_fixtures() {
    // hand-derived fixtures, frozen before the main path existed:
    // the same values are pinned in the library's own unit tests
    let s = stack("A1~1", 1);
    let t = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
    let w = s.ld.weight_index[&vec![1]];
    assert_eq!(t.coeffs[w][w], vec![1, 0]); // omega x omega = 0

    let s = stack("A1~1", 2);
    let t = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
    let w = s.ld.weight_index[&vec![1]];
    let zero2 = s.ld.weight_index[&vec![0]];
    let two = s.ld.weight_index[&vec![2]];
    assert_eq!(t.coeffs[w][w][zero2], 1); // omega x omega = 0 + 2 omega
    assert_eq!(t.coeffs[w][w][two], 1);
    assert_eq!(t.coeffs[w][w][w], 0);

    let s = stack("C2~1", 1);
    let t = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
    let w1 = s.ld.weight_index[&vec![1, 0]];
    let w2 = s.ld.weight_index[&vec![0, 1]];
    let z = s.ld.weight_index[&vec![0, 0]];
    assert_eq!(t.coeffs[w1][w1][z], 1); // omega_1 x omega_1 = 0 + omega_2
    assert_eq!(t.coeffs[w1][w1][w2], 1);
    assert_eq!(t.coeffs[w1][w1][w1], 0);
    println!("criterion 8 (hand-derived fixtures): PASS");
}

#[test]
fn criterion_9_performance() {
    let start = std::time::Instant::now();
    let s = stack("C2~1", 5);
    assert_eq!(s.ld.weights.len(), 21);
    let table = FusionTable::new(&s.rs, &s.ld, &s.ct, &s.cfg).unwrap();
    let mut folder = AlcoveFolder::new(&s.rs, &s.ld, &s.ct, &s.cfg);
    let np = s.ld.weights.len();
    for l in 0..np {
        for m in l..np {
            let product = kac_walton_product(
                &s.rs,
                &mut folder,
                &s.cfg,
                &s.ld.weights[l],
                &s.ld.weights[m],
            )
            .unwrap();
            let mut expect: Vec<(Weight, i64)> = (0..np)
                .filter(|&n| table.coeffs[l][m][n] != 0)
                .map(|n| (s.ld.weights[n].clone(), table.coeffs[l][m][n]))
                .collect();
            expect.sort();
            assert_eq!(product, expect, "pair ({l},{m})");
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "full table with exhaustive cross-check took {elapsed:?}"
    );
    println!(
        "criterion 9 (21-weight table with exhaustive cross-check in {elapsed:.2?} < 60s): PASS"
    );
}

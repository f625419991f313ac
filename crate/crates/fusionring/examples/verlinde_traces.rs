//! Higher-genus traces and their low-genus specializations.
//!
//! The genus-g trace with weight insertions is an integer.  At genus zero
//! with two insertions it is the duality pairing delta_{lambda, mu*}; with
//! three insertions it is the totally symmetric form of the fusion table;
//! at genus one with none it counts the alcove; at higher genus it grows
//! like a partition function.
//!
//! Run with: cargo run --example verlinde_traces

use fusionring::characters::CharacterTable;
use fusionring::fusion::{verlinde_trace, FusionTable};
use fusionring::level::LevelData;
use fusionring::{AffineType, Config, Result, RootSystem};

fn main() -> Result<()> {
    let cfg = Config::default();
    let rs = RootSystem::new(AffineType::parse("A1~1")?)?;
    let ld = LevelData::new(&rs, 1, &cfg)?;
    let ct = CharacterTable::new(&rs, &ld, &cfg)?;
    let table = FusionTable::new(&rs, &ld, &ct, &cfg)?;
    let np = ld.weights.len();

    println!("A1~1 at level 1 ({np} weights)\n");

    println!("genus 0, two insertions (the duality pairing):");
    for l in 0..np {
        let row: Vec<i64> = (0..np)
            .map(|m| {
                let (v, _, _) = verlinde_trace(
                    &rs,
                    &ld,
                    &ct,
                    0,
                    &[ld.weights[l].clone(), ld.weights[m].clone()],
                )
                .unwrap();
                v
            })
            .collect();
        println!("  {row:?}");
    }

    println!("\ngenus 0, three insertions equal the symmetric fusion form:");
    for l in 0..np {
        for m in 0..np {
            for n in 0..np {
                let (v, _, _) = verlinde_trace(
                    &rs,
                    &ld,
                    &ct,
                    0,
                    &[
                        ld.weights[l].clone(),
                        ld.weights[m].clone(),
                        ld.weights[n].clone(),
                    ],
                )?;
                assert_eq!(v, table.symmetric_coefficient(l, m, n));
            }
        }
    }
    println!("  verified on all {} triples", np * np * np);

    println!("\nzero-point traces by genus:");
    for g in 0..=4 {
        let (v, raw, residual) = verlinde_trace(&rs, &ld, &ct, g, &[])?;
        println!("  genus {g}: {v}  (raw {raw:.6}, residual {residual:.1e})");
    }
    let (g1, _, _) = verlinde_trace(&rs, &ld, &ct, 1, &[])?;
    assert_eq!(g1, np as i64, "genus one counts the alcove");

    println!("\nthe same genus-2 count for a larger ring, G2~1 level 2:");
    let rs2 = RootSystem::new(AffineType::parse("G2~1")?)?;
    let ld2 = LevelData::new(&rs2, 2, &cfg)?;
    let ct2 = CharacterTable::new(&rs2, &ld2, &cfg)?;
    let (v, _, residual) = verlinde_trace(&rs2, &ld2, &ct2, 2, &[])?;
    println!("  genus 2: {v}  (residual {residual:.1e})");
    Ok(())
}

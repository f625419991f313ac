//! The Kac-Walton computation, step by step.
//!
//! A fusion product can be computed without any floating point: decompose
//! the classical tensor product, then fold each constituent into the level
//! alcove with affine Weyl reflections, keeping signs and dropping wall
//! hits.  This example walks through omega_2 x omega_2 for C2~1 at level 2
//! and shows each constituent's fate, then confirms the result against the
//! spectral definition of the coefficients.
//!
//! Run with: cargo run --example kac_walton

use fusionring::characters::CharacterTable;
use fusionring::fusion::{
    alcove_fold_exact, fusion_coefficient, AlcoveFolder, FoldResult,
};
use fusionring::level::LevelData;
use fusionring::{AffineType, Config, Result, RootSystem};
use std::collections::HashMap;

fn main() -> Result<()> {
    let cfg = Config::default();
    let rs = RootSystem::new(AffineType::parse("C2~1")?)?;
    let ld = LevelData::new(&rs, 2, &cfg)?;
    let ct = CharacterTable::new(&rs, &ld, &cfg)?;

    let lam = vec![0i64, 1];
    println!("C2~1 level 2: fusing {lam:?} with {lam:?}\n");

    println!("classical tensor decomposition:");
    let tensor = rs.tensor_decompose(&lam, &lam, cfg.group_cap)?;
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut folder = AlcoveFolder::new(&rs, &ld, &ct, &cfg);
    for (xi, mult) in &tensor {
        // two independent folding paths must agree: exact affine
        // reflections, and spectral projection onto the alcove characters
        let exact = alcove_fold_exact(&rs, &ld, xi);
        let spectral = folder.fold(xi)?;
        assert_eq!(exact, spectral);
        match exact {
            FoldResult::Wall => {
                println!("  {mult} x {xi:?}  ->  wall (dropped)");
            }
            FoldResult::Interior { weight, sign } => {
                println!(
                    "  {mult} x {xi:?}  ->  {}{weight:?}",
                    if sign < 0 { "-" } else { "+" }
                );
                *acc.entry(weight).or_insert(0) += sign * mult;
            }
        }
    }

    let mut product: Vec<(Vec<i64>, i64)> =
        acc.into_iter().filter(|(_, c)| *c != 0).collect();
    product.sort();
    println!("\nfused product:");
    for (w, c) in &product {
        println!("  {c} x {w:?}");
        let spectral = fusion_coefficient(&rs, &ld, &ct, &cfg, &lam, &lam, w)?;
        assert_eq!(spectral, *c);
    }
    println!("\nevery coefficient agrees with the spectral formula");
    Ok(())
}

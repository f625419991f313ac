//! Modular matrices, unitarity, and the transpose relation.
//!
//! Every type has an adjacent type (itself, except for one twisted
//! family), and the modular matrix relates the two: it is unitary, its
//! transpose is the matrix of the adjacent type, and for self-adjacent
//! types it diagonalizes the fusion product.
//!
//! Run with: cargo run --example smatrix

use fusionring::characters::CharacterTable;
use fusionring::fusion::FusionTable;
use fusionring::level::LevelData;
use fusionring::modular::{
    check_transpose, verlinde_diagonalization_residual, SMatrix,
};
use fusionring::{AffineType, Config, Result, RootSystem};

fn main() -> Result<()> {
    let cfg = Config::default();

    // the rank-one matrix, written out
    let rs = RootSystem::new(AffineType::parse("A1~1")?)?;
    let ld = LevelData::new(&rs, 1, &cfg)?;
    let ct = CharacterTable::new(&rs, &ld, &cfg)?;
    let s = SMatrix::new(&rs, &ld, &ct, &cfg)?;
    println!("A1~1 level 1 modular matrix:");
    for row in &s.entries {
        let cells: Vec<String> =
            row.iter().map(|e| format!("{:+.4}{:+.4}i", e.re, e.im)).collect();
        println!("  [ {} ]", cells.join("  "));
    }
    println!("  unitarity residual: {:.2e}", s.unitarity_residual());
    println!("  every entry has modulus 1/sqrt(2) = {:.6}\n", 0.5f64.sqrt());

    // the transpose relation across an adjacent pair of twisted types
    for (name, k) in [("A5~2", 1), ("D4~2", 1), ("E6~2", 1), ("C2~1", 2)] {
        let t = AffineType::parse(name)?;
        let rs = RootSystem::new(t)?;
        let dev = check_transpose(t, k, &cfg)?;
        println!(
            "{name} level {k}: adjacent type {}, transpose deviation {dev:.2e}",
            rs.data.adjacent_type
        );
    }

    // diagonalization: the matrix recovers the integer fusion table
    println!();
    for (name, k) in [("A1~1", 2), ("A4~2", 2), ("D4~3", 1)] {
        let rs = RootSystem::new(AffineType::parse(name)?)?;
        let ld = LevelData::new(&rs, k, &cfg)?;
        let ct = CharacterTable::new(&rs, &ld, &cfg)?;
        let table = FusionTable::new(&rs, &ld, &ct, &cfg)?;
        let s = SMatrix::new(&rs, &ld, &ct, &cfg)?;
        let r = verlinde_diagonalization_residual(&ld, &table, &s)?;
        println!("{name} level {k}: diagonalization residual {r:.2e}");
    }
    Ok(())
}

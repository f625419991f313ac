//! Level alcoves and evaluation phases across the three type classes.
//!
//! For each sample type the program prints the weights of the level
//! alcove, the exact phases of the evaluation point attached to each
//! weight, and the order of the torus group the points live in.  The
//! dual-twisted sample also prints the dual alcove of coweights that
//! actually indexes its evaluation points.
//!
//! Run with: cargo run --example weights

use fusionring::affine::TypeClass;
use fusionring::characters::CharacterTable;
use fusionring::level::LevelData;
use fusionring::{AffineType, Config, Result, RootSystem};

fn show(name: &str, k: i64) -> Result<()> {
    let cfg = Config::default();
    let rs = RootSystem::new(AffineType::parse(name)?)?;
    let ld = LevelData::new(&rs, k, &cfg)?;
    println!(
        "{name} at level {k}: rank {}, dual Coxeter number {}, torus order {}",
        rs.rank, rs.data.dual_coxeter, ld.norm_const
    );
    for (i, w) in ld.weights.iter().enumerate() {
        let phases: Vec<String> =
            ld.points[i].phases.iter().map(|q| q.to_string()).collect();
        println!("  weight {w:?}  ->  point ({})", phases.join(", "));
    }
    if rs.data.affine_type.class() == TypeClass::TwistedDual {
        println!("  evaluation points indexed by the dual alcove:");
        for w in &ld.coweights {
            println!("    coweight {w:?}");
        }
    }
    // the characters of the alcove weights are orthonormal at these points
    let ct = CharacterTable::new(&rs, &ld, &cfg)?;
    println!("  orthonormality residual: {:.2e}\n", ct.gram_residual());
    Ok(())
}

fn main() -> Result<()> {
    show("A1~1", 2)?; // untwisted rank one
    show("C2~1", 1)?; // untwisted rank two
    show("A4~2", 3)?; // twisted, same alcove recipe as untwisted
    show("D4~2", 1)?; // twisted, evaluation points built from coweights
    show("D4~3", 2)?; // the triple twist
    Ok(())
}

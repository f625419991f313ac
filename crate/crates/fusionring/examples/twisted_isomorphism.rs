//! Two different affine types, one fusion ring.
//!
//! The ring of A_{2n}~2 at odd level 2k+1 coincides with the ring of C_n~1
//! at level k — not just abstractly: the weight lists, the evaluation
//! phases, and the full coefficient arrays are identical.  This example
//! verifies the coincidence for several (n, k) and prints the shared table
//! for the smallest nontrivial case.
//!
//! Run with: cargo run --example twisted_isomorphism

use fusionring::characters::CharacterTable;
use fusionring::fusion::{twisted_iso_check, FusionTable};
use fusionring::level::LevelData;
use fusionring::{AffineType, Config, Result, RootSystem};

fn main() -> Result<()> {
    let cfg = Config::default();
    for (n, k) in [(2usize, 0i64), (2, 1), (2, 2), (3, 1)] {
        let report = twisted_iso_check(n, k, &cfg)?;
        println!(
            "A{}~2 at level {}  ==  C{}~1 at level {}: weights {}, phases {}, tables {}",
            2 * n,
            2 * k + 1,
            n,
            k,
            report.weights_equal,
            report.phases_equal,
            report.tables_equal,
        );
        assert!(report.holds());
    }

    println!("\nthe shared ring for n=2, k=1 (A4~2 level 3 == C2~1 level 1):");
    let rs = RootSystem::new(AffineType::parse("A4~2")?)?;
    let ld = LevelData::new(&rs, 3, &cfg)?;
    let ct = CharacterTable::new(&rs, &ld, &cfg)?;
    let table = FusionTable::new(&rs, &ld, &ct, &cfg)?;
    let np = ld.weights.len();
    for l in 0..np {
        for m in l..np {
            let terms: Vec<String> = (0..np)
                .filter(|&n| table.coeffs[l][m][n] != 0)
                .map(|n| format!("{:?}", ld.weights[n]))
                .collect();
            println!(
                "  {:?} x {:?} = {}",
                ld.weights[l],
                ld.weights[m],
                terms.join(" + ")
            );
        }
    }
    Ok(())
}

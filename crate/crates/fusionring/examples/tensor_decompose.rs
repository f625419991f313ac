//! Classical tensor product decompositions of the horizontal algebra.
//!
//! The alternating-sum computation over one factor's weight system
//! produces the full decomposition with multiplicities; dimensions are
//! computed exactly and the dimension identity is verified at every call.
//!
//! Run with: cargo run --example tensor_decompose

use fusionring::{AffineType, Config, Result, RootSystem};

fn show(name: &str, lam: &[i64], mu: &[i64]) -> Result<()> {
    let rs = RootSystem::new(AffineType::parse(name)?)?;
    let cfg = Config::default();
    let dim_l = rs.dim(lam)?;
    let dim_m = rs.dim(mu)?;
    let parts = rs.tensor_decompose(lam, mu, cfg.group_cap)?;
    let terms: Vec<String> = parts
        .iter()
        .map(|(w, c)| {
            let d = rs.dim(w).unwrap();
            if *c == 1 {
                format!("{d}")
            } else {
                format!("{c}x{d}")
            }
        })
        .collect();
    println!("{name}: {dim_l} (x) {dim_m} = {}", terms.join(" + "));
    for (w, c) in &parts {
        println!("    {c} x {w:?}  (dim {})", rs.dim(w)?);
    }
    Ok(())
}

fn main() -> Result<()> {
    // rank one: 2 (x) 2 = 1 + 3
    show("A1~1", &[1], &[1])?;
    // the two conjugate triplet products of rank two type A
    show("A2~1", &[1, 0], &[0, 1])?;
    show("A2~1", &[1, 0], &[1, 0])?;
    // the defining square of C2, and of the smallest exceptional type
    show("C2~1", &[1, 0], &[1, 0])?;
    show("G2~1", &[0, 1], &[0, 1])?;
    // a product with a multiplicity bigger than one
    show("A2~1", &[1, 1], &[1, 1])?;
    Ok(())
}

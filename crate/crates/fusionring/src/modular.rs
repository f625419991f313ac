//! The modular S-matrix relating a type to its adjacent type, the node
//! identification between the two horizontal algebras, unitarity and
//! transpose checks, and Verlinde diagonalization of the fusion table.

use crate::affine::{AffineType, TypeClass};
use crate::characters::CharacterTable;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::fusion::FusionTable;
use crate::level::LevelData;
use crate::root_system::{Coweight, RootSystem};
use itertools::Itertools;
use num::complex::Complex64;

/// Node identification between the horizontal algebra of the adjacent type
/// and the coweight nodes of the source: `sigma[i]` is the node of the
/// source that the i-th node of the adjacent type maps to.  It is the
/// unique permutation carrying the adjacent Cartan matrix to the transposed
/// Cartan data of the source, and it induces the coordinate bijection from
/// the adjacent alcove onto the dual alcove.
#[derive(Debug, Clone)]
pub struct EpsilonMap {
    pub sigma: Vec<usize>,
}

impl EpsilonMap {
    /// Exhaustive search for the permutation with
    /// C_adj[i][j] = C_src[sigma(j)][sigma(i)]; errors unless exactly one
    /// permutation satisfies it.
    pub fn new(src: &RootSystem, adj: &RootSystem) -> Result<Self> {
        let n = src.rank;
        if adj.rank != n {
            return Err(Error::Inconsistency(
                "adjacent type has a different rank".into(),
            ));
        }
        let mut found: Option<Vec<usize>> = None;
        for perm in (0..n).permutations(n) {
            let ok = (0..n).all(|i| {
                (0..n).all(|j| adj.cartan[i][j] == src.cartan[perm[j]][perm[i]])
            });
            if ok {
                if found.is_some() {
                    return Err(Error::Inconsistency(
                        "node identification is not unique".into(),
                    ));
                }
                found = Some(perm);
            }
        }
        found
            .map(|sigma| EpsilonMap { sigma })
            .ok_or_else(|| Error::Inconsistency("no node identification exists".into()))
    }

    /// Carry a weight of the adjacent type to a coweight of the source.
    pub fn map_weight(&self, mu: &[i64]) -> Coweight {
        let mut w = vec![0i64; mu.len()];
        for (i, &c) in mu.iter().enumerate() {
            w[self.sigma[i]] = c;
        }
        w
    }
}

/// The modular matrix S_{lm'} = i^{|Phi+|} N^{-1/2} J_l(t_{m'}), with rows
/// indexed by the alcove of the source and columns by the alcove of the
/// adjacent type.
#[derive(Debug, Clone)]
pub struct SMatrix {
    pub source: AffineType,
    pub target: AffineType,
    pub level: i64,
    pub entries: Vec<Vec<Complex64>>,
    /// Column weights: the alcove of the adjacent type.
    pub columns: Vec<Vec<i64>>,
}

impl SMatrix {
    pub fn new(
        rs: &RootSystem,
        ld: &LevelData,
        ct: &CharacterTable,
        cfg: &Config,
    ) -> Result<Self> {
        let source = rs.data.affine_type;
        let target = rs.data.adjacent_type;
        let phase = i_power(rs.positive_roots.len());
        let scale = 1.0 / (ld.norm_const as f64).sqrt();
        let np = ld.weights.len();
        // column m' -> index of the evaluation point t_{m'}
        let (columns, point_of_col): (Vec<Vec<i64>>, Vec<usize>) =
            if rs.data.affine_type.class() == TypeClass::TwistedDual {
                let rs_adj = RootSystem::new(target)?;
                let ld_adj = LevelData::new(&rs_adj, ld.level, cfg)?;
                if source != target {
                    if rs_adj.positive_roots.len() != rs.positive_roots.len() {
                        return Err(Error::Inconsistency(
                            "adjacent types disagree on the positive root count".into(),
                        ));
                    }
                    if ld_adj.norm_const != ld.norm_const {
                        return Err(Error::Inconsistency(
                            "adjacent types disagree on the torus order".into(),
                        ));
                    }
                }
                let eps = EpsilonMap::new(rs, &rs_adj)?;
                let mut pts = Vec::with_capacity(ld_adj.weights.len());
                for mu in &ld_adj.weights {
                    let w = eps.map_weight(mu);
                    let t = ld.coweight_index.get(&w).copied().ok_or_else(|| {
                        Error::Inconsistency(format!(
                            "node identification sends {mu:?} outside the dual alcove"
                        ))
                    })?;
                    pts.push(t);
                }
                (ld_adj.weights.clone(), pts)
            } else {
                (ld.weights.clone(), (0..np).collect())
            };
        if columns.len() != np {
            return Err(Error::Inconsistency(format!(
                "modular matrix is not square: {np} rows, {} columns",
                columns.len()
            )));
        }
        let entries: Vec<Vec<Complex64>> = (0..np)
            .map(|l| {
                point_of_col
                    .iter()
                    .map(|&t| phase * ct.j_rows[l][t] * scale)
                    .collect()
            })
            .collect();
        Ok(SMatrix { source, target, level: ld.level, entries, columns })
    }

    /// max |S conj(S)^t - I|.
    pub fn unitarity_residual(&self) -> f64 {
        let n = self.entries.len();
        let mut worst = 0f64;
        for a in 0..n {
            for b in 0..n {
                let mut dot = Complex64::new(0.0, 0.0);
                for c in 0..n {
                    dot += self.entries[a][c] * self.entries[b][c].conj();
                }
                let target = Complex64::new(f64::from(a == b), 0.0);
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

fn i_power(p: usize) -> Complex64 {
    match p % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Build the modular matrices of a type and of its adjacent type
/// independently and confirm that one is the transpose of the other.
/// Returns the largest entrywise deviation.
pub fn check_transpose(t: AffineType, k: i64, cfg: &Config) -> Result<f64> {
    let rs = RootSystem::new(t)?;
    let ld = LevelData::new(&rs, k, cfg)?;
    let ct = CharacterTable::new(&rs, &ld, cfg)?;
    let s = SMatrix::new(&rs, &ld, &ct, cfg)?;
    let adj = rs.data.adjacent_type;
    let rs2 = RootSystem::new(adj)?;
    let ld2 = LevelData::new(&rs2, k, cfg)?;
    let ct2 = CharacterTable::new(&rs2, &ld2, cfg)?;
    let s2 = SMatrix::new(&rs2, &ld2, &ct2, cfg)?;
    let n = s.entries.len();
    if s2.entries.len() != n {
        return Err(Error::Inconsistency(
            "adjacent modular matrices differ in size".into(),
        ));
    }
    let mut worst = 0f64;
    let mut worst_at = (0usize, 0usize);
    for i in 0..n {
        for j in 0..n {
            let dev = (s.entries[i][j] - s2.entries[j][i]).norm();
            if dev > worst {
                worst = dev;
                worst_at = (i, j);
            }
        }
    }
    if worst > cfg.tol_unitarity {
        return Err(Error::Inconsistency(format!(
            "transpose relation fails: deviation {worst:.3e} at entry {worst_at:?} \
             ({} level {k} against {})",
            t, adj
        )));
    }
    Ok(worst)
}

/// max over all triples of |sum_tau S_{l tau} S_{m tau} conj(S_{n tau}) / S_{0 tau} - c_{lm}^n|.
/// The column set is in bijection with the evaluation points, so this holds
/// for every type class; it restates the fusion formula through S.
pub fn verlinde_diagonalization_residual(
    ld: &LevelData,
    table: &FusionTable,
    s: &SMatrix,
) -> Result<f64> {
    let np = ld.weights.len();
    let zero = ld.weight_index[&vec![0i64; ld.weights[0].len()]];
    let mut worst = 0f64;
    for l in 0..np {
        for m in 0..np {
            for n in 0..np {
                let mut acc = Complex64::new(0.0, 0.0);
                for tau in 0..np {
                    let denom = s.entries[zero][tau];
                    if denom.norm() < 1e-14 {
                        return Err(Error::Inconsistency(
                            "vanishing unit row entry in the modular matrix".into(),
                        ));
                    }
                    acc += s.entries[l][tau] * s.entries[m][tau]
                        * s.entries[n][tau].conj()
                        / denom;
                }
                let c = table.coeffs[l][m][n] as f64;
                worst = worst.max((acc - Complex64::new(c, 0.0)).norm());
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineType;

    struct Ctx {
        rs: RootSystem,
        ld: LevelData,
        ct: CharacterTable,
        cfg: Config,
    }

    fn setup(name: &str, k: i64) -> Ctx {
        let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
        let cfg = Config::default();
        let ld = LevelData::new(&rs, k, &cfg).unwrap();
        let ct = CharacterTable::new(&rs, &ld, &cfg).unwrap();
        Ctx { rs, ld, ct, cfg }
    }

    #[test]
    fn rank_one_level_one_matrix() {
        let c = setup("A1~1", 1);
        let s = SMatrix::new(&c.rs, &c.ld, &c.ct, &c.cfg).unwrap();
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        for row in &s.entries {
            for e in row {
                assert!((e.norm() - inv_sqrt2).abs() < 1e-12);
            }
        }
        assert!(s.unitarity_residual() < 1e-12);
        // symmetric for a self-adjacent type with aligned points
        assert!((s.entries[0][1] - s.entries[1][0]).norm() < 1e-12);
    }

    #[test]
    fn node_identifications_are_unique_and_pinned() {
        let pairs = [
            ("A5~2", vec![0usize, 1, 2]), // C3 against B3: aligned chains
            ("D4~2", vec![0usize, 1, 2]),
            ("E6~2", vec![3usize, 2, 1, 0]), // self-adjacent, norms reversed
            ("D4~3", vec![1usize, 0]),
        ];
        for (name, expect) in pairs {
            let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
            let adj = RootSystem::new(rs.data.adjacent_type).unwrap();
            let eps = EpsilonMap::new(&rs, &adj).unwrap();
            assert_eq!(eps.sigma, expect, "{name}");
        }
    }

    #[test]
    fn unitarity_and_transpose_across_the_type_matrix() {
        let cfg = Config::default();
        let configs = [
            ("A1~1", 3),
            ("A2~1", 2),
            ("C2~1", 2),
            ("G2~1", 2),
            ("B3~1", 1),
            ("A4~2", 3),
            ("A5~2", 1),
            ("D4~2", 1),
            ("E6~2", 1),
            ("D4~3", 2),
        ];
        for (name, kmax) in configs {
            for k in 0..=kmax {
                let c = setup(name, k);
                let s = SMatrix::new(&c.rs, &c.ld, &c.ct, &c.cfg).unwrap();
                assert!(
                    s.unitarity_residual() < 1e-8,
                    "{name} k={k}: {}",
                    s.unitarity_residual()
                );
                let dev = check_transpose(AffineType::parse(name).unwrap(), k, &cfg).unwrap();
                assert!(dev < 1e-8, "{name} k={k}: transpose dev {dev}");
            }
        }
    }

    #[test]
    fn diagonalization_recovers_the_fusion_table() {
        for (name, k) in [("A1~1", 2), ("C2~1", 1), ("A4~2", 2), ("D4~3", 1), ("E6~2", 1)] {
            let c = setup(name, k);
            let table = FusionTable::new(&c.rs, &c.ld, &c.ct, &c.cfg).unwrap();
            let s = SMatrix::new(&c.rs, &c.ld, &c.ct, &c.cfg).unwrap();
            let res = verlinde_diagonalization_residual(&c.ld, &table, &s).unwrap();
            assert!(res < 1e-6, "{name} k={k}: residual {res}");
        }
    }

    #[test]
    fn adjacent_pair_matrices_share_their_normalization() {
        let c = setup("A5~2", 1);
        let s = SMatrix::new(&c.rs, &c.ld, &c.ct, &c.cfg).unwrap();
        assert_eq!(s.target, AffineType::parse("D4~2").unwrap());
        assert_eq!(s.entries.len(), s.columns.len());
        // the i-power and torus order agree across the pair (asserted inside
        // the constructor); every entry of a unitary square matrix this
        // small is bounded by 1 and the unit row never vanishes
        assert!(s.entries.iter().flatten().all(|e| e.norm() <= 1.0 + 1e-12));
        assert!(s.entries[0].iter().all(|e| e.norm() > 1e-12));
    }
}

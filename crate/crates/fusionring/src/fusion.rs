//! The fusion ring: coefficient tables, alcove folding, the Kac-Walton
//! cross-check, Verlinde traces, and the odd-level/halved-level ring
//! isomorphism check for the A_{2n}~2 family.
//!
//! Everything here reduces to weighted spectral sums over the evaluation
//! points: c_{lm}^n = (1/N) sum_t chi_l chi_m conj(chi_n) Delta, rounded to
//! integers under a strict residual bound.  The Kac-Walton path recomputes
//! the same numbers from classical tensor product decompositions and
//! alcove folding, and the two must agree exactly.

use crate::affine::AffineType;
use crate::characters::{unity_table, CharacterTable, Kahan};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::level::LevelData;
use crate::root_system::{RootSystem, Weight};
use num::complex::Complex64;
use rayon::prelude::*;
use std::collections::HashMap;

/// Result of folding a shifted weight into the level alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoldResult {
    /// The numerator J_xi is sign times J of a unique alcove weight.
    Interior { weight: Weight, sign: i64 },
    /// J_xi vanishes identically on the evaluation points.
    Wall,
}

#[derive(Debug, Clone)]
pub struct FusionTable {
    /// coeffs[l][m][n] = c_{lm}^n, indexed by position in P_k.
    pub coeffs: Vec<Vec<Vec<i64>>>,
    /// Largest |raw - rounded| seen while building the table.
    pub max_residual: f64,
    /// Triples with negative coefficients (possible for twisted types,
    /// where non-negativity is expected but not proven; recorded, not fatal).
    pub negative_entries: Vec<(usize, usize, usize, i64)>,
    /// Index of the dual weight, per weight.
    pub dual: Vec<usize>,
}

impl FusionTable {
    /// Compute all |P_k|^3 coefficients and verify the ring axioms.
    pub fn new(
        rs: &RootSystem,
        ld: &LevelData,
        ct: &CharacterTable,
        cfg: &Config,
    ) -> Result<Self> {
        let np = ld.weights.len();
        let dual: Vec<usize> = ld
            .weights
            .iter()
            .map(|lam| {
                let d = rs.dual_weight(lam);
                ld.weight_index.get(&d).copied().ok_or_else(|| {
                    Error::Inconsistency("dual weight escapes the alcove".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        // raw sums, parallel over the (l, m) pairs of the upper triangle
        let pairs: Vec<(usize, usize)> =
            (0..np).flat_map(|l| (l..np).map(move |m| (l, m))).collect();
        let rows: Vec<((usize, usize), Vec<(i64, f64)>)> = pairs
            .par_iter()
            .map(|&(l, m)| {
                let row: Vec<(i64, f64)> = (0..np)
                    .map(|n| {
                        let mut acc = Kahan::default();
                        for t in 0..ld.points.len() {
                            acc.add(
                                ct.chi[l][t]
                                    * ct.chi[m][t]
                                    * ct.chi[n][t].conj()
                                    * ct.measure[t],
                            );
                        }
                        let raw = acc.value();
                        let rounded = raw.re.round();
                        let residual = (raw.re - rounded).abs().max(raw.im.abs());
                        (rounded as i64, residual)
                    })
                    .collect();
                ((l, m), row)
            })
            .collect();
        let mut coeffs = vec![vec![vec![0i64; np]; np]; np];
        let mut max_residual = 0f64;
        let mut negative_entries = Vec::new();
        for ((l, m), row) in rows {
            for (n, (c, residual)) in row.into_iter().enumerate() {
                if residual > cfg.tol_integrality {
                    return Err(Error::IntegralityViolation(
                        l,
                        m,
                        n,
                        format!("{}", c as f64 + residual),
                        residual,
                    ));
                }
                max_residual = max_residual.max(residual);
                if c < 0 {
                    if rs.data.affine_type.twist == 1 {
                        return Err(Error::Inconsistency(format!(
                            "negative fusion coefficient {c} at ({l},{m},{n}) in an untwisted ring"
                        )));
                    }
                    negative_entries.push((l, m, n, c));
                    if l != m {
                        negative_entries.push((m, l, n, c));
                    }
                }
                coeffs[l][m][n] = c;
                coeffs[m][l][n] = c;
            }
        }
        let table = FusionTable { coeffs, max_residual, negative_entries, dual };
        table.verify_ring_axioms(ld)?;
        Ok(table)
    }

    /// Unit row, S_3 symmetry of N_{lmn} = c_{lm}^{n*}, associativity.
    /// Commutativity holds by construction (the table is filled from the
    /// upper triangle) and is re-checked here anyway.
    pub fn verify_ring_axioms(&self, ld: &LevelData) -> Result<()> {
        let np = ld.weights.len();
        let zero = ld.weight_index[&vec![0i64; ld.weights[0].len()]];
        for m in 0..np {
            for n in 0..np {
                let expect = i64::from(m == n);
                if self.coeffs[zero][m][n] != expect {
                    return Err(Error::Inconsistency(format!(
                        "unit row violated at ({m},{n})"
                    )));
                }
            }
        }
        for l in 0..np {
            for m in 0..np {
                for n in 0..np {
                    if self.coeffs[l][m][n] != self.coeffs[m][l][n] {
                        return Err(Error::Inconsistency("commutativity violated".into()));
                    }
                    // N_{lmn} is invariant under all six permutations
                    let sym = self.symmetric_coefficient(l, m, n);
                    for (a, b, c) in
                        [(l, n, m), (m, l, n), (m, n, l), (n, l, m), (n, m, l)]
                    {
                        if self.symmetric_coefficient(a, b, c) != sym {
                            return Err(Error::Inconsistency(format!(
                                "S3 symmetry violated at ({l},{m},{n})"
                            )));
                        }
                    }
                }
            }
        }
        for l in 0..np {
            for m in 0..np {
                for n in 0..np {
                    for p in 0..np {
                        let mut lhs = 0i64;
                        let mut rhs = 0i64;
                        for s in 0..np {
                            lhs += self.coeffs[l][m][s] * self.coeffs[s][n][p];
                            rhs += self.coeffs[m][n][s] * self.coeffs[l][s][p];
                        }
                        if lhs != rhs {
                            return Err(Error::Inconsistency(format!(
                                "associativity violated at ({l},{m},{n},{p})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// N_{lmn} = c_{lm}^{n*}: the totally symmetric three-point form.
    pub fn symmetric_coefficient(&self, l: usize, m: usize, n: usize) -> i64 {
        self.coeffs[l][m][self.dual[n]]
    }
}

/// c_{lm}^n for weights given by coordinates.
pub fn fusion_coefficient(
    rs: &RootSystem,
    ld: &LevelData,
    ct: &CharacterTable,
    cfg: &Config,
    lam: &[i64],
    mu: &[i64],
    nu: &[i64],
) -> Result<i64> {
    let l = ld.index_of(rs, lam)?;
    let m = ld.index_of(rs, mu)?;
    let n = ld.index_of(rs, nu)?;
    let mut acc = Kahan::default();
    for t in 0..ld.points.len() {
        acc.add(ct.chi[l][t] * ct.chi[m][t] * ct.chi[n][t].conj() * ct.measure[t]);
    }
    let raw = acc.value();
    let rounded = raw.re.round();
    let residual = (raw.re - rounded).abs().max(raw.im.abs());
    if residual > cfg.tol_integrality {
        return Err(Error::IntegralityViolation(l, m, n, format!("{raw}"), residual));
    }
    Ok(rounded as i64)
}

/// Exact alcove fold by affine reflections: repeatedly make x = xi + rho
/// dominant with simple reflections, then reflect across the level wall
/// <x, theta-check> = k + h-check until x lands inside the alcove or on a
/// wall.  Works for every type class; the translation root is theta,
/// theta/2 or the short dominant root depending on the class.
pub fn alcove_fold_exact(rs: &RootSystem, ld: &LevelData, xi: &[i64]) -> FoldResult {
    let mut x: Weight = xi.iter().map(|c| c + 1).collect();
    let mut sign = 1i64;
    // strictly decreasing measure: distance above the wall; bounded iterations
    for _ in 0..100_000 {
        let fold = rs.fold_dominant(&x);
        if fold.on_wall {
            return FoldResult::Wall;
        }
        sign *= fold.parity;
        x = fold.weight;
        let height = rs.level_of(&x);
        if height < ld.shifted_level {
            let nu: Weight = x.iter().map(|c| c - 1).collect();
            return FoldResult::Interior { weight: nu, sign };
        }
        if height == ld.shifted_level {
            return FoldResult::Wall;
        }
        // reflect across the affine wall: x -> x - (height - (k+h')) * beta
        let excess = height - ld.shifted_level;
        for (a, b) in x.iter_mut().zip(&rs.affine_root) {
            *a -= excess * b;
        }
        sign = -sign;
    }
    unreachable!("affine fold failed to terminate");
}

/// Alcove fold through character projections: expresses J_xi in the J-basis
/// of the alcove by orthonormality.  The finite Weyl fold runs first (it is
/// exact); the spectral projection only decides weights that fold above the
/// level wall.
pub struct AlcoveFolder<'a> {
    rs: &'a RootSystem,
    ld: &'a LevelData,
    ct: &'a CharacterTable,
    cfg: &'a Config,
    unity: Vec<Complex64>,
    cache: HashMap<Weight, FoldResult>,
}

impl<'a> AlcoveFolder<'a> {
    pub fn new(
        rs: &'a RootSystem,
        ld: &'a LevelData,
        ct: &'a CharacterTable,
        cfg: &'a Config,
    ) -> Self {
        AlcoveFolder {
            rs,
            ld,
            ct,
            cfg,
            unity: unity_table(ld.phase_denom),
            cache: HashMap::new(),
        }
    }

    pub fn fold(&mut self, xi: &[i64]) -> Result<FoldResult> {
        let shifted: Weight = xi.iter().map(|c| c + 1).collect();
        let f = self.rs.fold_dominant(&shifted);
        if f.on_wall {
            return Ok(FoldResult::Wall);
        }
        let nu: Weight = f.weight.iter().map(|c| c - 1).collect();
        if self.rs.level_of(&nu) <= self.ld.level {
            // already in the alcove: the finite fold is exact
            return Ok(FoldResult::Interior { weight: nu, sign: f.parity });
        }
        if let Some(hit) = self.cache.get(&nu) {
            return Ok(apply_sign(hit.clone(), f.parity));
        }
        let decided = self.project(&f.weight)?;
        self.cache.insert(nu, decided.clone());
        Ok(apply_sign(decided, f.parity))
    }

    /// Projection p_n = (1/N) sum_t J_x(t) conj(J_n(t)) for dominant regular x.
    fn project(&self, x: &[i64]) -> Result<FoldResult> {
        let orbit = self.rs.weyl_orbit_signed(x, self.cfg.weyl_cap)?;
        let np = self.ld.points.len();
        let mut jx = Vec::with_capacity(np);
        for t in 0..np {
            let mut acc = Kahan::default();
            for (w, sign) in &orbit {
                let z = self.unity[self.ld.phase_index(t, w) as usize];
                acc.add(if *sign > 0 { z } else { -z });
            }
            jx.push(acc.value());
        }
        let mut hit: Option<(usize, i64)> = None;
        for n in 0..self.ld.weights.len() {
            let mut acc = Kahan::default();
            for t in 0..np {
                acc.add(jx[t] * self.ct.j_rows[n][t].conj());
            }
            let p = acc.value() / self.ld.norm_const as f64;
            let rounded = p.re.round();
            let residual = (p.re - rounded).abs().max(p.im.abs());
            if residual > self.cfg.tol_integrality || rounded.abs() > 1.0 {
                return Err(Error::FoldAmbiguous(
                    format!("{x:?}"),
                    format!("projection {p} onto alcove index {n}"),
                ));
            }
            if rounded != 0.0 {
                if hit.is_some() {
                    return Err(Error::FoldAmbiguous(
                        format!("{x:?}"),
                        "two nonzero projections".into(),
                    ));
                }
                hit = Some((n, rounded as i64));
            }
        }
        Ok(match hit {
            None => FoldResult::Wall,
            Some((n, s)) => {
                FoldResult::Interior { weight: self.ld.weights[n].clone(), sign: s }
            }
        })
    }
}

fn apply_sign(f: FoldResult, sign: i64) -> FoldResult {
    match f {
        FoldResult::Wall => FoldResult::Wall,
        FoldResult::Interior { weight, sign: s } => {
            FoldResult::Interior { weight, sign: s * sign }
        }
    }
}

/// Fusion product of two alcove weights by the Kac-Walton recipe: classical
/// tensor decomposition, then alcove folding of every constituent.
pub fn kac_walton_product(
    rs: &RootSystem,
    folder: &mut AlcoveFolder,
    cfg: &Config,
    lam: &[i64],
    mu: &[i64],
) -> Result<Vec<(Weight, i64)>> {
    let tensor = rs.tensor_decompose(lam, mu, cfg.group_cap)?;
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (xi, mult) in tensor {
        match folder.fold(&xi)? {
            FoldResult::Wall => {}
            FoldResult::Interior { weight, sign } => {
                *acc.entry(weight).or_insert(0) += sign * mult;
            }
        }
    }
    let mut out: Vec<(Weight, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    out.sort();
    Ok(out)
}

/// Single Kac-Walton coefficient.
pub fn kac_walton(
    rs: &RootSystem,
    folder: &mut AlcoveFolder,
    cfg: &Config,
    lam: &[i64],
    mu: &[i64],
    nu: &[i64],
) -> Result<i64> {
    let product = kac_walton_product(rs, folder, cfg, lam, mu)?;
    Ok(product
        .into_iter()
        .find(|(w, _)| w == nu)
        .map(|(_, c)| c)
        .unwrap_or(0))
}

/// Genus-g trace with insertions:
/// N^{g-1} sum over Sigma_k of prod_i chi_{lambda_i}(t) * Delta(t)^{1-g}.
/// The result must be close to a real integer; the rounded value, the raw
/// complex sum, and the rounding residual are all returned.
pub fn verlinde_trace(
    rs: &RootSystem,
    ld: &LevelData,
    ct: &CharacterTable,
    genus: i64,
    insertions: &[Weight],
) -> Result<(i64, Complex64, f64)> {
    if genus < 0 {
        return Err(Error::InvalidInput("genus must be nonnegative".into()));
    }
    let rows: Vec<usize> = insertions
        .iter()
        .map(|lam| ld.index_of(rs, lam))
        .collect::<Result<Vec<_>>>()?;
    let n = ld.norm_const as f64;
    let mut acc = Kahan::default();
    for t in 0..ld.points.len() {
        let mut term = Complex64::new(ct.delta[t].powi(1 - genus as i32), 0.0);
        for &r in &rows {
            term *= ct.chi[r][t];
        }
        acc.add(term);
    }
    let value = acc.value() * n.powi(genus as i32 - 1);
    let rounded = value.re.round();
    let residual = (value.re - rounded).abs().max(value.im.abs());
    Ok((rounded as i64, value, residual))
}

/// Report of the tensor-vs-fusion stabilization bound.
#[derive(Debug, Clone)]
pub struct Stabilization {
    /// True when <lam+mu+nu, theta-check> <= 2k, the regime where the
    /// fusion coefficient equals the classical tensor multiplicity.
    pub applies: bool,
    pub classical: i64,
    pub fusion: i64,
}

/// Compare the fusion coefficient with the classical tensor multiplicity.
/// `lam` and `mu` must lie in the alcove; `nu` may be any dominant weight
/// (its fusion coefficient is 0 when it lies outside the alcove).
pub fn stabilization_check(
    rs: &RootSystem,
    ld: &LevelData,
    ct: &CharacterTable,
    cfg: &Config,
    lam: &[i64],
    mu: &[i64],
    nu: &[i64],
) -> Result<Stabilization> {
    ld.index_of(rs, lam)?;
    ld.index_of(rs, mu)?;
    if nu.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(format!("{nu:?}")));
    }
    let total: Weight = lam
        .iter()
        .zip(mu)
        .zip(nu)
        .map(|((a, b), c)| a + b + c)
        .collect();
    let applies = rs.level_of(&total) <= 2 * ld.level;
    let classical = rs
        .tensor_decompose(lam, mu, cfg.group_cap)?
        .into_iter()
        .find(|(w, _)| w == nu)
        .map(|(_, c)| c)
        .unwrap_or(0);
    let fusion = if ld.weight_index.contains_key(nu) {
        fusion_coefficient(rs, ld, ct, cfg, lam, mu, nu)?
    } else {
        0
    };
    if applies && classical != fusion {
        return Err(Error::Inconsistency(format!(
            "stabilization bound holds for ({lam:?},{mu:?},{nu:?}) but classical {classical} != fusion {fusion}"
        )));
    }
    Ok(Stabilization { applies, classical, fusion })
}

/// Everything the ring isomorphism check compares.
#[derive(Debug, Clone)]
pub struct IsoReport {
    pub weights_equal: bool,
    pub phases_equal: bool,
    pub tables_equal: bool,
    pub first_difference: Option<String>,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.weights_equal && self.phases_equal && self.tables_equal
    }
}

/// The odd-level isomorphism: the ring of A_{2n}~2 at level 2k+1 is the
/// ring of C_n~1 at level k, with literally equal weight coordinate lists,
/// evaluation phases, and coefficient arrays.
pub fn twisted_iso_check(n: usize, k: i64, cfg: &Config) -> Result<IsoReport> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "the twisted family A_{2n}~2 needs n >= 2".into(),
        ));
    }
    let twisted = AffineType::new(crate::affine::Family::A, 2 * n as u32, 2)?;
    let untwisted = AffineType::new(crate::affine::Family::C, n as u32, 1)?;
    let rs_t = RootSystem::new(twisted)?;
    let rs_u = RootSystem::new(untwisted)?;
    let ld_t = LevelData::new(&rs_t, 2 * k + 1, cfg)?;
    let ld_u = LevelData::new(&rs_u, k, cfg)?;
    let weights_equal = ld_t.weights == ld_u.weights;
    let phases_equal = ld_t.points == ld_u.points;
    let ct_t = CharacterTable::new(&rs_t, &ld_t, cfg)?;
    let ct_u = CharacterTable::new(&rs_u, &ld_u, cfg)?;
    let tab_t = FusionTable::new(&rs_t, &ld_t, &ct_t, cfg)?;
    let tab_u = FusionTable::new(&rs_u, &ld_u, &ct_u, cfg)?;
    let tables_equal = tab_t.coeffs == tab_u.coeffs;
    let first_difference = if !weights_equal {
        Some("weight lists differ".into())
    } else if !phases_equal {
        Some("evaluation phases differ".into())
    } else if !tables_equal {
        let mut diff = None;
        'outer: for l in 0..ld_t.weights.len() {
            for m in 0..ld_t.weights.len() {
                for nn in 0..ld_t.weights.len() {
                    if tab_t.coeffs[l][m][nn] != tab_u.coeffs[l][m][nn] {
                        diff = Some(format!(
                            "first differing triple ({l},{m},{nn}): {} vs {}",
                            tab_t.coeffs[l][m][nn], tab_u.coeffs[l][m][nn]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        diff
    } else {
        None
    };
    Ok(IsoReport { weights_equal, phases_equal, tables_equal, first_difference })
}

//! Level truncation: the alcove P_k, its dual box, the evaluation points
//! Sigma_k with exact rational phases, and the finite torus group T_k.
//!
//! A torus point is stored as the covector of phases it assigns to the
//! fundamental weights: `phases[j] = q(omega_j)` as an exact rational in
//! [0,1).  Characters evaluate a weight x (integer omega-coords) to
//! `exp(2*pi*i * sum_j x_j phases[j])`.  For speed every point also stores
//! integer numerators over one shared denominator, so a phase evaluation
//! is a dot product mod that denominator indexing a table of roots of
//! unity.
//!
//! The lattice M that defines T_k = (1/(k+h-check)) M* / P-integral
//! covectors depends on the type class:
//! - untwisted and A_{2n}~2: M is spanned by the images d_i*alpha_i of the
//!   simple coroots under the form (for A_{2n}~2 the last d_i is 1/2, and
//!   the halved column is still integral);
//! - remaining twisted types: M is the root lattice itself.
//!
//! |T_k| = (k+h-check)^n * |det(M basis)| = norm_const, the normalization
//! constant of every spectral sum in this crate.

use crate::affine::TypeClass;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::root_system::{invert_rational, Coweight, RootSystem, Weight};
use num::rational::Ratio;
use num::Zero;
use std::collections::HashMap;

type Rat = Ratio<i64>;

/// A point of the torus, as the covector of phases of the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    /// Exact phases q(omega_j), normalized into [0,1).
    pub phases: Vec<Rat>,
}

impl TorusPoint {
    fn normalize(mut phases: Vec<Rat>) -> Self {
        for p in &mut phases {
            let f = p.floor();
            *p -= f;
        }
        TorusPoint { phases }
    }

    /// q(x) mod 1 for an integral weight x.
    pub fn eval(&self, x: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for (c, p) in x.iter().zip(&self.phases) {
            acc += *p * *c;
        }
        acc - acc.floor()
    }
}

/// Level-truncated data for one affine type at one level.
#[derive(Debug, Clone)]
pub struct LevelData {
    pub level: i64,
    /// k + h-check, the denominator of all phases.
    pub shifted_level: i64,
    /// The alcove P_k, sorted lexicographically.
    pub weights: Vec<Weight>,
    pub weight_index: HashMap<Weight, usize>,
    /// The dual alcove (dominant coweights w with <theta, w> <= k); used by
    /// the dual-twisted classes, where it indexes Sigma_k.  Empty otherwise.
    pub coweights: Vec<Coweight>,
    pub coweight_index: HashMap<Coweight, usize>,
    /// Evaluation points, one per row of P_k (self classes) or per entry of
    /// the dual alcove (dual-twisted classes).  Either way there are
    /// exactly |P_k| of them (checked).
    pub points: Vec<TorusPoint>,
    /// Basis of the lattice M as columns, in omega-coords.
    pub m_basis: Vec<Vec<i64>>,
    /// |T_k| = (k+h-check)^rank * |det m_basis|.
    pub norm_const: i64,
    /// Shared denominator of all phases across `points`.
    pub phase_denom: i64,
    /// Integer phase numerators: nums[t][j] = phases[t][j] * phase_denom.
    pub nums: Vec<Vec<i64>>,
}

impl LevelData {
    pub fn new(rs: &RootSystem, level: i64, cfg: &Config) -> Result<Self> {
        if level < 0 {
            return Err(Error::InvalidInput(format!(
                "level must be a nonnegative integer, got {level}"
            )));
        }
        let n = rs.rank;
        let shifted = level + rs.data.dual_coxeter;
        let weights = enumerate_box(&rs.theta_check_alpha, level);
        if weights.len() as i64 > cfg.group_cap {
            return Err(Error::GroupCapExceeded {
                order: weights.len() as i64,
                cap: cfg.group_cap,
            });
        }
        let weight_index: HashMap<Weight, usize> =
            weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

        let m_basis = m_basis(rs)?;
        let det = {
            let cols: Vec<Vec<Rat>> = (0..n)
                .map(|i| (0..n).map(|j| Rat::from_integer(m_basis[j][i])).collect())
                .collect();
            // rows of `cols` are the rows of the column matrix transposed;
            // |det| is transpose-invariant
            crate::root_system::determinant_rational(&cols)?
        };
        if !det.is_integer() || det.is_zero() {
            return Err(Error::Inconsistency("M basis determinant".into()));
        }
        let mut norm_const: i64 = det.to_integer().abs();
        for _ in 0..n {
            norm_const = norm_const
                .checked_mul(shifted)
                .ok_or_else(|| Error::GroupCapExceeded { order: i64::MAX, cap: i64::MAX })?;
        }

        // Sigma_k points
        let (coweights, points): (Vec<Coweight>, Vec<TorusPoint>) = match rs.data.affine_type.class()
        {
            TypeClass::Untwisted | TypeClass::TwistedA2n => {
                let pts = weights
                    .iter()
                    .map(|lam| {
                        let shifted_wt: Weight = lam.iter().map(|c| c + 1).collect();
                        let phases: Vec<Rat> = (0..n)
                            .map(|j| {
                                let mut acc = Rat::zero();
                                for a in 0..n {
                                    acc += rs.gram_omega[j][a] * shifted_wt[a];
                                }
                                acc / shifted
                            })
                            .collect();
                        TorusPoint::normalize(phases)
                    })
                    .collect();
                (Vec::new(), pts)
            }
            TypeClass::TwistedDual => {
                let cws = enumerate_box(&rs.theta().alpha, level);
                if cws.len() != weights.len() {
                    return Err(Error::Inconsistency(format!(
                        "|dual alcove| = {} but |P_k| = {}",
                        cws.len(),
                        weights.len()
                    )));
                }
                let pts = cws
                    .iter()
                    .map(|w| {
                        let shifted_cw: Coweight = w.iter().map(|c| c + 1).collect();
                        // simple-coroot coords of rho-check + w: m = C^{-T} (omega-check coords)
                        let phases: Vec<Rat> = (0..n)
                            .map(|j| {
                                let mut acc = Rat::zero();
                                for a in 0..n {
                                    acc += rs.cartan_inv[a][j] * shifted_cw[a];
                                }
                                acc / shifted
                            })
                            .collect();
                        TorusPoint::normalize(phases)
                    })
                    .collect();
                (cws, pts)
            }
        };
        let coweight_index: HashMap<Coweight, usize> =
            coweights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

        // every evaluation point must be regular (no root phase integral)
        for (i, t) in points.iter().enumerate() {
            if !is_regular(rs, t) {
                return Err(Error::Inconsistency(format!(
                    "evaluation point {i} is stabilized by a Weyl reflection"
                )));
            }
        }

        // shared denominator and integer numerators
        let mut phase_denom: i64 = 1;
        for t in &points {
            for p in &t.phases {
                phase_denom = num::integer::lcm(phase_denom, *p.denom());
            }
        }
        let nums: Vec<Vec<i64>> = points
            .iter()
            .map(|t| {
                t.phases
                    .iter()
                    .map(|p| (*p * phase_denom).to_integer())
                    .collect()
            })
            .collect();

        Ok(LevelData {
            level,
            shifted_level: shifted,
            weights,
            weight_index,
            coweights,
            coweight_index,
            points,
            m_basis,
            norm_const,
            phase_denom,
            nums,
        })
    }

    /// Index of a weight in P_k, or an error naming the offender.
    pub fn index_of(&self, rs: &RootSystem, lam: &[i64]) -> Result<usize> {
        if lam.len() != rs.rank {
            return Err(Error::LengthMismatch(format!(
                "weight has {} coordinates, rank is {}",
                lam.len(),
                rs.rank
            )));
        }
        if lam.iter().any(|&c| c < 0) {
            return Err(Error::NotDominant(format!("{lam:?}")));
        }
        self.weight_index
            .get(lam)
            .copied()
            .ok_or_else(|| Error::NotInLevel(format!("{lam:?}"), self.level))
    }

    /// Fast phase evaluation: index into a `phase_denom`-th roots-of-unity
    /// table for the phase of point `t` at integral weight x.
    pub fn phase_index(&self, t: usize, x: &[i64]) -> i64 {
        let nums = &self.nums[t];
        let mut acc: i64 = 0;
        for (c, m) in x.iter().zip(nums) {
            acc = (acc + c * m).rem_euclid(self.phase_denom);
        }
        acc
    }
}

/// All dominant integer vectors with sum_i bound_i * x_i <= budget,
/// lexicographically sorted.  Every bound must be >= 1, so the box is finite.
fn enumerate_box(bounds: &[i64], budget: i64) -> Vec<Vec<i64>> {
    assert!(bounds.iter().all(|&b| b >= 1), "level form must be positive");
    let mut out = Vec::new();
    let mut cur = vec![0i64; bounds.len()];
    fn rec(bounds: &[i64], budget: i64, pos: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == bounds.len() {
            out.push(cur.clone());
            return;
        }
        let mut c = 0;
        while c * bounds[pos] <= budget {
            cur[pos] = c;
            rec(bounds, budget - c * bounds[pos], pos + 1, cur, out);
            c += 1;
        }
        cur[pos] = 0;
    }
    rec(bounds, budget, 0, &mut cur, &mut out);
    out.sort();
    out
}

/// Basis of M in omega-coords (columns).
fn m_basis(rs: &RootSystem) -> Result<Vec<Vec<i64>>> {
    let n = rs.rank;
    match rs.data.affine_type.class() {
        TypeClass::Untwisted | TypeClass::TwistedA2n => {
            // columns d_i * C[:,i] with d_i = 2/|alpha_i|^2
            let mut cols: Vec<Vec<i64>> = Vec::with_capacity(n);
            for i in 0..n {
                let d = Rat::from_integer(2) / rs.norms[i];
                let mut col = Vec::with_capacity(n);
                for a in 0..n {
                    let entry = d * rs.cartan[a][i];
                    if !entry.is_integer() {
                        return Err(Error::Inconsistency(format!(
                            "lattice M column {i} not integral"
                        )));
                    }
                    col.push(entry.to_integer());
                }
                cols.push(col);
            }
            Ok(transpose_cols(cols))
        }
        TypeClass::TwistedDual => {
            // the root lattice: columns are the simple roots
            let cols: Vec<Vec<i64>> =
                (0..n).map(|i| (0..n).map(|a| rs.cartan[a][i]).collect()).collect();
            Ok(transpose_cols(cols))
        }
    }
}

/// Store a list of columns as a row-major matrix whose column j is cols[j].
fn transpose_cols(cols: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let n = cols.len();
    (0..n).map(|a| (0..n).map(|j| cols[j][a]).collect()).collect()
}

/// A point is regular when no root evaluates to an integer phase under it.
pub fn is_regular(rs: &RootSystem, t: &TorusPoint) -> bool {
    rs.positive_roots.iter().all(|r| !t.eval(&r.omega).is_zero())
}

/// The full torus group T_k, |T_k| = norm_const points.
pub fn enumerate_torus(rs: &RootSystem, ld: &LevelData, cfg: &Config) -> Result<Vec<TorusPoint>> {
    if ld.norm_const > cfg.group_cap {
        return Err(Error::GroupCapExceeded { order: ld.norm_const, cap: cfg.group_cap });
    }
    let n = rs.rank;
    // A = (k + h-check) * transpose(m_basis); T_k = A^{-1} Z^n / Z^n
    let a: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| ld.shifted_level * ld.m_basis[j][i]).collect())
        .collect();
    let h = hermite_lower(&a);
    let a_rat: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|&c| Rat::from_integer(c)).collect())
        .collect();
    let (a_inv, _) = invert_rational(&a_rat)?;
    let mut reps: Vec<Vec<i64>> = vec![vec![0; n]];
    for (i, hrow) in h.iter().enumerate() {
        let d = hrow[i];
        let mut next = Vec::with_capacity(reps.len() * d as usize);
        for r in reps {
            for x in 0..d {
                let mut r2 = r.clone();
                r2[i] = x;
                next.push(r2);
            }
        }
        reps = next;
    }
    if reps.len() as i64 != ld.norm_const {
        return Err(Error::Inconsistency(format!(
            "torus representative count {} differs from norm_const {}",
            reps.len(),
            ld.norm_const
        )));
    }
    let points = reps
        .into_iter()
        .map(|v| {
            let phases: Vec<Rat> = (0..n)
                .map(|i| {
                    let mut acc = Rat::zero();
                    for j in 0..n {
                        acc += a_inv[i][j] * v[j];
                    }
                    acc
                })
                .collect();
            TorusPoint::normalize(phases)
        })
        .collect();
    Ok(points)
}

/// W-orbit of a torus point under the covector action of the simple
/// reflections; used to partition T_k into orbits.
pub fn torus_orbit(rs: &RootSystem, t: &TorusPoint) -> Vec<TorusPoint> {
    let n = rs.rank;
    let simple_omegas: Vec<Vec<i64>> = (0..n).map(|i| rs.simple_root_omega(i)).collect();
    let mut seen: Vec<TorusPoint> = vec![t.clone()];
    let mut queue = vec![t.clone()];
    while let Some(q) = queue.pop() {
        for (i, alpha) in simple_omegas.iter().enumerate() {
            // only phase i moves: q_i -> q_i - q(alpha_i)
            let root_phase = q.eval(alpha);
            let mut phases = q.phases.clone();
            phases[i] -= root_phase;
            let q2 = TorusPoint::normalize(phases);
            if !seen.contains(&q2) {
                seen.push(q2.clone());
                queue.push(q2);
            }
        }
    }
    seen
}

/// Lower-triangular Hermite form of a nonsingular integer matrix by column
/// operations (the column lattice is preserved); diagonal made positive.
fn hermite_lower(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut m: Vec<Vec<i64>> = a.to_vec();
    // column ops: m[r][c] entries; eliminate above-diagonal entries row by row
    for i in 0..n {
        // make m[i][j] = 0 for j > i using gcd steps on columns i and j
        for j in (i + 1)..n {
            while m[i][j] != 0 {
                let (p, q) = (m[i][i], m[i][j]);
                if p == 0 {
                    for r in 0..n {
                        m[r].swap(i, j);
                    }
                    continue;
                }
                let f = q / p;
                for r in 0..n {
                    let v = m[r][i];
                    m[r][j] -= f * v;
                }
                if m[i][j] != 0 {
                    for r in 0..n {
                        m[r].swap(i, j);
                    }
                }
            }
        }
        if m[i][i] < 0 {
            for r in 0..n {
                m[r][i] = -m[r][i];
            }
        }
    }
    m
}

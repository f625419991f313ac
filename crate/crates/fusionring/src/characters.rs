//! Weyl numerators, characters and the weight function Delta on the
//! evaluation points.
//!
//! For a torus point t and dominant weight lambda, the numerator is
//! J_lambda(t) = sum over the Weyl group of det(w) e^{2 pi i q_t(w(lambda+rho))}
//! and the character is chi_lambda = J_lambda / J_0.  Delta = |J_0|^2, also
//! computed independently as the product of (2 - 2 cos(2 pi q_t(alpha)))
//! over positive roots alpha; the two paths must agree to high precision.
//!
//! All spectral sums in the crate are of the shape
//!     (1/norm_const) * sum over Sigma_k of (...) * Delta(t),
//! which makes the characters an orthonormal family (the Gram matrix of
//! the chi rows is the identity).

use crate::config::Config;
use crate::error::{Error, Result};
use crate::level::LevelData;
use crate::root_system::{RootSystem, Weight};
use num::complex::Complex64;
use rayon::prelude::*;

/// Compensated (Kahan) accumulator for complex sums with many terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kahan {
    sum: Complex64,
    carry: Complex64,
}

impl Kahan {
    pub fn add(&mut self, v: Complex64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> Complex64 {
        self.sum
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    /// j_rows[l][t] = J_{weights[l]}(points[t]).
    pub j_rows: Vec<Vec<Complex64>>,
    /// chi[l][t] = j_rows[l][t] / j_rows[0][t].
    pub chi: Vec<Vec<Complex64>>,
    /// delta[t] = |J_0(t)|^2.
    pub delta: Vec<f64>,
    /// Spectral weight delta[t]/norm_const, the measure of every sum.
    pub measure: Vec<f64>,
    /// Max disagreement between |J_0|^2 and the root-product form of Delta.
    pub delta_residual: f64,
}

impl CharacterTable {
    pub fn new(rs: &RootSystem, ld: &LevelData, cfg: &Config) -> Result<Self> {
        let npts = ld.points.len();
        let unity = unity_table(ld.phase_denom);
        // J rows for all weights of P_k, in parallel
        let j_rows: Vec<Vec<Complex64>> = ld
            .weights
            .par_iter()
            .map(|lam| j_row(rs, ld, &unity, lam, cfg))
            .collect::<Result<Vec<_>>>()?;
        let j0 = &j_rows[0]; // weights[0] is the zero weight (lex-least)
        let delta: Vec<f64> = j0.iter().map(|z| z.norm_sqr()).collect();
        // independent product-formula path for Delta
        let mut delta_residual = 0f64;
        for (t, point) in ld.points.iter().enumerate() {
            let mut prod = 1f64;
            for root in &rs.positive_roots {
                let ph = point.eval(&root.omega);
                let angle =
                    2.0 * std::f64::consts::PI * (*ph.numer() as f64) / (*ph.denom() as f64);
                prod *= 2.0 - 2.0 * angle.cos();
            }
            let diff = (prod - delta[t]).abs() / prod.max(1.0);
            delta_residual = delta_residual.max(diff);
            if prod <= 0.0 || delta[t] <= 0.0 {
                return Err(Error::Inconsistency(format!(
                    "Delta not positive at evaluation point {t}"
                )));
            }
        }
        if delta_residual > cfg.tol_path_agreement {
            return Err(Error::Inconsistency(format!(
                "Delta paths disagree by {delta_residual:.3e}"
            )));
        }
        let chi: Vec<Vec<Complex64>> = j_rows
            .iter()
            .map(|row| (0..npts).map(|t| row[t] / j0[t]).collect())
            .collect();
        let measure: Vec<f64> =
            delta.iter().map(|d| d / ld.norm_const as f64).collect();
        Ok(CharacterTable { j_rows, chi, delta, measure, delta_residual })
    }

    /// (chi_a, chi_b) = (1/N) sum_t chi_a conj(chi_b) Delta.
    pub fn inner_product(&self, a: usize, b: usize) -> Complex64 {
        let mut acc = Kahan::default();
        for t in 0..self.measure.len() {
            acc.add(self.chi[a][t] * self.chi[b][t].conj() * self.measure[t]);
        }
        acc.value()
    }

    /// Max-norm deviation of the character Gram matrix from the identity.
    pub fn gram_residual(&self) -> f64 {
        let n = self.chi.len();
        let mut worst = 0f64;
        for a in 0..n {
            for b in a..n {
                let g = self.inner_product(a, b);
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((g - target).norm());
            }
        }
        worst
    }
}

/// e^{2 pi i m / d} for m in 0..d.
pub fn unity_table(d: i64) -> Vec<Complex64> {
    (0..d)
        .map(|m| {
            let angle = 2.0 * std::f64::consts::PI * m as f64 / d as f64;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect()
}

/// One row of Weyl numerators: J_lambda at every evaluation point.
pub fn j_row(
    rs: &RootSystem,
    ld: &LevelData,
    unity: &[Complex64],
    lam: &[i64],
    cfg: &Config,
) -> Result<Vec<Complex64>> {
    let shifted: Weight = lam.iter().map(|c| c + 1).collect();
    let orbit = rs.weyl_orbit_signed(&shifted, cfg.weyl_cap)?;
    let mut out = Vec::with_capacity(ld.points.len());
    for t in 0..ld.points.len() {
        let mut acc = Kahan::default();
        for (w, sign) in &orbit {
            let idx = ld.phase_index(t, w) as usize;
            let z = unity[idx];
            acc.add(if *sign > 0 { z } else { -z });
        }
        out.push(acc.value());
    }
    Ok(out)
}

/// Character by direct weight-multiplicity sum; independent of the Weyl
/// numerator path, and usable when the Weyl group is too large to
/// enumerate but the weight system is small.
pub fn chi_via_weights(
    rs: &RootSystem,
    ld: &LevelData,
    lam: &[i64],
    cfg: &Config,
) -> Result<Vec<Complex64>> {
    let ws = rs.weight_system(lam, cfg.group_cap)?;
    let unity = unity_table(ld.phase_denom);
    let mut out = Vec::with_capacity(ld.points.len());
    for t in 0..ld.points.len() {
        let mut acc = Kahan::default();
        for (mu, mult) in &ws.weights {
            let idx = ld.phase_index(t, mu) as usize;
            acc.add(unity[idx] * *mult as f64);
        }
        out.push(acc.value());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineType;

    fn setup(name: &str, k: i64) -> (RootSystem, LevelData, CharacterTable) {
        let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
        let cfg = Config::default();
        let ld = LevelData::new(&rs, k, &cfg).unwrap();
        let ct = CharacterTable::new(&rs, &ld, &cfg).unwrap();
        (rs, ld, ct)
    }

    #[test]
    fn a1_level_one_numerators_and_characters() {
        let (_, _, ct) = setup("A1~1", 1);
        // J_0(t_0) = 2i sin(pi/3) = i sqrt(3)
        let j00 = ct.j_rows[0][0];
        assert!((j00 - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);
        // chi_omega = 2 cos(2 pi q) -> 1 at q=1/6, -1 at q=1/3
        assert!((ct.chi[1][0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((ct.chi[1][1] - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!(ct.delta.iter().all(|d| (d - 3.0).abs() < 1e-12));
    }

    #[test]
    fn a1_level_two_characters() {
        let (_, _, ct) = setup("A1~1", 2);
        // points q = 1/8, 1/4, 3/8; chi_omega = 2cos(2 pi q) = sqrt2, 0, -sqrt2
        let expect = [2f64.sqrt(), 0.0, -(2f64.sqrt())];
        for (t, e) in expect.iter().enumerate() {
            assert!((ct.chi[1][t] - Complex64::new(*e, 0.0)).norm() < 1e-12);
        }
        assert!(ct.delta.iter().zip([2.0, 4.0, 2.0]).all(|(a, b)| (a - b).abs() < 1e-12));
    }

    #[test]
    fn characters_are_orthonormal_on_the_test_cases() {
        for (name, k) in [
            ("A1~1", 3),
            ("A2~1", 2),
            ("C2~1", 2),
            ("G2~1", 1),
            ("A4~2", 2),
            ("A5~2", 1),
            ("D4~2", 1),
            ("D4~3", 1),
            ("E6~2", 1),
        ] {
            let (_, _, ct) = setup(name, k);
            let g = ct.gram_residual();
            assert!(g < 1e-8, "{name} k={k}: Gram residual {g:.3e}");
            assert!(ct.delta_residual < 1e-9, "{name} k={k}: Delta paths");
        }
    }

    #[test]
    fn weight_sum_path_agrees_with_weyl_quotient() {
        for (name, k) in [("A2~1", 2), ("C2~1", 2), ("A4~2", 3), ("D4~2", 1)] {
            let rs = RootSystem::new(AffineType::parse(name).unwrap()).unwrap();
            let cfg = Config::default();
            let ld = LevelData::new(&rs, k, &cfg).unwrap();
            let ct = CharacterTable::new(&rs, &ld, &cfg).unwrap();
            for (l, lam) in ld.weights.iter().enumerate() {
                let direct = chi_via_weights(&rs, &ld, lam, &cfg).unwrap();
                for t in 0..ld.points.len() {
                    assert!(
                        (direct[t] - ct.chi[l][t]).norm() < 1e-9,
                        "{name} k={k} weight {lam:?} point {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn dual_weight_conjugates_the_character() {
        for (name, k) in [("A2~1", 2), ("C2~1", 1), ("A4~2", 2), ("D4~2", 1)] {
            let (rs, ld, ct) = setup(name, k);
            for (l, lam) in ld.weights.iter().enumerate() {
                let dual = rs.dual_weight(lam);
                let ld_idx = ld.weight_index[&dual];
                for t in 0..ld.points.len() {
                    assert!(
                        (ct.chi[ld_idx][t] - ct.chi[l][t].conj()).norm() < 1e-9,
                        "{name} k={k}: conj(chi) vs chi of the dual weight"
                    );
                }
            }
        }
    }
}

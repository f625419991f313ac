//! Numeric tolerances and enumeration caps.
//!
//! Every floating-point comparison in the crate goes through a named field
//! here rather than an inline literal, so a single override propagates to all
//! checks consistently.

/// Tolerances and caps used throughout the library.
#[derive(Debug, Clone)]
pub struct Config {
    /// Max-norm deviation allowed in the character Gram matrix vs identity.
    pub tol_orthonormality: f64,
    /// Allowed disagreement between two evaluation paths of the same number
    /// (character via Weyl sum vs via weight multiplicities, Delta via the
    /// product formula vs |J_0|^2).
    pub tol_path_agreement: f64,
    /// Residual above which a near-integer quantity (fusion coefficient,
    /// Verlinde trace, fold projection) is rejected instead of rounded.
    pub tol_integrality: f64,
    /// Max-norm residual allowed in S-matrix unitarity and transpose checks.
    pub tol_unitarity: f64,
    /// Hard cap on Weyl group enumeration (number of elements).
    pub weyl_cap: u64,
    /// Hard cap on full torus-group T_k enumeration (number of points).
    pub group_cap: i64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            tol_orthonormality: 1e-8,
            tol_path_agreement: 1e-9,
            tol_integrality: 1e-6,
            tol_unitarity: 1e-8,
            weyl_cap: 10_000_000,
            group_cap: 1_000_000,
        }
    }
}

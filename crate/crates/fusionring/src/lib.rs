//! Fusion rings of affine Kac-Moody types.
//!
//! For an affine type `X_N~r` (untwisted or twisted) and a nonnegative
//! integer level `k`, this crate builds the fusion ring: the free abelian
//! group on the level-truncated dominant weights `P_k`, with the product
//! determined by evaluating Weyl characters at a finite set of torus points
//! and integrating against an explicit weight.  The structure constants are
//! nonnegative integers for untwisted types, and the construction
//! cross-checks itself three ways at every step:
//!
//! * the evaluated characters are verified orthonormal ([`characters`]),
//! * every coefficient is recomputed through classical tensor-product
//!   decompositions plus alcove folding and must agree exactly ([`fusion`]),
//! * the modular matrix diagonalizes the table ([`modular`]).
//!
//! # Layout
//!
//! * [`affine`] — the classification: type parsing, marks, comarks, dual
//!   Coxeter numbers, the horizontal (finite) type of each affine type.
//! * [`root_system`] — Cartan matrices, roots, Weyl group orbits and folds,
//!   dimensions, weight systems, tensor product decompositions.
//! * [`level`] — the level alcove `P_k`, the evaluation points, and the
//!   finite torus group they live in.
//! * [`characters`] — numerator sums `J`, characters, and the evaluation
//!   weight, with an independent cross-check of the two computation paths.
//! * [`fusion`] — coefficient tables, alcove folding (spectral and exact),
//!   the Kac-Walton computation, higher-genus traces, the stabilization
//!   bound, and the odd-level ring isomorphism for `A_{2n}~2`.
//! * [`modular`] — the modular matrix relating a type to its adjacent
//!   type, unitarity, transpose, and diagonalization checks.
//! * [`report`] — JSON/CSV serialization with round-trip parsers.
//! * [`config`] / [`error`] — tolerances, enumeration caps, error taxonomy.
//!
//! # Quick start
//!
//! ```
//! use fusionring::{AffineType, Config, RootSystem};
//! use fusionring::level::LevelData;
//! use fusionring::characters::CharacterTable;
//! use fusionring::fusion::FusionTable;
//!
//! let cfg = Config::default();
//! let rs = RootSystem::new(AffineType::parse("A1~1")?)?;
//! let ld = LevelData::new(&rs, 2, &cfg)?;
//! let ct = CharacterTable::new(&rs, &ld, &cfg)?;
//! let table = FusionTable::new(&rs, &ld, &ct, &cfg)?;
//! // omega x omega = 0 + 2 omega at level 2
//! let w = ld.weight_index[&vec![1]];
//! assert_eq!(table.coeffs[w][w][ld.weight_index[&vec![0]]], 1);
//! assert_eq!(table.coeffs[w][w][ld.weight_index[&vec![2]]], 1);
//! # Ok::<(), fusionring::Error>(())
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a dedicated example under `examples/`:
//!
//! * `weights` — alcoves and evaluation phases across type classes
//! * `fusion_table` — a full table with its verification summary
//! * `kac_walton` — tensor decompositions folded into the alcove, step by step
//! * `verlinde_traces` — genus 0/1/2 traces and their specializations
//! * `smatrix` — modular matrices, unitarity, and the transpose relation
//! * `twisted_isomorphism` — the odd-level coincidence of two different rings
//! * `tensor_decompose` — classical tensor products with dimension checks
//!
//! Run one with `cargo run --example weights`.
//!
//! The `fusionring` binary exposes the same operations as a CLI with JSON
//! or CSV output; see the repository README for the command reference.

pub mod affine;
pub mod characters;
pub mod config;
pub mod error;
pub mod fusion;
pub mod level;
pub mod modular;
pub mod report;
pub mod root_system;

pub use affine::{AffineType, Family, TypeClass};
pub use config::Config;
pub use error::{Error, Result};
pub use root_system::{RootSystem, Weight};

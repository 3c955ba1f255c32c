//! Exact invariants of invariant Hermitian connections on flag varieties.
//!
//! This crate computes, in exact rational arithmetic, the Lie-theoretic
//! quantities that govern Hermitian Yang-Mills (HYM) and deformed
//! Hermitian Yang-Mills (dHYM) instantons on generalized flag varieties
//! `X_P = G/P`:
//!
//! * root systems for every simple type, generated from Cartan matrices
//!   ([`root_system`]);
//! * flag varieties, Kähler classes and line bundles, with eigenvalues,
//!   contractions, volumes, degrees and slopes ([`flag`]);
//! * Lagrangian phases as exact angles (a winding integer plus a
//!   Gaussian-rational ray) with decidable equality mod 2π ([`phase`]);
//! * central charges and exact charge comparisons ([`charge`]);
//! * Whitney sums with the classification of their diagonal connections
//!   (HYM / dHYM / both / neither), level-set enumeration over the Picard
//!   lattice and `h⁰(End E)` counts ([`bundle`]);
//! * a floating-point cross-check of the eigenvalue formula via
//!   finite-difference Hessians of explicit big-cell potentials
//!   ([`bigcell`]);
//! * the pinned reference computations behind the `reproduce-paper`
//!   command ([`checks`]).
//!
//! Simple roots are numbered in the Bourbaki convention throughout.
//!
//! ```
//! use std::sync::Arc;
//! use dhym::flag::{FlagVariety, KahlerClass, LineBundle};
//! use dhym::root_system::{LieFamily, RootSystem};
//!
//! let rs = Arc::new(RootSystem::build(LieFamily::A, 2).unwrap());
//! let fv = Arc::new(FlagVariety::full_flag(rs));
//! let kc = KahlerClass::from_integers(&fv, &[2, 2]).unwrap();
//! assert_eq!(kc.volume().to_string(), "8");
//!
//! let line = LineBundle::new(&fv, vec![2, 6]).unwrap();
//! let phase = kc.line_phase(&line).unwrap();
//! assert_eq!(phase, dhym::phase::ExactPhase::pi());
//! ```

pub mod bigcell;
pub mod bundle;
pub mod charge;
pub mod checks;
pub mod error;
pub mod flag;
pub mod phase;
pub mod rational;
pub mod root_system;

pub use error::Error;
pub use rational::Rational;

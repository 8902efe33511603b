//! Isotropy indices and rank sets of maximal isotropic submodules.
//!
//! A submodule `H ⊆ L` is isotropic under a skew-symmetric bilinear map
//! `φ: L × L → V` when `φ` vanishes on `H × H`. This crate computes the set
//! `H(φ)` of ranks of maximal isotropic submodules and the isotropy index
//! `h(φ) = max H(φ)` over ℤ, ℚ and small finite fields, exactly.
//!
//! Three layers:
//! - [`exactalg`]: exact scalars, matrices, row reduction, tensors;
//! - [`skewmap`]: Gram-tensor maps, isotropy tests, brute-force enumeration,
//!   rank-set sum/product laws and the Betti-number bounds;
//! - [`manifolds`]: model manifolds (spheres, surfaces, tori, ℝP³, nilmanifolds)
//!   closed under connected sum and product, evaluated structurally or by
//!   compiling their cup product to an explicit map.
//!
//! [`cli`] drives the `isoindex` binary.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod manifolds;
pub mod skewmap;

pub use error::{Error, Result};
pub use exactalg::{Matrix, RingSpec, Scalar};
pub use manifolds::{Atom, ManifoldExpr};
pub use skewmap::{IsotropyReport, RankSet, SkewBilinearMap, Subspace};

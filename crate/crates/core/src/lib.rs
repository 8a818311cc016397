//! Exact verification of Rota-Baxter projections on Hopf module algebras.
//!
//! The core is generic over a coefficient ring implementing
//! [`scalars::Scalar`]; the aliases below fix the three shipped rings.

pub mod freemod;
pub mod hopf;
pub mod instances;
pub mod module;
pub mod parse;
pub mod rb;
pub mod report;
pub mod scalars;
pub mod shuffle;
pub mod verify;
pub mod yd;

pub use freemod::{Element, GroupElt, GroupSpec, KeyContext, Word};
pub use scalars::{CycloRes, LaurentPoly, Rational, Scalar, ScalarMode};

/// Elements with coefficients in `ℚ`.
pub type RationalElement<K> = Element<K, Rational>;
/// Elements with coefficients in `ℚ[q, q⁻¹]`.
pub type LaurentElement<K> = Element<K, LaurentPoly>;
/// Elements with coefficients in `ℚ[q]/Φ_l(q)`.
pub type CycloElement<K> = Element<K, CycloRes>;

pub type QuantumShuffle = shuffle::ShuffleAlgebra<LaurentPoly>;
pub type RootOfUnityShuffle = shuffle::ShuffleAlgebra<CycloRes>;
pub type QuantumBosonization = shuffle::Bosonization<LaurentPoly>;

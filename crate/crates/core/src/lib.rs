//! Exact computational algebra for Weyl groups of types A and B: signed
//! permutations, parabolic Hecke modules with their Kazhdan-Lusztig bases,
//! Specht vectors over tabloids, and a change-of-basis harness that checks
//! unitriangularity of the Specht-to-KL transition matrix across a space of
//! normalization conventions.
//!
//! Everything is exact: Laurent polynomials over arbitrary-precision integers,
//! ranks over the rationals. No floating point anywhere.

pub mod caps;
pub mod cob;
pub mod error;
pub mod heckemod;
pub mod laurent;
pub mod shapes;
pub mod specht;
pub mod verify;
pub mod weyl;

pub use cob::{
    a_matrix, check_unitriangular, discover_conventions, embed, AMatrix, AVariant, CertResult,
    ConventionProfile, DiscoveryReport, Leading, Orientation, SignMode,
};
pub use error::{Error, Result};
pub use heckemod::{KLSide, KLTable, ModuleVector, ParabolicContext};
pub use laurent::LaurentPoly;
pub use shapes::{Composition, MapVariant, Tableau, Tabloid};
pub use specht::{c_matrix, specht_rank, specht_vector, CMatrix, TabloidCombo};
pub use verify::{run_all, run_suite, CheckReport, CheckResult, SuiteOptions, SUITES};
pub use weyl::{Family, GroupTable, SignedPerm};

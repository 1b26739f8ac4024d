//! Exact computation of plethysm coefficients `p^λ_{ν,μ}` and of the
//! decompositions of (twisted, signed) Foulkes modules, by three
//! independent routes:
//!
//! * power sums and Murnaghan–Nakayama characters ([`symfunc`]),
//! * explicit monomial substitution (the brute-force oracle in [`symfunc`]),
//! * ranks of semistandard homomorphism images ([`hom`]).
//!
//! The [`relations`] module checks known and conjectured identities between
//! the coefficients on bounded parameter grids.
//!
//! Numeric code is generic over an exact integer [`Scalar`]; the aliases
//! below fix the default instantiation.

pub mod error;
pub mod hom;
pub mod limits;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod relations;
pub mod scalar;
pub mod symfunc;
pub mod tableau;

pub use error::{Error, Result};
pub use hom::BasisKind;
pub use limits::Limits;
pub use partition::{partitions, Composition, Partition};
pub use perm::{Perm, SignedPermutationSum};
pub use scalar::Scalar;
pub use tableau::{enumerate_semistandard, LabellingTableau, Tableau};

/// Default exact integer type.
pub type Integer = num_bigint::BigInt;
/// Default exact rational type.
pub type Rational = num_rational::BigRational;

pub type SchurVector = symfunc::SchurVec<Integer>;
pub type PowerSumVector = symfunc::PowerSumVec<Integer>;
pub type MultivariatePoly = symfunc::MultivariatePoly<Integer>;
pub type Engine = symfunc::SymmetricFunctions<Integer>;

/// Homomorphism images and module elements have small coefficients; `i64` suffices.
pub type HomImage = hom::HomImage<i64>;
pub type ModuleElement = hom::ModuleElement<i64>;

/// Version string recorded alongside cached results.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

//! The ring of symmetric functions: characters, basis changes and plethysm.

pub mod character;
pub mod plethysm;
pub mod poly;
pub mod vector;

pub use character::{centralizer_order, specht_dimension, CharacterTable};
pub use plethysm::SymmetricFunctions;
pub use poly::MultivariatePoly;
pub use vector::{PowerSumVec, SchurVec};

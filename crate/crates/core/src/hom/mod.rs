//! Semistandard homomorphisms into the Foulkes and signed Foulkes modules,
//! and composition multiplicities computed as ranks of their images.

pub mod projection;
pub mod rank;
pub mod theta;

pub use projection::{
    coefficient_of, project, project_foulkes, project_signed, representative, BasisKind, Blocks, HomImage,
    OrientedTabloid, SetPartitionClass,
};
pub use rank::{decompose_via_rank, image_rank, multiplicity_via_rank, semistandard_images};
pub use theta::{coefficient_by_formula, column_antisymmetrize, theta_on_generator, theta_on_generator_of_type, ModuleElement};

//! Constructions behind the row-insertion and top-row theorems, and
//! executable checks of the theorems, the coefficient identities that
//! drive their proofs, older relations and open conjectures.

pub mod coeff;
pub mod conjecture;
pub mod construct;
pub mod eval;
pub mod inequality;
pub mod report;

pub use coeff::{
    verify_coeff_relation_thm2, verify_coeff_relation_thm2_with, verify_coeff_relation_thm3, verify_coeff_relations_thm2,
    verify_coeff_relations_thm3, ROW_INSERT_ID, TOP_ROW_ID,
};
pub use conjecture::{scan_conjecture, scan_conjecture_filtered, Conjecture};
pub use construct::{
    build_row_insert, build_top_row, coset_family, count_full_prefix_digits, insert_part, row_insert_shape, theorem_q,
    top_row_shape, CosetFamily, CosetKind,
};
pub use eval::{Evaluator, Route};
pub use inequality::{verify_inequality, Grid, Relation};
pub use report::{Failure, Outcome, RelationReport, Status};

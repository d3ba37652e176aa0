//! Reflection-symmetric line complexes and the real-zero criterion.

mod almost;
mod catalog;
mod classify;
mod involution;
mod split;

pub use almost::{almost_symmetric_audit, AlmostSymmetricReport};
pub use catalog::{catalog_tree, exp_ladder_tree, trig_ladder_tree, CatalogVariant};
pub use classify::{
    all_zeros_real, check_assumptions, classify_zero_set, real_singularities, zero_census,
    AssumptionsReport, SingularityKind, ZeroCensus, ZeroSetClass,
};
pub use involution::{check_symmetry, find_involution, Involution, SymmetryReport};
pub use split::{merge_split_label, split_real_label, SideAssignment};

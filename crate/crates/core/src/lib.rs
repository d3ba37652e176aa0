//! Line complexes of Speiser graphs, their reflection symmetry, and the
//! numerical side: solving `w'' + P w = 0` along paths and probing asymptotics.

pub mod base;
pub mod error;
pub mod extend;
pub mod graph;
pub mod iso;
pub mod odeint;
pub mod sectors;
pub mod symmetry;
pub mod tree;

pub use base::{format_complex, BasePoint, BasePointSet, ExtendedComplex, LabelId, LabelValue};
pub use error::{LineComplexError, OdeError, SectorError, SymmetryError, TreeFileError};
pub use extend::{extend_tree, skeleton_tree};
pub use graph::{
    build_graph, validate_axioms, zero_faces, AxiomReport, Check, EndDescriptor, Face, FaceKind,
    GraphInput, GraphItem, GraphParts, GraphVertex, SpeiserGraph, Witness,
};
pub use iso::{is_isomorphic, is_isomorphic_with};
pub use odeint::{
    hermite, hermite_potential, integrate, real_zeros, relative_wronskian_drift,
    schwarzian_residual, solution_basis, wronskian_drift, BasisPoint, InitialData, OdeSolution,
    RealPolynomial, RealZeros, SchwarzianReport, SolutionBasis, Stencil,
};
pub use sectors::{
    asymptotic_value, chordal_distance, cross_check, sector_report, stokes_directions, CrossCheck,
    Mobius, RayOutcome, RayProbe, SectorReport,
};
pub use symmetry::{
    all_zeros_real, almost_symmetric_audit, catalog_tree, check_assumptions, check_symmetry,
    classify_zero_set, exp_ladder_tree, find_involution, merge_split_label, real_singularities,
    split_real_label, trig_ladder_tree, zero_census, AlmostSymmetricReport, AssumptionsReport,
    CatalogVariant, Involution, SideAssignment, SingularityKind, SymmetryReport, ZeroCensus,
    ZeroSetClass,
};
pub use tree::{
    infer_degree, logarithmic_ends, EndSummary, Parity, SpeiserTree, TreeEdge, TreeEnd, TreeFace,
    TreeInvolution, TreeItem, TreeParts, TreeVertex,
};

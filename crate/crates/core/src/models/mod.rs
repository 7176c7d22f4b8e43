//! Worked example families: Virasoro vacuum and highest-weight modules, and
//! affine vertex algebras through their Kirillov-Kostant Poisson structure.

mod affine;
mod virasoro;

pub use affine::{
    graded_dims_jet_vs_pbw, integrable_closure_check, kirillov_kostant, ClosureCheck, GradedDimRow, GradedDims, jet_monomials,
    LieAlgebraData,
};
pub use virasoro::{
    c2_image, c2_image_of, gram_matrix, lisse_verdict, minimal_central_charge, partitions, singular_levels, vacuum_basis,
    JetDiagnostic, LisseReport, ModuleKind, Partition, SingularLevel, VirasoroModule, VirasoroParams, NON_REDUCED_CAVEAT,
};

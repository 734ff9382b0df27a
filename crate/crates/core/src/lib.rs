//! Exact verification engine for the Clifford-algebra images of the `E_n`
//! spin representations.

pub mod bott;
pub mod clifford;
pub mod closure;
pub mod delta;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod roots;
pub mod spin;

pub use bott::{
    bott_algebra, e3_type, expected_dim, expected_rank, max_compact, CompactFamily,
    CompactTypeDescriptor, DivisionRing, MatrixAlgebraDescriptor,
};
pub use clifford::{AmbientSignature, Blade, Multivector};
pub use closure::{
    blade_closure, general_closure, lemma_containment_check, ClosureBasis, GeneralClosureBasis,
    LemmaReport,
};
pub use delta::{delta_closed, delta_identities, delta_sum, lower_bound_dim, DeltaIdentities};
pub use error::{Error, Result};
pub use lie::{
    classify, killing_form, rank_estimate, split_check, ClassificationResult, ClassifyOptions,
    RankEstimate, SplitOutcome, StructureConstants,
};
pub use linalg::{EchelonBasis, IntMatrix, RationalMatrix};
pub use report::{
    algebra_table, verify, Check, Status, Verdict, VerificationReport, VerifyOptions,
};
pub use roots::{positive_roots, theorem_b_check, RootSet};
pub use spin::{en_adjacency, spin_generators, verify_relations, EnDiagram, RelationReport};

//! Exact computation on finite permutation groups: stabilizer chains,
//! fixed-point spectra and their divisibility theorems, the fixed-point
//! moment sequence, and structural classification (sharpness, transitivity,
//! Frobenius kernels, primitivity, Bochert's bound).

pub mod classify;
pub mod corpus;
pub mod datafile;
pub mod engine;
pub mod error;
pub mod families;
pub mod field;
pub mod lattice;
pub mod perm;
pub mod spectrum;

/// Arbitrary-precision non-negative integer for orders, indexes and products.
pub type BigCount = num_bigint::BigUint;

pub use classify::{
    bochert_check, classify_report, frobenius_analysis, is_primitive, is_sharply_k_transitive,
    rank, transitivity_degree, BochertReport, ClassificationReport, FrobeniusReport, Primitivity,
};
pub use corpus::{default_corpus, CorpusEntry};
pub use datafile::GeneratorData;
pub use engine::{
    build_engine, closure_enumerate, GroupEngine, OrbitPartition, DEFAULT_ELEMENT_CAP,
};
pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField};
pub use lattice::{SubgroupLattice, DEFAULT_LATTICE_CAP};
pub use perm::{parse_cycles, OrderKind, Permutation};
pub use spectrum::{
    blichfeldt_check, blichfeldt_product, fixed_point_spectrum, maillet_check, maillet_spectrum,
    moment_direct, moment_recursive, moments_direct, moments_recursive, psi_identity_check,
    DivisibilityReport, Filter, MomentValue, Spectrum,
};

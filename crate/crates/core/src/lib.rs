//! Exact-arithmetic topological invariants and Kodaira dimension
//! classifiers for Lefschetz fibrations and topological Lefschetz pencils.
//!
//! Everything is computed over exact rationals — there is no floating point
//! anywhere in the crate — and every integer path is overflow-checked. The
//! main entry points:
//!
//! - [`invariants`]: `chi`, `sigma`, `K^2 = 2*chi + 3*sigma`, the
//!   holomorphic Euler characteristic `(chi + sigma)/4`, plurigenus growth
//!   and the canonical-class dimension classifier;
//! - [`hyperelliptic`]: the closed-form signature of hyperelliptic
//!   fibrations over the torus and the positivity of their canonical square;
//! - [`classifier`]: the dimension table for fibrations with base genus at
//!   least one, subadditivity, and the numeric obstructions that settle
//!   parts of the exceptional `(g > 2, 1, n >= 1)` range;
//! - [`pencil`]: the combinatorial dimension of topological Lefschetz
//!   pencils, shipped in two conventions for the singular-point relation
//!   (see the module docs for why two);
//! - [`enumerate`]: exhaustive desk-scale enumeration of admissible
//!   hyperelliptic data with the property suite re-verified per record;
//! - [`verify`]: per-record classification and cross-presentation
//!   consistency checks over parsed datasets.

pub mod classifier;
pub mod enumerate;
pub mod hyperelliptic;
pub mod invariants;
pub mod kodaira;
pub mod pencil;
pub mod rational;
pub mod verify;

pub use classifier::{
    classify_fibration, conjecture_obstructions, elliptic_kappa, enriques_class_kappa,
    fiber_sum_kappa_bound, kappa_lefschetz, subadditivity_holds, torus_bundle_kappa,
    ClassifierError, EllipticDescriptor, ObstructionReport, TripleData,
};
pub use enumerate::{
    candidate_count, enumerate_hyperelliptic, enumerate_hyperelliptic_with, EnumerationError,
    EnumerationParams, EnumerationRecord, EnumerationReport, DEFAULT_CANDIDATE_BOUND,
};
pub use hyperelliptic::{
    endo_signature, hyperelliptic_k_squared, prop_he_verdict, FibrationData, FibrationFlags,
    HyperellipticError,
};
pub use invariants::{
    compute_invariants, euler_characteristic, kodaira_from_canonical, plurigenus_general_type,
    signature_bound_gap, surface_kappa, xiao_slope_gap, InvariantError, ManifoldInvariants,
};
pub use kodaira::{ExtendedKappa, KodairaDim, KodairaVerdict, Provenance};
pub use pencil::{
    blow_up_euler_identity, canonical_dot_h, fibration_to_pencil_genus, kappa0_pencil_constraints,
    kappa_pencil, pencil_consistency, pencil_genus, singular_fiber_count, ConventionMode,
    Kappa0Violation, Moded, PencilData, PencilError,
};
pub use rational::Rational;
pub use verify::{
    classify_input, invariants_input, verify_dataset, RecordKind, RecordOutcome, RecordPayload,
    VerificationReport, VerifyInput,
};

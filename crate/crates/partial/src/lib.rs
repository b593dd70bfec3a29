//! Partial and twisted partial actions of finite-dimensional Hopf algebras,
//! with exhaustive verification of their axioms.

pub mod action;
pub mod coaction;
pub mod dictionary;
pub mod induced;
pub mod models;
pub mod symmetric;
pub mod twist;

pub use action::{
    classify_cocycle, cocycle_law_check, normalization_check, trivial_cocycle_check, twisting_check, verify_twisted_partial,
    Classification, CocycleKind, PartialAction, TwistedPartialAction,
};
pub use coaction::{pairing_action, restrict_coaction, RestrictedCoaction};
pub use dictionary::GroupTwistedPartialAction;
pub use induced::{corner_algebra, induce_partial, GlobalTwistedAction, InducedAction};
pub use models::{functions_model, partial_swap, torus_model, translation_action, FunctionsModel, TorusModel};
pub use symmetric::{absorption_checks, f1_values, f2_values, pair_coalgebra, verify_symmetric, SymmetricReport};
pub use twist::{check_smash_shape, cocycle_twist_smash, cocycle_twist_smash_unchecked};

use hp_algebra::ConvolutionError;
use hp_constructors::ConstructorError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PartialError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("element is not a central idempotent")]
    NotCentralIdempotent,
    #[error("global action violates {law} at {witness:?}")]
    GlobalLawViolation { law: String, witness: Vec<String> },
    #[error("action violates {law} at {witness:?}")]
    ActionLawViolation { law: String, witness: Vec<String> },
    #[error("not a smash product: {0}")]
    NotSmashShape(String),
    #[error("group cocycle is not a normalized 2-cocycle")]
    CocycleNotNormalized,
    #[error("acting Hopf algebra is not the group algebra")]
    NotGroupAlgebra,
    #[error("1_{element} is not central")]
    NotCentral { element: String },
    #[error("w({element}, {element}⁻¹) is not invertible in its ideal")]
    NotInvertible { element: String },
    #[error(transparent)]
    Constructor(#[from] ConstructorError),
    #[error(transparent)]
    Convolution(#[from] ConvolutionError),
}

//! Gauge equivalence of symmetric twisted partial actions on one algebra A:
//! maps `u, v: H → A` relating `(·, ω)` to `(•, σ)`, the isomorphism
//! `A#_ω H ≅ A#_σ H` they induce, and the way back from such an isomorphism.

pub mod iso;
pub mod pair;

pub use iso::{extract_gauge, gauge_isomorphism, gauge_map, left_linear_check};
pub use pair::{character_gauge, identity_gauge, verify_gauge, verify_target, GaugePair};

use hp_crossed::CrossedError;
use hp_partial::PartialError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GaugeError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a unital algebra map: {check} fails at {witness:?}")]
    NotAlgebraMap { check: String, witness: Vec<String> },
    #[error("not left A-linear at {witness:?}")]
    NotALinear { witness: Vec<String> },
    #[error("not right H-colinear at {witness:?}")]
    NotColinear { witness: Vec<String> },
    #[error("the map is not invertible")]
    NotInvertible,
    #[error("λ({0}) is not invertible")]
    ZeroCharacterValue(usize),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
    #[error(transparent)]
    Partial(#[from] PartialError),
}

//! Partially cleft extensions `A = B^{coH} ⊂ B`: the cleaving maps of a
//! crossed product, the cleft axioms, and the way back to a symmetric
//! twisted partial action with `B ≅ A#H`.

pub mod coinv;
pub mod data;
pub mod reconstruct;
pub mod verify;

pub use coinv::Coinvariants;
pub use data::{build_cleft_maps, cleaving_checks, CleftData};
pub use reconstruct::{cleft_isomorphism, reconstruct_action, reconstructed_isomorphism, Reconstruction};
pub use verify::{gamma_prime_normalized_check, normalize_gamma_prime, product_expansions, verify_partially_cleft, CleftReport};

use hp_crossed::CrossedError;
use hp_partial::PartialError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CleftError {
    #[error("the twisted partial action has no inverse cocycle")]
    NotSymmetric,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("coinvariants are not a unital subalgebra")]
    CoinvariantsNotSubalgebra,
    #[error("basis does not span the coinvariants")]
    BasisMismatch,
    #[error("{map} leaves the coinvariants at {witness:?}")]
    ImageNotInCoinvariants { map: String, witness: Vec<String> },
    #[error(transparent)]
    Crossed(#[from] CrossedError),
    #[error(transparent)]
    Partial(#[from] PartialError),
}

//! Concrete Hopf algebras: group algebras, truncated tori, smash and
//! cosemidirect products over a permutation group, Hopf pairings, and the
//! finite-group utilities they are built from.

pub mod builders;
pub mod cocycle;
pub mod group;
pub mod pairing;

pub use builders::{
    circle_group_algebra, cosemidirect_product, group_algebra, permutation_action, smash_product, torus_coaction,
    trivial_action, truncated_torus, GroupCoaction, ModuleAlgebraAction, TorusIndex,
};
pub use cocycle::{CocycleSpec, GroupCocycleTable};
pub use group::{is_permutation_embedding, FiniteGroup, GroupSpec, GroupSubset};
pub use pairing::{hopf_pairing, pairing_checks, smash_cosemidirect_pairing_table, torus_pairing_table, HopfPairing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructorError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unknown group preset {0:?}")]
    UnknownPreset(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid cocycle table: {0}")]
    InvalidCocycle(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("carrier Hopf algebra is not cocommutative")]
    NotCocommutative,
    #[error("not a module algebra: {law} fails at {witness:?}")]
    NotModuleAlgebra { law: String, witness: Vec<String> },
    #[error("not a comodule coalgebra: {law} fails at {witness:?}")]
    NotComoduleCoalgebra { law: String, witness: Vec<String> },
    #[error("pairing law {law} fails at {witness:?}")]
    PairingLawViolation { law: String, witness: Vec<String> },
}

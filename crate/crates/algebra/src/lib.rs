//! Finite-dimensional algebras, coalgebras and Hopf algebras given by
//! structure constants over cyclotomic scalars, plus the convolution algebra
//! Hom(C, A) and the exhaustive check driver used by every verifier.

pub mod algebra;
pub mod coalgebra;
pub mod convolution;
pub mod hopf;
pub mod linmap;
pub mod report;

pub use algebra::{tensor_labels, tensor_vec, StructuredAlgebra};
pub use coalgebra::{CoalgebraData, LegTable, Legs};
pub use convolution::{
    centrality_check, convolution_unit, convolve, idempotent_check, inverse_in_ideal, ConvolutionElement,
    ConvolutionError, Values,
};
pub use hopf::{dual_hopf, dual_label, iterated_comult, relabel, tensor_hopf, validate_hopf, HopfAlgebraData, ValidationReport};
pub use linmap::LinMap;
pub use report::{all_pass, check_tuples, find, run_check, run_check_items, set_full_witnesses, CheckResult, Status, Tally};

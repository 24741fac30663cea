//! Numerical geometry of two-dimensional normed spaces.
//!
//! Norms are described by [`NormSpec`]. On top of the norm the crate offers
//! orthogonality tests, supremum estimators for Birkhoff-type geometric
//! constants, and a suite of checks that compares the estimates against
//! known inequalities.

pub mod constants;
pub mod error;
pub mod grammar;
pub mod norm;
pub mod orthogonality;
pub mod random;
pub mod search;
pub mod vector;
pub mod verification;

pub use constants::{
    estimate, estimate_atb, estimate_br, estimate_classic, estimate_d_inf, estimate_dtb, estimate_f, estimate_skewness,
    modulus_of_convexity, BoundSide, ConstantEstimate, ConstantKind, SearchOpts, TGrid, Witness,
};
pub use error::{Error, Result};
pub use grammar::{parse_norm_spec, parse_relation, parse_vector};
pub use norm::{validate_norm, NormReport, NormSpec, Subdifferential, UnitVector};
pub use orthogonality::{
    birkhoff_mates, check_relation, is_birkhoff, is_isosceles, is_roberts, is_skew_isosceles, min_over_line,
    radon_defect, symmetric_pair, LineMin, MateCone, OrthoPair, Relation,
};
pub use vector::Vector2;
pub use verification::{
    builtin_specs, check_atb_propositions, check_dtb_propositions, check_radon_results, run_battery, run_lemma_suite,
    BoundReport, PairWitness, Status, Suites, Verifier,
};

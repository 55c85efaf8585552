//! Exact Tristram-Levine signature invariants of links.
//!
//! Everything here works from an integer Seifert matrix together with a
//! declared number of link components. All arithmetic is exact: integers and
//! rationals are arbitrary precision, evaluation points on the unit circle
//! are Gaussian rationals, and polynomial roots on the circle are isolated
//! with Sturm sequences.
//!
//! The pipeline is:
//!
//! * [`alexander`]: `det(tS - S^T)` and its `(t-1)`-multiplicity,
//! * [`circleroots`]: unit-circle roots of that polynomial and the arcs between them,
//! * [`hermitian`]: exact inertia of `(1-z)S + (1-z̄)S^T` and of the restricted form,
//! * [`analysis`]: the signature profile, the limit `σ¹` at `z = 1`, and the
//!   comparison of `σ¹` with the signature of the linking matrix.

pub mod alexander;
pub mod analysis;
pub mod circleroots;
mod error;
pub mod exactnum;
pub mod fixtures;
pub mod hermitian;
pub mod linkfile;
pub mod matrix;
pub mod seifert;

pub use alexander::{alexander_poly, hypothesis_holds, AlexanderPolynomial};
pub use analysis::{
    check_theorem, gl_bound_check, hodge_aggregates, sigma_one, signature_profile, ArcValue,
    HodgeAggregates, Hypothesis, SignatureProfile, TheoremReport, Verdict,
};
pub use circleroots::{arcs, rational_point_in_arc, unit_circle_roots, CircleArc, CircleRootSet};
pub use error::{Error, Result};
pub use exactnum::{
    isolate_real_roots, poly_gcd, poly_reverse, sturm_count, GaussianRational, IntPolynomial,
    Rational, RationalPolynomial,
};
pub use hermitian::{
    kernel_basis, levine_tristram_matrix, monodromy, restricted_form, restricted_signature,
    signature, signature_oracle, HermitianMatrix, InertiaTriple, RestrictedForm,
};
pub use linkfile::{parse_link_file, LinkFile};
pub use matrix::Matrix;
pub use seifert::{
    linking_matrix, small_linking_matrix, LinkingMatrix, LinkingNumbers, SeifertMatrix,
    SmallLinkingMatrix,
};

pub use analysis::signature_at;
pub use num_bigint;

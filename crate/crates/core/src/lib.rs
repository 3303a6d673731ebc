//! Exact Hankel-polynomial toolkit.
//!
//! Everything is built on top of a small exact-arithmetic layer ([`field`])
//! and dense polynomials ([`poly`]). The [`hankel`] module computes Hankel
//! minors and Hankel polynomials, either naively or through the
//! Jacobi-Joachimsthal three-term recursion with full degenerate-case
//! handling. On top of that sit polynomial interpolation ([`interp`]),
//! correction of corrupted value tables ([`correct`]), rational interpolation
//! for every degree split ([`rational`]) and resultant machinery working from
//! either coefficients or evaluation samples ([`resultant`]).
//!
//! No floating point appears anywhere: all branching is on exact vanishing of
//! determinants, which rounding would destroy.

pub mod field;
pub mod poly;

mod linalg;

pub mod correct;
pub mod hankel;
pub mod interp;
pub mod rational;
pub mod resultant;

pub use field::{
    is_prime, scalar_arith, scalar_parse, ArithError, ArithOp, FieldError, FieldSpec,
    ParseScalarError, Scalar,
};
pub use poly::Polynomial;

pub use correct::{
    correct_table, degree_scan, locator_from_tau, CorrectError, CorrectionReport,
    CorrectionStatus, DegreeScan, DegreeSpec, HankelClass, LadderEntry, LocatorError,
};
pub use hankel::{
    hankel_minor_naive, hankel_poly_naive, hankel_sequence_jj, row_functional,
    GeneratorSequence, HankelError, HankelPolynomial,
};
pub use interp::{
    interpolate_hankel, interpolate_lagrange, interpolate_sigma_recursion, nodes_poly,
    sigma_seq, tau_seq, tilde_tau_seq, wprime_at_nodes, InterpError, InterpolationTable,
    TableError,
};
pub use rational::{
    cauchy_oracle, rational_family, rational_interpolate, RationalError, RationalInterpolant,
};
pub use resultant::{
    common_zero_from_samples, discriminant, resultant_minors_from_samples, sylvester_resultant,
    CommonZeroError, ResultantError, ResultantMinors, SampleRatioTable,
};

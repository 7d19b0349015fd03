//! Theorem and conjecture checks built on the other modules.

mod cloud;
mod report;
mod theorems;

pub use cloud::{
    boundary_residual, boundary_residual_with, conjecture_suite, conjecture_suite_with,
    containment_check, containment_check_with, CloudSummary, DEFAULT_CONTAINMENT_TOL,
};
pub use report::{bigint_value, float_value, Tolerance, VerificationReport};
pub use theorems::{
    eq1_monotonicity_check, eq1_sum, imaginary_root_check, pell_expected_count,
    pell_root_count_check, real_count_conjecture_check,
};

//! Redistribution of colored-degree matrices towards a target column-sum
//! vector while touching few columns.
//!
//! A [`DegreeMatrix`] has `p` diagonal-color rows with even sums followed by
//! `m` pairs of conjugate-color rows with equal sums. Given a target `β`
//! that differs from the column sums on a set `I` of columns, the solvers
//! below return a matrix of the same shape whose column sums are exactly `β`.

mod colored;
mod io;
mod matrix;
mod solve;

pub use colored::{colored_to_matrix, matrix_to_colored, modify_colored_degrees, ColorRows, ModifiedDegrees};
pub use io::{parse_beta, parse_dmat, write_beta, write_dmat};
pub use matrix::{DegreeMatrix, TargetDegrees};
pub use solve::{change_bound, transport_case_m1, transport_case_p1, transport_general, TransportOutcome};

//! Finite verification tools for presented groups: exact reflection
//! representations, coset enumeration, homomorphism counts into small
//! finite groups and the abelianization modulo 2.

mod abelian;
mod coset;
mod finite;
mod homcheck;
mod matrix;
mod report;
mod ring;

pub use abelian::abelianization_f2;
pub use coset::{todd_coxeter, CosetTable};
pub use finite::{count_homomorphisms, FiniteGroupFile, FiniteGroupTarget};
pub use homcheck::{
    check_homomorphism, AssignmentEvaluator, HomomorphismReport, MatrixEvaluator, RelatorCheck, WordEvaluator,
};
pub use matrix::{evaluate_word, tits_matrices, SquareMatrix};
pub use report::{invariant_report, InvariantReport};
pub use ring::ZSqrt2;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("coset enumeration needed more than {max_cosets} cosets")]
    CosetsExhausted { max_cosets: usize },
    #[error("homomorphism search exceeded {budget} nodes")]
    BudgetExceeded { budget: usize },
    #[error("Coxeter order {0} has no exact representation here (expected 2, 3 or 4)")]
    UnsupportedOrder(u32),
    #[error("invalid finite group: {0}")]
    BadTarget(String),
    #[error("malformed input: {0}")]
    Format(String),
}

//! Hopf-algebra machinery on presented algebras: structure maps with
//! relation checks, axiom verification at a truncation, comodule algebra
//! coactions, coinvariants, grouplike quotients, cotensor products, and the
//! coinvariant-quotient functor. All linear algebra is exact over Q(q).

mod coaction;
mod io;
mod linalg;
mod presentation;
mod tensor;

pub use coaction::{
    coinvariants, cotensor, takeuchi_phi, Coaction, GradedDecomposition, LeftComodule,
    PhiResult, RightComodule,
};
pub use io::{parse_model_file, render_model_file, ModelFile, TargetResolver};
pub use linalg::{Matrix, RowSpace, WordIndex};
pub use presentation::{AxiomEntry, AxiomReport, GenStructure, HopfPresentation};
pub use tensor::{Tensor3, TensorElement};

use serde::Serialize;
use thiserror::Error;

/// Three-valued verdicts for truncated checks: a failed check carries a
/// witness; a check that the cap cannot decide is inconclusive, never wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Error)]
pub enum HopfError {
    #[error(transparent)]
    Rewrite(#[from] crate::ncalg::RewriteError),
    #[error(transparent)]
    QField(#[from] crate::qfield::QFieldError),
    #[error("structure map {map} does not respect rule {rule}")]
    RelationNotRespected { map: String, rule: String },
    #[error("antipode inverse table inconsistent at generator {gen}")]
    AntipodeInverseInconsistent { gen: String },
    #[error("declared element is not grouplike: {elem}")]
    NotGrouplike { elem: String },
    #[error("invalid coaction: {message}")]
    CoactionInvalid { message: String },
    #[error("rewrite rule not homogeneous for the requested grading: {rule}")]
    NotHomogeneous { rule: String },
    #[error(transparent)]
    Presentation(#[from] crate::ncalg::PresentationError),
    #[error("model file error at line {line}: {message}")]
    Io { line: usize, message: String },
}

//! Exact symbolic machinery for quantized coordinate algebras over Q(q):
//! root-system combinatorics, a degree-truncated noncommutative rewriting
//! engine, Hopf-algebra structure checks, coinvariant and cotensor linear
//! algebra, concrete `O_q(SU_2)` / `O_q(SU_3)` / torus models, principal-pair
//! verification, and a catalog of noncommutative fibrations.
//!
//! Computations are exact: coefficients live in Q(q) (or in Q after an
//! explicit rational specialization), and every reported identity is a
//! theorem at its stated filtration degree. Truncation never silently
//! approximates; checks that cannot be decided at the configured degree
//! report themselves as inconclusive.

pub mod catalog;
pub mod hopf;
pub mod models;
pub mod ncalg;
pub mod pairs;
pub mod qfield;
pub mod rootsys;

pub use hopf::{Coaction, GradedDecomposition, HopfPresentation, TensorElement};
pub use ncalg::{NCPoly, Presentation, RewriteSystem, Word};
pub use qfield::{parse_scalar, q_binomial, q_integer, Scalar};
pub use rootsys::{CartanDatum, NodeSubset, Root, Series, Weight};

//! Noncommutative polynomials over Q(q) and the rewriting engine that gives
//! presented algebras canonical normal forms at a truncated degree.

mod expr;
mod poly;
mod presentation;
mod rewrite;
mod word;

pub use expr::{caret_line, parse_expr, ExprError};
pub use poly::NCPoly;
pub use presentation::{parse_presentation, Presentation, PresentationError};
pub(crate) use presentation::{parse_algebra_section, split_sections, RawSection};
pub use rewrite::{RewriteError, RewriteSystem, Rule};
pub use word::Word;

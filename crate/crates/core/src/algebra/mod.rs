//! Exact polynomial algebra over the rationals.
//!
//! Monomials are exponent vectors over a [`VariableSet`]. Index 0 is the
//! lex-largest variable: a variable listed later (later in the category
//! ordering) is lex-smaller, so for `x1 > x2 > ... > x6` the leading
//! monomial of the discriminant is `x1^5 x2^4 x3^3 x4^2 x5`.

mod groebner;
mod parse;
mod poly;
mod ring;
mod span;

pub use groebner::{buchberger, GroebnerBasis, Reduction};
pub use poly::{discriminant, lex_compare, Polynomial, Term};
pub use ring::{Monomial, Ring, VariableSet};
pub use span::{graded_span_member, SpanCertificate};

/// Exact rational coefficient.
pub type Coeff = num_rational::BigRational;

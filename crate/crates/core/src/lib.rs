//! Equivariant chains of ideals over FI-concrete categories.
//!
//! The crate is organized in layers:
//!
//! * [`tree`]: boron trees, the quartet relation, induced subtrees,
//!   embeddings, canonical forms and ordered (planar, rooted) boron trees.
//! * [`poset`]: Dickson and Higman orders, the weighted-object order and
//!   order ideals stored by their minimal elements.
//! * [`algebra`]: exact multivariate polynomials over the rationals with
//!   lexicographic orders, Buchberger's algorithm and graded-span membership.
//! * [`instances`]: concrete categories (FI, OI, BOI, colored chains, boron
//!   trees, ...) with object and morphism enumeration.
//! * [`systems`]: ideal systems presented by orbit generation, membership,
//!   equivariance, initial systems, the monomial/order-ideal correspondence,
//!   transfer along functors and stabilization probes.
//! * [`oracle`]: brute-force reference implementations used to cross-check
//!   the fast paths.

pub mod algebra;
mod elem;
mod error;
pub mod instances;
pub mod oracle;
pub mod poset;
pub mod systems;
pub mod tree;

pub use elem::Elem;
pub use error::{Error, ParseError, Result};

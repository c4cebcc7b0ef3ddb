//! Exact-arithmetic invariant theory for acyclic gentle algebras.
//!
//! The library computes, over the rationals and with no floating point:
//!
//! - colored bound quivers with gentle-axiom validation ([`quiver`]);
//! - rank functions, the maximal ones indexing irreducible components of
//!   module varieties, and the unique regular one ([`rank`]);
//! - up-and-down graphs, generic decompositions, generic band modules, and
//!   transcendence degrees of rational invariant fields ([`updown`]);
//! - Hom/Ext spaces, projective modules, and minimal projective
//!   presentations, including the explicit presentation of a band module
//!   ([`homalg`]);
//! - generalized Schofield semi-invariants: their weights, determinants,
//!   closed-form exponents, and the transcendence-basis ratios that separate
//!   generic modules ([`semiinv`]);
//! - King stability certificates by exhaustive submodule enumeration over a
//!   small prime field ([`stability`]).
//!
//! The `gentle` binary exposes all of this on quiver files; see the crate's
//! `examples/` directory for one runnable example per capability.

pub mod error;
pub mod exact;
pub mod quiver;
pub mod rank;
pub mod updown;

pub mod homalg;
pub mod semiinv;
pub mod stability;

pub mod cli;

pub use error::{Error, Result};

//! Exact arithmetic substrate: arbitrary-precision rationals, sparse
//! multivariate polynomials, polynomial and rational matrices, and small
//! prime-field linear algebra. All values are immutable after construction
//! and all operations are pure.

pub mod fp;
pub mod poly;
pub mod polymat;
pub mod qmat;
pub mod rational;

pub use fp::{check_prime, count_subspaces, enumerate_subspaces, fp_kernel, FpMatrix, FpSubspace};
pub use poly::{Monomial, MultiPoly, PolyRing};
pub use polymat::{poly_det, poly_rank_at, PolyMatrix};
pub use qmat::QMatrix;
pub use rational::{fmt_rational, parse_rational, rat, ratio, Rational};

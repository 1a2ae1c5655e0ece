//! Edge polytopes and symmetric edge polytopes of finite graphs, their exact
//! Ehrhart polynomials and delta-vectors, and tools for locating the complex
//! roots of those polynomials.
//!
//! The crate is organised bottom-up:
//!
//! * [`graphs`]: graph values, named families, isomorphism-free enumeration,
//!   block decomposition and unimodular-equivalence classes.
//! * [`lp`]: an exact rational simplex used for lattice-point membership.
//! * [`polytopes`]: V-representations, affine dimension and lattice-point counts.
//! * [`poly`] and [`ehrhart`]: exact polynomials, closed-form Ehrhart
//!   polynomials, interpolation and delta-vectors.
//! * [`roots`]: exact rational roots, certified numerical roots and the
//!   root-location checks.

pub mod ehrhart;
mod error;
pub mod graphs;
pub mod lp;
pub mod poly;
pub mod polytopes;
pub mod roots;

pub use error::{Error, Result};
pub use graphs::{CanonicalKey, Graph, Partition};
pub use poly::RationalPolynomial;
pub use polytopes::{Dilation, LatticePolytope, PolytopeKind};
pub use roots::{Root, RootKind, RootSet};

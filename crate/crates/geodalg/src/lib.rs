//! Exact symbolic machinery for geodesic-function algebras on orbifold
//! Riemann surfaces, built on fat-graph shear coordinates.
//!
//! The crate verifies, mechanically and at desk scale, the algebraic facts
//! these structures are supposed to satisfy: holonomy matrix identities,
//! Poisson brackets against skein resolutions, Casimirs, invariance under
//! mapping-class moves, braid-group relations with their matrix forms and
//! central elements, and the q-deformed counterparts of all of the above.
//!
//! Organization:
//! - [`kernel`]: big rationals, sparse Laurent polynomials, lambda
//!   polynomials, fraction field, one-radical extension, big floats
//! - [`fatgraph`]: spines with pending edges, boundary traversal, the
//!   exchange matrix of the Weil-Petersson bracket
//! - [`geodesic`]: path words, 2x2 holonomy evaluation, generator curves of
//!   the A and D families, multicurves
//! - [`poisson`]: Weil-Petersson bracket, Casimirs, skein resolution,
//!   Goldman bracket, verified bracket tables
//! - [`mcg`]: flips on inner and pending edges, spiral inversion, shear-level
//!   braid moves, invariance checks, the quantum dilogarithm numerics
//! - [`braid`]: abstract generator polynomials, braid substitutions, matrix
//!   representations, central elements
//! - [`quantum`]: quantum torus, Weyl ordering, noncommutative generator
//!   algebras with rewriting, quantum braid actions and central elements
//! - [`report`]: machine-readable verification reports

pub mod braid;
pub mod fatgraph;
pub mod geodesic;
pub mod kernel;
pub mod mcg;
pub mod poisson;
pub mod quantum;
pub mod report;

pub use kernel::{BigFloat, Frac, LambdaPoly, LaurentPoly, Mono, RadicalElem, Rat, Ring};

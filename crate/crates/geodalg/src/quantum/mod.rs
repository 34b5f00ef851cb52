//! Quantum layer: the quantum torus carrying operator-valued geodesics with
//! Weyl ordering, the abstract noncommutative generator algebras with
//! rewriting to normal form, quantum braid actions, and quantum central
//! elements.

pub mod braidq;
pub mod ncpoly;
pub mod ordering;
pub mod rules;
pub mod torus;

pub use ncpoly::{GenId, NCPoly, Word};
pub use rules::{Family, Relation, RuleSet};
pub use torus::{QPow, QTorus, QTorusElem};

//! Exact arithmetic substrate: big rationals, sparse multivariate Laurent
//! polynomials, univariate lambda-polynomials over a pluggable coefficient
//! ring, a fraction field, a single-radical quadratic extension, and a
//! fixed-precision big float used as the numeric oracle.

pub mod float;
pub mod frac;
pub mod lambda;
pub mod matrix;
pub mod poly;
pub mod radical;
pub mod rng;

pub use float::BigFloat;
pub use frac::Frac;
pub use lambda::LambdaPoly;
pub use matrix::{Mat2, MatN};
pub use poly::{LaurentPoly, Mono};
pub use radical::RadicalElem;

use num_rational::BigRational;
use std::fmt::Debug;

/// Arbitrary-precision rational, the coefficient field for all exact
/// computation in this crate.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0);
    Rat::new(n.into(), d.into())
}

/// Minimal commutative-ring interface shared by every coefficient type.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Rings with exact division (returns `None` when the division is not exact);
/// required by fraction-free elimination.
pub trait ExactDiv: Ring {
    fn exact_div(&self, den: &Self) -> Option<Self>;
}

/// Rings in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Self;
}

impl Ring for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl ExactDiv for Rat {
    fn exact_div(&self, den: &Self) -> Option<Self> {
        if Ring::is_zero(den) {
            None
        } else {
            Some(self / den)
        }
    }
}

impl Field for Rat {
    fn inv(&self) -> Self {
        assert!(!Ring::is_zero(self), "inverse of zero");
        let one: Rat = num_traits::One::one();
        one / self
    }
}

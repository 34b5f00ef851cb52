//! Fixed-precision decimal big float: value = `scaled / 10^digits`.
//!
//! The working precision rides along with the values: binary operations
//! align to the larger precision of the two operands, so promoting the input
//! points of a computation to `n` digits keeps the whole computation at `n`
//! digits. Default precision used across the crate is 60 decimal digits,
//! overridable through `GEODALG_PRECISION`.

use super::{Field, Rat, Ring};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub const DEFAULT_DIGITS: u32 = 60;

/// Read the working precision from `GEODALG_PRECISION`, defaulting to 60.
pub fn env_digits() -> u32 {
    std::env::var("GEODALG_PRECISION")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DIGITS)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigFloat {
    digits: u32,
    scaled: BigInt,
}

fn pow10(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

/// Round `x / 10^k` half away from zero.
fn scale_down(x: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x.clone();
    }
    let d = pow10(k);
    let (q, r) = num_integer::Integer::div_rem(x, &d);
    if &r.abs() * 2 >= d {
        if x.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            digits: 0,
            scaled: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        BigFloat {
            digits: 0,
            scaled: BigInt::from(1),
        }
    }

    pub fn from_int(n: i64, digits: u32) -> Self {
        BigFloat {
            digits,
            scaled: BigInt::from(n) * pow10(digits),
        }
    }

    pub fn from_rat(r: &Rat, digits: u32) -> Self {
        let scaled = num_integer::Integer::div_floor(&(r.numer() * pow10(digits + 2)), r.denom());
        BigFloat {
            digits,
            scaled: scale_down(&scaled, 2),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn with_digits(&self, digits: u32) -> Self {
        match digits.cmp(&self.digits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => BigFloat {
                digits,
                scaled: &self.scaled * pow10(digits - self.digits),
            },
            Ordering::Less => BigFloat {
                digits,
                scaled: scale_down(&self.scaled, self.digits - digits),
            },
        }
    }

    fn aligned(&self, other: &Self) -> (BigFloat, BigFloat, u32) {
        let d = self.digits.max(other.digits);
        (self.with_digits(d), other.with_digits(d), d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, d) = self.aligned(other);
        BigFloat {
            digits: d,
            scaled: a.scaled + b.scaled,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, d) = self.aligned(other);
        BigFloat {
            digits: d,
            scaled: a.scaled - b.scaled,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, d) = self.aligned(other);
        BigFloat {
            digits: d,
            scaled: scale_down(&(a.scaled * b.scaled), d),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        let (a, b, d) = self.aligned(other);
        assert!(!b.scaled.is_zero(), "division by zero");
        let num = a.scaled * pow10(d + 2);
        let q = num_integer::Integer::div_floor(&num, &b.scaled);
        BigFloat {
            digits: d,
            scaled: scale_down(&q, 2),
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            digits: self.digits,
            scaled: -&self.scaled,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            digits: self.digits,
            scaled: self.scaled.abs(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scaled.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.scaled.is_positive()
    }

    /// Integer-Newton square root; requires a non-negative value.
    pub fn sqrt(&self) -> Self {
        assert!(!self.scaled.is_negative(), "sqrt of negative value");
        if self.scaled.is_zero() {
            return self.clone();
        }
        let d = self.digits;
        let target = &self.scaled * pow10(d); // sqrt(target) has scale d
        let mut x: BigInt = BigInt::from(1) << ((target.bits() / 2 + 1) as u32);
        loop {
            let next = (&x + &target / &x) >> 1;
            let step: BigInt = &next - &x;
            if step.abs() <= BigInt::from(1) {
                // settle on the floor sqrt
                let mut r = next;
                while &r * &r > target {
                    r -= 1;
                }
                while (&r + 1) * (&r + 1) <= target {
                    r += 1;
                }
                return BigFloat { digits: d, scaled: r };
            }
            x = next;
        }
    }

    pub fn powi(&self, n: i32) -> Self {
        if n < 0 {
            return BigFloat::one().with_digits(self.digits).div(&self.powi(-n));
        }
        let mut acc = BigFloat::one().with_digits(self.digits);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `10^-k` at this value's precision, for tolerance thresholds.
    pub fn eps(digits: u32, k: u32) -> Self {
        assert!(k <= digits);
        BigFloat {
            digits,
            scaled: pow10(digits - k),
        }
    }

    pub fn to_f64(&self) -> f64 {
        // adequate for display and coarse checks only
        let s = self.scaled.to_string();
        let v: f64 = s.parse().unwrap_or(f64::NAN);
        v / 10f64.powi(self.digits as i32)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.aligned(other);
        a.scaled.partial_cmp(&b.scaled)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}", self.to_f64())
    }
}

impl Ring for BigFloat {
    fn zero() -> Self {
        BigFloat::zero()
    }
    fn one() -> Self {
        BigFloat::one()
    }
    fn is_zero(&self) -> bool {
        BigFloat::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl Field for BigFloat {
    fn inv(&self) -> Self {
        BigFloat::one().with_digits(self.digits).div(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    #[test]
    fn sqrt_squares_back() {
        let x = BigFloat::from_rat(&rat(7, 3), 60);
        let s = x.sqrt();
        let diff = s.mul(&s).sub(&x).abs();
        assert!(diff < BigFloat::eps(60, 55));
    }

    #[test]
    fn precision_alignment() {
        let a = BigFloat::from_rat(&rat(1, 3), 60);
        let b = BigFloat::from_int(3, 10);
        let p = a.mul(&b);
        assert_eq!(p.digits(), 60);
        assert!(p.sub(&BigFloat::one()).abs() < BigFloat::eps(60, 55));
    }
}

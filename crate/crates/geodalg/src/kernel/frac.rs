//! Fraction field over `LaurentPoly`, reduced only by monomial content.
//! Equality is decided by cross-multiplication, so a full polynomial gcd is
//! never needed at the scales used here.

use super::poly::{LaurentPoly, Mono};
use super::{Field, Rat, Ring};

#[derive(Clone, Debug)]
pub struct Frac {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl Frac {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = Frac { num, den };
        f.reduce();
        f
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Frac {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn var(v: u32) -> Self {
        Frac::from_poly(LaurentPoly::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divide numerator and denominator by their common monomial factor and
    /// by the denominator's leading coefficient.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // common monomial factor: per variable, the minimum exponent over
        // every term of both numerator and denominator (missing = 0)
        let mut vars = self.num.support();
        for v in self.den.support() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let mut g: Vec<(u32, i32)> = Vec::new();
        for v in vars {
            let k = self
                .num
                .terms
                .keys()
                .chain(self.den.terms.keys())
                .map(|m| m.exp(v))
                .min()
                .unwrap_or(0);
            if k != 0 {
                g.push((v, k));
            }
        }
        g.sort_unstable_by_key(|&(v, _)| v);
        let g = Mono(g).inv();
        self.num = self.num.mul_mono(&g);
        self.den = self.den.mul_mono(&g);
        let lead = self.den.leading().unwrap().1.clone();
        if !num_traits::One::is_one(&lead) {
            let inv = <Rat as Ring>::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Ring for Frac {
    fn zero() -> Self {
        Frac::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        Frac::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        Frac::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        Frac::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Frac::new(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Frac::new(&self.num * &other.num, &self.den * &other.den)
    }
    fn neg_ref(&self) -> Self {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Field for Frac {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero fraction");
        Frac::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_spot() {
        let u0 = Frac::var(0);
        let u1 = Frac::var(1);
        let x = u0.add_ref(&u1.inv());
        let y = x.mul_ref(&x.inv());
        assert_eq!(y, Frac::one());
        assert_eq!(x.sub_ref(&x), Frac::zero());
    }
}

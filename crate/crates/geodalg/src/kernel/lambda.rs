//! Univariate Laurent polynomials in a formal parameter (written `lambda`)
//! over a pluggable commutative coefficient ring. Hosts the generating
//! functions of central elements, `det(lambda A + lambda^-1 A^T)`.

use super::{ExactDiv, Ring};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct LambdaPoly<R: Ring> {
    pub terms: BTreeMap<i32, R>,
}

impl<R: Ring> LambdaPoly<R> {
    pub fn zero() -> Self {
        LambdaPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LambdaPoly { terms }
    }

    pub fn one() -> Self {
        LambdaPoly::constant(R::one())
    }

    /// `c * lambda^k`
    pub fn term(c: R, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LambdaPoly { terms }
    }

    pub fn lambda(k: i32) -> Self {
        LambdaPoly::term(R::one(), k)
    }

    pub fn add_term(&mut self, k: i32, c: R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, k: i32) -> R {
        self.terms.get(&k).cloned().unwrap_or_else(R::zero)
    }

    /// The involution lambda -> lambda^-1 (exponent negation).
    pub fn invert_lambda(&self) -> Self {
        LambdaPoly {
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: &dyn Fn(&R) -> S) -> LambdaPoly<S> {
        let mut out = LambdaPoly::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, f(c));
        }
        out
    }

    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }
}

impl<R: Ring> Ring for LambdaPoly<R> {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn one() -> Self {
        LambdaPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = LambdaPoly::zero();
        for (&ka, ca) in &self.terms {
            for (&kb, cb) in &other.terms {
                out.add_term(ka + kb, ca.mul_ref(cb));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        LambdaPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c.neg_ref()))
                .collect(),
        }
    }
}

impl<R: ExactDiv> ExactDiv for LambdaPoly<R> {
    fn exact_div(&self, den: &Self) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (&dk, dc) = den.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quo = LambdaPoly::zero();
        while !Ring::is_zero(&rem) {
            let (&rk, rc) = rem.terms.iter().next_back().unwrap();
            let qc = rc.exact_div(dc)?;
            let qk = rk - dk;
            let qt = LambdaPoly::term(qc, qk);
            let prod = qt.mul_ref(den);
            let next = rem.sub_ref(&prod);
            if let Some((&nk, _)) = next.terms.iter().next_back() {
                if nk >= rk {
                    return None;
                }
            }
            rem = next;
            quo = quo.add_ref(&qt);
        }
        Some(quo)
    }
}

impl<R: Ring> fmt::Display for LambdaPoly<R>
where
    R: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*L^{}", c, k)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat_int, Rat};

    #[test]
    fn lambda_symmetry() {
        // lambda + lambda^-1 is fixed by the involution
        let p: LambdaPoly<Rat> = LambdaPoly::lambda(1).add_ref(&LambdaPoly::lambda(-1));
        assert_eq!(p.invert_lambda(), p);
    }

    #[test]
    fn exact_div_by_binomial() {
        // (L - L^-1)^3 / (L - L^-1) = (L - L^-1)^2
        let b: LambdaPoly<Rat> = LambdaPoly::lambda(1).sub_ref(&LambdaPoly::lambda(-1));
        let b2 = b.mul_ref(&b);
        let b3 = b2.mul_ref(&b);
        assert_eq!(b3.exact_div(&b).unwrap(), b2);
        let off = b3.add_ref(&LambdaPoly::constant(rat_int(1)));
        assert!(off.exact_div(&b).is_none());
    }
}

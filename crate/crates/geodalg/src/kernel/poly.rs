//! Sparse multivariate Laurent polynomials over big rationals.
//!
//! Variables are indexed by `u32` ids. In geodesic-function work variable `i`
//! stands for `u_i = exp(Z_i/2)`, one per graph edge, so an exponent `k`
//! means `exp(k Z_i / 2)`; in the abstract braid algebras the same type holds
//! ordinary polynomials in the generator symbols (non-negative exponents).

use super::{ExactDiv, Field, Rat, Ring};
use num_traits::Signed;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A monomial: a sparse exponent vector, strictly sorted by variable id with
/// no zero exponents stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub Vec<(u32, i32)>);

impl Mono {
    pub fn unit() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Mono(vec![(v, 1)])
    }

    pub fn var_pow(v: u32, k: i32) -> Self {
        if k == 0 {
            Mono::unit()
        } else {
            Mono(vec![(v, k)])
        }
    }

    pub fn from_pairs(pairs: &[(u32, i32)]) -> Self {
        let mut m: BTreeMap<u32, i32> = BTreeMap::new();
        for &(v, k) in pairs {
            *m.entry(v).or_insert(0) += k;
        }
        Mono(m.into_iter().filter(|&(_, k)| k != 0).collect())
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, v: u32) -> i32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, k)| k)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, k)| k as i64).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ka) = self.0[i];
            let (vb, kb) = other.0[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ka));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, kb));
                    j += 1;
                }
                Ordering::Equal => {
                    if ka + kb != 0 {
                        out.push((va, ka + kb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Mono(out)
    }

    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|&(v, k)| (v, -k)).collect())
    }

    pub fn pow(&self, n: i32) -> Mono {
        if n == 0 {
            return Mono::unit();
        }
        Mono(
            self.0
                .iter()
                .map(|&(v, k)| (v, k.checked_mul(n).expect("exponent overflow")))
                .collect(),
        )
    }
}

// Lexicographic order on the dense exponent vector (missing = 0), which is
// translation-invariant and therefore usable as a term order for exact
// division of Laurent polynomials.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ka)), None) => {
                    return ka.cmp(&0);
                }
                (None, Some(&(_, kb))) => {
                    return 0.cmp(&kb);
                }
                (Some(&(va, ka)), Some(&(vb, kb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        if ka != 0 {
                            return ka.cmp(&0);
                        }
                        i += 1;
                    }
                    Ordering::Greater => {
                        if kb != 0 {
                            return 0.cmp(&kb);
                        }
                        j += 1;
                    }
                    Ordering::Equal => {
                        if ka != kb {
                            return ka.cmp(&kb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial with `Rat` coefficients. No zero coefficient is
/// ever stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    pub terms: BTreeMap<Mono, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(), c);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::constant(Rat::from_integer(n.into()))
    }

    pub fn monomial(c: Rat, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// The variable `u_v`.
    pub fn var(v: u32) -> Self {
        LaurentPoly::monomial(Rat::one(), Mono::var(v))
    }

    pub fn var_pow(v: u32, k: i32) -> Self {
        LaurentPoly::monomial(Rat::one(), Mono::var_pow(v, k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_unit())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Variables actually present.
    pub fn support(&self) -> Vec<u32> {
        let mut vars: Vec<u32> = Vec::new();
        for m in self.terms.keys() {
            for &(v, _) in &m.0 {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
        }
        vars.sort_unstable();
        vars
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Leading (maximal) term in the term order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Derivative with respect to the shear coordinate `Z_v`, under the
    /// convention that variable `v` is `exp(Z_v/2)`: each term is scaled by
    /// half its exponent of `v`.
    pub fn diff_z(&self, v: u32) -> Self {
        let mut out = LaurentPoly::zero();
        let half = Rat::new(1.into(), 2.into());
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k != 0 {
                out.add_term(m.clone(), c * Rat::from_integer(k.into()) * &half);
            }
        }
        out
    }

    /// Substitute polynomials for variables (used by the abstract generator
    /// algebras; all exponents must be non-negative).
    pub fn subst(&self, image: &dyn Fn(u32) -> LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            for &(v, k) in &m.0 {
                assert!(k >= 0, "substitution requires non-negative exponents");
                term = &term * &image(v).pow(k as u32);
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluate at a point of a field, `point(v)` giving the value of `u_v`.
    pub fn eval<F: Field>(&self, point: &dyn Fn(u32) -> F) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = rat_to_field::<F>(c);
            for &(v, k) in &m.0 {
                let base = if k >= 0 { point(v) } else { point(v).inv() };
                for _ in 0..k.unsigned_abs() {
                    t = t.mul_ref(&base);
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// All coefficients strictly positive (Laurent positivity).
    pub fn is_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_positive())
    }

    /// All coefficients positive integers.
    pub fn has_positive_integer_coeffs(&self) -> bool {
        self.is_positive() && self.terms.values().all(|c| c.denom() == &1.into())
    }

    pub fn display<'a>(&'a self, name: &'a dyn Fn(u32) -> String) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, name }
    }
}

/// Embed a rational into any field through repeated addition-free route:
/// numerator times inverse of denominator, both built from `one()`.
fn rat_to_field<F: Field>(c: &Rat) -> F {
    fn int_to<F: Field>(n: &num_bigint::BigInt) -> F {
        let mut acc = F::zero();
        let one = F::one();
        let mut mag = n.magnitude().clone();
        // binary expansion to keep this cheap for big numerators
        let mut base = one.clone();
        while !num_traits::Zero::is_zero(&mag) {
            if num_integer::Integer::is_odd(&mag) {
                acc = acc.add_ref(&base);
            }
            base = base.add_ref(&base);
            mag >>= 1;
        }
        if n.sign() == num_bigint::Sign::Minus {
            acc = acc.neg_ref();
        }
        acc
    }
    let num = int_to::<F>(c.numer());
    let den = int_to::<F>(c.denom());
    num.mul_ref(&den.inv())
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
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

impl ExactDiv for LaurentPoly {
    /// Exact division by repeated elimination of the leading term. Returns
    /// `None` when the division is not exact.
    fn exact_div(&self, den: &Self) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (dm, dc) = den.leading().unwrap();
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quo = LaurentPoly::zero();
        let mut steps = 0usize;
        while !rem.is_zero() {
            steps += 1;
            if steps > 200_000 {
                return None;
            }
            let (rm, rc) = rem.leading().unwrap();
            let prev = rm.clone();
            let qm = rm.mul(&dm.inv());
            let qc = rc / &dc;
            let qt = LaurentPoly::monomial(qc, qm);
            rem = &rem - &(&qt * den);
            // the leading term must strictly drop, otherwise the division
            // is not exact
            if let Some((nm, _)) = rem.leading() {
                if *nm >= prev {
                    return None;
                }
            }
            quo = &quo + &qt;
        }
        Some(quo)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a LaurentPoly,
    name: &'a dyn Fn(u32) -> String,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.poly.terms.iter().rev() {
            let neg = c.is_negative();
            let ac = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ac_is_one = ac == super::rat_int(1);
            if m.is_unit() {
                write!(f, "{}", ac)?;
            } else {
                if !ac_is_one {
                    write!(f, "{}*", ac)?;
                }
                let mut firstv = true;
                for &(v, k) in &m.0 {
                    if !firstv {
                        write!(f, "*")?;
                    }
                    firstv = false;
                    if k == 1 {
                        write!(f, "{}", (self.name)(v))?;
                    } else {
                        write!(f, "{}^{}", (self.name)(v), k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat_int;

    fn u(v: u32, k: i32) -> LaurentPoly {
        LaurentPoly::var_pow(v, k)
    }

    #[test]
    fn difference_of_squares() {
        // (u1 + u1^-1)(u1 - u1^-1) = u1^2 - u1^-2
        let f = &u(1, 1) + &u(1, -1);
        let g = &u(1, 1) - &u(1, -1);
        let expect = &u(1, 2) - &u(1, -2);
        assert_eq!(&f * &g, expect);
    }

    #[test]
    fn mul_identity() {
        let f = &(&u(0, 3) + &u(1, -2)).scale(&rat_int(7)) + &LaurentPoly::one();
        assert_eq!(&f * &LaurentPoly::one(), f);
    }

    #[test]
    fn diff_z_basics() {
        // d(u1^2)/dZ1 = u1^2  since u1^2 = e^{Z1}
        let f = u(1, 2);
        assert_eq!(f.diff_z(1), f);
        // d(const)/dZ1 = 0
        assert!(LaurentPoly::from_int(5).diff_z(1).is_zero());
        // d(u1 u2^-1)/dZ2 = -1/2 u1 u2^-1
        let g = &u(1, 1) * &u(2, -1);
        assert_eq!(g.diff_z(2), g.scale(&crate::kernel::rat(-1, 2)));
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = &(&u(0, 1) + &u(1, -1)) * &(&u(0, -2) + &LaurentPoly::from_int(3));
        let d = &u(0, 1) + &u(1, -1);
        let q = f.exact_div(&d).unwrap();
        assert_eq!(q, &u(0, -2) + &LaurentPoly::from_int(3));
        let bad = &f + &LaurentPoly::one();
        assert!(bad.exact_div(&d).is_none() || (&bad.exact_div(&d).unwrap() * &d) == bad);
    }

    #[test]
    fn term_order_translation_invariant() {
        let a = Mono::from_pairs(&[(0, 1)]);
        let b = Mono::from_pairs(&[(0, 1), (1, -1)]);
        let k = Mono::from_pairs(&[(1, 1)]);
        assert_eq!(a.cmp(&b), a.mul(&k).cmp(&b.mul(&k)));
    }
}

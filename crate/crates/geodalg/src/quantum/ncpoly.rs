//! Noncommutative polynomials: Z[q^(1/4)]-linear combinations of words in
//! abstract generator symbols.

use super::torus::QPow;
use crate::kernel::{LaurentPoly, Rat, Ring};
use std::collections::BTreeMap;
use std::fmt;

pub type GenId = u16;
pub type Word = Vec<GenId>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    pub terms: BTreeMap<Word, QPow>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        NCPoly::scalar(QPow::one())
    }

    pub fn scalar(c: QPow) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        NCPoly { terms }
    }

    pub fn gen(g: GenId) -> Self {
        NCPoly::word(vec![g], QPow::one())
    }

    pub fn word(w: Word, c: QPow) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn add_term(&mut self, w: Word, c: QPow) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn scale_q(&self, c: &QPow) -> Self {
        let mut out = NCPoly::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.mul_ref(c));
        }
        out
    }

    /// The *-involution: reverse every word, conjugate q.
    pub fn star(&self) -> Self {
        let mut out = NCPoly::zero();
        for (w, v) in &self.terms {
            let mut rw = w.clone();
            rw.reverse();
            out.add_term(rw, v.conj());
        }
        out
    }

    /// Specialize q -> 1, mapping generator g to the commutative variable g.
    pub fn at_q_one(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (w, v) in &self.terms {
            let mut mono = crate::kernel::poly::Mono::unit();
            for &g in w {
                mono = mono.mul(&crate::kernel::poly::Mono::var(g as u32));
            }
            out.add_term(mono, v.at_one());
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul_ref(other).sub_ref(&other.mul_ref(self))
    }

    /// q x y - q^-1 y x
    pub fn q_commutator(&self, other: &Self) -> Self {
        self.mul_ref(other)
            .scale_q(&QPow::q_pow(1))
            .sub_ref(&other.mul_ref(self).scale_q(&QPow::q_pow(-1)))
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn display<'a>(&'a self, name: &'a dyn Fn(GenId) -> String) -> NCDisplay<'a> {
        NCDisplay { poly: self, name }
    }
}

impl Ring for NCPoly {
    fn zero() -> Self {
        NCPoly::zero()
    }
    fn one() -> Self {
        NCPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, ca.mul_ref(cb));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg_ref()))
                .collect(),
        }
    }
}

pub struct NCDisplay<'a> {
    poly: &'a NCPoly,
    name: &'a dyn Fn(GenId) -> String,
}

impl fmt::Display for NCDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.poly.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for &g in w {
                write!(f, "*{}", (self.name)(g))?;
            }
        }
        Ok(())
    }
}

/// Convenience: integer multiple of a word.
pub fn int_word(n: i64, w: Word) -> NCPoly {
    NCPoly::word(w, QPow::one().scale(&Rat::from_integer(n.into())))
}

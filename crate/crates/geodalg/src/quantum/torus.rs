//! Quantum torus: exponentials of noncommuting shear operators.
//!
//! Generators u_e = exp(Z_e/2) with [Z_a, Z_b] = 2 pi i hbar eps_ab and
//! q = exp(-i pi hbar). Elements are stored in the Weyl-symbol basis: a
//! monomial is the symmetrized exponential :u^m: = exp((1/2) sum m_e Z_e)
//! with a coefficient that is a Laurent polynomial in q^(1/4).
//!
//! The product rule is derived from the central-commutator exponential
//! identity e^A e^B = e^(A+B) e^([A,B]/2):
//!   :u^m: :u^m': = q^(-<m, eps m'>/4) :u^(m+m'):
//! where <m, eps m'> = sum m_a eps_ab m'_b. A finite-dimensional matrix
//! oracle pins the constant (see `tests::bch_constant_matches_matrix_oracle`).

use crate::kernel::poly::{LaurentPoly, Mono};
use crate::kernel::{Rat, Ring};
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

/// Laurent polynomial in q^(1/4): exponent k means q^(k/4).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPow {
    pub terms: BTreeMap<i32, Rat>,
}

impl QPow {
    pub fn zero() -> Self {
        QPow {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QPow::q_quarter_pow(0)
    }

    /// q^(k/4)
    pub fn q_quarter_pow(k: i32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, Rat::one());
        QPow { terms }
    }

    /// q^k
    pub fn q_pow(k: i32) -> Self {
        QPow::q_quarter_pow(4 * k)
    }

    pub fn from_int(n: i64) -> Self {
        QPow::one().scale(&Rat::from_integer(n.into()))
    }

    /// xi = q^2 - q^-2
    pub fn xi() -> Self {
        QPow::q_pow(2).sub_ref(&QPow::q_pow(-2))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return QPow::zero();
        }
        QPow {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn mul_q_quarter(&self, k: i32) -> Self {
        QPow {
            terms: self.terms.iter().map(|(&e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// The involution q -> q^-1.
    pub fn conj(&self) -> Self {
        QPow {
            terms: self.terms.iter().map(|(&k, v)| (-k, v.clone())).collect(),
        }
    }

    /// Value at q = 1.
    pub fn at_one(&self) -> Rat {
        let mut acc = Rat::zero();
        for v in self.terms.values() {
            acc = acc + v;
        }
        acc
    }

    /// Numeric value at q = exp(-i pi hbar) for float cross-checks.
    pub fn eval_complex(&self, hbar: f64) -> num_complex::Complex64 {
        use num_complex::Complex64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (&k, v) in &self.terms {
            let num: f64 = rat_to_f64(v);
            let phase = -std::f64::consts::PI * hbar * (k as f64) / 4.0;
            acc += Complex64::from_polar(num.abs(), phase) * num.signum();
        }
        acc
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

impl Ring for QPow {
    fn zero() -> Self {
        QPow::zero()
    }
    fn one() -> Self {
        QPow::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            let e = out.terms.entry(k).or_insert_with(Rat::zero);
            *e = e.clone() + v;
            if e.is_zero() {
                out.terms.remove(&k);
            }
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = QPow::zero();
        for (&ka, va) in &self.terms {
            for (&kb, vb) in &other.terms {
                let e = out.terms.entry(ka + kb).or_insert_with(Rat::zero);
                *e = e.clone() + va * vb;
                if e.is_zero() {
                    out.terms.remove(&(ka + kb));
                }
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        QPow {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

impl fmt::Display for QPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&k, v)| {
                if k == 0 {
                    format!("{}", v)
                } else if k % 4 == 0 {
                    format!("{}*q^{}", v, k / 4)
                } else {
                    format!("{}*q^({}/4)", v, k)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The torus context: the exchange matrix of the underlying spine.
#[derive(Debug, PartialEq, Eq)]
pub struct QTorus {
    pub eps: Vec<Vec<i64>>,
}

impl QTorus {
    pub fn new(eps: Vec<Vec<i64>>) -> Rc<Self> {
        Rc::new(QTorus { eps })
    }

    /// <m, eps m'>
    fn pairing(&self, a: &Mono, b: &Mono) -> i64 {
        let mut s = 0i64;
        for &(va, ka) in &a.0 {
            for &(vb, kb) in &b.0 {
                s += self.eps[va as usize][vb as usize] * ka as i64 * kb as i64;
            }
        }
        s
    }
}

/// Quantum torus element in Weyl-symbol canonical form.
#[derive(Clone, Debug)]
pub struct QTorusElem {
    pub torus: Rc<QTorus>,
    pub terms: BTreeMap<Mono, QPow>,
}

impl PartialEq for QTorusElem {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl QTorusElem {
    pub fn zero(torus: Rc<QTorus>) -> Self {
        QTorusElem {
            torus,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(torus: Rc<QTorus>, c: QPow) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(), c);
        }
        QTorusElem { torus, terms }
    }

    /// Weyl lift of a classical Laurent polynomial: same monomials, no
    /// q-corrections.
    pub fn weyl_lift(torus: Rc<QTorus>, p: &LaurentPoly) -> Self {
        QTorusElem {
            torus,
            terms: p
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), QPow::one().scale(c)))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Mono, c: QPow) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(Rc::ptr_eq(&self.torus, &other.torus) || self.torus.eps == other.torus.eps);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QTorusElem {
            torus: self.torus.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale_q(&self, c: &QPow) -> Self {
        let mut out = QTorusElem::zero(self.torus.clone());
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul_ref(c));
        }
        out
    }

    /// Exact product in Weyl-symbol form:
    /// :u^m: :u^m': = q^(-<m,eps m'>/4) :u^(m+m'):
    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            Rc::ptr_eq(&self.torus, &other.torus) || self.torus.eps == other.torus.eps,
            "mismatched torus parameters"
        );
        let mut out = QTorusElem::zero(self.torus.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let s = self.torus.pairing(ma, mb);
                let coeff = ca.mul_ref(cb).mul_q_quarter(-(s as i32));
                out.add_term(ma.mul(mb), coeff);
            }
        }
        out
    }

    /// *-involution: Weyl symbols of real exponents are self-adjoint, and
    /// q is conjugated.
    pub fn star(&self) -> Self {
        QTorusElem {
            torus: self.torus.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.star()
    }

    /// Classical limit q -> 1.
    pub fn classical(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.at_one());
        }
        out
    }

    /// Commutator [x, y].
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// q-commutator q x y - q^-1 y x.
    pub fn q_commutator(&self, other: &Self) -> Self {
        self.mul(other)
            .scale_q(&QPow::q_pow(1))
            .sub(&other.mul(self).scale_q(&QPow::q_pow(-1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn simple_torus() -> Rc<QTorus> {
        // two variables with eps_01 = 1
        QTorus::new(vec![vec![0, 1], vec![-1, 0]])
    }

    fn u(t: &Rc<QTorus>, v: u32, k: i32) -> QTorusElem {
        QTorusElem::weyl_lift(t.clone(), &LaurentPoly::var_pow(v, k))
    }

    #[test]
    fn commuting_pair() {
        let t = QTorus::new(vec![vec![0, 0], vec![0, 0]]);
        let a = u(&t, 0, 1);
        let b = u(&t, 1, 1);
        assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn group_like_inverse() {
        // (u0 u1)(u1^-1 u0^-1) = 1 exactly: the q-powers of the two factors
        // cancel because the pairing is antisymmetric
        let t = simple_torus();
        let x = u(&t, 0, 1).mul(&u(&t, 1, 1));
        let y = u(&t, 1, -1).mul(&u(&t, 0, -1));
        let p = x.mul(&y);
        assert_eq!(p, QTorusElem::scalar(t.clone(), QPow::one()));
    }

    #[test]
    fn weyl_exchange_constant() {
        // u0 u1 = q^(-1/2) :u0 u1:  and  u0 u1 = q^(-1) u1 u0 when eps_01 = 1
        let t = simple_torus();
        let ab = u(&t, 0, 1).mul(&u(&t, 1, 1));
        let mut expect = QTorusElem::zero(t.clone());
        expect.add_term(
            Mono::from_pairs(&[(0, 1), (1, 1)]),
            QPow::q_quarter_pow(-1),
        );
        assert_eq!(ab, expect);
        let ba = u(&t, 1, 1).mul(&u(&t, 0, 1));
        assert_eq!(ab, ba.scale_q(&QPow::q_quarter_pow(-2)));
    }

    /// Matrix oracle for the exchange constant: represent Z0/2 and Z1/2 as
    /// 3x3 upper-triangular nilpotents whose commutator is central; the
    /// terminating exponential series give exact matrices, and the group
    /// element e^(Z0/2) e^(Z1/2) e^(-(Z0+Z1)/2) must equal
    /// exp((i pi hbar/4) eps E13), the matrix avatar of q^(-eps/4).
    #[test]
    fn bch_constant_matches_matrix_oracle() {
        let hbar = 0.37f64;
        let eps01 = 1.0f64;
        type M = [[Complex64; 3]; 3];
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let mul = |a: &M, b: &M| -> M {
            let mut c = [[zero; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        c[i][j] += a[i][k] * b[k][j];
                    }
                }
            }
            c
        };
        let expm = |a: &M| -> M {
            // nilpotent of order 3: exp = 1 + a + a^2/2
            let a2 = mul(a, a);
            let mut e = [[zero; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    e[i][j] = a[i][j] + a2[i][j] * Complex64::new(0.5, 0.0);
                    if i == j {
                        e[i][j] += one;
                    }
                }
            }
            e
        };
        // [Z0, Z1] = 2 pi i hbar eps01;  Z0/2 = x E12, Z1/2 = y E23 with
        // x*y = (1/4) * 2 pi i hbar eps01 * t and E13 the central direction
        let c = Complex64::new(0.0, 2.0 * std::f64::consts::PI * hbar * eps01 / 4.0);
        let x = c.sqrt();
        let y = c.sqrt();
        let mut a = [[zero; 3]; 3];
        a[0][1] = x;
        let mut b = [[zero; 3]; 3];
        b[1][2] = y;
        let lhs = mul(&expm(&a), &expm(&b));
        // exp(-(A+B)) = expm of negation
        let mut napb = [[zero; 3]; 3];
        napb[0][1] = -x;
        napb[1][2] = -y;
        let corr = mul(&lhs, &expm(&napb));
        // corr should be I + ([A,B]/2) E13 = I + (x y / 2) E13, and the
        // claimed Weyl constant is q^(-eps/4) = exp(i pi hbar eps / 4)
        let claimed = Complex64::new(0.0, std::f64::consts::PI * hbar * eps01 / 4.0);
        assert!((corr[0][2] - claimed).norm() < 1e-12);
        for i in 0..3 {
            assert!((corr[i][i] - one).norm() < 1e-12);
        }
        assert!(corr[0][1].norm() < 1e-12 && corr[1][2].norm() < 1e-12);
        // and the QPow phase agrees numerically
        let qc = QPow::q_quarter_pow(-1).eval_complex(hbar);
        assert!((qc - claimed.exp()).norm() < 1e-12);
    }
}

//! Dense matrices over a generic ring: 2x2 for holonomy words, n x n for
//! the braid representations; determinants by cofactor expansion and by
//! fraction-free (Bareiss) elimination as two independent routes.

use super::{ExactDiv, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<R: Ring> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2 {
            a: self.a.mul_ref(&o.a).add_ref(&self.b.mul_ref(&o.c)),
            b: self.a.mul_ref(&o.b).add_ref(&self.b.mul_ref(&o.d)),
            c: self.c.mul_ref(&o.a).add_ref(&self.d.mul_ref(&o.c)),
            d: self.c.mul_ref(&o.b).add_ref(&self.d.mul_ref(&o.d)),
        }
    }

    pub fn trace(&self) -> R {
        self.a.add_ref(&self.d)
    }

    pub fn det(&self) -> R {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }

    /// Adjugate; for unit-determinant matrices this is the inverse.
    pub fn adjugate(&self) -> Self {
        Mat2 {
            a: self.d.clone(),
            b: self.b.neg_ref(),
            c: self.c.neg_ref(),
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat2 {
            a: self.a.neg_ref(),
            b: self.b.neg_ref(),
            c: self.c.neg_ref(),
            d: self.d.neg_ref(),
        }
    }
}

/// Row-major n x n matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct MatN<R: Ring> {
    pub n: usize,
    pub data: Vec<R>,
}

impl<R: Ring> MatN<R> {
    pub fn zero(n: usize) -> Self {
        MatN {
            n,
            data: vec![R::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatN::zero(n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(n: usize, f: &dyn Fn(usize, usize) -> R) -> Self {
        let mut m = MatN::zero(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        MatN::from_fn(self.n, &|i, j| self[(j, i)].clone())
    }

    pub fn map<S: Ring>(&self, f: &dyn Fn(&R) -> S) -> MatN<S> {
        MatN {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        MatN {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        MatN {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        MatN {
            n: self.n,
            data: self.data.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out: MatN<R> = MatN::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = &self[(i, k)];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = aik.mul_ref(&o[(k, j)]);
                    out[(i, j)] = out[(i, j)].add_ref(&t);
                }
            }
        }
        out
    }

    /// Cofactor expansion along the first row. Exponential; for n <= 6.
    pub fn det_cofactor(&self) -> R {
        let n = self.n;
        if n == 0 {
            return R::one();
        }
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut acc = R::zero();
        for j in 0..n {
            let c = &self[(0, j)];
            if c.is_zero() {
                continue;
            }
            let minor = MatN::from_fn(n - 1, &|r, s| {
                let ss = if s < j { s } else { s + 1 };
                self[(r + 1, ss)].clone()
            });
            let term = c.mul_ref(&minor.det_cofactor());
            acc = if j % 2 == 0 {
                acc.add_ref(&term)
            } else {
                acc.sub_ref(&term)
            };
        }
        acc
    }
}

impl<R: ExactDiv> MatN<R> {
    /// Fraction-free Gaussian elimination (Bareiss). Every division is exact
    /// in the coefficient ring.
    pub fn det_bareiss(&self) -> R {
        let n = self.n;
        if n == 0 {
            return R::one();
        }
        let mut m = self.clone();
        let mut prev = R::one();
        let mut sign = false;
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                // pivot search
                let mut found = None;
                for r in k + 1..n {
                    if !m[(r, k)].is_zero() {
                        found = Some(r);
                        break;
                    }
                }
                match found {
                    None => return R::zero(),
                    Some(r) => {
                        for j in 0..n {
                            let tmp = m[(k, j)].clone();
                            m[(k, j)] = m[(r, j)].clone();
                            m[(r, j)] = tmp;
                        }
                        sign = !sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(k, k)]
                        .mul_ref(&m[(i, j)])
                        .sub_ref(&m[(i, k)].mul_ref(&m[(k, j)]));
                    m[(i, j)] = num
                        .exact_div(&prev)
                        .expect("Bareiss division must be exact");
                }
            }
            for i in k + 1..n {
                m[(i, k)] = R::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if sign {
            d.neg_ref()
        } else {
            d
        }
    }
}

impl<R: Ring> std::ops::Index<(usize, usize)> for MatN<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.n + j]
    }
}

impl<R: Ring> std::ops::IndexMut<(usize, usize)> for MatN<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat_int, Rat};

    #[test]
    fn bareiss_matches_cofactor() {
        let m = MatN::from_fn(4, &|i, j| rat_int((3 * i + 7 * j + (i * j) % 5) as i64 - 4));
        assert_eq!(m.det_bareiss(), m.det_cofactor());
    }

    #[test]
    fn det_permutation_invariance() {
        // simultaneous row/column permutation preserves the determinant
        let m = MatN::from_fn(3, &|i, j| rat_int((i * i + 2 * j + 1) as i64));
        let p = [2usize, 0, 1];
        let mp = MatN::from_fn(3, &|i, j| m[(p[i], p[j])].clone());
        assert_eq!(m.det_cofactor(), mp.det_cofactor());
        let _: Rat = m.det_bareiss();
    }
}

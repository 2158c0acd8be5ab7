//! Dense univariate power series over exact rationals, truncated to a fixed
//! order. Used to expand the transition-point coefficient functions around
//! eta = 0, where the closed forms are 0/0.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Power series sum c[j] x^j, all operations truncated to `len` coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct RatSeries {
    pub c: Vec<BigRational>,
}

impl RatSeries {
    pub fn zero(len: usize) -> Self {
        RatSeries {
            c: vec![BigRational::zero(); len],
        }
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Self {
        RatSeries { c }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn identity(len: usize) -> Self {
        let mut s = Self::zero(len);
        if len > 1 {
            s.c[1] = BigRational::one();
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let mut c = Vec::with_capacity(len);
        for j in 0..len {
            c.push(&self.c[j] + &other.c[j]);
        }
        RatSeries { c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let mut c = Vec::with_capacity(len);
        for j in 0..len {
            c.push(&self.c[j] - &other.c[j]);
        }
        RatSeries { c }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        RatSeries {
            c: self.c.iter().map(|x| x * q).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let mut c = vec![BigRational::zero(); len];
        for i in 0..len {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..len - i {
                if other.c[j].is_zero() {
                    continue;
                }
                c[i + j] += &self.c[i] * &other.c[j];
            }
        }
        RatSeries { c }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Self {
        assert!(!self.c[0].is_zero(), "RatSeries::inverse: zero constant term");
        let len = self.len();
        let mut inv = Self::zero(len);
        inv.c[0] = self.c[0].recip();
        for n in 1..len {
            // coefficient of x^n in self*inv must vanish
            let mut acc = BigRational::zero();
            for k in 0..n {
                acc += &self.c[n - k] * &inv.c[k];
            }
            inv.c[n] = -(acc / &self.c[0]);
        }
        inv
    }

    /// Square root with unit constant term.
    pub fn sqrt_unit(&self) -> Self {
        assert!(self.c[0].is_one(), "RatSeries::sqrt_unit: constant term must be 1");
        let len = self.len();
        let mut r = Self::zero(len);
        r.c[0] = BigRational::one();
        let two = rat(2, 1);
        for n in 1..len {
            // c[n] = (self[n] - sum_{k=1}^{n-1} r[k] r[n-k]) / 2
            let mut acc = self.c[n].clone();
            for k in 1..n {
                acc -= &r.c[k] * &r.c[n - k];
            }
            r.c[n] = acc / &two;
        }
        r
    }

    /// Composition self(g(x)); g must have zero constant term.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(g.c[0].is_zero(), "RatSeries::compose: inner constant term must be 0");
        let len = self.len().min(g.len());
        // Horner over descending coefficients
        let mut acc = Self::zero(len);
        for j in (0..self.len().min(len)).rev() {
            acc = acc.mul(g);
            acc.c[0] += &self.c[j];
        }
        acc
    }

    /// Compositional inverse of a series x + a2 x^2 + ...; returns phi with
    /// self(phi(x)) = x.
    pub fn revert(&self) -> Self {
        assert!(self.c[0].is_zero() && self.c[1].is_one(), "RatSeries::revert: needs x + O(x^2)");
        let len = self.len();
        let mut phi = Self::identity(len);
        for n in 2..len {
            // choose phi[n] so that [x^n] self(phi) = 0
            let comp = self.compose(&phi);
            phi.c[n] = -comp.c[n].clone();
        }
        phi
    }

    /// Integer power (truncated).
    pub fn powi(&self, e: usize) -> Self {
        let mut acc = Self::zero(self.len());
        acc.c[0] = BigRational::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_sqrt() {
        // (1+x)^-1 = 1 - x + x^2 - ...
        let mut s = RatSeries::zero(6);
        s.c[0] = BigRational::one();
        s.c[1] = BigRational::one();
        let inv = s.inverse();
        for j in 0..6 {
            let want = if j % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            assert_eq!(inv.c[j], want);
        }
        // sqrt(1+x) = 1 + x/2 - x^2/8 + x^3/16 - ...
        let r = s.sqrt_unit();
        assert_eq!(r.c[1], rat(1, 2));
        assert_eq!(r.c[2], rat(-1, 8));
        assert_eq!(r.c[3], rat(1, 16));
        assert_eq!(r.mul(&r).c[4], BigRational::zero());
    }

    #[test]
    fn reversion_inverts_composition() {
        // f = x + x^2/3 + x^3/5
        let mut f = RatSeries::identity(10);
        f.c[2] = rat(1, 3);
        f.c[3] = rat(1, 5);
        let phi = f.revert();
        let comp = f.compose(&phi);
        assert_eq!(comp, RatSeries::identity(10));
        let comp2 = phi.compose(&f);
        assert_eq!(comp2, RatSeries::identity(10));
    }
}

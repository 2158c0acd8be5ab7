//! Exact symbolic polynomials in cot w and csc w (and 1/w for the recurrence
//! engine), with rational coefficients. Evaluation substitutes concrete
//! extended-precision values; all symbolic identities stay bit-exact.

use crate::hp::{HPComplex, HPReal, Precision};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub fn rat_to_real(q: &BigRational, prec: Precision) -> HPReal {
    let num = HPReal::from_bigint(q.numer().clone(), prec);
    let den = HPReal::from_bigint(q.denom().clone(), prec);
    &num / &den
}

pub fn rat_to_complex(q: &BigRational, prec: Precision) -> HPComplex {
    HPComplex::from_real(rat_to_real(q, prec))
}

/// Polynomial in C = cot w and S = csc w; key is (cot power, csc power).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TrigPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly::default()
    }

    pub fn constant(q: BigRational) -> Self {
        let mut t = TrigPoly::default();
        if !q.is_zero() {
            t.terms.insert((0, 0), q);
        }
        t
    }

    pub fn constant_i64(n: i64) -> Self {
        Self::constant(BigRational::from(BigInt::from(n)))
    }

    pub fn monomial(cot_pow: u32, csc_pow: u32, q: BigRational) -> Self {
        let mut t = TrigPoly::default();
        if !q.is_zero() {
            t.terms.insert((cot_pow, csc_pow), q);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (u32, u32), q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, q) in &other.terms {
            r.insert_add(*k, q.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, q) in &other.terms {
            r.insert_add(*k, -q.clone());
        }
        r
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return TrigPoly::zero();
        }
        let mut r = TrigPoly::default();
        for (k, c) in &self.terms {
            r.terms.insert(*k, c * q);
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = TrigPoly::default();
        for ((c1, s1), q1) in &self.terms {
            for ((c2, s2), q2) in &other.terms {
                r.insert_add((c1 + c2, s1 + s2), q1 * q2);
            }
        }
        r
    }

    /// Total degree in {C, S} of every monomial, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for ((c, s), _) in &self.terms {
            let d = c + s;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Substitute concrete cot/csc values (with precomputed powers).
    pub fn eval(&self, pows: &TrigPowers) -> HPComplex {
        let prec = pows.prec;
        let mut acc = HPComplex::zero(prec);
        for ((c, s), q) in &self.terms {
            let term = &pows.cot[*c as usize] * &pows.csc[*s as usize];
            acc += &term.scale(&rat_to_real(q, prec));
        }
        acc
    }
}

/// Precomputed powers of cot w and csc w up to the degree the tables need.
pub struct TrigPowers {
    pub cot: Vec<HPComplex>,
    pub csc: Vec<HPComplex>,
    prec: Precision,
}

impl TrigPowers {
    pub fn new(omega: &HPComplex, max_pow: usize) -> crate::Result<Self> {
        let prec = omega.prec();
        let csc1 = omega.csc()?;
        let cot1 = omega.cot()?;
        let mut cot = Vec::with_capacity(max_pow + 1);
        let mut csc = Vec::with_capacity(max_pow + 1);
        cot.push(HPComplex::one(prec));
        csc.push(HPComplex::one(prec));
        for j in 1..=max_pow {
            cot.push(&cot[j - 1] * &cot1);
            csc.push(&csc[j - 1] * &csc1);
        }
        Ok(TrigPowers { cot, csc, prec })
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((c, s), q) in self.terms.iter().rev() {
            let neg = q.is_negative();
            let mag = q.abs();
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
            let mut wrote_coeff = false;
            if !mag.is_one() || (*c == 0 && *s == 0) {
                write!(f, "{mag}")?;
                wrote_coeff = true;
            }
            for (sym, pow) in [("cot", c), ("csc", s)] {
                if *pow > 0 {
                    if wrote_coeff {
                        write!(f, " ")?;
                    }
                    if *pow == 1 {
                        write!(f, "{sym} w")?;
                    } else {
                        write!(f, "{sym}^{pow} w")?;
                    }
                    wrote_coeff = true;
                }
            }
        }
        Ok(())
    }
}

/// Element of the differential ring Q[cot w, csc w, 1/w]; closed under d/dw.
/// Key is (cot power, csc power, 1/w power).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentTrig {
    terms: BTreeMap<(u32, u32, u32), BigRational>,
}

impl LaurentTrig {
    pub fn csc() -> Self {
        let mut t = LaurentTrig::default();
        t.terms.insert((0, 1, 0), BigRational::from(BigInt::from(1)));
        t
    }

    fn insert_add(&mut self, key: (u32, u32, u32), q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (k, q) in &other.terms {
            r.insert_add(*k, q.clone());
        }
        r
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut r = LaurentTrig::default();
        if q.is_zero() {
            return r;
        }
        for (k, c) in &self.terms {
            r.terms.insert(*k, c * q);
        }
        r
    }

    /// Multiply by (1/w)^p.
    pub fn mul_invw(&self, p: u32) -> Self {
        let mut r = LaurentTrig::default();
        for ((c, s, v), q) in &self.terms {
            r.terms.insert((*c, *s, v + p), q.clone());
        }
        r
    }

    /// d/dw, using (cot)' = -csc^2, (csc)' = -csc cot, (w^-p)' = -p w^-(p+1).
    pub fn derivative(&self) -> Self {
        let mut r = LaurentTrig::default();
        for ((c, s, v), q) in &self.terms {
            if *c > 0 {
                r.insert_add((c - 1, s + 2, *v), q * BigRational::from(BigInt::from(-(*c as i64))));
            }
            if *s > 0 {
                r.insert_add((c + 1, *s, *v), q * BigRational::from(BigInt::from(-(*s as i64))));
            }
            if *v > 0 {
                r.insert_add((*c, *s, v + 1), q * BigRational::from(BigInt::from(-(*v as i64))));
            }
        }
        r
    }

    /// Coefficient of (1/w)^v as a TrigPoly, after dividing out one csc
    /// factor. Panics if any matching term lacks the csc factor.
    pub fn invw_coefficient_over_csc(&self, v: u32) -> TrigPoly {
        let mut out = TrigPoly::zero();
        for ((c, s, vv), q) in &self.terms {
            if *vv == v {
                assert!(*s >= 1, "term without csc factor: cot^{c} csc^{s} w^-{vv}");
                out = out.add(&TrigPoly::monomial(*c, s - 1, q.clone()));
            }
        }
        out
    }

    pub fn max_invw_power(&self) -> u32 {
        self.terms.keys().map(|(_, _, v)| *v).max().unwrap_or(0)
    }

    /// Substitute a concrete omega.
    pub fn eval(&self, omega: &HPComplex) -> crate::Result<HPComplex> {
        let prec = omega.prec();
        let max_c = self.terms.keys().map(|(c, _, _)| *c).max().unwrap_or(0);
        let max_s = self.terms.keys().map(|(_, s, _)| *s).max().unwrap_or(0);
        let pows = TrigPowers::new(omega, max_c.max(max_s).max(1) as usize)?;
        let inv = omega.inv();
        let mut acc = HPComplex::zero(prec);
        for ((c, s, v), q) in &self.terms {
            let mut term = &pows.cot[*c as usize] * &pows.csc[*s as usize];
            for _ in 0..*v {
                term = &term * &inv;
            }
            acc += &term.scale(&rat_to_real(q, prec));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::series::rat;

    #[test]
    fn derivative_of_csc() {
        // (csc)' = -csc cot
        let d = LaurentTrig::csc().derivative();
        let mut want = LaurentTrig::default();
        want.terms.insert((1, 1, 0), rat(-1, 1));
        assert_eq!(d, want);
    }

    #[test]
    fn homogeneity() {
        let p = TrigPoly::monomial(2, 0, rat(1, 1)).add(&TrigPoly::monomial(0, 2, rat(1, 1)));
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = p.add(&TrigPoly::constant_i64(3));
        assert_eq!(q.homogeneous_degree(), None);
    }

    #[test]
    fn display_reads_naturally() {
        let p = TrigPoly::monomial(2, 0, rat(1, 1))
            .add(&TrigPoly::monomial(0, 2, rat(1, 1)))
            .add(&TrigPoly::monomial(1, 0, rat(-1, 2)));
        assert_eq!(format!("{p}"), "cot^2 w - 1/2 cot w + csc^2 w");
    }
}

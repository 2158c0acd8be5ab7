//! Extended-precision complex scalar and its elementary functions.
//!
//! Branch conventions are fixed globally: `ln` has imaginary part in
//! (-pi, pi], and `sqrt` maps into the closed right half-plane plus the
//! positive imaginary axis. Every downstream branch choice assumes these.

use super::elem;
use super::real::{HPReal, Precision};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct HPComplex {
    pub re: HPReal,
    pub im: HPReal,
}

impl HPComplex {
    pub fn new(re: HPReal, im: HPReal) -> Self {
        assert_eq!(
            re.prec_bits(),
            im.prec_bits(),
            "HPComplex: component precisions differ"
        );
        HPComplex { re, im }
    }

    pub fn zero(prec: Precision) -> Self {
        HPComplex::new(HPReal::zero(prec), HPReal::zero(prec))
    }

    pub fn one(prec: Precision) -> Self {
        HPComplex::new(HPReal::one(prec), HPReal::zero(prec))
    }

    pub fn i(prec: Precision) -> Self {
        HPComplex::new(HPReal::zero(prec), HPReal::one(prec))
    }

    pub fn from_real(re: HPReal) -> Self {
        let p = re.prec();
        HPComplex::new(re, HPReal::zero(p))
    }

    pub fn from_i64(re: i64, im: i64, prec: Precision) -> Self {
        HPComplex::new(HPReal::from_i64(re, prec), HPReal::from_i64(im, prec))
    }

    pub fn prec(&self) -> Precision {
        self.re.prec()
    }

    pub fn with_prec(&self, prec: Precision) -> Self {
        HPComplex::new(self.re.with_prec(prec), self.im.with_prec(prec))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        HPComplex::new(self.re.clone(), -&self.im)
    }

    /// Multiplication by i.
    pub fn mul_i(&self) -> Self {
        HPComplex::new(-&self.im, self.re.clone())
    }

    pub fn scale(&self, k: &HPReal) -> Self {
        HPComplex::new(&self.re * k, &self.im * k)
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        HPComplex::new(self.re.mul_i64(k), self.im.mul_i64(k))
    }

    pub fn div_i64(&self, k: i64) -> Self {
        HPComplex::new(self.re.div_i64(k), self.im.div_i64(k))
    }

    pub fn scale2(&self, k: i64) -> Self {
        HPComplex::new(self.re.scale2(k), self.im.scale2(k))
    }

    pub fn norm_sqr(&self) -> HPReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> HPReal {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> HPReal {
        elem::atan2(&self.im, &self.re)
    }

    /// floor(log2 |z|) up to one bit, for magnitude decisions.
    pub fn mag2(&self) -> i64 {
        self.re.mag2().max(self.im.mag2())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "HPComplex::inv of zero");
        let n = self.norm_sqr();
        HPComplex::new(&self.re / &n, -&(&self.im / &n))
    }

    // ---- elementary functions ----

    pub fn exp(&self) -> Self {
        let er = elem::exp(&self.re);
        let (s, c) = elem::sincos(&self.im);
        HPComplex::new(&er * &c, &er * &s)
    }

    /// Principal logarithm; imaginary part in (-pi, pi].
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("log", "log(0) is undefined"));
        }
        let n = self.norm_sqr();
        let ln_abs = elem::ln(&n).scale2(-1);
        Ok(HPComplex::new(ln_abs, self.arg()))
    }

    /// Principal square root: range is Re >= 0 plus the positive imaginary
    /// axis for negative real input.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let p = self.prec();
        let wp = p.raised(8);
        let zw = self.with_prec(wp);
        let m = zw.abs().sqrt();
        let half_arg = zw.arg().scale2(-1);
        let (s, c) = elem::sincos(&half_arg);
        HPComplex::new((&m * &c).with_prec(p), (&m * &s).with_prec(p))
    }

    pub fn sin(&self) -> Self {
        let (s, c) = elem::sincos(&self.re);
        let (sh, ch) = sinh_cosh(&self.im);
        HPComplex::new(&s * &ch, &c * &sh)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = elem::sincos(&self.re);
        let (sh, ch) = sinh_cosh(&self.im);
        HPComplex::new(&c * &ch, -&(&s * &sh))
    }

    /// csc z = 1/sin z; errors if sin z vanishes at working precision.
    pub fn csc(&self) -> Result<Self> {
        let s = self.sin();
        if s.is_zero() {
            return Err(Error::CscPole);
        }
        Ok(s.inv())
    }

    /// cot z = cos z / sin z; errors if sin z vanishes at working precision.
    pub fn cot(&self) -> Result<Self> {
        let s = self.sin();
        if s.is_zero() {
            return Err(Error::CscPole);
        }
        Ok(&self.cos() / &s)
    }

    /// Principal power z^w = exp(w ln z); z must be nonzero.
    pub fn powc(&self, w: &HPComplex) -> Result<Self> {
        Ok((w * &self.ln()?).exp())
    }

    /// Small non-negative integer power by repeated squaring.
    pub fn powu(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = HPComplex::one(self.prec());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

fn sinh_cosh(x: &HPReal) -> (HPReal, HPReal) {
    let p = x.prec();
    if x.is_zero() {
        return (HPReal::zero(p), HPReal::one(p));
    }
    let e = elem::exp(x);
    let ei = &HPReal::one(p) / &e;
    ((&e - &ei).scale2(-1), (&e + &ei).scale2(-1))
}

/// Unary elementary-function selector (the csc/cot entries can fail at a
/// cosecant pole; log and sqrt reject zero where applicable).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ElementaryFn {
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    Csc,
    Cot,
}

/// Tag-dispatched elementary evaluation at working precision.
pub fn complex_elementary(z: &HPComplex, f: ElementaryFn) -> Result<HPComplex> {
    match f {
        ElementaryFn::Exp => Ok(z.exp()),
        ElementaryFn::Log => z.ln(),
        ElementaryFn::Sqrt => Ok(z.sqrt()),
        ElementaryFn::Sin => Ok(z.sin()),
        ElementaryFn::Cos => Ok(z.cos()),
        ElementaryFn::Csc => z.csc(),
        ElementaryFn::Cot => z.cot(),
    }
}

/// The root of pi*s/(2i) with non-negative real part.
///
/// For s = 1/2 + it this is the frequency omega of the correction term; its
/// imaginary part is small and negative, consistent with the factorization
/// omega/pi = (t/2pi)^(1/2) (1 - i/(2t))^(1/2).
pub fn omega_of_s(s: &HPComplex) -> HPComplex {
    let p = s.prec();
    // pi * s / (2i) = pi * (-i s) / 2
    let w2 = s.mul_i().scale_i64(-1).scale(&super::consts::pi(p)).scale2(-1);
    w2.sqrt()
}

macro_rules! forward_cbinop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl std::ops::$trait<&HPComplex> for &HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: &HPComplex) -> HPComplex {
                self.$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<HPComplex> for HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: HPComplex) -> HPComplex {
                (&self).$impl_fn(&rhs)
            }
        }
        impl std::ops::$trait<&HPComplex> for HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: &HPComplex) -> HPComplex {
                (&self).$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<HPComplex> for &HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: HPComplex) -> HPComplex {
                self.$impl_fn(&rhs)
            }
        }
    };
}

impl HPComplex {
    fn add_impl(&self, rhs: &Self) -> Self {
        HPComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        HPComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        HPComplex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }

    fn div_impl(&self, rhs: &Self) -> Self {
        let n = rhs.norm_sqr();
        assert!(!n.is_zero(), "HPComplex: division by zero");
        let re = &(&self.re * &rhs.re) + &(&self.im * &rhs.im);
        let im = &(&self.im * &rhs.re) - &(&self.re * &rhs.im);
        HPComplex::new(&re / &n, &im / &n)
    }
}

forward_cbinop!(Add, add, add_impl);
forward_cbinop!(Sub, sub, sub_impl);
forward_cbinop!(Mul, mul, mul_impl);
forward_cbinop!(Div, div, div_impl);

impl std::ops::Neg for &HPComplex {
    type Output = HPComplex;
    fn neg(self) -> HPComplex {
        HPComplex::new(-&self.re, -&self.im)
    }
}

impl std::ops::Neg for HPComplex {
    type Output = HPComplex;
    fn neg(self) -> HPComplex {
        -&self
    }
}

impl std::ops::AddAssign<&HPComplex> for HPComplex {
    fn add_assign(&mut self, rhs: &HPComplex) {
        *self = self.add_impl(rhs);
    }
}

impl fmt::Debug for HPComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?} i)", self.re, self.im)
    }
}

impl fmt::Display for HPComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

//! Arbitrary-precision binary floating point built on `BigInt`.
//!
//! A nonzero value is `mant * 2^exp` with the mantissa normalized to exactly
//! `prec` bits, so one ulp is `2^exp`. Every arithmetic operation rounds to
//! the operand precision and is accurate to well under 2 ulp. Operands of
//! different precision must not be mixed; use [`HPReal::with_prec`] to move a
//! value between evaluation contexts explicitly.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Working precision of an evaluation context.
///
/// Constructed from decimal digits; carries binary guard bits so that all
/// `digits` decimal places survive rounding at the edges.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub struct Precision {
    bits: u32,
    digits: u32,
}

/// log2(10), rounded up a little.
const LOG2_10: f64 = 3.321928094887363;
const GUARD_BITS: u32 = 16;

impl Precision {
    /// Precision holding `digits` significant decimal digits.
    pub fn from_digits(digits: u32) -> Self {
        let digits = digits.max(4);
        let bits = (digits as f64 * LOG2_10).ceil() as u32 + GUARD_BITS;
        Precision { bits, digits }
    }

    /// Raw binary precision (used for internally elevated computations).
    pub fn from_bits(bits: u32) -> Self {
        let bits = bits.max(16);
        Precision {
            bits,
            digits: ((bits - GUARD_BITS.min(bits / 2)) as f64 / LOG2_10).floor() as u32,
        }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn digits(self) -> u32 {
        self.digits
    }

    /// Same precision with `extra` additional guard bits.
    pub fn raised(self, extra: u32) -> Self {
        Precision::from_bits(self.bits + extra)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::from_digits(40)
    }
}

/// Extended-precision real scalar.
#[derive(Clone)]
pub struct HPReal {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl HPReal {
    // ---- constructors ----

    pub fn zero(prec: Precision) -> Self {
        HPReal {
            mant: BigInt::zero(),
            exp: 0,
            prec: prec.bits(),
        }
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: Precision) -> Self {
        Self::normalized(BigInt::from(v), 0, prec.bits())
    }

    pub fn from_u32(v: u32, prec: Precision) -> Self {
        Self::normalized(BigInt::from(v), 0, prec.bits())
    }

    pub fn from_bigint(v: BigInt, prec: Precision) -> Self {
        Self::normalized(v, 0, prec.bits())
    }

    /// `v * 2^exp`, rounded to `prec`.
    pub fn from_scaled_bigint(v: BigInt, exp: i64, prec: Precision) -> Self {
        Self::normalized(v, exp, prec.bits())
    }

    /// Exact conversion of a finite `f64` (then rounded to `prec`).
    pub fn from_f64(v: f64, prec: Precision) -> Self {
        assert!(v.is_finite(), "HPReal::from_f64: non-finite input");
        if v == 0.0 {
            return Self::zero(prec);
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Self::normalized(BigInt::from(sign * mant as i64), exp, prec.bits())
    }

    fn normalized(mut mant: BigInt, mut exp: i64, prec: u32) -> Self {
        if mant.is_zero() {
            return HPReal {
                mant,
                exp: 0,
                prec,
            };
        }
        let nbits = mant.magnitude().bits() as i64;
        let target = prec as i64;
        if nbits > target {
            let drop = (nbits - target) as u64;
            let (sign, mag) = (mant.sign(), mant.magnitude().clone());
            let mut q: BigUint = &mag >> drop;
            // round half away from zero on the dropped bits
            if (&mag >> (drop - 1)).bit(0) {
                q += 1u32;
            }
            exp += drop as i64;
            if q.bits() as i64 > target {
                q >>= 1;
                exp += 1;
            }
            mant = BigInt::from_biguint(sign, q);
        } else if nbits < target {
            let up = (target - nbits) as u64;
            mant <<= up;
            exp -= up as i64;
        }
        HPReal { mant, exp, prec }
    }

    // ---- accessors ----

    pub fn prec(&self) -> Precision {
        Precision::from_bits(self.prec)
    }

    pub fn prec_bits(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// floor(log2 |v|), or `i64::MIN` for zero.
    pub fn mag2(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.prec as i64 - 1
        }
    }

    /// Re-round to a different working precision (the one sanctioned way to
    /// cross evaluation contexts).
    pub fn with_prec(&self, prec: Precision) -> Self {
        Self::normalized(self.mant.clone(), self.exp, prec.bits())
    }

    pub fn abs(&self) -> Self {
        HPReal {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// Exact multiplication by 2^k.
    pub fn scale2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        HPReal {
            mant: self.mant.clone(),
            exp: self.exp + k,
            prec: self.prec,
        }
    }

    fn check_prec(&self, other: &Self, op: &str) {
        assert_eq!(
            self.prec, other.prec,
            "HPReal {op}: mixing evaluation contexts ({} vs {} bits)",
            self.prec, other.prec
        );
    }

    // ---- arithmetic cores ----

    fn add_impl(&self, other: &Self) -> Self {
        self.check_prec(other, "add");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.exp <= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let shift = hi.exp - lo.exp;
        if shift > self.prec as i64 + 4 {
            // the small operand is far below one ulp of the large one
            return hi.clone();
        }
        let mant = &lo.mant + (&hi.mant << shift as u64);
        Self::normalized(mant, lo.exp, self.prec)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_prec(other, "mul");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.prec());
        }
        Self::normalized(&self.mant * &other.mant, self.exp + other.exp, self.prec)
    }

    fn div_impl(&self, other: &Self) -> Self {
        self.check_prec(other, "div");
        assert!(!other.is_zero(), "HPReal: division by zero");
        if self.is_zero() {
            return Self::zero(self.prec());
        }
        let shift = self.prec as u64 + 3;
        let q = (&self.mant << shift) / &other.mant;
        Self::normalized(q, self.exp - other.exp - shift as i64, self.prec)
    }

    /// Multiply by a small integer (exact up to rounding).
    pub fn mul_i64(&self, k: i64) -> Self {
        Self::normalized(&self.mant * k, self.exp, self.prec)
    }

    /// Divide by a small nonzero integer.
    pub fn div_i64(&self, k: i64) -> Self {
        assert!(k != 0, "HPReal: division by zero");
        if self.is_zero() {
            return self.clone();
        }
        let shift = 3u64;
        let q = (&self.mant << shift) / k;
        Self::normalized(q, self.exp - shift as i64, self.prec)
    }

    /// Square root, round half plane. Panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "HPReal::sqrt of negative value");
        if self.is_zero() {
            return self.clone();
        }
        let mut mag = self.mant.magnitude().clone();
        let mut exp = self.exp;
        // pad so the integer sqrt carries ~prec+2 bits and the exponent is even
        let want = 2 * (self.prec as i64 + 2);
        let nbits = mag.bits() as i64;
        let mut up = (want - nbits).max(0);
        if (exp - up) % 2 != 0 {
            up += 1;
        }
        mag <<= up as u64;
        exp -= up;
        let root = mag.sqrt();
        // round to nearest against the remainder
        let rem = &mag - &root * &root;
        let mut root = root;
        if rem > &root << 1u32 {
            root += 1u32;
        }
        Self::normalized(BigInt::from_biguint(Sign::Plus, root), exp / 2, self.prec)
    }

    // ---- integer extraction ----

    /// Largest integer not exceeding the value.
    pub fn floor_bigint(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        if self.exp >= 0 {
            return &self.mant << self.exp as u64;
        }
        let shift = (-self.exp) as u64;
        let mag = self.mant.magnitude();
        if shift >= mag.bits() {
            // |v| < 1
            return if self.is_negative() {
                BigInt::from(-1)
            } else {
                BigInt::zero()
            };
        }
        let q: BigUint = mag >> shift;
        if self.is_negative() {
            let exact = (&q << shift) == *mag;
            let neg = -BigInt::from_biguint(Sign::Plus, q);
            if exact {
                neg
            } else {
                neg - 1
            }
        } else {
            BigInt::from_biguint(Sign::Plus, q)
        }
    }

    /// log10 of the magnitude as `f64`, valid far outside the `f64` exponent
    /// range (for decay diagnostics and slope fits).
    pub fn log10_abs(&self) -> f64 {
        assert!(!self.is_zero(), "log10_abs of zero");
        let bits = self.mant.magnitude().bits();
        let take = bits.min(53);
        let top: BigUint = self.mant.magnitude() >> (bits - take);
        let mut t = 0u64;
        for d in top.to_u64_digits() {
            t = d;
        }
        let l2 = (bits - take) as f64 + (t as f64).log2() + self.exp as f64;
        l2 * std::f64::consts::LOG10_2
    }

    /// Nearest integer (ties away from zero).
    pub fn round_bigint(&self) -> BigInt {
        let half = HPReal::normalized(BigInt::from(1), -1, self.prec);
        if self.is_negative() {
            (self - &half).ceil_bigint()
        } else {
            (self + &half).floor_bigint()
        }
    }

    fn ceil_bigint(&self) -> BigInt {
        -((-self).floor_bigint())
    }

    pub fn round_i64(&self) -> i64 {
        let b = self.round_bigint();
        i64::try_from(&b).expect("HPReal::round_i64: out of range")
    }

    /// Approximate conversion for diagnostics (not used in result paths).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.magnitude().bits();
        let take = bits.min(53);
        let top: BigUint = self.mant.magnitude() >> (bits - take);
        let mut v = 0f64;
        for d in top.to_u64_digits() {
            // single digit since take <= 53
            v = d as f64;
        }
        let e = self.exp + (bits - take) as i64;
        let r = v * 2f64.powi(e.clamp(-2000, 2000) as i32);
        if self.is_negative() {
            -r
        } else {
            r
        }
    }

    /// floor(log10 |v|) approximately (exact to +-1), for magnitude logic.
    pub fn mag10(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN;
        }
        (self.mag2() as f64 / LOG2_10).floor() as i64
    }

    pub(crate) fn raw_parts(&self) -> (&BigInt, i64) {
        (&self.mant, self.exp)
    }

    /// Decimal rendering with the given number of significant figures.
    pub fn to_decimal(&self, digits: u32) -> String {
        super::decimal::to_decimal(self, digits)
    }

    /// Parse a decimal string at the given precision.
    pub fn parse(s: &str, prec: Precision) -> crate::error::Result<Self> {
        super::decimal::parse_decimal(s, prec)
    }
}

impl PartialEq for HPReal {
    fn eq(&self, other: &Self) -> bool {
        self.mant == other.mant && (self.is_zero() || self.exp == other.exp)
    }
}

impl PartialOrd for HPReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_impl(other))
    }
}

impl HPReal {
    fn cmp_impl(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // same nonzero sign; both mantissas have exactly `prec` bits,
        // so the exponent orders the magnitude first
        let mag_ord = if self.prec == other.prec {
            match self.exp.cmp(&other.exp) {
                Ordering::Equal => self.mant.magnitude().cmp(other.mant.magnitude()),
                o => o,
            }
        } else {
            self.mag2()
                .cmp(&other.mag2())
                .then_with(|| (self - &other.with_prec(self.prec())).signum().cmp(&0))
        };
        if sa > 0 {
            mag_ord
        } else {
            mag_ord.reverse()
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl std::ops::$trait<&HPReal> for &HPReal {
            type Output = HPReal;
            fn $method(self, rhs: &HPReal) -> HPReal {
                self.$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<HPReal> for HPReal {
            type Output = HPReal;
            fn $method(self, rhs: HPReal) -> HPReal {
                (&self).$impl_fn(&rhs)
            }
        }
        impl std::ops::$trait<&HPReal> for HPReal {
            type Output = HPReal;
            fn $method(self, rhs: &HPReal) -> HPReal {
                (&self).$impl_fn(rhs)
            }
        }
        impl std::ops::$trait<HPReal> for &HPReal {
            type Output = HPReal;
            fn $method(self, rhs: HPReal) -> HPReal {
                self.$impl_fn(&rhs)
            }
        }
    };
}

impl HPReal {
    fn sub_impl(&self, other: &Self) -> Self {
        self.add_impl(&(-other))
    }
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl std::ops::Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

impl std::ops::Neg for HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        -&self
    }
}

impl std::ops::AddAssign<&HPReal> for HPReal {
    fn add_assign(&mut self, rhs: &HPReal) {
        *self = self.add_impl(rhs);
    }
}

impl std::ops::SubAssign<&HPReal> for HPReal {
    fn sub_assign(&mut self, rhs: &HPReal) {
        *self = self.sub_impl(rhs);
    }
}

impl fmt::Debug for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPReal({} @{}b)", self.to_decimal(20), self.prec)
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(self.prec().digits()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p40() -> Precision {
        Precision::from_digits(40)
    }

    #[test]
    fn basic_arithmetic() {
        let p = p40();
        let a = HPReal::from_i64(3, p);
        let b = HPReal::from_i64(7, p);
        assert_eq!(&a + &b, HPReal::from_i64(10, p));
        assert_eq!(&a - &b, HPReal::from_i64(-4, p));
        assert_eq!(&a * &b, HPReal::from_i64(21, p));
        let q = &HPReal::from_i64(1, p) / &HPReal::from_i64(3, p);
        let back = q.mul_i64(3);
        let err = (&back - &HPReal::one(p)).abs();
        assert!(err.mag2() < -(p.bits() as i64) + 3, "1/3*3 err {err:?}");
    }

    #[test]
    fn sqrt_exact_and_rounded() {
        let p = p40();
        assert_eq!(HPReal::from_i64(144, p).sqrt(), HPReal::from_i64(12, p));
        let two = HPReal::from_i64(2, p);
        let r = two.sqrt();
        let err = (&(&r * &r) - &two).abs();
        assert!(err.mag2() < -(p.bits() as i64) + 4);
    }

    #[test]
    fn floor_and_round() {
        let p = p40();
        let x = &HPReal::from_i64(7, p) / &HPReal::from_i64(2, p); // 3.5
        assert_eq!(x.floor_bigint(), BigInt::from(3));
        assert_eq!(x.round_bigint(), BigInt::from(4));
        let y = -&x;
        assert_eq!(y.floor_bigint(), BigInt::from(-4));
        assert_eq!(y.round_bigint(), BigInt::from(-4));
    }

    #[test]
    fn ordering() {
        let p = p40();
        let a = HPReal::from_f64(1.5, p);
        let b = HPReal::from_f64(1.25, p);
        assert!(a > b);
        assert!(-&a < b);
        assert!(HPReal::zero(p) < b);
    }

    #[test]
    #[should_panic(expected = "mixing evaluation contexts")]
    fn context_mixing_panics() {
        let a = HPReal::one(Precision::from_digits(40));
        let b = HPReal::one(Precision::from_digits(50));
        let _ = &a + &b;
    }

    #[test]
    fn far_apart_addition() {
        let p = p40();
        let big = HPReal::from_f64(1e30, p);
        let small = HPReal::from_f64(1e-40, p);
        assert_eq!(&big + &small, big);
    }
}

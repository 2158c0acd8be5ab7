//! Complementary error function for complex argument, entire-function
//! accurate at working precision, plus the modified form erfc(z; m) with the
//! first m asymptotic terms removed (the smoothing kernel of the main sum).
//!
//! Strategy: reflect into Re z >= 0, then either sum the asymptotic tail
//! directly when its minimum term reaches target precision (the remainder
//! form), or fall back to the power series at an internally elevated
//! precision sized to the known cancellation budget of roughly
//! |z|^2 + Re z^2 bits plus the 2m log2|z| bits lost to the kernel
//! subtraction.

use crate::error::{Error, Result};
use crate::hp::{consts, HPComplex, HPReal, Precision};

/// exp(-z^2) with relative accuracy at `prec` (the square is formed at a
/// precision covering its own magnitude, since d(e^w) = e^w dw).
fn exp_minus_z_sq(z: &HPComplex, prec: Precision) -> HPComplex {
    let guard = 8 + 2 * z.mag2().max(0) as u32;
    let zw = z.with_prec(prec.raised(guard));
    (-&(&zw * &zw)).exp().with_prec(prec)
}

/// Asymptotic tail sum_{r>=m} (-1)^r (1/2)_r z^(-2r-1), accepted only when
/// the terms shrink below 2^-(bits+6) relative to the leading tail term
/// before they start growing again.
fn asymptotic_tail(z: &HPComplex, m: usize, prec: Precision) -> Option<HPComplex> {
    let bits = prec.bits() as i64;
    let zinv = z.inv();
    let zinv2 = &zinv * &zinv;
    // leading term (-1)^m (1/2)_m z^(-2m-1)
    let mut term = zinv.clone();
    for r in 0..m {
        term = (&term * &zinv2).scale_i64(-(2 * r as i64 + 1)).scale2(-1);
    }
    let first_mag = term.mag2();
    let mut acc = term.clone();
    let mut r = m as i64;
    loop {
        let prev = term.mag2();
        term = (&term * &zinv2).scale_i64(-(2 * r + 1)).scale2(-1);
        let cur = term.mag2();
        if cur >= prev {
            return None; // divergence reached before target precision
        }
        acc += &term;
        if cur < first_mag - bits - 6 {
            return Some(acc);
        }
        r += 1;
    }
}

/// Power-series evaluation of erfc at elevated precision:
/// erfc(z) = 1 - (2/sqrt(pi)) sum (-1)^n z^(2n+1) / (n! (2n+1)).
fn erfc_series(z: &HPComplex, prec: Precision) -> HPComplex {
    // cancellation budget: the largest series term is ~e^{|z|^2} while the
    // result can be as small as ~e^{-Re z^2}
    let zf = z.norm_sqr().to_f64();
    let re2 = {
        let w = &z.re * &z.re;
        let v = &w - &(&z.im * &z.im);
        v.to_f64().max(0.0)
    };
    let boost = (1.4427 * (zf + re2)).ceil() as u32 + 32;
    let wp = prec.raised(boost);
    let zw = z.with_prec(wp);
    let z2 = &zw * &zw;
    let mut term = zw.clone();
    let mut acc = zw.clone().div_i64(1); // n = 0 contribution z/(0! * 1)
    let bits = wp.bits() as i64;
    let mut n: i64 = 1;
    loop {
        term = (&term * &z2).div_i64(-n);
        let add = term.div_i64(2 * n + 1);
        acc += &add;
        if add.mag2() < -bits + acc.mag2().min(0) - 4 && n as f64 > zf {
            break;
        }
        n += 1;
    }
    let two_over_sqrt_pi = {
        let sp = consts::pi(wp).sqrt();
        &HPReal::from_i64(2, wp) / &sp
    };
    let erf = acc.scale(&two_over_sqrt_pi);
    (&HPComplex::one(wp) - &erf).with_prec(prec)
}

/// erfc(z) for any complex z, correct at working precision.
pub fn erfc_complex(z: &HPComplex) -> HPComplex {
    let prec = z.prec();
    if z.is_zero() {
        return HPComplex::one(prec);
    }
    if z.re.is_negative() {
        let r = erfc_complex(&-z);
        return &HPComplex::from_i64(2, 0, prec) - &r;
    }
    if let Some(tail) = asymptotic_tail(z, 0, prec.raised(8)) {
        let wp = prec.raised(8);
        let kernel = exp_minus_z_sq(z, wp);
        let inv_sqrt_pi = HPReal::one(wp) / consts::pi(wp).sqrt();
        return (&kernel * &tail.with_prec(wp)).scale(&inv_sqrt_pi).with_prec(prec);
    }
    erfc_series(z, prec)
}

/// erfc(z; m): erfc z with the first m terms of its large-|z| expansion
/// deleted. Requires z != 0 and m >= 1; satisfies erfc(-z; m) = 2 - erfc(z; m).
pub fn erfc_m(z: &HPComplex, m: usize) -> Result<HPComplex> {
    if m == 0 {
        return Err(Error::UnsupportedIndex {
            name: "m",
            value: 0,
            max: usize::MAX,
        });
    }
    if z.is_zero() {
        return Err(Error::domain("erfc_m", "z = 0 is excluded"));
    }
    let prec = z.prec();
    if z.re.is_negative() {
        let r = erfc_m(&-z, m)?;
        return Ok(&HPComplex::from_i64(2, 0, prec) - &r);
    }
    let wp = prec.raised(16 + 2 * z.mag2().max(0) as u32);
    let zw = z.with_prec(wp);
    if let Some(tail) = asymptotic_tail(&zw, m, prec.raised(8)) {
        let kernel = exp_minus_z_sq(&zw, wp);
        let inv_sqrt_pi = HPReal::one(wp) / consts::pi(wp).sqrt();
        return Ok((&kernel * &tail).scale(&inv_sqrt_pi).with_prec(prec));
    }
    // subtraction route: erfc(z) - kernel * sum_{r<m} (-1)^r (1/2)_r z^(-2r-1),
    // with extra bits for the digits the subtraction destroys
    let zf = z.norm_sqr().to_f64().max(1.0);
    let sub_bits = (m as f64 * zf.log2()).ceil() as u32 + 32;
    let swp = prec.raised(sub_bits);
    let zs = z.with_prec(swp);
    let zinv = zs.inv();
    let zinv2 = &zinv * &zinv;
    let mut term = zinv.clone();
    let mut partial = zinv.clone();
    for r in 0..m - 1 {
        term = (&term * &zinv2).scale_i64(-(2 * r as i64 + 1)).scale2(-1);
        partial += &term;
    }
    let kernel = exp_minus_z_sq(&zs, swp);
    let inv_sqrt_pi = HPReal::one(swp) / consts::pi(swp).sqrt();
    let head = (&kernel * &partial).scale(&inv_sqrt_pi);
    let full = erfc_complex(&zs);
    Ok((&full - &head).with_prec(prec))
}

//! Elementary transcendental functions on [`HPReal`].
//!
//! Everything is argument reduction plus a Taylor (or atanh) series whose
//! truncation point is chosen from the geometric decay of the terms, so the
//! tail is provably below the working precision. Internal computations carry
//! extra guard bits and the result is rounded back to the input precision.

use super::consts;
use super::real::HPReal;

/// e^x.
pub fn exp(x: &HPReal) -> HPReal {
    let p = x.prec();
    if x.is_zero() {
        return HPReal::one(p);
    }
    let wp = p.raised(48);
    // reduce x = k ln2 + r, |r| <= ln2/2; the subtraction needs the
    // magnitude of k in extra bits to keep r accurate
    let kbits = (x.mag2().max(0) + 4) as u32;
    let rp = wp.raised(kbits);
    let xr = x.with_prec(rp);
    let k = (&xr / &consts::ln2(rp)).round_i64();
    let r = (&xr - &consts::ln2(rp).mul_i64(k)).with_prec(wp);
    // halve the argument so the series needs ~prec/10 terms
    const H: i64 = 10;
    let rs = r.scale2(-H);
    let mut term = HPReal::one(wp);
    let mut sum = HPReal::one(wp);
    let mut n: i64 = 1;
    loop {
        term = (&term * &rs).div_i64(n);
        sum += &term;
        if term.is_zero() || term.mag2() < -(wp.bits() as i64) - 4 {
            break;
        }
        n += 1;
    }
    let mut y = sum;
    for _ in 0..H {
        y = &y * &y;
    }
    y.scale2(k).with_prec(p)
}

/// Natural logarithm; requires x > 0.
pub fn ln(x: &HPReal) -> HPReal {
    assert!(x.is_positive(), "ln: requires a positive argument");
    let p = x.prec();
    let wp = p.raised(32);
    // x = u * 2^k, u in [1, 2); ln u = 2 atanh((u-1)/(u+1)) with ratio < 1/9
    let k = x.mag2();
    let u = x.scale2(-k).with_prec(wp);
    let one = HPReal::one(wp);
    let v = &(&u - &one) / &(&u + &one);
    let v2 = &v * &v;
    let mut term = v.clone();
    let mut sum = v.clone();
    let mut n: i64 = 1;
    loop {
        term = &term * &v2;
        let add = term.div_i64(2 * n + 1);
        if add.is_zero() {
            break;
        }
        sum += &add;
        if add.mag2() + (wp.bits() as i64) + 2 < sum.mag2() {
            break;
        }
        n += 1;
    }
    let ln_u = sum.scale2(1);
    let r = if k == 0 {
        ln_u
    } else {
        &ln_u + &consts::ln2(wp).mul_i64(k)
    };
    r.with_prec(p)
}

/// sin and cos of a reduced argument |r| <= pi/4 + eps.
fn taylor_sincos(r: &HPReal) -> (HPReal, HPReal) {
    let wp = r.prec();
    let bits = wp.bits() as i64;
    let r2 = r * r;
    // sin
    let mut term = r.clone();
    let mut s = r.clone();
    let mut n: i64 = 1;
    loop {
        term = (&term * &r2).div_i64(-(2 * n) * (2 * n + 1));
        s += &term;
        if term.is_zero() || term.mag2() < -bits - 4 {
            break;
        }
        n += 1;
    }
    // cos
    let mut term = HPReal::one(wp);
    let mut c = HPReal::one(wp);
    let mut n: i64 = 1;
    loop {
        term = (&term * &r2).div_i64(-(2 * n - 1) * (2 * n));
        c += &term;
        if term.is_zero() || term.mag2() < -bits - 4 {
            break;
        }
        n += 1;
    }
    (s, c)
}

/// (sin x, cos x) with full-precision range reduction modulo pi/2.
pub fn sincos(x: &HPReal) -> (HPReal, HPReal) {
    let p = x.prec();
    if x.is_zero() {
        return (HPReal::zero(p), HPReal::one(p));
    }
    // reduction loses ~mag2(x) bits; carry them as extra guard
    let extra = (x.mag2().max(0) + 8) as u32;
    let wp = p.raised(32 + extra);
    let half_pi = consts::pi(wp).scale2(-1);
    let xw = x.with_prec(wp);
    let qb = (&xw / &half_pi).round_bigint();
    let quadrant: i64 = {
        let m = (&qb % 4i32 + 4i32) % 4i32;
        i64::try_from(&m).unwrap()
    };
    let r = (&xw - &(HPReal::from_bigint(qb, wp) * &half_pi)).with_prec(p.raised(32));
    let (s, c) = taylor_sincos(&r);
    let (sv, cv) = match quadrant {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    };
    (sv.with_prec(p), cv.with_prec(p))
}

pub fn sin(x: &HPReal) -> HPReal {
    sincos(x).0
}

pub fn cos(x: &HPReal) -> HPReal {
    sincos(x).1
}

/// arctangent by angle halving then a short Taylor series.
pub fn atan(x: &HPReal) -> HPReal {
    let p = x.prec();
    if x.is_zero() {
        return HPReal::zero(p);
    }
    let wp = p.raised(48);
    let neg = x.is_negative();
    let mut a = x.abs().with_prec(wp);
    let one = HPReal::one(wp);
    let big = a > one;
    if big {
        a = &one / &a;
    }
    // a = tan(phi), phi in (0, pi/4]; halve the angle 8 times
    const H: u32 = 8;
    for _ in 0..H {
        let root = (&one + &(&a * &a)).sqrt();
        a = &a / &(&one + &root);
    }
    let a2 = &a * &a;
    let mut term = a.clone();
    let mut sum = a.clone();
    let mut n: i64 = 1;
    loop {
        term = -(&term * &a2);
        let add = term.div_i64(2 * n + 1);
        if add.is_zero() || add.mag2() < sum.mag2() - (wp.bits() as i64) - 2 {
            break;
        }
        sum += &add;
        n += 1;
    }
    let mut r = sum.scale2(H as i64);
    if big {
        r = &consts::pi(wp).scale2(-1) - &r;
    }
    if neg {
        r = -r;
    }
    r.with_prec(p)
}

/// Principal-value atan2 with range (-pi, pi]; atan2(0, x<0) = +pi.
pub fn atan2(y: &HPReal, x: &HPReal) -> HPReal {
    let p = y.prec();
    let pi = consts::pi(p);
    if y.is_zero() {
        return if x.is_negative() {
            pi
        } else {
            HPReal::zero(p)
        };
    }
    if x.is_zero() {
        let half = pi.scale2(-1);
        return if y.is_negative() { -half } else { half };
    }
    let base = atan(&(y / x));
    if x.is_positive() {
        base
    } else if y.is_positive() {
        &base + &pi
    } else {
        &base - &pi
    }
}

/// x^y for x > 0.
pub fn pow(x: &HPReal, y: &HPReal) -> HPReal {
    exp(&(y * &ln(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::real::Precision;

    fn p40() -> Precision {
        Precision::from_digits(40)
    }

    fn parse(s: &str) -> HPReal {
        super::super::decimal::parse_decimal(s, p40()).unwrap()
    }

    fn assert_close(a: &HPReal, b: &HPReal, bits_off: i64) {
        let d = (a - b).abs();
        if d.is_zero() {
            return;
        }
        let scale = b.mag2().max(a.mag2());
        assert!(
            d.mag2() < scale - (a.prec().bits() as i64) + bits_off,
            "not close: {a:?} vs {b:?} (d.mag2={}, need < {})",
            d.mag2(),
            scale - (a.prec().bits() as i64) + bits_off
        );
    }

    #[test]
    fn exp_ln_roundtrip() {
        for s in ["3.75", "0.001953125", "17.0", "0.4", "123.456"] {
            let x = parse(s);
            assert_close(&ln(&exp(&x)), &x, 12);
            assert_close(&exp(&ln(&x)), &x, 12);
        }
    }

    #[test]
    fn exp_known_value() {
        // e = 2.718281828459045235360287471352662497757...
        let e = exp(&HPReal::one(p40()));
        let want = parse("2.71828182845904523536028747135266249775724709369996");
        assert_close(&e, &want, 12);
    }

    #[test]
    fn sincos_pythagoras_and_large_argument() {
        let one = HPReal::one(p40());
        for s in ["1.0", "2600.0", "936819.1652131052925", "-7.25"] {
            let x = parse(s);
            let (si, co) = sincos(&x);
            let lhs = &(&si * &si) + &(&co * &co);
            assert_close(&lhs, &one, 12);
        }
    }

    #[test]
    fn atan_values() {
        let one = HPReal::one(p40());
        // atan(1) = pi/4
        let q = consts::pi(p40()).scale2(-2);
        assert_close(&atan(&one), &q, 12);
        // atan2(0, -1) = +pi
        let pi = consts::pi(p40());
        let neg_one = -&one;
        let zero = HPReal::zero(p40());
        assert_close(&atan2(&zero, &neg_one), &pi, 12);
    }

    #[test]
    fn ln2_against_series_constant() {
        let two = HPReal::from_i64(2, p40());
        assert_close(&ln(&two), &consts::ln2(p40()), 8);
    }
}

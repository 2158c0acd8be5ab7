//! Complex log-gamma by the Stirling series with upward recurrence, and the
//! phase function theta(t) built on it.

use crate::error::{Error, Result};
use crate::hp::{consts, elem, HPComplex, HPReal, Precision};
use crate::oracle::bernoulli::bernoulli_real;

/// Shift radius: arguments are pushed up by recurrence until |z| clears
/// 20 + digits/2, which keeps the Stirling remainder below target precision.
fn shift_radius(prec: Precision) -> i64 {
    20 + prec.digits() as i64 / 2
}

/// log Gamma(z), analytic on the right half-plane and continuous on the
/// vertical lines used by the evaluator (z = 1/4 + it/2 and s/2). Arguments
/// on the closed negative real axis are rejected.
pub fn log_gamma(z: &HPComplex) -> Result<HPComplex> {
    if z.im.is_zero() && !z.re.is_positive() {
        return Err(Error::domain(
            "log_gamma",
            "argument on the nonpositive real axis",
        ));
    }
    let prec = z.prec();
    let wp = prec.raised(48 + z.mag2().max(0) as u32);
    let radius = shift_radius(wp);
    let radius_sq = HPReal::from_i64(radius * radius, wp);
    let mut w = z.with_prec(wp);
    let mut corr = HPComplex::zero(wp);
    while w.norm_sqr() < radius_sq {
        corr += &w.ln()?;
        w = &w + &HPComplex::one(wp);
    }
    // Stirling: (w - 1/2) ln w - w + ln(2 pi)/2 + sum B_2j / (2j(2j-1) w^(2j-1))
    let ln_w = w.ln()?;
    let half = HPComplex::from_real(HPReal::one(wp).scale2(-1));
    let two_pi = consts::pi(wp).scale2(1);
    let mut acc = &(&w - &half) * &ln_w;
    acc = &acc - &w;
    acc += &HPComplex::from_real(elem::ln(&two_pi).scale2(-1));
    let winv2 = w.inv().powu(2);
    let mut wpow = w.inv(); // w^-(2j-1)
    let bits = wp.bits() as i64;
    let scale = acc.mag2();
    let mut j = 1usize;
    loop {
        let b = bernoulli_real(2 * j, wp);
        let term = wpow.scale(&b).div_i64((2 * j as i64) * (2 * j as i64 - 1));
        let tmag = term.mag2();
        acc += &term;
        if tmag < scale - bits - 4 {
            break;
        }
        if j > 200 {
            return Err(Error::PrecisionInsufficient(
                "Stirling series stalled before reaching target precision".into(),
            ));
        }
        wpow = &wpow * &winv2;
        j += 1;
    }
    Ok((&acc - &corr).with_prec(prec))
}

/// Riemann-Siegel phase theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln pi.
pub fn theta(t: &HPReal) -> Result<HPReal> {
    if t.is_negative() {
        return Err(Error::domain("theta", "t must be nonnegative"));
    }
    let prec = t.prec();
    let wp = prec.raised(24 + t.mag2().max(0) as u32);
    let tw = t.with_prec(wp);
    let z = HPComplex::new(
        HPReal::one(wp).scale2(-2),
        tw.scale2(-1),
    );
    let lg = log_gamma(&z)?;
    let ln_pi = elem::ln(&consts::pi(wp));
    Ok((&lg.im - &(&tw.scale2(-1) * &ln_pi)).with_prec(prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p40() -> Precision {
        Precision::from_digits(40)
    }

    fn parse(s: &str) -> HPReal {
        HPReal::parse(s, p40()).unwrap()
    }

    fn assert_close(a: &HPReal, b: &HPReal, bits_off: i64) {
        let d = (a - b).abs();
        if d.is_zero() {
            return;
        }
        assert!(
            d.mag2() < a.mag2().max(b.mag2()) - (p40().bits() as i64) + bits_off,
            "not close: {a:?} vs {b:?} (d.mag2 = {})",
            d.mag2()
        );
    }

    #[test]
    fn log_gamma_at_small_integers() {
        // Gamma(5) = 24
        let z = HPComplex::from_i64(5, 0, p40());
        let lg = log_gamma(&z).unwrap();
        let want = elem::ln(&HPReal::from_i64(24, p40()));
        assert_close(&lg.re, &want, 10);
        assert!(lg.im.is_zero() || lg.im.mag2() < -(p40().bits() as i64) + 12);
    }

    #[test]
    fn log_gamma_complex_reference() {
        // frozen reference for log Gamma(1/4 + 50 i)
        let z = HPComplex::new(HPReal::one(p40()).scale2(-2), parse("50"));
        let lg = log_gamma(&z).unwrap();
        let want_re = parse("-78.598880432701842503979689597378643885826023045439");
        let want_im = parse("145.20865952425722833265449668140162645093126035247");
        assert_close(&lg.re, &want_re, 12);
        assert_close(&lg.im, &want_im, 12);
    }

    #[test]
    fn theta_at_zero_vanishes() {
        // arg Gamma(1/4) = 0
        let th = theta(&HPReal::zero(p40())).unwrap();
        assert!(th.is_zero() || th.mag2() < -(p40().bits() as i64) + 12);
    }

    #[test]
    fn theta_reference_values() {
        let th100 = theta(&parse("100")).unwrap();
        assert_close(&th100, &parse("87.972165231787219625483129113748690868566519706706"), 12);
        let th2600 = theta(&parse("2600")).unwrap();
        assert_close(
            &th2600,
            &parse("6532.613863811418166739725355028188548669090935061221"),
            12,
        );
    }

    #[test]
    fn recurrence_shift_consistency() {
        // log Gamma(z+1) - log Gamma(z) = ln z, across the shift boundary
        let z = HPComplex::new(parse("3.5"), parse("2.25"));
        let a = log_gamma(&(&z + &HPComplex::one(p40()))).unwrap();
        let b = log_gamma(&z).unwrap();
        let diff = &a - &b;
        let want = z.ln().unwrap();
        assert_close(&diff.re, &want.re, 14);
        assert_close(&diff.im, &want.im, 14);
    }
}

//! Normalised upper incomplete gamma function Q(a, z) in two forms: the
//! m-term uniform approximation around the transition point z ~ a, and an
//! independent series/continued-fraction evaluation used as its oracle.

use super::erfc::{erfc_complex, erfc_m};
use super::eta::eta_of_lambda;
use super::gamma::log_gamma;
use crate::coeff::ck::ck_eval;
use crate::coeff::engine::w_poly;
use crate::error::{Error, Result};
use crate::hp::{consts, HPComplex, HPReal, Precision};

fn domain_check_a(a: &HPComplex, op: &'static str) -> Result<()> {
    if a.im.is_zero() && !a.re.is_positive() {
        return Err(Error::domain(op, "a on the nonpositive real axis"));
    }
    Ok(())
}

/// exp(w) evaluated with guard bits covering the magnitude of w, so the
/// result is relatively accurate.
fn exp_guarded(w: &HPComplex, prec: Precision) -> HPComplex {
    let guard = 8 + w.mag2().max(0) as u32;
    w.with_prec(prec.raised(guard)).exp().with_prec(prec)
}

/// The m-term uniform approximation of Q(a, z) (remainder dropped):
/// Q ~ erfc(eta sqrt(a/2); m)/2
///     + e^(-a eta^2/2)/sqrt(2 pi a) * sum_{k<m} (-1)^k W_k(mu) mu^(-2k-1) a^-k.
/// Near the transition point (|mu| < 1e-3) the mu-singular summand is
/// replaced by the analytic coefficient functions c_k(eta).
pub fn q_uniform(a: &HPComplex, z: &HPComplex, m: usize) -> Result<HPComplex> {
    if m == 0 || m > 4 {
        return Err(Error::UnsupportedIndex {
            name: "m",
            value: m,
            max: 4,
        });
    }
    domain_check_a(a, "q_uniform")?;
    let prec = a.prec();
    let wp = prec.raised(24 + a.mag2().max(0) as u32);
    let aw = a.with_prec(wp);
    let zw = z.with_prec(wp);
    let lambda = &zw / &aw;
    let mu = &lambda - &HPComplex::one(wp);
    let eta = eta_of_lambda(&lambda)?;
    let erfc_arg = &eta * &aw.scale2(-1).sqrt();
    let kernel = {
        let e = -&(&aw * &(&eta * &eta)).scale2(-1);
        let two_pi_a = aw.scale(&consts::pi(wp)).scale2(1);
        &exp_guarded(&e, wp) / &two_pi_a.sqrt()
    };
    let near_transition = {
        let thresh = &HPReal::one(wp) / &HPReal::from_i64(1_000_000, wp);
        mu.norm_sqr() < thresh
    };
    let ainv = aw.inv();
    let mut apow = HPComplex::one(wp);
    let mut series = HPComplex::zero(wp);
    let erfc_part;
    if near_transition {
        for k in 0..m {
            series += &(&ck_eval(k, &eta)? * &apow);
            apow = &apow * &ainv;
        }
        erfc_part = erfc_complex(&erfc_arg).scale2(-1);
    } else {
        let muinv = mu.inv();
        let muinv2 = &muinv * &muinv;
        let mut mu_odd = muinv.clone(); // mu^-(2k+1)
        for k in 0..m {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let w = w_poly(k, &mu)?;
            series += &(&(&w * &mu_odd) * &apow).scale_i64(sign);
            apow = &apow * &ainv;
            mu_odd = &mu_odd * &muinv2;
        }
        erfc_part = erfc_m(&erfc_arg, m)?.scale2(-1);
    }
    Ok((&erfc_part + &(&kernel * &series)).with_prec(prec))
}

/// Iteration caps for the oracle paths.
const SERIES_MAX_TERMS: usize = 2_000_000;
const CF_MAX_ITERS: usize = 200_000;

/// Q(a, z) by the Kummer series for the lower function (|z| comparable to or
/// below |a|) or the Legendre continued fraction (|z| large); the independent
/// reference for [`q_uniform`]. Domain: |arg z| < 3pi/4.
pub fn q_oracle(a: &HPComplex, z: &HPComplex) -> Result<HPComplex> {
    domain_check_a(a, "q_oracle")?;
    if z.is_zero() {
        return Ok(HPComplex::one(a.prec()));
    }
    if z.re.is_negative() && z.re.abs() >= z.im.abs() {
        return Err(Error::domain("q_oracle", "need |arg z| < 3 pi / 4"));
    }
    let prec = a.prec();
    let wp = prec.raised(32 + a.mag2().max(0) as u32 + z.mag2().max(0) as u32 / 2);
    let aw = a.with_prec(wp);
    let zw = z.with_prec(wp);
    // regime: series while |z| <= 1.2 |a| + 20
    let za = zw.abs();
    let bound = &aw.abs().mul_i64(6).div_i64(5) + &HPReal::from_i64(20, wp);
    if za <= bound {
        q_by_lower_series(&aw, &zw, prec)
    } else {
        q_by_continued_fraction(&aw, &zw, prec)
    }
}

/// P(a,z) = z^a e^-z / Gamma(a+1) * sum_n z^n / ((a+1)...(a+n)); Q = 1 - P.
fn q_by_lower_series(a: &HPComplex, z: &HPComplex, out_prec: Precision) -> Result<HPComplex> {
    let wp = a.prec();
    let bits = wp.bits() as i64;
    let zmag = z.abs().to_f64();
    let mut term = HPComplex::one(wp);
    let mut sum = HPComplex::one(wp);
    let mut n: usize = 1;
    loop {
        let denom = a + &HPComplex::from_i64(n as i64, 0, wp);
        term = &(&term * z) / &denom;
        sum += &term;
        if term.mag2() < sum.mag2() - bits - 6 && (n as f64) > zmag {
            break;
        }
        n += 1;
        if n > SERIES_MAX_TERMS {
            return Err(Error::TailNotConverged(format!(
                "lower-series for Q(a,z) at |z| ~ {zmag:.3e}"
            )));
        }
    }
    // prefactor: exp(a ln z - z - log Gamma(a+1))
    let lg = log_gamma(&(a + &HPComplex::one(wp)))?;
    let expo = &(&(a * &z.ln()?) - z) - &lg;
    let p = &exp_guarded(&expo, wp) * &sum;
    Ok((&HPComplex::one(wp) - &p).with_prec(out_prec))
}

/// Legendre continued fraction by the modified Lentz method:
/// Q(a,z) = z^a e^-z / Gamma(a) * 1/(z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(...))).
fn q_by_continued_fraction(a: &HPComplex, z: &HPComplex, out_prec: Precision) -> Result<HPComplex> {
    let wp = a.prec();
    let bits = wp.bits() as i64;
    let tiny = HPComplex::new(
        HPReal::one(wp).scale2(-4 * bits),
        HPReal::zero(wp),
    );
    let one = HPComplex::one(wp);
    let b0 = &(z + &one) - a;
    let mut f = if b0.is_zero() { tiny.clone() } else { b0 };
    let mut c = f.clone();
    let mut d = HPComplex::zero(wp);
    let mut converged = false;
    for n in 1..=CF_MAX_ITERS {
        let nf = n as i64;
        let an = (a - &HPComplex::from_i64(nf, 0, wp)).scale_i64(nf);
        let bn = &(z + &HPComplex::from_i64(2 * nf + 1, 0, wp)) - a;
        d = &bn + &(&an * &d);
        if d.is_zero() {
            d = tiny.clone();
        }
        d = d.inv();
        c = &bn + &(&an / &c);
        if c.is_zero() {
            c = tiny.clone();
        }
        let delta = &c * &d;
        f = &f * &delta;
        if (&delta - &one).mag2() < -(out_prec.bits() as i64) - 10 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::CfNonConvergence {
            iterations: CF_MAX_ITERS,
        });
    }
    let lg = log_gamma(a)?;
    let expo = &(&(a * &z.ln()?) - z) - &lg;
    Ok((&exp_guarded(&expo, wp) / &f).with_prec(out_prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p40() -> Precision {
        Precision::from_digits(40)
    }

    fn c(re: &str, im: &str) -> HPComplex {
        HPComplex::new(
            HPReal::parse(re, p40()).unwrap(),
            HPReal::parse(im, p40()).unwrap(),
        )
    }

    fn assert_close(a: &HPComplex, b: &HPComplex, bits_off: i64) {
        let d = (a - b).abs();
        if d.is_zero() {
            return;
        }
        assert!(
            d.mag2() < a.mag2().max(b.mag2()) - (p40().bits() as i64) + bits_off,
            "not close: {a:?}\n     vs   {b:?}\n   (d.mag2 = {})",
            d.mag2()
        );
    }

    #[test]
    fn q_oracle_closed_forms() {
        // Q(1, z) = e^-z
        let one = HPComplex::one(p40());
        for (re, im) in [("1", "0"), ("0.3", "2"), ("30", "5")] {
            let z = c(re, im);
            let q = q_oracle(&one, &z).unwrap();
            assert_close(&q, &(-&z).exp(), 14);
        }
        // Q(a, 0) = 1
        let q0 = q_oracle(&c("3.5", "2"), &HPComplex::zero(p40())).unwrap();
        assert_eq!(q0, HPComplex::one(p40()));
    }

    #[test]
    fn q_oracle_reference_values() {
        let cases = [
            ("3", "0", "2", "0", "0.67667641618306345946999747486242201703815772954788", "0"),
            (
                "5", "0", "0", "5",
                "19.307888629110774353260656049896217103443702975107",
                "9.4530392242253893810995001072204216472053539078252",
            ),
            (
                "40", "0", "80", "0",
                "2.8087216260420959441497189355991243976375910726588e-7",
                "0",
            ),
            (
                "32", "24", "64", "48",
                "6.3871524000562135810463357644740289628282624273049e-7",
                "-0.000003233696446973267238302221697987608332867867022504",
            ),
        ];
        for (are, aim, zre, zim, wre, wim) in cases {
            let q = q_oracle(&c(are, aim), &c(zre, zim)).unwrap();
            assert_close(&q, &c(wre, wim), 16);
        }
    }

    #[test]
    fn q_oracle_at_the_critical_transition() {
        // a = s/2 at t = 2600; z = pi n^2 i straddles the transition near n = 20
        let a = c("0.25", "1300");
        let pi = consts::pi(p40());
        let cases = [
            (14u32, "0.99106887967729076484179315689899613946510446918905",
             "-0.014978875755209343814083538625403743008141827212657"),
            (19, "0.91900708450862941971660688023568938797295631624446",
             "-0.020047248449882858047788373320466235224524094070313"),
            (20, "0.90612005742145481219550266102417104999196746461442",
             "0.24437567684422152556940511654906223913249226474688"),
            (21, "-0.15963516565055174587496644395425471047632410448345",
             "0.029478700051582049211030505709604225301157949715457"),
            (26, "-0.0089406127584876510134293156379203479534087341637342",
             "0.017601114468601604943126614464494994413342287269802"),
            (35, "0.003483195726118023246379871038622350295601818118291",
             "-0.0065330021377885335128266053056205506652716024174483"),
        ];
        for (n, wre, wim) in cases {
            let z = HPComplex::new(
                HPReal::zero(p40()),
                pi.mul_i64(n as i64 * n as i64),
            );
            let q = q_oracle(&a, &z).unwrap();
            assert_close(&q, &c(wre, wim), 20);
        }
    }

    #[test]
    fn q_uniform_tracks_oracle_at_moderate_m() {
        // a = s/2, z = pi n^2 i at t = 2600, n = 35: expansion error O(|a|^-m)
        let a = c("0.25", "1300");
        let z = HPComplex::new(HPReal::zero(p40()), consts::pi(p40()).mul_i64(35 * 35));
        let oracle = q_oracle(&a, &z).unwrap();
        for m in 1..=4usize {
            let u = q_uniform(&a, &z, m).unwrap();
            let err = (&u - &oracle).abs().log10_abs();
            // |a| ~ 1300 => each order gains ~3.1 decimal digits
            let bound = -3.0 * m as f64 - 1.0;
            assert!(
                err < bound,
                "m={m}: |q_uniform - q_oracle| = 1e{err:.2}, expected < 1e{bound}"
            );
        }
    }

    #[test]
    fn q_uniform_exactly_at_transition() {
        // lambda = 1, eta = 0: the c_k route must produce Q ~ 1/2 + O(a^-1/2)
        let a = c("50", "0");
        let z = c("50", "0");
        let q = q_uniform(&a, &z, 4).unwrap();
        let half = HPComplex::new(HPReal::one(p40()).scale2(-1), HPReal::zero(p40()));
        let d = (&q - &half).abs().to_f64();
        // c_0(0) = -1/3 gives the leading correction -1/(3 sqrt(2 pi a))
        let lead = 1.0 / (3.0 * (2.0 * std::f64::consts::PI * 50.0).sqrt());
        assert!((d - lead).abs() < 0.2 * lead, "off-transition shape: d={d}, lead={lead}");
    }

    #[test]
    fn q_uniform_respects_index_cap() {
        let a = c("50", "0");
        let z = c("60", "0");
        assert!(q_uniform(&a, &z, 5).is_err());
        assert!(q_uniform(&a, &z, 0).is_err());
    }

    #[test]
    fn q_oracle_rejects_left_sector() {
        assert!(q_oracle(&c("3", "0"), &c("-5", "1")).is_err());
    }
}

//! Z(t) ground truth by Euler-Maclaurin continuation of zeta(s).
//!
//! Deliberately a different method from everything under test: a plain
//! Dirichlet head of roughly t/pi terms plus the Bernoulli correction tail.
//! Cost is O(t), acceptable at desk scale.

use crate::error::{Error, Result};
use crate::hp::{elem, HPComplex, HPReal, Precision};
use crate::oracle::bernoulli::bernoulli_real;
use crate::special::theta;
use num_bigint::BigInt;

/// Controls for the ground-truth computations.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Digits the oracle is asked to certify.
    pub target_digits: u32,
    /// Euler-Maclaurin head length M; 0 selects max(50, ceil(t/pi)).
    pub euler_maclaurin_terms: usize,
    /// Cap on the Bernoulli order 2J of the correction tail.
    pub bernoulli_order: usize,
    /// Accepted tail-estimate magnitude (log10) for the gamma-path anchor.
    pub tail_tolerance_log10: i64,
}

impl OracleConfig {
    pub fn with_digits(target_digits: u32) -> Self {
        OracleConfig {
            target_digits,
            euler_maclaurin_terms: 0,
            bernoulli_order: 400,
            tail_tolerance_log10: -12,
        }
    }

    /// Working precision for internal oracle arithmetic; keeps the invariant
    /// target_digits <= working digits - 5.
    pub fn working_precision(&self) -> Precision {
        Precision::from_digits(self.target_digits + 8)
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig::with_digits(30)
    }
}

/// zeta(s) by Euler-Maclaurin:
/// zeta(s) = sum_{n=1}^{M} n^-s + M^(1-s)/(s-1) - M^-s/2
///           + sum_{j>=1} B_2j/(2j)! (s)_{2j-1} M^(-s-2j+1).
pub fn zeta_euler_maclaurin(s: &HPComplex, cfg: &OracleConfig) -> Result<HPComplex> {
    let wp = s.prec();
    let bits = wp.bits() as i64;
    let sw = s.clone();
    let m = if cfg.euler_maclaurin_terms > 0 {
        cfg.euler_maclaurin_terms
    } else {
        let t = sw.im.abs().to_f64();
        50usize.max((t / std::f64::consts::PI).ceil() as usize)
    };
    // head: sum n^-s = exp(-s ln n)
    let mut head = HPComplex::zero(wp);
    for n in 1..=m {
        head += &n_pow_minus_s(n, &sw);
    }
    let ln_m = elem::ln(&HPReal::from_i64(m as i64, wp));
    let m_pow_minus_s = (-&sw.scale(&ln_m)).exp();
    // M^(1-s)/(s-1)
    let m_real = HPReal::from_i64(m as i64, wp);
    let tail_main = &m_pow_minus_s.scale(&m_real) / &(&sw - &HPComplex::one(wp));
    let mut acc = &head + &tail_main;
    acc = &acc - &m_pow_minus_s.scale2(-1);
    // Bernoulli correction: term_j = B_2j/(2j)! (s)_{2j-1} M^(1-s-2j)
    let minv2 = {
        let inv = HPReal::one(wp) / &m_real;
        &inv * &inv
    };
    let mut m_pow = m_pow_minus_s.scale(&m_real).scale(&minv2); // M^(-s-1)
    let mut poch = sw.clone(); // (s)_1 = s
    let mut fact = BigInt::from(2); // (2j)!
    let mut prev_mag = i64::MAX;
    let mut j = 1usize;
    loop {
        let coeff = &bernoulli_real(2 * j, wp) / &HPReal::from_bigint(fact.clone(), wp);
        let term = (&m_pow * &poch).scale(&coeff);
        let tmag = term.mag2();
        acc += &term;
        if tmag < acc.mag2() - bits + 8 {
            break;
        }
        if tmag >= prev_mag || 2 * j >= cfg.bernoulli_order {
            return Err(Error::PrecisionInsufficient(format!(
                "Euler-Maclaurin tail stalled at order {} (term magnitude 2^{})",
                2 * j,
                tmag
            )));
        }
        prev_mag = tmag;
        // advance: (s)_{2j+1} = (s)_{2j-1} (s+2j-1)(s+2j)
        let a1 = &sw + &HPComplex::from_i64(2 * j as i64 - 1, 0, wp);
        let a2 = &sw + &HPComplex::from_i64(2 * j as i64, 0, wp);
        poch = &(&poch * &a1) * &a2;
        m_pow = m_pow.scale(&minv2);
        fact *= BigInt::from((2 * j + 1) * (2 * j + 2));
        j += 1;
    }
    Ok(acc)
}

fn n_pow_minus_s(n: usize, s: &HPComplex) -> HPComplex {
    let wp = s.prec();
    if n == 1 {
        return HPComplex::one(wp);
    }
    let ln_n = elem::ln(&HPReal::from_i64(n as i64, wp));
    (-&s.scale(&ln_n)).exp()
}

/// Z(t) = Re e^(i theta(t)) zeta(1/2 + it), accurate to the configured
/// oracle digits.
pub fn euler_maclaurin_z(t: &HPReal, cfg: &OracleConfig) -> Result<HPReal> {
    if !t.is_positive() {
        return Err(Error::domain("euler_maclaurin_z", "t must be positive"));
    }
    let wp = cfg.working_precision().raised(16 + t.mag2().max(0) as u32);
    let tw = t.with_prec(wp);
    let s = HPComplex::new(HPReal::one(wp).scale2(-1), tw.clone());
    let zeta = zeta_euler_maclaurin(&s, cfg)?;
    let th = theta(&tw)?;
    let (sin_t, cos_t) = elem::sincos(&th);
    let phase = HPComplex::new(cos_t, sin_t);
    Ok((&phase * &zeta).re.with_prec(t.prec()))
}

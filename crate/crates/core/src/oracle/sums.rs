//! Direct bilateral defining sums of the S functions, truncated
//! symmetrically with a certified alternating-series tail radius.

use crate::error::{Error, Result};
use crate::hp::{consts, HPComplex, HPReal};

/// S_k(omega) = 2^(k-1) sum_{n in Z} (-1)^n omega^k / (omega^2 - (pi n)^2)^k,
/// truncated at |n| <= n_max. Returns the value and a certified tail radius
/// (the alternating tail is bounded by its first omitted term once the
/// magnitudes decrease, which holds for pi n > |omega|).
pub fn s_direct_sum(k: usize, omega: &HPComplex, n_max: usize) -> Result<(HPComplex, HPReal)> {
    if k < 1 || k > 7 {
        return Err(Error::UnsupportedIndex {
            name: "k",
            value: k,
            max: 7,
        });
    }
    if n_max < 1000 {
        return Err(Error::domain("s_direct_sum", "n_max must be at least 1000"));
    }
    let prec = omega.prec();
    let pi = consts::pi(prec);
    // reject omega within 1e-6 of a pole of csc
    let ratio = &omega.re / &pi;
    let nearest = HPReal::from_bigint(ratio.round_bigint(), prec);
    let dist2 = (&omega.re - &(&pi * &nearest)).abs();
    let dist = HPComplex::new(dist2, omega.im.clone()).abs();
    let micro = &HPReal::one(prec) / &HPReal::from_i64(1_000_000, prec);
    if dist < micro {
        return Err(Error::domain(
            "s_direct_sum",
            "omega within 1e-6 of a multiple of pi",
        ));
    }
    let omega_sq = omega * omega;
    let omega_k = omega.powu(k as u32);
    let pi_sq = &pi * &pi;
    // n = 0 term: omega^k / (omega^2)^k = omega^-k
    let mut acc = omega.powu(k as u32).inv();
    let term_at = |n: usize| -> HPComplex {
        let d = &omega_sq - &HPComplex::from_real(pi_sq.mul_i64((n * n) as i64));
        &omega_k / &d.powu(k as u32)
    };
    for n in 1..=n_max {
        let t = term_at(n);
        let signed = if n % 2 == 0 { t } else { -t };
        acc += &signed.scale2(1);
    }
    let value = acc.scale2(k as i64 - 1);
    // certified tail: first omitted pair, doubled for the symmetric halves,
    // plus a rounding allowance for the n_max accumulated operations
    let first_omitted = term_at(n_max + 1).abs().scale2(k as i64 + 1);
    let rounding = value
        .abs()
        .scale2(-(prec.bits() as i64) + 8 + (n_max as f64).log2() as i64);
    let radius = &first_omitted + &rounding;
    Ok((value, radius))
}

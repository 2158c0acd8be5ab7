//! Transition-point coefficient functions c_k(eta).
//!
//! c_k(eta) = (-1)^k W_k(mu)/mu^(2k+1) - (-2)^k (1/2)_k / eta^(2k+1) is a
//! difference of two terms that blow up individually as eta -> 0 but whose
//! Laurent singularities cancel exactly, leaving an analytic function. Here
//! the cancellation is performed once in exact rational arithmetic; the
//! vanishing of every negative power doubles as a consistency proof of the
//! alpha table. The analytic tail is then a short polynomial in eta.

use super::series::{rat, RatSeries};
use super::tables::{alpha, half_pochhammer, MAX_W};
use super::trig::rat_to_complex;
use crate::error::{Error, Result};
use crate::hp::HPComplex;
use num_rational::BigRational;
use num_traits::Zero;
use std::sync::OnceLock;

/// Series order kept for the analytic part; ample for |eta| below the
/// near-transition switch threshold.
const ORDER: usize = 40;

/// g(u) = sqrt(2(u - log(1+u))/u^2) = 1 - u/3 + 7u^2/36 - ... as an exact
/// series; eta(mu) = mu g(mu).
pub fn g_series(len: usize) -> RatSeries {
    let mut h = RatSeries::zero(len);
    for j in 0..len {
        // 2 (-1)^j / (j+2)
        h.c[j] = rat(if j % 2 == 0 { 2 } else { -2 }, j as i64 + 2);
    }
    h.sqrt_unit()
}

fn mu_of_eta(len: usize) -> RatSeries {
    // eta(mu) = mu g(mu); Lagrange inversion gives
    // [eta^n] mu = (1/n) [u^(n-1)] g(u)^-n,
    // which needs only repeated series multiplication.
    let ginv = g_series(len).inverse();
    let mut mu = RatSeries::zero(len);
    let mut pow = ginv.clone();
    for n in 1..len {
        mu.c[n] = &pow.c[n - 1] / rat(n as i64, 1);
        if n + 1 < len {
            pow = pow.mul(&ginv);
        }
    }
    mu
}

fn ck_series_all() -> &'static Vec<RatSeries> {
    static CACHE: OnceLock<Vec<RatSeries>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let len = ORDER + 2 * MAX_W + 4;
        let mu = mu_of_eta(len);
        // ratio(eta) = mu(eta)/eta, a unit series
        let mut ratio = RatSeries::zero(len);
        for j in 0..len - 1 {
            ratio.c[j] = mu.c[j + 1].clone();
        }
        let mut out = Vec::with_capacity(MAX_W + 1);
        for k in 0..=MAX_W {
            // U(eta) = (-1)^k W_k(mu(eta)) ratio^-(2k+1); then
            // c_k = (U - U_0) / eta^(2k+1) with U_0 = (-2)^k (1/2)_k and the
            // next 2k coefficients of U identically zero.
            let mut w_of_mu = RatSeries::zero(len);
            w_of_mu.c[0] = alpha(k, 0);
            let mut mu_pow = RatSeries::zero(len);
            mu_pow.c[0] = rat(1, 1);
            for r in 1..=2 * k {
                mu_pow = mu_pow.mul(&mu);
                w_of_mu = w_of_mu.add(&mu_pow.scale(&alpha(k, r)));
            }
            let sign = if k % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            let u = w_of_mu.scale(&sign).mul(&ratio.inverse().powi(2 * k + 1));
            let pole = {
                let s = if k % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                s * rat(1 << k, 1) * half_pochhammer(k)
            };
            assert_eq!(u.c[0], pole, "c_{k}: principal Laurent coefficient mismatch");
            for j in 1..=2 * k {
                assert!(
                    u.c[j].is_zero(),
                    "c_{k}: residual singular coefficient at eta^-{}",
                    2 * k + 1 - j
                );
            }
            let mut ck = RatSeries::zero(ORDER);
            for j in 0..ORDER {
                ck.c[j] = u.c[j + 2 * k + 1].clone();
            }
            out.push(ck);
        }
        out
    })
}

/// c_k(0) as an exact rational (c_0(0) = -1/3, ...).
pub fn ck_at_zero(k: usize) -> BigRational {
    ck_series_all()[k].c[0].clone()
}

/// c_k(eta) for small |eta| by the exact series; requires k <= 3 and |eta|
/// well inside the expansion radius (callers switch at |mu| ~ 1e-3).
pub fn ck_eval(k: usize, eta: &HPComplex) -> Result<HPComplex> {
    if k > MAX_W {
        return Err(Error::UnsupportedIndex {
            name: "k",
            value: k,
            max: MAX_W,
        });
    }
    let series = &ck_series_all()[k];
    let prec = eta.prec();
    let mut acc = HPComplex::zero(prec);
    for j in (0..series.len()).rev() {
        acc = &acc * eta;
        if !series.c[j].is_zero() {
            acc += &rat_to_complex(&series.c[j], prec);
        }
    }
    Ok(acc)
}

//! The transition mapping eta(lambda) defined by eta^2/2 = lambda - 1 - log lambda,
//! with the branch fixed so that eta and lambda - 1 share sign for real
//! lambda > 0 (eta ~ lambda - 1 near the transition point lambda = 1).

use crate::error::{Error, Result};
use crate::hp::{consts, HPComplex, HPReal};

/// Threshold on |lambda - 1| below which the series for
/// g = sqrt(2(lambda-1-log lambda)/(lambda-1)^2) replaces the closed form
/// (which is 0/0 at the transition point).
fn near_one(u: &HPComplex) -> bool {
    // |u| < 0.1  <=>  |u|^2 < 0.01
    let hundredth = {
        let p = u.prec();
        &HPReal::one(p) / &HPReal::from_i64(100, p)
    };
    u.norm_sqr() < hundredth
}

/// eta(lambda); domain excludes the branch cut (-inf, 0].
pub fn eta_of_lambda(lambda: &HPComplex) -> Result<HPComplex> {
    if lambda.im.is_zero() && !lambda.re.is_positive() {
        return Err(Error::domain(
            "eta_of_lambda",
            "lambda on the nonpositive real axis",
        ));
    }
    let prec = lambda.prec();
    let wp = prec.raised(16);
    let lw = lambda.with_prec(wp);
    let u = &lw - &HPComplex::one(wp);
    if u.is_zero() {
        return Ok(HPComplex::zero(prec));
    }
    let g = if near_one(&u) {
        // g^2 = sum_j 2 (-1)^j u^j / (j+2), truncated below working precision
        let bits = wp.bits() as i64;
        let mut upow = HPComplex::one(wp);
        let mut h = HPComplex::zero(wp);
        let mut j: i64 = 0;
        loop {
            let term = upow.scale2(1).div_i64(if j % 2 == 0 { j + 2 } else { -(j + 2) });
            h += &term;
            if term.mag2() < -bits - 4 {
                break;
            }
            upow = &upow * &u;
            j += 1;
        }
        h.sqrt()
    } else {
        let w = (&u - &lw.ln()?).scale2(1);
        (&w / &(&u * &u)).sqrt()
    };
    Ok((&u * &g).with_prec(prec))
}

/// Per-n quantities entering the smoothed main sum at index n:
/// lambda_n = 2 pi n^2 i / s, mu_n = lambda_n - 1 (equivalently
/// (pi n / omega)^2 - 1), eta_n, and the smoothing argument eta_n sqrt(s)/2.
#[derive(Clone, Debug)]
pub struct TransitionPoint {
    pub n: u32,
    pub lambda: HPComplex,
    pub mu: HPComplex,
    pub eta: HPComplex,
    pub smoothing_arg: HPComplex,
}

impl TransitionPoint {
    pub fn new(n: u32, s: &HPComplex) -> Result<Self> {
        assert!(n >= 1, "TransitionPoint: n >= 1");
        let prec = s.prec();
        let lambda = lambda_n(n, s);
        let mu = &lambda - &HPComplex::one(prec);
        let eta = eta_of_lambda(&lambda)?;
        let smoothing_arg = (&eta * &s.sqrt()).scale2(-1);
        Ok(TransitionPoint {
            n,
            lambda,
            mu,
            eta,
            smoothing_arg,
        })
    }
}

/// lambda_n = 2 pi n^2 i / s.
pub fn lambda_n(n: u32, s: &HPComplex) -> HPComplex {
    let prec = s.prec();
    let two_pi_n2 = consts::pi(prec)
        .scale2(1)
        .mul_i64(n as i64 * n as i64);
    HPComplex::new(HPReal::zero(prec), two_pi_n2) / s
}

//! The coefficient engine: symbolic regeneration of the S-function
//! expansion table, derivation of the B_r / D_k correction coefficients from
//! the recurrence, and their numeric evaluation at a concrete omega.

use super::tables::{self, alpha, big_d_stored, EpsPoly, MAX_B_K, MAX_M, MAX_W};
use super::trig::{rat_to_real, LaurentTrig, TrigPoly, TrigPowers};
use crate::error::{Error, Result};
use crate::hp::{consts, HPComplex};
use num_rational::BigRational;
use std::sync::{Mutex, OnceLock};

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product::<i64>().max(1)
}

/// Symbolic S_k(w) in the ring Q[cot w, csc w, 1/w], k >= 1; built from
/// S_1 = csc w and S_{k+1} = S_k/w - S_k'/k.
pub fn s_sym(k: usize) -> LaurentTrig {
    assert!(k >= 1, "s_sym: k >= 1");
    static CACHE: OnceLock<Mutex<Vec<LaurentTrig>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![LaurentTrig::csc()]));
    let mut guard = cache.lock().unwrap();
    while guard.len() < k {
        let j = guard.len(); // computing S_{j+1} from S_j
        let prev = guard.last().unwrap();
        let next = prev
            .mul_invw(1)
            .add(&prev.derivative().scale(&super::series::rat(-1, j as i64)));
        guard.push(next);
    }
    guard[k - 1].clone()
}

/// Regenerated b_{r,k}: S_{k+1}(w) = (csc w / k!) sum_r b_{r,k} w^-r.
pub fn b_generated(r: usize, k: usize) -> TrigPoly {
    let s = s_sym(k + 1);
    s.invw_coefficient_over_csc(r as u32)
        .scale(&BigRational::from(num_bigint::BigInt::from(factorial(k))))
}

/// Regenerate the whole b table up to k_max (practical symbolic depth 8).
pub fn b_coeffs_generate(k_max: usize) -> Result<Vec<Vec<TrigPoly>>> {
    if k_max > 8 {
        return Err(Error::UnsupportedIndex {
            name: "k_max",
            value: k_max,
            max: 8,
        });
    }
    let mut table = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let s = s_sym(k + 1);
        let top = s.max_invw_power() as usize;
        let mut row = Vec::with_capacity(top + 1);
        for r in 0..=top {
            row.push(b_generated(r, k));
        }
        table.push(row);
    }
    Ok(table)
}

/// d_{r,k} derived symbolically from
/// B_r(w) = sum_{j=0}^{2r} (-1)^j alpha_{j of W_r} S_{2r+1-j}(w) / (w/2)^j,
/// collecting powers of 1/w. (The published closed formula for d_{r,k} has
/// inconsistent indices; the expansion below is the defining route and must
/// reproduce the stored listings exactly.)
pub fn d_coeffs(r: usize) -> Result<Vec<TrigPoly>> {
    if r > MAX_W {
        return Err(Error::UnsupportedIndex {
            name: "r",
            value: r,
            max: MAX_W,
        });
    }
    let mut acc = LaurentTrig::default();
    for j in 0..=2 * r {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let coeff = alpha(r, j) * BigRational::from(num_bigint::BigInt::from(sign * (1i64 << j)));
        acc = acc.add(&s_sym(2 * r + 1 - j).mul_invw(j as u32).scale(&coeff));
    }
    let top = acc.max_invw_power() as usize;
    let mut out = Vec::with_capacity(2 * r + 1);
    for k in 0..=2 * r {
        if k <= top {
            out.push(acc.invw_coefficient_over_csc(k as u32));
        } else {
            out.push(TrigPoly::zero());
        }
    }
    assert!(top <= 2 * r, "B_{r} expansion has spurious 1/w powers");
    Ok(out)
}

/// D_k(m) regenerated from the derived d_{r,k}:
/// D_k(m) = sum_{r=ceil(k/2)}^{m-1} eps^r d_{r,k}.
pub fn big_d_generated(k: usize, m: usize) -> Result<EpsPoly> {
    check_m_k(k, m)?;
    let mut out = EpsPoly::zero(m);
    for r in k.div_ceil(2)..m {
        out.coeffs[r] = d_coeffs(r)?[k].clone();
    }
    Ok(out.normalized())
}

fn check_m_k(k: usize, m: usize) -> Result<()> {
    if !(1..=MAX_M).contains(&m) {
        return Err(Error::UnsupportedIndex {
            name: "m",
            value: m,
            max: MAX_M,
        });
    }
    if k > 2 * m - 2 {
        return Err(Error::UnsupportedIndex {
            name: "k",
            value: k,
            max: 2 * m - 2,
        });
    }
    Ok(())
}

/// W_r(mu) by Horner with the exact alpha coefficients, r <= 3.
pub fn w_poly(r: usize, mu: &HPComplex) -> Result<HPComplex> {
    if r > MAX_W {
        return Err(Error::UnsupportedIndex {
            name: "r",
            value: r,
            max: MAX_W,
        });
    }
    let prec = mu.prec();
    let mut acc = HPComplex::zero(prec);
    for j in (0..=2 * r).rev() {
        acc = &acc * mu;
        acc += &super::trig::rat_to_complex(&alpha(r, j), prec);
    }
    Ok(acc)
}

/// Powers 1, 1/w, 1/w^2, ... of the inverse argument.
fn invw_powers(omega: &HPComplex, max: usize) -> Vec<HPComplex> {
    let inv = omega.inv();
    let mut v = Vec::with_capacity(max + 1);
    v.push(HPComplex::one(omega.prec()));
    for j in 1..=max {
        v.push(&v[j - 1] * &inv);
    }
    v
}

/// S_k(omega) by the closed form (csc w / (k-1)!) sum_r b_{r,k-1} w^-r,
/// k = 1..7 (limited by the stored table).
pub fn s_func(k: usize, omega: &HPComplex) -> Result<HPComplex> {
    if k < 1 || k > MAX_B_K + 1 {
        return Err(Error::UnsupportedIndex {
            name: "k",
            value: k,
            max: MAX_B_K + 1,
        });
    }
    let prec = omega.prec();
    let pows = TrigPowers::new(omega, (k - 1).max(1))?;
    let invw = invw_powers(omega, k - 1);
    let mut acc = HPComplex::zero(prec);
    for r in 0..k {
        acc += &(tables::b_stored(r, k - 1).eval(&pows) * &invw[r]);
    }
    Ok((&acc * &pows.csc[1]).div_i64(factorial(k - 1)))
}

/// eps = pi i / 4 at the given precision.
fn eps_value(prec: crate::hp::Precision) -> HPComplex {
    HPComplex::new(
        crate::hp::HPReal::zero(prec),
        consts::pi(prec).scale2(-2),
    )
}

fn eval_eps_poly(p: &EpsPoly, pows: &TrigPowers, eps_pows: &[HPComplex]) -> HPComplex {
    let prec = eps_pows[0].prec();
    let mut acc = HPComplex::zero(prec);
    for (r, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc += &(c.eval(pows) * &eps_pows[r]);
    }
    acc
}

/// D_k(m; omega) evaluated numerically from the stored table.
pub fn big_d(k: usize, m: usize, omega: &HPComplex) -> Result<HPComplex> {
    check_m_k(k, m)?;
    let prec = omega.prec();
    let pows = TrigPowers::new(omega, 2 * MAX_M - 2)?;
    let eps = eps_value(prec);
    let mut eps_pows = vec![HPComplex::one(prec)];
    for r in 1..MAX_M {
        eps_pows.push(&eps_pows[r - 1] * &eps);
    }
    Ok(eval_eps_poly(&big_d_stored(k, m), &pows, &eps_pows))
}

/// Correction factor T_m(omega) = csc w * sum_{k=0}^{2m-2} D_k(m) w^-k.
pub fn t_correction(m: usize, omega: &HPComplex) -> Result<HPComplex> {
    check_m_k(0, m)?;
    let prec = omega.prec();
    let pows = TrigPowers::new(omega, 2 * MAX_M - 2)?;
    let eps = eps_value(prec);
    let mut eps_pows = vec![HPComplex::one(prec)];
    for r in 1..MAX_M {
        eps_pows.push(&eps_pows[r - 1] * &eps);
    }
    let invw = invw_powers(omega, 2 * m - 2);
    let mut acc = HPComplex::zero(prec);
    for k in 0..=2 * m - 2 {
        let dk = eval_eps_poly(&big_d_stored(k, m), &pows, &eps_pows);
        acc += &(&dk * &invw[k]);
    }
    Ok(&acc * &pows.csc[1])
}

/// B_r(omega) by the S-function route (the pre-expansion definition).
pub fn b_r_via_s(r: usize, omega: &HPComplex) -> Result<HPComplex> {
    if r > MAX_W {
        return Err(Error::UnsupportedIndex {
            name: "r",
            value: r,
            max: MAX_W,
        });
    }
    let prec = omega.prec();
    let invw = invw_powers(omega, 2 * r);
    let mut acc = HPComplex::zero(prec);
    for j in 0..=2 * r {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = alpha(r, j) * BigRational::from(num_bigint::BigInt::from(sign * (1i64 << j)));
        let term = s_func(2 * r + 1 - j, omega)?;
        acc += &(&term * &invw[j]).scale(&rat_to_real(&c, prec));
    }
    Ok(acc)
}

/// T_m(omega) summed directly over eps^r B_r(omega); dual route to
/// [`t_correction`], kept for cross-checking.
pub fn t_correction_via_s(m: usize, omega: &HPComplex) -> Result<HPComplex> {
    check_m_k(0, m)?;
    let prec = omega.prec();
    let eps = eps_value(prec);
    let mut acc = HPComplex::zero(prec);
    let mut eps_pow = HPComplex::one(prec);
    for r in 0..m {
        acc += &(&eps_pow * &b_r_via_s(r, omega)?);
        eps_pow = &eps_pow * &eps;
    }
    Ok(acc)
}

/// A_r(s) = 2^-2r omega^(2r+1) B_r(omega), with omega derived from s.
pub fn a_coeff(r: usize, s: &HPComplex) -> Result<HPComplex> {
    let omega = crate::hp::omega_of_s(s);
    let b = b_r_via_s(r, &omega)?;
    Ok((&omega.powu(2 * r as u32 + 1) * &b).scale2(-2 * r as i64))
}

//! The smoothed-expansion evaluator: truncated main sum, correction term,
//! full reports, the exact incomplete-gamma reference path, and the
//! term-decay estimate.

use super::params::ExpansionParams;
use super::report::EvaluationReport;
use crate::error::{Error, Result};
use crate::hp::{consts, elem, HPComplex, HPReal};
use crate::oracle::{euler_maclaurin_z, OracleConfig};
use crate::special::{erfc_m, log_gamma, q_oracle, TransitionPoint};

/// n^-s = exp(-s ln n) with real ln n.
fn n_pow_minus_s(n: u32, s: &HPComplex) -> HPComplex {
    let prec = s.prec();
    if n == 1 {
        return HPComplex::one(prec);
    }
    let ln_n = elem::ln(&HPReal::from_i64(n as i64, prec));
    (-&s.scale(&ln_n)).exp()
}

/// One pass over the main sum, recording the real partial value at each
/// requested truncation K (ascending) and the magnitudes of the decaying
/// terms beyond the cutoff.
pub(crate) struct MainSumScan {
    /// (K, main sum truncated at N_t + K).
    pub at: Vec<(u32, HPReal)>,
    /// |n^-s erfc(.; m)| for n = N_t+1 .. N_t+max K.
    pub tail_magnitudes: Vec<HPReal>,
}

pub(crate) fn main_sum_scan(
    params: &ExpansionParams,
    m: usize,
    checkpoints: &[u32],
) -> Result<MainSumScan> {
    assert!(!checkpoints.is_empty());
    let mut ks = checkpoints.to_vec();
    ks.sort_unstable();
    ks.dedup();
    if ks[0] == 0 {
        return Err(Error::domain("main_sum", "K must be at least 1"));
    }
    let prec = params.t.prec();
    let phase = params.phase();
    let two = HPComplex::from_i64(2, 0, prec);
    // smoothed head: n <= N_t carries 2 - erfc(-arg; m), the reflected form
    // keeps the erfc argument in the right half-plane
    let mut acc = HPComplex::zero(prec);
    for n in 1..=params.n_cutoff {
        let tp = TransitionPoint::new(n, &params.s)?;
        let smoothed = &two - &erfc_m(&-&tp.smoothing_arg, m)?;
        acc += &(&n_pow_minus_s(n, &params.s) * &smoothed);
    }
    let mut out = MainSumScan {
        at: Vec::with_capacity(ks.len()),
        tail_magnitudes: Vec::new(),
    };
    let mut next = 0usize;
    let k_max = *ks.last().unwrap();
    for k in 1..=k_max {
        let n = params.n_cutoff + k;
        let tp = TransitionPoint::new(n, &params.s)?;
        let term = &n_pow_minus_s(n, &params.s) * &erfc_m(&tp.smoothing_arg, m)?;
        out.tail_magnitudes.push(term.abs());
        acc += &term;
        if ks[next] == k {
            out.at.push((k, (&phase * &acc).re.clone()));
            next += 1;
            if next == ks.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Truncated main sum
/// Re e^(i theta) { sum_{n<=N_t} n^-s (2 - erfc(.; m)) + sum_{N_t<n<=N_t+K} n^-s erfc(.; m) }.
pub fn main_sum(params: &ExpansionParams, m: usize, big_k: u32) -> Result<HPReal> {
    let scan = main_sum_scan(params, m, &[big_k])?;
    Ok(scan.at[0].1.clone())
}

/// Magnitudes |n^-s erfc(.; m)| of the decaying terms for
/// n = N_t+1 .. N_t+k_max (the data behind decay scans).
pub fn main_sum_diagnostics(
    params: &ExpansionParams,
    m: usize,
    k_max: u32,
) -> Result<Vec<HPReal>> {
    let scan = main_sum_scan(params, m, &[k_max.max(1)])?;
    Ok(scan.tail_magnitudes)
}

/// Correction term Re [ e^(i theta)/sqrt(2i) (pi e^(1/2)/omega)^s T_m(omega) ].
pub fn correction_term(params: &ExpansionParams, m: usize) -> Result<HPReal> {
    let prec = params.t.prec();
    let t_m = crate::coeff::t_correction(m, &params.omega)?;
    // (pi e^(1/2)/omega)^s = exp(s (ln pi + 1/2 - ln omega))
    let ln_pi = elem::ln(&consts::pi(prec));
    let half = HPReal::one(prec).scale2(-1);
    let expo_base = &HPComplex::from_real(&ln_pi + &half) - &params.omega.ln()?;
    let power = (&params.s * &expo_base).exp();
    // 1/sqrt(2i) = (1 - i)/2
    let inv_sqrt_2i = HPComplex::new(half.clone(), -&half);
    let full = &(&params.phase() * &inv_sqrt_2i) * &(&power * &t_m);
    Ok(full.re)
}

/// Order-of-magnitude size of the terms at n = N_t + K:
/// (4 pi K^2)^(-m-1/2) (t/2pi)^(-1/4), with the O-constant taken as 1.
pub fn decay_estimate(t: &HPReal, m: usize, big_k: u32) -> HPReal {
    let prec = t.prec();
    let four_pi_k2 = consts::pi(prec)
        .scale2(2)
        .mul_i64(big_k as i64 * big_k as i64);
    let expo = -(HPReal::from_i64(2 * m as i64 + 1, prec).scale2(-1));
    let first = elem::pow(&four_pi_k2, &expo);
    let quarter = -(HPReal::one(prec).scale2(-2));
    let second = elem::pow(&(t / &consts::pi(prec).scale2(1)), &quarter);
    &first * &second
}

/// Full evaluation at one (t, m, K); optionally diffs against the
/// Euler-Maclaurin oracle.
pub fn evaluate(
    t: &HPReal,
    m: usize,
    big_k: u32,
    with_oracle: bool,
    oracle_cfg: &OracleConfig,
) -> Result<EvaluationReport> {
    let params = ExpansionParams::new(t)?;
    let scan = main_sum_scan(&params, m, &[big_k])?;
    let main = scan.at[0].1.clone();
    let correction = correction_term(&params, m)?;
    let z_approx = &main - &correction;
    let (z_oracle, abs_error) = if with_oracle {
        let z = euler_maclaurin_z(t, oracle_cfg)?;
        let err = (&z_approx - &z).abs();
        (Some(z), Some(err))
    } else {
        (None, None)
    };
    Ok(EvaluationReport {
        t: t.clone(),
        m,
        big_k,
        n_cutoff: params.n_cutoff,
        main_sum: main,
        correction,
        z_approx,
        z_oracle,
        abs_error,
        per_term_magnitudes: scan.tail_magnitudes,
        hazard_flag: params.hazard_flag(),
        hazard_distance: params.hazard_distance.clone(),
        precision_digits: t.prec().digits(),
    })
}

/// Evaluate a whole (m x K) grid at one t, sharing the oracle value and the
/// per-m main-sum pass across truncations. Rows come out in (m, K) order.
pub fn evaluate_grid(
    t: &HPReal,
    ms: &[usize],
    ks: &[u32],
    with_oracle: bool,
    oracle_cfg: &OracleConfig,
) -> Result<Vec<EvaluationReport>> {
    let params = ExpansionParams::new(t)?;
    let z_oracle = if with_oracle {
        Some(euler_maclaurin_z(t, oracle_cfg)?)
    } else {
        None
    };
    let mut out = Vec::with_capacity(ms.len() * ks.len());
    for &m in ms {
        let scan = main_sum_scan(&params, m, ks)?;
        let correction = correction_term(&params, m)?;
        for &(k, ref main) in &scan.at {
            let z_approx = main - &correction;
            let abs_error = z_oracle.as_ref().map(|z| (&z_approx - z).abs());
            out.push(EvaluationReport {
                t: t.clone(),
                m,
                big_k: k,
                n_cutoff: params.n_cutoff,
                main_sum: main.clone(),
                correction: correction.clone(),
                z_approx,
                z_oracle: z_oracle.clone(),
                abs_error,
                per_term_magnitudes: scan.tail_magnitudes[..k as usize].to_vec(),
                hazard_flag: params.hazard_flag(),
                hazard_distance: params.hazard_distance.clone(),
                precision_digits: t.prec().digits(),
            });
        }
    }
    Ok(out)
}

/// Z(t) through the exact incomplete-gamma representation
/// Z(t) = 2 Re e^(i theta) { sum_n n^-s Q(s/2, pi n^2 i) - pi^(s/2) e^(pi i s/4)/(s Gamma(s/2)) },
/// truncated at n_max with iterated averaging of the alternating 1/n^2 tail.
/// An internal consistency anchor fully independent of the asymptotics.
pub fn reference_gamma_path(t: &HPReal, n_max: usize, cfg: &OracleConfig) -> Result<HPReal> {
    if n_max < 64 {
        return Err(Error::domain("reference_gamma_path", "n_max must be at least 64"));
    }
    let params = ExpansionParams::new(t)?;
    let prec = params.t.prec();
    let a = params.s.scale2(-1);
    let pi = consts::pi(prec);
    // subtracted constant: pi^(s/2) e^(pi i s/4) / (s Gamma(s/2))
    let ln_pi = elem::ln(&pi);
    let quarter_pi_s = params.s.scale(&pi).scale2(-2).mul_i();
    let expo = &params.s.scale(&ln_pi).scale2(-1) + &quarter_pi_s;
    let constant = &(&expo - &log_gamma(&a)?).exp() / &params.s;
    // partial sums, with the last `levels` of them retained for averaging
    let levels = 40.min(n_max / 4);
    let start_avg = n_max - levels;
    let mut acc = -&constant;
    let mut partials: Vec<HPComplex> = Vec::with_capacity(levels + 1);
    for n in 1..=n_max {
        let z = HPComplex::new(HPReal::zero(prec), pi.mul_i64(n as i64 * n as i64));
        let q = q_oracle(&a, &z)?;
        acc += &(&n_pow_minus_s(n as u32, &params.s) * &q);
        if n >= start_avg {
            partials.push(acc.clone());
        }
    }
    // iterated averaging collapses the alternating tail; the difference of
    // the last two stages estimates what is left
    let mut stage = partials;
    let mut prev_head = stage[0].clone();
    while stage.len() > 1 {
        prev_head = stage[0].clone();
        stage = stage
            .windows(2)
            .map(|w| (&w[0] + &w[1]).scale2(-1))
            .collect();
    }
    let est = (&stage[0] - &prev_head).abs();
    let tol_bits = (cfg.tail_tolerance_log10 as f64 * std::f64::consts::LOG2_10).floor() as i64;
    if est.mag2() > tol_bits {
        return Err(Error::TailNotConverged(format!(
            "gamma-path tail estimate 1e{:.1} above tolerance 1e{}",
            est.log10_abs(),
            cfg.tail_tolerance_log10
        )));
    }
    Ok((&params.phase() * &stage[0]).re.scale2(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::Precision;

    fn p40() -> Precision {
        Precision::from_digits(40)
    }

    fn parse(s: &str) -> HPReal {
        HPReal::parse(s, p40()).unwrap()
    }

    #[test]
    fn grouping_equivalence_of_the_expansion() {
        // both contributions share one phase factor, so taking the real part
        // of the combined brace equals the split used everywhere else
        let params = ExpansionParams::new(&parse("2600")).unwrap();
        let m = 2;
        let main = main_sum(&params, m, 8).unwrap();
        let corr = correction_term(&params, m).unwrap();
        let split = &main - &corr;
        // combined: Re[e^{i theta} (sum - pref T_m)] with the phase factored
        let prec = p40();
        let phase = params.phase();
        let two = HPComplex::from_i64(2, 0, prec);
        let mut brace = HPComplex::zero(prec);
        for n in 1..=params.n_cutoff + 8 {
            let tp = TransitionPoint::new(n, &params.s).unwrap();
            let sm = if n <= params.n_cutoff {
                &two - &erfc_m(&-&tp.smoothing_arg, m).unwrap()
            } else {
                erfc_m(&tp.smoothing_arg, m).unwrap()
            };
            brace += &(&n_pow_minus_s(n, &params.s) * &sm);
        }
        let t_m = crate::coeff::t_correction(m, &params.omega).unwrap();
        let half = HPReal::one(prec).scale2(-1);
        let ln_pi = elem::ln(&consts::pi(prec));
        let power = (&params.s * &(&HPComplex::from_real(&ln_pi + &half) - &params.omega.ln().unwrap())).exp();
        let inv_sqrt_2i = HPComplex::new(half.clone(), -&half);
        brace = &brace - &(&inv_sqrt_2i * &(&power * &t_m));
        let combined = (&phase * &brace).re.clone();
        let d = (&combined - &split).abs();
        assert!(
            d.is_zero() || d.mag2() < split.mag2() - (prec.bits() as i64) + 12,
            "groupings disagree: {combined:?} vs {split:?}"
        );
    }

    #[test]
    fn table_one_spot_checks() {
        // frozen from the published 17-digit grid
        let params = ExpansionParams::new(&parse("2600")).unwrap();
        assert_eq!(params.n_cutoff, 20);
        let scan = main_sum_scan(&params, 2, &[10, 20]).unwrap();
        let want10 = parse("-0.46197900631840431");
        let d10 = (&scan.at[0].1 - &want10).abs();
        assert!(
            d10.log10_abs() < -16.5,
            "main sum m=2 K=10: {:?} (log10 diff {:.2})",
            scan.at[0].1,
            d10.log10_abs()
        );
        let want20 = parse("-0.46197900414489825");
        let d20 = (&scan.at[1].1 - &want20).abs();
        assert!(d20.log10_abs() < -16.5);
        let corr = correction_term(&params, 2).unwrap();
        let dcorr = (&corr - &parse("0.17012331658969433")).abs();
        assert!(dcorr.log10_abs() < -16.0, "correction: {corr:?}");
    }

    #[test]
    fn decay_estimate_power_law() {
        // doubling K scales the estimate by 2^-(2m+1)
        let t = parse("2600");
        for m in 1..=4usize {
            let a = decay_estimate(&t, m, 10);
            let b = decay_estimate(&t, m, 20);
            let ratio = (&a / &b).log10_abs();
            let want = (2 * m as i64 + 1) as f64 * std::f64::consts::LOG10_2;
            assert!((ratio - want).abs() < 1e-6, "m={m}: ratio 1e{ratio}");
        }
    }

    #[test]
    fn evaluate_report_fields_cohere() {
        let cfg = OracleConfig::with_digits(25);
        let rep = evaluate(&parse("2600"), 3, 10, true, &cfg).unwrap();
        assert_eq!(rep.n_cutoff, 20);
        assert_eq!(rep.per_term_magnitudes.len(), 10);
        let z = &rep.main_sum - &rep.correction;
        assert_eq!(z, rep.z_approx);
        // published error for this cell: 2.315e-11
        let err = rep.abs_error.unwrap();
        let l = err.log10_abs();
        assert!((-11.0 - l).abs() < 0.7, "error magnitude 1e{l:.2}");
        assert!(!rep.hazard_flag);
    }
}

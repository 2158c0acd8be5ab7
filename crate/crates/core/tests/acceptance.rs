//! Acceptance suite: every release gate runs here, one pass/fail line per
//! criterion, with tolerances pinned in code.

mod support;

use std::time::Instant;
use support::*;
use zsmooth_core::coeff::{
    self, b_coeffs_generate, b_stored, big_d_generated, big_d_stored, d_coeffs, d_stored,
    gamma_stirling, s_func, t_correction, t_correction_via_s,
};
use zsmooth_core::eval::{evaluate_grid, main_sum_diagnostics, reference_gamma_path, ExpansionParams};
use zsmooth_core::hp::omega_of_s;
use zsmooth_core::oracle::{euler_maclaurin_z, q_quadrature, s_direct_sum, OracleConfig};
use zsmooth_core::special::q_uniform;
use zsmooth_core::{HPComplex, HPReal};

fn oracle30() -> OracleConfig {
    OracleConfig::with_digits(30)
}

fn check_grid(
    t: &str,
    corrections: &[(usize, &str)],
    grid: &[GridRow],
    err_exceptions: &[(usize, u32)],
) -> Vec<zsmooth_core::EvaluationReport> {
    let tv = parse(t);
    let reports = evaluate_grid(&tv, &[2, 3, 4], &[10, 20, 30], true, &oracle30()).unwrap();
    for (m, printed) in corrections {
        let rep = reports.iter().find(|r| r.m == *m).unwrap();
        assert_matches_printed(&rep.correction, printed, &format!("t={t} correction m={m}"));
    }
    for (m, k, main_printed, err_printed) in grid {
        let rep = reports
            .iter()
            .find(|r| r.m == *m && r.big_k == *k)
            .unwrap();
        assert_matches_printed(
            &rep.main_sum,
            main_printed,
            &format!("t={t} main sum m={m} K={k}"),
        );
        if !err_exceptions.contains(&(*m, *k)) {
            let err = rep.abs_error.as_ref().unwrap();
            let ratio = err.log10_abs() - parse(err_printed).log10_abs();
            assert!(
                ratio.abs() < std::f64::consts::LOG10_2,
                "t={t} error m={m} K={k}: 1e{:.3} vs printed {err_printed} (off by factor 10^{ratio:.3})",
                err.log10_abs()
            );
        }
    }
    // error monotonicity across the grid: K 10 -> 20 -> 30 improves for
    // fixed m, and m 2 -> 3 -> 4 improves for fixed K
    let err_of = |m: usize, k: u32| {
        reports
            .iter()
            .find(|r| r.m == m && r.big_k == k)
            .unwrap()
            .abs_error
            .clone()
            .unwrap()
    };
    for m in [2usize, 3, 4] {
        assert!(err_of(m, 10) > err_of(m, 20), "t={t} m={m}: K=20 not better");
        assert!(err_of(m, 20) > err_of(m, 30), "t={t} m={m}: K=30 not better");
    }
    for k in [10u32, 20, 30] {
        assert!(err_of(2, k) > err_of(3, k), "t={t} K={k}: m=3 not better");
        assert!(err_of(3, k) > err_of(4, k), "t={t} K={k}: m=4 not better");
    }
    reports
}

#[test]
fn c1_table_reproduction_t2600() {
    let start = Instant::now();
    // the (2,10) error entry is asserted separately below
    let reports = check_grid("2600", &T2600_CORRECTIONS, &T2600_GRID, &[(2, 10)]);
    let z = reports[0].z_oracle.clone().unwrap();
    assert_matches_printed(
        &parse(&z.to_decimal(8)),
        T2600_Z_CAPTION,
        "t=2600 caption Z",
    );

    // Grid erratum 1: the (m=2, K=10) error is printed as 2.269e-08; the
    // actual gap carries the same mantissa one decade lower. Prove both.
    let rep210 = reports
        .iter()
        .find(|r| r.m == 2 && r.big_k == 10)
        .unwrap();
    let err = rep210.abs_error.as_ref().unwrap();
    let l = err.log10_abs();
    assert!(
        (l - (-8.644)).abs() < 0.05,
        "(2,10) error should be 2.269e-09, got 1e{l:.3}"
    );

    // Grid erratum 2: the printed m=3 correction ends ...848999 while every
    // consistency route gives ...84898512907x. The published error column
    // itself discriminates: with our correction the K=30 error reproduces
    // the printed 2.146e-14; with the printed correction it would not.
    let rep330 = reports
        .iter()
        .find(|r| r.m == 3 && r.big_k == 30)
        .unwrap();
    let printed_corr = parse("0.08577294705848999");
    let gap = (&rep330.correction - &printed_corr).abs();
    assert!(
        (gap.log10_abs() - (-15.86)).abs() < 0.05,
        "print gap changed: 1e{:.3}",
        gap.log10_abs()
    );
    let err_with_ours = rep330.abs_error.as_ref().unwrap();
    let band = |x: &HPReal| parse("2.1455e-14") <= x.abs() && x.abs() < parse("2.1465e-14");
    assert!(
        band(err_with_ours),
        "K=30 error with our correction must round to the printed 2.146e-14, got {}",
        err_with_ours.to_decimal(5)
    );
    let err_with_printed = (&(&rep330.main_sum - &printed_corr) - &z).abs();
    assert!(
        !band(&err_with_printed),
        "printed correction should not reproduce the printed error column"
    );

    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 10.0, "budget exceeded: {dt:.2?}");
    println!("criterion 1 (table reproduction, t=2600): PASS in {dt:.2?} [2 print errata proven]");
}

#[test]
fn c2_table_reproduction_t200000() {
    let start = Instant::now();
    let tv = parse("200000");
    let params = ExpansionParams::new(&tv).unwrap();
    assert_eq!(params.n_cutoff, 178, "cutoff at t = 2e5");
    let reports = check_grid("200000", &T200000_CORRECTIONS, &T200000_GRID, &[]);
    let z = reports[0].z_oracle.clone().unwrap();
    assert_matches_printed(
        &parse(&z.to_decimal(9)),
        T200000_Z_CAPTION,
        "t=2e5 caption Z",
    );
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 120.0, "budget exceeded: {dt:.2?}");
    println!("criterion 2 (table reproduction, t=200000): PASS in {dt:.2?}");
}

#[test]
fn c3_exact_representation_anchor() {
    let start = Instant::now();
    let t = parse("2600");
    let anchor = reference_gamma_path(&t, 500, &oracle30()).unwrap();
    let em = euler_maclaurin_z(&t, &oracle30()).unwrap();
    let gap = (&anchor - &em).abs();
    assert!(
        gap < parse("1e-12"),
        "gamma path vs Euler-Maclaurin: 1e{:.2}",
        gap.log10_abs()
    );
    assert_matches_printed(&parse(&anchor.to_decimal(8)), T2600_Z_CAPTION, "anchor");
    assert_matches_printed(&parse(&em.to_decimal(8)), T2600_Z_CAPTION, "oracle");
    println!(
        "criterion 3 (exact-representation anchor): PASS in {:.2?} (|gap| = 1e{:.1})",
        start.elapsed(),
        gap.log10_abs()
    );
}

#[test]
fn c4_coefficient_regeneration() {
    let start = Instant::now();
    let table = b_coeffs_generate(6).unwrap();
    for k in 0..=6usize {
        for r in 0..=k {
            assert_eq!(table[k][r], b_stored(r, k), "b_{{{r},{k}}}");
        }
    }
    for r in 0..=3usize {
        let d = d_coeffs(r).unwrap();
        for k in 0..=2 * r {
            assert_eq!(d[k], d_stored(r, k), "d_{{{r},{k}}}");
        }
    }
    for m in 1..=4usize {
        for k in 0..=2 * m - 2 {
            assert_eq!(
                big_d_generated(k, m).unwrap(),
                big_d_stored(k, m).normalized(),
                "D_{k}({m})"
            );
        }
    }
    // the two named anchors: D_6(4) = (1003/6480) eps^3 and d_{3,2} = 0
    let d64 = big_d_generated(6, 4).unwrap();
    assert_eq!(d64.coeffs.len(), 4);
    assert_eq!(
        d64.coeffs[3],
        zsmooth_core::coeff::TrigPoly::constant(coeff::rat(1003, 6480))
    );
    for r in 0..3 {
        assert!(d64.coeffs[r].is_zero());
    }
    assert!(d_coeffs(3).unwrap()[2].is_zero(), "d_{{3,2}} must vanish");
    println!(
        "criterion 4 (coefficient regeneration): PASS in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn c5_dual_path_correction_factor() {
    let start = Instant::now();
    // agreement threshold 10^-(digits-5) at 40 digits
    let tol = parse("1e-35");
    for t in ["100", "2600", "200000"] {
        let s = HPComplex::new(HPReal::one(p40()).scale2(-1), parse(t));
        let w = omega_of_s(&s);
        for m in 1..=4usize {
            let a = t_correction(m, &w).unwrap();
            let b = t_correction_via_s(m, &w).unwrap();
            let d = (&a - &b).abs();
            let scale = &HPReal::one(p40()) + &a.abs();
            assert!(
                d <= &tol * &scale,
                "T_{m} at t={t}: routes differ by 1e{:.2}",
                d.log10_abs()
            );
        }
    }
    println!(
        "criterion 5 (dual-path correction factor): PASS in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn c6_s_function_triple_agreement() {
    let start = Instant::now();
    let samples = [
        ("1", "0.1"),
        ("2.5", "-0.2"),
        ("0.6", "0.05"),
        ("5.2", "0.3"),
        ("1.8", "-0.04"),
    ];
    let tol = parse("1e-34");
    for (re, im) in samples {
        let w = HPComplex::new(parse(re), parse(im));
        for k in 1..=4usize {
            // route 1: symbolic recurrence S_{k+1} = S_k/w - S_k'/k, evaluated
            let rec = if k == 1 {
                w.csc().unwrap()
            } else {
                let prev = coeff::s_sym(k - 1);
                let v = prev.eval(&w).unwrap();
                let dv = prev.derivative().eval(&w).unwrap();
                &(&v / &w) - &dv.div_i64(k as i64 - 1)
            };
            // route 2: stored closed form
            let closed = s_func(k, &w).unwrap();
            let d12 = (&rec - &closed).abs();
            let scale = &HPReal::one(p40()) + &closed.abs();
            assert!(
                d12 <= &tol * &scale,
                "S_{k} at ({re},{im}): recurrence vs closed 1e{:.2}",
                d12.log10_abs()
            );
            // route 3: defining bilateral sum within its certified radius
            let n_max = match k {
                1 => 120_000,
                2 => 12_000,
                _ => 3_000,
            };
            let (direct, radius) = s_direct_sum(k, &w, n_max).unwrap();
            let d23 = (&direct - &closed).abs();
            assert!(
                d23 <= radius,
                "S_{k} at ({re},{im}): bilateral sum off by 1e{:.2}, radius 1e{:.2}",
                d23.log10_abs(),
                radius.log10_abs()
            );
        }
    }
    println!(
        "criterion 6 (S-function triple agreement): PASS in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn c7_uniform_asymptotics_order() {
    let start = Instant::now();
    // ray with lambda = 2 fixed: a = (4+3i) 2^j, z = 2a, j = 3..8
    let base = HPComplex::from_i64(4, 3, p40());
    let points: Vec<(HPComplex, HPComplex, HPComplex)> = (3..=8i64)
        .map(|j| {
            let a = base.scale2(j);
            let z = a.scale2(1);
            let q = q_quadrature(&a, &z).unwrap();
            (a, z, q)
        })
        .collect();
    for m in 1..=3usize {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (a, z, q) in &points {
            let u = q_uniform(a, z, m).unwrap();
            let d = (&u - q).abs();
            xs.push(a.abs().log10_abs());
            ys.push(d.log10_abs());
        }
        let slope = fit_slope(&xs, &ys);
        assert!(
            (slope + m as f64).abs() <= 0.3,
            "m={m}: fitted log-log slope {slope:.3}, want {} +- 0.3",
            -(m as f64)
        );
    }
    println!(
        "criterion 7 (uniform-asymptotics order): PASS in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn c8_stirling_alpha_consistency() {
    // exact rational arithmetic: W_r(-1) = (-1)^r gamma_r
    use num_traits::Zero;
    for r in 0..=3usize {
        let mut acc = num_rational::BigRational::zero();
        let mut sign = coeff::rat(1, 1);
        for j in 0..=2 * r {
            acc += &sign * coeff::alpha(r, j);
            sign = -sign;
        }
        let want = if r % 2 == 0 {
            gamma_stirling(r)
        } else {
            -gamma_stirling(r)
        };
        assert_eq!(acc, want, "W_{r}(-1)");
    }
    println!("criterion 8 (Stirling/alpha consistency): PASS (exact)");
}

#[test]
fn c9_decay_law() {
    let start = Instant::now();
    let params = ExpansionParams::new(&parse("2600")).unwrap();
    for m in 2..=4usize {
        let mags = main_sum_diagnostics(&params, m, 30).unwrap();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for k in 5..=30usize {
            xs.push((k as f64).log10());
            ys.push(mags[k - 1].log10_abs());
        }
        let slope = fit_slope(&xs, &ys);
        let want = -(2.0 * m as f64 + 0.5);
        assert!(
            (slope - want).abs() <= 0.5,
            "m={m}: decay slope {slope:.3}, want {want} +- 0.5"
        );
    }
    println!("criterion 9 (term-decay law): PASS in {:.2?}", start.elapsed());
}

//! Slow-but-sure Q(a, z) by direct numerical integration of the upper
//! incomplete gamma integral along the horizontal ray u = z + x, x >= 0.
//!
//! A cheap double-precision prescan of log|integrand| and its phase chooses
//! the panel layout (bounded variation per panel) and the truncation point;
//! the integral itself is then composite Gauss-Legendre at an elevated
//! working precision. Two node counts are compared and panels are split
//! until the results agree to the target precision.

use crate::error::{Error, Result};
use crate::hp::{HPComplex, HPReal, Precision};
use crate::special::log_gamma;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Smallest |z| the ray path supports (below this the path would pass too
/// close to the integrand singularity at the origin).
const MIN_ABS_Z: f64 = 0.9;
/// Largest |a| accepted; the prescan runs in double precision.
const MAX_ABS_A: f64 = 4000.0;

#[derive(Copy, Clone)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn ln(self) -> C64 {
        C64 {
            re: 0.5 * (self.re * self.re + self.im * self.im).ln(),
            im: self.im.atan2(self.re),
        }
    }

    fn mul(self, o: C64) -> C64 {
        C64 {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

/// (Re, Im) of (a-1) ln(z+x) - (z+x).
fn exponent_scan(a: C64, z: C64, x: f64) -> (f64, f64) {
    let u = C64 {
        re: z.re + x,
        im: z.im,
    };
    let w = C64 {
        re: a.re - 1.0,
        im: a.im,
    }
    .mul(u.ln());
    (w.re - u.re, w.im - u.im)
}

/// Stirling-order estimate of Re log Gamma(a) in double precision.
fn re_log_gamma_f64(a: C64) -> f64 {
    let l = a.ln();
    let h = C64 {
        re: a.re - 0.5,
        im: a.im,
    }
    .mul(l);
    h.re - a.re + 0.5 * (2.0 * std::f64::consts::PI).ln()
}

fn legendre_nodes(n: usize, prec: Precision) -> Arc<Vec<(HPReal, HPReal)>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<Vec<(HPReal, HPReal)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(n, prec.bits())) {
        return v.clone();
    }
    let mut out = Vec::with_capacity(n);
    let one = HPReal::one(prec);
    let two = HPReal::from_i64(2, prec);
    for i in 1..=n.div_ceil(2) {
        let seed = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = HPReal::from_f64(seed, prec);
        let mut deriv = HPReal::one(prec);
        for _ in 0..40 {
            // Legendre recurrence for P_n(x) and P_{n-1}(x)
            let mut p0 = one.clone();
            let mut p1 = x.clone();
            for j in 1..n {
                let p2 = (&(&x * &p1).mul_i64(2 * j as i64 + 1) - &p0.mul_i64(j as i64))
                    .div_i64(j as i64 + 1);
                p0 = p1;
                p1 = p2;
            }
            // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
            let num = (&(&x * &p1) - &p0).mul_i64(n as i64);
            let den = &(&x * &x) - &one;
            deriv = &num / &den;
            let dx = &p1 / &deriv;
            x = &x - &dx;
            if dx.is_zero() || dx.mag2() < -(prec.bits() as i64) - 2 {
                break;
            }
        }
        let w = &two / &(&(&one - &(&x * &x)) * &(&deriv * &deriv));
        if 2 * i <= n {
            out.push((x.clone(), w.clone()));
            out.push((-&x, w));
        } else {
            out.push((x, w)); // midpoint node of odd rules
        }
    }
    let arc = Arc::new(out);
    cache.lock().unwrap().insert((n, prec.bits()), arc.clone());
    arc
}

struct PanelPlan {
    breakpoints: Vec<f64>,
    elevation_bits: u32,
}

/// Scan the exponent along the ray and lay out panels with bounded
/// variation of log-magnitude plus phase.
fn plan_panels(a: C64, z: C64, prec: Precision, var_budget: f64) -> Result<PanelPlan> {
    let bits = prec.bits() as f64;
    let scale = (a.re * a.re + a.im * a.im)
        .sqrt()
        .max((z.re * z.re + z.im * z.im).sqrt())
        .max(10.0);
    let mut step = scale / 600.0;
    let cutoff_nats = (bits + 48.0) * std::f64::consts::LN_2;
    let (h0, mut phi_prev) = exponent_scan(a, z, 0.0);
    let mut h_prev = h0;
    let mut max_h = h0;
    let mut x = 0.0f64;
    let mut var_acc = 0.0f64;
    let mut breakpoints = vec![0.0f64];
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        if iterations > 400_000 {
            return Err(Error::Quadrature(
                "ray scan failed to reach the truncation point".into(),
            ));
        }
        let x_next = x + step;
        let (h, phi) = exponent_scan(a, z, x_next);
        let dvar = (h - h_prev).abs() + (phi - phi_prev).abs();
        if dvar > 2.0 * var_budget {
            // resolve this stretch more finely
            step *= 0.5;
            continue;
        }
        x = x_next;
        var_acc += dvar;
        if var_acc >= var_budget {
            breakpoints.push(x);
            var_acc = 0.0;
        }
        max_h = max_h.max(h);
        let done = h < max_h - cutoff_nats && x > scale * 0.5;
        h_prev = h;
        phi_prev = phi;
        if done {
            break;
        }
        if dvar < 0.2 * var_budget {
            step *= 1.3;
        }
    }
    if *breakpoints.last().unwrap() < x {
        breakpoints.push(x);
    }
    let result_scale = h0.max(re_log_gamma_f64(a));
    let elevation = ((max_h - result_scale).max(0.0) * std::f64::consts::LOG2_E).ceil() as u32;
    Ok(PanelPlan {
        breakpoints,
        elevation_bits: elevation + 48,
    })
}

fn integrate_panels(
    a: &HPComplex,
    z: &HPComplex,
    breakpoints: &[f64],
    nodes: usize,
    wp: Precision,
) -> Result<HPComplex> {
    let rule = legendre_nodes(nodes, wp);
    let aw = a.with_prec(wp);
    let zw = z.with_prec(wp);
    let am1 = &aw - &HPComplex::one(wp);
    let mut total = HPComplex::zero(wp);
    for win in breakpoints.windows(2) {
        let x0 = HPReal::from_f64(win[0], wp);
        let x1 = HPReal::from_f64(win[1], wp);
        let mid = (&x0 + &x1).scale2(-1);
        let half = (&x1 - &x0).scale2(-1);
        let mut panel = HPComplex::zero(wp);
        for (xi, wgt) in rule.iter() {
            let x = &mid + &(&half * xi);
            let u = &zw + &HPComplex::from_real(x);
            let expo = &(&am1 * &u.ln()?) - &u;
            panel += &expo.exp().scale(wgt);
        }
        total += &panel.scale(&half);
    }
    Ok(total)
}

/// Q(a, z) = Gamma(a, z)/Gamma(a) by quadrature along u = z + x.
/// Domain: |arg z| < 3 pi/4, |z| >= 1, moderate |a|.
pub fn q_quadrature(a: &HPComplex, z: &HPComplex) -> Result<HPComplex> {
    let prec = a.prec();
    let af = C64 {
        re: a.re.to_f64(),
        im: a.im.to_f64(),
    };
    let zf = C64 {
        re: z.re.to_f64(),
        im: z.im.to_f64(),
    };
    let za = (zf.re * zf.re + zf.im * zf.im).sqrt();
    if za < MIN_ABS_Z {
        return Err(Error::domain("q_quadrature", "|z| too small for the ray path"));
    }
    if z.re.is_negative() && z.re.abs() >= z.im.abs() {
        return Err(Error::domain("q_quadrature", "need |arg z| < 3 pi / 4"));
    }
    if (af.re * af.re + af.im * af.im).sqrt() > MAX_ABS_A {
        return Err(Error::domain("q_quadrature", "|a| too large for the prescan"));
    }
    let mut plan = plan_panels(af, zf, prec, 6.0)?;
    let mut attempt = 0;
    loop {
        let wp = prec.raised(plan.elevation_bits);
        let coarse = integrate_panels(a, z, &plan.breakpoints, 40, wp)?;
        let fine = integrate_panels(a, z, &plan.breakpoints, 56, wp)?;
        let diff = (&coarse - &fine).abs();
        let ok = diff.is_zero()
            || fine.is_zero()
            || diff.mag2() < fine.mag2() - (prec.bits() as i64) - 6;
        if ok {
            let lg = log_gamma(&a.with_prec(wp))?;
            let q = &fine * &(-&lg).exp();
            return Ok(q.with_prec(prec));
        }
        attempt += 1;
        if attempt > 2 {
            return Err(Error::Quadrature(format!(
                "refinement stalled: node-count disagreement 2^{}",
                diff.mag2() - fine.mag2()
            )));
        }
        // halve every panel and try again
        let mut refined = Vec::with_capacity(plan.breakpoints.len() * 2);
        for win in plan.breakpoints.windows(2) {
            refined.push(win[0]);
            refined.push(0.5 * (win[0] + win[1]));
        }
        refined.push(*plan.breakpoints.last().unwrap());
        plan = PanelPlan {
            breakpoints: refined,
            elevation_bits: plan.elevation_bits + 16,
        };
    }
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
    fn quadrature_closed_forms() {
        // Q(1, 1) = e^-1
        let one = HPComplex::one(p40());
        let q = q_quadrature(&one, &one).unwrap();
        let want = (-&one).exp();
        assert_close(&q, &want, 20);
        // Q(3, 2) reference
        let q32 = q_quadrature(&c("3", "0"), &c("2", "0")).unwrap();
        assert_close(
            &q32,
            &c("0.67667641618306345946999747486242201703815772954788", "0"),
            20,
        );
    }

    #[test]
    fn quadrature_complex_reference() {
        // Q(5, 5i): the phase-heavy small case
        let q = q_quadrature(&c("5", "0"), &c("0", "5")).unwrap();
        assert_close(
            &q,
            &c(
                "19.307888629110774353260656049896217103443702975107",
                "9.4530392242253893810995001072204216472053539078252",
            ),
            20,
        );
    }

    #[test]
    fn quadrature_agrees_with_series_route_at_scale() {
        // a = s/2 at t = 2600, z just above the transition
        let a = c("0.25", "1300");
        let z = HPComplex::new(
            HPReal::zero(p40()),
            crate::hp::consts::pi(p40()).mul_i64(21 * 21),
        );
        let q = q_quadrature(&a, &z).unwrap();
        let want = crate::special::q_oracle(&a, &z).unwrap();
        assert_close(&q, &want, 24);
    }

    #[test]
    fn quadrature_rejects_bad_domain() {
        assert!(q_quadrature(&c("2", "0"), &c("0.1", "0")).is_err());
        assert!(q_quadrature(&c("2", "0"), &c("-3", "1")).is_err());
    }
}

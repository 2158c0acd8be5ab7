//! Everything derived from t before the sums run: s, omega, the cutoff
//! N_t = [(t/2pi)^(1/2)], the phase theta(t), and the near-integer hazard
//! distance of (t/2pi)^(1/2).

use crate::error::{Error, Result};
use crate::hp::{consts, omega_of_s, HPComplex, HPReal};
use crate::special::theta;
use num_traits::ToPrimitive;

/// Riemann-Siegel cutoff N_t = floor((t/2pi)^(1/2)); requires t > 2pi so
/// that the expansion regime N_t >= 1 holds.
pub fn cutoff(t: &HPReal) -> Result<u32> {
    let prec = t.prec().raised(16);
    let tw = t.with_prec(prec);
    let two_pi = consts::pi(prec).scale2(1);
    if tw <= two_pi {
        return Err(Error::domain(
            "cutoff",
            "t <= 2 pi gives N_t = 0; the expansion needs N_t >= 1",
        ));
    }
    let root = (&tw / &two_pi).sqrt();
    // nudge by an amount far above the arithmetic error so exact squares
    // floor to their true integer value
    let nudge = root.scale2(-(3 * prec.bits() as i64 / 4));
    let n = (&root + &nudge).floor_bigint();
    n.to_u32().ok_or_else(|| Error::domain("cutoff", "t out of supported range"))
}

/// Distance of (t/2pi)^(1/2) to the nearest integer.
pub fn hazard_distance(t: &HPReal) -> HPReal {
    let prec = t.prec();
    let two_pi = consts::pi(prec).scale2(1);
    let root = (t / &two_pi).sqrt();
    let nearest = HPReal::from_bigint(root.round_bigint(), prec);
    (&root - &nearest).abs()
}

/// Threshold below which csc omega / cot omega grow large and individual
/// terms become numerically delicate (detection and warning only).
pub const HAZARD_THRESHOLD: f64 = 0.05;

/// Per-evaluation parameters of the smoothed expansion.
#[derive(Clone, Debug)]
pub struct ExpansionParams {
    pub t: HPReal,
    pub s: HPComplex,
    pub omega: HPComplex,
    pub n_cutoff: u32,
    pub theta_t: HPReal,
    pub hazard_distance: HPReal,
}

impl ExpansionParams {
    pub fn new(t: &HPReal) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::domain("ExpansionParams", "t must be positive"));
        }
        let n_cutoff = cutoff(t)?;
        let prec = t.prec();
        let s = HPComplex::new(HPReal::one(prec).scale2(-1), t.clone());
        let omega = omega_of_s(&s);
        let theta_t = theta(t)?;
        Ok(ExpansionParams {
            t: t.clone(),
            s,
            omega,
            n_cutoff,
            theta_t,
            hazard_distance: hazard_distance(t),
        })
    }

    /// True when (t/2pi)^(1/2) is within 0.05 of an integer.
    pub fn hazard_flag(&self) -> bool {
        let thresh = HPReal::from_f64(HAZARD_THRESHOLD, self.t.prec());
        self.hazard_distance < thresh
    }

    /// e^(i theta(t)).
    pub fn phase(&self) -> HPComplex {
        let (s, c) = crate::hp::elem::sincos(&self.theta_t);
        HPComplex::new(c, s)
    }
}

//! Evaluation output: the split into main sum and correction term, the
//! resulting Z approximation, optional oracle comparison, and diagnostics.

use crate::hp::HPReal;

#[derive(Clone, Debug)]
pub struct EvaluationReport {
    pub t: HPReal,
    pub m: usize,
    pub big_k: u32,
    pub n_cutoff: u32,
    pub main_sum: HPReal,
    pub correction: HPReal,
    /// main_sum - correction.
    pub z_approx: HPReal,
    pub z_oracle: Option<HPReal>,
    pub abs_error: Option<HPReal>,
    /// |n^-s erfc(eta_n sqrt(s)/2; m)| for n = N_t+1 .. N_t+K.
    pub per_term_magnitudes: Vec<HPReal>,
    pub hazard_flag: bool,
    pub hazard_distance: HPReal,
    pub precision_digits: u32,
}

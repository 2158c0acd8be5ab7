//! Assembly of the smoothed expansion: parameters derived from t, the
//! truncated main sum and correction term, full evaluation reports, the
//! exact-representation reference path, and the term-decay estimate.

pub mod evaluator;
pub mod params;
pub mod report;

pub use evaluator::{
    correction_term, decay_estimate, evaluate, evaluate_grid, main_sum, main_sum_diagnostics,
    reference_gamma_path,
};
pub use params::{cutoff, hazard_distance, ExpansionParams, HAZARD_THRESHOLD};
pub use report::EvaluationReport;

//! Exact coefficient data and the symbolic engine behind the correction
//! terms: alpha/gamma tables, the b_{r,k} expansion of the S functions, the
//! d_{r,k}/D_k(m) correction coefficients, and the c_k(eta) transition
//! series. Symbolic work is exact rational arithmetic throughout; numbers
//! appear only at evaluation time.

pub mod ck;
pub mod engine;
pub mod series;
pub mod tables;
pub mod trig;

pub use engine::{
    a_coeff, b_coeffs_generate, b_generated, b_r_via_s, big_d, big_d_generated, d_coeffs, s_func,
    s_sym, t_correction, t_correction_via_s, w_poly,
};
pub use series::{rat, RatSeries};
pub use tables::{alpha, b_stored, big_d_stored, d_stored, gamma_stirling, EpsPoly};
pub use trig::{LaurentTrig, TrigPoly, TrigPowers};

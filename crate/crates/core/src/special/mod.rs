//! Special functions: the Riemann-Siegel phase theta(t), complex log-gamma,
//! the complementary error function and its modified m-term form, the
//! eta(lambda) transition mapping, and the normalised incomplete gamma
//! function in uniform-asymptotic and oracle forms.

pub mod erfc;
pub mod eta;
pub mod gamma;
pub mod qgamma;

pub use erfc::{erfc_complex, erfc_m};
pub use eta::{eta_of_lambda, lambda_n, TransitionPoint};
pub use gamma::{log_gamma, theta};
pub use qgamma::{q_oracle, q_uniform};

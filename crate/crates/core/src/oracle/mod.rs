//! Independent ground-truth computations: Z(t) by Euler-Maclaurin
//! continuation of zeta, the bilateral defining sums of the S functions,
//! and brute-force incomplete-gamma quadrature. Everything the rest of the
//! crate is diffed against lives here, deliberately built on different
//! methods than the paths under test.

pub mod bernoulli;
pub mod quadrature;
pub mod sums;
pub mod zeta_em;

pub use quadrature::q_quadrature;
pub use sums::s_direct_sum;
pub use zeta_em::{euler_maclaurin_z, zeta_euler_maclaurin, OracleConfig};

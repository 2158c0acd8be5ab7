//! High-precision evaluation of the Riemann Z-function on the critical line
//! via a Dirichlet series smoothed by a modified complementary error
//! function, plus trigonometric correction terms in inverse powers of omega.
//!
//! The crate is organized as:
//!
//! - [`hp`]: extended-precision real/complex arithmetic and elementary
//!   functions (the numeric substrate);
//! - [`special`]: theta phase, complementary error functions, the eta
//!   transition mapping, and the normalised incomplete gamma function;
//! - [`coeff`]: exact-rational coefficient tables and the symbolic engine
//!   generating the csc/cot correction polynomials;
//! - [`eval`]: the smoothed main sum, correction term, and full evaluation
//!   reports;
//! - [`oracle`]: independent ground-truth computations (Euler-Maclaurin
//!   zeta, bilateral sums, brute-force quadrature) used to cross-check
//!   every other path.
//!
//! All values are immutable after construction and all operations are pure
//! functions; the crate is safe to use from any number of threads.

pub mod coeff;
pub mod error;
pub mod eval;
pub mod hp;
pub mod oracle;
pub mod special;

pub use error::{Error, Result};
pub use eval::{EvaluationReport, ExpansionParams};
pub use hp::{HPComplex, HPReal, Precision};
pub use oracle::OracleConfig;

//! Extended-precision real/complex arithmetic and elementary functions.
//!
//! This layer defines the numeric contract everything else relies on:
//! arithmetic correct to within 2 ulp at the context precision, principal
//! branches for log/sqrt, and elementary functions built from argument
//! reduction plus series with explicit tail control (no delegation to a
//! fixed-precision platform).

pub mod complex;
pub mod consts;
pub mod decimal;
pub mod elem;
pub mod real;

pub use complex::{complex_elementary, omega_of_s, ElementaryFn, HPComplex};
pub use decimal::{parse_decimal, to_decimal};
pub use real::{HPReal, Precision};

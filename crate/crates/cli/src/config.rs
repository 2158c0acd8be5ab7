//! Validated run configuration shared by all subcommands.

use crate::Format;
use zsmooth_core::{Error, Precision};

pub const ENV_DIGITS: &str = "ZSMOOTH_DIGITS";
pub const MIN_DIGITS: u32 = 20;
pub const MAX_DIGITS: u32 = 100;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub t: String,
    pub m: usize,
    pub big_k: u32,
    pub precision_digits: u32,
    pub output_format: Format,
    pub with_oracle: bool,
    pub strict_hazard: bool,
}

impl RunConfig {
    pub fn precision(&self) -> Precision {
        Precision::from_digits(self.precision_digits)
    }
}

/// Resolve the working digits: flag beats environment beats the default 40.
pub fn resolve_digits(flag: Option<u32>) -> Result<u32, Error> {
    let digits = match flag {
        Some(d) => d,
        None => match std::env::var(ENV_DIGITS) {
            Ok(v) => v
                .parse::<u32>()
                .map_err(|_| Error::domain("digits", format!("bad {ENV_DIGITS} value {v:?}")))?,
            Err(_) => 40,
        },
    };
    if !(MIN_DIGITS..=MAX_DIGITS).contains(&digits) {
        return Err(Error::domain(
            "digits",
            format!("precision must be in [{MIN_DIGITS}, {MAX_DIGITS}] digits, got {digits}"),
        ));
    }
    Ok(digits)
}

pub fn validate_m(m: usize) -> Result<(), Error> {
    if !(1..=4).contains(&m) {
        return Err(Error::domain("m", format!("m must be in [1, 4], got {m}")));
    }
    Ok(())
}

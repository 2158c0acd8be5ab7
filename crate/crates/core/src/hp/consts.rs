//! Shared constants (pi, ln 2), computed once per precision and cached.

use super::real::{HPReal, Precision};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

static PI_CACHE: OnceLock<Mutex<HashMap<u32, HPReal>>> = OnceLock::new();
static LN2_CACHE: OnceLock<Mutex<HashMap<u32, HPReal>>> = OnceLock::new();

/// round(atan(1/k) * 2^nbits) by the alternating inverse-power series.
/// Each truncated term contributes less than one unit in the last place,
/// and the term count bounds the total error.
fn atan_inv_scaled(k: u64, nbits: u64) -> BigInt {
    let one_scaled = BigInt::one() << nbits;
    let kk = BigInt::from(k) * k;
    let mut denom_pow = BigInt::from(k);
    let mut acc = BigInt::zero();
    let mut j: u64 = 0;
    loop {
        let term = &one_scaled / (&denom_pow * (2 * j + 1));
        if term.is_zero() {
            break;
        }
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        denom_pow *= &kk;
        j += 1;
    }
    acc
}

/// round(atanh(1/k) * 2^nbits), k >= 2.
fn atanh_inv_scaled(k: u64, nbits: u64) -> BigInt {
    let one_scaled = BigInt::one() << nbits;
    let kk = BigInt::from(k) * k;
    let mut denom_pow = BigInt::from(k);
    let mut acc = BigInt::zero();
    let mut j: u64 = 0;
    loop {
        let term = &one_scaled / (&denom_pow * (2 * j + 1));
        if term.is_zero() {
            break;
        }
        acc += term;
        denom_pow *= &kk;
        j += 1;
    }
    acc
}

/// pi at the given precision (Machin: 16 atan(1/5) - 4 atan(1/239)).
pub fn pi(prec: Precision) -> HPReal {
    let cache = PI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&prec.bits()) {
        return v.clone();
    }
    let nb = prec.bits() as u64 + 32;
    let v = atan_inv_scaled(5, nb) * 16 - atan_inv_scaled(239, nb) * 4;
    let r = HPReal::from_scaled_bigint(v, -(nb as i64), prec);
    cache.lock().unwrap().insert(prec.bits(), r.clone());
    r
}

/// ln 2 at the given precision (2 atanh(1/3)).
pub fn ln2(prec: Precision) -> HPReal {
    let cache = LN2_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&prec.bits()) {
        return v.clone();
    }
    let nb = prec.bits() as u64 + 32;
    let v = atanh_inv_scaled(3, nb) * 2;
    let r = HPReal::from_scaled_bigint(v, -(nb as i64), prec);
    cache.lock().unwrap().insert(prec.bits(), r.clone());
    r
}

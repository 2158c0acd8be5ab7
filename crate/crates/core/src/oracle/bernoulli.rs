//! Exact Bernoulli numbers by the defining recurrence, cached process-wide.

use crate::hp::{HPReal, Precision};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::{Mutex, OnceLock};

static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();

/// B_n, exact. B_1 = -1/2 convention; odd indices above 1 vanish.
pub fn bernoulli(n: usize) -> BigRational {
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut guard = cache.lock().unwrap();
    while guard.len() <= n {
        let m = guard.len();
        // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (k, b) in guard.iter().enumerate() {
            if !b.is_zero() {
                acc += b * BigRational::from(binom.clone());
            }
            // C(m+1, k+1) = C(m+1, k) * (m+1-k) / (k+1)
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        let next = -acc / BigRational::from(BigInt::from(m as u64 + 1));
        guard.push(next);
    }
    guard[n].clone()
}

pub fn bernoulli_real(n: usize, prec: Precision) -> HPReal {
    let b = bernoulli(n);
    let num = HPReal::from_bigint(b.numer().clone(), prec);
    let den = HPReal::from_bigint(b.denom().clone(), prec);
    &num / &den
}

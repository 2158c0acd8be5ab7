//! Decimal-string conversion. Values cross the text boundary as decimal
//! strings only, never as binary floats, so no precision is silently lost.

use super::real::{HPReal, Precision};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

fn pow10(k: u64) -> BigUint {
    BigUint::from(10u32).pow(k as u32)
}

/// Parse a decimal string ("-3.25", "2.6e3", "200000") at the given
/// precision. The value is the correctly rounded binary image of the exact
/// decimal.
pub fn parse_decimal(s: &str, prec: Precision) -> Result<HPReal> {
    let t = s.trim();
    let bad = || Error::domain("parse_decimal", format!("malformed decimal {t:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let bytes = t.as_bytes();
    let mut idx = 0;
    let neg = match bytes[0] {
        b'-' => {
            idx = 1;
            true
        }
        b'+' => {
            idx = 1;
            false
        }
        _ => false,
    };
    let mut digits = String::new();
    let mut frac_len: i64 = 0;
    let mut seen_dot = false;
    let mut seen_digit = false;
    while idx < bytes.len() {
        match bytes[idx] {
            b'0'..=b'9' => {
                digits.push(bytes[idx] as char);
                if seen_dot {
                    frac_len += 1;
                }
                seen_digit = true;
            }
            b'.' if !seen_dot => seen_dot = true,
            b'e' | b'E' => break,
            _ => return Err(bad()),
        }
        idx += 1;
    }
    if !seen_digit {
        return Err(bad());
    }
    let mut exp10: i64 = 0;
    if idx < bytes.len() {
        // exponent part
        exp10 = t[idx + 1..].parse::<i64>().map_err(|_| bad())?;
        if exp10.abs() > 1_000_000 {
            return Err(bad());
        }
    }
    let mant: BigUint = digits.parse().map_err(|_| bad())?;
    if mant.is_zero() {
        return Ok(HPReal::zero(prec));
    }
    let mant = if neg {
        -BigInt::from(mant)
    } else {
        BigInt::from(mant)
    };
    let dec_exp = exp10 - frac_len;
    if dec_exp >= 0 {
        Ok(HPReal::from_bigint(
            mant * BigInt::from(pow10(dec_exp as u64)),
            prec,
        ))
    } else {
        let wp = prec.raised(16);
        let num = HPReal::from_bigint(mant, wp);
        let den = HPReal::from_bigint(BigInt::from(pow10((-dec_exp) as u64)), wp);
        Ok((&num / &den).with_prec(prec))
    }
}

/// round(|x| * 10^(digits-1-e10)) as an integer.
fn scaled_digits(x: &HPReal, digits: i64, e10: i64) -> BigUint {
    let k = digits - 1 - e10;
    let (mant, exp) = x.raw_parts();
    let mut num = mant.magnitude().clone();
    let mut den = BigUint::one();
    if k >= 0 {
        num *= pow10(k as u64);
    } else {
        den *= pow10((-k) as u64);
    }
    if exp >= 0 {
        num <<= exp as u64;
    } else {
        den <<= (-exp) as u64;
    }
    // round(num/den) = floor((2 num + den) / (2 den))
    ((num << 1u32) + &den) / (den << 1u32)
}

/// Render with `digits` significant figures. Positional notation while the
/// exponent is moderate, scientific otherwise; trailing zeros are kept so
/// that the digit count always announces the precision.
pub fn to_decimal(x: &HPReal, digits: u32) -> String {
    let digits = digits.max(1) as i64;
    if x.is_zero() {
        return "0".to_string();
    }
    let mut e10 = x.mag10();
    let dstr = loop {
        let q = scaled_digits(x, digits, e10);
        let s = q.to_string();
        if s.len() as i64 == digits {
            break s;
        }
        if s.len() as i64 > digits {
            e10 += 1;
        } else {
            e10 -= 1;
        }
    };
    let sign = if x.is_negative() { "-" } else { "" };
    if e10 < -5 || e10 >= digits {
        // scientific
        let head = &dstr[..1];
        let tail = &dstr[1..];
        let es = if e10 < 0 {
            format!("-{:02}", -e10)
        } else {
            format!("+{:02}", e10)
        };
        if tail.is_empty() {
            format!("{sign}{head}e{es}")
        } else {
            format!("{sign}{head}.{tail}e{es}")
        }
    } else if e10 < 0 {
        let zeros = "0".repeat((-e10 - 1) as usize);
        format!("{sign}0.{zeros}{dstr}")
    } else {
        let cut = (e10 + 1) as usize;
        let (ip, fp) = dstr.split_at(cut);
        if fp.is_empty() {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{fp}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p40() -> Precision {
        Precision::from_digits(40)
    }

    #[test]
    fn parse_and_render_roundtrip() {
        for s in [
            "2600",
            "-0.4619790063184043063",
            "1.7049999999e-11",
            "200000",
            "0.0000123",
            "-3.51142011324083675358518272319971283425",
        ] {
            let v = parse_decimal(s, p40()).unwrap();
            let r = to_decimal(&v, 20);
            let v2 = parse_decimal(&r, p40()).unwrap();
            let r2 = to_decimal(&v2, 20);
            assert_eq!(r, r2, "unstable round-trip for {s}");
        }
    }

    #[test]
    fn render_known_forms() {
        let v = parse_decimal("2600", p40()).unwrap();
        assert_eq!(to_decimal(&v, 4), "2600");
        assert_eq!(to_decimal(&v, 2), "2.6e+03");
        let tiny = parse_decimal("6.799e-18", p40()).unwrap();
        assert_eq!(to_decimal(&tiny, 4), "6.799e-18");
        let half = parse_decimal("0.5", p40()).unwrap();
        assert_eq!(to_decimal(&half, 3), "0.500");
        let neg = parse_decimal("-0.0625", p40()).unwrap();
        assert_eq!(to_decimal(&neg, 5), "-0.062500");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_decimal("abc", p40()).is_err());
        assert!(parse_decimal("", p40()).is_err());
        assert!(parse_decimal("1.2.3", p40()).is_err());
        assert!(parse_decimal("2600 trailing", p40()).is_err());
    }

    #[test]
    fn parse_is_exactly_rounded_for_integers() {
        let v = parse_decimal("123456789123456789", p40()).unwrap();
        assert_eq!(v, HPReal::from_i64(123456789123456789, p40()));
    }
}

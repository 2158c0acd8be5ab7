//! Shared helpers for the integration suites: the golden reference grids,
//! printed-digit assertions, a deterministic sampler, and slope fitting.

use zsmooth_core::{HPReal, Precision};

pub fn p40() -> Precision {
    Precision::from_digits(40)
}

pub fn parse(s: &str) -> HPReal {
    HPReal::parse(s, p40()).unwrap()
}

/// Golden grid row: (m, K, main sum, |Z_approx - Z| column) as printed.
pub type GridRow = (usize, u32, &'static str, &'static str);

/// Reference grid at t = 2600 (N_t = 20, Z = -0.63210232). Two entries of
/// the published table are internally inconsistent with the rest of the
/// same table and are asserted separately: the m = 3 correction term's last
/// two printed digits, and the exponent of the (m=2, K=10) error entry.
pub const T2600_CORRECTIONS: [(usize, &str); 3] = [
    (2, "0.17012331658969433"),
    // printed as ...848999; the value consistent with the error column and
    // with both coefficient routes is ...84898512907...
    (3, "0.08577294705848985129077"),
    (4, "-0.53258748301320432"),
];

pub const T2600_GRID: [GridRow; 9] = [
    // the error column prints 2.269e-08 here; the mantissa is right and the
    // exponent is not (see c1 below, which proves 2.269e-09 from the grid)
    (2, 10, "-0.46197900631840431", "2.269e-09"),
    (2, 20, "-0.46197900414489825", "9.502e-11"),
    (2, 30, "-0.46197900406691627", "1.704e-11"),
    (3, 10, "-0.54632937360422797", "2.315e-11"),
    (3, 20, "-0.54632937358134773", "2.693e-13"),
    (3, 30, "-0.54632937358109988", "2.146e-14"),
    (4, 10, "-1.16468980365271466", "5.792e-14"),
    (4, 20, "-1.16468980365277240", "1.874e-16"),
    (4, 30, "-1.16468980365277258", "6.799e-18"),
];

pub const T2600_Z_CAPTION: &str = "-0.63210232";

/// Reference grid at t = 200000 (N_t = 178, Z = -3.51142011).
pub const T200000_CORRECTIONS: [(usize, &str); 3] = [
    (2, "0.04418050958221520"),
    (3, "0.03215078343729007"),
    (4, "-0.03047116852977429"),
];

pub const T200000_GRID: [GridRow; 9] = [
    (2, 10, "-3.46723960425664604", "5.980e-10"),
    (2, 20, "-3.46723960367893900", "2.032e-11"),
    (2, 30, "-3.46723960366143702", "2.815e-12"),
    (3, 10, "-3.47926932980906788", "5.521e-12"),
    (3, 20, "-3.47926932980359626", "4.958e-14"),
    (3, 30, "-3.47926932980354981", "3.130e-15"),
    (4, 10, "-3.54189128177059854", "1.251e-14"),
    (4, 20, "-3.54189128177061101", "2.921e-17"),
    (4, 30, "-3.54189128177061104", "8.377e-19"),
];

pub const T200000_Z_CAPTION: &str = "-3.51142011";

/// Number of significant digits carried by a printed decimal string.
pub fn sig_digits(s: &str) -> u32 {
    let mut seen_nonzero = false;
    let mut count = 0u32;
    for ch in s.chars() {
        match ch {
            '1'..='9' => {
                seen_nonzero = true;
                count += 1;
            }
            '0' if seen_nonzero => count += 1,
            'e' | 'E' => break,
            _ => {}
        }
    }
    count
}

/// Assert that `computed` rounds to exactly the printed digits: the gap must
/// stay below 0.51 units in the last printed place.
pub fn assert_matches_printed(computed: &HPReal, printed: &str, what: &str) {
    let p = parse(printed);
    let sig = sig_digits(printed) as i64;
    let e10 = p.mag10();
    let half_ulp = parse(&format!("0.51e{}", e10 - sig + 1));
    let d = (computed - &p).abs();
    assert!(
        d <= half_ulp,
        "{what}: computed {} does not round to printed {printed} (|diff| ~ 1e{:.2})",
        computed.to_decimal(sig as u32 + 4),
        d.log10_abs()
    );
}

/// Least-squares slope of y against x.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}

/// SplitMix64: deterministic sampling for the randomized invariants.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

//! Static coefficient data: the W-polynomial coefficients alpha, the
//! reciprocal-gamma Stirling coefficients, and the published csc/cot tables
//! for the S-function and correction-term expansions. Everything is an exact
//! rational; the engine regenerates the symbolic tables and the tests require
//! bit-exact agreement.

use super::series::rat;
use super::trig::TrigPoly;
use num_rational::BigRational;
use std::sync::OnceLock;

/// Maximum W index (and maximum r in B_r / d_{r,k}).
pub const MAX_W: usize = 3;
/// Stored b_{r,k} covers 0 <= r <= k <= MAX_B_K.
pub const MAX_B_K: usize = 6;
/// Correction terms are available for 1 <= m <= MAX_M.
pub const MAX_M: usize = 4;

/// Coefficient of mu^r in W_k(mu), for k <= 3, r <= 2k.
pub fn alpha(k: usize, r: usize) -> BigRational {
    assert!(k <= MAX_W && r <= 2 * k, "alpha index out of range");
    match (k, r) {
        (0, 0) => rat(1, 1),
        (1, 0) => rat(1, 1),
        (1, 1) => rat(1, 1),
        (1, 2) => rat(1, 12),
        (2, 0) => rat(3, 1),
        (2, 1) => rat(5, 1),
        (2, 2) => rat(25, 12),
        (2, 3) => rat(1, 12),
        (2, 4) => rat(1, 288),
        (3, 0) => rat(15, 1),
        (3, 1) => rat(35, 1),
        (3, 2) => rat(105, 4),
        (3, 3) => rat(77, 12),
        (3, 4) => rat(49, 288),
        // the sign of the top coefficient is pinned by W_3(-1) = -gamma_3
        (3, 5) => rat(1, 288),
        (3, 6) => rat(-139, 51840),
        _ => unreachable!(),
    }
}

/// Stirling coefficients of the reciprocal gamma expansion,
/// gamma_r = (-1)^r W_r(-1): 1, -1/12, 1/288, 139/51840.
pub fn gamma_stirling(r: usize) -> BigRational {
    assert!(r <= MAX_W, "gamma index out of range");
    [rat(1, 1), rat(-1, 12), rat(1, 288), rat(139, 51840)][r].clone()
}

/// Pochhammer (1/2)_k as an exact rational.
pub fn half_pochhammer(k: usize) -> BigRational {
    let mut acc = rat(1, 1);
    for j in 0..k {
        acc *= rat(2 * j as i64 + 1, 2);
    }
    acc
}

fn cot(q: BigRational) -> TrigPoly {
    TrigPoly::monomial(1, 0, q)
}

/// The recurring homogeneous blocks of the b table:
/// p(1) = cot^2+csc^2, p(2) = cot^3+5 cot csc^2, p(3) = cot^4+18 cot^2 csc^2+5 csc^4,
/// p(4) = cot^5+58 cot^3 csc^2+61 cot csc^4,
/// p(5) = cot^6+179 cot^4 csc^2+479 cot^2 csc^4+61 csc^6.
fn block(j: usize) -> TrigPoly {
    let m = |c, s, q: i64| TrigPoly::monomial(c, s, rat(q, 1));
    match j {
        1 => m(2, 0, 1).add(&m(0, 2, 1)),
        2 => m(3, 0, 1).add(&m(1, 2, 5)),
        3 => m(4, 0, 1).add(&m(2, 2, 18)).add(&m(0, 4, 5)),
        4 => m(5, 0, 1).add(&m(3, 2, 58)).add(&m(1, 4, 61)),
        5 => m(6, 0, 1).add(&m(4, 2, 179)).add(&m(2, 4, 479)).add(&m(0, 6, 61)),
        _ => unreachable!(),
    }
}

/// Stored expansion coefficients b_{r,k} of S_{k+1}(w), 0 <= r <= k <= 6.
pub fn b_stored(r: usize, k: usize) -> TrigPoly {
    assert!(r <= k && k <= MAX_B_K, "b index out of range");
    let c = |q: i64| cot(rat(q, 1));
    let n = |q: i64| TrigPoly::constant(rat(q, 1));
    match (r, k) {
        (0, 0) => n(1),
        (0, 1) => c(1),
        (1, 1) => n(1),
        (0, 2) => block(1),
        (1, 2) => c(3),
        (2, 2) => n(3),
        (0, 3) => block(2),
        (1, 3) => block(1).scale(&rat(6, 1)),
        (2, 3) => c(15),
        (3, 3) => n(15),
        (0, 4) => block(3),
        (1, 4) => block(2).scale(&rat(10, 1)),
        (2, 4) => block(1).scale(&rat(45, 1)),
        (3, 4) => c(105),
        (4, 4) => n(105),
        (0, 5) => block(4),
        (1, 5) => block(3).scale(&rat(15, 1)),
        (2, 5) => block(2).scale(&rat(105, 1)),
        (3, 5) => block(1).scale(&rat(420, 1)),
        (4, 5) => c(945),
        (5, 5) => n(945),
        (0, 6) => block(5),
        (1, 6) => block(4).scale(&rat(21, 1)),
        (2, 6) => block(3).scale(&rat(210, 1)),
        (3, 6) => block(2).scale(&rat(1260, 1)),
        (4, 6) => block(1).scale(&rat(4725, 1)),
        (5, 6) => cot(rat(10395, 1)),
        (6, 6) => n(10395),
        _ => unreachable!(),
    }
}

/// Stored d_{r,k} (coefficients of B_r(w) = csc w * sum_k d_{r,k} w^-k),
/// r <= 3, k <= 2r. Taken from the published explicit increments of the
/// D table; d_{3,2} = 0 exactly.
pub fn d_stored(r: usize, k: usize) -> TrigPoly {
    assert!(r <= MAX_W && k <= 2 * r, "d index out of range");
    match (r, k) {
        (0, 0) => TrigPoly::constant(rat(1, 1)),
        (1, 0) => block(1).scale(&rat(1, 2)),
        (1, 1) => cot(rat(-1, 2)),
        (1, 2) => TrigPoly::constant(rat(-1, 6)),
        (2, 0) => block(3).scale(&rat(1, 8)),
        (2, 1) => block(2).scale(&rat(-5, 12)),
        (2, 2) => block(1).scale(&rat(-5, 24)),
        (2, 3) => cot(rat(-1, 24)),
        (2, 4) => TrigPoly::constant(rat(1, 72)),
        (3, 0) => block(5).scale(&rat(1, 48)),
        (3, 1) => block(4).scale(&rat(-7, 48)),
        (3, 2) => TrigPoly::zero(),
        (3, 3) => block(2).scale(&rat(7, 36)),
        (3, 4) => block(1).scale(&rat(49, 144)),
        (3, 5) => cot(rat(47, 144)),
        (3, 6) => TrigPoly::constant(rat(1003, 6480)),
        _ => unreachable!(),
    }
}

/// Polynomial in eps = pi i / 4 with TrigPoly coefficients; the shape of
/// the D_k(m) correction coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsPoly {
    /// coeffs[r] multiplies eps^r.
    pub coeffs: Vec<TrigPoly>,
}

impl EpsPoly {
    pub fn zero(order: usize) -> Self {
        EpsPoly {
            coeffs: vec![TrigPoly::zero(); order],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.coeffs.len().max(other.coeffs.len());
        let mut out = EpsPoly::zero(order);
        for (r, c) in self.coeffs.iter().enumerate() {
            out.coeffs[r] = out.coeffs[r].add(c);
        }
        for (r, c) in other.coeffs.iter().enumerate() {
            out.coeffs[r] = out.coeffs[r].add(c);
        }
        out
    }

    pub fn normalized(mut self) -> Self {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
        self
    }
}

/// D_k(m) as published (built from the explicit increment listing).
pub fn big_d_stored(k: usize, m: usize) -> EpsPoly {
    assert!(
        (1..=MAX_M).contains(&m) && k <= 2 * m - 2,
        "D index out of range: k={k}, m={m}"
    );
    static TABLE: OnceLock<Vec<Vec<EpsPoly>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let term = |r: usize, p: TrigPoly| {
            let mut e = EpsPoly::zero(r + 1);
            e.coeffs[r] = p;
            e
        };
        // m = 1
        let d01 = term(0, TrigPoly::constant(rat(1, 1)));
        // m = 2
        let d02 = d01.add(&term(1, block(1).scale(&rat(1, 2))));
        let d12 = term(1, cot(rat(-1, 2)));
        let d22 = term(1, TrigPoly::constant(rat(-1, 6)));
        // m = 3
        let d03 = d02.add(&term(2, block(3).scale(&rat(1, 8))));
        let d13 = d12.add(&term(2, block(2).scale(&rat(-5, 12))));
        let d23 = d22.add(&term(2, block(1).scale(&rat(-5, 24))));
        let d33 = term(2, cot(rat(-1, 24)));
        let d43 = term(2, TrigPoly::constant(rat(1, 72)));
        // m = 4 (the eps^3 increment of D_2 is zero)
        let d04 = d03.add(&term(3, block(5).scale(&rat(1, 48))));
        let d14 = d13.add(&term(3, block(4).scale(&rat(-7, 48))));
        let d24 = d23.clone();
        let d34 = d33.add(&term(3, block(2).scale(&rat(7, 36))));
        let d44 = d43.add(&term(3, block(1).scale(&rat(49, 144))));
        let d54 = term(3, cot(rat(47, 144)));
        let d64 = term(3, TrigPoly::constant(rat(1003, 6480)));
        vec![
            vec![d01],
            vec![d02, d12, d22],
            vec![d03, d13, d23, d33, d43],
            vec![d04, d14, d24, d34, d44, d54, d64],
        ]
    });
    table[m - 1][k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn w_at_minus_one_gives_stirling_coefficients() {
        // W_r(-1) = (-1)^r gamma_r, exactly in rational arithmetic
        for k in 0..=MAX_W {
            let mut acc = BigRational::zero();
            let mut sign = rat(1, 1);
            for r in 0..=2 * k {
                acc += &sign * alpha(k, r);
                sign = -sign;
            }
            let want = if k % 2 == 0 {
                gamma_stirling(k)
            } else {
                -gamma_stirling(k)
            };
            assert_eq!(acc, want, "W_{k}(-1) mismatch");
        }
    }

    #[test]
    fn b_diagonal_is_double_factorial() {
        // b_{k,k} = (2k-1)!!: 1, 1, 3, 15, 105, 945, 10395
        let mut dfact: i64 = 1;
        for k in 0..=MAX_B_K {
            if k > 0 {
                dfact *= 2 * k as i64 - 1;
            }
            assert_eq!(b_stored(k, k), TrigPoly::constant(rat(dfact, 1)));
        }
    }

    #[test]
    fn b_parity_is_homogeneous() {
        // each b_{r,k} is homogeneous of degree k - r in {cot, csc}
        for k in 0..=MAX_B_K {
            for r in 0..=k {
                let deg = b_stored(r, k).homogeneous_degree();
                assert_eq!(deg, Some((k - r) as u32), "b_{{{r},{k}}}");
            }
        }
    }

    #[test]
    fn d_two_increments_match_big_d() {
        // D_k(m+1) - D_k(m) = eps^m d_{m,k} for 0 <= k <= 2m-4... the stored
        // tables must be consistent by construction; spot-check a few cells.
        let d22 = big_d_stored(2, 2);
        let d23 = big_d_stored(2, 3);
        let inc = d23.coeffs[2].clone();
        assert_eq!(inc, d_stored(2, 2));
        assert_eq!(d22.coeffs[1], d_stored(1, 2));
        // D_2(4) = D_2(3): footnote fact, d_{3,2} = 0
        assert_eq!(big_d_stored(2, 4), big_d_stored(2, 3));
        assert!(d_stored(3, 2).is_zero());
    }

    #[test]
    fn half_pochhammer_values() {
        assert_eq!(half_pochhammer(0), rat(1, 1));
        assert_eq!(half_pochhammer(1), rat(1, 2));
        assert_eq!(half_pochhammer(2), rat(3, 4));
        assert_eq!(half_pochhammer(4), rat(105, 16));
    }
}

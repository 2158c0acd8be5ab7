//! Dump of the exact coefficient tables: alpha, the Stirling gammas, the
//! b_{r,k} expansion table, the d_{r,k} correction coefficients, and the
//! D_k(m) listings, with rationals rendered as numerator/denominator
//! strings.

use serde::Serialize;
use serde_json::json;
use zsmooth_core::coeff::{alpha, b_stored, big_d_stored, d_stored, gamma_stirling, TrigPoly};

#[derive(Serialize)]
struct TermJson {
    coeff: String,
    cot_pow: u32,
    csc_pow: u32,
}

fn poly_terms(p: &TrigPoly) -> Vec<TermJson> {
    p.terms()
        .map(|((c, s), q)| TermJson {
            coeff: q.to_string(),
            cot_pow: *c,
            csc_pow: *s,
        })
        .collect()
}

pub fn coeffs_json() -> serde_json::Value {
    let alpha_rows: Vec<Vec<String>> = (0..=3)
        .map(|k| (0..=2 * k).map(|r| alpha(k, r).to_string()).collect())
        .collect();
    let gamma_row: Vec<String> = (0..=3).map(|r| gamma_stirling(r).to_string()).collect();
    let mut b_entries = Vec::new();
    for k in 0..=6usize {
        for r in 0..=k {
            let p = b_stored(r, k);
            b_entries.push(json!({
                "r": r,
                "k": k,
                "text": format!("{p}"),
                "terms": poly_terms(&p),
            }));
        }
    }
    let mut d_entries = Vec::new();
    for r in 0..=3usize {
        for k in 0..=2 * r {
            let p = d_stored(r, k);
            d_entries.push(json!({
                "r": r,
                "k": k,
                "text": format!("{p}"),
                "terms": poly_terms(&p),
            }));
        }
    }
    let mut big_d_entries = Vec::new();
    for m in 1..=4usize {
        for k in 0..=2 * m - 2 {
            let e = big_d_stored(k, m);
            let eps_terms: Vec<serde_json::Value> = e
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(pow, p)| {
                    json!({
                        "eps_pow": pow,
                        "text": format!("{p}"),
                        "terms": poly_terms(p),
                    })
                })
                .collect();
            big_d_entries.push(json!({
                "k": k,
                "m": m,
                "text": big_d_text(k, m),
                "eps_terms": eps_terms,
            }));
        }
    }
    json!({
        "alpha": alpha_rows,
        "gamma_stirling": gamma_row,
        "epsilon": "pi i / 4",
        "b": b_entries,
        "d": d_entries,
        "big_d": big_d_entries,
    })
}

fn big_d_text(k: usize, m: usize) -> String {
    let e = big_d_stored(k, m);
    let mut parts = Vec::new();
    for (pow, p) in e.coeffs.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let eps = match pow {
            0 => String::new(),
            1 => " eps".to_string(),
            n => format!(" eps^{n}"),
        };
        parts.push(format!("({p}){eps}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub fn coeffs_text() -> String {
    let mut out = String::new();
    out.push_str("alpha (coefficient of mu^r in W_k):\n");
    for k in 0..=3usize {
        let row: Vec<String> = (0..=2 * k).map(|r| alpha(k, r).to_string()).collect();
        out.push_str(&format!("  W_{k}: {}\n", row.join(", ")));
    }
    out.push_str("\ngamma (Stirling coefficients of 1/Gamma):\n  ");
    let g: Vec<String> = (0..=3).map(|r| gamma_stirling(r).to_string()).collect();
    out.push_str(&g.join(", "));
    out.push('\n');
    out.push_str("\nb_{r,k} (S_{k+1} = csc w / k! * sum_r b_{r,k} w^-r):\n");
    for k in 0..=6usize {
        for r in 0..=k {
            out.push_str(&format!("  b[{r},{k}] = {}\n", b_stored(r, k)));
        }
    }
    out.push_str("\nd_{r,k} (B_r = csc w * sum_k d_{r,k} w^-k):\n");
    for r in 0..=3usize {
        for k in 0..=2 * r {
            out.push_str(&format!("  d[{r},{k}] = {}\n", d_stored(r, k)));
        }
    }
    out.push_str("\nD_k(m) (T_m = csc w * sum_k D_k(m) w^-k, eps = pi i/4):\n");
    for m in 1..=4usize {
        for k in 0..=2 * m - 2 {
            out.push_str(&format!("  D_{k}({m}) = {}\n", big_d_text(k, m)));
        }
    }
    out
}

/// CSV: one coefficient term per row.
pub fn coeffs_csv() -> String {
    let mut out = String::from("table,index1,index2,eps_pow,coeff,cot_pow,csc_pow\n");
    for k in 0..=3usize {
        for r in 0..=2 * k {
            out.push_str(&format!("alpha,{k},{r},,{},,\n", alpha(k, r)));
        }
    }
    for r in 0..=3usize {
        out.push_str(&format!("gamma,{r},,,{},,\n", gamma_stirling(r)));
    }
    for k in 0..=6usize {
        for r in 0..=k {
            for ((c, s), q) in b_stored(r, k).terms() {
                out.push_str(&format!("b,{r},{k},,{q},{c},{s}\n"));
            }
        }
    }
    for r in 0..=3usize {
        for k in 0..=2 * r {
            for ((c, s), q) in d_stored(r, k).terms() {
                out.push_str(&format!("d,{r},{k},,{q},{c},{s}\n"));
            }
        }
    }
    for m in 1..=4usize {
        for k in 0..=2 * m - 2 {
            let e = big_d_stored(k, m);
            for (pow, p) in e.coeffs.iter().enumerate() {
                for ((c, s), q) in p.terms() {
                    out.push_str(&format!("D,{k},{m},{pow},{q},{c},{s}\n"));
                }
            }
        }
    }
    out
}

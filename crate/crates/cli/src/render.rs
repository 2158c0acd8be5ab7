//! Rendering of evaluation results as text, JSON, and CSV. Numbers travel
//! as decimal strings carrying the configured working digits; nothing is
//! squeezed through a binary float on the way out.

use serde::Serialize;
use zsmooth_core::hp::to_decimal;
use zsmooth_core::{EvaluationReport, HPReal};

/// Group the fractional digits of a plain decimal in fives, the layout the
/// reference tables use.
pub fn grouped(s: &str) -> String {
    match s.find('.') {
        None => s.to_string(),
        Some(dot) => {
            let (head, frac) = s.split_at(dot + 1);
            let mut out = head.to_string();
            for (i, ch) in frac.chars().enumerate() {
                if i > 0 && i % 5 == 0 {
                    out.push(' ');
                }
                out.push(ch);
            }
            out
        }
    }
}

pub fn dec(x: &HPReal, digits: u32) -> String {
    to_decimal(x, digits)
}

fn opt_dec(x: &Option<HPReal>, digits: u32) -> Option<String> {
    x.as_ref().map(|v| dec(v, digits))
}

#[derive(Serialize)]
pub struct ReportJson {
    pub t: String,
    pub m: usize,
    pub k: u32,
    pub n_cutoff: u32,
    pub precision_digits: u32,
    pub main_sum: String,
    pub correction: String,
    pub z_approx: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_error: Option<String>,
    pub hazard: bool,
    pub hazard_distance: String,
}

pub fn report_json(rep: &EvaluationReport) -> ReportJson {
    let d = rep.precision_digits;
    ReportJson {
        t: dec(&rep.t, d),
        m: rep.m,
        k: rep.big_k,
        n_cutoff: rep.n_cutoff,
        precision_digits: d,
        main_sum: dec(&rep.main_sum, d),
        correction: dec(&rep.correction, d),
        z_approx: dec(&rep.z_approx, d),
        z_oracle: opt_dec(&rep.z_oracle, d),
        abs_error: opt_dec(&rep.abs_error, d),
        hazard: rep.hazard_flag,
        hazard_distance: dec(&rep.hazard_distance, 6),
    }
}

pub const CSV_HEADER: &str = "m,K,main_sum,correction,z_approx,z_oracle,abs_error,hazard";

pub fn report_csv_row(rep: &EvaluationReport) -> String {
    let d = rep.precision_digits;
    format!(
        "{},{},{},{},{},{},{},{}",
        rep.m,
        rep.big_k,
        dec(&rep.main_sum, d),
        dec(&rep.correction, d),
        dec(&rep.z_approx, d),
        opt_dec(&rep.z_oracle, d).unwrap_or_default(),
        opt_dec(&rep.abs_error, d).unwrap_or_default(),
        rep.hazard_flag
    )
}

pub fn report_text(rep: &EvaluationReport) -> String {
    let d = rep.precision_digits;
    let mut out = String::new();
    out.push_str(&format!("t               = {}\n", dec(&rep.t, d)));
    out.push_str(&format!("N_t             = {}\n", rep.n_cutoff));
    out.push_str(&format!("m               = {}, K = {}\n", rep.m, rep.big_k));
    out.push_str(&format!(
        "main sum        = {}\n",
        grouped(&dec(&rep.main_sum, d))
    ));
    out.push_str(&format!(
        "correction term = {}\n",
        grouped(&dec(&rep.correction, d))
    ));
    out.push_str(&format!(
        "Z_approx        = {}\n",
        grouped(&dec(&rep.z_approx, d))
    ));
    if let Some(z) = &rep.z_oracle {
        out.push_str(&format!("Z_oracle        = {}\n", grouped(&dec(z, d))));
    }
    if let Some(e) = &rep.abs_error {
        out.push_str(&format!("|Z_approx - Z|  = {}\n", dec(e, 4)));
    }
    out.push_str(&format!(
        "hazard          = {} (distance of (t/2pi)^(1/2) to nearest integer: {})\n",
        if rep.hazard_flag { "YES" } else { "no" },
        dec(&rep.hazard_distance, 6)
    ));
    out
}

/// The published-table layout: one block per m with its correction term,
/// then K | main sum | error rows.
pub fn table_text(reports: &[EvaluationReport]) -> String {
    let mut out = String::new();
    let mut current_m = usize::MAX;
    for rep in reports {
        let d = rep.precision_digits;
        if rep.m != current_m {
            current_m = rep.m;
            out.push_str(&format!(
                "\nm = {}   correction term = {}\n",
                rep.m,
                grouped(&dec(&rep.correction, d))
            ));
            out.push_str("  K   main sum");
            out.push('\n');
        }
        let err = rep
            .abs_error
            .as_ref()
            .map(|e| dec(e, 4))
            .unwrap_or_default();
        out.push_str(&format!(
            " {:3}  {}  {}\n",
            rep.big_k,
            grouped(&dec(&rep.main_sum, d)),
            err
        ));
    }
    out
}

//! Command-line surface for the smoothed Z-function evaluator: single
//! evaluations, reproduction of the reference (m x K) tables, coefficient
//! dumps, and term-decay scans, with deterministic machine-readable output.

mod coeffs_dump;
mod config;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use config::{resolve_digits, validate_m, RunConfig};
use serde_json::json;
use zsmooth_core::eval::{decay_estimate, evaluate, evaluate_grid, main_sum_diagnostics, ExpansionParams};
use zsmooth_core::hp::parse_decimal;
use zsmooth_core::{Error, HPReal, OracleConfig};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "zsmooth",
    about = "Riemann Z-function on the critical line via an error-function-smoothed Dirichlet series",
    version
)]
struct Cli {
    /// Working precision in significant decimal digits (20..=100);
    /// ZSMOOTH_DIGITS overrides the default of 40.
    #[arg(long, global = true)]
    digits: Option<u32>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Z(t) at a single (t, m, K).
    Evaluate {
        /// Evaluation point, a decimal string (t > 2 pi).
        #[arg(long)]
        t: String,
        /// Number of correction orders (1..=4).
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Truncation K of the main sum beyond the cutoff N_t.
        #[arg(long = "k", default_value_t = 30)]
        big_k: u32,
        /// Force the Euler-Maclaurin oracle comparison on.
        #[arg(long, overrides_with = "no_oracle")]
        oracle: bool,
        /// Force the oracle comparison off (default above t = 1e6).
        #[arg(long)]
        no_oracle: bool,
        /// Exit with status 3 when the near-integer hazard is flagged.
        #[arg(long)]
        strict_hazard: bool,
    },
    /// Reproduce the reference (m x K) grid at t (presets: 2600, 200000).
    Table {
        #[arg(long, default_value = "2600")]
        t: String,
        /// Force the Euler-Maclaurin oracle comparison on.
        #[arg(long, overrides_with = "no_oracle")]
        oracle: bool,
        /// Force the oracle comparison off.
        #[arg(long)]
        no_oracle: bool,
        /// Exit with status 3 when the near-integer hazard is flagged.
        #[arg(long)]
        strict_hazard: bool,
    },
    /// Dump the exact coefficient tables (alpha, gamma, b, d, D).
    Coeffs,
    /// Per-K actual term magnitude versus the decay estimate.
    DecayScan {
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Scan K = 1..=k_max.
        #[arg(long = "k-max", default_value_t = 30)]
        k_max: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

/// Oracle comparisons default on up to this t (cost control above).
const ORACLE_DEFAULT_LIMIT: f64 = 1.0e6;

fn oracle_default(t: &HPReal, force_on: bool, force_off: bool) -> bool {
    if force_off {
        false
    } else if force_on {
        true
    } else {
        t.to_f64() <= ORACLE_DEFAULT_LIMIT
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let digits = resolve_digits(cli.digits)?;
    match cli.command {
        Command::Evaluate {
            t,
            m,
            big_k,
            oracle,
            no_oracle,
            strict_hazard,
        } => {
            validate_m(m)?;
            let mut cfg = RunConfig {
                t,
                m,
                big_k,
                precision_digits: digits,
                output_format: cli.format,
                with_oracle: false,
                strict_hazard,
            };
            let tv = parse_decimal(&cfg.t, cfg.precision())?;
            cfg.with_oracle = oracle_default(&tv, oracle, no_oracle);
            cmd_evaluate(&cfg, &tv)
        }
        Command::Table {
            t,
            oracle,
            no_oracle,
            strict_hazard,
        } => {
            let mut cfg = RunConfig {
                t,
                m: 0,
                big_k: 0,
                precision_digits: digits,
                output_format: cli.format,
                with_oracle: false,
                strict_hazard,
            };
            let tv = parse_decimal(&cfg.t, cfg.precision())?;
            cfg.with_oracle = oracle_default(&tv, oracle, no_oracle);
            cmd_table(&cfg, &tv)
        }
        Command::Coeffs => {
            match cli.format {
                Format::Text => print!("{}", coeffs_dump::coeffs_text()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&coeffs_dump::coeffs_json()).unwrap()
                ),
                Format::Csv => print!("{}", coeffs_dump::coeffs_csv()),
            }
            Ok(0)
        }
        Command::DecayScan { t, m, k_max } => {
            validate_m(m)?;
            let cfg = RunConfig {
                t,
                m,
                big_k: k_max,
                precision_digits: digits,
                output_format: cli.format,
                with_oracle: false,
                strict_hazard: false,
            };
            let tv = parse_decimal(&cfg.t, cfg.precision())?;
            cmd_decay_scan(&cfg, &tv)
        }
    }
}

fn oracle_cfg_for(digits: u32) -> OracleConfig {
    OracleConfig::with_digits(30.min(digits.saturating_sub(5)).max(20))
}

fn cmd_evaluate(cfg: &RunConfig, t: &HPReal) -> Result<i32, Error> {
    let rep = evaluate(t, cfg.m, cfg.big_k, cfg.with_oracle, &oracle_cfg_for(cfg.precision_digits))?;
    match cfg.output_format {
        Format::Text => print!("{}", render::report_text(&rep)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&render::report_json(&rep)).unwrap()
        ),
        Format::Csv => {
            println!("{}", render::CSV_HEADER);
            println!("{}", render::report_csv_row(&rep));
        }
    }
    if cfg.strict_hazard && rep.hazard_flag {
        return Ok(3);
    }
    Ok(0)
}

/// The published grids run m in {2,3,4} and K in {10,20,30}.
const TABLE_MS: [usize; 3] = [2, 3, 4];
const TABLE_KS: [u32; 3] = [10, 20, 30];

fn cmd_table(cfg: &RunConfig, t: &HPReal) -> Result<i32, Error> {
    let oracle_cfg = oracle_cfg_for(cfg.precision_digits);
    let reports = evaluate_grid(t, &TABLE_MS, &TABLE_KS, cfg.with_oracle, &oracle_cfg)?;
    let hazard = reports.iter().any(|r| r.hazard_flag);
    match cfg.output_format {
        Format::Text => print!("{}", render::table_text(&reports)),
        Format::Json => {
            let rows: Vec<_> = reports.iter().map(render::report_json).collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        Format::Csv => {
            println!("{}", render::CSV_HEADER);
            for rep in &reports {
                println!("{}", render::report_csv_row(rep));
            }
        }
    }
    if cfg.strict_hazard && hazard {
        return Ok(3);
    }
    Ok(0)
}

fn cmd_decay_scan(cfg: &RunConfig, t: &HPReal) -> Result<i32, Error> {
    let params = ExpansionParams::new(t)?;
    let diag = main_sum_diagnostics(&params, cfg.m, cfg.big_k)?;
    let digits = cfg.precision_digits;
    match cfg.output_format {
        Format::Text => {
            println!("  K   |term(N_t+K)|   estimate");
            for (i, mag) in diag.iter().enumerate() {
                let k = i as u32 + 1;
                let est = decay_estimate(t, cfg.m, k);
                println!(
                    " {:3}  {:<14} {}",
                    k,
                    render::dec(mag, 6),
                    render::dec(&est, 6)
                );
            }
        }
        Format::Json => {
            let rows: Vec<_> = diag
                .iter()
                .enumerate()
                .map(|(i, mag)| {
                    let k = i as u32 + 1;
                    json!({
                        "K": k,
                        "term_magnitude": render::dec(mag, digits),
                        "estimate": render::dec(&decay_estimate(t, cfg.m, k), digits),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        Format::Csv => {
            println!("K,term_magnitude,estimate");
            for (i, mag) in diag.iter().enumerate() {
                let k = i as u32 + 1;
                println!(
                    "{},{},{}",
                    k,
                    render::dec(mag, digits),
                    render::dec(&decay_estimate(t, cfg.m, k), digits)
                );
            }
        }
    }
    Ok(0)
}

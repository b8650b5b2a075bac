//! Command-line surface over the `negap` library: evaluation, word
//! conversion, cylinder geometry, covers, measures, dimension reports, and
//! the verification suite. Output is deterministic given the flags and seed;
//! exit codes are 0 (ok), 1 (invariant failure), 2 (usage or validation).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use negap::cylinder::{interval_neg_p, interval_p, interval_restricted_p, CylinderSystem};
use negap::digits::{contract_blocks, expand_blocks, BlockSeq, DigitSeq};
use negap::dimension::{
    alpha_k_product, boxcount_estimate, default_scales, dim_base_s, dim_p_system, dimension_trace,
    step_ratios,
};
use negap::moran::{build_cover, measure_sequence, Geometry};
use negap::numeral::{eval_nega_s_adic, eval_s_adic};
use negap::rational::{decimal_string, exact_string, parse_rational_list, Rational};
use negap::salem::{eval_f_ddot, eval_f_tilde, eval_neg_p, eval_p, ProbVector};
use negap::{verify, SystemParams};

#[derive(Debug, Parser)]
#[command(
    name = "negap",
    about = "Exact arithmetic and fractal geometry of P- and nega-P numeral systems",
    version
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Base of the system (s >= 4).
    #[arg(long, global = true)]
    s: Option<u32>,
    /// Marker digit u in [0, s-1].
    #[arg(long, global = true)]
    u: Option<u32>,
    /// Probability vector: comma-separated rationals summing to 1, or
    /// "uniform".
    #[arg(long = "P", global = true)]
    p: Option<String>,
    /// Significant digits for decimal output.
    #[arg(long, global = true, default_value_t = 30)]
    precision: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for randomized property sampling.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Enumeration cap on |A-bar|^rank.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a digit word in one of the numeral systems.
    Eval {
        /// s | negs | P | negP | Ftilde | Fddot | fzeta
        #[arg(long)]
        system: String,
        /// Digit word, e.g. "113(12)"; parenthesized suffix is the period.
        #[arg(long)]
        digits: String,
    },
    /// Convert between block sequences and run-structured digit words, or
    /// apply position complements.
    Convert {
        /// blocks | digits
        #[arg(long)]
        from: String,
        /// The word to convert (block values or digits, same text format).
        #[arg(long)]
        value: String,
        /// Optional complement applied to the digit word: even | odd | all.
        #[arg(long)]
        complement: Option<String>,
    },
    /// Resolve a cylinder spec "system:base" to its exact interval.
    Cylinder {
        /// e.g. "P:21", "negP:1", "SnegPu:134", "SPu:13"
        #[arg(long)]
        spec: String,
    },
    /// Enumerate the rank-n cover of the restricted nega set.
    Cover {
        #[arg(long)]
        rank: u32,
    },
    /// Exact Lebesgue measure sequence of the covers with its decay bound.
    Measure {
        #[arg(long)]
        n: u32,
    },
    /// Dimension report: root equations, pre-dimension trace, and optional
    /// box-counting estimate.
    Dimension {
        #[arg(long = "k-max", default_value_t = 40)]
        k_max: u32,
        /// Trailing window for liminf/limsup estimates.
        #[arg(long, default_value_t = 10)]
        window: u32,
        /// Also box-count the rank-R cover.
        #[arg(long = "box-rank")]
        box_rank: Option<u32>,
    },
    /// Run the full invariant suite; exits nonzero on any failure.
    Verify,
}

enum CliError {
    Usage(String),
    Invariant,
}

impl From<negap::Error> for CliError {
    fn from(e: negap::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Invariant) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn need_s(g: &GlobalOpts) -> Result<u32, CliError> {
    g.s.ok_or_else(|| CliError::Usage("--s is required".to_string()))
}

fn params_of(g: &GlobalOpts) -> Result<SystemParams, CliError> {
    let s = need_s(g)?;
    let u =
        g.u.ok_or_else(|| CliError::Usage("--u is required".to_string()))?;
    Ok(SystemParams::new(s, u)?)
}

fn pv_of(g: &GlobalOpts, s: u32) -> Result<ProbVector, CliError> {
    match g.p.as_deref() {
        None => Err(CliError::Usage(
            "--P is required (list of rationals or \"uniform\")".into(),
        )),
        Some("uniform") => Ok(ProbVector::uniform(s)),
        Some(text) => {
            let entries = parse_rational_list(text)?;
            if entries.len() != s as usize {
                return Err(CliError::Usage(format!(
                    "--P has {} entries but s = {s}",
                    entries.len()
                )));
            }
            Ok(ProbVector::new(entries)?)
        }
    }
}

#[derive(Serialize)]
struct ValueOut {
    system: String,
    digits: String,
    exact: String,
    decimal: String,
}

fn print_value(g: &GlobalOpts, out: &ValueOut) {
    match g.format {
        Format::Plain => {
            println!("system  = {}", out.system);
            println!("digits  = {}", out.digits);
            println!("exact   = {}", out.exact);
            println!("decimal = {}", out.decimal);
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(out).unwrap()),
        Format::Csv => {
            println!("system,digits,exact,decimal");
            println!(
                "{},{},{},{}",
                out.system, out.digits, out.exact, out.decimal
            );
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Eval { system, digits } => {
            let s = need_s(g)?;
            let word = DigitSeq::parse(s, digits)?;
            let value: Rational = match system.as_str() {
                "s" => {
                    let params = SystemParams::new(s, g.u.unwrap_or(0))?;
                    eval_s_adic(&params, &word)
                }
                "negs" => {
                    let params = SystemParams::new(s, g.u.unwrap_or(0))?;
                    eval_nega_s_adic(&params, &word)
                }
                "P" | "fzeta" => eval_p(&pv_of(g, s)?, &word),
                "negP" => eval_neg_p(&pv_of(g, s)?, &word),
                "Ftilde" => eval_f_tilde(&pv_of(g, s)?, &word),
                "Fddot" => eval_f_ddot(&pv_of(g, s)?, &word),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown system {other:?} (expected s, negs, P, negP, Ftilde, Fddot, fzeta)"
                    )))
                }
            };
            print_value(
                g,
                &ValueOut {
                    system: system.clone(),
                    digits: word.format(s),
                    exact: exact_string(&value),
                    decimal: decimal_string(&value, g.precision),
                },
            );
            Ok(())
        }

        Command::Convert {
            from,
            value,
            complement,
        } => {
            let params = params_of(g)?;
            let s = params.s();
            let word = match from.as_str() {
                "blocks" => {
                    let b = DigitSeq::parse(s, value)?;
                    let blocks = BlockSeq::new(b.prefix().to_vec(), b.period().to_vec());
                    expand_blocks(&params, &blocks)?
                }
                "digits" => DigitSeq::parse(s, value)?,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown source {other:?} (expected blocks or digits)"
                    )))
                }
            };
            let word = match complement.as_deref() {
                None => word,
                Some("even") => word.complement_even(&params),
                Some("odd") => word.complement_odd(&params),
                Some("all") => word.complement_all(&params),
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "unknown complement {other:?} (expected even, odd, all)"
                    )))
                }
            };
            let blocks = contract_blocks(&params, &word).ok();
            let blocks_text =
                blocks.map(|b| DigitSeq::new(b.prefix().to_vec(), b.period().to_vec()).format(s));
            match g.format {
                Format::Json => {
                    let v = json!({
                        "digits": word.format(s),
                        "blocks": blocks_text,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
                _ => {
                    println!("digits = {}", word.format(s));
                    match blocks_text {
                        Some(b) => println!("blocks = {b}"),
                        None => println!("blocks = (not run-structured)"),
                    }
                }
            }
            Ok(())
        }

        Command::Cylinder { spec } => {
            let (tag, base_text) = spec
                .split_once(':')
                .ok_or_else(|| CliError::Usage("cylinder spec is \"system:base\"".into()))?;
            let system = CylinderSystem::parse(tag)?;
            let s = need_s(g)?;
            // bases may be written "134" or "1,3,4"; both name the same tuple
            let normalized: String = if s <= 10 {
                base_text.replace(',', "")
            } else {
                base_text.to_string()
            };
            let base_word = DigitSeq::parse(s, &normalized)?;
            if !base_word.period().is_empty() {
                return Err(CliError::Usage("cylinder bases are finite words".into()));
            }
            let base = base_word.prefix().to_vec();
            let pv = pv_of(g, s)?;
            let interval = match system {
                CylinderSystem::P => interval_p(&pv, &base),
                CylinderSystem::NegP => interval_neg_p(&pv, &base),
                CylinderSystem::RestrictedP => {
                    let params = params_of(g)?;
                    let geom = Geometry::new(params, pv.clone())?;
                    interval_restricted_p(&params, &pv, geom.tails(), &base)?
                }
                CylinderSystem::RestrictedNegP => {
                    let params = params_of(g)?;
                    let geom = Geometry::new(params, pv.clone())?;
                    geom.interval(&base)?
                }
            };
            let rows = json!({
                "system": system.tag(),
                "base": base_word.format(s),
                "lo": exact_string(&interval.lo),
                "hi": exact_string(&interval.hi),
                "lo_decimal": decimal_string(&interval.lo, g.precision),
                "hi_decimal": decimal_string(&interval.hi, g.precision),
                "diameter": exact_string(&interval.diameter()),
            });
            match g.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
                _ => {
                    println!("system   = {}", system.tag());
                    println!("base     = {}", base_word.format(s));
                    println!(
                        "lo       = {} ({})",
                        exact_string(&interval.lo),
                        decimal_string(&interval.lo, g.precision)
                    );
                    println!(
                        "hi       = {} ({})",
                        exact_string(&interval.hi),
                        decimal_string(&interval.hi, g.precision)
                    );
                    println!("diameter = {}", exact_string(&interval.diameter()));
                }
            }
            Ok(())
        }

        Command::Cover { rank } => {
            let params = params_of(g)?;
            let pv = pv_of(g, params.s())?;
            let geom = Geometry::new(params, pv)?;
            let cover = build_cover(&geom, *rank, g.cap)?;
            let base_text = |b: &[u32]| DigitSeq::terminating(b.to_vec()).format(params.s());
            match g.format {
                Format::Json => {
                    let rows: Vec<_> = cover
                        .entries
                        .iter()
                        .map(|e| {
                            json!({
                                "rank": cover.rank,
                                "base": base_text(&e.base),
                                "lo_num": e.interval.lo.numer().to_string(),
                                "lo_den": e.interval.lo.denom().to_string(),
                                "hi_num": e.interval.hi.numer().to_string(),
                                "hi_den": e.interval.hi.denom().to_string(),
                                "decimal_lo": decimal_string(&e.interval.lo, g.precision),
                                "decimal_hi": decimal_string(&e.interval.hi, g.precision),
                            })
                        })
                        .collect();
                    let out = json!({
                        "rank": cover.rank,
                        "count": cover.entries.len(),
                        "total_length": exact_string(&cover.total_length),
                        "intervals": rows,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                _ => {
                    println!("rank,base,lo_num,lo_den,hi_num,hi_den,decimal_lo,decimal_hi");
                    for e in &cover.entries {
                        let base = base_text(&e.base);
                        let quoted = if base.contains(',') {
                            format!("\"{base}\"")
                        } else {
                            base
                        };
                        println!(
                            "{},{},{},{},{},{},{},{}",
                            cover.rank,
                            quoted,
                            e.interval.lo.numer(),
                            e.interval.lo.denom(),
                            e.interval.hi.numer(),
                            e.interval.hi.denom(),
                            decimal_string(&e.interval.lo, g.precision),
                            decimal_string(&e.interval.hi, g.precision),
                        );
                    }
                }
            }
            Ok(())
        }

        Command::Measure { n } => {
            let params = params_of(g)?;
            let pv = pv_of(g, params.s())?;
            let geom = Geometry::new(params, pv)?;
            let rows = measure_sequence(&geom, *n, g.cap)?;
            match g.format {
                Format::Json => {
                    let out: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "n": r.n,
                                "lambda": exact_string(&r.lambda),
                                "lambda_decimal": decimal_string(&r.lambda, g.precision),
                                "bound": exact_string(&r.bound),
                                "bound_decimal": decimal_string(&r.bound, g.precision),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                _ => {
                    println!(
                        "n,lambda_num,lambda_den,bound_num,bound_den,lambda_decimal,bound_decimal"
                    );
                    for r in &rows {
                        println!(
                            "{},{},{},{},{},{},{}",
                            r.n,
                            r.lambda.numer(),
                            r.lambda.denom(),
                            r.bound.numer(),
                            r.bound.denom(),
                            decimal_string(&r.lambda, g.precision),
                            decimal_string(&r.bound, g.precision),
                        );
                    }
                }
            }
            Ok(())
        }

        Command::Dimension {
            k_max,
            window,
            box_rank,
        } => {
            let params = params_of(g)?;
            let pv = pv_of(g, params.s())?;
            let geom = Geometry::new(params, pv.clone())?;
            let trace = dimension_trace(&geom, *k_max, *window);
            let ratios = step_ratios(&geom);
            let product = alpha_k_product(&geom, &ratios, *k_max);
            let t5 = dim_base_s(&params);
            let t7 = dim_p_system(&params, &pv);
            let boxcount = match box_rank {
                Some(rank) => {
                    let cover = build_cover(&geom, *rank, g.cap)?;
                    let scales = default_scales(&cover, 14);
                    let est = boxcount_estimate(&cover, &scales);
                    Some(json!({
                        "rank": rank,
                        "slope": est.slope,
                        "stderr": est.stderr,
                        "window_decades": est.window_decades,
                        "narrow_window": est.narrow_window,
                    }))
                }
                None => None,
            };
            let report = json!({
                "params": { "s": params.s(), "u": params.u() },
                "P": pv.entries().iter().map(exact_string).collect::<Vec<_>>(),
                "method": "parity transfer matrix (normalized diameter sum)",
                "alpha_k": trace.alphas,
                "liminf": trace.liminf_est,
                "limsup": trace.limsup_est,
                "residuals": trace.residuals,
                "hypothesis_flags": {
                    "c_star": trace.c_star,
                    "c_star_positive": trace.c_star > 0.0,
                    "branching": trace.branching,
                    "bounded_branching": true,
                    "sset_sum_at_liminf": trace.sset_sum_at_liminf,
                },
                "product_form": {
                    "alpha": product.alpha,
                    "residual": product.residual,
                    "in_unit_interval": product.in_unit_interval,
                },
                "dim_base_s": t5.alpha,
                "dim_p_system": t7.alpha,
                "boxcount": boxcount,
            });
            match g.format {
                Format::Csv => {
                    println!("k,alpha_k,residual");
                    for (i, (a, r)) in trace.alphas.iter().zip(trace.residuals.iter()).enumerate() {
                        println!("{},{:.15},{:.3e}", i + 1, a, r);
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Plain => {
                    println!("s = {}, u = {}", params.s(), params.u());
                    println!("base-s self-similar alpha = {:.12}", t5.alpha);
                    println!("P-system self-similar alpha = {:.12}", t7.alpha);
                    println!(
                        "pre-dimension liminf = {:.12} (limsup {:.12}, window {})",
                        trace.liminf_est, trace.limsup_est, trace.window
                    );
                    println!(
                        "product-form alpha at k = {k_max}: {:.12} (in (0,1]: {})",
                        product.alpha, product.in_unit_interval
                    );
                    if let Some(b) = &boxcount {
                        println!(
                            "boxcount slope = {:.4} +/- {:.4}",
                            b["slope"].as_f64().unwrap(),
                            b["stderr"].as_f64().unwrap()
                        );
                    }
                }
            }
            Ok(())
        }

        Command::Verify => {
            // With explicit parameters: one configuration. Bare: the shipped
            // default battery.
            let configs: Vec<(SystemParams, ProbVector)> = if g.s.is_some() {
                let params = params_of(g)?;
                let pv = pv_of(g, params.s())?;
                vec![(params, pv)]
            } else {
                default_battery()
            };
            let mut all_ok = true;
            let mut reports = Vec::new();
            for (params, pv) in &configs {
                let report = verify::run_suite(params, pv, g.seed)?;
                all_ok &= report.passed();
                reports.push(report);
            }
            match g.format {
                Format::Json => {
                    let out: Vec<_> = reports
                        .iter()
                        .map(|r| {
                            json!({
                                "s": r.s,
                                "u": r.u,
                                "P": r.p_label,
                                "seed": r.seed,
                                "passed": r.passed(),
                                "properties": r.results.iter().map(|p| {
                                    json!({
                                        "name": p.name,
                                        "passed": p.passed,
                                        "detail": p.detail,
                                    })
                                }).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                _ => {
                    for r in &reports {
                        print!("{}", r.render());
                    }
                }
            }
            if all_ok {
                Ok(())
            } else {
                Err(CliError::Invariant)
            }
        }
    }
}

/// The default verify battery: three uniform reference systems and one
/// non-uniform vector.
fn default_battery() -> Vec<(SystemParams, ProbVector)> {
    let mut configs = Vec::new();
    for (s, u) in [(4u32, 0u32), (5, 2), (6, 5)] {
        configs.push((SystemParams::new(s, u).unwrap(), ProbVector::uniform(s)));
    }
    let pv = ProbVector::new(
        parse_rational_list("1/3,1/5,2/15,1/5,2/15").expect("valid battery vector"),
    )
    .expect("battery vector sums to 1");
    configs.push((SystemParams::new(5, 2).unwrap(), pv));
    configs
}

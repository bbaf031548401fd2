//! `corrterm`: exact Heegaard Floer d-invariants of lens spaces and knot
//! surgeries, and the reducible-surgery obstructions built on them.
//!
//! Exit codes: 0 = success / check passed; 1 = a verification sweep or
//! obstruction check found a contradiction or failure; 2 = invalid input.

mod output;

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use rayon::prelude::*;

use corrterm::{
    block_decomposition, check_reducible_constraints, cross_check_pq2_detail, gen_alex_pq2,
    reconstruct_vi_pq2, slice_reducible_verdict, slice_slope_candidates, smallthick_detail,
    staircase, thickness, vi_from_alex, AlexanderPoly, LensCalculator, SmallThickVerdict,
    ViSequence,
};
use output::*;

#[derive(Parser)]
#[command(
    name = "corrterm",
    version,
    about = "Exact d-invariants of lens spaces and Dehn surgeries, with reducible-surgery obstructions",
    after_help = "Exit codes: 0 success, 1 contradiction or failed verification, 2 invalid input.\n\
                  All rationals are printed exactly as num/den; there is no floating point."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// d-invariants of the lens space L(p, q)
    Lens {
        #[arg(long)]
        p: i64,
        /// Normalized mod p, so a surgery numerator may be passed directly
        #[arg(long)]
        q: i64,
        /// Only the given spin^c index instead of the whole table
        #[arg(long)]
        spinc: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// d-invariants of p/q surgery on a knot given by its Alexander
    /// polynomial (L-space knots) or its V-sequence
    #[command(group = ArgGroup::new("knot_input").required(true).args(["alex", "vi"]))]
    Surgery {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        /// Non-negative half of the Alexander polynomial, e.g. "1:1,0:-1"
        #[arg(long)]
        alex: Option<String>,
        /// Comma-separated V-sequence, e.g. "1,0"
        #[arg(long)]
        vi: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Knot Floer data of an L-space knot from its Alexander polynomial
    #[command(group = ArgGroup::new("selector").args(["vi", "staircase", "thickness", "nu_plus"]))]
    Knot {
        /// Non-negative half of the Alexander polynomial, e.g. "4:1,3:-1,1:1,0:-1"
        #[arg(long)]
        alex: String,
        /// Only the V-sequence
        #[arg(long)]
        vi: bool,
        /// Only the staircase (A, M, delta) triples
        #[arg(long)]
        staircase: bool,
        /// Only the thickness (delta-grading width)
        #[arg(long)]
        thickness: bool,
        /// Only nu+ (smallest k with V_k = 0)
        #[arg(long = "nu-plus")]
        nu_plus: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the sum-identity constraints for a hypothesized reducible
    /// surgery at slope p*q with summand orders p > q
    #[command(group = ArgGroup::new("knot_input").required(true).args(["alex", "vi", "slice"]))]
    CheckReducible {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        alex: Option<String>,
        #[arg(long)]
        vi: Option<String>,
        /// Use the identically-zero V-sequence of a slice knot
        #[arg(long)]
        slice: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verdict for a slice knot splitting off summands of orders p and q
    SliceObstruct {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// All slopes pq (p > q > 1 coprime) a knot of the given slice genus
    /// could reduce along with two non-trivial-homology summands
    SlopesForSliceGenus {
        #[arg(value_name = "G")]
        g: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Small-thickness obstruction for a hyperbolic L-space knot of genus g
    LspaceObstruct {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        th: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The Alexander polynomial forced on an L-space knot with a reducible
    /// surgery at slope q(q+2)
    GenAlex {
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The V-sequence forced in the same p - q = 2 situation, by sequencing
    /// through the sum-identity instances
    Reconstruct {
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cross-check the reconstruction against the closed-form polynomial
    /// for every odd q up to the bound
    CrossCheck {
        #[arg(long = "q-max")]
        q_max: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify the Moser identity for all torus knots T(p,q) with pq <= max
    VerifyTorus {
        #[arg(long)]
        max: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn parse_v(alex: &Option<String>, vi: &Option<String>) -> Result<ViSequence, corrterm::Error> {
    match (alex, vi) {
        (Some(pairs), _) => vi_from_alex(&AlexanderPoly::parse(pairs)?),
        (_, Some(csv)) => ViSequence::parse(csv),
        _ => unreachable!("clap enforces the input group"),
    }
}

fn run(cmd: Command) -> Result<ExitCode, corrterm::Error> {
    match cmd {
        Command::Lens { p, q, spinc, format } => {
            let mut calc = LensCalculator::new();
            let rows: Vec<DRow> = match spinc {
                Some(i) => vec![DRow { i, d: calc.d_lens(p, q, i)?.to_exact_string() }],
                None => calc
                    .d_lens_table(p, q)?
                    .iter()
                    .map(|(i, d)| DRow { i, d: d.to_exact_string() })
                    .collect(),
            };
            match format {
                Format::Json => print_json(&rows),
                Format::Csv => print_csv(&["i", "d"], &d_rows_cells(&rows)),
                Format::Text => {
                    println!("d-invariants of L({p},{q})");
                    print_table(&["i", "d"], &d_rows_cells(&rows));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Surgery { p, q, alex, vi, format } => {
            let v = parse_v(&alex, &vi)?;
            let mut calc = LensCalculator::new();
            let rows: Vec<DRow> = calc
                .d_surgery_table(p, q, &v)?
                .iter()
                .map(|(i, d)| DRow { i, d: d.to_exact_string() })
                .collect();
            match format {
                Format::Json => print_json(&rows),
                Format::Csv => print_csv(&["i", "d"], &d_rows_cells(&rows)),
                Format::Text => {
                    println!("d-invariants of {p}/{q} surgery");
                    print_table(&["i", "d"], &d_rows_cells(&rows));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Knot { alex, vi, staircase: want_stair, thickness: want_th, nu_plus: want_nu, format } => {
            let poly = AlexanderPoly::parse(&alex)?;
            let v = vi_from_alex(&poly)?;
            let all = !(vi || want_stair || want_th || want_nu);
            let mut out = KnotOut::default();
            if all {
                out.genus = Some(poly.genus());
            }
            if all || vi {
                out.v = Some(v.values().to_vec());
            }
            if all || want_nu {
                out.nu_plus = Some(v.nu_plus());
            }
            if all || want_th {
                out.thickness = Some(thickness(&poly)?);
            }
            if all || want_stair {
                let stair = staircase(&poly)?;
                out.staircase = Some(
                    stair
                        .generators()
                        .iter()
                        .map(|g| StaircaseRow { a: g.alexander, m: g.maslov, delta: g.delta() })
                        .collect(),
                );
            }
            emit_knot(&out, format);
            Ok(ExitCode::SUCCESS)
        }

        Command::CheckReducible { p, q, alex, vi, slice, format } => {
            let v = if slice { ViSequence::zero() } else { parse_v(&alex, &vi)? };
            let report = check_reducible_constraints(&v, p, q)?;
            let out = ReportOut::new(p, q, &report);
            emit_report(&out, format);
            Ok(exit_for(out.is_pass()))
        }

        Command::SliceObstruct { p, q, format } => {
            let report = slice_reducible_verdict(p, q)?;
            let out = ReportOut::new(p, q, &report);
            emit_report(&out, format);
            Ok(exit_for(out.is_pass()))
        }

        Command::SlopesForSliceGenus { g, format } => {
            let rows: Vec<SlopeRow> = slice_slope_candidates(g)
                .into_iter()
                .map(|(slope, p, q)| SlopeRow { slope, p, q })
                .collect();
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.slope.to_string(), r.p.to_string(), r.q.to_string()])
                .collect();
            match format {
                Format::Json => print_json(&rows),
                Format::Csv => print_csv(&["slope", "p", "q"], &cells),
                Format::Text => {
                    println!("candidate reducing slopes for slice genus {g}: {}", rows.len());
                    print_table(&["slope", "p", "q"], &cells);
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::LspaceObstruct { g, th, format } => {
            if g < 1 || th < 0 {
                eprintln!("error: need genus g >= 1 and thickness th >= 0");
                return Ok(ExitCode::from(2));
            }
            let detail = smallthick_detail(g, th);
            let reason = match detail.verdict {
                SmallThickVerdict::SlopeTooSmall => "slope 1 is never a reducing slope",
                SmallThickVerdict::PrimeSlope => {
                    "2g-1 is prime, so a splitting would need a trivial lens summand"
                }
                SmallThickVerdict::ThicknessBelowBound => {
                    "thickness is below t-1 for the smallest prime factor t of 2g-1"
                }
                SmallThickVerdict::NotExcluded => "not excluded by this test",
            };
            let out = LspaceObstructOut {
                g,
                th,
                slope: detail.slope,
                smallest_prime_factor: detail.smallest_prime_factor,
                excluded: detail.excluded(),
                reason: reason.to_string(),
            };
            match format {
                Format::Json => print_json(&out),
                Format::Csv => print_csv(
                    &["g", "th", "slope", "smallest_prime_factor", "excluded"],
                    &[vec![
                        out.g.to_string(),
                        out.th.to_string(),
                        out.slope.to_string(),
                        out.smallest_prime_factor.to_string(),
                        out.excluded.to_string(),
                    ]],
                ),
                Format::Text => {
                    println!(
                        "genus {g}, thickness {th}: candidate slope {} (smallest prime factor {})",
                        out.slope, out.smallest_prime_factor
                    );
                    println!(
                        "{}: {reason}",
                        if out.excluded { "excluded" } else { "not excluded" }
                    );
                }
            }
            Ok(exit_for(!out.excluded))
        }

        Command::GenAlex { q, format } => {
            let poly = gen_alex_pq2(q)?;
            let out = GenAlexOut {
                q,
                p: q + 2,
                genus: poly.genus(),
                alex: poly.pair_string(),
                poly: poly.to_string(),
            };
            match format {
                Format::Json => print_json(&out),
                Format::Csv => {
                    let cells: Vec<Vec<String>> = poly
                        .support_desc()
                        .iter()
                        .map(|&e| vec![e.to_string(), poly.coeff(e).to_string()])
                        .collect();
                    print_csv(&["exponent", "coefficient"], &cells);
                }
                Format::Text => {
                    println!("forced Alexander polynomial for p = {}, q = {q} (genus {}):", out.p, out.genus);
                    println!("  {}", out.poly);
                    println!("  pairs: {}", out.alex);
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Reconstruct { q, format } => {
            let v = reconstruct_vi_pq2(q)?;
            let p = q + 2;
            let dec = block_decomposition(&v);
            let run_bound = (p + q) / 2 + 2;
            if dec.longest_run() > run_bound {
                eprintln!(
                    "warning: a run of {} equal V_i exceeds the admissible {run_bound}",
                    dec.longest_run()
                );
            }
            let out = ReconstructOut {
                q,
                p,
                genus: v.genus(),
                v: v.values().to_vec(),
                blocks: dec.runs().iter().map(|&(value, len)| BlockRow { value, len }).collect(),
            };
            match format {
                Format::Json => print_json(&out),
                Format::Csv => {
                    let cells: Vec<Vec<String>> = out
                        .v
                        .iter()
                        .enumerate()
                        .map(|(i, v)| vec![i.to_string(), v.to_string()])
                        .collect();
                    print_csv(&["i", "v"], &cells);
                }
                Format::Text => {
                    println!("forced V-sequence for p = {p}, q = {q} (genus {}):", out.genus);
                    println!(
                        "  V = {}",
                        out.v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                    );
                    println!(
                        "  blocks: {}",
                        out.blocks
                            .iter()
                            .map(|b| format!("{}x{}", b.value, b.len))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::CrossCheck { q_max, format } => {
            let qs: Vec<i64> = (3..=q_max).step_by(2).collect();
            let rows: Vec<CrossCheckRow> = qs
                .par_iter()
                .map(|&q| {
                    let d = cross_check_pq2_detail(q)?;
                    Ok(CrossCheckRow {
                        q,
                        p: d.p,
                        genus: d.genus,
                        vi_match: d.vi_match,
                        constraints_pass: d.constraints_pass,
                        thickness: d.thickness,
                        thickness_lower: d.thickness_lower,
                        thickness_upper: d.thickness_upper,
                        ok: d.ok(),
                    })
                })
                .collect::<Result<_, corrterm::Error>>()?;
            let all_ok = rows.iter().all(|r| r.ok);
            let header = [
                "q", "p", "genus", "vi_match", "constraints_pass", "thickness", "lower", "upper", "ok",
            ];
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.q.to_string(),
                        r.p.to_string(),
                        r.genus.to_string(),
                        r.vi_match.to_string(),
                        r.constraints_pass.to_string(),
                        r.thickness.to_string(),
                        r.thickness_lower.to_string(),
                        r.thickness_upper.to_string(),
                        r.ok.to_string(),
                    ]
                })
                .collect();
            match format {
                Format::Json => print_json(&rows),
                Format::Csv => print_csv(&header, &cells),
                Format::Text => {
                    print_table(&header, &cells);
                    println!(
                        "checked {} values of q: {}",
                        rows.len(),
                        if all_ok { "all consistent" } else { "inconsistencies found" }
                    );
                }
            }
            Ok(exit_for(all_ok))
        }

        Command::VerifyTorus { max, format } => {
            let mut pairs: Vec<(i64, i64)> = Vec::new();
            for q in 2..max {
                for p in (q + 1)..=(max / q) {
                    if gcd(p, q) == 1 {
                        pairs.push((p, q));
                    }
                }
            }
            pairs.sort();
            let rows: Vec<MoserRow> = pairs
                .par_iter()
                .map_init(LensCalculator::new, |calc, &(p, q)| {
                    Ok(MoserRow { p, q, slope: p * q, ok: calc.moser_check(p, q)? })
                })
                .collect::<Result<_, corrterm::Error>>()?;
            let all_ok = rows.iter().all(|r| r.ok);
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![r.p.to_string(), r.q.to_string(), r.slope.to_string(), r.ok.to_string()]
                })
                .collect();
            match format {
                Format::Json => print_json(&rows),
                Format::Csv => print_csv(&["p", "q", "slope", "ok"], &cells),
                Format::Text => {
                    print_table(&["p", "q", "slope", "ok"], &cells);
                    println!(
                        "verified {} torus knots with pq <= {max}: {}",
                        rows.len(),
                        if all_ok { "all match" } else { "mismatches found" }
                    );
                }
            }
            Ok(exit_for(all_ok))
        }
    }
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit_knot(out: &KnotOut, format: Format) {
    match format {
        Format::Json => print_json(out),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            if let Some(g) = out.genus {
                rows.push(vec!["genus".into(), g.to_string()]);
            }
            if let Some(v) = &out.v {
                let joined = v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                rows.push(vec!["v".into(), joined]);
            }
            if let Some(n) = out.nu_plus {
                rows.push(vec!["nu_plus".into(), n.to_string()]);
            }
            if let Some(t) = out.thickness {
                rows.push(vec!["thickness".into(), t.to_string()]);
            }
            if let Some(stair) = &out.staircase {
                let joined = stair
                    .iter()
                    .map(|s| format!("{}:{}:{}", s.a, s.m, s.delta))
                    .collect::<Vec<_>>()
                    .join(" ");
                rows.push(vec!["staircase".into(), joined]);
            }
            print_csv(&["property", "value"], &rows);
        }
        Format::Text => {
            if let Some(g) = out.genus {
                println!("genus: {g}");
            }
            if let Some(v) = &out.v {
                println!("V: {}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
            }
            if let Some(n) = out.nu_plus {
                println!("nu+: {n}");
            }
            if let Some(t) = out.thickness {
                println!("thickness: {t}");
            }
            if let Some(stair) = &out.staircase {
                println!("staircase (A, M, delta):");
                let cells: Vec<Vec<String>> = stair
                    .iter()
                    .map(|s| vec![s.a.to_string(), s.m.to_string(), s.delta.to_string()])
                    .collect();
                print_table(&["a", "m", "delta"], &cells);
            }
        }
    }
}

fn emit_report(out: &ReportOut, format: Format) {
    match format {
        Format::Json => print_json(out),
        Format::Csv => print_csv(&EVIDENCE_HEADER, &evidence_cells(&out.evidence)),
        Format::Text => {
            println!(
                "slope {} = {} * {}: {}",
                out.slope, out.p, out.q, out.verdict
            );
            if !out.evidence.is_empty() {
                print_table(&EVIDENCE_HEADER, &evidence_cells(&out.evidence));
            }
        }
    }
}

//! Command surface for the segment calculus.

use std::process::ExitCode;

use periods_cli::{parse, report};

use clap::{Args, Parser, Subcommand, ValueEnum};

use periods_core::{
    corpus, decompose_pair, enumerate_subquotients, jacquet_ss, mackey_upper_bound,
    modular_exponents, orbit_parameters, verify_conjectures, Classifier, Factor, Form,
    FormalProduct, MackeyOutcome, OrbitStatus, Segment,
};

use parse::{parse_multisegment, parse_product};
use report::build_report;

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(
    name = "periods",
    about = "Segment calculus deciding symplectic periods of general linear groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a label carries a symplectic period.
    Classify {
        /// Multisegment, e.g. "Z{[0,1],[1,4]}".
        input: String,
        /// Print rule anchors along with the trace.
        #[arg(long)]
        trace: bool,
    },
    /// Composition series of a product of two segment labels.
    Decompose {
        /// Product of two single-segment labels, e.g. "Z{[0,1]} x Z{[1,2]}".
        input: String,
    },
    /// Candidate irreducible subquotients of a product of segment labels.
    Subquotients { input: String },
    /// Transpose of a label under the involution.
    Dual { input: String },
    /// Semisimplified Jacquet module of a product along a maximal parabolic.
    Jacquet {
        input: String,
        /// Dimension of the left block.
        #[arg(long)]
        split: u32,
    },
    /// Orbit parameters and modular exponents for the symplectic restriction.
    Orbits(OrbitsArgs),
    /// Orbit analysis of a product split after its first factor.
    Mackey { input: String },
    /// Classify every corpus input of a rank, streaming one report each.
    Scan(ScanArgs),
    /// Check the classification against the ladder-set characterization.
    VerifyConjectures(VerifyArgs),
}

#[derive(Args)]
struct OrbitsArgs {
    /// Symplectic rank.
    #[arg(long)]
    n: u32,
    /// Block size of the parabolic.
    #[arg(long)]
    k: u32,
}

fn parse_rank(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(v) if matches!(v, 2 | 4 | 6) => Ok(v),
        _ => Err("rank must be one of 2, 4, 6".to_string()),
    }
}

#[derive(Args)]
struct ScanArgs {
    /// Total dimension to enumerate.
    #[arg(long, value_parser = parse_rank)]
    rank: u32,
    /// Largest exponent in the corpus.
    #[arg(long, default_value_t = 6)]
    window: i32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Ranks to verify.
    #[arg(long, value_delimiter = ',', value_parser = parse_rank, default_values_t = [2u32, 4, 6])]
    rank: Vec<u32>,
    /// Largest exponent in the corpus.
    #[arg(long, default_value_t = 6)]
    window: i32,
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a streamed report goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_PRECONDITION)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, periods_core::Error> {
    match cli.command {
        Command::Classify { input, trace } => {
            let m = match parse_multisegment(&input) {
                Ok(m) => m,
                Err(e) => return Ok(parse_failure(e)),
            };
            let classifier = Classifier::new();
            // Surface precondition violations before reporting.
            classifier.classify(&m)?;
            let report = build_report(&classifier, &input, &m);
            if cli.format == OutputFormat::Records {
                println!("{}", serde_json::to_string(&report).expect("serializable report"));
            } else {
                println!("input:          {}", report.input);
                println!("normal form:    {}", report.normal_form);
                println!("verdict:        {}", report.verdict);
                for step in &report.trace {
                    if trace {
                        println!("  [{}] {} -- {}", step.rule, step.detail, step.anchor);
                    } else {
                        println!("  [{}] {}", step.rule, step.detail);
                    }
                }
                println!("dual:           {}", report.dual);
                println!("contragredient: {}", report.contragredient);
                match report.g_prime.violated_condition {
                    None if report.g_prime.member => println!("ladder set:     member"),
                    Some(c) => println!("ladder set:     no (condition {c})"),
                    None => println!("ladder set:     no"),
                }
                match &report.g_partition {
                    Some(blocks) => println!("ladder product: {}", blocks.join(" * ")),
                    None => println!("ladder product: none"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { input } => {
            let p = match parse_product(&input) {
                Ok(p) => p,
                Err(e) => return Ok(parse_failure(e)),
            };
            check_degrees(&p)?;
            let (a, b, form) = match two_segments(&p) {
                Some(t) => t,
                None => {
                    eprintln!(
                        "error: decompose expects a product of exactly two segment labels of one form"
                    );
                    return Ok(ExitCode::from(EXIT_PRECONDITION));
                }
            };
            let cs = decompose_pair(&a, &b, form)?;
            println!("length: {}", cs.length);
            if let Some(socle) = &cs.socle {
                println!("socle:   {}", socle);
            }
            if let Some(cosocle) = &cs.cosocle {
                println!("cosocle: {}", cosocle);
            }
            println!("factors:");
            for f in &cs.all_factors {
                println!("  {}", f);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Subquotients { input } => {
            let p = match parse_product(&input) {
                Ok(p) => p,
                Err(e) => return Ok(parse_failure(e)),
            };
            check_degrees(&p)?;
            let (segments, form) = match segment_factors(&p) {
                Some(t) => t,
                None => {
                    eprintln!("error: subquotients expects a product of segment labels of one form");
                    return Ok(ExitCode::from(EXIT_PRECONDITION));
                }
            };
            let set = enumerate_subquotients(&segments, form)?;
            println!(
                "count: {}{}",
                set.items.len(),
                if set.exact { "" } else { " (may over-approximate)" }
            );
            for m in &set.items {
                println!("  {}", m);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { input } => {
            let m = match parse_multisegment(&input) {
                Ok(m) => m,
                Err(e) => return Ok(parse_failure(e)),
            };
            if m.is_empty() {
                return Err(periods_core::Error::EmptyMultisegment);
            }
            println!("{}", periods_core::zelevinsky_dual(&m.normalized()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Jacquet { input, split } => {
            let p = match parse_product(&input) {
                Ok(p) => p,
                Err(e) => return Ok(parse_failure(e)),
            };
            check_degrees(&p)?;
            if split > p.dimension() {
                eprintln!("error: split {} exceeds total dimension {}", split, p.dimension());
                return Ok(ExitCode::from(EXIT_PRECONDITION));
            }
            let terms = jacquet_ss(&p, split);
            println!("terms at ({}, {}): {}", split, p.dimension() - split, terms.len());
            for t in &terms {
                println!("  {}", t);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbits(args) => {
            if args.k > 2 * args.n {
                eprintln!("error: block size {} exceeds the group rank {}", args.k, 2 * args.n);
                return Ok(ExitCode::from(EXIT_PRECONDITION));
            }
            for d in orbit_parameters(args.n, args.k) {
                let (delta, twist) = modular_exponents(&d);
                println!("{}, det exponents: delta={}, twist={}", d, delta, twist);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mackey { input } => {
            let p = match parse_product(&input) {
                Ok(p) => p,
                Err(e) => return Ok(parse_failure(e)),
            };
            check_degrees(&p)?;
            if p.factors.len() < 2 {
                eprintln!("error: mackey expects a product of at least two factors");
                return Ok(ExitCode::from(EXIT_PRECONDITION));
            }
            let sigma1 = FormalProduct::new(p.factors[..1].to_vec());
            let sigma2 = FormalProduct::new(p.factors[1..].to_vec());
            let classifier = Classifier::new();
            let outcome = mackey_upper_bound(&sigma1, &sigma2, &classifier)?;
            match &outcome {
                MackeyOutcome::NotDistinguished { verdicts } => {
                    println!("NotDistinguished: every orbit vanishes");
                    for v in verdicts {
                        println!("  {}: vanishes", v.orbit);
                    }
                }
                MackeyOutcome::Inconclusive { bound, verdicts } => {
                    println!("Inconclusive: functional dimension bound {}", bound);
                    for v in verdicts {
                        match &v.status {
                            OrbitStatus::Vanishes(_) => println!("  {}: vanishes", v.orbit),
                            OrbitStatus::MaybeNonzero { witness, term_count } => println!(
                                "  {}: {} surviving term(s), witness {} | {}",
                                v.orbit, term_count, witness.first, witness.second
                            ),
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan(args) => {
            let classifier = Classifier::new();
            for m in corpus(args.rank, args.window) {
                let report = build_report(&classifier, &m.to_string(), &m);
                if cli.format == OutputFormat::Records {
                    println!("{}", serde_json::to_string(&report).expect("serializable report"));
                } else {
                    let rule = report
                        .trace
                        .first()
                        .map(|s| s.rule.clone())
                        .unwrap_or_else(|| "-".to_string());
                    println!("{}\t{}\t{}", report.normal_form, report.verdict, rule);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyConjectures(args) => {
            let report = verify_conjectures(args.window, &args.rank)?;
            let mut clean = true;
            for r in &report.ranks {
                println!(
                    "rank {}: {} inputs, {} distinguished, {} unknown, {} set mismatches, {} table mismatches, {} table fallbacks, {} reduction mismatches",
                    r.rank,
                    r.total,
                    r.distinguished.len(),
                    r.unknown.len(),
                    r.g_mismatches.len(),
                    r.table_mismatches.len(),
                    r.table_fallbacks.len(),
                    r.reduction_mismatches.len()
                );
                for m in &r.unknown {
                    println!("  unknown: {}", m);
                }
                for m in &r.g_mismatches {
                    println!("  set mismatch: {}", m);
                }
                for m in &r.table_mismatches {
                    println!("  table mismatch: {}", m);
                }
                for m in &r.table_fallbacks {
                    println!("  finding (table fallback): {}", m);
                }
                for m in &r.reduction_mismatches {
                    println!("  reduction mismatch: {}", m);
                }
                clean &= r.clean();
            }
            if clean {
                println!("verdicts match the ladder-set characterization on every input");
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_MISMATCH))
            }
        }
    }
}

fn parse_failure(e: parse::ParseError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_PARSE)
}

/// One line label may not carry two degrees across the factors.
fn check_degrees(p: &FormalProduct) -> Result<(), periods_core::Error> {
    let mut degrees: std::collections::BTreeMap<String, u32> = std::collections::BTreeMap::new();
    for s in p.all_segments() {
        match degrees.get(&s.line.label) {
            None => {
                degrees.insert(s.line.label.clone(), s.line.degree);
            }
            Some(&d) if d != s.line.degree => {
                return Err(periods_core::Error::DegreeConflict {
                    label: s.line.label.clone(),
                    first: d,
                    second: s.line.degree,
                });
            }
            _ => {}
        }
    }
    Ok(())
}

fn two_segments(p: &FormalProduct) -> Option<(Segment, Segment, Form)> {
    let (segments, form) = segment_factors(p)?;
    if segments.len() == 2 {
        Some((segments[0].clone(), segments[1].clone(), form))
    } else {
        None
    }
}

fn segment_factors(p: &FormalProduct) -> Option<(Vec<Segment>, Form)> {
    let mut form: Option<Form> = None;
    let mut segments = Vec::new();
    for f in &p.factors {
        match f {
            Factor::Seg(fm, s) => {
                if *form.get_or_insert(*fm) != *fm {
                    return None;
                }
                segments.push(s.clone());
            }
            Factor::Label(m) if m.len() == 1 => {
                if *form.get_or_insert(m.form()) != m.form() {
                    return None;
                }
                segments.push(m.segments()[0].clone());
            }
            Factor::Label(_) => return None,
        }
    }
    form.map(|f| (segments, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_factor_extraction() {
        let p = parse_product("Z{[0,1]} x Z{[1,2]}").unwrap();
        let (segs, form) = segment_factors(&p).unwrap();
        assert_eq!(segs.len(), 2);
        assert_eq!(form, Form::Z);
        let p = parse_product("Z{[0,1]} x Q{[1,2]}").unwrap();
        assert!(segment_factors(&p).is_none());
    }
}

use std::io::Write;
use std::process::ExitCode;

use boolfn::chow::{self, ChowCertificate, ChowStatus, ChowVerdict};
use boolfn::formula::{self, FormulaAst};
use boolfn::monotone;
use boolfn::patterns::{self, FamilySpec};
use boolfn::report::{self, ClassificationReport};
use boolfn::threshold;
use boolfn::verify::{self, VerifyParams};
use boolfn::{Point, TruthTable};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "boolfn",
    version,
    about = "Classify Boolean functions and run verification sweeps"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Truth table as n:HEX, bit i = f(point with index i), x1 least significant.
    #[arg(long, conflicts_with = "formula")]
    table: Option<String>,
    /// Formula such as "x1 x2 | !x3"; needs --arity.
    #[arg(long, requires = "arity")]
    formula: Option<String>,
    #[arg(long)]
    arity: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report.
    Classify(Input),
    /// Minimal ones, maximal zeros and their count of a positive function.
    Extremal(Input),
    /// Threshold representation, or a 2-summability witness.
    Threshold(Input),
    /// Specification number and essential points of a threshold function.
    Specnum(Input),
    /// Chow parameters and verdict.
    Chow(Input),
    /// Search for a restriction equal to a pattern.
    Contains {
        #[command(flatten)]
        input: Input,
        /// Family (g_n:5, h3, g1, ...) or a table n:HEX.
        #[arg(long)]
        pattern: String,
        /// Match exactly instead of up to permutation and negation of variables.
        #[arg(long)]
        exact: bool,
    },
    /// Table and formula of a named family member.
    Family { name: String, n: Option<usize> },
    /// All positive functions of n variables.
    Enumerate {
        n: usize,
        /// Print only the number of functions.
        #[arg(long)]
        count: bool,
    },
    /// Run a verification sweep.
    Verify {
        /// Harness id; omit with --list.
        theorem: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &Input) -> Result<TruthTable, String> {
    match (&input.table, &input.formula) {
        (Some(t), None) => t.parse().map_err(|e: boolfn::Error| e.to_string()),
        (None, Some(f)) => {
            let arity = input.arity.ok_or("--formula needs --arity")?;
            Ok(formula::parse(f, arity)
                .map_err(|e| e.to_string())?
                .eval_to_table())
        }
        _ => Err("give exactly one of --table or --formula".into()),
    }
}

fn print_json(value: &impl serde::Serialize) {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn points(ps: &[Point]) -> String {
    ps.iter()
        .map(Point::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: &Cli) -> CliResult {
    let err = |e: boolfn::Error| e.to_string();
    match &cli.command {
        Command::Classify(input) => {
            let f = read_input(input)?;
            let r = report::classify(&f).map_err(err)?;
            if cli.json {
                print_json(&r);
            } else {
                print_report(&r);
            }
        }
        Command::Extremal(input) => {
            let f = read_input(input)?;
            let e = monotone::extremal_sets(&f).map_err(err)?;
            if cli.json {
                print_json(&e);
            } else {
                println!("minimal ones:  {}", points(&e.minimal_ones));
                println!("maximal zeros: {}", points(&e.maximal_zeros));
                println!("r = {}", e.r);
            }
        }
        Command::Threshold(input) => {
            let f = read_input(input)?;
            let rep = threshold::is_threshold(&f);
            let witness = match rep {
                Some(_) => None,
                None if f.arity() <= threshold::MAX_SUMMABILITY_ARITY[0] => {
                    threshold::is_k_summable(&f, 2).map_err(err)?
                }
                None => None,
            };
            if cli.json {
                print_json(&json!({
                    "threshold": rep.is_some(),
                    "representation": rep,
                    "summability_witness": witness,
                }));
            } else {
                match (&rep, &witness) {
                    (Some(r), _) => println!("threshold: {r}"),
                    (None, Some(w)) => {
                        println!("not threshold; 2-summable:");
                        println!("  false points: {}", points(&w.false_points));
                        println!("  true points:  {}", points(&w.true_points));
                    }
                    (None, None) => println!("not threshold"),
                }
            }
        }
        Command::Specnum(input) => {
            let f = read_input(input)?;
            let rep = threshold::is_threshold(&f).ok_or("function is not a threshold function")?;
            let ess = threshold::essential_points(&f).map_err(err)?;
            if cli.json {
                print_json(&json!({
                    "specification_number": ess.len(),
                    "essential_points": ess,
                    "representation": rep,
                }));
            } else {
                println!("sigma = {}", ess.len());
                println!("essential points: {}", points(&ess));
                println!("representation: {rep}");
            }
        }
        Command::Chow(input) => {
            let f = read_input(input)?;
            let params = chow::chow_parameters(&f);
            let verdict = chow::is_chow(&f);
            if cli.json {
                print_json(&json!({ "parameters": params, "verdict": verdict }));
            } else {
                println!("parameters: {:?}", params.as_tuple());
                print_chow(&verdict);
            }
        }
        Command::Contains {
            input,
            pattern,
            exact,
        } => {
            let f = read_input(input)?;
            let p = match pattern.parse::<FamilySpec>() {
                Ok(spec) => patterns::make_family(&spec),
                Err(_) => pattern
                    .parse::<TruthTable>()
                    .map_err(|_| format!("`{pattern}` is neither a family nor a table"))?,
            };
            let w = patterns::contains_restriction(&f, &p, !exact).map_err(err)?;
            if cli.json {
                print_json(&json!({ "found": w.is_some(), "witness": w }));
            } else {
                match w {
                    Some(w) => {
                        println!("assignment: {}", w.assignment);
                        println!(
                            "permutation: {:?}",
                            w.equivalence
                                .permutation
                                .images()
                                .iter()
                                .map(|i| i + 1)
                                .collect::<Vec<_>>()
                        );
                        println!(
                            "negated: {:?}",
                            w.equivalence
                                .negated
                                .iter()
                                .map(|i| i + 1)
                                .collect::<Vec<_>>()
                        );
                    }
                    None => println!("none"),
                }
            }
        }
        Command::Family { name, n } => {
            let spec = match n {
                Some(n) => FamilySpec::new(name.parse().map_err(err)?, *n),
                None => FamilySpec::fixed(name.parse().map_err(err)?),
            }
            .map_err(err)?;
            let ast: FormulaAst = spec.formula();
            let table = ast.eval_to_table();
            if cli.json {
                print_json(&json!({ "family": spec, "table": table, "formula": ast.render() }));
            } else {
                println!("{table}");
                println!("{}", ast.render());
            }
        }
        Command::Enumerate { n, count } => {
            let stream = boolfn::enumerate::positive_functions(*n).map_err(err)?;
            if *count {
                let c = stream.count();
                if cli.json {
                    print_json(&json!({ "n": n, "count": c }));
                } else {
                    println!("{c}");
                }
            } else {
                let stdout = std::io::stdout();
                let mut out = std::io::BufWriter::new(stdout.lock());
                for f in stream {
                    if writeln!(out, "{f}").is_err() {
                        break;
                    }
                }
            }
        }
        Command::Verify {
            theorem,
            list,
            n_min,
            n_max,
            samples,
            seed,
        } => {
            if *list {
                for id in verify::theorem_ids() {
                    println!("{id}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let id = theorem.as_deref().ok_or("give a harness id or --list")?;
            let params = VerifyParams {
                n_min: *n_min,
                n_max: *n_max,
                samples: *samples,
                seed: *seed,
            };
            let r = verify::verify(id, &params).map_err(err)?;
            if cli.json {
                print_json(&r);
            } else {
                println!(
                    "{} n={}..={}: {} instances, {} counterexamples, {} ms: {}",
                    r.theorem,
                    r.n_min,
                    r.n_max,
                    r.instances,
                    r.counterexample_count,
                    r.duration_ms,
                    if r.passed { "PASS" } else { "FAIL" }
                );
                for c in &r.counterexamples {
                    match &c.table {
                        Some(t) => println!("  {t}: {}", c.detail),
                        None => println!("  {}", c.detail),
                    }
                }
            }
            if !r.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_chow(v: &ChowVerdict) {
    let status = match v.status {
        ChowStatus::Chow => "chow",
        ChowStatus::NotChow => "not_chow",
        ChowStatus::Unknown => "unknown",
    };
    match &v.certificate {
        Some(ChowCertificate::Exhaustion { candidates }) => {
            println!("chow: {status} (checked all {candidates} functions)")
        }
        Some(ChowCertificate::Threshold { .. }) => println!("chow: {status} (threshold)"),
        Some(ChowCertificate::Collision { function, .. }) => {
            println!("chow: {status} (same parameters as {function})")
        }
        None => println!("chow: {status}"),
    }
}

fn print_report(r: &ClassificationReport) {
    println!("table: {}", r.table);
    let rel: Vec<String> = r
        .relevant_variables
        .iter()
        .map(|v| format!("x{}", v + 1))
        .collect();
    println!("relevant: {{{}}} (k = {})", rel.join(", "), r.k);
    println!("positive: {}", yes(r.positive));
    match &r.canalyzing_certificate {
        Some(c) => println!(
            "canalyzing: yes (x{} = {} forces {})",
            c.var + 1,
            c.input as u8,
            c.output as u8
        ),
        None => println!("canalyzing: no"),
    }
    match &r.read_once_formula {
        Some(f) => println!("read-once: yes ({f})"),
        None => println!("read-once: no"),
    }
    match &r.lro_formula {
        Some(f) => println!("lro: yes ({f})"),
        None => println!("lro: no"),
    }
    match &r.threshold_representation {
        Some(rep) => println!("threshold: yes ({rep})"),
        None => println!("threshold: no"),
    }
    print_chow(&r.chow);
    if let Some(e) = &r.extremal {
        println!("minimal ones:  {}", points(&e.minimal_ones));
        println!("maximal zeros: {}", points(&e.maximal_zeros));
        println!("r = {}", e.r);
    }
    if let (Some(s), Some(ess)) = (r.specification_number, &r.essential_points) {
        println!("sigma = {s}");
        println!("essential points: {}", points(ess));
    }
    if let Some(w) = &r.summability_witness {
        println!(
            "2-summable: false {} / true {}",
            points(&w.false_points),
            points(&w.true_points)
        );
    }
}

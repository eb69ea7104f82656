mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use flagorbit::orbit::{classify_subspace, count_parameters, enumerate_parameters};
use flagorbit::poset::hasse_diagram;
use flagorbit::ratmat::RationalMatrix;
use flagorbit::report::Report;
use flagorbit::steinberg::KTypePair;
use flagorbit::{Error, OrbitGraph, Partition};

#[derive(Parser)]
#[command(
    name = "flagorbit",
    version,
    about = "Orbit combinatorics for double flag varieties: enumeration, closure posets, Steinberg maps, and exact verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List all parameter graphs for (p, q, r) with dimensions and invariants
    Enumerate {
        p: usize,
        q: usize,
        r: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Full description of one parameter graph
    Report {
        /// Canonical graph string, e.g. 5x3x4:2-3,4-1:5:2
        omega: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Attach a sampled conormal element (JSON only)
        #[arg(long)]
        sample: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "FLAGORBIT_BOUND", default_value_t = 99)]
        bound: i64,
    },
    /// Closure poset with cover relations
    Hasse {
        p: usize,
        q: usize,
        r: usize,
        /// Emit Graphviz DOT (default is JSON adjacency)
        #[arg(long)]
        dot: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Parameters mapping to a given type pair under the symmetrized map
    Fiber {
        p: usize,
        q: usize,
        r: usize,
        /// Comma-separated partition of p, e.g. 2,1 (empty for the empty partition)
        #[arg(long, default_value = "")]
        lambda: String,
        /// Comma-separated partition of q
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the closed-form parameter count with the enumeration
    Count { p: usize, q: usize, r: usize },
    /// Recover the parameter graph of a subspace given by a matrix file
    Classify {
        /// File with a header line "p q r" followed by p+q rows of r
        /// whitespace-separated integers or rationals a/b
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the oracle-vs-combinatorics sweep and all property suites
    Verify {
        p: usize,
        q: usize,
        r: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Entry bound for conormal samples
        #[arg(long, env = "FLAGORBIT_BOUND", default_value_t = 99)]
        bound: i64,
        /// Samples per oracle evaluation
        #[arg(long, env = "FLAGORBIT_TRIALS", default_value_t = 3)]
        trials: usize,
    },
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = trimmed.split(',').map(|t| t.trim().parse()).collect();
    let parts = parts.map_err(|_| Error::Parse(format!("bad partition {:?}", text)))?;
    Partition::new(parts)
}

fn parse_matrix_file(text: &str) -> Result<(RationalMatrix, usize, usize), Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad header {:?}", header)))
        })
        .collect::<Result<_, _>>()?;
    let [p, q, r] = head[..] else {
        return Err(Error::Parse("header must be `p q r`".into()));
    };
    let mut rows = Vec::new();
    for line in lines {
        let row: Vec<BigRational> = line
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<_, _>>()?;
        if row.len() != r {
            return Err(Error::Parse(format!(
                "row has {} entries, expected r = {}",
                row.len(),
                r
            )));
        }
        rows.push(row);
    }
    if rows.len() != p + q {
        return Err(Error::Parse(format!(
            "found {} rows, expected p + q = {}",
            rows.len(),
            p + q
        )));
    }
    Ok((RationalMatrix::from_rows(rows)?, p, q))
}

fn parse_rational(token: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("bad rational {:?}", token));
    match token.split_once('/') {
        Some((n, d)) => {
            let numer = BigInt::from_str(n).map_err(|_| bad())?;
            let denom = BigInt::from_str(d).map_err(|_| bad())?;
            if denom == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(numer, denom))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(token).map_err(|_| bad())?,
        )),
    }
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {}", path.display(), e))),
        None => {
            println!("{}", content.trim_end());
            Ok(())
        }
    }
}

fn enumerate_text(graphs: &[OrbitGraph]) -> String {
    let mut out = String::new();
    for w in graphs {
        let d = w.derived_data();
        out.push_str(&format!(
            "{}  dim={}  ascents=({},{})  edges={}  crossings={}\n",
            w,
            w.dimension(),
            d.degree_ascents_plus,
            d.degree_ascents_minus,
            d.edge_count,
            d.crossing_count
        ));
    }
    out
}

fn report_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "omega: {}  (p={}, q={}, r={})\n",
        report.omega, report.p, report.q, report.r
    ));
    let d = &report.derived;
    out.push_str(&format!(
        "matched+: {:?}  marked+: {:?}  free+: {:?}\n",
        d.matched_plus, d.marked_plus, d.free_plus
    ));
    out.push_str(&format!(
        "matched-: {:?}  marked-: {:?}  free-: {:?}\n",
        d.matched_minus, d.marked_minus, d.free_minus
    ));
    let matching: Vec<String> = d
        .matching
        .pairs()
        .iter()
        .map(|(s, t)| format!("{}->{}", s, t))
        .collect();
    out.push_str(&format!(
        "matching: {{{}}}  ascents=({},{})  edges={}  crossings={}\n",
        matching.join(", "),
        d.degree_ascents_plus,
        d.degree_ascents_minus,
        d.edge_count,
        d.crossing_count
    ));
    out.push_str("rank matrix:\n");
    for row in &report.rank_matrix {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("  {}\n", cells.join(" ")));
    }
    out.push_str(&format!("dim: {}\n", report.dim));
    out.push_str(&format!("lambda: {}  mu: {}\n", report.lambda, report.mu));
    out.push_str(&format!("Lambda: {}\n", report.exotic_diagram));
    out.push_str(&format!(
        "exotic shapes: lambda'={}  mu'={}\n",
        report.exotic_shapes.lambda_prime, report.exotic_shapes.mu_prime
    ));
    out.push_str(&format!(
        "wk+: {:?}  wk-: {:?}\n",
        report.wk_plus, report.wk_minus
    ));
    let pairs = |v: &Vec<(i64, i64)>| -> String {
        v.iter()
            .map(|(s, t)| format!("{}->{}", s, t))
            .collect::<Vec<_>>()
            .join(", ")
    };
    out.push_str(&format!("ws+: {{{}}}\n", pairs(&report.ws_plus)));
    out.push_str(&format!("ws-: {{{}}}\n", pairs(&report.ws_minus)));
    out.push_str(&format!(
        "grs: T1={:?} T2={:?} lambda'={} mu'={} nu={}\n",
        report.grs.t1.rows(),
        report.grs.t2.rows(),
        report.grs.lambda_prime,
        report.grs.mu_prime,
        report.grs.nu
    ));
    out.push_str(&format!(
        "grassmann: meets=({},{}) dim={}\n",
        report.grassmann.dim_meet_plus,
        report.grassmann.dim_meet_minus,
        report.grassmann.k_orbit_dim
    ));
    out
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Enumerate {
            p,
            q,
            r,
            format,
            output,
        } => {
            let graphs = enumerate_parameters(p, q, r)?;
            let content = match format {
                Format::Text => enumerate_text(&graphs),
                Format::Json => {
                    let items: Vec<serde_json::Value> = graphs
                        .iter()
                        .map(|w| {
                            let d = w.derived_data();
                            serde_json::json!({
                                "omega": w.to_string(),
                                "dim": w.dimension(),
                                "ascents": [d.degree_ascents_plus, d.degree_ascents_minus],
                                "edges": d.edge_count,
                                "crossings": d.crossing_count,
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&items).expect("serializable")
                }
            };
            emit(&output, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report {
            omega,
            format,
            output,
            sample,
            seed,
            bound,
        } => {
            let w: OrbitGraph = omega.parse()?;
            let report = Report::for_omega(&w)?;
            let content = match format {
                Format::Text => report_text(&report),
                Format::Json => {
                    let mut value = serde_json::to_value(&report).expect("serializable");
                    if sample {
                        let element = flagorbit::oracle::sample_conormal(&w, bound, seed)?;
                        value.as_object_mut().expect("object").insert(
                            "conormalSample".into(),
                            serde_json::json!({
                                "seed": seed,
                                "bound": bound,
                                "x": element.x().to_json(),
                            }),
                        );
                    }
                    serde_json::to_string_pretty(&value).expect("serializable")
                }
            };
            emit(&output, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Hasse {
            p,
            q,
            r,
            dot,
            output,
        } => {
            let h = hasse_diagram(p, q, r)?;
            let content = if dot {
                h.to_dot()
            } else {
                serde_json::to_string_pretty(&h.to_json()).expect("serializable")
            };
            emit(&output, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fiber {
            p,
            q,
            r,
            lambda,
            mu,
            format,
            output,
        } => {
            let target = KTypePair {
                lambda: parse_partition(&lambda)?,
                mu: parse_partition(&mu)?,
            };
            if target.lambda.size() != p || target.mu.size() != q {
                return Err(Error::InvalidInput(format!(
                    "need |lambda| = p and |mu| = q, got sizes ({}, {})",
                    target.lambda.size(),
                    target.mu.size()
                )));
            }
            let members = flagorbit::grs::fiber(p, q, r, &target)?;
            let formula = flagorbit::grs::fiber_cardinality(&target.lambda, &target.mu, r);
            let content = match format {
                Format::Text => {
                    let mut out = String::new();
                    for w in &members {
                        out.push_str(&format!("{}\n", w));
                    }
                    out.push_str(&format!(
                        "count={} formula={} {}\n",
                        members.len(),
                        formula,
                        if members.len() as u64 == formula {
                            "OK"
                        } else {
                            "MISMATCH"
                        }
                    ));
                    out
                }
                Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                    "lambda": target.lambda,
                    "mu": target.mu,
                    "members": members.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    "formula": formula,
                }))
                .expect("serializable"),
            };
            emit(&output, &content)?;
            if members.len() as u64 != formula {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { p, q, r } => {
            let formula = count_parameters(p, q, r);
            let enumerated = enumerate_parameters(p, q, r)?.len() as u64;
            let ok = formula == enumerated;
            println!(
                "formula={} enumerated={} {}",
                formula,
                enumerated,
                if ok { "OK" } else { "MISMATCH" }
            );
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Classify { matrix, format } => {
            let text = fs::read_to_string(&matrix).map_err(|e| {
                Error::InvalidInput(format!("cannot read {}: {}", matrix.display(), e))
            })?;
            let (m, p, q) = parse_matrix_file(&text)?;
            let w = classify_subspace(&m, p, q)?;
            match format {
                Format::Text => println!("{}", w),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({"omega": w.to_string()}))
                        .expect("serializable")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            p,
            q,
            r,
            seed,
            bound,
            trials,
        } => {
            let ok = verify::run_sweep(
                p,
                q,
                r,
                &verify::Options {
                    seed,
                    bound,
                    trials,
                },
            )?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(3)
        }
    }
}

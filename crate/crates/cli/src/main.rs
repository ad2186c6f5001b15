//! Command-line front end: condition analysis, extremal-family generators,
//! exact cycle oracles, the insertion-based extender, and the verification
//! campaigns.
//!
//! Exit codes: 0 on success, 1 when a campaign finds violations, 2 on usage
//! or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};

use hamcycle::families::{self, G1Params, G2Params};
use hamcycle::formats::GraphFormat;
use hamcycle::insertion::{self, Extension};
use hamcycle::invariants;
use hamcycle::oracle;
use hamcycle::{Graph, OrientedCycle, Rational};
use hamcycle_cli::campaign::{self, CampaignResult};
use hamcycle_cli::corpus::CorpusSpec;
use hamcycle_cli::{io, report};

#[derive(Parser)]
#[command(name = "hamcycle", version, about = "Degree-sum Hamiltonicity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants, evaluate the sufficient conditions, and run the
    /// exact oracle on one graph.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Single connectivity parameter (shorthand for --k-range K:K).
        #[arg(long, conflicts_with = "k_range")]
        k: Option<usize>,
        /// Parameter range LO:HI for the parameterised conditions.
        #[arg(long = "k-range", value_parser = parse_range)]
        k_range: Option<(usize, usize)>,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Search-node budget for the oracle.
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
    },
    /// Generate a graph and write it to a file (or stdout).
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Exact Hamiltonian-cycle or longest-cycle search.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        /// Search for a longest cycle instead of Hamiltonicity.
        #[arg(long)]
        longest: bool,
        /// Node budget (search nodes / DP states).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Grow a cycle by insertion moves until no move applies.
    Extend {
        /// Graph file.
        #[arg(long)]
        file: PathBuf,
        /// Starting cycle as a comma-separated vertex list.
        #[arg(long, value_parser = parse_cycle)]
        cycle: std::vec::Vec<usize>,
    },
    /// Soundness campaign: wherever the main condition holds, the oracle
    /// must find a Hamiltonian cycle; plus the bound-implication scan.
    Search {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Parameter range LO:HI.
        #[arg(long = "k-range", value_parser = parse_range, default_value = "1:4")]
        k_range: (usize, usize),
    },
    /// Structural campaign for the insertion machinery on connected
    /// non-Hamiltonian samples.
    VerifyLemmas {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Stop after this many qualifying samples.
        #[arg(long)]
        target: Option<u64>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// The non-Hamiltonian family with one edgeless flank per side.
    G1 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The Hamiltonian family separating the two degree-sum bounds.
    G2 {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Smallest tightness instance for a rational epsilon, with its
    /// certificate printed to stdout.
    G1Epsilon {
        #[arg(long)]
        k: usize,
        /// Exact rational, e.g. 1 or 1/3.
        #[arg(long, value_parser = parse_rational)]
        eps: Rational,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A sequential-join expression such as "K1+~K4+~K5+~K1".
    Expr {
        expression: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; stdout when omitted (edge-list format).
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Force a format instead of deciding by extension.
    #[arg(long, value_parser = parse_format)]
    format: Option<GraphFormat>,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (.g6/.graph6 for graph6, edge list otherwise).
    #[arg(long, conflicts_with = "expr")]
    file: Option<PathBuf>,
    /// Sequential-join expression instead of a file.
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long = "n-min", default_value_t = 6)]
    n_min: usize,
    #[arg(long = "n-max", default_value_t = 12)]
    n_max: usize,
    /// Samples per (n, p) bucket.
    #[arg(long, default_value_t = 25)]
    samples: u64,
    /// Comma-separated edge probabilities (fractions or decimals).
    #[arg(long, default_value = "0.3,0.5,0.7", value_parser = parse_probabilities)]
    p: std::vec::Vec<(u64, u64)>,
    #[arg(long, default_value_t = 20250810)]
    seed: u64,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.file, &self.expr) {
            (Some(path), None) => io::load_graph(path),
            (None, Some(expr)) => {
                let parsed = families::parse_join(expr).map_err(|e| anyhow!("{e}"))?;
                Ok(families::build(&parsed))
            }
            _ => bail!("provide exactly one of --file and --expr"),
        }
    }
}

impl CorpusArgs {
    fn spec(&self) -> Result<CorpusSpec> {
        let spec = CorpusSpec {
            n_min: self.n_min,
            n_max: self.n_max,
            samples_per_n: self.samples,
            probabilities: self.p.clone(),
            seed: self.seed,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = text
        .split_once(':')
        .or_else(|| text.split_once(".."))
        .ok_or_else(|| format!("expected LO:HI, got {text:?}"))?;
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad bound {lo:?}"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad bound {hi:?}"))?;
    if lo < 1 || lo > hi {
        return Err(format!("need 1 <= LO <= HI, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn parse_cycle(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad vertex {t:?}")))
        .collect()
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    Rational::parse(text).ok_or_else(|| format!("not a rational: {text:?}"))
}

fn parse_format(text: &str) -> Result<GraphFormat, String> {
    match text {
        "g6" | "graph6" => Ok(GraphFormat::Graph6),
        "el" | "edge-list" => Ok(GraphFormat::EdgeList),
        _ => Err(format!("unknown format {text:?} (expected g6 or el)")),
    }
}

/// One probability: `p/q`, an integer, or a decimal like `0.3`.
fn parse_probability(text: &str) -> Result<(u64, u64), String> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let num: u64 = p.trim().parse().map_err(|_| format!("bad numerator {p:?}"))?;
        let den: u64 = q.trim().parse().map_err(|_| format!("bad denominator {q:?}"))?;
        return Ok((num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let whole: u64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| format!("bad probability {text:?}"))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad probability {text:?}"));
        }
        let den = 10u64
            .checked_pow(frac.len() as u32)
            .ok_or_else(|| format!("too many digits in {text:?}"))?;
        let num = whole * den + frac.parse::<u64>().unwrap();
        return Ok((num, den));
    }
    let whole: u64 = text.parse().map_err(|_| format!("bad probability {text:?}"))?;
    Ok((whole, 1))
}

fn parse_probabilities(text: &str) -> Result<Vec<(u64, u64)>, String> {
    text.split(',').map(parse_probability).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze { input, k, k_range, json, budget } => {
            let g = input.load()?;
            let (k_min, k_max) = match (k, k_range) {
                (Some(k), _) => (k, k),
                (None, Some(r)) => r,
                (None, None) => (1, 4.min(g.n().max(1))),
            };
            let report = report::analysis_report(&g, k_min, k_max, budget);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_text_report(&report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family } => {
            let (graph, out, extra) = match family {
                GenCommand::G1 { k, kappa, m, n, out } => {
                    let gen = families::generate_g1(G1Params { k, kappa, m, n })
                        .map_err(|e| anyhow!("{e}"))?;
                    (gen.graph, out, None)
                }
                GenCommand::G2 { kappa, r, k, m, out } => {
                    let gen = families::generate_g2(G2Params { kappa, r, k, m })
                        .map_err(|e| anyhow!("{e}"))?;
                    (gen.graph, out, None)
                }
                GenCommand::G1Epsilon { k, eps, out } => {
                    let cert = families::generate_g1_epsilon(k, eps).map_err(|e| anyhow!("{e}"))?;
                    let summary = format!(
                        "epsilon {} -> kappa={} m={} n={}; sigma_{}={} bound={} holds={}; cut leaves {} components over {} deleted",
                        cert.epsilon,
                        cert.params.kappa,
                        cert.params.m,
                        cert.params.n,
                        k + 1,
                        cert.sigma,
                        cert.bound,
                        cert.holds,
                        cert.cut.component_count,
                        cert.cut.cut.len(),
                    );
                    (cert.instance.graph, out, Some(summary))
                }
                GenCommand::Expr { expression, out } => {
                    let parsed = families::parse_join(&expression).map_err(|e| anyhow!("{e}"))?;
                    (families::build(&parsed), out, None)
                }
            };
            if let Some(line) = extra {
                println!("{line}");
            }
            match out.output {
                Some(path) => {
                    io::save_graph(&graph, &path, out.format)?;
                    println!("wrote {} ({} vertices, {} edges)", path.display(), graph.n(), graph.edge_count());
                }
                None => {
                    let format = out.format.unwrap_or(GraphFormat::EdgeList);
                    print!("{}", hamcycle::formats::write_graph(&graph, format).map_err(|e| anyhow!("{e}"))?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { input, longest, budget } => {
            let g = input.load()?;
            if longest {
                let r = oracle::longest_cycle(&g, budget);
                match (r.cycle, r.exact) {
                    (Some(c), exact) => println!(
                        "longest cycle length {} ({}): {}",
                        c.len(),
                        if exact { "exact" } else { "budget hit, lower bound" },
                        join(c.order())
                    ),
                    (None, true) => println!("acyclic (exact)"),
                    (None, false) => println!("unknown (budget exhausted)"),
                }
            } else {
                let r = oracle::hamiltonian_cycle(&g, budget);
                match (r.cycle, r.exact) {
                    (Some(c), _) => println!("hamiltonian (exact): {}", join(c.order())),
                    (None, true) => println!("non-hamiltonian (exact)"),
                    (None, false) => println!("unknown (budget exhausted)"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extend { file, cycle } => {
            let g = io::load_graph(&file)?;
            let mut current = OrientedCycle::new(&g, cycle).map_err(|e| anyhow!("{e}"))?;
            let alpha = invariants::independence_number(&g);
            println!("start: length {}: {}", current.len(), join(current.order()));
            loop {
                match insertion::extend_cycle(&g, &current, alpha) {
                    Extension::Extended(next) => {
                        println!("extended to length {}: {}", next.len(), join(next.order()));
                        current = next;
                    }
                    Extension::Unchanged => break,
                }
            }
            println!("final: length {} of {}", current.len(), g.n());
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { corpus, k_range } => {
            let spec = corpus.spec()?;
            let (k_min, k_max) = k_range;
            let main = campaign::verify_main_theorem(&spec, k_min, k_max);
            print_campaign("main-implies-hamiltonian", &main);
            let chain = campaign::implication_scan(&spec, k_min, k_max);
            print_campaign("bondy-implies-ce-or-main", &chain);
            Ok(exit_for(&[main, chain]))
        }
        Command::VerifyLemmas { corpus, target } => {
            let spec = corpus.spec()?;
            let result = campaign::verify_lemmas(&spec, target);
            print_campaign("insertion-frame-checks", &result);
            Ok(exit_for(&[result]))
        }
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_campaign(name: &str, r: &CampaignResult) {
    let skipped: u64 = r.skipped.values().sum();
    println!(
        "{name}: {} tested, {} skipped, {} violations in {:.2?}",
        r.graphs_tested,
        skipped,
        r.violations.len(),
        r.elapsed
    );
    for v in &r.violations {
        println!("  VIOLATION [{}] {}: {}", v.check, v.graph6, v.detail);
    }
}

fn exit_for(results: &[CampaignResult]) -> ExitCode {
    if results.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_text_report(report: &serde_json::Value) {
    let inv = &report["invariants"];
    println!(
        "n={} kappa={} alpha={} min_degree={}",
        inv["n"], inv["kappa"], inv["alpha"], inv["min_degree"]
    );
    if let Some(sigma) = inv["sigma"].as_object() {
        let parts: Vec<String> = sigma.iter().map(|(k, v)| format!("sigma_{k}={v}")).collect();
        println!("{}", parts.join(" "));
    }
    if let Some(conds) = report["conditions"].as_array() {
        for c in conds {
            let id = c["id"].as_str().unwrap_or("?");
            let k = c["k"].as_u64().map(|k| format!("({k})")).unwrap_or_default();
            let status = if !c["applicable"].as_bool().unwrap_or(false) {
                "not applicable"
            } else if c["holds"].as_bool().unwrap_or(false) {
                "holds"
            } else {
                "fails"
            };
            println!(
                "{id}{k}: {status}  lhs={} rhs={} margin={}",
                c["lhs"], c["rhs"], c["margin"]
            );
        }
    }
    let o = &report["oracle"];
    println!(
        "oracle: hamiltonian={} exact={}",
        o["hamiltonian"], o["exact"]
    );
}

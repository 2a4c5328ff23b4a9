//! Batch front-end: group specs and experiment parameters in, exact
//! values, CSV/JSON tables, and verification results out.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors
//! (bad flags, malformed specs, invalid parameters, unwritable outputs).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use braidwalk::args::{
    parse_coxeter_types, parse_int_list, parse_rational, parse_u64_list, parse_word_list,
};
use braidwalk::fmt::{fmt_braid_ints, fmt_limit, fmt_rational, fmt_real};
use braidwalk::output::{
    ldp_report_json, walk_report_json, write_graph_dump, write_ldp_csv, write_walk_csv,
};
use braidwalk::par::parallel_tallies;
use braidwalk::spec_json::{parse_group_spec, spec_to_value};
use braidwalk::verify;
use braidwalk_core::braid::{
    block_diagonal_compose, closure_components, component_limits, lift_to_braid, BraidWord,
};
use braidwalk_core::cayley::build_cayley;
use braidwalk_core::group::{build_group, presentation_of, Letter, Word};
use braidwalk_core::ldp::{kappa_exact, rate_convergence_report, rate_i, Model};
use braidwalk_core::limits::{coxeter_limit, cyclic_limit, cyclic_product_limit, DegreeTable};
use braidwalk_core::walk::{report_from_tallies, StepDistribution};
use braidwalk_core::DEFAULT_SEED;

#[derive(Parser)]
#[command(
    name = "braidwalk",
    version,
    about = "Random walks on Cayley graphs of finite groups, braid lifts, and exact limit laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Table format for result-producing subcommands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Master seed; trial i derives its own stream from (seed, i).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Cap on worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact limiting expectations in closed form.
    Limits {
        #[command(subcommand)]
        which: LimitsCmd,
    },
    /// Simulate the walk and compare against the exact limit.
    Walk {
        /// Group spec as JSON, e.g. '{"family":"coxeter_a","rank":2}'.
        #[arg(long)]
        group: String,
        /// Step count N; the report covers N-1, N, N+1.
        #[arg(long, default_value_t = 200)]
        steps: u64,
        /// Independent trials.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// Holding probability (rational like 1/5, or decimal).
        #[arg(long, default_value = "0")]
        hold: String,
    },
    /// Braid word operations.
    Braid {
        #[command(subcommand)]
        which: BraidCmd,
    },
    /// Large-deviation counts, rates, and reports.
    Ldp {
        #[command(subcommand)]
        which: LdpCmd,
    },
    /// Dump a Cayley graph as an edge list plus distances.
    Graph {
        /// Group spec as JSON.
        #[arg(long)]
        group: String,
    },
    /// Run the verification suite and print one line per check.
    Verify {
        /// Comma-separated check ids (all when omitted), e.g. 1,4,10.
        #[arg(long)]
        criteria: Option<String>,
    },
}

#[derive(Subcommand)]
enum LimitsCmd {
    /// Limiting length expectation on the m-cycle.
    Cyclic {
        #[arg(long)]
        m: u64,
    },
    /// Limiting length expectation on a product of cyclic groups.
    CyclicProduct {
        /// Comma-separated moduli, e.g. 2,4.
        #[arg(long)]
        moduli: String,
    },
    /// Limiting braid length for a Coxeter type or x-joined product,
    /// e.g. B3 or A1xI2(5).
    Coxeter {
        #[arg(long = "type")]
        type_name: String,
    },
    /// Limiting closure component counts for braids on n strands.
    Components {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Lift the element reached by a Coxeter word to a braid word.
    Lift {
        /// Coxeter-family group spec as JSON.
        #[arg(long)]
        group: String,
        /// Word over the generators, 1-based, e.g. [1,2,1].
        #[arg(long)]
        word: String,
    },
    /// Count the components of a braid closure.
    Closure {
        /// Braid word as a signed list, e.g. [1,-2].
        #[arg(long)]
        word: String,
        #[arg(long)]
        strands: usize,
    },
    /// Stack braid words block-diagonally.
    Compose {
        /// JSON list of words, e.g. [[1,-2],[1,1],[1]].
        #[arg(long)]
        words: String,
        /// Comma-separated strand counts, one per word, e.g. 3,2,2.
        #[arg(long)]
        strands: String,
    },
}

#[derive(Subcommand)]
enum LdpCmd {
    /// Count k-tuples in [0, j) summing to n.
    Kappa {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        k: u64,
    },
    /// Evaluate the rate function at x for the strand count n.
    Rate {
        #[arg(long)]
        n: u64,
        /// Rational x, e.g. 1/2.
        #[arg(long)]
        x: String,
    },
    /// Tabulate -log Pr / N under both models against the rate function.
    Report {
        #[arg(long)]
        n: u64,
        /// Rational x with N*x integral for every block count.
        #[arg(long)]
        x: String,
        /// Comma-separated block counts, e.g. 4,16,64.
        #[arg(long)]
        blocks: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore the error if a pool already exists (repeat invocation in
        // tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn sink(output: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Limits { which } => run_limits(which)?,
        Command::Walk { group, steps, trials, hold } => {
            run_walk(cli, group, *steps, *trials, hold)?
        }
        Command::Braid { which } => run_braid(which)?,
        Command::Ldp { which } => run_ldp(cli, which)?,
        Command::Graph { group } => {
            let spec = parse_group_spec(group)?;
            let graph = build_cayley(&build_group(&spec)?)?;
            let mut out = sink(&cli.output)?;
            write_graph_dump(&mut out, &graph)?;
        }
        Command::Verify { criteria } => return run_verify(criteria.as_deref()),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_limits(which: &LimitsCmd) -> Result<()> {
    match which {
        LimitsCmd::Cyclic { m } => println!("{}", fmt_limit(&cyclic_limit(*m)?)),
        LimitsCmd::CyclicProduct { moduli } => {
            let moduli = parse_u64_list(moduli)?;
            println!("{}", fmt_rational(&cyclic_product_limit(&moduli)?));
        }
        LimitsCmd::Coxeter { type_name } => {
            let types = parse_coxeter_types(type_name)?;
            let table = DegreeTable::load()?;
            println!("{}", fmt_limit(&coxeter_limit(&table, &types)?));
        }
        LimitsCmd::Components { n } => {
            let (even, odd) = component_limits(*n)?;
            if even == odd {
                println!("{}", fmt_rational(&even));
            } else {
                println!("{} {}", fmt_rational(&even), fmt_rational(&odd));
            }
        }
    }
    Ok(())
}

fn run_walk(cli: &Cli, group: &str, steps: u64, trials: u64, hold: &str) -> Result<()> {
    if steps < 1 {
        bail!("--steps must be at least 1");
    }
    if trials < 1 {
        bail!("--trials must be at least 1");
    }
    let spec = parse_group_spec(group)?;
    let concrete = build_group(&spec)?;
    let graph = build_cayley(&concrete)?;
    let pres = presentation_of(&spec)?;
    let dist = StepDistribution::uniform(&concrete, parse_rational(hold)?)?;
    let tallies = parallel_tallies(&graph, &dist, steps, trials, cli.seed)?;
    let report =
        report_from_tallies(&graph, &pres, &dist, &tallies, cli.seed, graph.length_functional())?;

    let mut out = sink(&cli.output)?;
    match cli.format {
        Format::Csv => write_walk_csv(&mut out, &report)?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&walk_report_json(&report, spec_to_value(&spec)))?
        )?,
    }
    out.flush()?;
    if cli.output.is_some() {
        for row in &report.rows {
            println!(
                "step {}: mean {} vs exact {} (tv {})",
                row.step,
                fmt_real(row.empirical_mean),
                fmt_rational(&row.exact_limit),
                fmt_real(row.tv_distance)
            );
        }
    }
    Ok(())
}

fn run_braid(which: &BraidCmd) -> Result<()> {
    match which {
        BraidCmd::Lift { group, word } => {
            let spec = parse_group_spec(group)?;
            let concrete = build_group(&spec)?;
            let graph = build_cayley(&concrete)?;
            let ints = parse_int_list(word)?;
            let letters = ints
                .iter()
                .map(|&k| {
                    let generators = concrete.generators().len() as i64;
                    if k < 1 || k > generators {
                        bail!("word letter {k} out of range 1..={generators}");
                    }
                    Ok(Letter::plus(k as usize - 1))
                })
                .collect::<Result<Vec<Letter>>>()?;
            let element = concrete.evaluate_word(&Word::new(letters));
            let braid = lift_to_braid(&graph, &element)?;
            println!("{}", fmt_braid_ints(&braid.to_ints()));
        }
        BraidCmd::Closure { word, strands } => {
            let braid = BraidWord::from_ints(*strands, &parse_int_list(word)?)?;
            println!("{}", closure_components(&braid));
        }
        BraidCmd::Compose { words, strands } => {
            let word_ints = parse_word_list(words)?;
            let strand_counts = parse_u64_list(strands)?;
            if word_ints.len() != strand_counts.len() {
                bail!(
                    "{} words but {} strand counts",
                    word_ints.len(),
                    strand_counts.len()
                );
            }
            let blocks = word_ints
                .iter()
                .zip(&strand_counts)
                .map(|(ints, &n)| BraidWord::from_ints(n as usize, ints))
                .collect::<braidwalk_core::Result<Vec<BraidWord>>>()?;
            let composed = block_diagonal_compose(&blocks)?;
            println!("{}", fmt_braid_ints(&composed.to_ints()));
        }
    }
    Ok(())
}

fn run_ldp(cli: &Cli, which: &LdpCmd) -> Result<()> {
    match which {
        LdpCmd::Kappa { n, j, k } => println!("{}", kappa_exact(*n, *j, *k)),
        LdpCmd::Rate { n, x } => {
            let x = parse_rational(x)?;
            println!("{}", fmt_real(rate_i(&x, *n)?));
        }
        LdpCmd::Report { n, x, blocks } => {
            let x = parse_rational(x)?;
            let block_counts = parse_u64_list(blocks)?;
            let rows = rate_convergence_report(*n, &x, &block_counts)?;
            let mut out = sink(&cli.output)?;
            match cli.format {
                Format::Csv => write_ldp_csv(&mut out, &rows)?,
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&ldp_report_json(&rows))?)?
                }
            }
            out.flush()?;
            // Successive differences per model, as a human-readable recap.
            for model in [Model::Composition, Model::TrueLength] {
                let values: Vec<f64> = rows
                    .iter()
                    .filter(|row| row.model == model)
                    .map(|row| row.neg_log_prob_over_blocks)
                    .collect();
                let diffs: Vec<String> = values
                    .windows(2)
                    .map(|w| fmt_real(w[1] - w[0]))
                    .collect();
                eprintln!(
                    "{}: -log Pr/N = [{}], successive differences [{}]",
                    model.name(),
                    values.iter().map(|&v| fmt_real(v)).collect::<Vec<_>>().join(", "),
                    diffs.join(", ")
                );
            }
        }
    }
    Ok(())
}

fn run_verify(criteria: Option<&str>) -> Result<ExitCode> {
    let ids = match criteria {
        Some(text) => parse_u64_list(text)?
            .into_iter()
            .map(|id| id as usize)
            .collect(),
        None => Vec::new(),
    };
    let checks = verify::run(&ids);
    if checks.is_empty() {
        bail!("no matching criteria");
    }
    let mut failed = 0;
    for check in &checks {
        match &check.outcome {
            Ok(detail) => println!(
                "[{:>2}] {:<28} PASS  {:>6} ms  {detail}",
                check.id, check.name, check.millis
            ),
            Err(reason) => {
                failed += 1;
                println!(
                    "[{:>2}] {:<28} FAIL  {:>6} ms  {reason}",
                    check.id, check.name, check.millis
                );
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} checks failed", checks.len());
        Ok(ExitCode::from(1))
    } else {
        println!("all {} checks passed", checks.len());
        Ok(ExitCode::SUCCESS)
    }
}

//! `matchratio`: exact maximal-matching statistics from the command line.
//!
//! Exit codes: 0 success, 1 verification found mismatches, 2 input error,
//! 3 asymptotic-hypothesis failure, 4 enumeration cap exceeded.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use matchratio::error::{AnalysisError, CatalogError, EngineError};
use matchratio::exact::{invariant_report_with_cap, DEFAULT_VERTEX_CAP, MASK_LIMIT};
use matchratio::families::FAMILY_IDS;
use matchratio::graph::parse_edge_list;
use matchratio::recurrence::{
    convergence, family_asymptote, family_profiles, standard_catalog, verify_member, VerifyReport,
};
use matchratio::sweep::{all_graphs, compare_invariants, comparison_row, ComparisonRow};
use matchratio::{from_graph6, Family, Graph};
use rayon::prelude::*;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "matchratio",
    version,
    about = "Exact maximal-matching statistics, invariant ratios, and asymptotic limits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumeration cap in vertices (overrides MATCHRATIO_CAP; default 26, max 64).
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariant report for one graph.
    Invariants {
        /// Edge-list file: first line the order, then one `u v` pair per line.
        #[arg(long, value_name = "FILE")]
        edge_list: Option<PathBuf>,
        /// graph6 code of the graph.
        #[arg(long, value_name = "CODE")]
        graph6: Option<String>,
        /// Family id (with --n, and --s/--c when the family takes them).
        #[arg(long, value_name = "ID")]
        family: Option<String>,
        /// Family parameter s.
        #[arg(long)]
        s: Option<u64>,
        /// Family parameter c.
        #[arg(long)]
        c: Option<u64>,
        /// Family member index.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Certified limit of the average ratio along a family.
    Asymptote {
        #[arg(long, value_name = "ID")]
        family: String,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
    },
    /// Exact finite ratios I(G_n) against the limit, for n up to --n-max.
    Converge {
        #[arg(long, value_name = "ID")]
        family: String,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        n_max: u64,
    },
    /// Cross-validate recurrence profiles against brute-force enumeration.
    Verify {
        #[arg(long, value_name = "ID")]
        family: String,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        /// First index to check (default: the family's first real member).
        #[arg(long)]
        from: Option<u64>,
        /// Last index to check.
        #[arg(long)]
        to: u64,
        /// Worker threads; output is identical for any value.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Compare all four ratios over every graph of one order (or a stream).
    Sweep {
        /// Built-in exhaustive generation at this order (0..=6).
        #[arg(long)]
        n: Option<usize>,
        /// Read newline-delimited graph6 codes from standard input instead.
        #[arg(long)]
        stdin: bool,
        /// Worker threads; output is identical for any value.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// The full catalog: every family with a certified limit.
    Report,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Failure {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

fn engine_failure(e: &EngineError) -> Failure {
    Failure {
        code: 4,
        message: e.to_string(),
    }
}

fn analysis_failure(e: AnalysisError) -> Failure {
    let code = match &e {
        AnalysisError::Family(_) => 2,
        AnalysisError::Catalog(CatalogError::BaseEnumeration { .. }) => 4,
        AnalysisError::Catalog(_) => 2,
        AnalysisError::Hypothesis(_) | AnalysisError::Extend(_) => 3,
        AnalysisError::Engine(_) => 4,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn parse_family(name: &str, s: Option<u64>, c: Option<u64>) -> Result<Family, Failure> {
    Family::parse(name, s, c).map_err(|e| match e {
        matchratio::FamilyError::UnknownFamily(id) => Failure::input(format!(
            "unknown family {id:?}; valid ids: {}",
            FAMILY_IDS.join(", ")
        )),
        other => Failure::input(other),
    })
}

fn effective_cap(flag: Option<usize>) -> Result<usize, Failure> {
    let cap = match flag {
        Some(c) => c,
        None => match std::env::var("MATCHRATIO_CAP") {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .map_err(|_| Failure::input(format!("MATCHRATIO_CAP={v:?} is not a vertex count")))?,
            Err(_) => DEFAULT_VERTEX_CAP,
        },
    };
    if cap > MASK_LIMIT {
        return Err(Failure::input(format!(
            "cap {cap} exceeds the representation limit {MASK_LIMIT}"
        )));
    }
    Ok(cap)
}

fn thread_pool(workers: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Failure::input(format!("cannot build worker pool: {e}")))
}

fn load_graph(
    edge_list: Option<PathBuf>,
    graph6: Option<String>,
    family: Option<String>,
    s: Option<u64>,
    c: Option<u64>,
    n: Option<u64>,
) -> Result<Graph, Failure> {
    match (edge_list, graph6, family) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            parse_edge_list(&text).map_err(Failure::input)
        }
        (None, Some(code), None) => from_graph6(&code).map_err(Failure::input),
        (None, None, Some(name)) => {
            let fam = parse_family(&name, s, c)?;
            let n = n.ok_or_else(|| Failure::input("--family requires --n <index>"))?;
            fam.generate(n).map_err(Failure::input)
        }
        _ => Err(Failure::input(
            "provide exactly one graph source: --edge-list FILE, --graph6 CODE, or --family ID --n N",
        )),
    }
}

fn cmd_invariants(g: &Graph, cap: usize, format: Format) -> Result<(), Failure> {
    let report = invariant_report_with_cap(g, cap).map_err(|e| engine_failure(&e))?;
    match format {
        Format::Text => print!("{}", output::invariants_text(g, &report)),
        Format::Json => println!("{}", output::invariants_json(g, &report)),
        Format::Csv => {
            let row = ComparisonRow {
                graph6: matchratio::to_graph6(g).map_err(Failure::input)?,
                order: report.order,
                size: g.size(),
                nu: report.nu,
                i_avg: report.i_avg,
                i_ord: report.i_ord,
                i_df: report.i_df,
                i_arw: report.i_arw,
            };
            print!("{}", matchratio::sweep::rows_to_csv(&[row]));
        }
    }
    Ok(())
}

fn cmd_asymptote(family: &Family, format: Format) -> Result<(), Failure> {
    let result = family_asymptote(family).map_err(analysis_failure)?;
    match format {
        Format::Text => print!("{}", output::asymptote_text(&result)),
        Format::Json => println!("{}", output::asymptote_json(&result)),
        Format::Csv => print!("{}", output::asymptote_csv(&[result])),
    }
    Ok(())
}

fn cmd_converge(family: &Family, n_max: u64, format: Format) -> Result<(), Failure> {
    let report = convergence(family, n_max).map_err(analysis_failure)?;
    match format {
        Format::Text => print!("{}", output::converge_text(&report)),
        Format::Json => println!("{}", output::converge_json(&report)),
        Format::Csv => print!("{}", output::converge_csv(&report)),
    }
    Ok(())
}

fn cmd_verify(
    family: &Family,
    from: Option<u64>,
    to: u64,
    workers: usize,
    cap: usize,
    format: Format,
) -> Result<(), Failure> {
    let (start, profs) = family_profiles(family, to).map_err(analysis_failure)?;
    let begin = start.max(from.unwrap_or(0));
    if to < begin {
        return Err(Failure::input(format!(
            "--to {to} is below the first checkable index {begin} of {family}"
        )));
    }
    let pool = thread_pool(workers)?;
    let rows = pool.install(|| {
        (begin..=to)
            .into_par_iter()
            .map(|n| verify_member(family, n, &profs[(n - start) as usize], cap))
            .collect::<Result<Vec<_>, AnalysisError>>()
    });
    let rows = rows.map_err(analysis_failure)?;
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    let report = VerifyReport {
        family: family.clone(),
        rows,
        mismatches,
    };
    match format {
        Format::Text => print!("{}", output::verify_text(&report)),
        Format::Json => println!("{}", output::verify_json(&report)),
        Format::Csv => print!("{}", output::verify_csv(&report)),
    }
    if report.mismatches > 0 {
        return Err(Failure {
            code: 1,
            message: format!(
                "{}: {} of {} members disagree with enumeration",
                family,
                report.mismatches,
                report.rows.len()
            ),
        });
    }
    Ok(())
}

fn cmd_sweep(
    n: Option<usize>,
    stdin: bool,
    workers: usize,
    cap: usize,
    format: Format,
) -> Result<(), Failure> {
    let graphs: Vec<Graph> = match (n, stdin) {
        (Some(order), false) => all_graphs(order).map_err(Failure::input)?,
        (None, true) => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| from_graph6(l).map_err(|e| Failure::input(format!("{l:?}: {e}"))))
                .collect::<Result<Vec<_>, Failure>>()?
        }
        _ => {
            return Err(Failure::input(
                "provide exactly one graph source: --n ORDER or --stdin",
            ))
        }
    };
    let pool = thread_pool(workers)?;
    let rows = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| comparison_row(g, cap))
            .collect::<Result<Vec<ComparisonRow>, _>>()
    });
    let rows = rows.map_err(|e| match e {
        matchratio::SweepError::Engine(engine) => engine_failure(&engine),
        other => Failure::input(other),
    })?;
    let (rows, summary) = compare_invariants(rows);
    match format {
        Format::Text | Format::Csv => {
            print!("{}", matchratio::sweep::rows_to_csv(&rows));
            eprint!("{}", output::sweep_summary_text(&summary));
        }
        Format::Json => println!("{}", output::sweep_json(&rows, &summary)),
    }
    Ok(())
}

fn cmd_report(format: Format) -> Result<(), Failure> {
    let mut results = Vec::new();
    for family in standard_catalog() {
        results.push(family_asymptote(&family).map_err(analysis_failure)?);
    }
    match format {
        Format::Text => print!("{}", output::report_text(&results)),
        Format::Json => println!("{}", output::report_json(&results)),
        Format::Csv => print!("{}", output::asymptote_csv(&results)),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cap = effective_cap(cli.cap)?;
    match cli.command {
        Command::Invariants {
            edge_list,
            graph6,
            family,
            s,
            c,
            n,
        } => {
            let g = load_graph(edge_list, graph6, family, s, c, n)?;
            cmd_invariants(&g, cap, cli.format)
        }
        Command::Asymptote { family, s, c } => {
            cmd_asymptote(&parse_family(&family, s, c)?, cli.format)
        }
        Command::Converge { family, s, c, n_max } => {
            cmd_converge(&parse_family(&family, s, c)?, n_max, cli.format)
        }
        Command::Verify {
            family,
            s,
            c,
            from,
            to,
            workers,
        } => cmd_verify(&parse_family(&family, s, c)?, from, to, workers, cap, cli.format),
        Command::Sweep { n, stdin, workers } => cmd_sweep(n, stdin, workers, cap, cli.format),
        Command::Report => cmd_report(cli.format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

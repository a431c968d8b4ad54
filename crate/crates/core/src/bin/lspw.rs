//! Batch driver. Exit codes: 0 = ran, 1 = config/usage error,
//! 2 = verify-conjecture found an inconsistency.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lsplus_workbench::{inequalities, lsplus, pipeline, polytope, Graph};

#[derive(Parser)]
#[command(
    name = "lspw",
    about = "Workbench for deciding LS+-perfectness of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph from a generator expression and print its edge list
    Generate {
        /// e.g. web(10,2), odd_antihole(3), g_lt, random_claw_free(9,3)
        spec: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the canonical facets of the stable set polytope
    Facets {
        /// Generator expression or path to an edge list file
        graph: String,
    },
    /// Decide LS+-perfectness with the per-facet evidence table
    CheckLsplus {
        graph: String,
        /// Duality gap target for each SDP solve
        #[arg(long, default_value_t = lsplus::GAP_TOL)]
        tol: f64,
        /// Decision threshold separating verdicts from the inconclusive band
        #[arg(long, default_value_t = lsplus::DECISION_THRESHOLD)]
        threshold: f64,
        /// Cap on barrier stages per solve
        #[arg(long, default_value_t = 64)]
        max_iter: usize,
    },
    /// Decide joined a-perfectness and list unrecognized facets
    CheckJoinedAperfect { graph: String },
    /// Run the batch pipeline from a config file and cross-check the
    /// LS+-perfect vs joined a-perfect biconditional
    VerifyConjecture {
        /// Key-value config: corpus entries, tolerances, output path
        config: PathBuf,
    },
    /// Rerun the themed experiments and report pass/fail per suite
    TheoremSuites,
}

fn load_graph(arg: &str) -> Result<Graph, String> {
    if arg.starts_with("file:") {
        return Ok(pipeline::graph_from_spec(arg).map_err(|e| e.to_string())?.1);
    }
    let path = Path::new(arg);
    if path.exists() {
        return pipeline::parse_graph_file(path).map_err(|e| e.to_string());
    }
    Ok(pipeline::graph_from_spec(arg).map_err(|e| e.to_string())?.1)
}

fn run(cmd: Cmd) -> Result<u8, String> {
    match cmd {
        Cmd::Generate { spec, output } => {
            let (_, g) = pipeline::graph_from_spec(&spec).map_err(|e| e.to_string())?;
            let text = g.to_edge_list();
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| e.to_string())?,
                None => print!("{}", text),
            }
            Ok(0)
        }
        Cmd::Facets { graph } => {
            let g = load_graph(&graph)?;
            let hull = polytope::facets(&polytope::stab_vertices(&g).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            for q in &hull.ineqs {
                println!("{}", q);
            }
            Ok(0)
        }
        Cmd::CheckLsplus { graph, tol, threshold, max_iter } => {
            let g = load_graph(&graph)?;
            let model = lsplus::build_model(&g, &vec![1.0; g.node_count()])
                .map_err(|e| e.to_string())?;
            let eta = lsplus::solve_with(&model, tol, max_iter);
            println!(
                "eta_plus = {:.6} (dual bound {:.6}, {})",
                eta.primal, eta.dual_bound, eta.status
            );
            let (status, checks) =
                lsplus::lsplus_sweep_with(&g, threshold, tol).map_err(|e| e.to_string())?;
            println!("status: {}", status.label());
            if let lsplus::LsStatus::Imperfect { ref witness, violation, .. } = status {
                println!("witness facet: {} (violation {:.6})", witness, violation);
            }
            println!("{:<40} {:>12} {:>12} verdict", "facet", "value", "bound");
            for c in &checks {
                let verdict = if c.value >= c.rhs + threshold {
                    "violated"
                } else if c.dual_bound <= c.rhs + threshold {
                    "valid"
                } else {
                    "inconclusive"
                };
                println!(
                    "{:<40} {:>12.6} {:>12.6} {}",
                    c.facet.to_string(),
                    c.value,
                    c.dual_bound,
                    verdict
                );
            }
            Ok(0)
        }
        Cmd::CheckJoinedAperfect { graph } => {
            let g = load_graph(&graph)?;
            let report = inequalities::is_joined_a_perfect(&g).map_err(|e| e.to_string())?;
            println!(
                "joined a-perfect: {}",
                if report.joined_a_perfect { "yes" } else { "no" }
            );
            println!(
                "recognized facets: {}, unrecognized: {}",
                report.recognized.len(),
                report.unrecognized.len()
            );
            for q in &report.unrecognized {
                println!("unrecognized: {}", q);
            }
            Ok(0)
        }
        Cmd::VerifyConjecture { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| format!("cannot read {}: {}", config.display(), e))?;
            let cfg = pipeline::RunConfig::parse(&text).map_err(|e| e.to_string())?;
            let verdicts = pipeline::run_verification(&cfg).map_err(|e| e.to_string())?;
            let report = pipeline::emit_report(&verdicts, cfg.format);
            match &cfg.output {
                Some(path) => {
                    std::fs::write(path, &report).map_err(|e| e.to_string())?;
                    println!("report written to {}", path.display());
                }
                None => println!("{}", report),
            }
            let inconsistent: Vec<&str> = verdicts
                .iter()
                .filter(|v| !v.consistent)
                .map(|v| v.graph_id.as_str())
                .collect();
            println!(
                "{} graphs checked, {} inconsistent",
                verdicts.len(),
                inconsistent.len()
            );
            for id in &inconsistent {
                println!("inconsistent: {}", id);
            }
            Ok(if inconsistent.is_empty() { 0 } else { 2 })
        }
        Cmd::TheoremSuites => {
            let suites = pipeline::theorem_suites();
            for suite in &suites {
                println!(
                    "{}: {}",
                    suite.name,
                    if suite.passed { "pass" } else { "FAIL" }
                );
                for line in &suite.details {
                    println!("  {}", line);
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

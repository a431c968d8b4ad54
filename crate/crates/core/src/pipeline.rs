//! Batch verification: build corpora from generator expressions and edge
//! list files, run the full per-graph check (exact facets, LS+ sweep,
//! joined a-perfectness), cross-check the two sides of the conjecture, and
//! emit JSON or CSV reports. Also hosts the themed experiment suites.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::GraphError;
use crate::{generators, inequalities, lsplus, polytope, Graph};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, PipelineError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = PipelineError;
    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(PipelineError::Config(format!("unknown format: {}", other))),
        }
    }
}

/// One verification run: a corpus of named graphs plus tolerances and
/// output settings. Corpora built from the same config (same seeds) are
/// identical.
#[derive(Clone)]
pub struct RunConfig {
    pub corpus: Vec<(String, Graph)>,
    pub tol: f64,
    pub threshold: f64,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
    pub format: ReportFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus: Vec::new(),
            tol: lsplus::GAP_TOL,
            threshold: lsplus::DECISION_THRESHOLD,
            jobs: None,
            output: None,
            format: ReportFormat::Json,
        }
    }
}

impl RunConfig {
    /// Key-value config text: one `key = value` per line, `#` comments.
    /// Keys: tol, threshold, jobs, output, format, corpus (repeatable;
    /// value is a generator expression or `file:PATH`).
    pub fn parse(text: &str) -> Result<RunConfig> {
        let mut config = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                PipelineError::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| {
                PipelineError::Config(format!("line {}: {}", lineno + 1, what))
            };
            match key {
                "tol" => {
                    config.tol =
                        value.parse().map_err(|_| bad("invalid tol"))?;
                }
                "threshold" => {
                    config.threshold =
                        value.parse().map_err(|_| bad("invalid threshold"))?;
                }
                "jobs" => {
                    config.jobs =
                        Some(value.parse().map_err(|_| bad("invalid jobs"))?);
                }
                "output" => config.output = Some(PathBuf::from(value)),
                "format" => config.format = value.parse()?,
                "corpus" => config.corpus.push(graph_from_spec(value)?),
                other => return Err(bad(&format!("unknown key: {}", other))),
            }
        }
        Ok(config)
    }
}

/// Resolve a corpus entry: `file:PATH` reads an edge list, anything else is
/// a generator expression like `web(10,2)` or `g_lt`. The entry string is
/// the graph id.
pub fn graph_from_spec(spec: &str) -> Result<(String, Graph)> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("file:") {
        return Ok((spec.to_string(), parse_graph_file(Path::new(path))?));
    }
    let (name, args) = match spec.find('(') {
        Some(i) => {
            let inner = spec[i..]
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| {
                    PipelineError::Config(format!("malformed expression: {}", spec))
                })?;
            let args: Vec<u64> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|a| {
                        a.trim().parse().map_err(|_| {
                            PipelineError::Config(format!(
                                "non-integer argument in: {}",
                                spec
                            ))
                        })
                    })
                    .collect::<Result<_>>()?
            };
            (&spec[..i], args)
        }
        None => (spec, Vec::new()),
    };
    let wrong_arity = || {
        PipelineError::Config(format!("wrong number of arguments: {}", spec))
    };
    let build = |r: crate::graph::Result<Graph>| {
        r.map_err(PipelineError::Graph)
    };
    let gbuild = |r: crate::graph::Result<Graph>| {
        r.map_err(|e| PipelineError::Config(format!("{}: {}", spec, e)))
    };
    let g = match name {
        "cycle" | "path" | "complete" | "empty" => {
            let &[n] = args.as_slice() else { return Err(wrong_arity()) };
            match name {
                "cycle" => build(Graph::cycle(n as usize))?,
                "path" => build(Graph::path(n as usize))?,
                "complete" => build(Graph::complete(n as usize))?,
                _ => build(Graph::empty(n as usize))?,
            }
        }
        "web" | "antiweb" => {
            let &[n, k] = args.as_slice() else { return Err(wrong_arity()) };
            if name == "web" {
                gbuild(generators::web(n as usize, k as usize))?
            } else {
                gbuild(generators::antiweb(n as usize, k as usize))?
            }
        }
        "odd_hole" | "odd_antihole" => {
            let &[k] = args.as_slice() else { return Err(wrong_arity()) };
            if name == "odd_hole" {
                gbuild(generators::odd_hole(k as usize))?
            } else {
                gbuild(generators::odd_antihole(k as usize))?
            }
        }
        "g_lt" => {
            if !args.is_empty() {
                return Err(wrong_arity());
            }
            generators::g_lt()
        }
        "g_emn" => {
            if !args.is_empty() {
                return Err(wrong_arity());
            }
            generators::g_emn()
        }
        "random_claw_free" => {
            let &[n, seed] = args.as_slice() else { return Err(wrong_arity()) };
            gbuild(generators::random_claw_free(n as usize, seed))?
        }
        other => {
            return Err(PipelineError::Config(format!(
                "unknown generator: {}",
                other
            )))
        }
    };
    Ok((spec.to_string(), g))
}

pub fn parse_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        PipelineError::Config(format!("cannot read {}: {}", path.display(), e))
    })?;
    Ok(Graph::parse_edge_list(&text)?)
}

/// Per-graph verification result. `consistent` is the biconditional
/// "LS+-perfect iff joined a-perfect" (vacuously true for inconclusive or
/// errored rows).
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub claw_free: bool,
    pub quasi_line: bool,
    pub alpha: usize,
    pub eta_plus: f64,
    pub eta_bound: f64,
    pub ls_status: String,
    pub joined_a_perfect: bool,
    pub unrecognized_facets: usize,
    pub consistent: bool,
    pub runtime_ms: u128,
    pub error: Option<String>,
}

/// Run every check on one graph; stage failures are recorded in the row
/// instead of propagating.
pub fn verify_graph(id: &str, g: &Graph, threshold: f64, tol: f64) -> Verdict {
    let start = Instant::now();
    let mut v = Verdict {
        graph_id: id.to_string(),
        n: g.node_count(),
        m: g.edge_count(),
        claw_free: g.is_claw_free(),
        quasi_line: g.is_quasi_line(),
        alpha: 0,
        eta_plus: f64::NAN,
        eta_bound: f64::NAN,
        ls_status: "error".to_string(),
        joined_a_perfect: false,
        unrecognized_facets: 0,
        consistent: true,
        runtime_ms: 0,
        error: None,
    };
    let result = (|| -> std::result::Result<(), String> {
        v.alpha = g.stability_number().map_err(|e| e.to_string())?;
        let eta = lsplus::eta_plus_with(g, tol).map_err(|e| e.to_string())?;
        v.eta_plus = eta.primal;
        v.eta_bound = eta.dual_bound;
        let (status, _) =
            lsplus::lsplus_sweep_with(g, threshold, tol).map_err(|e| e.to_string())?;
        v.ls_status = status.label().to_string();
        let report = inequalities::is_joined_a_perfect(g).map_err(|e| e.to_string())?;
        v.joined_a_perfect = report.joined_a_perfect;
        v.unrecognized_facets = report.unrecognized.len();
        v.consistent = match status {
            lsplus::LsStatus::Inconclusive { .. } => true,
            _ => status.is_perfect() == report.joined_a_perfect,
        };
        Ok(())
    })();
    if let Err(e) = result {
        v.error = Some(e);
    }
    v.runtime_ms = start.elapsed().as_millis();
    v
}

/// One Verdict per corpus graph, sorted by graph id; per-graph failures are
/// isolated into their rows.
pub fn run_verification(config: &RunConfig) -> Result<Vec<Verdict>> {
    let run = || -> Vec<Verdict> {
        let mut verdicts: Vec<Verdict> = config
            .corpus
            .par_iter()
            .map(|(id, g)| verify_graph(id, g, config.threshold, config.tol))
            .collect();
        verdicts.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
        verdicts
    };
    let verdicts = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| PipelineError::Config(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(verdicts)
}

pub const CSV_HEADER: &str = "graph_id,n,m,claw_free,quasi_line,alpha,eta_plus,eta_bound,ls_status,joined_a_perfect,consistent,runtime_ms";

pub fn emit_report(verdicts: &[Verdict], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(verdicts).expect("serializable")
        }
        ReportFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for v in verdicts {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{:.6},{:.6},{},{},{},{}",
                    v.graph_id,
                    v.n,
                    v.m,
                    v.claw_free,
                    v.quasi_line,
                    v.alpha,
                    v.eta_plus,
                    v.eta_bound,
                    v.ls_status,
                    v.joined_a_perfect,
                    v.consistent,
                    v.runtime_ms
                )
                .expect("write to string");
            }
            out
        }
    }
}

pub fn write_report(
    verdicts: &[Verdict],
    path: &Path,
    format: ReportFormat,
) -> Result<()> {
    std::fs::write(path, emit_report(verdicts, format))?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Curated corpus and experiment suites
// ---------------------------------------------------------------------------

/// All pairwise non-isomorphic extensions of the complement of C_7 by one
/// node keeping stability number 2: the new node's non-neighbors must form
/// a clique of the antihole (a stable set of C_7). Returned with the size
/// of the neighborhood.
pub fn antihole_extension_orbits() -> Vec<(usize, Graph)> {
    let base = generators::odd_antihole(3).expect("antihole");
    let c7 = Graph::cycle(7).expect("cycle");
    let mut reps: Vec<(usize, Graph)> = Vec::new();
    for s in c7.enumerate_stable_sets().expect("stable sets") {
        let mut edges = base.edges();
        for u in 0..7 {
            if !s.contains(u) {
                edges.push((u, 7));
            }
        }
        let g = Graph::from_edges(8, &edges).expect("extension");
        debug_assert_eq!(g.stability_number().unwrap(), 2);
        if !reps.iter().any(|(_, r)| r.is_isomorphic_to(&g).unwrap()) {
            reps.push((7 - s.len(), g));
        }
    }
    reps.sort_by_key(|&(deg, _)| std::cmp::Reverse(deg));
    reps
}

/// Whether g is an odd antihole, or a complete join of odd antihole(s) and
/// a (possibly empty) clique.
pub fn is_join_of_odd_antiholes_and_clique(g: &Graph) -> Result<bool> {
    let mut has_antihole = false;
    for comp in inequalities::co_components(g, g.nodes()) {
        if comp.len() == 1 {
            continue; // singleton co-components form the clique part
        }
        let induced = g.induced_subgraph(comp)?;
        let n = induced.node_count();
        if n < 5 || n % 2 == 0 {
            return Ok(false);
        }
        let antihole = generators::odd_antihole((n - 1) / 2)
            .map_err(|e| PipelineError::Config(e.to_string()))?;
        if !induced.is_isomorphic_to(&antihole)? {
            return Ok(false);
        }
        has_antihole = true;
    }
    Ok(has_antihole)
}

/// Curated claw-free corpus on at most 10 nodes: odd holes and antiholes,
/// webs, complete graphs and joins, the two minimal seeds with their
/// stretchings, the antihole extensions, line graphs, and seeded random
/// claw-free graphs. Pairwise non-isomorphic.
pub fn default_corpus() -> Vec<(String, Graph)> {
    let mut entries: Vec<(String, Graph)> = Vec::new();
    let push = |entries: &mut Vec<(String, Graph)>, id: String, g: Graph| {
        if g.node_count() <= 10
            && g.is_claw_free()
            && !entries.iter().any(|(_, r)| r.is_isomorphic_to(&g).unwrap())
        {
            entries.push((id, g));
        }
    };
    for spec in [
        "cycle(5)",
        "cycle(7)",
        "cycle(9)",
        "odd_antihole(3)",
        "odd_antihole(4)",
        "complete(1)",
        "complete(2)",
        "complete(3)",
        "complete(4)",
        "complete(5)",
        "complete(6)",
        "complete(7)",
        "path(3)",
        "path(4)",
        "path(5)",
        "cycle(4)",
        "cycle(6)",
        "cycle(8)",
        "web(7,2)",
        "web(8,2)",
        "web(9,2)",
        "web(10,2)",
        "web(9,3)",
        "web(10,3)",
        "web(10,4)",
        "g_lt",
        "g_emn",
    ] {
        let (id, g) = graph_from_spec(spec).expect("curated spec");
        push(&mut entries, id, g);
    }
    // joins with stability number 2 pieces stay claw-free
    let c5 = Graph::cycle(5).expect("cycle");
    let anti7 = generators::odd_antihole(3).expect("antihole");
    let anti9 = generators::odd_antihole(4).expect("antihole");
    for (id, g) in [
        ("join(complete(1),cycle(5))", Graph::complete(1).unwrap().complete_join(&c5)),
        ("join(complete(2),cycle(5))", Graph::complete(2).unwrap().complete_join(&c5)),
        ("join(complete(3),cycle(5))", Graph::complete(3).unwrap().complete_join(&c5)),
        ("join(complete(1),odd_antihole(3))", Graph::complete(1).unwrap().complete_join(&anti7)),
        ("join(complete(2),odd_antihole(3))", Graph::complete(2).unwrap().complete_join(&anti7)),
        ("join(complete(1),odd_antihole(4))", Graph::complete(1).unwrap().complete_join(&anti9)),
        ("join(cycle(5),cycle(5))", c5.complete_join(&c5)),
    ] {
        push(&mut entries, id.to_string(), g.expect("join"));
    }
    // stretchings of the minimal seeds
    for (i, g) in generators::all_stretchings(&generators::g_lt(), 0)
        .expect("stretchings")
        .into_iter()
        .enumerate()
    {
        push(&mut entries, format!("stretch(g_lt,0,{})", i), g);
    }
    // antihole extensions (theorem-2 sweep graphs)
    for (deg, g) in antihole_extension_orbits() {
        push(&mut entries, format!("antihole7_plus_node(deg={})", deg), g);
    }
    // line graphs
    let ear = generators::EarDecompositionSpec {
        initial_cycle: 5,
        ears: vec![generators::Ear { a: 0, b: 1, length: 3 }],
    };
    let h = generators::hypomatchable_from_ears(&ear).expect("ears");
    push(
        &mut entries,
        "line_graph(c5_plus_ear)".to_string(),
        generators::line_graph(&h).expect("line graph"),
    );
    push(
        &mut entries,
        "line_graph(complete(4))".to_string(),
        generators::line_graph(&Graph::complete(4).unwrap()).expect("line graph"),
    );
    push(
        &mut entries,
        "line_graph(complete_bipartite(3,3))".to_string(),
        generators::line_graph(
            &Graph::from_edges(
                6,
                &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
            )
            .unwrap(),
        )
        .expect("line graph"),
    );
    // seeded random claw-free graphs
    for n in [7usize, 8, 9, 10] {
        for seed in 0u64..8 {
            if let Ok(g) = generators::random_claw_free(n, seed) {
                push(&mut entries, format!("random_claw_free({},{})", n, seed), g);
            }
        }
    }
    entries
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

fn run_suite(
    name: &str,
    body: impl Fn() -> std::result::Result<Vec<String>, String>,
) -> SuiteResult {
    match body() {
        Ok(details) => SuiteResult { name: name.to_string(), passed: true, details },
        Err(e) => SuiteResult {
            name: name.to_string(),
            passed: false,
            details: vec![e],
        },
    }
}

fn perfectness(g: &Graph) -> std::result::Result<lsplus::LsStatus, String> {
    lsplus::is_lsplus_perfect(g, lsplus::DECISION_THRESHOLD).map_err(|e| e.to_string())
}

/// The themed experiments: each suite reruns one structural statement about
/// LS+-perfectness and reports pass/fail with evidence lines.
pub fn theorem_suites() -> Vec<SuiteResult> {
    let mut suites = Vec::new();

    suites.push(run_suite("join-with-antihole", || {
        // extensions of the complement of C_7 by one node keeping alpha = 2:
        // LS+-perfect exactly when the node is completely joined
        let mut details = Vec::new();
        for (deg, g) in antihole_extension_orbits() {
            let status = perfectness(&g)?;
            let expected = deg == 7;
            if status.is_perfect() != expected
                || matches!(status, lsplus::LsStatus::Inconclusive { .. })
            {
                return Err(format!(
                    "extension with degree {}: got {}, expected {}",
                    deg,
                    status.label(),
                    if expected { "perfect" } else { "imperfect" }
                ));
            }
            details.push(format!("degree {} -> {}", deg, status.label()));
        }
        Ok(details)
    }));

    suites.push(run_suite("stretching-preserves-imperfection", || {
        let stretchings = generators::all_stretchings(&generators::g_lt(), 0)
            .map_err(|e| e.to_string())?;
        let mut details = Vec::new();
        for (i, g) in stretchings.iter().take(3).enumerate() {
            let status = perfectness(g)?;
            if !status.is_imperfect() {
                return Err(format!(
                    "stretching {} of the 4-wheel seed: got {}",
                    i,
                    status.label()
                ));
            }
            details.push(format!("stretching {} -> imperfect", i));
        }
        Ok(details)
    }));

    suites.push(run_suite("webs", || {
        let mut details = Vec::new();
        for (spec, expect_perfect) in [
            ("web(5,2)", true),
            ("web(7,3)", true),
            ("web(9,4)", true),
            ("web(7,2)", true),
            ("web(9,2)", false),
            ("web(10,2)", false),
        ] {
            let (_, g) = graph_from_spec(spec).map_err(|e| e.to_string())?;
            let status = perfectness(&g)?;
            if status.is_perfect() != expect_perfect {
                return Err(format!("{}: got {}", spec, status.label()));
            }
            details.push(format!("{} -> {}", spec, status.label()));
        }
        let minimal = lsplus::is_minimally_lsplus_imperfect(
            &generators::web(10, 2).map_err(|e| e.to_string())?,
            lsplus::DECISION_THRESHOLD,
        )
        .map_err(|e| e.to_string())?;
        if !minimal {
            return Err("web(10,2) is not minimally imperfect".into());
        }
        details.push("web(10,2) minimally imperfect".into());
        Ok(details)
    }));

    suites.push(run_suite("line-graphs", || {
        let mut details = Vec::new();
        let ear = generators::EarDecompositionSpec {
            initial_cycle: 5,
            ears: vec![generators::Ear { a: 0, b: 1, length: 3 }],
        };
        let h = generators::hypomatchable_from_ears(&ear).map_err(|e| e.to_string())?;
        let lg = generators::line_graph(&h).map_err(|e| e.to_string())?;
        let status = perfectness(&lg)?;
        if !status.is_imperfect() {
            return Err(format!(
                "line graph of an odd-ear-extended C_5: got {}",
                status.label()
            ));
        }
        details.push("line_graph(c5 + odd ear) -> imperfect".into());
        for (name, g) in [
            (
                "line_graph(star(3)) = triangle",
                generators::line_graph(
                    &Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
                )
                .map_err(|e| e.to_string())?,
            ),
            (
                "line_graph(cycle(7)) = cycle(7)",
                generators::line_graph(&Graph::cycle(7).unwrap())
                    .map_err(|e| e.to_string())?,
            ),
        ] {
            let status = perfectness(&g)?;
            if !status.is_perfect() {
                return Err(format!("{}: got {}", name, status.label()));
            }
            details.push(format!("{} -> perfect", name));
        }
        Ok(details)
    }));

    suites.push(run_suite("alpha-two-classification", || {
        // every perfect, facet-defining alpha = 2 extension must be a join
        // of odd antiholes and a clique
        let mut details = Vec::new();
        for (deg, g) in antihole_extension_orbits() {
            let status = perfectness(&g)?;
            let facet_defining =
                polytope::is_facet_defining_graph(&g).map_err(|e| e.to_string())?;
            if status.is_perfect() && facet_defining {
                let is_join = is_join_of_odd_antiholes_and_clique(&g)
                    .map_err(|e| e.to_string())?;
                if !is_join {
                    return Err(format!(
                        "perfect facet-defining extension (degree {}) is not a \
                         join of odd antiholes and a clique",
                        deg
                    ));
                }
                details.push(format!(
                    "degree {} -> perfect, facet-defining, join shape confirmed",
                    deg
                ));
            } else {
                details.push(format!(
                    "degree {} -> {}{}",
                    deg,
                    status.label(),
                    if facet_defining { ", facet-defining" } else { "" }
                ));
            }
        }
        Ok(details)
    }));

    suites
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let cfg = RunConfig::parse(
            "# corpus\n\
             tol = 1e-7\n\
             threshold = 1e-5\n\
             jobs = 2\n\
             format = csv\n\
             corpus = cycle(5)\n\
             corpus = g_lt\n",
        )
        .unwrap();
        assert_eq!(cfg.corpus.len(), 2);
        assert_eq!(cfg.corpus[0].0, "cycle(5)");
        assert_eq!(cfg.format, ReportFormat::Csv);
        assert_eq!(cfg.jobs, Some(2));
        assert!(RunConfig::parse("corpus = frob(3)\n").is_err());
        assert!(RunConfig::parse("nonsense\n").is_err());
    }

    #[test]
    fn spec_expressions() {
        assert_eq!(graph_from_spec("web(10,2)").unwrap().1.node_count(), 10);
        assert_eq!(graph_from_spec("g_emn").unwrap().1.node_count(), 6);
        assert!(graph_from_spec("web(10)").is_err());
        assert!(graph_from_spec("file:/no/such/file").is_err());
        // determinism of seeded generation
        let a = graph_from_spec("random_claw_free(9,3)").unwrap().1;
        let b = graph_from_spec("random_claw_free(9,3)").unwrap().1;
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn verdicts_on_known_families() {
        let config = RunConfig {
            corpus: vec![
                graph_from_spec("cycle(5)").unwrap(),
                graph_from_spec("odd_antihole(3)").unwrap(),
                graph_from_spec("g_lt").unwrap(),
                graph_from_spec("g_emn").unwrap(),
            ],
            ..RunConfig::default()
        };
        let verdicts = run_verification(&config).unwrap();
        assert_eq!(verdicts.len(), 4);
        for v in &verdicts {
            assert!(v.error.is_none(), "{}: {:?}", v.graph_id, v.error);
            assert!(v.consistent, "{} inconsistent", v.graph_id);
            assert!(v.claw_free);
            let expected = matches!(v.graph_id.as_str(), "cycle(5)" | "odd_antihole(3)");
            assert_eq!(v.ls_status == "perfect", expected, "{}", v.graph_id);
            assert_eq!(v.joined_a_perfect, expected, "{}", v.graph_id);
        }
    }

    #[test]
    fn empty_corpus_empty_report() {
        let verdicts = run_verification(&RunConfig::default()).unwrap();
        assert!(verdicts.is_empty());
        assert_eq!(emit_report(&verdicts, ReportFormat::Json), "[]");
        assert_eq!(
            emit_report(&verdicts, ReportFormat::Csv),
            format!("{}\n", CSV_HEADER)
        );
    }

    #[test]
    fn report_round_trip_and_header() {
        let verdicts =
            vec![verify_graph("cycle(5)", &Graph::cycle(5).unwrap(), 1e-5, 1e-7)];
        let csv = emit_report(&verdicts, ReportFormat::Csv);
        assert!(csv.starts_with(CSV_HEADER));
        let json = emit_report(&verdicts, ReportFormat::Json);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed[0]["graph_id"], "cycle(5)");
        assert_eq!(parsed[0]["ls_status"], "perfect");
        assert_eq!(parsed[0]["consistent"], true);
    }

    #[test]
    fn graph_file_round_trip() {
        let g = Graph::path(3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p3.txt");
        std::fs::write(&path, g.to_edge_list()).unwrap();
        let back = parse_graph_file(&path).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn error_isolation() {
        // an oversized graph yields an errored row, not a failed run
        let big = Graph::empty(15).unwrap();
        let config = RunConfig {
            corpus: vec![
                ("big".to_string(), big),
                graph_from_spec("cycle(5)").unwrap(),
            ],
            ..RunConfig::default()
        };
        let verdicts = run_verification(&config).unwrap();
        assert_eq!(verdicts.len(), 2);
        let big_row = verdicts.iter().find(|v| v.graph_id == "big").unwrap();
        assert!(big_row.error.is_some());
        assert_eq!(big_row.ls_status, "error");
        let ok_row = verdicts.iter().find(|v| v.graph_id == "cycle(5)").unwrap();
        assert!(ok_row.error.is_none());
    }

    #[test]
    fn corpus_is_nonisomorphic_claw_free() {
        let corpus = default_corpus();
        assert!(corpus.len() >= 40, "corpus has only {} graphs", corpus.len());
        for (id, g) in &corpus {
            assert!(g.is_claw_free(), "{} is not claw-free", id);
            assert!(g.node_count() <= 10, "{} too large", id);
        }
        for (i, (ida, a)) in corpus.iter().enumerate() {
            for (idb, b) in corpus.iter().skip(i + 1) {
                assert!(
                    !a.is_isomorphic_to(b).unwrap(),
                    "{} and {} are isomorphic",
                    ida,
                    idb
                );
            }
        }
    }

    #[test]
    fn antihole_extension_orbit_count() {
        let orbits = antihole_extension_orbits();
        // non-neighbor sets are stable sets of C_7 up to symmetry:
        // empty, single node, two at distance 2, two at distance 3, triple
        assert_eq!(orbits.len(), 5);
        assert_eq!(orbits.iter().filter(|(d, _)| *d == 7).count(), 1);
    }

    #[test]
    fn join_shape_recognizer() {
        let anti7 = generators::odd_antihole(3).unwrap();
        let joined = Graph::complete(2).unwrap().complete_join(&anti7).unwrap();
        assert!(is_join_of_odd_antiholes_and_clique(&joined).unwrap());
        assert!(is_join_of_odd_antiholes_and_clique(&anti7).unwrap());
        assert!(!is_join_of_odd_antiholes_and_clique(&Graph::complete(4).unwrap()).unwrap());
        assert!(!is_join_of_odd_antiholes_and_clique(&Graph::cycle(7).unwrap()).unwrap());
    }
}

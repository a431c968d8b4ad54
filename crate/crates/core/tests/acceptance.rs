//! End-to-end acceptance gate: eleven criteria, one pass/fail line each.
//! Every criterion runs even if an earlier one fails; the test fails when
//! any criterion does.

use rayon::prelude::*;

use lsplus_workbench::polytope::{self, LinearInequality};
use lsplus_workbench::{generators, inequalities, lsplus, pipeline, Graph};

type CriterionResult = Result<String, String>;

const THRESHOLD: f64 = 1e-5;

fn hull_of(g: &Graph) -> polytope::HPolytope {
    polytope::facets(&polytope::stab_vertices(g).unwrap()).unwrap()
}

fn criterion_1_hull_oracle() -> CriterionResult {
    let start = std::time::Instant::now();
    let c5 = Graph::cycle(5).unwrap();
    let mut expected: Vec<LinearInequality> = Vec::new();
    for i in 0..5 {
        let mut c = [0i64; 5];
        c[i] = -1;
        expected.push(LinearInequality::from_integers(&c, 0));
    }
    for (u, v) in c5.edges() {
        let mut c = [0i64; 5];
        c[u] = 1;
        c[v] = 1;
        expected.push(LinearInequality::from_integers(&c, 1));
    }
    expected.push(LinearInequality::from_integers(&[1; 5], 2));
    expected.sort();
    let hull = hull_of(&c5);
    if hull.ineqs != expected {
        return Err(format!(
            "STAB(C_5) facets differ: got {} inequalities",
            hull.ineqs.len()
        ));
    }
    let anti7 = generators::odd_antihole(3).unwrap();
    let rank = LinearInequality::from_integers(&[1; 7], 2);
    if !hull_of(&anti7).ineqs.contains(&rank) {
        return Err("rank facet of the C_7 complement missing".into());
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 2 {
        return Err(format!("too slow: {:?}", elapsed));
    }
    Ok(format!("exact hulls match ({:?})", elapsed))
}

fn criterion_2_webs() -> CriterionResult {
    for (n, k, expect_perfect) in [
        (5usize, 2usize, true),
        (7, 3, true),
        (9, 4, true),
        (7, 2, true),
        (9, 2, false),
        (10, 2, false),
    ] {
        let g = generators::web(n, k).map_err(|e| e.to_string())?;
        let status =
            lsplus::is_lsplus_perfect(&g, THRESHOLD).map_err(|e| e.to_string())?;
        if status.is_perfect() != expect_perfect {
            return Err(format!("web({},{}): got {}", n, k, status.label()));
        }
    }
    // the odd holes themselves, for good measure
    for k in [2usize, 3, 4] {
        let status = lsplus::is_lsplus_perfect(&Graph::cycle(2 * k + 1).unwrap(), THRESHOLD)
            .map_err(|e| e.to_string())?;
        if !status.is_perfect() {
            return Err(format!("C_{}: got {}", 2 * k + 1, status.label()));
        }
    }
    let minimal = lsplus::is_minimally_lsplus_imperfect(
        &generators::web(10, 2).unwrap(),
        THRESHOLD,
    )
    .map_err(|e| e.to_string())?;
    if !minimal {
        return Err("web(10,2) not minimally imperfect".into());
    }
    Ok("web verdicts and web(10,2) minimality confirmed".into())
}

fn criterion_3_antihole_extensions() -> CriterionResult {
    let orbits = pipeline::antihole_extension_orbits();
    let mut perfect_count = 0;
    for (deg, g) in &orbits {
        let status =
            lsplus::is_lsplus_perfect(g, THRESHOLD).map_err(|e| e.to_string())?;
        if matches!(status, lsplus::LsStatus::Inconclusive { .. }) {
            return Err(format!("degree {}: inconclusive", deg));
        }
        if status.is_perfect() != (*deg == 7) {
            return Err(format!("degree {}: got {}", deg, status.label()));
        }
        if status.is_perfect() {
            perfect_count += 1;
        }
    }
    Ok(format!(
        "{} orbit representatives, exactly {} perfect (the completely joined one)",
        orbits.len(),
        perfect_count
    ))
}

fn criterion_4_minimal_seeds() -> CriterionResult {
    for (name, g) in [("g_lt", generators::g_lt()), ("g_emn", generators::g_emn())] {
        match lsplus::is_lsplus_perfect(&g, THRESHOLD).map_err(|e| e.to_string())? {
            lsplus::LsStatus::Imperfect { witness, .. } => {
                if !witness.is_full_support() {
                    return Err(format!("{}: witness facet {} not full-support", name, witness));
                }
            }
            other => return Err(format!("{}: got {}", name, other.label())),
        }
        for v in 0..g.node_count() {
            let sub = g.delete_node(v).unwrap();
            let status =
                lsplus::is_lsplus_perfect(&sub, THRESHOLD).map_err(|e| e.to_string())?;
            if !status.is_perfect() {
                return Err(format!("{} minus node {}: got {}", name, v, status.label()));
            }
        }
    }
    Ok("both seeds imperfect with full-support witnesses, all deletions perfect".into())
}

fn criterion_5_stretchings() -> CriterionResult {
    let stretchings =
        generators::all_stretchings(&generators::g_lt(), 0).map_err(|e| e.to_string())?;
    if stretchings.len() < 3 {
        return Err(format!("only {} stretchings", stretchings.len()));
    }
    let mut checked = 0;
    for g in stretchings.iter().take(3) {
        let status =
            lsplus::is_lsplus_perfect(g, THRESHOLD).map_err(|e| e.to_string())?;
        if !status.is_imperfect() {
            return Err(format!("stretching {}: got {}", checked, status.label()));
        }
        checked += 1;
    }
    Ok(format!("{} distinct stretchings of g_lt all imperfect", checked))
}

fn criterion_6_line_graphs() -> CriterionResult {
    let spec = generators::EarDecompositionSpec {
        initial_cycle: 5,
        ears: vec![generators::Ear { a: 0, b: 1, length: 3 }],
    };
    let h = generators::hypomatchable_from_ears(&spec).map_err(|e| e.to_string())?;
    let lg = generators::line_graph(&h).map_err(|e| e.to_string())?;
    let status = lsplus::is_lsplus_perfect(&lg, THRESHOLD).map_err(|e| e.to_string())?;
    if !status.is_imperfect() {
        return Err(format!("line graph of C_5 + odd ear: got {}", status.label()));
    }
    // line graphs that are cliques or odd holes
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    for (name, g) in [
        ("L(star) = K_3", generators::line_graph(&star).unwrap()),
        ("L(C_7) = C_7", generators::line_graph(&Graph::cycle(7).unwrap()).unwrap()),
    ] {
        let status =
            lsplus::is_lsplus_perfect(&g, THRESHOLD).map_err(|e| e.to_string())?;
        if !status.is_perfect() {
            return Err(format!("{}: got {}", name, status.label()));
        }
    }
    Ok("odd-ear line graph imperfect; clique and odd hole line graphs perfect".into())
}

fn criterion_7_conjecture(verdicts: &[pipeline::Verdict]) -> CriterionResult {
    if verdicts.len() < 40 {
        return Err(format!("corpus has only {} graphs", verdicts.len()));
    }
    for v in verdicts {
        if let Some(e) = &v.error {
            return Err(format!("{}: {}", v.graph_id, e));
        }
        if v.ls_status == "inconclusive" {
            return Err(format!("{}: inconclusive", v.graph_id));
        }
        if !v.consistent {
            return Err(format!(
                "{}: ls_status = {} but joined_a_perfect = {}",
                v.graph_id, v.ls_status, v.joined_a_perfect
            ));
        }
    }
    Ok(format!(
        "biconditional holds on all {} corpus graphs, zero inconclusive",
        verdicts.len()
    ))
}

fn criterion_8_containment(corpus: &[(String, Graph)]) -> CriterionResult {
    let mut recognized_total = 0usize;
    for (id, g) in corpus {
        let report = inequalities::is_joined_a_perfect(g).map_err(|e| e.to_string())?;
        for (facet, _) in &report.recognized {
            let outcome =
                lsplus::max_facet_over_lsplus(g, facet).map_err(|e| e.to_string())?;
            let (_, rhs) = facet.as_f64();
            if outcome.dual_bound > rhs + 1e-5 {
                return Err(format!(
                    "{}: recognized facet {} has bound {:.8} > rhs {}",
                    id, facet, outcome.dual_bound, rhs
                ));
            }
            recognized_total += 1;
        }
    }
    Ok(format!(
        "all {} recognized joined antiweb facets valid over the lift",
        recognized_total
    ))
}

fn criterion_9_rank_one_membership(corpus: &[(String, Graph)]) -> CriterionResult {
    let failures: Vec<String> = corpus
        .par_iter()
        .flat_map(|(id, g)| {
            let stable = g.enumerate_stable_sets().unwrap();
            stable
                .into_par_iter()
                .filter_map(|s| {
                    let x: Vec<f64> = (0..g.node_count())
                        .map(|i| if s.contains(i) { 1.0 } else { 0.0 })
                        .collect();
                    match lsplus::membership(g, &x) {
                        Ok(true) => None,
                        Ok(false) => Some(format!("{}: {:?} rejected", id, s)),
                        Err(e) => Some(format!("{}: {}", id, e)),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    if let Some(f) = failures.first() {
        return Err(format!("{} failures, first: {}", failures.len(), f));
    }
    let total: usize = corpus
        .iter()
        .map(|(_, g)| g.enumerate_stable_sets().unwrap().len())
        .sum();
    Ok(format!("all {} incidence vectors accepted", total))
}

fn criterion_10_eta_sanity(
    corpus: &[(String, Graph)],
    verdicts: &[pipeline::Verdict],
) -> CriterionResult {
    for v in verdicts {
        let alpha = v.alpha as f64;
        if alpha > v.eta_plus + 1e-6 {
            return Err(format!(
                "{}: alpha {} > eta_plus {:.8}",
                v.graph_id, v.alpha, v.eta_plus
            ));
        }
        if v.ls_status == "perfect" && (v.eta_plus - alpha).abs() > 1e-5 {
            return Err(format!(
                "{}: perfect but eta_plus {:.8} != alpha {}",
                v.graph_id, v.eta_plus, v.alpha
            ));
        }
    }
    let mut bipartite = 0;
    for (id, g) in corpus {
        if g.is_bipartite() {
            let alpha = g.stability_number().unwrap() as f64;
            let eta = lsplus::eta_plus(g).map_err(|e| e.to_string())?;
            if (eta.primal - alpha).abs() > 1e-5 {
                return Err(format!(
                    "{} bipartite: eta_plus {:.8} != alpha {}",
                    id, eta.primal, alpha
                ));
            }
            bipartite += 1;
        }
    }
    Ok(format!(
        "alpha <= eta_plus corpus-wide, equality where perfect; {} bipartite graphs exact",
        bipartite
    ))
}

fn criterion_11_alpha_two_classification() -> CriterionResult {
    let mut confirmed = 0;
    for (deg, g) in pipeline::antihole_extension_orbits() {
        if g.stability_number().unwrap() != 2 {
            return Err(format!("degree {}: alpha != 2", deg));
        }
        let perfect = lsplus::is_lsplus_perfect(&g, THRESHOLD)
            .map_err(|e| e.to_string())?
            .is_perfect();
        let facet_defining =
            polytope::is_facet_defining_graph(&g).map_err(|e| e.to_string())?;
        if perfect && facet_defining {
            if !pipeline::is_join_of_odd_antiholes_and_clique(&g)
                .map_err(|e| e.to_string())?
            {
                return Err(format!(
                    "degree {}: perfect facet-defining but not a join of odd \
                     antiholes and a clique",
                    deg
                ));
            }
            confirmed += 1;
        }
    }
    Ok(format!(
        "{} perfect facet-defining extension(s) have the join shape",
        confirmed
    ))
}

#[test]
fn acceptance() {
    let corpus = pipeline::default_corpus();
    let config = pipeline::RunConfig {
        corpus: corpus.clone(),
        ..pipeline::RunConfig::default()
    };
    let verdicts = pipeline::run_verification(&config).unwrap();

    let results: Vec<(&str, CriterionResult)> = vec![
        ("1 hull oracle", criterion_1_hull_oracle()),
        ("2 webs perfect-or-minimally-imperfect", criterion_2_webs()),
        ("3 antihole extension sweep", criterion_3_antihole_extensions()),
        ("4 minimal seeds", criterion_4_minimal_seeds()),
        ("5 stretchings stay imperfect", criterion_5_stretchings()),
        ("6 line graphs", criterion_6_line_graphs()),
        ("7 conjecture cross-check", criterion_7_conjecture(&verdicts)),
        ("8 containment in the constraint system", criterion_8_containment(&corpus)),
        ("9 rank-one membership", criterion_9_rank_one_membership(&corpus)),
        ("10 eta_plus sanity", criterion_10_eta_sanity(&corpus, &verdicts)),
        ("11 alpha=2 classification", criterion_11_alpha_two_classification()),
    ];

    let mut failed = 0;
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("criterion {}: pass — {}", name, detail),
            Err(msg) => {
                println!("criterion {}: FAIL — {}", name, msg);
                failed += 1;
            }
        }
    }
    assert_eq!(failed, 0, "{} acceptance criteria failed", failed);
}

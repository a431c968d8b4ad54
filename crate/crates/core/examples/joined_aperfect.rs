//! Recognize joined antiweb constraints among STAB facets and decide
//! joined a-perfectness: every nontrivial facet must scale to
//! sum_i (1/alpha(A_i)) x(A_i) + x(Q) <= 1 for completely joined antiwebs
//! A_i and a clique Q.

use lsplus_workbench::inequalities::{self, CliqueFamilySpec};
use lsplus_workbench::{generators, Graph, NodeSet};

fn report(name: &str, g: &Graph) {
    let r = inequalities::is_joined_a_perfect(g).unwrap();
    println!(
        "{}: joined a-perfect = {} ({} recognized, {} unrecognized)",
        name,
        r.joined_a_perfect,
        r.recognized.len(),
        r.unrecognized.len()
    );
    for (facet, d) in r.recognized.iter().take(3) {
        let parts: Vec<String> = d
            .parts
            .iter()
            .map(|p| format!("{:?} alpha={}", p.kind, p.alpha))
            .collect();
        println!("  {}  [{}]", facet, parts.join("; "));
    }
    for facet in &r.unrecognized {
        println!("  unrecognized: {}", facet);
    }
    println!();
}

fn main() {
    report("C_5", &Graph::cycle(5).unwrap());
    report("complement of C_7", &generators::odd_antihole(3).unwrap());
    let wheel = Graph::complete(1)
        .unwrap()
        .complete_join(&Graph::cycle(5).unwrap())
        .unwrap();
    report("5-wheel", &wheel);
    report("g_lt", &generators::g_lt());

    // building inequalities directly
    let c5 = Graph::cycle(5).unwrap();
    let rank = inequalities::rank_inequality(&c5, c5.nodes()).unwrap();
    println!("rank inequality of C_5: {}", rank);
    let cfi = inequalities::clique_family_inequality(
        &c5,
        &CliqueFamilySpec {
            cliques: c5
                .edges()
                .into_iter()
                .map(|(u, v)| NodeSet::from_iter([u, v]))
                .collect(),
            p: 2,
        },
    )
    .unwrap();
    println!("clique family inequality (edges of C_5, p=2): {}", cfi);
    println!(
        "antiweb recognition of C_7: {:?}",
        inequalities::recognize_antiweb(&Graph::cycle(7).unwrap()).unwrap()
    );
}

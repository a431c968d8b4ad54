//! Construct the graph families of the workbench and print their basic
//! invariants: webs and antiwebs, odd holes and antiholes, the two minimal
//! LS+-imperfect seeds, node stretchings, and line graphs of odd-ear built
//! hypomatchable graphs.

use lsplus_workbench::generators::{
    self, Ear, EarDecompositionSpec, StretchSpec,
};
use lsplus_workbench::{Graph, NodeSet};

fn describe(name: &str, g: &Graph) {
    println!(
        "{:<28} n={:<3} m={:<3} alpha={} claw-free={} quasi-line={}",
        name,
        g.node_count(),
        g.edge_count(),
        g.stability_number().unwrap(),
        g.is_claw_free(),
        g.is_quasi_line()
    );
}

fn main() {
    describe("web(10,2)", &generators::web(10, 2).unwrap());
    describe("web(9,2)", &generators::web(9, 2).unwrap());
    describe("antiweb(10,3)", &generators::antiweb(10, 3).unwrap());
    describe("odd_hole(3) = C_7", &generators::odd_hole(3).unwrap());
    describe("odd_antihole(3)", &generators::odd_antihole(3).unwrap());
    describe("g_lt", &generators::g_lt());
    describe("g_emn", &generators::g_emn());

    // web(7,2) is the complement of C_7
    let w72 = generators::web(7, 2).unwrap();
    assert!(w72
        .is_isomorphic_to(&generators::odd_antihole(3).unwrap())
        .unwrap());
    println!("web(7,2) is isomorphic to the complement of C_7");

    // stretch node 0 of g_lt: split its neighborhood in two and subdivide
    let stretched = generators::node_stretching(
        &generators::g_lt(),
        &StretchSpec {
            v: 0,
            a1: NodeSet::from_iter([1, 2]),
            a2: NodeSet::from_iter([3, 4]),
        },
    )
    .unwrap();
    describe("stretching of g_lt at 0", &stretched);

    // C_5 plus one odd ear, and its line graph
    let h = generators::hypomatchable_from_ears(&EarDecompositionSpec {
        initial_cycle: 5,
        ears: vec![Ear { a: 0, b: 1, length: 3 }],
    })
    .unwrap();
    let lg = generators::line_graph(&h).unwrap();
    describe("line_graph(C_5 + odd ear)", &lg);

    // deterministic random claw-free corpus members
    for seed in 0..3 {
        let g = generators::random_claw_free(9, seed).unwrap();
        describe(&format!("random_claw_free(9,{})", seed), &g);
    }

    println!("\nedge list of web(10,2):");
    print!("{}", generators::web(10, 2).unwrap().to_edge_list());
}

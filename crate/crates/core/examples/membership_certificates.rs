//! Membership in the LS+ relaxation: pin the border of the lifted matrix to
//! a point and minimize the slack that makes the lift feasible. Stable set
//! incidence vectors always pass (rank-one certificates); the fractional
//! center of an odd hole is cut off.

use lsplus_workbench::{generators, lsplus, Graph};

fn main() {
    let c5 = Graph::cycle(5).unwrap();
    for s in c5.enumerate_stable_sets().unwrap() {
        let x: Vec<f64> = (0..5).map(|i| if s.contains(i) { 1.0 } else { 0.0 }).collect();
        assert!(lsplus::membership(&c5, &x).unwrap());
    }
    println!("all {} stable set incidence vectors of C_5 are members", 11);

    println!(
        "(1/2,...,1/2) in LS+(C_5): {}",
        lsplus::membership(&c5, &[0.5; 5]).unwrap()
    );
    let third = 1.0 / 3.0;
    println!(
        "(1/3,1/3,1/3) in LS+(K_3): {}",
        lsplus::membership(&Graph::complete(3).unwrap(), &[third; 3]).unwrap()
    );

    // the violating point found for the full-support facet of g_lt is a
    // member of LS+ but violates a STAB facet
    let g = generators::g_lt();
    let (status, _) = lsplus::lsplus_sweep(&g, lsplus::DECISION_THRESHOLD).unwrap();
    if let lsplus::LsStatus::Imperfect { witness, point, violation } = status {
        println!(
            "g_lt: point {:?} violates {} by {:.6}",
            point, witness, violation
        );
        println!("membership of that point: {}", lsplus::membership(&g, &point).unwrap());
    }
}

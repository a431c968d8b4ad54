//! Decide LS+-perfectness: optimize every nontrivial STAB facet over the
//! PSD lift of the edge relaxation and compare certified bounds against the
//! facet right-hand sides.

use lsplus_workbench::{generators, lsplus, Graph};

fn check(name: &str, g: &Graph) {
    let eta = lsplus::eta_plus(g).unwrap();
    let (status, checks) = lsplus::lsplus_sweep(g, lsplus::DECISION_THRESHOLD).unwrap();
    println!(
        "{}: {} (eta+ = {:.6}, dual bound {:.6}, alpha = {})",
        name,
        status.label(),
        eta.primal,
        eta.dual_bound,
        g.stability_number().unwrap()
    );
    for c in &checks {
        println!(
            "  facet {}  value {:.6}  bound {:.6}",
            c.facet, c.value, c.dual_bound
        );
    }
    if let lsplus::LsStatus::Imperfect { witness, point, violation } = status {
        println!("  violated: {} by {:.6} at {:?}", witness, violation, point);
    }
    println!();
}

fn main() {
    check("C_5", &Graph::cycle(5).unwrap());
    check("g_lt", &generators::g_lt());
    check("g_emn", &generators::g_emn());
    check("web(10,2)", &generators::web(10, 2).unwrap());

    // minimality: all one-node deletions of web(10,2) are LS+-perfect
    let minimal = lsplus::is_minimally_lsplus_imperfect(
        &generators::web(10, 2).unwrap(),
        lsplus::DECISION_THRESHOLD,
    )
    .unwrap();
    println!("web(10,2) minimally LS+-imperfect: {}", minimal);
}

//! Exact facet enumeration of stable set polytopes over rational
//! arithmetic, and the containment chain STAB <= QSTAB <= ESTAB.

use lsplus_workbench::polytope::{self, Rational};
use lsplus_workbench::{generators, Graph};
use num_traits::One;

fn print_facets(name: &str, g: &Graph) {
    let hull = polytope::facets(&polytope::stab_vertices(g).unwrap()).unwrap();
    println!("facets of STAB({}):", name);
    for q in &hull.ineqs {
        println!("  {}", q);
    }
    println!();
}

fn main() {
    print_facets("C_5", &Graph::cycle(5).unwrap());
    print_facets("complement of C_7", &generators::odd_antihole(3).unwrap());
    print_facets("g_lt", &generators::g_lt());

    // exact optimization: the all-ones objective over the relaxations of C_5
    let c5 = Graph::cycle(5).unwrap();
    let ones: Vec<Rational> = (0..5).map(|_| Rational::one()).collect();
    let over_estab = polytope::max_over(&polytope::estab(&c5), &ones).unwrap();
    let over_qstab = polytope::max_over(&polytope::qstab(&c5).unwrap(), &ones).unwrap();
    let hull = polytope::facets(&polytope::stab_vertices(&c5).unwrap()).unwrap();
    let over_stab = polytope::max_over(&hull, &ones).unwrap();
    println!("max 1'x over ESTAB(C_5) = {}", over_estab);
    println!("max 1'x over QSTAB(C_5) = {}", over_qstab);
    println!("max 1'x over STAB(C_5)  = {}", over_stab);

    // full-support facets flag the facet-defining graphs
    for (name, g) in [
        ("C_5", Graph::cycle(5).unwrap()),
        ("P_3", Graph::path(3).unwrap()),
        ("g_emn", generators::g_emn()),
    ] {
        println!(
            "{} is facet-defining: {}",
            name,
            polytope::is_facet_defining_graph(&g).unwrap()
        );
    }
}

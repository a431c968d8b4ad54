//! Run the themed experiment suites: antihole extensions, stretching,
//! webs, line graphs, and the alpha = 2 classification.

use lsplus_workbench::pipeline;

fn main() {
    let mut all = true;
    for suite in pipeline::theorem_suites() {
        println!("{}: {}", suite.name, if suite.passed { "pass" } else { "FAIL" });
        for line in &suite.details {
            println!("  {}", line);
        }
        all &= suite.passed;
    }
    assert!(all, "a suite failed");
}

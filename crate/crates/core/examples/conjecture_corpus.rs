//! Cross-check "LS+-perfect iff joined a-perfect" over the curated corpus
//! of pairwise non-isomorphic claw-free graphs on at most 10 nodes, and
//! emit the CSV report.

use lsplus_workbench::pipeline::{self, ReportFormat, RunConfig};

fn main() {
    let config = RunConfig {
        corpus: pipeline::default_corpus(),
        ..RunConfig::default()
    };
    println!("corpus size: {}", config.corpus.len());
    let verdicts = pipeline::run_verification(&config).unwrap();
    print!("{}", pipeline::emit_report(&verdicts, ReportFormat::Csv));
    let inconsistent = verdicts.iter().filter(|v| !v.consistent).count();
    let inconclusive =
        verdicts.iter().filter(|v| v.ls_status == "inconclusive").count();
    let errors = verdicts.iter().filter(|v| v.error.is_some()).count();
    println!(
        "\ninconsistent: {}, inconclusive: {}, errors: {}",
        inconsistent, inconclusive, errors
    );
}

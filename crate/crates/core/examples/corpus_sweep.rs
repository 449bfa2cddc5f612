//! Sweep every planar Artinian ideal with generators in a small box.
//!
//! cargo run --release --example corpus_sweep -- 5

use std::time::Instant;

use monres::io::{run_corpus, threads_from_env, CorpusCheck};

fn main() -> monres::Result<()> {
    let bound = std::env::args().nth(1).and_then(|b| b.parse().ok()).unwrap_or(4);
    for check in [CorpusCheck::Equivalence, CorpusCheck::Duality, CorpusCheck::Bs] {
        let start = Instant::now();
        let report = run_corpus(bound, check, threads_from_env())?;
        println!(
            "{check:?}: {}/{} in {:.2?}",
            report.passed,
            report.total,
            start.elapsed()
        );
        for f in &report.failures {
            println!("  {}: {}", f.ideal, f.detail);
        }
    }
    Ok(())
}

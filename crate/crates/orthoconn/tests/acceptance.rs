//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! Exits nonzero when any criterion fails.

use std::time::Instant;

use orthoconn::suites::{acceptance, CRITERIA};

const SEED: u64 = 20_240_601;

fn main() {
    let mut matrices = Vec::new();
    let mut failed = 0;
    for k in 1..=CRITERIA.len() {
        let start = Instant::now();
        let outcome = acceptance(k, SEED, &mut matrices);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(rep) if rep.passed() => println!("PASS {} ({} checks, {secs:.1}s)", rep.name, rep.checked),
            Ok(rep) => {
                failed += 1;
                println!("FAIL {} ({} of {} checks failed, {secs:.1}s)", rep.name, rep.failures.len(), rep.checked);
                for f in rep.failures.iter().take(5) {
                    println!("    {f}");
                }
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {k}. {} (error: {e}, {secs:.1}s)", CRITERIA[k - 1]);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

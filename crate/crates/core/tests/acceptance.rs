//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use tropic_core::verify::{run, CRITERION_COUNT, DEFAULT_SEED};

fn main() -> ExitCode {
    let start = Instant::now();
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = (1..=CRITERION_COUNT)
            .map(|id| s.spawn(move || run(id, DEFAULT_SEED).expect("criterion ids are valid")))
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed, seed {DEFAULT_SEED}, {:.1}s",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

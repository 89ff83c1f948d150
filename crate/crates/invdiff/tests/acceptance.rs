//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! The enumeration demo is informational and never fails the run.

use invdiff::suites::{run, DEFAULT_SEED, SUITES};

fn main() {
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, name) in SUITES.iter().enumerate() {
        if !only.is_empty() && !only.iter().any(|o| name.contains(o.as_str())) {
            continue;
        }
        let r = match run(name, DEFAULT_SEED) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL {}. {name}: {e}", i + 1);
                failed += 1;
                continue;
            }
        };
        let tag = match (r.pass, r.informational) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "INFO",
            (false, true) => "INFO(out of band)",
        };
        println!("{tag} {}. {name} [{:.1}s]: {}", i + 1, r.seconds, r.detail);
        failed += usize::from(r.failed());
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
